// Command-line front end: construct, analyze, ring, convert, verify.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "sroabp/convert.hpp"
#include "sroabp/io.hpp"
#include "sroabp/waring.hpp"

using namespace sroabp;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_json_file(out, j);
  }
}

Poly<Rational> rational_expansion(const io::Object& obj) {
  return std::visit(
      [](const auto& o) -> Poly<Rational> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Poly<Rational>>) {
          return o;
        } else if constexpr (std::is_same_v<T, Poly<ComplexF>> || std::is_same_v<T, DiagRoabp<ComplexF>>) {
          throw DomainError("analyze needs rational input");
        } else {
          return expand(o);
        }
      },
      obj);
}

std::vector<std::size_t> given_order(const io::Object& obj, std::size_t n) {
  if (const auto* r = std::get_if<Roabp>(&obj)) return r->order;
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

CommRoabp as_comm(const io::Object& obj) {
  if (const auto* c = std::get_if<CommRoabp>(&obj)) return *c;
  if (const auto* r = std::get_if<Roabp>(&obj)) return to_comm(*r);
  if (const auto* d = std::get_if<DiagRoabp<Rational>>(&obj)) return to_comm(*d);
  throw DomainError("input is not a commutative ROABP");
}

struct Options {
  std::string family, variant, in, out, report, orders = "given";
  std::vector<std::string> files;
  std::size_t n = 0, trials = 100;
  unsigned d = 0;
  std::uint64_t seed = 42;
  double tol = kDefaultTol, numeric_tol = kDefaultTol;
  double node_radius = ConvertOptions{}.node_radius;
};

int cmd_construct(const Options& o) {
  Json j;
  std::size_t width = 0;
  if (o.family == "esym" && o.variant == "comm") {
    const auto r = construct_esym_comm(o.n, o.d);
    width = r.w();
    j = io::to_json(r);
  } else if (o.family == "esym") {
    const auto r = construct_esym_diag(o.n, o.d);
    width = r.w();
    j = io::to_json(r);
  } else if (o.variant == "comm") {
    const auto r = construct_power_comm(o.n, o.d);
    width = r.w();
    j = io::to_json(r);
  } else {
    const auto r = construct_power_diag(o.n, o.d);
    width = r.w();
    j = io::to_json(r);
  }
  emit(j, o.out);
  (o.out.empty() ? std::cerr : std::cout) << o.family << ' ' << o.variant << " n=" << o.n << " d=" << o.d
                                          << " width=" << width << '\n';
  return kExitOk;
}

int cmd_analyze(const Options& o) {
  const io::Object obj = io::parse_object(io::read_json_file(o.in));
  const Poly<Rational> f = rational_expansion(obj);
  const std::size_t n = f.nvars();
  Json profiles = Json::array();
  std::size_t min_width = SIZE_MAX, max_width = 0;
  auto record = [&](const std::vector<std::size_t>& order) {
    const NisanProfile p = nisan_profile(f, order);
    min_width = std::min(min_width, p.width);
    max_width = std::max(max_width, p.width);
    profiles.push_back(io::to_json(p));
  };
  if (o.orders == "all") {
    if (n > 8) throw GuardError("--orders all requires n <= 8");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do record(order);
    while (std::next_permutation(order.begin(), order.end()));
  } else {
    record(given_order(obj, n));
  }
  Json j = {{"vars", n},
            {"terms", f.size()},
            {"degree", f.degree()},
            {"individualDegrees", f.individual_degrees()},
            {"dpd", dpd(f)},
            {"catalecticantLowerBound", catalecticant_lower_bound(f)},
            {"minWidth", min_width},
            {"maxWidth", max_width},
            {"profiles", std::move(profiles)}};
  emit(j, o.out);
  return kExitOk;
}

int cmd_ring(const Options& o) {
  const CommRoabp cr = as_comm(io::parse_object(io::read_json_file(o.in)));
  const CurveResult curve = comm_to_curve(cr);
  const auto points = variety(curve.ring, o.numeric_tol, o.seed);
  const DualBasis db = build_dual_basis(curve.ring, points, o.numeric_tol);
  emit(io::ring_report(curve.ring, points, &db), o.out);
  return kExitOk;
}

int cmd_convert(const Options& o) {
  const CommRoabp cr = as_comm(io::parse_object(io::read_json_file(o.in)));
  ConvertOptions opts;
  opts.numeric_tol = o.numeric_tol;
  opts.verify_tol = o.tol;
  opts.node_radius = o.node_radius;
  opts.trials = o.trials;
  opts.seed = o.seed;
  const DiagResult res = convert(cr, opts);
  const Json report = io::to_json(res.report);
  if (o.out.empty()) {
    emit({{"diag", io::to_json(res.diag)}, {"report", report}}, "");
  } else {
    io::write_json_file(o.out, io::to_json(res.diag));
    emit(report, o.report);
  }
  return res.report.verified.value_or(false) ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Options& o) {
  const io::Object a = io::parse_object(io::read_json_file(o.files.at(0)));
  const io::Object b = io::parse_object(io::read_json_file(o.files.at(1)));
  if (io::object_nvars(a) != io::object_nvars(b)) throw DimensionError("inputs have different variable counts");
  const VerifyReport rep = verify_equal(io::object_evaluable(a), io::object_evaluable(b), o.trials, o.seed, o.tol);
  emit(io::to_json(rep), o.out);
  return rep.passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured ROABP toolkit"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("SROABP_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: SROABP_SEED is not an unsigned integer\n";
      return kExitInputError;
    }
  }

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default: stdout)");
    sub->add_option("--seed", o.seed, "RNG seed (default 42, or SROABP_SEED)");
    sub->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
  };

  auto* construct = app.add_subcommand("construct", "Build an explicit ROABP");
  construct->add_option("family", o.family, "esym | power")->required()->check(CLI::IsMember({"esym", "power"}));
  construct->add_option("n", o.n, "Variable count")->required();
  construct->add_option("d", o.d, "Degree")->required();
  construct->add_option("variant", o.variant, "comm | diag")->required()->check(CLI::IsMember({"comm", "diag"}));
  common(construct);

  auto* analyze = app.add_subcommand("analyze", "Nisan profiles and partial-derivative dimension");
  analyze->add_option("--in", o.in, "Polynomial or ROABP file")->required();
  analyze->add_option("--orders", o.orders, "given | all")->check(CLI::IsMember({"given", "all"}));
  common(analyze);

  auto* ring = app.add_subcommand("ring", "Normal set, border basis, variety and dual spaces");
  ring->add_option("--in", o.in, "Commutative ROABP file")->required();
  ring->add_option("--numeric-tol", o.numeric_tol, "Rank tolerance of the numeric layer")->check(CLI::PositiveNumber);
  common(ring);

  auto* conv = app.add_subcommand("convert", "Commutative to diagonal ROABP");
  conv->add_option("--in", o.in, "Commutative ROABP file")->required();
  conv->add_option("--report", o.report, "Report file when --out is given (default: stdout)");
  conv->add_option("--trials", o.trials, "Verification trials");
  conv->add_option("--numeric-tol", o.numeric_tol, "Rank tolerance of the numeric layer")->check(CLI::PositiveNumber);
  conv->add_option("--node-radius", o.node_radius, "Interpolation circle radius")->check(CLI::PositiveNumber);
  common(conv);

  auto* verify = app.add_subcommand("verify", "Randomized equality check of two objects");
  verify->add_option("files", o.files, "Two object files")->required()->expected(2);
  verify->add_option("--trials", o.trials, "Trials");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*analyze) return cmd_analyze(o);
    if (*ring) return cmd_ring(o);
    if (*conv) return cmd_convert(o);
    if (*verify) return cmd_verify(o);
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
