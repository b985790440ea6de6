#include "sroabp/io.hpp"

#include <fstream>
#include <sstream>

namespace sroabp::io {

namespace {

template <class S>
S scalar_from_json(const Json& j) {
  if constexpr (std::is_same_v<S, Rational>) {
    return rational_from_json(j);
  } else {
    return complex_from_json(j);
  }
}

template <class S>
Json univariate_to_json(const Univariate<S>& u) {
  Json arr = Json::array();
  for (const auto& c : u.coeffs()) arr.push_back(to_json(c));
  return arr;
}

template <class S>
Univariate<S> univariate_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("univariate polynomial must be an array of coefficients");
  std::vector<S> cs;
  for (const auto& c : j) cs.push_back(scalar_from_json<S>(c));
  return Univariate<S>(std::move(cs));
}

template <class S>
Json poly_json(const Poly<S>& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exp", m.exponents()}, {"coeff", to_json(c)}});
  return {{"vars", p.nvars()}, {"terms", std::move(terms)}};
}

template <class S>
Poly<S> poly_from_json(const Json& j) {
  const std::size_t n = j.at("vars").get<std::size_t>();
  Poly<S> p(n);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<std::vector<unsigned>>();
    if (e.size() != n) throw ParseError("term exponent length differs from vars");
    p.add_term(Monomial(std::move(e)), scalar_from_json<S>(t.at("coeff")));
  }
  return p;
}

std::vector<Rational> rational_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Matrix<Rational> matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

template <class S>
Json diag_json(const DiagRoabp<S>& r) {
  Json rows = Json::array(), weights = Json::array();
  for (const auto& row : r.rows) {
    Json jr = Json::array();
    for (const auto& f : row) jr.push_back(univariate_to_json(f));
    rows.push_back(std::move(jr));
  }
  for (const auto& w : r.weights) weights.push_back(to_json(w));
  return {{"kind", "diag"}, {"n", r.n}, {"d", r.d}, {"w", r.w()}, {"rows", std::move(rows)}, {"weights", std::move(weights)}};
}

template <class S>
DiagRoabp<S> diag_from_json(const Json& j) {
  DiagRoabp<S> r;
  r.n = j.at("n").get<std::size_t>();
  r.d = j.at("d").get<unsigned>();
  for (const auto& jr : j.at("rows")) {
    std::vector<Univariate<S>> row;
    for (const auto& f : jr) row.push_back(univariate_from_json<S>(f));
    r.rows.push_back(std::move(row));
  }
  for (const auto& w : j.at("weights")) r.weights.push_back(scalar_from_json<S>(w));
  r.validate();
  return r;
}

bool any_complex_scalar(const Json& j) {
  if (j.is_object() && j.contains("re")) return true;
  if (j.is_array() || j.is_object())
    for (const auto& x : j)
      if (any_complex_scalar(x)) return true;
  return false;
}

Roabp roabp_from_json(const Json& j) {
  Roabp r;
  r.n = j.at("n").get<std::size_t>();
  r.d = j.at("d").get<unsigned>();
  r.order = j.at("order").get<std::vector<std::size_t>>();
  r.u = rational_vector(j.at("u"));
  r.c = rational_vector(j.at("c"));
  std::size_t rows = r.u.size();
  for (const auto& layer : j.at("layers")) {
    if (!layer.is_array() || rows == 0 || layer.size() % rows != 0)
      throw ParseError("layer size is not a multiple of its row count");
    const std::size_t cols = layer.size() / rows;
    Matrix<Univariate<Rational>> m(rows, cols);
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) m(a, b) = univariate_from_json<Rational>(layer[a * cols + b]);
    r.layers.push_back(std::move(m));
    rows = cols;
  }
  r.validate();
  return r;
}

CommRoabp comm_from_json(const Json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  const unsigned d = j.at("d").get<unsigned>();
  const std::size_t w = j.at("w").get<std::size_t>();
  std::vector<std::vector<Matrix<Rational>>> a;
  for (const auto& row : j.at("A")) {
    std::vector<Matrix<Rational>> mats;
    for (const auto& m : row) mats.push_back(matrix_from_json(m));
    a.push_back(std::move(mats));
  }
  return CommRoabp(n, d, w, std::move(a), rational_vector(j.at("b")), rational_vector(j.at("c")));
}

Json complex_vector(const std::vector<ComplexF>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(Json::array({x.real(), x.imag()}));
  return arr;
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }
Json to_json(const ComplexF& x) { return {{"re", x.real()}, {"im", x.imag()}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as \"p/q\" or an integer");
}

ComplexF complex_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("re")) throw ParseError("complex value needs \"re\"");
    const double re = j.at("re").get<double>();
    const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
    return {re, im};
  }
  if (j.is_number()) return {j.get<double>(), 0.0};
  return to_complex(rational_from_json(j));
}

Json to_json(const Poly<Rational>& p) { return poly_json(p); }
Json to_json(const Poly<ComplexF>& p) { return poly_json(p); }

Json to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Roabp& r) {
  Json layers = Json::array();
  for (const auto& layer : r.layers) {
    Json flat = Json::array();
    for (std::size_t a = 0; a < layer.rows(); ++a)
      for (std::size_t b = 0; b < layer.cols(); ++b) flat.push_back(univariate_to_json(layer(a, b)));
    layers.push_back(std::move(flat));
  }
  Json u = Json::array(), c = Json::array();
  for (const auto& x : r.u) u.push_back(to_json(x));
  for (const auto& x : r.c) c.push_back(to_json(x));
  return {{"kind", "roabp"}, {"n", r.n}, {"d", r.d}, {"order", r.order}, {"layers", std::move(layers)}, {"u", std::move(u)}, {"c", std::move(c)}};
}

Json to_json(const CommRoabp& r) {
  Json a = Json::array();
  for (const auto& row : r.coeffs()) {
    Json jr = Json::array();
    for (const auto& m : row) jr.push_back(to_json(m));
    a.push_back(std::move(jr));
  }
  Json b = Json::array(), c = Json::array();
  for (const auto& x : r.b()) b.push_back(to_json(x));
  for (const auto& x : r.c()) c.push_back(to_json(x));
  return {{"kind", "comm"}, {"n", r.n()}, {"d", r.d()}, {"w", r.w()}, {"A", std::move(a)}, {"b", std::move(b)}, {"c", std::move(c)}};
}

Json to_json(const DiagRoabp<Rational>& r) { return diag_json(r); }
Json to_json(const DiagRoabp<ComplexF>& r) { return diag_json(r); }

Json to_json(const WaringDecomposition& dec) {
  Json terms = Json::array();
  for (const auto& t : dec.terms) {
    Json form = Json::array();
    for (const auto& c : t.form) form.push_back(to_json(c));
    terms.push_back({{"weight", to_json(t.weight)}, {"form", std::move(form)}, {"constant", to_json(t.constant)}, {"power", t.power}});
  }
  return {{"vars", dec.nvars}, {"terms", std::move(terms)}};
}

Json to_json(const NisanProfile& p) {
  return {{"order", p.order}, {"ranks", p.ranks}, {"size", p.size}, {"width", p.width}};
}

Json to_json(const ConversionReport& rep) {
  Json ops = Json::array();
  for (const auto& op : rep.operators)
    ops.push_back({{"point", op.point},
                   {"operator", to_json(op.op)},
                   {"weight", to_json(op.weight)},
                   {"decompositionSize", op.decomposition_size},
                   {"planSize", op.plan_size},
                   {"dpd", op.dpd}});
  Json variety = Json::array();
  for (const auto& p : rep.variety) variety.push_back(complex_vector(p));
  Json j = {{"inputWidth", rep.input_width},
            {"r", rep.r},
            {"m", rep.m},
            {"varietySize", rep.variety_size},
            {"variety", std::move(variety)},
            {"localDims", rep.local_dims},
            {"psiCondition", rep.psi_condition},
            {"dPrime", rep.d_prime},
            {"planSizes", rep.plan_sizes},
            {"planTotal", rep.plan_total},
            {"outputWidth", rep.output_width},
            {"theoremBound", rep.theorem_bound},
            {"operators", std::move(ops)}};
  if (rep.max_residual) j["maxResidual"] = *rep.max_residual;
  if (rep.verified) j["verified"] = *rep.verified;
  return j;
}

Json to_json(const VerifyReport& rep) {
  return {{"trials", rep.trials}, {"maxResidual", rep.max_residual}, {"tol", rep.tol}, {"passed", rep.passed}};
}

Json ring_report(const MatrixRing& ring, const std::vector<VarietyPoint>& points, const DualBasis* db) {
  Json ns = Json::array(), border = Json::array(), variety = Json::array(), mults = Json::array();
  for (const auto& a : ring.normal_set) ns.push_back(a.exponents());
  for (const auto& g : ring.border) border.push_back(to_json(g));
  for (const auto& p : points) {
    variety.push_back(complex_vector(p.coords));
    mults.push_back(p.multiplicity);
  }
  Json j = {{"w", ring.w}, {"r", ring.r}, {"m", ring.m()}, {"normalSet", std::move(ns)}, {"border", std::move(border)},
            {"variety", std::move(variety)}, {"multiplicities", std::move(mults)}};
  if (db) {
    Json spaces = Json::array();
    for (const auto& s : db->spaces) {
      Json ops = Json::array();
      for (const auto& op : s.basis) ops.push_back(to_json(op.op));
      spaces.push_back({{"point", complex_vector(s.point.coords)}, {"localDim", s.local_dim()}, {"operators", std::move(ops)}});
    }
    j["dualSpaces"] = std::move(spaces);
    j["psiCondition"] = db->condition;
  }
  return j;
}

Object parse_object(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    std::string kind = j.value("kind", "");
    if (kind.empty()) {
      if (j.contains("A")) kind = "comm";
      else if (j.contains("layers")) kind = "roabp";
      else if (j.contains("rows")) kind = "diag";
      else if (j.contains("terms")) kind = "poly";
      else throw ParseError("cannot determine the object kind");
    }
    if (kind == "comm") return comm_from_json(j);
    if (kind == "roabp") return roabp_from_json(j);
    if (kind == "diag") {
      if (any_complex_scalar(j.at("rows")) || any_complex_scalar(j.at("weights"))) return diag_from_json<ComplexF>(j);
      return diag_from_json<Rational>(j);
    }
    if (kind == "poly") {
      if (any_complex_scalar(j.at("terms"))) return poly_from_json<ComplexF>(j);
      return poly_from_json<Rational>(j);
    }
    throw ParseError("unknown object kind \"" + kind + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed object: ") + e.what());
  }
}

Json to_json(const Object& obj) {
  return std::visit(
      [](const auto& o) -> Json {
        Json j = to_json(o);
        if constexpr (std::is_same_v<std::decay_t<decltype(o)>, Poly<Rational>> ||
                      std::is_same_v<std::decay_t<decltype(o)>, Poly<ComplexF>>) {
          Json k = {{"kind", "poly"}};
          k.update(j);
          return k;
        }
        return j;
      },
      obj);
}

std::size_t object_nvars(const Object& obj) {
  return std::visit(
      [](const auto& o) -> std::size_t {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Poly<Rational>> || std::is_same_v<T, Poly<ComplexF>>) {
          return o.nvars();
        } else if constexpr (std::is_same_v<T, CommRoabp>) {
          return o.n();
        } else {
          return o.n;
        }
      },
      obj);
}

Evaluable object_evaluable(const Object& obj) {
  return std::visit([](const auto& o) { return evaluable(o); }, obj);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace sroabp::io
