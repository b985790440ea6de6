#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "sroabp/convert.hpp"
#include "sroabp/dualspace.hpp"
#include "sroabp/matring.hpp"
#include "sroabp/poly.hpp"
#include "sroabp/roabp.hpp"
#include "sroabp/waring.hpp"

namespace sroabp::io {

using Json = nlohmann::ordered_json;

// Scalars: rationals as "p/q", complex values as {"re": x, "im": y}.
Json to_json(const Rational& x);
Json to_json(const ComplexF& x);
Rational rational_from_json(const Json& j);
ComplexF complex_from_json(const Json& j);

Json to_json(const Poly<Rational>& p);
Json to_json(const Poly<ComplexF>& p);
Json to_json(const Matrix<Rational>& m);
Json to_json(const Roabp& r);
Json to_json(const CommRoabp& r);
Json to_json(const DiagRoabp<Rational>& r);
Json to_json(const DiagRoabp<ComplexF>& r);
Json to_json(const WaringDecomposition& dec);
Json to_json(const NisanProfile& p);
Json to_json(const ConversionReport& rep);
Json to_json(const VerifyReport& rep);

/// Ring report: normal set, border basis, variety and, when given, the dual
/// spaces with the condition number of psi.
Json ring_report(const MatrixRing& ring, const std::vector<VarietyPoint>& points, const DualBasis* db);

using Object = std::variant<Poly<Rational>, Poly<ComplexF>, Roabp, CommRoabp, DiagRoabp<Rational>, DiagRoabp<ComplexF>>;

/// Detects the object kind from "kind" or from the keys present. Throws
/// ParseError on malformed input.
Object parse_object(const Json& j);
Json to_json(const Object& obj);

std::size_t object_nvars(const Object& obj);
Evaluable object_evaluable(const Object& obj);

/// Reads and parses a JSON file; throws ParseError.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace sroabp::io
