#pragma once
// JSON documents for formulas, classes, atoms, RV classes, resolution data and
// zeta functions. Rationals travel as strings "p/q"; integers as JSON numbers
// when they fit in 64 bits, otherwise as decimal strings.

#include <string_view>

#include <json.hpp>

#include "motivic/hk.hpp"
#include "motivic/milnor.hpp"
#include "motivic/motring.hpp"
#include "motivic/polytope.hpp"

namespace motivic::io {

using Json = nlohmann::json;

/// Parses text as JSON; throws ParseError.
Json parse_json(std::string_view text);

Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const PolyFormula& f);
PolyFormula formula_from_json(const Json& j);

Json to_json(const Atom& a);
Atom atom_from_json(const Json& j);

Json to_json(const MotClass& c);
MotClass motclass_from_json(const Json& j);

Json to_json(const RVClass& c);
RVClass rvclass_from_json(const Json& j);

Json to_json(const ResolutionData& r);
ResolutionData resolution_from_json(const Json& j);

/// {"factors": {"N": e, ...}}, plus "expanded" when requested.
Json to_json(const FactoredZeta& z, bool with_expanded = false);
FactoredZeta zeta_from_json(const Json& j);

/// Compact, key-sorted serialization.
std::string dump(const Json& j);

}  // namespace motivic::io
