#include "motivic/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

#include "motivic/errors.hpp"

namespace motivic::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) fail(std::string(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) fail(std::string(where) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      fail(std::string(where) + ": unknown key \"" + key + "\"");
    }
  }
}

const Json& require_array(const Json& j, const char* key, const char* where) {
  const Json& v = require(j, key, where);
  if (!v.is_array()) fail(std::string(where) + ": \"" + key + "\" must be an array");
  return v;
}

long long_from_json(const Json& j, const char* where) {
  const BigInt v = bigint_from_json(j);
  if (!v.fits_slong_p()) fail(std::string(where) + ": integer out of range");
  return v.get_si();
}

std::string string_from_json(const Json& j, const char* where) {
  if (!j.is_string()) fail(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

UVPoly epoly_from_json(const Json& j, const char* where) {
  if (j.is_number_integer()) return UVPoly::constant(bigint_from_json(j));
  return UVPoly::parse(string_from_json(j, where));
}

std::vector<std::string> names_from_json(const Json& j, const char* where) {
  if (!j.is_array()) fail(std::string(where) + ": expected an array of names");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(string_from_json(x, where));
  return out;
}

Json lpoly_to_json(const LPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.coeffs()) out[std::to_string(e)] = to_json(c);
  return out;
}

LPoly lpoly_from_json(const Json& j) {
  if (!j.is_object()) fail("coeff: expected an object mapping L-exponents to integers");
  LPoly p;
  for (const auto& [key, value] : j.items()) {
    long e = 0;
    try {
      std::size_t used = 0;
      e = std::stol(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail("coeff: bad exponent \"" + key + "\"");
    }
    p += LPoly::monomial(e, bigint_from_json(value));
  }
  return p;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const Rational r = Rational::parse(s);
    if (!r.is_integer()) fail("expected an integer, got \"" + s + "\"");
    return r.numerator();
  }
  fail("expected an integer");
}

Json to_json(const Rational& x) { return Json(x.str()); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(bigint_from_json(j));
  fail("expected a rational string \"p/q\"");
}

namespace {

const char* rel_str(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
  }
  return "?";
}

Relation rel_from(const std::string& s) {
  if (s == "=") return Relation::eq;
  if (s == ">") return Relation::gt;
  if (s == ">=") return Relation::ge;
  fail("formula: unknown relation \"" + s + "\"");
}

}  // namespace

Json to_json(const PolyFormula& f) {
  Json disjuncts = Json::array();
  for (const auto& conj : f.disjuncts) {
    Json cs = Json::array();
    for (const auto& c : conj) {
      Json a = Json::array();
      for (const auto& x : c.form.coeffs) a.push_back(to_json(x));
      cs.push_back({{"a", a}, {"b", to_json(c.form.constant)}, {"rel", rel_str(c.rel)}});
    }
    disjuncts.push_back({{"and", cs}});
  }
  return {{"dim", f.dim}, {"or", disjuncts}};
}

PolyFormula formula_from_json(const Json& j) {
  check_keys(j, {"dim", "or"}, "formula");
  PolyFormula f;
  const long dim = long_from_json(require(j, "dim", "formula"), "formula.dim");
  if (dim < 0) fail("formula: negative dim");
  f.dim = static_cast<std::size_t>(dim);
  for (const auto& d : require_array(j, "or", "formula")) {
    check_keys(d, {"and"}, "formula disjunct");
    Conjunction conj;
    for (const auto& c : require_array(d, "and", "formula disjunct")) {
      check_keys(c, {"a", "b", "rel"}, "constraint");
      Constraint con;
      for (const auto& x : require_array(c, "a", "constraint")) con.form.coeffs.push_back(bigint_from_json(x));
      con.form.constant = c.contains("b") ? rational_from_json(c["b"]) : Rational(0);
      con.rel = rel_from(string_from_json(require(c, "rel", "constraint"), "constraint.rel"));
      conj.push_back(std::move(con));
    }
    f.disjuncts.push_back(std::move(conj));
  }
  f.validate();
  return f;
}

Json to_json(const Atom& a) {
  Json out = {{"name", a.name}, {"proper_smooth", a.proper_smooth}};
  if (a.dim) out["dim"] = *a.dim;
  if (a.chi) out["chi"] = to_json(*a.chi);
  if (a.cover_degree) out["cover_degree"] = *a.cover_degree;
  if (a.epoly) out["epoly"] = a.epoly->str();
  return out;
}

Atom atom_from_json(const Json& j) {
  check_keys(j, {"name", "dim", "chi", "cover_degree", "proper_smooth", "epoly"}, "atom");
  Atom a;
  a.name = string_from_json(require(j, "name", "atom"), "atom.name");
  if (j.contains("dim")) a.dim = long_from_json(j["dim"], "atom.dim");
  if (j.contains("chi")) a.chi = bigint_from_json(j["chi"]);
  if (j.contains("cover_degree")) a.cover_degree = long_from_json(j["cover_degree"], "atom.cover_degree");
  if (j.contains("proper_smooth")) {
    if (!j["proper_smooth"].is_boolean()) fail("atom.proper_smooth: expected a boolean");
    a.proper_smooth = j["proper_smooth"].get<bool>();
  }
  if (j.contains("epoly")) a.epoly = epoly_from_json(j["epoly"], "atom.epoly");
  a.validate();
  return a;
}

Json to_json(const MotClass& c) {
  Json terms = Json::array();
  for (const auto& [m, coeff] : c.terms()) terms.push_back({{"monomial", m}, {"coeff", lpoly_to_json(coeff)}});
  return {{"terms", terms}};
}

MotClass motclass_from_json(const Json& j) {
  check_keys(j, {"terms"}, "class");
  MotClass out;
  for (const auto& t : require_array(j, "terms", "class")) {
    check_keys(t, {"monomial", "coeff"}, "class term");
    auto m = t.contains("monomial") ? names_from_json(t["monomial"], "class term.monomial") : MotClass::Monomial{};
    out += MotClass::from(std::move(m), lpoly_from_json(require(t, "coeff", "class term")));
  }
  return out;
}

Json to_json(const RVClass& c) {
  Json terms = Json::array();
  for (const auto& [coeff, t] : c.terms) {
    terms.push_back({{"coeff", to_json(coeff)}, {"res", to_json(t.res)}, {"res_grade", t.res_grade},
                     {"gamma", to_json(t.gamma)}});
  }
  return {{"terms", terms}};
}

RVClass rvclass_from_json(const Json& j) {
  check_keys(j, {"terms"}, "RV class");
  RVClass out;
  for (const auto& t : require_array(j, "terms", "RV class")) {
    check_keys(t, {"coeff", "res", "res_grade", "gamma"}, "RV term");
    RVTerm term;
    term.res = t.contains("res") ? motclass_from_json(t["res"]) : MotClass::one();
    term.res_grade = t.contains("res_grade") ? long_from_json(t["res_grade"], "RV term.res_grade") : 0;
    term.gamma = t.contains("gamma") ? formula_from_json(t["gamma"]) : whole_space(0);
    term.validate();
    const BigInt coeff = t.contains("coeff") ? bigint_from_json(t["coeff"]) : BigInt(1);
    out.terms.emplace_back(coeff, std::move(term));
  }
  return out;
}

Json to_json(const ResolutionData& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back({{"name", c.name}, {"N", c.multiplicity}});
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    Json e = {{"on", s.on}};
    if (s.chi) e["chi"] = to_json(*s.chi);
    if (s.epoly) e["epoly"] = s.epoly->str();
    if (s.cover_epoly) e["cover_epoly"] = s.cover_epoly->str();
    if (!s.present) e["present"] = false;
    strata.push_back(std::move(e));
  }
  return {{"dim", r.dim}, {"components", comps}, {"strata", strata}};
}

ResolutionData resolution_from_json(const Json& j) {
  check_keys(j, {"dim", "components", "strata", "notes"}, "resolution");
  ResolutionData r;
  r.dim = long_from_json(require(j, "dim", "resolution"), "resolution.dim");
  for (const auto& c : require_array(j, "components", "resolution")) {
    check_keys(c, {"name", "N"}, "component");
    r.components.push_back(
        {string_from_json(require(c, "name", "component"), "component.name"),
         long_from_json(require(c, "N", "component"), "component.N")});
  }
  if (j.contains("strata")) {
    if (!j["strata"].is_array()) fail("resolution: \"strata\" must be an array");
    for (const auto& s : j["strata"]) {
      check_keys(s, {"on", "chi", "epoly", "cover_epoly", "present", "notes"}, "stratum");
      StratumData d;
      d.on = names_from_json(require(s, "on", "stratum"), "stratum.on");
      if (s.contains("chi")) d.chi = bigint_from_json(s["chi"]);
      if (s.contains("epoly")) d.epoly = epoly_from_json(s["epoly"], "stratum.epoly");
      if (s.contains("cover_epoly")) d.cover_epoly = epoly_from_json(s["cover_epoly"], "stratum.cover_epoly");
      if (s.contains("present")) {
        if (!s["present"].is_boolean()) fail("stratum.present: expected a boolean");
        d.present = s["present"].get<bool>();
      }
      r.strata.push_back(std::move(d));
    }
  }
  r.validate();
  return r;
}

Json to_json(const FactoredZeta& z, bool with_expanded) {
  Json factors = Json::object();
  for (const auto& [n, e] : z.factors) factors[std::to_string(n)] = e;
  Json out = {{"factors", factors}};
  if (with_expanded) out["expanded"] = z.expanded();
  return out;
}

FactoredZeta zeta_from_json(const Json& j) {
  check_keys(j, {"factors", "expanded"}, "zeta");
  const Json& f = require(j, "factors", "zeta");
  if (!f.is_object()) fail("zeta: \"factors\" must be an object");
  FactoredZeta z;
  for (const auto& [key, value] : f.items()) {
    const long n = long_from_json(Json(key), "zeta factor");
    if (n < 1) fail("zeta: factor index must be positive");
    z.factors[n] += long_from_json(value, "zeta exponent");
  }
  z.normalize();
  return z;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace motivic::io
