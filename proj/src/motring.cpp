#include "motivic/motring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

// ---------------------------------------------------------------- LPoly

LPoly LPoly::constant(const BigInt& c) { return monomial(0, c); }

LPoly LPoly::monomial(long exponent, const BigInt& c) {
  LPoly p;
  p.add_term(exponent, c);
  return p;
}

BigInt LPoly::coeff(long exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? BigInt(0) : it->second;
}

void LPoly::add_term(long e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) c_.erase(it);
}

LPoly& LPoly::operator+=(const LPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LPoly LPoly::operator-() const {
  LPoly out = *this;
  for (auto& [e, c] : out.c_) c = -c;
  return out;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly out;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
  return out;
}

LPoly LPoly::shifted(long k) const {
  LPoly out;
  for (const auto& [e, c] : c_) out.c_.emplace(e + k, c);
  return out;
}

LPoly LPoly::inverted() const {
  LPoly out;
  for (const auto& [e, c] : c_) out.c_.emplace(-e, c);
  return out;
}

BigInt LPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

std::string LPoly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const long e = it->first;
    BigInt c = it->second;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    first = false;
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------- UVPoly

UVPoly UVPoly::constant(const BigInt& c) { return monomial(0, 0, c); }

UVPoly UVPoly::monomial(long u, long v, const BigInt& c) {
  UVPoly p;
  p.add_term({u, v}, c);
  return p;
}

void UVPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) c_.erase(it);
}

UVPoly& UVPoly::operator+=(const UVPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

UVPoly UVPoly::operator-() const {
  UVPoly out = *this;
  for (auto& [e, c] : out.c_) c = -c;
  return out;
}

UVPoly operator*(const UVPoly& a, const UVPoly& b) {
  UVPoly out;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

UVPoly UVPoly::pow(long k) const {
  if (k < 0) {
    if (c_.size() != 1 || abs(c_.begin()->second) != 1) {
      throw ValidationError("negative power of a non-unit E-polynomial");
    }
    const auto& [e, c] = *c_.begin();
    BigInt sign = (k % 2 != 0) ? c : BigInt(1);
    return monomial(e.first * k, e.second * k, sign);
  }
  UVPoly out = constant(1);
  for (long i = 0; i < k; ++i) out = out * *this;
  return out;
}

BigInt UVPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

std::string UVPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto [eu, ev] = it->first;
    BigInt c = it->second;
    if (c < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    c = abs(c);
    std::vector<std::string> factors;
    if (c != 1 || (eu == 0 && ev == 0)) factors.push_back(c.get_str());
    auto power = [&](const char* var, long e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e));
    };
    power("u", eu);
    power("v", ev);
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

UVPoly UVPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty E-polynomial");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("malformed E-polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  };
  UVPoly out;
  bool first = true;
  while (pos < s.size()) {
    BigInt sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    long eu = 0, ev = 0;
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (any && s[pos] == '*') ++pos;
      if (pos >= s.size()) fail("dangling '*'");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= BigInt(read_int(), 10);
      } else if (s[pos] == 'u' || s[pos] == 'v') {
        long& e = (s[pos] == 'u') ? eu : ev;
        ++pos;
        long power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          long neg = 1;
          if (pos < s.size() && s[pos] == '-') { neg = -1; ++pos; }
          power = neg * std::stol(read_int());
        }
        e += power;
      } else {
        fail(std::string("unexpected character '") + s[pos] + "'");
      }
      any = true;
    }
    if (!any) fail("empty term");
    out.add_term({eu, ev}, sign * coeff);
  }
  return out;
}

// ---------------------------------------------------------------- Atom

void Atom::validate() const {
  if (name.empty()) throw ValidationError("atom with empty name");
  if (dim && *dim < 0) throw ValidationError("atom '" + name + "' has negative dimension");
  if (cover_degree && *cover_degree < 1) throw ValidationError("atom '" + name + "' has cover degree < 1");
  if (chi && epoly && epoly->at_one() != *chi) {
    throw ValidationError("atom '" + name + "': E-polynomial at u=v=1 is " + epoly->at_one().get_str() +
                          " but chi is " + chi->get_str());
  }
}

void register_atom(AtomTable& table, Atom atom) {
  atom.validate();
  auto name = atom.name;
  if (!table.emplace(name, std::move(atom)).second) throw ValidationError("duplicate atom '" + name + "'");
}

// ---------------------------------------------------------------- MotClass

MotClass MotClass::constant(const BigInt& c) { return from({}, LPoly::constant(c)); }
MotClass MotClass::lefschetz() { return from({}, LPoly::monomial(1)); }
MotClass MotClass::atom(const std::string& name) { return from({name}, LPoly::constant(1)); }

MotClass MotClass::from(Monomial m, const LPoly& coeff) {
  std::sort(m.begin(), m.end());
  MotClass out;
  out.add_term(m, coeff);
  return out;
}

void MotClass::add_term(const Monomial& m, const LPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MotClass& MotClass::operator+=(const MotClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MotClass& MotClass::operator-=(const MotClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MotClass MotClass::operator-() const {
  MotClass out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MotClass operator*(const MotClass& a, const MotClass& b) {
  MotClass out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MotClass::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  return out;
}

MotClass MotClass::l_pow(long k) const {
  MotClass out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.shifted(k));
  return out;
}

MotClass MotClass::pow(long k) const {
  if (k < 0) throw ValidationError("negative power of a motivic class");
  MotClass out = one();
  MotClass base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

MotClass MotClass::substitute(const std::function<MotClass(const std::string&)>& image) const {
  std::map<std::string, MotClass> cache;
  MotClass out;
  for (const auto& [m, c] : terms_) {
    MotClass term = from({}, c);
    for (const auto& name : m) {
      auto it = cache.find(name);
      if (it == cache.end()) it = cache.emplace(name, image(name)).first;
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

std::vector<std::string> MotClass::atoms() const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_) out.insert(out.end(), m.begin(), m.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string MotClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string atoms;
    for (std::size_t i = 0; i < m.size(); ++i) atoms += (i ? "*[" : "[") + m[i] + "]";
    std::string term;
    if (m.empty()) {
      term = c.coeffs().size() > 1 ? "(" + c.str() + ")" : c.str();
    } else if (c == LPoly::constant(1)) {
      term = atoms;
    } else if (c == LPoly::constant(-1)) {
      term = "-" + atoms;
    } else {
      term = (c.coeffs().size() > 1 || c.coeffs().begin()->second < 0 ? "(" + c.str() + ")" : c.str()) + "*" + atoms;
    }
    out += first ? term : " + " + term;
    first = false;
  }
  return out;
}

MotClass gm() { return MotClass::lefschetz() - MotClass::one(); }

namespace {

const Atom& lookup(const AtomTable& atoms, const std::string& name) {
  auto it = atoms.find(name);
  if (it == atoms.end()) throw ValidationError("unknown atom '" + name + "'");
  return it->second;
}

}  // namespace

BigInt chi_realize(const MotClass& a, const AtomTable& atoms) {
  BigInt total = 0;
  for (const auto& [m, c] : a.terms()) {
    BigInt v = c.at_one();
    for (const auto& name : m) {
      const Atom& at = lookup(atoms, name);
      if (!at.chi) throw ValidationError("atom '" + name + "' has no Euler characteristic");
      v *= *at.chi;
    }
    total += v;
  }
  return total;
}

UVPoly epoly_realize(const MotClass& a, const AtomTable& atoms) {
  UVPoly total;
  for (const auto& [m, c] : a.terms()) {
    UVPoly v;
    for (const auto& [e, k] : c.coeffs()) v += UVPoly::monomial(e, e, k);
    for (const auto& name : m) {
      const Atom& at = lookup(atoms, name);
      if (!at.epoly) throw ValidationError("atom '" + name + "' has no E-polynomial");
      v = v * *at.epoly;
    }
    total += v;
  }
  return total;
}

MotClass dualize(const MotClass& a, const AtomTable& atoms) {
  MotClass out;
  for (const auto& [m, c] : a.terms()) {
    long shift = 0;
    for (const auto& name : m) {
      const Atom& at = lookup(atoms, name);
      if (!at.proper_smooth) throw ValidationError("atom '" + name + "' is not smooth and proper");
      if (!at.dim) throw ValidationError("atom '" + name + "' has no dimension");
      shift -= *at.dim;
    }
    out += MotClass::from(m, c.inverted().shifted(shift));
  }
  return out;
}

bool verify_binomial_identity(long m) {
  if (m < 1) throw ValidationError("binomial identity needs m >= 1");
  const MotClass t = MotClass::one().l_pow(-1);
  const MotClass g = MotClass::one() - t;
  MotClass lhs = t.pow(m);
  BigInt binom = 1;  // C(m, i)
  MotClass g_pow = MotClass::one();
  for (long i = 0; i < m; ++i) {
    const BigInt signed_binom = (i % 2 == 0) ? binom : BigInt(-binom);
    lhs -= MotClass::constant(signed_binom) * g_pow;
    g_pow = g_pow * g;
    binom = binom * (m - i) / (i + 1);
  }
  const MotClass rhs = (m % 2 == 0) ? g_pow : -g_pow;
  return lhs == rhs;
}

// ---------------------------------------------------------------- zeta

void FactoredZeta::normalize() {
  std::erase_if(factors, [](const auto& kv) { return kv.second == 0; });
}

long FactoredZeta::degree() const {
  long d = 0;
  for (const auto& [n, e] : factors) d += n * e;
  return d;
}

namespace {

using IntPoly = std::vector<BigInt>;  // ascending

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact quotient by a divisor with leading coefficient 1.
IntPoly poly_div_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, BigInt(0));
  for (std::size_t k = num.size(); k-- > dn;) {
    const BigInt c = num[k];
    q[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

std::string poly_str(const IntPoly& p) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    BigInt c = p[k];
    if (c < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    c = abs(c);
    if (k == 0 || c != 1) out += c.get_str();
    if (k > 0) out += (k == 1) ? "t" : "t^" + std::to_string(k);
  }
  return first ? "0" : out;
}

}  // namespace

std::vector<BigInt> cyclotomic(long n) {
  if (n < 1) throw ValidationError("cyclotomic index must be positive");
  IntPoly p(static_cast<std::size_t>(n) + 1, BigInt(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_monic(p, cyclotomic(d));
  return p;
}

std::string FactoredZeta::expanded() const {
  // 1 - t^N = (1 - t) * prod_{d | N, d > 1} Phi_d(t).
  std::map<long, long> by_divisor;
  for (const auto& [n, e] : factors)
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) by_divisor[d] += e;
  IntPoly num{BigInt(1)}, den{BigInt(1)};
  for (const auto& [d, e] : by_divisor) {
    if (e == 0) continue;
    const IntPoly base = (d == 1) ? IntPoly{BigInt(1), BigInt(-1)} : cyclotomic(d);
    IntPoly& target = e > 0 ? num : den;
    for (long i = 0; i < std::labs(e); ++i) target = poly_mul(target, base);
  }
  if (den.size() == 1) return poly_str(num);
  const std::size_t num_terms = std::count_if(num.begin(), num.end(), [](const BigInt& c) { return c != 0; });
  const std::string top = num_terms == 1 ? poly_str(num) : "(" + poly_str(num) + ")";
  return top + "/(" + poly_str(den) + ")";
}

}  // namespace motivic
