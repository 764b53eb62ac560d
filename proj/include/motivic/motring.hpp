#pragma once
// The Grothendieck ring of varieties localized at the Lefschetz class, in
// canonical form: Laurent polynomials in L over free monomials in named atoms.
//
// Coordinates are variety classes throughout. [G_m] is always L - 1 and never
// an atom; a Tate twist (-1) is multiplication by L.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motivic/exactalg.hpp"

namespace motivic {

/// Laurent polynomial in one variable with integer coefficients; no zero entries.
class LPoly {
 public:
  LPoly() = default;
  static LPoly constant(const BigInt& c);
  static LPoly monomial(long exponent, const BigInt& c = 1);

  const std::map<long, BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(long exponent) const;

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly operator-() const;
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend bool operator==(const LPoly&, const LPoly&) = default;

  /// Multiplies by the variable to the power k.
  LPoly shifted(long k) const;
  /// x -> 1/x.
  LPoly inverted() const;
  /// Value at x = 1.
  BigInt at_one() const;
  /// "L^2 - 2*L + 1" style, descending exponents, with the given variable name.
  std::string str(std::string_view var = "L") const;

 private:
  void add_term(long e, const BigInt& c);
  std::map<long, BigInt> c_;
};

/// Laurent polynomial in u, v with integer coefficients (E-polynomials).
class UVPoly {
 public:
  using Exponent = std::pair<long, long>;
  UVPoly() = default;
  static UVPoly constant(const BigInt& c);
  static UVPoly monomial(long u, long v, const BigInt& c = 1);
  /// Parses sums of terms such as "u*v - 1", "2u^2v^2 + 1", "u^-1*v". Throws ParseError.
  static UVPoly parse(std::string_view text);

  const std::map<Exponent, BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  UVPoly& operator+=(const UVPoly& o);
  UVPoly operator-() const;
  friend UVPoly operator+(UVPoly a, const UVPoly& b) { return a += b; }
  friend UVPoly operator-(const UVPoly& a, const UVPoly& b) { return a + (-b); }
  friend UVPoly operator*(const UVPoly& a, const UVPoly& b);
  friend bool operator==(const UVPoly&, const UVPoly&) = default;

  UVPoly pow(long k) const;  // k >= 0, or any k for a single monomial
  BigInt at_one() const;
  /// Canonical text, descending in u then v: "u^2*v^2-2*u*v+1".
  std::string str() const;

 private:
  void add_term(const Exponent& e, const BigInt& c);
  std::map<Exponent, BigInt> c_;
};

/// A named generator of the ring.
struct Atom {
  std::string name;
  std::optional<long> dim;
  std::optional<BigInt> chi;
  std::optional<long> cover_degree;
  bool proper_smooth = false;
  std::optional<UVPoly> epoly;

  /// Checks dim >= 0, cover_degree >= 1, and epoly(1,1) = chi when both are set.
  void validate() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

using AtomTable = std::map<std::string, Atom>;

/// Adds an atom, rejecting duplicate names. Validates it first.
void register_atom(AtomTable& table, Atom atom);

/// Canonical element of K(Var)[L^-1]: sorted atom multiset -> nonzero LPoly.
class MotClass {
 public:
  using Monomial = std::vector<std::string>;  // sorted, repeats allowed

  MotClass() = default;
  static MotClass zero() { return {}; }
  static MotClass one() { return constant(1); }
  static MotClass constant(const BigInt& c);
  static MotClass lefschetz();  // L
  static MotClass atom(const std::string& name);
  static MotClass from(Monomial m, const LPoly& coeff);

  const std::map<Monomial, LPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MotClass& operator+=(const MotClass& o);
  MotClass& operator-=(const MotClass& o);
  MotClass operator-() const;
  friend MotClass operator+(MotClass a, const MotClass& b) { return a += b; }
  friend MotClass operator-(MotClass a, const MotClass& b) { return a -= b; }
  friend MotClass operator*(const MotClass& a, const MotClass& b);
  friend bool operator==(const MotClass&, const MotClass&) = default;

  /// this * L^k.
  MotClass l_pow(long k) const;
  /// this^k, k >= 0.
  MotClass pow(long k) const;
  /// The ring morphism fixing L and sending each atom to image(name).
  MotClass substitute(const std::function<MotClass(const std::string&)>& image) const;
  /// Names of every atom that occurs.
  std::vector<std::string> atoms() const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const LPoly& c);
  std::map<Monomial, LPoly> terms_;
};

/// [G_m] = L - 1.
MotClass gm();

/// Euler characteristic: L -> 1, atom -> chi. Throws ValidationError for an
/// unknown atom or one without chi.
BigInt chi_realize(const MotClass& a, const AtomTable& atoms);

/// E-polynomial: L -> uv, atom -> epoly. Throws ValidationError on missing data.
UVPoly epoly_realize(const MotClass& a, const AtomTable& atoms);

/// Duality involution: L -> L^-1, [Y] -> [Y] L^-dim(Y) for smooth proper Y.
/// Throws ValidationError when an atom is not proper_smooth or lacks dim.
MotClass dualize(const MotClass& a, const AtomTable& atoms);

/// With T = L^-1 and G = 1 - T, checks T^m - sum_{i<m} C(m,i) (-1)^i G^i = (-1)^m G^m
/// by canonical-form comparison.
bool verify_binomial_identity(long m);

/// prod_N (1 - t^N)^{e_N}, no zero exponents.
struct FactoredZeta {
  std::map<long, long> factors;

  /// Drops zero exponents.
  void normalize();
  /// sum e_N * N.
  long degree() const;
  /// Reduced quotient "P(t)/Q(t)" with ascending powers, e.g. "(1-t+t^2)/(1-t)";
  /// a bare polynomial when Q = 1.
  std::string expanded() const;
  friend bool operator==(const FactoredZeta&, const FactoredZeta&) = default;
};

/// n-th cyclotomic polynomial, coefficients in ascending degree.
std::vector<BigInt> cyclotomic(long n);

}  // namespace motivic
