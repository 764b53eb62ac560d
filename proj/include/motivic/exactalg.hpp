#pragma once
// Exact rational arithmetic and integer lattice normal forms.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motivic {

using BigInt = mpz_class;

/// Sign of an integer as -1, 0, +1.
inline int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

/// A reduced fraction. Zero is 0/1 and the denominator is always positive.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws ValidationError on a zero denominator.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p" or "p/q" (optional leading sign, no whitespace).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Canonical text form: "p" when integral, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

Rational abs(const Rational& x);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from row lists; every row must have the same length.
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<BigInt> row(std::size_t r) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// gcd of absolute values; 0 for the empty or all-zero list.
BigInt gcd_vec(std::span<const BigInt> v);

/// Row Hermite normal form: echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot), zero rows at the bottom. Same shape as the input.
IntMatrix hnf(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;
  IntMatrix u;  // unimodular, h = u * m
};
HnfResult hnf_with_transform(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Rank over Q of the rows.
std::size_t rank(const IntMatrix& m);

/// Integer inverse of a matrix with determinant +-1. Throws ValidationError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// The subgroup (1/denominator) * rowspan(generators) of Q^n, kept canonical:
/// generators in row HNF with zero rows removed.
class ScaledLattice {
 public:
  ScaledLattice(BigInt denominator, const IntMatrix& generators);

  const BigInt& denominator() const { return denominator_; }
  const IntMatrix& generators() const { return generators_; }
  std::size_t ambient_dim() const { return generators_.cols(); }

 private:
  BigInt denominator_;
  IntMatrix generators_;
};

/// True iff both describe the same subgroup of Q^n. Throws ValidationError on
/// ambient dimension mismatch.
bool lattice_equal(const ScaledLattice& a, const ScaledLattice& b);

/// Z^d + Z*(a_1/N, ..., a_d/N), with denominator N.
ScaledLattice cover_lattice(const BigInt& n, std::span<const BigInt> a);

/// Members with first coordinate zero, written in the remaining coordinates.
ScaledLattice restrict_first_zero(const ScaledLattice& l);

/// Number of irreducible components of the normalized cover s^N = x^a:
/// gcd(N, a_1, ..., a_d).
BigInt component_count(const BigInt& n, std::span<const BigInt> a);

}  // namespace motivic
