#pragma once
// Incremental construction of the sign cells of an affine hyperplane
// arrangement in Q^n. Internal to the polytope module.

#include <cstdint>
#include <vector>

#include "motivic/exactalg.hpp"

namespace motivic::detail {

/// a . x + c with integer data. All-zero `a` is a constant form.
struct IntForm {
  std::vector<BigInt> a;
  BigInt c;

  bool is_constant() const;
  /// Divides by the content of (a, c); orientation is preserved.
  void make_primitive();
  Rational eval(const std::vector<Rational>& x) const;
  BigInt dot(const std::vector<BigInt>& d) const;
  /// den * value at num / den.
  BigInt eval_scaled(const std::vector<BigInt>& num, const BigInt& den) const;
};

/// A nonempty relatively open cell: constant signs on every form.
struct ArrCell {
  std::vector<std::int8_t> signs;
  std::vector<BigInt> num;  // witness num / den, den > 0
  BigInt den = 1;
  std::vector<std::vector<BigInt>> directions;  // basis of the cell's linear span
  int dim() const { return static_cast<int>(directions.size()); }
  std::vector<Rational> point() const;
};

/// Every nonempty sign cell of the forms, each with a witness point and a basis
/// of its direction space. Constant forms contribute their fixed sign.
std::vector<ArrCell> arrange(const std::vector<IntForm>& forms, std::size_t n);

}  // namespace motivic::detail
