#pragma once
// Piecewise-linear subsets of Q^n given in disjunctive normal form, their sign
// cell decomposition, and the o-minimal Euler characteristics eu and eu_c.

#include <cstdint>
#include <span>
#include <vector>

#include "motivic/exactalg.hpp"
#include "motivic/parallel.hpp"

namespace motivic {

/// x -> coeffs . x + constant.
struct AffineForm {
  std::vector<BigInt> coeffs;
  Rational constant;

  Rational eval(std::span<const Rational> x) const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

enum class Relation { eq, gt, ge };  // form = 0, form > 0, form >= 0

struct Constraint {
  AffineForm form;
  Relation rel = Relation::ge;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

using Conjunction = std::vector<Constraint>;

/// A subset of Q^dim: the union of its disjuncts, each an intersection of
/// linear equations and (strict or weak) inequalities. An empty disjunct list is
/// the empty set; an empty conjunction is all of Q^dim.
struct PolyFormula {
  std::size_t dim = 0;
  std::vector<Conjunction> disjuncts;

  /// Throws ValidationError when a form's coefficient count differs from dim.
  void validate() const;
  bool contains(std::span<const Rational> x) const;
  friend bool operator==(const PolyFormula&, const PolyFormula&) = default;
};

/// Size bounds for the decomposition.
struct Limits {
  std::size_t max_dim = 6;
  std::size_t max_forms = 32;
};

/// One relatively open convex cell of the arrangement of a formula's forms.
struct Cell {
  std::vector<std::int8_t> signs;  // sign of each CellComplex::forms entry on the cell
  int dim = 0;
  bool bounded = false;
  bool satisfied = false;  // the formula holds on the cell
  std::vector<Rational> witness;  // a point of the cell
};

struct CellComplex {
  std::size_t dim = 0;
  std::vector<AffineForm> forms;  // distinct hyperplanes, primitive integer orientation
  std::vector<Cell> cells;
};

/// All nonempty sign cells of the arrangement of f's forms. Throws BoundError
/// past the limits.
CellComplex decompose(const PolyFormula& f, const Limits& limits = {});

/// Sum of (-1)^dim over the cells on which f holds.
long eu(const PolyFormula& f, const Limits& limits = {});

struct BoundedEulerReport {
  long value = 0;
  BigInt box_radius;     // M0
  long guard_value = 0;  // eu at radius 2*M0 + 1
};

/// Stabilized eu(f ∩ [-M, M]^n). Throws StabilizationError if the value at the
/// chosen radius and the guard radius disagree.
long eu_c(const PolyFormula& f, const Limits& limits = {});
BoundedEulerReport eu_c_report(const PolyFormula& f, const Limits& limits = {});

/// eu(f ∩ [-radius, radius]^n).
long eu_in_box(const PolyFormula& f, const BigInt& radius, const Limits& limits = {});

/// Image of f under x -> A x + b. Throws ValidationError unless |det A| = 1.
PolyFormula transform(const PolyFormula& f, const IntMatrix& a, std::span<const Rational> b);

/// f x g in Q^(dim f + dim g).
PolyFormula product(const PolyFormula& f, const PolyFormula& g);
/// f ∪ g and f ∩ g (same ambient dimension).
PolyFormula disjoin(const PolyFormula& f, const PolyFormula& g);
PolyFormula conjoin(const PolyFormula& f, const PolyFormula& g);

// Builders.
PolyFormula whole_space(std::size_t dim);
/// (0,1)^k.
PolyFormula open_cube(std::size_t k);
/// {x_i > 0, 1 - sum x_i > 0} in Q^k; the point Q^0 for k = 0.
PolyFormula open_simplex(std::size_t k);
/// {x_i >= 0, 1 - sum x_i >= 0}.
PolyFormula closed_simplex(std::size_t k);

/// Batch evaluation; Exec::parallel distributes formulas across threads.
std::vector<long> eu_batch(std::span<const PolyFormula> fs, Exec exec, const Limits& limits = {});
std::vector<long> eu_c_batch(std::span<const PolyFormula> fs, Exec exec, const Limits& limits = {});

}  // namespace motivic
