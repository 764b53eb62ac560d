#pragma once
// Graded sums of (RES class ⊗ Γ-polytope) terms and their realizations E, E_c
// in the localized Grothendieck ring.

#include <utility>
#include <vector>

#include "motivic/motring.hpp"
#include "motivic/polytope.hpp"

namespace motivic {

/// res ⊗ gamma with residue grade r and value-group dimension s = gamma.dim.
struct RVTerm {
  MotClass res = MotClass::one();
  long res_grade = 0;
  PolyFormula gamma = whole_space(0);

  long total_grade() const { return res_grade + static_cast<long>(gamma.dim); }
  /// Throws ValidationError for a negative grade or a malformed gamma.
  void validate() const;
};

/// Residue classes multiply, polytopes take products, grades add.
RVTerm operator*(const RVTerm& a, const RVTerm& b);

struct RVClass {
  std::vector<std::pair<BigInt, RVTerm>> terms;
};

enum class EulerKind { eu, eu_c };

/// sum coeff * chi(gamma) * res * (L-1)^s, times L^-(r+s) when l_scaled.
/// E is (eu, scaled) and E_c is (eu_c, unscaled); other pairings exist only
/// for control experiments.
MotClass realize(const RVClass& c, EulerKind kind, bool l_scaled, const Limits& limits = {});

MotClass realize_e(const RVClass& c, const Limits& limits = {});
MotClass realize_ec(const RVClass& c, const Limits& limits = {});
MotClass realize_e(const RVTerm& t, const Limits& limits = {});
MotClass realize_ec(const RVTerm& t, const Limits& limits = {});

/// [1]_r: the point class in residue grade r.
RVTerm unit_term(long r);
/// [RV^{>0}]_1: the point class over the open ray (0, +inf) in Γ^1.
RVTerm positive_ray_term();

/// [RV^{>0}]_1 + [1]_0 - [1]_1.
RVClass isp_generator();

/// True iff both E and E_c send c to 0.
bool annihilates(const RVClass& c, const Limits& limits = {});
bool verify_isp();

}  // namespace motivic
