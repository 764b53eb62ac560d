#include "motivic/hk.hpp"

#include "motivic/errors.hpp"

namespace motivic {

void RVTerm::validate() const {
  if (res_grade < 0) throw ValidationError("negative residue grade");
  gamma.validate();
}

RVTerm operator*(const RVTerm& a, const RVTerm& b) {
  return RVTerm{a.res * b.res, a.res_grade + b.res_grade, product(a.gamma, b.gamma)};
}

namespace {

MotClass realize_term(const RVTerm& t, EulerKind kind, bool l_scaled, const Limits& limits) {
  t.validate();
  const long chi = kind == EulerKind::eu ? eu(t.gamma, limits) : eu_c(t.gamma, limits);
  if (chi == 0) return {};
  MotClass v = MotClass::constant(chi) * t.res * gm().pow(static_cast<long>(t.gamma.dim));
  return l_scaled ? v.l_pow(-t.total_grade()) : v;
}

}  // namespace

MotClass realize(const RVClass& c, EulerKind kind, bool l_scaled, const Limits& limits) {
  MotClass out;
  for (const auto& [coeff, term] : c.terms) {
    if (coeff == 0) continue;
    out += MotClass::constant(coeff) * realize_term(term, kind, l_scaled, limits);
  }
  return out;
}

MotClass realize_e(const RVClass& c, const Limits& limits) { return realize(c, EulerKind::eu, true, limits); }
MotClass realize_ec(const RVClass& c, const Limits& limits) { return realize(c, EulerKind::eu_c, false, limits); }

MotClass realize_e(const RVTerm& t, const Limits& limits) { return realize_term(t, EulerKind::eu, true, limits); }
MotClass realize_ec(const RVTerm& t, const Limits& limits) { return realize_term(t, EulerKind::eu_c, false, limits); }

RVTerm unit_term(long r) { return RVTerm{MotClass::one(), r, whole_space(0)}; }

RVTerm positive_ray_term() {
  PolyFormula ray;
  ray.dim = 1;
  ray.disjuncts = {{Constraint{AffineForm{{BigInt(1)}, Rational(0)}, Relation::gt}}};
  return RVTerm{MotClass::one(), 0, ray};
}

RVClass isp_generator() {
  RVClass c;
  c.terms.emplace_back(1, positive_ray_term());
  c.terms.emplace_back(1, unit_term(0));
  c.terms.emplace_back(-1, unit_term(1));
  return c;
}

bool annihilates(const RVClass& c, const Limits& limits) {
  return realize_e(c, limits).is_zero() && realize_ec(c, limits).is_zero();
}

bool verify_isp() { return annihilates(isp_generator()); }

}  // namespace motivic
