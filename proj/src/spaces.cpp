#include "hsb/spaces.hpp"

#include "hsb/numerics.hpp"

namespace hsb {

bool DomainPoint::contains(const JordanElement& z, double tol) {
  if (!(z.norm() < 1.0 - tol)) return false;
  const Complex det = determinant(bergman(z, z).matrix());
  return det.real() > 0.0 && std::abs(det.imag()) <= tol * (1.0 + std::abs(det));
}

DomainPoint::DomainPoint(JordanElement z, double tol) : z_(std::move(z)) {
  if (!contains(z_, tol)) throw Error(ErrorCode::invalid_argument, "point is not in the bounded domain");
}

bool compact_equivalent(const CompactPoint& p, const CompactPoint& q, double tol) {
  require_same_triple(p.z, q.z);
  require_same_triple(p.a, q.a);
  require_same_triple(p.z, p.a);
  if (reciprocal_condition(bergman(p.z, p.a - q.a).matrix()) < default_min_rcond) return false;
  try {
    const JordanElement moved = quasi_inverse(p.z, q.a - p.a);
    const double scale = 1.0 + frobenius_norm(q.z.value());
    return frobenius_norm(moved.value() - q.z.value()) <= tol * scale;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::singular_bergman) return false;
    throw;
  }
}

CompactPoint embed_flat(const JordanElement& z) { return {z, JordanElement::zero(z.triple())}; }

JordanElement affine_chart(const CompactPoint& p) { return quasi_inverse(p.z, -p.a); }

JordanElement transvection(const JordanElement& w, Curvature eps, const JordanElement& z, double tol) {
  require_same_triple(w, z);
  if (eps == Curvature::flat) return z + w;
  const Complex e = sign(eps);
  const CMatrix root = hermitian_sqrt(bergman(w, -e * w).matrix(), tol);
  const JordanElement moved = quasi_inverse(z, e * w);
  return w + JordanElement::from_coords(w.triple(), root * moved.coords());
}

JordanElement exp_field(const JordanElement& v, Curvature eps, const JordanElement& z, double step, double tol) {
  require_same_triple(v, z);
  // Surfaces the cut-locus precondition before integrating.
  if (eps == Curvature::compact) (void)tan_epsilon(v, eps, tol);
  const JordanTriple t = v.triple();
  const double e = sign(eps);
  const CMatrix vv = v.value();
  const CMatrix vh = vv.adjoint();
  const MatrixField field = [vv, vh, e](const CMatrix& x) -> CMatrix { return vv + e * (x * vh * x); };
  return {t, rk4_flow(field, z.value(), 1.0, step)};
}

}  // namespace hsb
