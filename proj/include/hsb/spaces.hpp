#pragma once

// The dual models M^eps over Z: the bounded domain (eps = -1), Z itself (eps = 0)
// and the conformal compactification (eps = +1) described by charts [z, a].

#include "hsb/jordan.hpp"

namespace hsb {

/// Point of the bounded domain: spectral norm < 1.
class DomainPoint {
public:
  /// Throws invalid_argument unless |z| < 1 - tol and det B(z, z) > 0.
  explicit DomainPoint(JordanElement z, double tol = default_tol);

  static bool contains(const JordanElement& z, double tol = default_tol);

  const JordanElement& z() const noexcept { return z_; }

private:
  JordanElement z_;
};

/// Class [z, a] of the compact dual; [z, a] = [z^{b-a}, b].
struct CompactPoint {
  JordanElement z;
  JordanElement a;
};

/// True iff B(p.z, p.a - q.a) is invertible and p.z^{q.a - p.a} equals q.z within tol.
/// A singular chart change means "not equivalent through this chart" and yields false.
bool compact_equivalent(const CompactPoint& p, const CompactPoint& q, double tol = default_tol);

/// z -> [z, 0].
CompactPoint embed_flat(const JordanElement& z);

/// Affine representative z^{-a} of [z, a]; throws singular_bergman at points at infinity.
JordanElement affine_chart(const CompactPoint& p);

/// w + B_{w,-eps w}^{1/2} z^{eps w}.
JordanElement transvection(const JordanElement& w, Curvature eps, const JordanElement& z,
                           double tol = default_tol);

inline constexpr double default_flow_step = 1e-3;

/// Time-1 flow of z -> v + eps Q_z v starting at z, by RK4.
JordanElement exp_field(const JordanElement& v, Curvature eps, const JordanElement& z,
                        double step = default_flow_step, double tol = default_tol);

}  // namespace hsb
