#pragma once

// The hermitian Jordan triple Z = C^{r x s} with {u v* w} = (u v^H w + w v^H u) / 2.
//
// Coordinates on Z are the row-major matrix units e_{ij}: index k = i * s + j.

#include "hsb/numerics.hpp"

namespace hsb {

/// Curvature type of the symmetric space built on Z.
enum class Curvature : int { noncompact = -1, flat = 0, compact = 1 };

inline constexpr Curvature all_curvatures[] = {Curvature::noncompact, Curvature::flat,
                                              Curvature::compact};

inline double sign(Curvature eps) noexcept { return static_cast<double>(static_cast<int>(eps)); }
Curvature curvature_from_int(int eps);

struct JordanTriple {
  int r = 1;
  int s = 1;

  JordanTriple() = default;
  JordanTriple(int rows, int cols);

  int dim() const noexcept { return r * s; }
  friend bool operator==(const JordanTriple&, const JordanTriple&) = default;
};

class JordanElement {
public:
  JordanElement(const JordanTriple& triple, CMatrix value);

  static JordanElement zero(const JordanTriple& triple);
  /// Matrix unit e_k in row-major order.
  static JordanElement unit(const JordanTriple& triple, int k);
  static JordanElement from_coords(const JordanTriple& triple, const CVector& coords);

  const JordanTriple& triple() const noexcept { return triple_; }
  const CMatrix& value() const noexcept { return value_; }
  CVector coords() const;
  double norm() const { return spectral_norm(value_); }

  JordanElement operator+(const JordanElement& other) const;
  JordanElement operator-(const JordanElement& other) const;
  JordanElement operator-() const { return {triple_, -value_}; }
  friend JordanElement operator*(Complex lambda, const JordanElement& x) {
    return {x.triple_, lambda * x.value_};
  }

private:
  JordanTriple triple_;
  CMatrix value_;
};

void require_same_triple(const JordanElement& a, const JordanElement& b);

/// Linear or conjugate-linear operator on Z, stored on row-major coordinates.
/// A conjugate operator acts as w -> matrix * conj(coords(w)).
class ZOperator {
public:
  ZOperator(const JordanTriple& triple, CMatrix matrix, bool conjugate = false);

  static ZOperator identity(const JordanTriple& triple);
  static ZOperator zero(const JordanTriple& triple);

  const JordanTriple& triple() const noexcept { return triple_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  bool conjugate() const noexcept { return conjugate_; }

  JordanElement apply(const JordanElement& w) const;
  /// (*this) o (inner).
  ZOperator compose(const ZOperator& inner) const;

  ZOperator operator+(const ZOperator& other) const;
  ZOperator operator-(const ZOperator& other) const;
  friend ZOperator operator*(Complex lambda, const ZOperator& op) {
    return {op.triple_, lambda * op.matrix_, op.conjugate_};
  }

private:
  JordanTriple triple_;
  CMatrix matrix_;
  bool conjugate_;
};

JordanElement triple_product(const JordanElement& u, const JordanElement& v,
                             const JordanElement& w);

/// u box v*: w -> {u v* w}.
ZOperator box(const JordanElement& u, const JordanElement& v);

/// Q_z: w -> {z w* z}; conjugate-linear.
ZOperator quadratic(const JordanElement& z);

/// Spectral norm of [u#v*, z#w*] - ({uv*z}#w* - z#{wu*v}*).
double jordan_identity_residual(const JordanElement& u, const JordanElement& v,
                                const JordanElement& z, const JordanElement& w);

/// B_{z,w} = id - 2 z#w* + Q_z Q_w.
ZOperator bergman(const JordanElement& z, const JordanElement& w);

inline constexpr double default_min_rcond = 1e-12;

/// z^w = B_{z,w}^{-1} (z - Q_z w). Throws singular_bergman when B_{z,w} is
/// numerically singular (reciprocal condition below `min_rcond`).
JordanElement quasi_inverse(const JordanElement& z, const JordanElement& w,
                            double min_rcond = default_min_rcond);

/// Odd functional calculus on singular values: tanh, id or tan for eps = -1, 0, +1.
/// Throws cut_locus for eps = +1 when a singular value reaches pi/2 - tol.
JordanElement tan_epsilon(const JordanElement& v, Curvature eps, double tol = default_tol);

}  // namespace hsb
