#pragma once

// Jordan triple derivations k and the polynomial vector fields g^eps = k + p^eps.

#include <vector>

#include "hsb/jordan.hpp"

namespace hsb {

/// Derivation z -> a z + z b with a in u(r), b in u(s).
///
/// The pair is determined by its action only up to (a + itI, b - itI); `canonical()`
/// picks the representative with trace(b) = 0.
class Derivation {
public:
  Derivation(const JordanTriple& triple, CMatrix a, CMatrix b, double tol = default_tol);

  static Derivation zero(const JordanTriple& triple);
  /// Inverse of `coordinates()`.
  static Derivation from_coordinates(const JordanTriple& triple, const Eigen::VectorXd& coords);

  const JordanTriple& triple() const noexcept { return triple_; }
  const CMatrix& a() const noexcept { return a_; }
  const CMatrix& b() const noexcept { return b_; }

  Derivation canonical() const;
  JordanElement apply(const JordanElement& z) const;
  /// Matrix a (x) I + I (x) b^T on row-major coordinates.
  ZOperator as_operator() const;
  /// Real coordinates with respect to k_basis(triple()).
  Eigen::VectorXd coordinates() const;

  Derivation operator+(const Derivation& other) const;
  Derivation operator-(const Derivation& other) const;
  friend Derivation operator*(double t, const Derivation& x) {
    return {x.triple_, t * x.a_, t * x.b_};
  }

private:
  JordanTriple triple_;
  CMatrix a_;
  CMatrix b_;
};

/// Operator commutator x o y - y o x, i.e. ([a1, a2], [b2, b1]).
Derivation commutator(const Derivation& x, const Derivation& y);

/// Fixed real basis of k, r^2 + s^2 - 1 elements:
///   u(r) with b = 0: i E_jj (j = 1..r), then for j < k: E_jk - E_kj and i(E_jk + E_kj);
///   su(s) with a = 0: i(E_jj - E_{j+1,j+1}) (j = 1..s-1), then the same off-diagonal pairs.
std::vector<Derivation> k_basis(const JordanTriple& triple);

int k_dimension(const JordanTriple& triple) noexcept;

/// Max over basis triples of |d{uv*w} - {(du)v*w} - {u(dv)*w} - {uv*(dw)}|.
double derivation_residual(const Derivation& d);

/// Solves a z + z b = T z for a complex-linear T. Throws not_in_k if T is not
/// a derivation within `tol` (relative to 1 + |T|).
Derivation derivation_from_operator(const ZOperator& op, double tol = default_tol);

/// u#v* - v#u* as a derivation, in closed form: a = (uv^H - vu^H)/2, b = (v^H u - u^H v)/2.
Derivation box_antisymmetrization(const JordanElement& u, const JordanElement& v);

/// Holomorphic polynomial vector field of degree <= 3 in row-major coordinates.
///   X(z)_i = c_i + L_ij z_j + q_ijk z_j z_k + t_ijkl z_j z_k z_l
/// with q symmetric in (j,k) and t symmetric in (j,k,l).
class PolyField {
public:
  explicit PolyField(const JordanTriple& triple);

  const JordanTriple& triple() const noexcept { return triple_; }
  int dim() const noexcept { return triple_.dim(); }

  CVector constant;
  CMatrix linear;
  std::vector<Complex> quadratic;  // index (i * d + j) * d + k
  std::vector<Complex> cubic;      // index ((i * d + j) * d + k) * d + l

  Complex& q(int i, int j, int k) { return quadratic[(i * dim() + j) * dim() + k]; }
  Complex q(int i, int j, int k) const { return quadratic[(i * dim() + j) * dim() + k]; }
  Complex& t(int i, int j, int k, int l) { return cubic[((i * dim() + j) * dim() + k) * dim() + l]; }
  Complex t(int i, int j, int k, int l) const {
    return cubic[((i * dim() + j) * dim() + k) * dim() + l];
  }

  CVector evaluate(const CVector& z) const;
  /// Derivative X'(z) as a d x d matrix.
  CMatrix jacobian(const CVector& z) const;
  bool has_cubic(double tol = 0.0) const;
  void symmetrize();

private:
  JordanTriple triple_;
};

/// Vector-field bracket [X, Y] = Y' X - X' Y (the commutator of X and Y as derivations
/// of functions). Both inputs must have zero cubic part.
PolyField lie_bracket(const PolyField& x, const PolyField& y);

/// Element v + delta(z) + eps Q_z v of g^eps.
class GField {
public:
  GField(Curvature eps, JordanElement v, Derivation delta);

  static GField pure_p(Curvature eps, const JordanElement& v);
  static GField pure_k(Curvature eps, const Derivation& delta);

  Curvature epsilon() const noexcept { return eps_; }
  const JordanTriple& triple() const noexcept { return v_.triple(); }
  const JordanElement& v() const noexcept { return v_; }
  const Derivation& delta() const noexcept { return delta_; }

  JordanElement evaluate(const JordanElement& z) const;
  PolyField polynomial() const;

  GField operator+(const GField& other) const;
  GField operator-(const GField& other) const;
  friend GField operator*(double t, const GField& x) {
    return {x.eps_, Complex(t) * x.v_, t * x.delta_};
  }

private:
  Curvature eps_;
  JordanElement v_;
  Derivation delta_;
};

/// Splits a polynomial field into (v, delta) and reports how far it is from
/// v + delta(z) + eps Q_z v (quadratic mismatch plus cubic remainder).
GField decompose_field(const PolyField& x, Curvature eps, double* residual, double tol = default_tol);

/// [xi, eta] computed exactly on coefficient tensors. Throws closure_violation when
/// the result is not in g^eps within `tol`.
GField g_bracket(const GField& xi, const GField& eta, double tol = default_tol);

/// Linear part at the origin.
inline Derivation project_k(const GField& xi) { return xi.delta(); }

}  // namespace hsb
