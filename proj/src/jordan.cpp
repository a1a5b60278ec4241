#include "hsb/jordan.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hsb {

Curvature curvature_from_int(int eps) {
  switch (eps) {
    case -1: return Curvature::noncompact;
    case 0: return Curvature::flat;
    case 1: return Curvature::compact;
    default:
      throw Error(ErrorCode::invalid_argument, "epsilon must be -1, 0 or 1, got " + std::to_string(eps));
  }
}

JordanTriple::JordanTriple(int rows, int cols) : r(rows), s(cols) {
  if (r < 1 || s < 1)
    throw Error(ErrorCode::invalid_argument,
                "Jordan triple needs r, s >= 1 (got " + std::to_string(r) + "x" + std::to_string(s) + ")");
}

JordanElement::JordanElement(const JordanTriple& triple, CMatrix value)
    : triple_(triple), value_(std::move(value)) {
  if (value_.rows() != triple_.r || value_.cols() != triple_.s)
    throw Error(ErrorCode::shape_mismatch, "element of shape " + std::to_string(value_.rows()) + "x" +
                                               std::to_string(value_.cols()) + " in a " +
                                               std::to_string(triple_.r) + "x" +
                                               std::to_string(triple_.s) + " triple");
}

JordanElement JordanElement::zero(const JordanTriple& triple) {
  return {triple, CMatrix::Zero(triple.r, triple.s)};
}

JordanElement JordanElement::unit(const JordanTriple& triple, int k) {
  if (k < 0 || k >= triple.dim()) throw Error(ErrorCode::invalid_argument, "matrix unit index out of range");
  CMatrix m = CMatrix::Zero(triple.r, triple.s);
  m(k / triple.s, k % triple.s) = 1.0;
  return {triple, std::move(m)};
}

JordanElement JordanElement::from_coords(const JordanTriple& triple, const CVector& coords) {
  if (coords.size() != triple.dim()) throw Error(ErrorCode::shape_mismatch, "coordinate vector length");
  CMatrix m(triple.r, triple.s);
  for (int i = 0; i < triple.r; ++i)
    for (int j = 0; j < triple.s; ++j) m(i, j) = coords(i * triple.s + j);
  return {triple, std::move(m)};
}

CVector JordanElement::coords() const {
  CVector c(triple_.dim());
  for (int i = 0; i < triple_.r; ++i)
    for (int j = 0; j < triple_.s; ++j) c(i * triple_.s + j) = value_(i, j);
  return c;
}

JordanElement JordanElement::operator+(const JordanElement& other) const {
  require_same_triple(*this, other);
  return {triple_, value_ + other.value_};
}

JordanElement JordanElement::operator-(const JordanElement& other) const {
  require_same_triple(*this, other);
  return {triple_, value_ - other.value_};
}

void require_same_triple(const JordanElement& a, const JordanElement& b) {
  if (!(a.triple() == b.triple())) throw Error(ErrorCode::shape_mismatch, "elements of different triples");
}

ZOperator::ZOperator(const JordanTriple& triple, CMatrix matrix, bool conjugate)
    : triple_(triple), matrix_(std::move(matrix)), conjugate_(conjugate) {
  if (matrix_.rows() != triple_.dim() || matrix_.cols() != triple_.dim())
    throw Error(ErrorCode::shape_mismatch, "operator matrix must be dim(Z) x dim(Z)");
}

ZOperator ZOperator::identity(const JordanTriple& triple) {
  return {triple, CMatrix::Identity(triple.dim(), triple.dim())};
}

ZOperator ZOperator::zero(const JordanTriple& triple) {
  return {triple, CMatrix::Zero(triple.dim(), triple.dim())};
}

JordanElement ZOperator::apply(const JordanElement& w) const {
  if (!(w.triple() == triple_)) throw Error(ErrorCode::shape_mismatch, "operator applied to foreign element");
  const CVector x = conjugate_ ? CVector(w.coords().conjugate()) : w.coords();
  return JordanElement::from_coords(triple_, matrix_ * x);
}

ZOperator ZOperator::compose(const ZOperator& inner) const {
  if (!(inner.triple_ == triple_)) throw Error(ErrorCode::shape_mismatch, "composition across triples");
  // M1 k^c1 M2 k^c2 = M1 k^c1(M2) k^(c1 xor c2)
  const CMatrix m = conjugate_ ? CMatrix(matrix_ * inner.matrix_.conjugate()) : CMatrix(matrix_ * inner.matrix_);
  return {triple_, m, conjugate_ != inner.conjugate_};
}

ZOperator ZOperator::operator+(const ZOperator& other) const {
  if (!(other.triple_ == triple_) || other.conjugate_ != conjugate_)
    throw Error(ErrorCode::invalid_argument, "sum of operators of different linearity");
  return {triple_, matrix_ + other.matrix_, conjugate_};
}

ZOperator ZOperator::operator-(const ZOperator& other) const {
  if (!(other.triple_ == triple_) || other.conjugate_ != conjugate_)
    throw Error(ErrorCode::invalid_argument, "difference of operators of different linearity");
  return {triple_, matrix_ - other.matrix_, conjugate_};
}

JordanElement triple_product(const JordanElement& u, const JordanElement& v, const JordanElement& w) {
  require_same_triple(u, v);
  require_same_triple(u, w);
  const CMatrix vh = v.value().adjoint();
  return {u.triple(), 0.5 * (u.value() * vh * w.value() + w.value() * vh * u.value())};
}

ZOperator box(const JordanElement& u, const JordanElement& v) {
  require_same_triple(u, v);
  const JordanTriple& t = u.triple();
  const CMatrix left = u.value() * v.value().adjoint();             // r x r
  const CMatrix right = (v.value().adjoint() * u.value()).transpose();  // s x s
  const CMatrix m = 0.5 * (kron(left, CMatrix::Identity(t.s, t.s)) + kron(CMatrix::Identity(t.r, t.r), right));
  return {t, m};
}

ZOperator quadratic(const JordanElement& z) {
  const JordanTriple& t = z.triple();
  CMatrix m(t.dim(), t.dim());
  for (int k = 0; k < t.dim(); ++k) {
    const int i = k / t.s;
    const int j = k % t.s;
    // z e_k^H z = z(:, j) z(i, :)
    const CMatrix image = z.value().col(j) * z.value().row(i);
    m.col(k) = JordanElement(t, image).coords();
  }
  return {t, m, true};
}

double jordan_identity_residual(const JordanElement& u, const JordanElement& v, const JordanElement& z,
                                const JordanElement& w) {
  const CMatrix lhs = commutator(box(u, v).matrix(), box(z, w).matrix());
  const CMatrix rhs = box(triple_product(u, v, z), w).matrix() - box(z, triple_product(w, u, v)).matrix();
  return spectral_norm(lhs - rhs);
}

ZOperator bergman(const JordanElement& z, const JordanElement& w) {
  require_same_triple(z, w);
  const JordanTriple& t = z.triple();
  return ZOperator::identity(t) - Complex(2.0) * box(z, w) + quadratic(z).compose(quadratic(w));
}

JordanElement quasi_inverse(const JordanElement& z, const JordanElement& w, double min_rcond) {
  const ZOperator b = bergman(z, w);
  const double rc = reciprocal_condition(b.matrix());
  if (!(rc >= min_rcond))
    throw Error(ErrorCode::singular_bergman,
                "B(z, w) has reciprocal condition " + std::to_string(rc) + " (point at infinity)");
  const JordanElement rhs = z - quadratic(z).apply(w);
  const CVector x = b.matrix().partialPivLu().solve(rhs.coords());
  return JordanElement::from_coords(z.triple(), x);
}

JordanElement tan_epsilon(const JordanElement& v, Curvature eps, double tol) {
  if (eps == Curvature::flat) return v;
  Eigen::JacobiSVD<CMatrix> svd(v.value(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd sigma = svd.singularValues();
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (eps == Curvature::noncompact) {
      sigma(k) = std::tanh(sigma(k));
    } else {
      if (sigma(k) >= std::numbers::pi / 2 - tol)
        throw Error(ErrorCode::cut_locus, "singular value " + std::to_string(sigma(k)) + " >= pi/2");
      sigma(k) = std::tan(sigma(k));
    }
  }
  const CMatrix out = svd.matrixU() * sigma.cast<Complex>().asDiagonal() * svd.matrixV().adjoint();
  return {v.triple(), out};
}

}  // namespace hsb
