#include "hsb/lie.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hsb {

namespace {

bool is_anti_hermitian(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && frobenius_norm(m + m.adjoint()) <= tol * (1.0 + frobenius_norm(m));
}

double max_abs(const std::vector<Complex>& v) {
  double out = 0.0;
  for (const auto& x : v) out = std::max(out, std::abs(x));
  return out;
}

// Real design matrix of the k-basis operators, one column per basis element.
Eigen::MatrixXd k_design_matrix(const JordanTriple& triple) {
  const auto basis = k_basis(triple);
  const int d = triple.dim();
  Eigen::MatrixXd design(2 * d * d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const CMatrix m = basis[k].as_operator().matrix();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        design(i * d + j, static_cast<Eigen::Index>(k)) = m(i, j).real();
        design(d * d + i * d + j, static_cast<Eigen::Index>(k)) = m(i, j).imag();
      }
  }
  return design;
}

}  // namespace

Derivation::Derivation(const JordanTriple& triple, CMatrix a, CMatrix b, double tol)
    : triple_(triple), a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != triple_.r || a_.cols() != triple_.r || b_.rows() != triple_.s || b_.cols() != triple_.s)
    throw Error(ErrorCode::shape_mismatch, "derivation needs a in C^{r x r} and b in C^{s x s}");
  if (!is_anti_hermitian(a_, tol) || !is_anti_hermitian(b_, tol))
    throw Error(ErrorCode::invalid_argument, "derivation components must be anti-Hermitian");
}

Derivation Derivation::zero(const JordanTriple& triple) {
  return {triple, CMatrix::Zero(triple.r, triple.r), CMatrix::Zero(triple.s, triple.s)};
}

Derivation Derivation::canonical() const {
  const double t = b_.trace().imag() / triple_.s;
  CMatrix a = a_;
  CMatrix b = b_;
  a.diagonal().array() += I * t;
  b.diagonal().array() -= I * t;
  return {triple_, std::move(a), std::move(b)};
}

JordanElement Derivation::apply(const JordanElement& z) const {
  if (!(z.triple() == triple_)) throw Error(ErrorCode::shape_mismatch, "derivation applied to foreign element");
  return {triple_, a_ * z.value() + z.value() * b_};
}

ZOperator Derivation::as_operator() const {
  const CMatrix m = kron(a_, CMatrix::Identity(triple_.s, triple_.s)) +
                    kron(CMatrix::Identity(triple_.r, triple_.r), b_.transpose());
  return {triple_, m};
}

Eigen::VectorXd Derivation::coordinates() const {
  const Derivation c = canonical();
  const int r = triple_.r;
  const int s = triple_.s;
  Eigen::VectorXd out(k_dimension(triple_));
  int k = 0;
  for (int j = 0; j < r; ++j) out(k++) = c.a_(j, j).imag();
  for (int j = 0; j < r; ++j)
    for (int l = j + 1; l < r; ++l) {
      out(k++) = c.a_(j, l).real();
      out(k++) = c.a_(j, l).imag();
    }
  double partial = 0.0;
  for (int j = 0; j + 1 < s; ++j) {
    partial += c.b_(j, j).imag();
    out(k++) = partial;
  }
  for (int j = 0; j < s; ++j)
    for (int l = j + 1; l < s; ++l) {
      out(k++) = c.b_(j, l).real();
      out(k++) = c.b_(j, l).imag();
    }
  return out;
}

Derivation Derivation::from_coordinates(const JordanTriple& triple, const Eigen::VectorXd& coords) {
  if (coords.size() != k_dimension(triple))
    throw Error(ErrorCode::dimension_mismatch, "k coordinate vector has wrong length");
  const int r = triple.r;
  const int s = triple.s;
  CMatrix a = CMatrix::Zero(r, r);
  CMatrix b = CMatrix::Zero(s, s);
  int k = 0;
  for (int j = 0; j < r; ++j) a(j, j) += I * coords(k++);
  for (int j = 0; j < r; ++j)
    for (int l = j + 1; l < r; ++l) {
      const double x = coords(k++);
      const double y = coords(k++);
      a(j, l) += Complex(x, y);
      a(l, j) += Complex(-x, y);
    }
  for (int j = 0; j + 1 < s; ++j) {
    const double c = coords(k++);
    b(j, j) += I * c;
    b(j + 1, j + 1) -= I * c;
  }
  for (int j = 0; j < s; ++j)
    for (int l = j + 1; l < s; ++l) {
      const double x = coords(k++);
      const double y = coords(k++);
      b(j, l) += Complex(x, y);
      b(l, j) += Complex(-x, y);
    }
  return {triple, std::move(a), std::move(b)};
}

Derivation Derivation::operator+(const Derivation& other) const {
  if (!(other.triple_ == triple_)) throw Error(ErrorCode::shape_mismatch, "derivations of different triples");
  return {triple_, a_ + other.a_, b_ + other.b_};
}

Derivation Derivation::operator-(const Derivation& other) const {
  if (!(other.triple_ == triple_)) throw Error(ErrorCode::shape_mismatch, "derivations of different triples");
  return {triple_, a_ - other.a_, b_ - other.b_};
}

Derivation commutator(const Derivation& x, const Derivation& y) {
  if (!(x.triple() == y.triple())) throw Error(ErrorCode::shape_mismatch, "derivations of different triples");
  // The right factor acts by z -> z b, which reverses the order of products.
  return {x.triple(), commutator(x.a(), y.a()), commutator(y.b(), x.b())};
}

int k_dimension(const JordanTriple& triple) noexcept {
  return triple.r * triple.r + triple.s * triple.s - 1;
}

std::vector<Derivation> k_basis(const JordanTriple& triple) {
  const int m = k_dimension(triple);
  std::vector<Derivation> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.push_back(Derivation::from_coordinates(triple, Eigen::VectorXd::Unit(m, k)));
  return out;
}

double derivation_residual(const Derivation& d) {
  const JordanTriple& t = d.triple();
  std::vector<JordanElement> units;
  for (int k = 0; k < t.dim(); ++k) units.push_back(JordanElement::unit(t, k));
  double worst = 0.0;
  for (const auto& u : units)
    for (const auto& v : units)
      for (const auto& w : units) {
        const JordanElement lhs = d.apply(triple_product(u, v, w));
        const JordanElement rhs = triple_product(d.apply(u), v, w) + triple_product(u, d.apply(v), w) +
                                  triple_product(u, v, d.apply(w));
        worst = std::max(worst, frobenius_norm(lhs.value() - rhs.value()));
      }
  return worst;
}

Derivation derivation_from_operator(const ZOperator& op, double tol) {
  if (op.conjugate()) throw Error(ErrorCode::not_in_k, "conjugate-linear operator is not a derivation");
  const JordanTriple& t = op.triple();
  const int d = t.dim();
  const Eigen::MatrixXd design = k_design_matrix(t);
  Eigen::VectorXd target(2 * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      target(i * d + j) = op.matrix()(i, j).real();
      target(d * d + i * d + j) = op.matrix()(i, j).imag();
    }
  const Eigen::VectorXd coords = design.colPivHouseholderQr().solve(target);
  const double residual = (design * coords - target).norm();
  if (residual > tol * (1.0 + target.norm()))
    throw Error(ErrorCode::not_in_k, "operator is not a derivation (residual " + std::to_string(residual) + ")");
  return Derivation::from_coordinates(t, coords);
}

Derivation box_antisymmetrization(const JordanElement& u, const JordanElement& v) {
  require_same_triple(u, v);
  const CMatrix& x = u.value();
  const CMatrix& y = v.value();
  return {u.triple(), 0.5 * (x * y.adjoint() - y * x.adjoint()), 0.5 * (y.adjoint() * x - x.adjoint() * y)};
}

PolyField::PolyField(const JordanTriple& triple)
    : constant(CVector::Zero(triple.dim())),
      linear(CMatrix::Zero(triple.dim(), triple.dim())),
      quadratic(static_cast<std::size_t>(triple.dim() * triple.dim() * triple.dim())),
      cubic(static_cast<std::size_t>(triple.dim() * triple.dim() * triple.dim() * triple.dim())),
      triple_(triple) {}

CVector PolyField::evaluate(const CVector& z) const {
  const int d = dim();
  CVector out = constant + linear * z;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        out(i) += q(i, j, k) * z(j) * z(k);
        for (int l = 0; l < d; ++l) out(i) += t(i, j, k, l) * z(j) * z(k) * z(l);
      }
  return out;
}

CMatrix PolyField::jacobian(const CVector& z) const {
  const int d = dim();
  CMatrix out = linear;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        out(i, j) += 2.0 * q(i, j, k) * z(k);
        for (int l = 0; l < d; ++l) out(i, j) += 3.0 * t(i, j, k, l) * z(k) * z(l);
      }
  return out;
}

bool PolyField::has_cubic(double tol) const { return max_abs(cubic) > tol; }

void PolyField::symmetrize() {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        const Complex avg = 0.5 * (q(i, j, k) + q(i, k, j));
        q(i, j, k) = q(i, k, j) = avg;
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = j; k < d; ++k)
        for (int l = k; l < d; ++l) {
          const std::array<Complex*, 6> slots = {&t(i, j, k, l), &t(i, j, l, k), &t(i, k, j, l),
                                                 &t(i, k, l, j), &t(i, l, j, k), &t(i, l, k, j)};
          Complex sum = 0.0;
          for (auto* p : slots) sum += *p;
          const Complex avg = sum / 6.0;
          for (auto* p : slots) *p = avg;
        }
}

namespace {

// F'(z) G(z) for fields without cubic part.
PolyField apply_derivative(const PolyField& f, const PolyField& g) {
  const int d = f.dim();
  PolyField out(f.triple());
  out.constant = f.linear * g.constant;
  out.linear = f.linear * g.linear;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) out.linear(i, j) += 2.0 * f.q(i, j, k) * g.constant(k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Complex acc = 0.0;
        for (int m = 0; m < d; ++m) acc += f.linear(i, m) * g.q(m, j, k) + 2.0 * f.q(i, j, m) * g.linear(m, k);
        out.q(i, j, k) = acc;
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int m = 0; m < d; ++m) {
        const Complex fq = f.q(i, j, m);
        if (fq == 0.0) continue;
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) out.t(i, j, k, l) += 2.0 * fq * g.q(m, k, l);
      }
  out.symmetrize();
  return out;
}

}  // namespace

PolyField lie_bracket(const PolyField& x, const PolyField& y) {
  if (!(x.triple() == y.triple())) throw Error(ErrorCode::shape_mismatch, "bracket of fields on different spaces");
  if (x.has_cubic() || y.has_cubic()) throw Error(ErrorCode::invalid_argument, "bracket inputs must have degree <= 2");
  const PolyField yx = apply_derivative(y, x);
  const PolyField xy = apply_derivative(x, y);
  PolyField out(x.triple());
  out.constant = yx.constant - xy.constant;
  out.linear = yx.linear - xy.linear;
  for (std::size_t k = 0; k < out.quadratic.size(); ++k) out.quadratic[k] = yx.quadratic[k] - xy.quadratic[k];
  for (std::size_t k = 0; k < out.cubic.size(); ++k) out.cubic[k] = yx.cubic[k] - xy.cubic[k];
  return out;
}

GField::GField(Curvature eps, JordanElement v, Derivation delta)
    : eps_(eps), v_(std::move(v)), delta_(std::move(delta)) {
  if (!(v_.triple() == delta_.triple())) throw Error(ErrorCode::shape_mismatch, "GField parts on different triples");
}

GField GField::pure_p(Curvature eps, const JordanElement& v) { return {eps, v, Derivation::zero(v.triple())}; }

GField GField::pure_k(Curvature eps, const Derivation& delta) {
  return {eps, JordanElement::zero(delta.triple()), delta};
}

JordanElement GField::evaluate(const JordanElement& z) const {
  return v_ + delta_.apply(z) + Complex(sign(eps_)) * quadratic(z).apply(v_);
}

PolyField GField::polynomial() const {
  const JordanTriple& t = triple();
  const int d = t.dim();
  PolyField out(t);
  out.constant = v_.coords();
  out.linear = delta_.as_operator().matrix();
  if (eps_ != Curvature::flat) {
    const double e = sign(eps_);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const CVector c = triple_product(JordanElement::unit(t, j), v_, JordanElement::unit(t, k)).coords();
        for (int i = 0; i < d; ++i) out.q(i, j, k) = e * c(i);
      }
  }
  return out;
}

GField GField::operator+(const GField& other) const {
  if (other.eps_ != eps_) throw Error(ErrorCode::invalid_argument, "sum of fields of different curvature type");
  return {eps_, v_ + other.v_, delta_ + other.delta_};
}

GField GField::operator-(const GField& other) const {
  if (other.eps_ != eps_) throw Error(ErrorCode::invalid_argument, "difference of fields of different curvature type");
  return {eps_, v_ - other.v_, delta_ - other.delta_};
}

GField decompose_field(const PolyField& x, Curvature eps, double* residual, double tol) {
  const JordanTriple& t = x.triple();
  const JordanElement v = JordanElement::from_coords(t, x.constant);
  const Derivation delta = derivation_from_operator(ZOperator(t, x.linear), tol).canonical();
  GField g(eps, v, delta);
  if (residual != nullptr) {
    const PolyField expected = g.polynomial();
    double worst = frobenius_norm(x.linear - expected.linear);
    for (std::size_t k = 0; k < x.quadratic.size(); ++k)
      worst = std::max(worst, std::abs(x.quadratic[k] - expected.quadratic[k]));
    worst = std::max(worst, max_abs(x.cubic));
    *residual = worst;
  }
  return g;
}

GField g_bracket(const GField& xi, const GField& eta, double tol) {
  if (xi.epsilon() != eta.epsilon()) throw Error(ErrorCode::invalid_argument, "bracket across curvature types");
  const PolyField bracket = lie_bracket(xi.polynomial(), eta.polynomial());
  const double scale = 1.0 + frobenius_norm(bracket.linear) + bracket.constant.norm() + max_abs(bracket.quadratic);
  double residual = 0.0;
  try {
    GField out = decompose_field(bracket, xi.epsilon(), &residual, tol);
    if (residual > tol * scale)
      throw Error(ErrorCode::closure_violation, "bracket leaves g^eps (residual " + std::to_string(residual) + ")");
    return out;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_in_k) throw Error(ErrorCode::closure_violation, e.what());
    throw;
  }
}

}  // namespace hsb
