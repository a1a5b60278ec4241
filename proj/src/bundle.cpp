#include "hsb/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hsb {

namespace {

void require_square(const CMatrix& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + " must be " + std::to_string(n) + "x" +
                                                   std::to_string(n));
}

void require_images(const std::vector<CMatrix>& images, std::size_t count, int n, const char* what) {
  if (images.size() != count)
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": expected " + std::to_string(count) +
                                                   " images, got " + std::to_string(images.size()));
  for (const auto& m : images) require_square(m, n, what);
}

void require_compatible(const DfMap& df, const JordanTriple& triple, int n) {
  if (!(df.triple() == triple) || df.n() != n)
    throw Error(ErrorCode::dimension_mismatch, "df and the map it acts with live on different spaces");
}

}  // namespace

HStructure::HStructure(int size, bool is_hermitian) : n(size), hermitian(is_hermitian) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "fibre dimension n must be >= 1");
}

DfMap::DfMap(const JordanTriple& triple, int n, std::vector<CMatrix> images)
    : triple_(triple), n_(n), images_(std::move(images)) {
  require_images(images_, static_cast<std::size_t>(k_dimension(triple_)), n_, "df");
}

DfMap DfMap::zero(const JordanTriple& triple, int n) {
  return {triple, n, std::vector<CMatrix>(static_cast<std::size_t>(k_dimension(triple)), CMatrix::Zero(n, n))};
}

HElement DfMap::operator()(const Derivation& x) const {
  if (!(x.triple() == triple_)) throw Error(ErrorCode::dimension_mismatch, "df applied to a foreign derivation");
  const Eigen::VectorXd c = x.coordinates();
  CMatrix out = CMatrix::Zero(n_, n_);
  for (Eigen::Index k = 0; k < c.size(); ++k) out += c(k) * images_[static_cast<std::size_t>(k)];
  return out;
}

double DfMap::homomorphism_residual() const {
  const auto basis = k_basis(triple_);
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const CMatrix lhs = (*this)(commutator(basis[i], basis[j]));
      const CMatrix rhs = commutator(images_[i], images_[j]);
      worst = std::max(worst, frobenius_norm(lhs - rhs));
    }
  return worst;
}

double DfMap::hermitian_range_residual() const {
  double worst = 0.0;
  for (const auto& m : images_) worst = std::max(worst, frobenius_norm(m + m.adjoint()));
  return worst;
}

DfMap df_from_representation(const JordanTriple& triple, std::span<const RepSummand> summands) {
  auto block_size = [&](RepKind kind) {
    switch (kind) {
      case RepKind::trivial: return 1;
      case RepKind::left:
      case RepKind::left_dual: return triple.r;
      case RepKind::right:
      case RepKind::right_dual: return triple.s;
    }
    return 1;
  };
  int n = 0;
  for (const auto& s : summands) n += block_size(s.kind);
  if (n == 0) throw Error(ErrorCode::invalid_argument, "representation needs at least one summand");

  std::vector<CMatrix> images;
  for (const auto& x : k_basis(triple)) {
    const Derivation c = x.canonical();
    const Complex trace_a = c.a().trace();
    CMatrix image = CMatrix::Zero(n, n);
    int offset = 0;
    for (const auto& s : summands) {
      const int size = block_size(s.kind);
      CMatrix block;
      switch (s.kind) {
        case RepKind::trivial: block = CMatrix::Zero(1, 1); break;
        case RepKind::left: block = c.a(); break;
        case RepKind::left_dual: block = c.a().conjugate(); break;
        case RepKind::right: block = c.b().transpose(); break;
        case RepKind::right_dual: block = -c.b(); break;
      }
      block += s.charge * trace_a * CMatrix::Identity(size, size);
      image.block(offset, offset, size, size) = block;
      offset += size;
    }
    images.push_back(std::move(image));
  }
  return {triple, n, std::move(images)};
}

BetaMap::BetaMap(const JordanTriple& triple, int n, std::vector<CMatrix> images)
    : triple_(triple), n_(n), images_(std::move(images)) {
  require_images(images_, static_cast<std::size_t>(triple_.dim()), n_, "beta");
}

BetaMap BetaMap::zero(const JordanTriple& triple, int n) {
  return {triple, n, std::vector<CMatrix>(static_cast<std::size_t>(triple.dim()), CMatrix::Zero(n, n))};
}

HElement BetaMap::operator()(const JordanElement& v) const {
  if (!(v.triple() == triple_)) throw Error(ErrorCode::dimension_mismatch, "beta applied to a foreign element");
  const CVector c = v.coords();
  CMatrix out = CMatrix::Zero(n_, n_);
  for (Eigen::Index k = 0; k < c.size(); ++k) out += std::conj(c(k)) * images_[static_cast<std::size_t>(k)];
  return out;
}

JordanElement real_basis(const JordanTriple& triple, int p) {
  const int d = triple.dim();
  if (p < 0 || p >= 2 * d) throw Error(ErrorCode::invalid_argument, "real basis index out of range");
  return p < d ? JordanElement::unit(triple, p) : I * JordanElement::unit(triple, p - d);
}

RealLinearMap::RealLinearMap(const JordanTriple& triple, int n, std::vector<CMatrix> images)
    : triple_(triple), n_(n), images_(std::move(images)) {
  require_images(images_, static_cast<std::size_t>(2 * triple_.dim()), n_, "real-linear map");
}

HElement RealLinearMap::operator()(const JordanElement& v) const {
  if (!(v.triple() == triple_)) throw Error(ErrorCode::dimension_mismatch, "map applied to a foreign element");
  const CVector c = v.coords();
  const int d = triple_.dim();
  CMatrix out = CMatrix::Zero(n_, n_);
  for (int k = 0; k < d; ++k) {
    out += c(k).real() * images_[static_cast<std::size_t>(k)];
    out += c(k).imag() * images_[static_cast<std::size_t>(d + k)];
  }
  return out;
}

AlphaMap::AlphaMap(const JordanTriple& triple, int n, std::vector<CMatrix> images, double tol)
    : RealLinearMap(triple, n, std::move(images)) {
  for (const auto& m : this->images())
    if (frobenius_norm(m + m.adjoint()) > tol * (1.0 + frobenius_norm(m)))
      throw Error(ErrorCode::not_hermitian_structure, "alpha must take values in u(n)");
}

void ClassificationDatum::validate() const {
  require_compatible(df, triple, h.n);
  if (!(beta.triple() == triple) || beta.n() != h.n)
    throw Error(ErrorCode::dimension_mismatch, "beta does not match the datum's triple and fibre");
}

double covariance_residual(const DfMap& df, const BetaMap& beta) {
  require_compatible(df, beta.triple(), beta.n());
  const JordanTriple& t = beta.triple();
  double worst = 0.0;
  for (const auto& x : k_basis(t)) {
    const CMatrix fx = df(x);
    for (int k = 0; k < t.dim(); ++k) {
      const JordanElement v = JordanElement::unit(t, k);
      worst = std::max(worst, frobenius_norm(commutator(fx, beta(v)) - beta(x.apply(v))));
    }
  }
  return worst;
}

double covariance_residual(const DfMap& df, const RealLinearMap& m) {
  require_compatible(df, m.triple(), m.n());
  const JordanTriple& t = m.triple();
  double worst = 0.0;
  for (const auto& x : k_basis(t)) {
    const CMatrix fx = df(x);
    for (int p = 0; p < 2 * t.dim(); ++p) {
      const JordanElement v = real_basis(t, p);
      worst = std::max(worst, frobenius_norm(commutator(fx, m(v)) - m(x.apply(v))));
    }
  }
  return worst;
}

BetaMap gamma_to_beta(const GammaMap& gamma) {
  const JordanTriple& t = gamma.triple();
  std::vector<CMatrix> images;
  for (int k = 0; k < t.dim(); ++k) {
    const JordanElement e = JordanElement::unit(t, k);
    images.push_back(I * gamma(e) - gamma(I * e));
  }
  return {t, gamma.n(), std::move(images)};
}

GammaMap beta_to_gamma(const BetaMap& beta) {
  const JordanTriple& t = beta.triple();
  std::vector<CMatrix> images;
  for (int p = 0; p < 2 * t.dim(); ++p) images.push_back(Complex(0.0, -0.5) * beta(real_basis(t, p)));
  return {t, beta.n(), std::move(images)};
}

BetaMap alpha_to_beta(const AlphaMap& alpha) {
  const JordanTriple& t = alpha.triple();
  std::vector<CMatrix> images;
  for (int k = 0; k < t.dim(); ++k) {
    const JordanElement e = JordanElement::unit(t, k);
    images.push_back(I * alpha(e) - alpha(I * e));
  }
  return {t, alpha.n(), std::move(images)};
}

AlphaMap beta_to_alpha(const BetaMap& beta, const HStructure& h) {
  if (!h.hermitian) throw Error(ErrorCode::not_hermitian_structure, "beta_to_alpha needs a hermitian structure");
  if (h.n != beta.n()) throw Error(ErrorCode::dimension_mismatch, "beta and H have different n");
  const JordanTriple& t = beta.triple();
  std::vector<CMatrix> images;
  for (int p = 0; p < 2 * t.dim(); ++p) {
    const CMatrix b = beta(real_basis(t, p));
    images.push_back((b + b.adjoint()) / Complex(0.0, 2.0));
  }
  return {t, beta.n(), std::move(images)};
}

HElement tautological_form_base(const GField& gamma, const HElement& eta, const DfMap& df) {
  if (!(gamma.triple() == df.triple())) throw Error(ErrorCode::dimension_mismatch, "gamma and df on different triples");
  require_square(eta, df.n(), "eta");
  return df(project_k(gamma)) + eta;
}

HElement curvature_tautological(const DfMap& df, const JordanElement& u, const JordanElement& v, Curvature eps,
                                double tol) {
  require_same_triple(u, v);
  if (!(u.triple() == df.triple())) throw Error(ErrorCode::dimension_mismatch, "df and tangent vectors differ");
  if (eps == Curvature::flat) return CMatrix::Zero(df.n(), df.n());
  const Derivation d = derivation_from_operator(box(u, v) - box(v, u), tol);
  return -sign(eps) * df(d);
}

HElement curvature_invariant(const DfMap& df, const GammaMap& gamma, const JordanElement& u, const JordanElement& v,
                             Curvature eps, double tol) {
  require_compatible(df, gamma.triple(), gamma.n());
  return curvature_tautological(df, u, v, eps, tol) + 0.5 * commutator(gamma(u), gamma(v));
}

BilinearForm::BilinearForm(const JordanTriple& triple, int n, std::vector<CMatrix> values)
    : triple_(triple), n_(n), values_(std::move(values)) {
  const auto m = static_cast<std::size_t>(2 * triple_.dim());
  require_images(values_, m * m, n_, "bilinear form");
}

HElement BilinearForm::operator()(const JordanElement& u, const JordanElement& v) const {
  require_same_triple(u, v);
  const int d = triple_.dim();
  auto real_coords = [d](const JordanElement& x) {
    const CVector c = x.coords();
    Eigen::VectorXd out(2 * d);
    for (int k = 0; k < d; ++k) {
      out(k) = c(k).real();
      out(d + k) = c(k).imag();
    }
    return out;
  };
  const Eigen::VectorXd x = real_coords(u);
  const Eigen::VectorXd y = real_coords(v);
  CMatrix out = CMatrix::Zero(n_, n_);
  for (int p = 0; p < 2 * d; ++p) {
    if (x(p) == 0.0) continue;
    for (int q = 0; q < 2 * d; ++q)
      if (y(q) != 0.0) out += (x(p) * y(q)) * at(p, q);
  }
  return out;
}

double BilinearForm::max_norm() const {
  double worst = 0.0;
  for (const auto& m : values_) worst = std::max(worst, frobenius_norm(m));
  return worst;
}

BilinearForm part_02(const BilinearForm& t) {
  return BilinearForm::tabulate(t.triple(), t.n(), [&t](const JordanElement& u, const JordanElement& v) {
    const JordanElement iu = I * u;
    const JordanElement iv = I * v;
    return CMatrix(t(u, v) + I * t(iu, v) + I * t(u, iv) - t(iu, iv));
  });
}

BilinearForm tautological_curvature_form(const DfMap& df, Curvature eps, double tol) {
  return BilinearForm::tabulate(df.triple(), df.n(), [&](const JordanElement& u, const JordanElement& v) {
    return curvature_tautological(df, u, v, eps, tol);
  });
}

BilinearForm invariant_curvature_form(const DfMap& df, const GammaMap& gamma, Curvature eps, double tol) {
  return BilinearForm::tabulate(df.triple(), df.n(), [&](const JordanElement& u, const JordanElement& v) {
    return curvature_invariant(df, gamma, u, v, eps, tol);
  });
}

HElement nijenhuis_base(const BetaMap& beta, const JordanElement& u, const JordanElement& v) {
  return 0.25 * commutator(beta(u), beta(v));
}

namespace {

void enforce_covariance(double residual, double tol, CovarianceGate gate) {
  if (gate == CovarianceGate::enforce && !(residual <= tol))
    throw Error(ErrorCode::covariance_violation,
                "beta is not df-covariant (residual " + std::to_string(residual) + ")");
}

}  // namespace

HElement nijenhuis_base(const ClassificationDatum& datum, const JordanElement& u, const JordanElement& v, double tol,
                        CovarianceGate gate) {
  datum.validate();
  if (gate == CovarianceGate::enforce) enforce_covariance(covariance_residual(datum.df, datum.beta), tol, gate);
  return nijenhuis_base(datum.beta, u, v);
}

IntegrabilityResiduals integrability_residuals(const DfMap& df, const BetaMap& beta, const HStructure& h,
                                               Curvature eps, double tol) {
  require_compatible(df, beta.triple(), beta.n());
  const JordanTriple& t = beta.triple();
  const int d = t.dim();
  IntegrabilityResiduals out;
  out.eps = eps;

  const auto& b = beta.images();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out.bracket = std::max(out.bracket, frobenius_norm(commutator(b[static_cast<std::size_t>(i)],
                                                                    b[static_cast<std::size_t>(j)])));

  const GammaMap gamma = beta_to_gamma(beta);
  out.nijenhuis = part_02(invariant_curvature_form(df, gamma, eps, tol)).max_norm();
  out.tautological_02 = part_02(tautological_curvature_form(df, eps, tol)).max_norm();

  for (int p = 0; p < 2 * d; ++p)
    for (int q = 0; q < 2 * d; ++q)
      out.nijenhuis_base = std::max(
          out.nijenhuis_base, frobenius_norm(nijenhuis_base(beta, real_basis(t, p), real_basis(t, q))));

  if (h.hermitian) {
    const AlphaMap alpha = beta_to_alpha(beta, h);
    double worst = 0.0;
    for (int p = 0; p < 2 * d; ++p)
      for (int q = 0; q < 2 * d; ++q) {
        const JordanElement u = real_basis(t, p);
        const JordanElement v = real_basis(t, q);
        const CMatrix lhs = commutator(alpha(u), alpha(v));
        const CMatrix rhs = commutator(alpha(I * u), alpha(I * v));
        worst = std::max(worst, frobenius_norm(lhs - rhs));
      }
    out.hermitian = worst;
  }
  return out;
}

IntegrabilityReport integrability_check(const ClassificationDatum& datum, Curvature eps, double tol,
                                        CovarianceGate gate) {
  datum.validate();
  IntegrabilityReport report;
  report.covariance_residual = covariance_residual(datum.df, datum.beta);
  enforce_covariance(report.covariance_residual, tol, gate);

  for (Curvature e : all_curvatures) {
    report.per_epsilon.push_back(integrability_residuals(datum.df, datum.beta, datum.h, e, tol));
    if (e == eps) report.residuals = report.per_epsilon.back();
  }
  const auto& r = report.residuals;
  report.bracket_residual = r.bracket;
  report.nijenhuis_residual = r.nijenhuis;
  report.integrable = r.bracket < tol;

  report.consistent = (r.nijenhuis < tol) == report.integrable && (r.nijenhuis_base < tol) == report.integrable;
  if (r.hermitian) report.consistent = report.consistent && ((*r.hermitian < tol) == report.integrable);

  report.epsilon_independent = true;
  for (const auto& other : report.per_epsilon) {
    const bool same_eps_free = other.bracket == r.bracket && other.nijenhuis_base == r.nijenhuis_base &&
                               other.hermitian == r.hermitian;
    const bool same_verdict = (other.bracket < tol) == report.integrable && (other.nijenhuis < tol) == (r.nijenhuis < tol);
    const bool close = std::abs(other.nijenhuis - r.nijenhuis) <= tol;
    report.epsilon_independent = report.epsilon_independent && same_eps_free && same_verdict && close;
  }
  return report;
}

ClassificationDatum gauge_transform(const ClassificationDatum& datum, const CMatrix& l, double tol) {
  datum.validate();
  const int n = datum.h.n;
  if (l.rows() != n || l.cols() != n) throw Error(ErrorCode::dimension_mismatch, "gauge element must be n x n");
  if (reciprocal_condition(l) < 1e-12) throw Error(ErrorCode::singular_gauge, "gauge element is singular");
  if (datum.h.hermitian && frobenius_norm(l.adjoint() * l - CMatrix::Identity(n, n)) > tol * n)
    throw Error(ErrorCode::not_unitary, "hermitian data needs a unitary gauge element");
  const CMatrix l_inv = datum.h.hermitian ? CMatrix(l.adjoint()) : inverse(l);
  auto conj = [&](const std::vector<CMatrix>& images) {
    std::vector<CMatrix> out;
    out.reserve(images.size());
    for (const auto& m : images) out.push_back(l * m * l_inv);
    return out;
  };
  return {datum.triple, datum.h, DfMap(datum.triple, n, conj(datum.df.images())),
          BetaMap(datum.triple, n, conj(datum.beta.images()))};
}

std::vector<Complex> orbit_fingerprint(const ClassificationDatum& datum, int max_word_len) {
  if (max_word_len < 1) throw Error(ErrorCode::invalid_argument, "max_word_len must be >= 1");
  datum.validate();
  std::vector<CMatrix> alphabet = datum.beta.images();
  alphabet.insert(alphabet.end(), datum.df.images().begin(), datum.df.images().end());
  const int letters = static_cast<int>(alphabet.size());
  const int n = datum.h.n;

  std::vector<Complex> out;
  // Products of the current length in lexicographic order; extended on the right.
  std::vector<CMatrix> level{CMatrix::Identity(n, n)};
  for (int len = 1; len <= max_word_len; ++len) {
    std::vector<CMatrix> next;
    next.reserve(level.size() * static_cast<std::size_t>(letters));
    for (const auto& prefix : level)
      for (int a = 0; a < letters; ++a) {
        next.push_back(prefix * alphabet[static_cast<std::size_t>(a)]);
        out.push_back(next.back().trace());
      }
    level = std::move(next);
  }
  return out;
}

ClassificationDatum dualize(const ClassificationDatum& datum, Curvature from, Curvature to) {
  (void)from;
  (void)to;
  datum.validate();
  return datum;
}

std::vector<BetaMap> covariant_beta_basis(const DfMap& df, double tol) {
  const JordanTriple& t = df.triple();
  const int d = t.dim();
  const int n = df.n();
  const int block = n * n;
  const int unknowns = 2 * d * block;  // real and imaginary parts of B_0 .. B_{d-1}
  const auto basis = k_basis(t);

  auto beta_from_unknowns = [&](const Eigen::VectorXd& x) {
    std::vector<CMatrix> images;
    for (int i = 0; i < d; ++i) {
      CMatrix m(n, n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const int k = i * block + p * n + q;
          m(p, q) = Complex(x(2 * k), x(2 * k + 1));
        }
      images.push_back(std::move(m));
    }
    return BetaMap(t, n, std::move(images));
  };

  const int rows_per = 2 * block;
  Eigen::MatrixXd system(static_cast<Eigen::Index>(basis.size()) * d * rows_per, unknowns);
  for (int u = 0; u < unknowns; ++u) {
    const BetaMap beta = beta_from_unknowns(Eigen::VectorXd::Unit(unknowns, u));
    int row = 0;
    for (const auto& x : basis) {
      const CMatrix fx = df(x);
      for (int k = 0; k < d; ++k) {
        const JordanElement v = JordanElement::unit(t, k);
        const CMatrix defect = commutator(fx, beta(v)) - beta(x.apply(v));
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            system(row++, u) = defect(p, q).real();
            system(row++, u) = defect(p, q).imag();
          }
      }
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<BetaMap> out;
  for (int k = 0; k < unknowns; ++k) {
    const double value = k < sv.size() ? sv(k) : 0.0;
    if (value <= tol * std::max(1.0, top)) out.push_back(beta_from_unknowns(svd.matrixV().col(k)));
  }
  return out;
}

}  // namespace hsb
