#pragma once

// Base-point classification data of invariant holomorphic hermitian principal
// H-bundles over the symmetric spaces M^eps, H = GL_n(C), L = U(n).
//
// Everything here lives at the base point: a homomorphism K -> H enters through its
// differential df on the basis k_basis(triple), and complexions through an
// anti-linear map beta: Z -> gl_n given by its values B_i = beta(e_i).

#include <optional>
#include <span>
#include <vector>

#include "hsb/lie.hpp"

namespace hsb {

struct HStructure {
  int n = 1;
  bool hermitian = true;

  HStructure() = default;
  HStructure(int size, bool is_hermitian);
};

/// Element of gl_n.
using HElement = CMatrix;

/// The Lie algebra map df: k -> gl_n, stored as images of k_basis(triple).
class DfMap {
public:
  DfMap(const JordanTriple& triple, int n, std::vector<CMatrix> images);

  static DfMap zero(const JordanTriple& triple, int n);

  const JordanTriple& triple() const noexcept { return triple_; }
  int n() const noexcept { return n_; }
  const std::vector<CMatrix>& images() const noexcept { return images_; }

  HElement operator()(const Derivation& x) const;

  /// Max over basis pairs of |df[X, Y] - [df X, df Y]|.
  double homomorphism_residual() const;
  /// Max over basis of |df X + (df X)^H|; zero iff df maps into u(n).
  double hermitian_range_residual() const;

private:
  JordanTriple triple_;
  int n_;
  std::vector<CMatrix> images_;
};

/// Building blocks of representations of k, used to produce homomorphisms df.
/// Each summand is base(X) + charge * tr(a) * I on its block, with base:
///   trivial: 0 (1x1), left: a (r x r), left_dual: conj(a), right: b^T (s x s),
///   right_dual: -b,
/// evaluated on the canonical representative (a, b) of X.
enum class RepKind { trivial, left, left_dual, right, right_dual };

struct RepSummand {
  RepKind kind = RepKind::trivial;
  double charge = 0.0;
};

/// Block-diagonal direct sum of the summands.
DfMap df_from_representation(const JordanTriple& triple, std::span<const RepSummand> summands);

/// Anti-linear beta(v) = sum_i conj(v_i) B_i.
class BetaMap {
public:
  BetaMap(const JordanTriple& triple, int n, std::vector<CMatrix> images);

  static BetaMap zero(const JordanTriple& triple, int n);

  const JordanTriple& triple() const noexcept { return triple_; }
  int n() const noexcept { return n_; }
  const std::vector<CMatrix>& images() const noexcept { return images_; }

  HElement operator()(const JordanElement& v) const;

private:
  JordanTriple triple_;
  int n_;
  std::vector<CMatrix> images_;
};

/// Index p of the real basis of Z: e_p for p < d, i e_{p-d} for p >= d.
JordanElement real_basis(const JordanTriple& triple, int p);

/// Real-linear Z -> gl_n, stored as images of real_basis(triple, 0 .. 2d-1).
class RealLinearMap {
public:
  RealLinearMap(const JordanTriple& triple, int n, std::vector<CMatrix> images);

  const JordanTriple& triple() const noexcept { return triple_; }
  int n() const noexcept { return n_; }
  const std::vector<CMatrix>& images() const noexcept { return images_; }

  HElement operator()(const JordanElement& v) const;

private:
  JordanTriple triple_;
  int n_;
  std::vector<CMatrix> images_;
};

/// Generator of an invariant connexion relative to the tautological one.
class GammaMap : public RealLinearMap {
public:
  using RealLinearMap::RealLinearMap;
};

/// u(n)-valued generator of an invariant hermitian connexion.
class AlphaMap : public RealLinearMap {
public:
  /// Throws not_hermitian_structure unless every image is anti-Hermitian within tol.
  AlphaMap(const JordanTriple& triple, int n, std::vector<CMatrix> images,
           double tol = default_tol);
};

struct ClassificationDatum {
  JordanTriple triple;
  HStructure h;
  DfMap df;
  BetaMap beta;

  /// Checks shapes and sizes; throws dimension_mismatch.
  void validate() const;
};

/// Max over X in k_basis and basis vectors v of |[df X, m(v)] - m(X v)|.
/// Complex basis for beta, real basis for the real-linear maps.
double covariance_residual(const DfMap& df, const BetaMap& beta);
double covariance_residual(const DfMap& df, const RealLinearMap& m);

/// beta = i gamma - gamma o j.
BetaMap gamma_to_beta(const GammaMap& gamma);
/// gamma = -(i/2) beta.
GammaMap beta_to_gamma(const BetaMap& beta);
/// beta(v) = i alpha(v) - alpha(i v).
BetaMap alpha_to_beta(const AlphaMap& alpha);
/// alpha(v) = (beta(v) + beta(v)^H) / (2i); throws not_hermitian_structure unless h.hermitian.
AlphaMap beta_to_alpha(const BetaMap& beta, const HStructure& h);

/// Tautological connexion form at the base point on (gamma, eta) in g x h.
HElement tautological_form_base(const GField& gamma, const HElement& eta, const DfMap& df);

/// kappa0(u, v) = -eps df(u#v* - v#u*).
HElement curvature_tautological(const DfMap& df, const JordanElement& u, const JordanElement& v,
                                Curvature eps, double tol = default_tol);

/// kappa0(u, v) + [gamma u, gamma v] / 2.
HElement curvature_invariant(const DfMap& df, const GammaMap& gamma, const JordanElement& u,
                             const JordanElement& v, Curvature eps, double tol = default_tol);

/// Real-bilinear Z x Z -> gl_n, stored on pairs of real basis vectors.
class BilinearForm {
public:
  BilinearForm(const JordanTriple& triple, int n, std::vector<CMatrix> values);

  template <class F>
  static BilinearForm tabulate(const JordanTriple& triple, int n, F&& f) {
    const int m = 2 * triple.dim();
    std::vector<CMatrix> values;
    values.reserve(static_cast<std::size_t>(m * m));
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        values.push_back(f(real_basis(triple, p), real_basis(triple, q)));
    return {triple, n, std::move(values)};
  }

  const JordanTriple& triple() const noexcept { return triple_; }
  int n() const noexcept { return n_; }
  const CMatrix& at(int p, int q) const { return values_[p * 2 * triple_.dim() + q]; }

  HElement operator()(const JordanElement& u, const JordanElement& v) const;
  /// Max Frobenius norm over all basis pairs.
  double max_norm() const;

private:
  JordanTriple triple_;
  int n_;
  std::vector<CMatrix> values_;
};

/// T(u,v) + i T(iu,v) + i T(u,iv) - T(iu,iv), without normalization.
BilinearForm part_02(const BilinearForm& t);

BilinearForm tautological_curvature_form(const DfMap& df, Curvature eps, double tol = default_tol);
BilinearForm invariant_curvature_form(const DfMap& df, const GammaMap& gamma, Curvature eps,
                                      double tol = default_tol);

/// [beta u, beta v] / 4.
HElement nijenhuis_base(const BetaMap& beta, const JordanElement& u, const JordanElement& v);

/// Whether integrability_check and nijenhuis_base refuse non-covariant data.
enum class CovarianceGate { enforce, report };

/// Same as the BetaMap overload after checking covariance (throws covariance_violation
/// under CovarianceGate::enforce).
HElement nijenhuis_base(const ClassificationDatum& datum, const JordanElement& u,
                        const JordanElement& v, double tol = default_tol,
                        CovarianceGate gate = CovarianceGate::enforce);

/// Residuals of one curvature type.
struct IntegrabilityResiduals {
  Curvature eps = Curvature::flat;
  /// max_{i<j} |[B_i, B_j]|.
  double bracket = 0;
  /// max over real basis pairs of |part_02(kappa)| with gamma = -(i/2) beta.
  double nijenhuis = 0;
  /// max over real basis pairs of |[beta u, beta v] / 4|.
  double nijenhuis_base = 0;
  /// max |part_02(kappa0)|.
  double tautological_02 = 0;
  /// max |[alpha u, alpha v] - [alpha iu, alpha iv]|, hermitian data only.
  std::optional<double> hermitian = {};
};

/// Residuals for one eps, no covariance requirement.
IntegrabilityResiduals integrability_residuals(const DfMap& df, const BetaMap& beta,
                                               const HStructure& h, Curvature eps,
                                               double tol = default_tol);

struct IntegrabilityReport {
  bool integrable = false;
  double covariance_residual = 0;
  double bracket_residual = 0;
  double nijenhuis_residual = 0;
  /// The bracket and Nijenhuis (and hermitian, when present) verdicts agree.
  bool consistent = false;
  /// Verdict and eps-independent residuals agree across eps = -1, 0, +1.
  bool epsilon_independent = false;
  IntegrabilityResiduals residuals;
  std::vector<IntegrabilityResiduals> per_epsilon;
};

IntegrabilityReport integrability_check(const ClassificationDatum& datum, Curvature eps,
                                        double tol = default_tol,
                                        CovarianceGate gate = CovarianceGate::enforce);

/// (df, B) -> (l df l^-1, l B l^-1). Throws singular_gauge, or not_unitary for hermitian data.
ClassificationDatum gauge_transform(const ClassificationDatum& datum, const CMatrix& l,
                                    double tol = default_tol);

/// Traces of all words of length 1..max_word_len over (B_1..B_d, df X_1..df X_m), by
/// length then lexicographically. Equal fingerprints are necessary, not sufficient,
/// for gauge equivalence.
std::vector<Complex> orbit_fingerprint(const ClassificationDatum& datum, int max_word_len);

/// The classifying data does not depend on eps; returns the datum unchanged.
ClassificationDatum dualize(const ClassificationDatum& datum, Curvature from, Curvature to);

/// Real basis of the space of df-covariant anti-linear maps.
std::vector<BetaMap> covariant_beta_basis(const DfMap& df, double tol = 1e-10);

}  // namespace hsb
