#include "hsb/numerics.hpp"

#include <cmath>

namespace hsb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::negative_spectrum: return "NegativeSpectrum";
    case ErrorCode::non_finite: return "NonFinite";
    case ErrorCode::singular_bergman: return "SingularBergman";
    case ErrorCode::cut_locus: return "CutLocus";
    case ErrorCode::closure_violation: return "ClosureViolation";
    case ErrorCode::not_in_k: return "NotInK";
    case ErrorCode::not_hermitian_structure: return "NotHermitianStructure";
    case ErrorCode::covariance_violation: return "CovarianceViolation";
    case ErrorCode::singular_gauge: return "SingularGauge";
    case ErrorCode::not_unitary: return "NotUnitary";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

double frobenius_norm(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.norm(); }

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 1 || m.cols() == 1) return m.norm();
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double reciprocal_condition(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double top = sv(0);
  if (!(top > 0.0)) return 0.0;
  return sv(sv.size() - 1) / top;
}

bool all_finite(const CMatrix& m) { return m.allFinite(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double hermitian_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return frobenius_norm(a - a.adjoint());
}

CMatrix hermitian_sqrt(const CMatrix& a, double tol) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::not_hermitian, "matrix is not square");
  const double scale = 1.0 + frobenius_norm(a);
  if (hermitian_defect(a) > tol * scale)
    throw Error(ErrorCode::not_hermitian, "|A - A^H| exceeds tolerance");
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym);
  Eigen::VectorXd lambda = eig.eigenvalues();
  if (lambda.size() > 0 && lambda.minCoeff() < -tol * scale)
    throw Error(ErrorCode::negative_spectrum,
                "eigenvalue " + std::to_string(lambda.minCoeff()) + " below -tol");
  for (Eigen::Index k = 0; k < lambda.size(); ++k) lambda(k) = std::sqrt(std::max(lambda(k), 0.0));
  const CMatrix& u = eig.eigenvectors();
  return u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
}

CMatrix inverse(const CMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::shape_mismatch, "inverse of non-square matrix");
  return a.partialPivLu().inverse();
}

Complex determinant(const CMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::shape_mismatch, "determinant of non-square matrix");
  return a.determinant();
}

CMatrix rk4_flow(const MatrixField& field, const CMatrix& z0, double t_end, double step) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw Error(ErrorCode::invalid_argument, "rk4 step must be positive");
  if (!std::isfinite(t_end)) throw Error(ErrorCode::invalid_argument, "rk4 end time not finite");
  const auto steps = static_cast<long>(std::ceil(std::abs(t_end) / step - 1e-12));
  if (steps == 0) return z0;
  const double h = t_end / static_cast<double>(steps);

  CMatrix z = z0;
  for (long n = 0; n < steps; ++n) {
    const CMatrix k1 = field(z);
    const CMatrix k2 = field(z + 0.5 * h * k1);
    const CMatrix k3 = field(z + 0.5 * h * k2);
    const CMatrix k4 = field(z + h * k3);
    z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!all_finite(z))
      throw Error(ErrorCode::non_finite,
                  "trajectory left the representable range at t = " + std::to_string((n + 1) * h));
  }
  return z;
}

double Rng::uniform() {
  // 53 random mantissa bits.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex Rng::unit_disk() {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    if (x * x + y * y < 1.0) return {x, y};
  }
}

CMatrix Rng::disk_matrix(int rows, int cols) {
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = unit_disk();
  return m;
}

CMatrix Rng::matrix_with_norm_at_most(int rows, int cols, double budget) {
  CMatrix m = disk_matrix(rows, cols);
  double norm = spectral_norm(m);
  while (!(norm > 1e-3)) {
    m = disk_matrix(rows, cols);
    norm = spectral_norm(m);
  }
  const double target = budget * (1.0 - uniform());  // in (0, budget]
  return (target / norm) * m;
}

CMatrix Rng::unitary(int n) {
  const CMatrix a = disk_matrix(n, n);
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR();
  // Fix the phase ambiguity so the distribution does not depend on the QR convention.
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

}  // namespace hsb
