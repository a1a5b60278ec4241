#pragma once

// Dense complex-matrix substrate shared by every module.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "hsb/error.hpp"

namespace hsb {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double default_tol = 1e-9;
inline constexpr Complex I{0.0, 1.0};

double frobenius_norm(const CMatrix& m);
double spectral_norm(const CMatrix& m);

/// sigma_min / sigma_max, 0 for an empty or zero matrix.
double reciprocal_condition(const CMatrix& m);

bool all_finite(const CMatrix& m);

/// Kronecker product with the left factor as the outer block index.
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix commutator(const CMatrix& a, const CMatrix& b);

double hermitian_defect(const CMatrix& a);

/// Principal square root of a Hermitian positive semi-definite matrix.
/// Throws not_hermitian or negative_spectrum when the preconditions fail at `tol`.
CMatrix hermitian_sqrt(const CMatrix& a, double tol = default_tol);

CMatrix inverse(const CMatrix& a);
Complex determinant(const CMatrix& a);

/// Right-hand side of an autonomous ODE on matrices of a fixed shape.
using MatrixField = std::function<CMatrix(const CMatrix&)>;

/// Classical RK4 for dz/dt = field(z), z(0) = z0, evaluated at t_end.
/// The step count is ceil(|t_end| / step); the actual step is adjusted to land on t_end.
CMatrix rk4_flow(const MatrixField& field, const CMatrix& z0, double t_end, double step);

// Deterministic sampling. The conversions below are written out instead of using
// <random> distributions so that results are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in the open complex unit disk.
  Complex unit_disk();
  /// Entries drawn independently from the unit disk.
  CMatrix disk_matrix(int rows, int cols);
  /// Disk matrix rescaled to spectral norm uniform in (0, budget].
  CMatrix matrix_with_norm_at_most(int rows, int cols, double budget);
  /// Haar-ish random unitary from the QR of a disk matrix.
  CMatrix unitary(int n);

private:
  std::mt19937_64 engine_;
};

}  // namespace hsb
