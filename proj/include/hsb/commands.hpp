#pragma once

#include <cstdint>

#include "hsb/bundle.hpp"
#include "hsb/report.hpp"

namespace hsb {

struct VerifyOptions {
  int r = 1;
  int s = 1;
  int trials = 50;
  std::uint64_t seed = 42;
  double tol = default_tol;
};

/// Seeded property battery over jordan-core, lie-structure and space-models.
Report cmd_verify(const VerifyOptions& options);

/// Checks a classification datum and reports its integrability for curvature type eps.
Report cmd_classify(const ClassificationDatum& datum, Curvature eps, double tol = default_tol);

/// Runs the integrability check for eps = -1, 0, +1 and compares the outcomes.
Report cmd_dualize(const ClassificationDatum& datum, double tol = default_tol);

/// Tables of kappa0, kappa and the (0,2)-part of kappa on complex basis pairs.
Report cmd_curvature(const ClassificationDatum& datum, Curvature eps, double tol = default_tol);

}  // namespace hsb
