#pragma once

#include <Eigen/Core>

#include "curvop/curvature.hpp"

namespace curvop {

/// Orthonormal 2-frame spanning a plane.
struct Plane {
  Eigen::VectorXd x, y;
};

struct SecExtrema {
  double sec_min, sec_max;
  Plane argmin, argmax;
};

/// Extrema of the sectional curvature over 2-planes by multi-start projected
/// gradient on orthonormal frames.  Seeds: every coordinate plane plus
/// `budget` random frames.  The result is a certified local bound: sec_min is
/// <= the value at every probed plane, likewise sec_max from above.
SecExtrema sec_extrema(const CurvatureTensor& r, int budget = 64, double tol = 1e-10);

/// (smallest, largest) eigenvalue of the Ricci matrix.
std::pair<double, double> ricci_extrema(const CurvatureTensor& r);

/// Curvature classification against each hypothesis set.  alpha is the
/// computed sec_min, beta is -sec_max; strict inequalities hold with margin
/// 1e-9.  second_kind_min/max are the extreme eigenvalues of the curvature
/// operator of the second kind on traceless symmetric 2-tensors.
struct PinchingReport {
  int n = 0;
  double sec_min = 0, sec_max = 0;
  Plane argmin_plane, argmax_plane;
  double ric_min = 0, ric_max = 0;
  double second_kind_min = 0, second_kind_max = 0;

  bool lemma1_strict = false, lemma1_nonneg = false;
  bool double_pinch_strict = false, double_pinch_nonneg = false;
  bool lemma2_strict = false, lemma2_nonneg = false;

  // slack of each hypothesis set: min over its inequalities, positive when
  // the strict variant holds with room to spare
  double lemma1_margin = 0, double_pinch_margin = 0, lemma2_margin = 0;

  int restarts = 0;
  double tol = 0;
};

/// Margin used for strict inequalities: x < y is tested as x <= y - kStrictMargin.
inline constexpr double kStrictMargin = 1e-9;

PinchingReport classify(const CurvatureTensor& r, int budget = 64, double tol = 1e-10);

}  // namespace curvop
