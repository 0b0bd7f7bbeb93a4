#pragma once

// Uniform-grid sampling of a scalar curve with detection of the regions where
// it crosses a violation threshold. Crossings are refined by bisection, so the
// reported interval endpoints are much tighter than the grid spacing.

#include <functional>
#include <utility>
#include <vector>

#include "qbayes/errors.hpp"

namespace qbayes {

// bisection stop width for a violation-boundary crossing, in axis units
inline constexpr double k_crossing_tol = 1e-6;

struct ScanResult {
  std::vector<double> axis;    // strictly increasing sample points
  std::vector<double> values;  // curve value at each sample point
  // maximal ranges where the curve sits on the violating side of the
  // threshold; endpoints refined by bisection except where they hit the
  // scan boundary
  std::vector<std::pair<double, double>> violation_intervals;
};

// samples f on n_points uniform points over [x_min, x_max] and locates the
// violating regions: value > threshold if violation_is_above, value < threshold
// otherwise. f is assumed continuous; features narrower than the grid spacing
// can be missed, which is the usual sampling caveat.
ScanResult scan_curve(const std::function<double(double)>& f, double x_min,
                      double x_max, int n_points, double threshold,
                      bool violation_is_above);

}  // namespace qbayes
