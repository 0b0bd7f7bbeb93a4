#include "qbayes/scan.hpp"

#include <cmath>

namespace qbayes {

namespace {

bool violating(double value, double threshold, bool above) {
  return above ? value > threshold : value < threshold;
}

// narrows the crossing bracket [lo, hi] (states differ at the ends) until it
// is tighter than k_crossing_tol, returns the midpoint
double refine_crossing(const std::function<double(double)>& f, double lo, double hi,
                       bool lo_violating, double threshold, bool above) {
  while (hi - lo > k_crossing_tol) {
    const double mid = 0.5 * (lo + hi);
    if (violating(f(mid), threshold, above) == lo_violating)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ScanResult scan_curve(const std::function<double(double)>& f, double x_min,
                      double x_max, int n_points, double threshold,
                      bool violation_is_above) {
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max))
    throw invalid_parameter("scan range must satisfy x_min < x_max");
  if (n_points < 2) throw invalid_parameter("scan needs at least 2 points");

  ScanResult out;
  out.axis.reserve(static_cast<std::size_t>(n_points));
  out.values.reserve(static_cast<std::size_t>(n_points));
  const double step = (x_max - x_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    // last point lands exactly on x_max to keep the axis range tight
    const double x = (i == n_points - 1) ? x_max : x_min + step * i;
    out.axis.push_back(x);
    out.values.push_back(f(x));
  }

  bool inside = violating(out.values[0], threshold, violation_is_above);
  double start = out.axis[0];
  for (int i = 1; i < n_points; ++i) {
    const bool now = violating(out.values[static_cast<std::size_t>(i)], threshold,
                               violation_is_above);
    if (now == inside) continue;
    const double crossing = refine_crossing(f, out.axis[static_cast<std::size_t>(i - 1)],
                                            out.axis[static_cast<std::size_t>(i)], inside,
                                            threshold, violation_is_above);
    if (inside)
      out.violation_intervals.emplace_back(start, crossing);
    else
      start = crossing;
    inside = now;
  }
  if (inside) out.violation_intervals.emplace_back(start, x_max);
  return out;
}

}  // namespace qbayes
