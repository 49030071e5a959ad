// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

namespace spc {

struct CurvePoint {
    double density_pct = 0.0;
    double f1 = 0.0;
};

/// Normalized trapezoidal area of an F1-density curve over [lo, hi]: the
/// integral divided by (hi - lo), i.e. the mean F1 over the interval. Curve
/// densities must be strictly increasing; endpoints inside a segment are
/// linearly interpolated. Throws RangeError when [lo, hi] is not covered.
double auc_f1(std::span<const CurvePoint> curve, double lo, double hi);

/// CSV with header "density_pct,f1".
std::vector<CurvePoint> load_curve_csv(const std::string& path);
void save_curve_csv(std::span<const CurvePoint> curve, const std::string& path);

} // namespace spc
