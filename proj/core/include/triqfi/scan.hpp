#pragma once

#include "triqfi/criteria.hpp"

#include <functional>
#include <string>
#include <vector>

namespace triqfi {

/// Bisection result for a margin crossing zero in [lo, hi].
struct ScanResult {
    std::string parameter;
    double lo = 0.0;
    double hi = 1.0;
    double threshold = 0.0;  // estimated crossing, valid when crossed
    int iterations = 0;
    bool crossed = false;
    std::vector<std::pair<double, double>> margins;  // sampled (param, margin)
};

/// Bisect margin(param) = 0 on [lo, hi] to |hi-lo| <= tol. Also records
/// `samples` evenly spaced margin samples. Requires margin(lo) <= 0 <= margin(hi)
/// or the reverse; otherwise crossed = false.
ScanResult scan_threshold(const std::function<double(double)>& margin,
                          std::string parameter, double lo, double hi,
                          double tol = 1e-6, int samples = 41);

struct GridRow {
    double x, y;
    double f;              // closed form
    double engine_margin;  // Example1-family Fisher sum minus 10
    double delta;          // |f - engine_margin|
};

/// f(x,y) over an evenly spaced resolution x resolution grid on [0,1]^2,
/// with points outside the simplex x+y <= 1 skipped and counted.
std::vector<GridRow> f_grid(int resolution, int* skipped = nullptr);

}  // namespace triqfi
