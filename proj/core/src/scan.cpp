#include "triqfi/scan.hpp"

#include <cmath>

namespace triqfi {

ScanResult scan_threshold(const std::function<double(double)>& margin,
                          std::string parameter, double lo, double hi,
                          double tol, int samples) {
    ScanResult result;
    result.parameter = std::move(parameter);
    result.lo = lo;
    result.hi = hi;

    for (int i = 0; i < samples; ++i) {
        const double p = lo + (hi - lo) * i / (samples - 1.0);
        result.margins.emplace_back(p, margin(p));
    }

    double mlo = margin(lo);
    double mhi = margin(hi);
    if (mlo == 0.0) { result.crossed = true; result.threshold = lo; return result; }
    if (mhi == 0.0) { result.crossed = true; result.threshold = hi; return result; }
    if ((mlo < 0.0) == (mhi < 0.0)) return result;  // no sign change

    double a = lo, b = hi, ma = mlo;
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double mm = margin(mid);
        ++result.iterations;
        if ((mm < 0.0) == (ma < 0.0)) { a = mid; ma = mm; } else { b = mid; }
        if (result.iterations > 200) break;
    }
    result.crossed = true;
    result.threshold = 0.5 * (a + b);
    return result;
}

std::vector<GridRow> f_grid(int resolution, int* skipped) {
    const auto family = example1_family();
    std::vector<GridRow> rows;
    int skip_count = 0;
    for (int ix = 0; ix < resolution; ++ix)
        for (int iy = 0; iy < resolution; ++iy) {
            const double x = ix / (resolution - 1.0);
            const double y = iy / (resolution - 1.0);
            if (x + y > 1.0 + 1e-12) { ++skip_count; continue; }
            const double f = closed_form_f(x, y);
            const DensityMatrix rho = ghz_w_mix(x, y);
            const double engine = theorem1_margin(rho, family, 2.0, 8.0).margin;
            rows.push_back({x, y, f, engine, std::abs(f - engine)});
        }
    if (skipped) *skipped = skip_count;
    return rows;
}

}  // namespace triqfi
