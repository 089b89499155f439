#pragma once

#include <complex>
#include <functional>

namespace eph {

struct QuadResult {
    std::complex<double> value;
    bool converged = true;
    int levels = 0;
};

// Romberg extrapolation on trapezoid doubling; starts from `nodes` intervals
QuadResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b, double rel_tol = 1e-10,
                     int nodes = 64, int max_levels = 20, double abs_tol = 0);

}  // namespace eph
