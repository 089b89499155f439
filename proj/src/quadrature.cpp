#include "eph/quadrature.hpp"

#include <cmath>
#include <vector>

namespace eph {

QuadResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b, double rel_tol,
                     int nodes, int max_levels, double abs_tol) {
    using C = std::complex<double>;
    QuadResult r;
    if (a == b) {
        r.value = 0;
        return r;
    }
    int n = nodes;
    double h = (b - a) / n;
    C sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) sum += f(a + i * h);
    std::vector<C> prev{sum * h};
    for (int level = 1; level <= max_levels; ++level) {
        C add = 0;
        for (int i = 0; i < n; ++i) add += f(a + (i + 0.5) * h);
        sum += add;
        n *= 2;
        h *= 0.5;
        std::vector<C> row{sum * h};
        double p = 4;
        for (std::size_t j = 1; j <= prev.size() && j < 8; ++j) {
            row.push_back(row[j - 1] + (row[j - 1] - prev[j - 1]) / (p - 1));
            p *= 4;
        }
        const C best = row.back();
        const C last = prev.back();
        r.levels = level;
        if (level >= 2 && std::abs(best - last) <= std::max(rel_tol * std::abs(best), abs_tol)) {
            r.value = best;
            return r;
        }
        // absolute floor for integrals that vanish
        if (level >= 4 && std::abs(best - last) <= 1e-300) {
            r.value = best;
            return r;
        }
        prev = row;
    }
    r.value = prev.back();
    r.converged = false;
    return r;
}

}  // namespace eph
