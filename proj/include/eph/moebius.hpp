#pragma once

#include <vector>

#include "eph/hypercomplex.hpp"
#include "eph/random.hpp"

namespace eph {

// real 2x2 matrix, determinant renormalized to 1
struct MoebiusMap {
    double a = 1, b = 0, c = 0, d = 1;

    MoebiusMap() = default;
    MoebiusMap(double a_, double b_, double c_, double d_);

    double det() const { return a * d - b * c; }
    MoebiusMap inverse() const;
};

struct IwasawaFactors {
    double alpha = 1;  // > 0
    double nu = 0;
    double phi = 0;  // (-pi, pi]
};

struct ExtendedPoint {
    bool infinite = false;
    double u = 0, v = 0;

    static ExtendedPoint at(double u, double v) { return {false, u, v}; }
    static ExtendedPoint infinity() { return {true, 0, 0}; }
};

enum class Subgroup { A, N, K, Aprime, Nprime };

MoebiusMap compose(const MoebiusMap& g1, const MoebiusMap& g2);

// A: t = alpha > 0, N: shift t, K: angle t, A': cosh/sinh, N': lower unipotent
MoebiusMap subgroup_element(Subgroup which, double t);

IwasawaFactors iwasawa(const MoebiusMap& g);
MoebiusMap reassemble(const IwasawaFactors& f);

ExtendedPoint act_point(const MoebiusMap& g, const ExtendedPoint& p, Signature sig);

std::vector<ExtendedPoint> k_orbit_sample(const ExtendedPoint& start, Signature sig, int num);

// alpha = e^{U(-1,1)}, nu ~ U(-3,3), phi ~ U(-pi,pi]
MoebiusMap random_sl2(Rng& rng);

bool approx_equal(const MoebiusMap& g, const MoebiusMap& h, double tol = 1e-9);
bool approx_equal(const ExtendedPoint& p, const ExtendedPoint& q, double tol = 1e-9);

}  // namespace eph
