#include "eph/moebius.hpp"

#include <cmath>
#include <numbers>

namespace eph {

MoebiusMap::MoebiusMap(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    const double D = a * d - b * c;
    if (!(D > 0) || !std::isfinite(D)) throw InputError("Moebius matrix needs positive determinant");
    const double s = 1.0 / std::sqrt(D);
    a *= s;
    b *= s;
    c *= s;
    d *= s;
}

MoebiusMap MoebiusMap::inverse() const { return {d, -b, -c, a}; }

MoebiusMap compose(const MoebiusMap& g1, const MoebiusMap& g2) {
    return {g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
            g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d};
}

MoebiusMap subgroup_element(Subgroup which, double t) {
    switch (which) {
        case Subgroup::A:
            if (!(t > 0)) throw InputError("A(alpha) needs alpha > 0");
            return {t, 0, 0, 1 / t};
        case Subgroup::N: return {1, t, 0, 1};
        case Subgroup::K: return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
        case Subgroup::Aprime: return {std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t)};
        case Subgroup::Nprime: return {1, 0, t, 1};
    }
    throw InputError("unknown subgroup");
}

// g = A(alpha) N(nu) K(phi); bottom row of g is (sin phi, cos phi)/alpha
IwasawaFactors iwasawa(const MoebiusMap& g) {
    IwasawaFactors f;
    f.alpha = 1.0 / std::hypot(g.c, g.d);
    f.phi = std::atan2(g.c, g.d);
    if (f.phi <= -std::numbers::pi) f.phi = std::numbers::pi;
    f.nu = (g.a * std::sin(f.phi) + g.b * std::cos(f.phi)) / f.alpha;
    return f;
}

MoebiusMap reassemble(const IwasawaFactors& f) {
    return compose(compose(subgroup_element(Subgroup::A, f.alpha), subgroup_element(Subgroup::N, f.nu)),
                   subgroup_element(Subgroup::K, f.phi));
}

ExtendedPoint act_point(const MoebiusMap& g, const ExtendedPoint& p, Signature sig) {
    if (p.infinite) {
        if (g.c == 0.0) return ExtendedPoint::infinity();
        return ExtendedPoint::at(g.a / g.c, 0.0);
    }
    const double s = sig;
    const double cud = g.c * p.u + g.d;
    const double D = cud * cud - s * g.c * g.c * p.v * p.v;
    if (D == 0.0) return ExtendedPoint::infinity();
    const double u = ((g.a * p.u + g.b) * cud - s * g.a * g.c * p.v * p.v) / D;
    return ExtendedPoint::at(u, p.v / D);
}

std::vector<ExtendedPoint> k_orbit_sample(const ExtendedPoint& start, Signature sig, int num) {
    if (start.infinite) throw InputError("K-orbit start must be finite");
    if (num < 2) throw InputError("K-orbit needs at least 2 samples");
    std::vector<ExtendedPoint> out;
    out.reserve(num);
    for (int j = 0; j < num; ++j) {
        const double phi = -std::numbers::pi + 2 * std::numbers::pi * (j + 1) / num;
        out.push_back(act_point(subgroup_element(Subgroup::K, phi), start, sig));
    }
    return out;
}

MoebiusMap random_sl2(Rng& rng) {
    IwasawaFactors f;
    f.alpha = std::exp(rng.uniform(-1, 1));
    f.nu = rng.uniform(-3, 3);
    f.phi = rng.uniform_open_closed(-std::numbers::pi, std::numbers::pi);
    return reassemble(f);
}

bool approx_equal(const MoebiusMap& g, const MoebiusMap& h, double tol) {
    return std::abs(g.a - h.a) <= tol && std::abs(g.b - h.b) <= tol && std::abs(g.c - h.c) <= tol &&
           std::abs(g.d - h.d) <= tol;
}

bool approx_equal(const ExtendedPoint& p, const ExtendedPoint& q, double tol) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite;
    const double sc = std::max({1.0, std::abs(p.u), std::abs(p.v)});
    return std::abs(p.u - q.u) <= tol * sc && std::abs(p.v - q.v) <= tol * sc;
}

}  // namespace eph
