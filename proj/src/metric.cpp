#include "eph/metric.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace eph {

Cycle length_cycle(const DirectedInterval& iv, const LengthKind& kind, Signature sigma) {
    const Point2 A = iv.A, B = iv.B;
    const double f = kind.flavour;
    const double s = sigma;
    const double q0 = B.u * B.u - s * B.v * B.v;
    switch (kind.tag) {
        case LengthKind::from_centre: {
            if (f == 0) throw DegenerateError("no unique cycle with a parabolic centre");
            const double l = A.u, n = -A.v / f;
            const double m = -(q0 - 2 * l * B.u - 2 * n * B.v);
            return Cycle(1, l, n, m, kind.flavour);
        }
        case LengthKind::from_focus: {
            // focus (l, -sign_fix det / 2n) = A with k = 1 and incidence at B
            const double l = A.u;
            const double fix = sign_fix(sigma, kind.flavour);
            const double c0 = (B.u - A.u) * (B.u - A.u) - s * B.v * B.v;
            const double c1 = -2 * B.v - 2 * A.v / fix;
            double n = 0;
            if (f == 0) {
                if (c1 == 0) throw DegenerateError("no cycle with this parabolic focus");
                n = -c0 / c1;
            } else {
                // -f n^2 + c1 n + c0 = 0, smaller |n| root
                const double disc = c1 * c1 + 4 * f * c0;
                if (disc < 0) throw DegenerateError("no cycle with this focus through B");
                const double big = c1 + std::copysign(std::sqrt(disc), c1);
                if (big == 0) throw DegenerateError("no cycle with this focus through B");
                n = -2 * c0 / big;
            }
            if (n == 0) throw DegenerateError("focus cycle degenerates to n = 0");
            // -fix * det / (2n) = A.v, det = -l^2 + f n^2 + m
            const double det = -2 * n * A.v / fix;
            const double m = det + l * l - f * n * n;
            return Cycle(1, l, n, m, kind.flavour);
        }
        default: throw InputError("distance kind has no cycle");
    }
}

double length(const DirectedInterval& iv, const LengthKind& kind, Signature sigma) {
    if (kind.tag == LengthKind::distance)
        return std::sqrt(std::abs(distance_sq(iv.B.u - iv.A.u, iv.B.v - iv.A.v, sigma)));
    if (iv.A.u == iv.B.u && iv.A.v == iv.B.v) return 0.0;
    return std::sqrt(std::abs(radius_sq(length_cycle(iv, kind, sigma), sigma)));
}

bool is_perpendicular(const DirectedInterval& ab, const DirectedInterval& cd, const LengthKind& kind,
                      Signature sigma, double tol) {
    const double h = 1e-5;
    const double du = cd.B.u - cd.A.u, dv = cd.B.v - cd.A.v;
    auto at = [&](double e) {
        DirectedInterval iv{ab.A, {ab.B.u + e * du, ab.B.v + e * dv}};
        const double r = length(iv, kind, sigma);
        if (!std::isfinite(r)) throw DomainError("length undefined near epsilon = 0");
        return r;
    };
    double fp, fm, f0;
    try {
        fp = at(h);
        fm = at(-h);
        f0 = at(0);
    } catch (const DegenerateError&) {
        throw DomainError("perpendicularity undefined: length not defined near epsilon = 0");
    }
    const double deriv = (fp - fm) / (2 * h);
    const double scale = std::max(f0, std::hypot(du, dv));
    return std::abs(deriv) <= tol * scale;
}

double conformality_ratio(const MoebiusMap& g, Point2 y, Point2 ydir, double t, const LengthKind& kind,
                          Signature sigma) {
    const Point2 y2{y.u + t * ydir.u, y.v + t * ydir.v};
    const ExtendedPoint gy = act_point(g, ExtendedPoint::at(y.u, y.v), sigma);
    const ExtendedPoint gy2 = act_point(g, ExtendedPoint::at(y2.u, y2.v), sigma);
    if (gy.infinite || gy2.infinite) throw DomainError("image at infinity");
    const double num = length({{gy.u, gy.v}, {gy2.u, gy2.v}}, kind, sigma);
    const double den = length({y, y2}, kind, sigma);
    if (den == 0) throw DomainError("zero reference length");
    return num / den;
}

double extremal_diameter_sq(Point2 A, Point2 B, Signature sigma) {
    const double s = sigma;
    // unknowns (l, n, m) with k = 1
    Eigen::Matrix<double, 2, 3> M;
    Eigen::Vector2d rhs;
    M << -2 * A.u, -2 * A.v, 1, -2 * B.u, -2 * B.v, 1;
    rhs << -(A.u * A.u - s * A.v * A.v), -(B.u * B.u - s * B.v * B.v);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(M), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector3d x0 = svd.solve(Eigen::VectorXd(rhs));
    const Eigen::Vector3d d = svd.matrixV().col(2);
    auto diam = [&](double t) {
        const Eigen::Vector3d x = x0 + t * d;
        return 4 * (x(0) * x(0) - s * x(1) * x(1) - x(2));
    };
    // scan for an interior extremum, then golden-section refine
    const double R = 100 * (1 + x0.norm());
    const int N = 4001;
    std::vector<double> ts(N), qs(N);
    for (int i = 0; i < N; ++i) {
        ts[i] = -R + 2 * R * i / (N - 1);
        qs[i] = diam(ts[i]);
    }
    int best = -1;
    double sign = 1;
    for (int i = 1; i < N - 1; ++i) {
        if (qs[i] <= qs[i - 1] && qs[i] <= qs[i + 1]) {
            best = i;
            sign = 1;
            break;
        }
        if (qs[i] >= qs[i - 1] && qs[i] >= qs[i + 1]) {
            best = i;
            sign = -1;
            break;
        }
    }
    if (best < 0) throw DegenerateError("diameters have no extremum");
    double a = ts[best - 1], b = ts[best + 1];
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double c = b - gr * (b - a), e = a + gr * (b - a);
    double fc = sign * diam(c), fe = sign * diam(e);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (1 + std::abs(a)); ++it) {
        if (fc < fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - gr * (b - a);
            fc = sign * diam(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + gr * (b - a);
            fe = sign * diam(e);
        }
    }
    return diam((a + b) / 2);
}

}  // namespace eph
