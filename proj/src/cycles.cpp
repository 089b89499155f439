#include "eph/cycles.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace eph {

Cycle::Cycle(double k_, double l_, double n_, double m_, Signature sb, int s_)
    : k(k_), l(l_), n(n_), m(m_), s(s_), sigma_breve(sb) {
    if (k == 0 && l == 0 && n == 0 && m == 0) throw InputError("zero quadruple is not a cycle");
    if (s != 1 && s != -1) throw InputError("cycle parameter s must be +1 or -1");
    if (!std::isfinite(k) || !std::isfinite(l) || !std::isfinite(n) || !std::isfinite(m))
        throw InputError("non-finite cycle coordinate");
}

Cycle Cycle::normalized() const {
    const double big = std::max({std::abs(k), std::abs(l), std::abs(n), std::abs(m)});
    const double eps = 1e-14 * big;
    double f = 0;
    for (double x : {k, l, n, m})
        if (std::abs(x) > eps) {
            f = x;
            break;
        }
    return Cycle(k / f, l / f, n / f, m / f, sigma_breve, s);
}

HMat2 operator*(const HMat2& x, const HMat2& y) {
    HMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = x.e[i][0] * y.e[0][j] + x.e[i][1] * y.e[1][j];
    return r;
}

HMat2 operator*(const MoebiusMap& g, const HMat2& x) {
    const double G[2][2] = {{g.a, g.b}, {g.c, g.d}};
    HMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = G[i][0] * x.e[0][j] + G[i][1] * x.e[1][j];
    return r;
}

HMat2 operator*(const HMat2& x, const MoebiusMap& g) {
    const double G[2][2] = {{g.a, g.b}, {g.c, g.d}};
    HMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = x.e[i][0] * G[0][j] + x.e[i][1] * G[1][j];
    return r;
}

CycleMatrix fscc_matrix(const Cycle& c) {
    const Signature sb = c.sigma_breve;
    const double sn = c.s * c.n;
    CycleMatrix M;
    M.e[0][0] = {c.l, sn, sb};
    M.e[0][1] = {-c.m, 0, sb};
    M.e[1][0] = {c.k, 0, sb};
    M.e[1][1] = {-c.l, sn, sb};
    return M;
}

Cycle cycle_from_matrix(const CycleMatrix& M, int s, double tol) {
    const double l = M.e[0][0].re, sn = M.e[0][0].im, m = -M.e[0][1].re, k = M.e[1][0].re;
    double scale = 0;
    for (auto& row : M.e)
        for (auto& x : row) scale = std::max({scale, std::abs(x.re), std::abs(x.im)});
    const double t = tol * std::max(scale, 1e-300);
    if (std::abs(M.e[0][1].im) > t || std::abs(M.e[1][0].im) > t || std::abs(M.e[1][1].re + l) > t ||
        std::abs(M.e[1][1].im - sn) > t)
        throw DegenerateError("matrix does not have the FSCc shape");
    return Cycle(k, l, sn * s, m, M.e[0][0].sig, s);
}

Cycle similarity(const MoebiusMap& g, const Cycle& c) {
    const CycleMatrix M = g * fscc_matrix(c) * g.inverse();
    return cycle_from_matrix(M, c.s).normalized();
}

double det_cycle_at(const Cycle& c, Signature flavour) {
    const Cycle q = c.normalized();
    return -q.l * q.l + double(flavour) * q.n * q.n + q.m * q.k;
}

double det_cycle(const Cycle& c) { return det_cycle_at(c, c.sigma_breve); }

double radius_sq(const Cycle& c, Signature sigma) {
    if (c.k == 0) throw DegenerateError("a line has no radius");
    const Cycle q = c.normalized();
    return sign_fix(sigma, c.sigma_breve) * det_cycle(q) / (q.k * q.k);
}

Point2 centre(const Cycle& c, Signature flavour) {
    if (c.k == 0) throw DegenerateError("a line has no centre");
    return {c.l / c.k, -double(flavour) * c.n / c.k};
}

Point2 focus(const Cycle& c, Signature flavour, Signature sigma) {
    if (c.k == 0) throw DegenerateError("a line has no focus");
    if (c.n == 0) throw DegenerateError("focus undefined for n = 0");
    const Cycle q = c.normalized();
    const double det = det_cycle_at(q, flavour);
    return {q.l / q.k, sign_fix(sigma, flavour) * (-det) / (2 * q.n * q.k)};
}

std::vector<double> roots(const Cycle& c) {
    const Cycle q = c.normalized();
    if (q.k == 0) {
        if (q.l == 0) return {};
        return {q.m / (2 * q.l)};
    }
    const double disc = q.l * q.l - q.k * q.m;
    if (disc < 0) return {};
    if (disc == 0) return {q.l / q.k};
    const double r = std::sqrt(disc);
    // stable pair
    const double big = q.l + std::copysign(r, q.l);
    std::vector<double> out;
    if (big != 0) {
        out = {big / q.k, q.m / big};
    } else {
        out = {r / q.k, -r / q.k};
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cycle zero_radius_at(double u, double v, Signature sigma_breve) {
    // hyperbolic cone vertex sits at (l, -n): flip n so the drawing lands on (u, v)
    const double n = sigma_breve.value() == 1 ? -v : v;
    return Cycle(1, u, n, u * u - double(sigma_breve) * v * v, sigma_breve);
}

double cycle_equation(const Cycle& c, double u, double v, Signature sigma) {
    return c.k * (u * u - double(sigma) * v * v) - 2 * c.l * u - 2 * c.n * v + c.m;
}

Cycle cycle_from_points(const std::vector<Point2>& pts, Signature sigma, Signature sigma_breve, int s) {
    if (pts.size() < 3) throw InputError("need at least three points");
    Eigen::MatrixXd A(pts.size(), 4);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        A.row(i) << p.u * p.u - double(sigma) * p.v * p.v, -2 * p.u, -2 * p.v, 1.0;
    }
    // row scaling keeps far points from dominating
    for (Eigen::Index i = 0; i < A.rows(); ++i) A.row(i) /= A.row(i).norm();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv.size() >= 3 && sv(2) <= 1e-12 * sv(0)) throw DegenerateError("points do not determine a unique cycle");
    const Eigen::Vector4d x = svd.matrixV().col(3);
    return Cycle(x(0), x(1), x(2), x(3), sigma_breve, s).normalized();
}

bool projectively_equal(const Cycle& a, const Cycle& b, double tol) {
    if (a.sigma_breve != b.sigma_breve || a.s != b.s) return false;
    Eigen::Vector4d x(a.k, a.l, a.n, a.m), y(b.k, b.l, b.n, b.m);
    x.normalize();
    y.normalize();
    return std::min((x - y).norm(), (x + y).norm()) <= tol;
}

}  // namespace eph
