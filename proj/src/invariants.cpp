#include "eph/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace eph {

namespace {

void require_compatible(const Cycle& a, const Cycle& b) {
    if (a.sigma_breve != b.sigma_breve) throw InputError("cycles have different sigma_breve");
    if (a.s != b.s) throw InputError("cycles have different s");
}

double frobenius(const CycleMatrix& M) {
    double s = 0;
    for (auto& row : M.e)
        for (auto& x : row) s += x.re * x.re + x.im * x.im;
    return std::sqrt(s);
}

CycleMatrix conj(const CycleMatrix& M) {
    CycleMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = eph::conj(M.e[i][j]);
    return r;
}

double trace_pair(const CycleMatrix& a, const CycleMatrix& b) {
    const Hypercomplex t = (a * conj(b)).trace();
    const double sc = std::max(1.0, frobenius(a) * frobenius(b));
    if (std::abs(t.im) > 1e-12 * sc) throw DegenerateError("pairing has a non-real part");
    return t.re;
}

}  // namespace

double pairing(const Cycle& c1, const Cycle& c2) {
    require_compatible(c1, c2);
    return trace_pair(fscc_matrix(c1), fscc_matrix(c2));
}

double normalized_pairing(const Cycle& c1, const Cycle& c2) {
    require_compatible(c1, c2);
    const CycleMatrix a = fscc_matrix(c1), b = fscc_matrix(c2);
    return trace_pair(a, b) / (frobenius(a) * frobenius(b));
}

bool is_orthogonal(const Cycle& c1, const Cycle& c2, double tol) {
    return std::abs(normalized_pairing(c1, c2)) <= tol;
}

CycleMatrix reflection_matrix(const Cycle& mirror, const Cycle& target) {
    require_compatible(mirror, target);
    const CycleMatrix C = fscc_matrix(mirror);
    return C * fscc_matrix(target) * C;
}

Cycle reflect_in(const Cycle& c, const Cycle& target) {
    const CycleMatrix M = reflection_matrix(c, target);
    const double f = frobenius(M);
    const double sc = frobenius(fscc_matrix(c));
    if (!(f > 1e-14 * sc * sc * frobenius(fscc_matrix(target)))) throw DegenerateError("degenerate reflection");
    CycleMatrix u;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u.e[i][j] = M.e[i][j] * (1.0 / f);
    return cycle_from_matrix(u, c.s, 1e-9).normalized();
}

bool is_f_orthogonal(const Cycle& c, const Cycle& other, double tol) {
    const CycleMatrix M = reflection_matrix(c, other);
    const CycleMatrix R = fscc_matrix(real_line(c.sigma_breve, c.s));
    const double f = frobenius(M);
    if (f == 0) return true;
    return std::abs(trace_pair(M, R)) / (f * frobenius(R)) <= tol;
}

Cycle ghost_cycle(const Cycle& c, Signature sigma) {
    if (c.k == 0) throw DegenerateError("ghost cycle needs k != 0");
    const int x = chi(double(sigma));
    return Cycle(c.k, c.l, double(c.sigma_breve) * c.n / x, c.m, Signature(x), 1);
}

bool ghost_det_condition(const Cycle& c, Signature sigma, double tol) {
    const Cycle g = ghost_cycle(c, sigma).normalized();
    const Cycle q = c.normalized();
    const double lhs = -g.l * g.l + double(sigma) * g.n * g.n + g.m * g.k;
    const double s = chi(double(c.sigma_breve));
    const double rhs = -q.l * q.l + double(sigma) * s * s * q.n * q.n + q.m * q.k;
    return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
}

Cycle f_ghost_cycle(const Cycle& c, Signature sigma) {
    const int x = chi(double(sigma));
    Cycle mirror = c;
    mirror.s = x;
    return reflect_in(mirror, real_line(c.sigma_breve, x));
}

bool passes_through(const Cycle& c, double u, double v, Signature sigma, double tol) {
    const double scale = std::max({std::abs(c.k), std::abs(c.l), std::abs(c.n), std::abs(c.m)});
    return std::abs(cycle_equation(c, u, v, sigma)) <= tol * scale;
}

}  // namespace eph
