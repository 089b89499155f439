#include "eph/sl2rep.hpp"

#include <algorithm>
#include <cmath>

namespace eph {

Sl2Element operator+(const Sl2Element& x, const Sl2Element& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
Sl2Element operator-(const Sl2Element& x, const Sl2Element& y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
Sl2Element operator*(const Hypercomplex& t, const Sl2Element& x) { return {t * x.a, t * x.b, t * x.c}; }
Sl2Element operator*(double t, const Sl2Element& x) { return {t * x.a, t * x.b, t * x.c}; }

HMat2 to_matrix(const Sl2Element& x) {
    HMat2 M;
    M.e[0][0] = -0.5 * x.a;
    M.e[1][1] = 0.5 * x.a;
    M.e[0][1] = 0.5 * x.b + x.c;
    M.e[1][0] = 0.5 * x.b - x.c;
    return M;
}

Sl2Element from_matrix(const HMat2& M, double tol) {
    const Hypercomplex tr = M.e[0][0] + M.e[1][1];
    if (std::abs(tr.re) > tol || std::abs(tr.im) > tol) throw InputError("matrix is not in sl2 (trace residual)");
    return {M.e[1][1] - M.e[0][0], M.e[0][1] + M.e[1][0], 0.5 * (M.e[0][1] - M.e[1][0])};
}

HMat2 matrix_commutator(const HMat2& x, const HMat2& y) {
    const HMat2 p = x * y, q = y * x;
    HMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = p.e[i][j] - q.e[i][j];
    return r;
}

Sl2Element bracket(const Sl2Element& x, const Sl2Element& y) {
    if (x.sig() != y.sig()) throw InputError("sl2 elements with different signatures");
    return from_matrix(matrix_commutator(to_matrix(x), to_matrix(y)));
}

Hypercomplex killing(const Sl2Element& x, const Sl2Element& y) {
    const Signature s = x.sig();
    const Sl2Element e[3] = {Sl2Element::basis_A(s), Sl2Element::basis_B(s), Sl2Element::basis_Z(s)};
    Hypercomplex adx[3][3], ady[3][3];
    for (int j = 0; j < 3; ++j) {
        const Sl2Element bx = bracket(x, e[j]), by = bracket(y, e[j]);
        adx[0][j] = bx.a, adx[1][j] = bx.b, adx[2][j] = bx.c;
        ady[0][j] = by.a, ady[1][j] = by.b, ady[2][j] = by.c;
    }
    Hypercomplex tr{0, 0, s};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) tr = tr + adx[i][k] * ady[k][i];
    return tr;
}

double max_abs(const Sl2Element& x) {
    return std::max({std::abs(x.a.re), std::abs(x.a.im), std::abs(x.b.re), std::abs(x.b.im), std::abs(x.c.re),
                     std::abs(x.c.im)});
}

bool approx_equal(const Sl2Element& x, const Sl2Element& y, double tol) { return max_abs(x - y) <= tol; }

LadderSolution solve_ladder(Generator g, double t) {
    LadderSolution r;
    r.generator = g;
    switch (g) {
        case Generator::Z: {
            const Signature s = Signature::elliptic();
            r.unit = s;
            r.lambda = {0, 2, s};
            r.characteristic = "lambda^2+4=0";
            r.X = 0.5 * Sl2Element::basis_Z(s);
            break;
        }
        case Generator::B: {
            const Signature s = Signature::hyperbolic();
            r.unit = s;
            r.lambda = {0, 1, s};
            r.characteristic = "lambda^2-1=0";
            r.X = Sl2Element::basis_B(s);
            break;
        }
        case Generator::BminusHalfZ: {
            const Signature s = Signature::parabolic();
            r.unit = s;
            r.lambda = {0, t, s};
            r.characteristic = "lambda^2=0";
            r.X = Sl2Element::basis_B(s) - 0.5 * Sl2Element::basis_Z(s);
            break;
        }
    }
    const Signature s = r.unit;
    const Sl2Element A = Sl2Element::basis_A(s);
    r.Y = bracket(r.X, A);
    const Hypercomplex iota = r.lambda * (g == Generator::Z ? 0.5 : 1.0);
    r.pairs.push_back({s, iota, iota * A + r.Y, (-iota) * A + r.Y,
                       g == Generator::Z ? "complex" : g == Generator::B ? "double" : "dual"});
    if (g == Generator::B) {
        const Hypercomplex one{1, 0, s};
        r.pairs.push_back({s, one, one * A + r.Y, (-one) * A + r.Y, "real"});
    }
    return r;
}

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::Z: return "Z";
        case Generator::B: return "B";
        default: return "BminusHalfZ";
    }
}

Generator parse_generator(const std::string& s) {
    if (s == "Z") return Generator::Z;
    if (s == "B") return Generator::B;
    if (s == "BminusHalfZ" || s == "B-Z/2") return Generator::BminusHalfZ;
    throw InputError("unknown generator '" + s + "' (expected Z, B or BminusHalfZ)");
}

std::string to_string(const Sl2Element& x) {
    return "(" + eph::to_string(x.a) + ")A + (" + eph::to_string(x.b) + ")B + (" + eph::to_string(x.c) + ")Z";
}

}  // namespace eph
