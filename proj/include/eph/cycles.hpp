#pragma once

#include <array>
#include <vector>

#include "eph/hypercomplex.hpp"
#include "eph/moebius.hpp"

namespace eph {

struct Point2 {
    double u = 0, v = 0;
};

// projective quadruple for k(u^2 - sigma v^2) - 2lu - 2nv + m = 0
struct Cycle {
    double k = 0, l = 0, n = 0, m = 0;
    int s = 1;
    Signature sigma_breve = Signature::elliptic();

    Cycle() = default;
    Cycle(double k_, double l_, double n_, double m_, Signature sb = Signature::elliptic(), int s_ = 1);

    Cycle normalized() const;
    std::array<double, 4> coords() const { return {k, l, n, m}; }
};

// 2x2 matrix with hypercomplex entries of one signature
struct HMat2 {
    Hypercomplex e[2][2];

    Hypercomplex trace() const { return e[0][0] + e[1][1]; }
    Hypercomplex det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }
};

HMat2 operator*(const HMat2& x, const HMat2& y);
HMat2 operator*(const MoebiusMap& g, const HMat2& x);
HMat2 operator*(const HMat2& x, const MoebiusMap& g);

using CycleMatrix = HMat2;

// sign convention table, [sigma+1][sigma_breve+1]; fixed by the parabola
// focus/vertex/directrix and Euclidean radius checks in the unit tests
constexpr int kSignFix[3][3] = {{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}};

inline int sign_fix(Signature sigma, Signature sigma_breve) {
    return kSignFix[sigma.value() + 1][sigma_breve.value() + 1];
}

constexpr double kProjTol = 1e-9;

CycleMatrix fscc_matrix(const Cycle& c);
// inverse of fscc_matrix; checks the FSCc shape
Cycle cycle_from_matrix(const CycleMatrix& M, int s, double tol = 1e-10);

Cycle similarity(const MoebiusMap& g, const Cycle& c);

double det_cycle(const Cycle& c);
// det with the cycle-space unit replaced by `flavour`
double det_cycle_at(const Cycle& c, Signature flavour);

double radius_sq(const Cycle& c, Signature sigma);
inline double radius_sq(const Cycle& c) { return radius_sq(c, c.sigma_breve); }

Point2 centre(const Cycle& c, Signature flavour);
Point2 focus(const Cycle& c, Signature flavour, Signature sigma);
inline Point2 focus(const Cycle& c, Signature flavour) { return focus(c, flavour, flavour); }

std::vector<double> roots(const Cycle& c);

Cycle zero_radius_at(double u, double v, Signature sigma_breve);

// left side of the cycle equation drawn in the sigma plane
double cycle_equation(const Cycle& c, double u, double v, Signature sigma);

// least squares on the homogeneous system (smallest singular direction); >= 3 points
Cycle cycle_from_points(const std::vector<Point2>& pts, Signature sigma, Signature sigma_breve = Signature::elliptic(),
                        int s = 1);

bool projectively_equal(const Cycle& a, const Cycle& b, double tol = kProjTol);

inline Cycle real_line(Signature sigma_breve, int s = 1) { return Cycle(0, 0, 1, 0, sigma_breve, s); }

}  // namespace eph
