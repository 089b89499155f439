#pragma once

#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eph {

struct OscParams {
    double m = 1, k = 1, hbar = 1;
    OscParams() = default;
    OscParams(double m_, double k_, double hbar_);
};

struct GaussianState {
    double a = 0, b = 0;
    OscParams params;
};

struct RationalState {
    double a = 0, b = 0;
    OscParams params;
};

// smooth compactly supported bump on [a-r, a+r] x [b-r, b+r]
struct BumpState {
    double a = 0, b = 0, r = 1;
    OscParams params;
};

using PhaseState = std::variant<GaussianState, RationalState, BumpState>;

enum class CharacterMode { elliptic, hyperbolic, parabolic };
enum class StateKind { gaussian, rational, bump };

CharacterMode parse_mode(const std::string& s);
StateKind parse_state_kind(const std::string& s);
std::string to_string(CharacterMode m);
std::string to_string(StateKind k);

struct MeasureResult {
    double value = 0;
    bool converged = true;
};

double state_value(const PhaseState& v, double q, double p);
// partial derivatives (dq, dp)
std::pair<double, double> state_gradient(const PhaseState& v, double q, double p);

double measure_gaussian(const GaussianState& state, double c);
MeasureResult measure_gaussian_quadrature(const GaussianState& state, double c);

// <v1, rho(0, x, 0) v2> for the elliptic representation, prefactor 4/hbar dropped
std::complex<double> gaussian_cross_kernel(const GaussianState& v1, const GaussianState& v2, double x);
MeasureResult measure_gaussian_cross(const GaussianState& v1, const GaussianState& v2, double c);

// closed-form transform p -> x of 1/((p-b)^2 + hbar k m)
std::complex<double> lorentzian_transform(double b, double x, const OscParams& p);
std::complex<double> rational_hat(const RationalState& u, double q, double x);
MeasureResult measure_rational(const RationalState& u1, const RationalState& u2, double c, int nodes = 256);

// dual-number-valued kernel: re + p * eps
struct DualComplex {
    std::complex<double> re, eps;
};
DualComplex parabolic_cross_kernel(const PhaseState& v1, const PhaseState& v2, double s, double x, double y);
MeasureResult parabolic_measure(const PhaseState& v1, const PhaseState& v2, double c);

// s-character pairing <chi(s), chi(s)> in the algebra of the mode; throws past the overflow guard
double centre_pairing(CharacterMode mode, double s, const OscParams& p);

MeasureResult two_slit_measure(CharacterMode mode, StateKind kind, double b, double c, const OscParams& params);
double two_slit_closed_form(double b, double c, const OscParams& params);

struct CurvePoint {
    double c, value;
};
struct Curve {
    std::vector<CurvePoint> points;
    bool converged = true;
};
Curve interference_curve(CharacterMode mode, StateKind kind, double b, const OscParams& params, double cmin = -2,
                         double cmax = 2, int samples = 401);
int count_interior_maxima(const std::vector<double>& values, double rel_prominence = 1e-9);

double probability_addition(double l1, double l2, double A, CharacterMode mode = CharacterMode::elliptic);

std::pair<double, double> oscillator_flow(double x, double y, double t, const OscParams& params);
double oscillator_energy(double x, double y, const OscParams& params);

}  // namespace eph
