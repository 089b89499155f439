#include "eph/mech.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "eph/errors.hpp"
#include "eph/hypercomplex.hpp"
#include "eph/quadrature.hpp"

namespace eph {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuadTol = 1e-10;
constexpr double kTruncWidths = 12.0;
// exponential envelopes need more room than Gaussians for the same tail mass
constexpr double kDecayLengths = 40.0;

struct Box {
    double qlo, qhi, plo, phi;
};

Box support(const PhaseState& v) {
    return std::visit(
        [](const auto& s) -> Box {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianState>) {
                const auto& P = s.params;
                const double sq = std::sqrt(P.hbar / (4 * kPi * P.k * P.m));
                const double sp = std::sqrt(P.hbar * P.k * P.m / (4 * kPi));
                return {s.a - kTruncWidths * sq, s.a + kTruncWidths * sq, s.b - kTruncWidths * sp,
                        s.b + kTruncWidths * sp};
            } else if constexpr (std::is_same_v<T, RationalState>) {
                return {-kInf, kInf, -kInf, kInf};
            } else {
                return {s.a - s.r, s.a + s.r, s.b - s.r, s.b + s.r};
            }
        },
        v);
}

const OscParams& params_of(const PhaseState& v) {
    return std::visit([](const auto& s) -> const OscParams& { return s.params; }, v);
}

double bump1(double t) { return std::abs(t) < 1 ? std::exp(-1.0 / (1 - t * t)) : 0.0; }
double bump1_d(double t) {
    if (std::abs(t) >= 1) return 0.0;
    const double w = 1 - t * t;
    return bump1(t) * (-2 * t / (w * w));
}

// integrate over [lo, hi]; infinite ends go through p = centre + w tan(theta)
QuadResult integrate_line(const std::function<C(double)>& f, double lo, double hi, double centre, double width,
                          int nodes, double abs_tol) {
    if (!(lo < hi)) return {C(0.0), true, 0};
    if (std::isfinite(lo) && std::isfinite(hi)) return integrate(f, lo, hi, kQuadTol, nodes, 20, abs_tol);
    const double tlo = std::isfinite(lo) ? std::atan((lo - centre) / width) : -kPi / 2;
    const double thi = std::isfinite(hi) ? std::atan((hi - centre) / width) : kPi / 2;
    auto g = [&](double t) -> C {
        const double ct = std::cos(t);
        if (ct <= 0) return 0.0;
        const double p = centre + width * std::tan(t);
        return f(p) * (width / (ct * ct));
    };
    return integrate(g, tlo, thi, kQuadTol, nodes, 20, abs_tol);
}

void check_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw InputError(std::string(what) + " must be finite");
}

}  // namespace

OscParams::OscParams(double m_, double k_, double hbar_) : m(m_), k(k_), hbar(hbar_) {
    if (!(m > 0) || !(k > 0) || !(hbar > 0) || !std::isfinite(m) || !std::isfinite(k) || !std::isfinite(hbar))
        throw InputError("oscillator parameters must be positive");
}

CharacterMode parse_mode(const std::string& s) {
    if (s == "elliptic" || s == "e" || s == "-1") return CharacterMode::elliptic;
    if (s == "hyperbolic" || s == "h" || s == "1" || s == "+1") return CharacterMode::hyperbolic;
    if (s == "parabolic" || s == "p" || s == "0") return CharacterMode::parabolic;
    throw InputError("unknown mode: " + s);
}

StateKind parse_state_kind(const std::string& s) {
    if (s == "gaussian") return StateKind::gaussian;
    if (s == "rational") return StateKind::rational;
    if (s == "bump") return StateKind::bump;
    throw InputError("unknown state kind: " + s);
}

std::string to_string(CharacterMode m) {
    switch (m) {
        case CharacterMode::elliptic: return "elliptic";
        case CharacterMode::hyperbolic: return "hyperbolic";
        case CharacterMode::parabolic: return "parabolic";
    }
    return "?";
}

std::string to_string(StateKind k) {
    switch (k) {
        case StateKind::gaussian: return "gaussian";
        case StateKind::rational: return "rational";
        case StateKind::bump: return "bump";
    }
    return "?";
}

double state_value(const PhaseState& v, double q, double p) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            const auto& P = s.params;
            if constexpr (std::is_same_v<T, GaussianState>) {
                const double dq = q - s.a, dp = p - s.b;
                return std::exp(-2 * kPi * P.k * P.m * dq * dq / P.hbar - 2 * kPi * dp * dp / (P.hbar * P.k * P.m));
            } else if constexpr (std::is_same_v<T, RationalState>) {
                const double dq = q - s.a, dp = p - s.b;
                return P.hbar * P.hbar / ((dq * dq + P.hbar / (P.k * P.m)) * (dp * dp + P.hbar * P.k * P.m));
            } else {
                return bump1((q - s.a) / s.r) * bump1((p - s.b) / s.r);
            }
        },
        v);
}

std::pair<double, double> state_gradient(const PhaseState& v, double q, double p) {
    return std::visit(
        [&](const auto& s) -> std::pair<double, double> {
            using T = std::decay_t<decltype(s)>;
            const auto& P = s.params;
            const double f = state_value(v, q, p);
            const double dq = q - s.a, dp = p - s.b;
            if constexpr (std::is_same_v<T, GaussianState>) {
                return {f * (-4 * kPi * P.k * P.m * dq / P.hbar), f * (-4 * kPi * dp / (P.hbar * P.k * P.m))};
            } else if constexpr (std::is_same_v<T, RationalState>) {
                return {f * (-2 * dq / (dq * dq + P.hbar / (P.k * P.m))), f * (-2 * dp / (dp * dp + P.hbar * P.k * P.m))};
            } else {
                return {bump1_d(dq / s.r) / s.r * bump1(dp / s.r), bump1(dq / s.r) * bump1_d(dp / s.r) / s.r};
            }
        },
        v);
}

double measure_gaussian(const GaussianState& s, double c) {
    const auto& P = s.params;
    const double d = c - s.a;
    return std::sqrt(2 * P.k * P.m / P.hbar) * std::exp(-2 * kPi * P.k * P.m * d * d / P.hbar);
}

C gaussian_cross_kernel(const GaussianState& v1, const GaussianState& v2, double x) {
    const auto& P = v1.params;
    const double km = P.k * P.m, h = P.hbar;
    const double db = v1.b - v2.b, da = v2.a - v1.a;
    const double re = -kPi / (2 * h * km) * ((h * x + db) * (h * x + db) + db * db) - kPi * km / (2 * h) * 2 * da * da;
    return std::exp(re) * std::polar(1.0, kPi * x * (v1.a + v2.a));
}

MeasureResult measure_gaussian_cross(const GaussianState& v1, const GaussianState& v2, double c) {
    const auto& P = v1.params;
    const double sd = std::sqrt(P.k * P.m / (kPi * P.hbar));
    const double x0 = -(v1.b - v2.b) / P.hbar;
    auto f = [&](double x) { return std::polar(1.0, -2 * kPi * x * c) * gaussian_cross_kernel(v1, v2, x); };
    const double scale = std::sqrt(2 * P.k * P.m / P.hbar);
    auto r = integrate(f, x0 - kTruncWidths * sd, x0 + kTruncWidths * sd, kQuadTol, 64, 20, 1e-13 * scale);
    return {r.value.real(), r.converged};
}

MeasureResult measure_gaussian_quadrature(const GaussianState& s, double c) { return measure_gaussian_cross(s, s, c); }

C lorentzian_transform(double b, double x, const OscParams& p) {
    const double beta = std::sqrt(p.hbar * p.k * p.m);
    return (kPi / beta) * std::exp(-2 * kPi * beta * std::abs(x)) * std::polar(1.0, -2 * kPi * b * x);
}

C rational_hat(const RationalState& u, double q, double x) {
    const auto& P = u.params;
    const double dq = q - u.a;
    return P.hbar * P.hbar / (dq * dq + P.hbar / (P.k * P.m)) * lorentzian_transform(u.b, x, P);
}

namespace {

// (2/hbar) int f(q) conj(g(q)) dq, f and g sums of transformed rational states
MeasureResult rational_pairing(const std::vector<RationalState>& us, const std::vector<RationalState>& ws, double c,
                               int nodes) {
    if (nodes < 256) throw InputError("measure_rational needs at least 256 nodes");
    const auto& P = us.front().params;
    const double h = P.hbar;
    const double beta = std::sqrt(h * P.k * P.m);
    const double decay = h / (8 * kPi * beta);
    const double lo = c - kDecayLengths * decay, hi = c + kDecayLengths * decay;
    std::vector<double> cuts{lo, c, hi};
    for (const auto* group : {&us, &ws})
        for (const auto& u : *group)
            if (u.a > lo && u.a < hi) cuts.push_back(u.a);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto f = [&](double q) {
        const double x = 2 * (q - c) / h;
        C a = 0, b = 0;
        for (const auto& u : us) a += rational_hat(u, q, x);
        for (const auto& w : ws) b += rational_hat(w, q, x);
        return a * std::conj(b);
    };
    const double peak = h * h * h * P.k * P.m * kPi * kPi / (beta * beta);
    MeasureResult out{0.0, true};
    C total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto r = integrate(f, cuts[i], cuts[i + 1], kQuadTol, nodes, 20, 1e-14 * peak * decay);
        total += r.value;
        out.converged = out.converged && r.converged;
    }
    out.value = (2 / h) * total.real();
    return out;
}

}  // namespace

MeasureResult measure_rational(const RationalState& u1, const RationalState& u2, double c, int nodes) {
    return rational_pairing({u1}, {u2}, c, nodes);
}

DualComplex parabolic_cross_kernel(const PhaseState& v1, const PhaseState& v2, double s, double x, double y) {
    const Box b1 = support(v1), b2 = support(v2);
    const double qlo = std::max(b1.qlo, b2.qlo), qhi = std::min(b1.qhi, b2.qhi);
    const double plo = std::max(b1.plo, b2.plo), phi = std::min(b1.phi, b2.phi);
    // the action never moves supports: disjoint boxes pair to zero
    if (!(qlo < qhi) || !(plo < phi)) return {C(0.0), C(0.0)};
    const auto& P = params_of(v2);
    const C tpi(0, 2 * kPi);
    auto inner = [&](double q, bool eps_part) {
        auto g = [&](double p) -> C {
            const double f1 = state_value(v1, q, p);
            if (f1 == 0) return 0.0;
            const C phase = std::exp(-tpi * (x * q + y * p));
            C rho;
            if (!eps_part) {
                rho = phase * state_value(v2, q, p);
            } else {
                const auto [fq, fp] = state_gradient(v2, q, p);
                rho = phase * P.hbar * (s * state_value(v2, q, p) + y / tpi * fq - x / tpi * fp);
            }
            return f1 * std::conj(rho);
        };
        return integrate_line(g, plo, phi, 0.5 * (plo + phi), 1.0, 64, 1e-15).value;
    };
    auto outer = [&](bool eps_part) {
        auto g = [&](double q) { return inner(q, eps_part); };
        return integrate_line(g, qlo, qhi, 0.5 * (qlo + qhi), 1.0, 64, 1e-15).value;
    };
    return {outer(false), outer(true)};
}

MeasureResult parabolic_measure(const PhaseState& v1, const PhaseState& v2, double c) {
    const Box b1 = support(v1), b2 = support(v2);
    const double plo = std::max(b1.plo, b2.plo), phi = std::min(b1.phi, b2.phi);
    if (!(c > std::max(b1.qlo, b2.qlo) && c < std::min(b1.qhi, b2.qhi)) || !(plo < phi)) return {0.0, true};
    auto g = [&](double p) -> C { return state_value(v1, c, p) * state_value(v2, c, p); };
    const double centre = std::isfinite(plo) ? 0.5 * (plo + phi) : 0.0;
    const auto& P = params_of(v1);
    auto r = integrate_line(g, plo, phi, centre, std::sqrt(P.hbar * P.k * P.m), 64, 1e-15);
    return {r.value.real(), r.converged};
}

double centre_pairing(CharacterMode mode, double s, const OscParams& p) {
    const double theta = 2 * kPi * p.hbar * s;
    if (mode == CharacterMode::hyperbolic) {
        if (std::abs(theta) > 700) throw DomainError("hyperbolic character argument exceeds overflow guard");
        // exp(h theta) in light-cone coordinates (e^theta, e^-theta); conjugation swaps them
        const double plus = std::exp(theta), minus = std::exp(-theta);
        return plus * minus;
    }
    const Signature sig = mode == CharacterMode::elliptic ? Signature::elliptic() : Signature::parabolic();
    const Hypercomplex z = exp_unit(theta, sig);
    return mul(z, conj(z)).re;
}

double two_slit_closed_form(double b, double c, const OscParams& P) {
    const double km = P.k * P.m, h = P.hbar;
    return 2 * std::sqrt(2 * km / h) * std::exp(-2 * kPi * km * c * c / h) *
           (1 + std::exp(-2 * kPi * b * b / (km * h)) * std::cos(4 * kPi * c * b / h));
}

MeasureResult two_slit_measure(CharacterMode mode, StateKind kind, double b, double c, const OscParams& params) {
    check_finite(b, "b");
    check_finite(c, "c");
    if (mode == CharacterMode::parabolic) {
        std::array<PhaseState, 2> v;
        switch (kind) {
            case StateKind::gaussian: v = {GaussianState{0, b, params}, GaussianState{0, -b, params}}; break;
            case StateKind::rational: v = {RationalState{0, b, params}, RationalState{0, -b, params}}; break;
            case StateKind::bump: v = {BumpState{0, b, 1, params}, BumpState{0, -b, 1, params}}; break;
        }
        MeasureResult out{0.0, true};
        const double chi = centre_pairing(mode, 0.0, params);
        for (const auto& vi : v)
            for (const auto& vj : v) {
                auto r = parabolic_measure(vi, vj, c);
                out.value += chi * r.value;
                out.converged = out.converged && r.converged;
            }
        return out;
    }
    if (kind == StateKind::bump) throw InputError("bump states are only supported in parabolic mode");
    if (mode == CharacterMode::elliptic && kind == StateKind::gaussian) return {two_slit_closed_form(b, c, params), true};
    // s-dependence factors out through the character pairing; hyperbolic uses genuine double-number arithmetic
    const double chi = centre_pairing(mode, 0.25, params);
    MeasureResult out{0.0, true};
    if (kind == StateKind::gaussian) {
        const std::array<GaussianState, 2> v{GaussianState{0, b, params}, GaussianState{0, -b, params}};
        for (const auto& vi : v)
            for (const auto& vj : v) {
                auto r = measure_gaussian_cross(vi, vj, c);
                out.value += chi * r.value;
                out.converged = out.converged && r.converged;
            }
    } else {
        const std::vector<RationalState> u{RationalState{0, b, params}, RationalState{0, -b, params}};
        auto r = rational_pairing(u, u, c, 256);
        out.value = chi * r.value;
        out.converged = r.converged;
    }
    return out;
}

Curve interference_curve(CharacterMode mode, StateKind kind, double b, const OscParams& params, double cmin,
                         double cmax, int samples) {
    if (samples < 3) throw InputError("curve needs at least 3 samples");
    if (!(cmin < cmax)) throw InputError("empty c range");
    Curve out;
    out.points.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double c = cmin + (cmax - cmin) * i / (samples - 1);
        auto r = two_slit_measure(mode, kind, b, c, params);
        out.points.push_back({c, r.value});
        out.converged = out.converged && r.converged;
    }
    return out;
}

int count_interior_maxima(const std::vector<double>& v, double rel_prominence) {
    if (v.size() < 3) return 0;
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    const double floor = rel_prominence * std::max(*mx - *mn, std::abs(*mx));
    int count = 0;
    const std::size_t n = v.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(v[i] > v[i - 1])) continue;
        // plateau: extend to the right
        std::size_t j = i;
        while (j + 1 < n && v[j + 1] == v[i]) ++j;
        if (j + 1 >= n || !(v[j + 1] < v[i])) continue;
        double left = v[i];
        for (std::size_t l = i; l-- > 0;) {
            if (v[l] > v[i]) break;
            left = std::min(left, v[l]);
        }
        double right = v[i];
        for (std::size_t r = j + 1; r < n; ++r) {
            if (v[r] > v[i]) break;
            right = std::min(right, v[r]);
        }
        if (v[i] - std::max(left, right) > floor) ++count;
        i = j;
    }
    return count;
}

double probability_addition(double l1, double l2, double A, CharacterMode mode) {
    if (!(l1 >= 0) || !(l2 >= 0)) throw InputError("probabilities must be non-negative");
    check_finite(A, "A");
    constexpr double tol = 1e-12;
    switch (mode) {
        case CharacterMode::elliptic:
            if (std::abs(A) > 1 + tol) throw InputError("elliptic addition needs |A| <= 1");
            break;
        case CharacterMode::hyperbolic:
            if (std::abs(A) < 1 - tol) throw InputError("hyperbolic addition needs |A| >= 1");
            break;
        case CharacterMode::parabolic:
            if (std::abs(A) > tol) throw InputError("parabolic addition needs A = 0");
            break;
    }
    return l1 + l2 + 2 * A * std::sqrt(l1 * l2);
}

std::pair<double, double> oscillator_flow(double x, double y, double t, const OscParams& P) {
    const double c = std::cos(P.k * t), s = std::sin(P.k * t), mk = P.m * P.k;
    return {x * c + mk * y * s, -(x / mk) * s + y * c};
}

double oscillator_energy(double x, double y, const OscParams& P) {
    const double mky = P.m * P.k * y;
    return x * x + mky * mky;
}

}  // namespace eph
