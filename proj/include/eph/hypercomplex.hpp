#pragma once

#include <cmath>
#include <string>

#include "eph/errors.hpp"

namespace eph {

// iota^2 = sigma: -1 elliptic (complex), 0 parabolic (dual), +1 hyperbolic (double)
class Signature {
public:
    constexpr Signature() = default;
    constexpr explicit Signature(int s) : s_(s) {
        if (s < -1 || s > 1) throw InputError("signature must be -1, 0 or 1");
    }
    constexpr int value() const { return s_; }
    constexpr operator int() const { return s_; }
    friend constexpr bool operator==(Signature a, Signature b) { return a.s_ == b.s_; }

    static constexpr Signature elliptic() { return Signature(-1); }
    static constexpr Signature parabolic() { return Signature(0); }
    static constexpr Signature hyperbolic() { return Signature(1); }

private:
    int s_ = -1;
};

const char* signature_name(Signature s);

struct Hypercomplex {
    double re = 0.0;
    double im = 0.0;
    Signature sig;

    constexpr Hypercomplex() = default;
    constexpr Hypercomplex(double r, double i, Signature s) : re(r), im(i), sig(s) {}

    static constexpr Hypercomplex real(double r, Signature s) { return {r, 0.0, s}; }
    static constexpr Hypercomplex unit(Signature s) { return {0.0, 1.0, s}; }
};

constexpr double kHcTol = 1e-12;

inline void require_same(const Hypercomplex& a, const Hypercomplex& b) {
    if (a.sig != b.sig) throw InputError("hypercomplex signature mismatch");
}

inline Hypercomplex add(const Hypercomplex& a, const Hypercomplex& b) {
    require_same(a, b);
    return {a.re + b.re, a.im + b.im, a.sig};
}

inline Hypercomplex sub(const Hypercomplex& a, const Hypercomplex& b) {
    require_same(a, b);
    return {a.re - b.re, a.im - b.im, a.sig};
}

inline Hypercomplex mul(const Hypercomplex& a, const Hypercomplex& b) {
    require_same(a, b);
    const double s = a.sig;
    return {a.re * b.re + s * a.im * b.im, a.re * b.im + a.im * b.re, a.sig};
}

inline Hypercomplex scale(const Hypercomplex& a, double t) { return {a.re * t, a.im * t, a.sig}; }

inline Hypercomplex conj(const Hypercomplex& a) { return {a.re, -a.im, a.sig}; }

inline double modulus_sq(const Hypercomplex& a) { return a.re * a.re - double(a.sig) * a.im * a.im; }

// mul by conj, divide by modulus_sq; zero divisors rejected
Hypercomplex div(const Hypercomplex& a, const Hypercomplex& b);

double argument(const Hypercomplex& a);

Hypercomplex exp_unit(double t, Signature sig);

inline bool approx_equal(const Hypercomplex& a, const Hypercomplex& b, double tol = kHcTol) {
    return a.sig == b.sig && std::abs(a.re - b.re) <= tol && std::abs(a.im - b.im) <= tol;
}

inline Hypercomplex operator+(const Hypercomplex& a, const Hypercomplex& b) { return add(a, b); }
inline Hypercomplex operator-(const Hypercomplex& a, const Hypercomplex& b) { return sub(a, b); }
inline Hypercomplex operator-(const Hypercomplex& a) { return {-a.re, -a.im, a.sig}; }
inline Hypercomplex operator*(const Hypercomplex& a, const Hypercomplex& b) { return mul(a, b); }
inline Hypercomplex operator*(double t, const Hypercomplex& a) { return scale(a, t); }
inline Hypercomplex operator*(const Hypercomplex& a, double t) { return scale(a, t); }
inline Hypercomplex operator/(const Hypercomplex& a, const Hypercomplex& b) { return div(a, b); }

std::string to_string(const Hypercomplex& a);

}  // namespace eph
