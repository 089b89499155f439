#include "eph/hypercomplex.hpp"

#include <cstdio>

namespace eph {

const char* signature_name(Signature s) {
    switch (s.value()) {
        case -1: return "elliptic";
        case 0: return "parabolic";
        default: return "hyperbolic";
    }
}

Hypercomplex div(const Hypercomplex& a, const Hypercomplex& b) {
    require_same(a, b);
    const double d = modulus_sq(b);
    if (d == 0.0) throw DomainError("division by a zero divisor");
    const Hypercomplex n = mul(a, conj(b));
    return {n.re / d, n.im / d, a.sig};
}

double argument(const Hypercomplex& a) {
    switch (a.sig.value()) {
        case -1:
            if (a.re == 0.0 && a.im == 0.0) throw DomainError("argument of zero");
            return std::atan2(a.im, a.re);
        case 0:
            if (a.re == 0.0) throw DomainError("parabolic argument needs re != 0");
            return a.im / a.re;
        default:
            if (!(std::abs(a.re) > std::abs(a.im)))
                throw DomainError("hyperbolic argument needs |re| > |im|");
            return std::atanh(a.im / a.re);
    }
}

Hypercomplex exp_unit(double t, Signature sig) {
    switch (sig.value()) {
        case -1: return {std::cos(t), std::sin(t), sig};
        case 0: return {1.0, t, sig};
        default: return {std::cosh(t), std::sinh(t), sig};
    }
}

std::string to_string(const Hypercomplex& a) {
    static const char unit[] = {'i', 'p', 'h'};
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12g%c", a.re, a.im, unit[a.sig.value() + 1]);
    return buf;
}

}  // namespace eph
