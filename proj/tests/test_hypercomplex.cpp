#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eph/hypercomplex.hpp"
#include "eph/random.hpp"

using namespace eph;

namespace {
const Signature E = Signature::elliptic(), P = Signature::parabolic(), H = Signature::hyperbolic();
const Signature kAll[] = {E, P, H};
}  // namespace

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(Signature(2), InputError);
    CHECK_THROWS_AS(Signature(-2), InputError);
    CHECK(Signature(0) == P);
}

TEST_CASE("mul oracles") {
    CHECK(approx_equal(mul({0, 1, E}, {0, 1, E}), {-1, 0, E}));
    CHECK(approx_equal(mul({0, 1, P}, {0, 1, P}), {0, 0, P}));
    CHECK(approx_equal(mul({1, 2, H}, {3, 4, H}), {11, 10, H}));
    CHECK_THROWS_AS(mul({1, 0, E}, {1, 0, H}), InputError);
    CHECK_THROWS_AS(add({1, 0, P}, {1, 0, H}), InputError);
}

TEST_CASE("conj oracles") {
    CHECK(approx_equal(conj({1, 2, E}), {1, -2, E}));
    CHECK(approx_equal(conj({5, 0, H}), {5, 0, H}));
    CHECK(approx_equal(conj(conj({3, 7, P})), {3, 7, P}));
}

TEST_CASE("modulus oracles") {
    CHECK(modulus_sq({3, 4, E}) == doctest::Approx(25));
    CHECK(modulus_sq({3, 4, P}) == doctest::Approx(9));
    CHECK(modulus_sq({5, 3, H}) == doctest::Approx(16));
}

TEST_CASE("argument oracles and domain") {
    CHECK(argument({1, 1, P}) == doctest::Approx(1));
    for (auto s : kAll) CHECK(argument({1, 0, s}) == 0);
    CHECK(argument({2, 1, H}) == doctest::Approx(0.549306144334055).epsilon(1e-12));
    CHECK(argument({0, 1, E}) == doctest::Approx(std::numbers::pi / 2));
    CHECK_THROWS_AS(argument({0, 0, E}), DomainError);
    CHECK_THROWS_AS(argument({0, 1, P}), DomainError);
    CHECK_THROWS_AS(argument({1, 1, H}), DomainError);
    CHECK_THROWS_AS(argument({1, -2, H}), DomainError);
}

TEST_CASE("exp_unit oracles") {
    CHECK(approx_equal(exp_unit(2, P), {1, 2, P}));
    for (auto s : kAll) CHECK(approx_equal(exp_unit(0, s), {1, 0, s}));
    CHECK(approx_equal(exp_unit(std::numbers::pi, E), {-1, 0, E}));
    CHECK(approx_equal(exp_unit(1, H), {std::cosh(1.0), std::sinh(1.0), H}));
}

TEST_CASE("division and zero divisors") {
    CHECK_THROWS_AS(div({1, 0, P}, {0, 3, P}), DomainError);
    CHECK_THROWS_AS(div({1, 0, H}, {2, 2, H}), DomainError);
    CHECK_THROWS_AS(div({1, 0, H}, {2, -2, H}), DomainError);
    // zero divisors remain legal values
    CHECK(approx_equal(mul({1, 1, H}, {1, -1, H}), {0, 0, H}));
    for (auto s : kAll) {
        const Hypercomplex a{2, 0.5, s}, b{1.5, -0.25, s};
        CHECK(approx_equal(mul(div(a, b), b), a));
    }
}

TEST_CASE("property: multiplicative modulus, exp law, conj anti-automorphism") {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Signature s = kAll[i % 3];
        const Hypercomplex a{rng.uniform(-3, 3), rng.uniform(-3, 3), s};
        const Hypercomplex b{rng.uniform(-3, 3), rng.uniform(-3, 3), s};
        CHECK(std::abs(modulus_sq(a * b) - modulus_sq(a) * modulus_sq(b)) <= 1e-12 * (1 + std::abs(modulus_sq(a) * modulus_sq(b))));
        CHECK(approx_equal(conj(a * b), conj(a) * conj(b)));
        CHECK(approx_equal(conj(conj(a)), a));
        const double t = rng.uniform(-2, 2), u = rng.uniform(-2, 2);
        CHECK(approx_equal(exp_unit(t, s) * exp_unit(u, s), exp_unit(t + u, s), 1e-12 * 16));
    }
}

TEST_CASE("parabolic rotation is a shear") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(-5, 5), b = rng.uniform(-5, 5), t = rng.uniform(-5, 5);
        const Hypercomplex r = exp_unit(t, P) * Hypercomplex{a, b, P};
        CHECK(r.re == a);
        CHECK(r.im == a * t + b);
    }
}

TEST_CASE("string form") {
    CHECK(to_string({1, -2, E}) == "1-2i");
    CHECK(to_string({0, 1, H}) == "0+1h");
}
