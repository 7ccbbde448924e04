#include <doctest.h>

#include <random>

#include "degenstir/series.hpp"

using namespace degenstir;

namespace {

std::mt19937_64 rng(555123);

TruncSeries<Rational> random_unit_series(int order) {
    std::uniform_int_distribution<int> c(-5, 5);
    TruncSeries<Rational> s(order);
    s[0] = Rational(1);
    for (int i = 1; i <= order; ++i) s[i] = Rational(c(rng));
    return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    TruncSeries<Rational> a(2), b(2);
    a[0] = Rational(1);
    a[1] = Rational(1);
    b[0] = Rational(1);
    b[1] = Rational(-1);
    const auto prod = a * b;
    CHECK(prod[0] == Rational(1));
    CHECK(prod[1] == Rational(0));
    CHECK(prod[2] == Rational(-1));

    const auto one = TruncSeries<Rational>::constant(Rational(1), 2);
    CHECK(a * one == a);
    CHECK_THROWS_AS(a * TruncSeries<Rational>(3), MismatchError);
}

TEST_CASE("degenerate exponential coefficients") {
    const auto e = degenerate_exp(LambdaPoly::one(), 2);
    CHECK(e[0] == LambdaPoly::one());
    CHECK(e[1] == LambdaPoly::one());
    // (1)_{2,l}/2! = (1-l)/2
    CHECK(e[2] == LambdaPoly::from_coeffs({Rational(1, 2), Rational(-1, 2)}));

    // constant term is 1 for any exponent
    const auto ex = degenerate_exp_x(4);
    CHECK(ex[0] == BivarPoly::one());

    // l := 0 collapses to the classical exponential
    const auto e8 = degenerate_exp(LambdaPoly::one(), 8);
    for (int k = 0; k <= 8; ++k) CHECK(e8[k].eval(Rational(0)) == factorial(k).inverse());
}

TEST_CASE("classical product law survives the l := 0 limit") {
    const auto e = degenerate_exp(LambdaPoly::one(), 8);
    const auto classical = map_series(e, [](const LambdaPoly& c) { return c.eval(Rational(0)); });
    const auto doubled = classical * classical;
    for (int k = 0; k <= 8; ++k) CHECK(doubled[k] == pow(Rational(2), k) * factorial(k).inverse());
}

TEST_CASE("series powers") {
    TruncSeries<Rational> one_plus_t(2);
    one_plus_t[0] = Rational(1);
    one_plus_t[1] = Rational(1);

    const auto squared = series_pow(one_plus_t, Rational(2));
    CHECK(squared[0] == Rational(1));
    CHECK(squared[1] == Rational(2));
    CHECK(squared[2] == Rational(1));

    const auto root = series_pow(one_plus_t, Rational(1, 2));
    CHECK(root[0] == Rational(1));
    CHECK(root[1] == Rational(1, 2));
    CHECK(root[2] == Rational(-1, 8));

    for (int round = 0; round < 10; ++round) {
        const auto a = random_unit_series(12);
        CHECK(series_pow(series_pow(a, Rational(1, 2)), Rational(2)) == a);
        for (int k = 0; k <= 6; ++k) CHECK(series_pow(a, Rational(k)) == series_pow_int(a, k));
    }

    TruncSeries<Rational> not_unit(2);
    not_unit[0] = Rational(2);
    CHECK_THROWS_AS(series_pow(not_unit, Rational(1, 2)), ConstantTermError);
}

TEST_CASE("series inversion") {
    TruncSeries<Rational> one_minus_t(3);
    one_minus_t[0] = Rational(1);
    one_minus_t[1] = Rational(-1);
    const auto geo = series_invert(one_minus_t);
    for (int k = 0; k <= 3; ++k) CHECK(geo[k] == Rational(1));

    // hand inversion of (e_l(t)-1)/t = 1 + (1-l)t/2 + ... at first order
    const auto inv = series_invert(deg_exp_minus_one_over_t(1));
    CHECK(inv[0] == LambdaPoly::one());
    CHECK(inv[1] == LambdaPoly::from_coeffs({Rational(-1, 2), Rational(1, 2)}));

    for (int round = 0; round < 10; ++round) {
        const auto a = random_unit_series(10);
        const auto b = series_invert(a);
        CHECK(a * b == TruncSeries<Rational>::constant(Rational(1), 10));
        CHECK(b * a == TruncSeries<Rational>::constant(Rational(1), 10));
    }

    CHECK_THROWS_AS(series_invert(TruncSeries<Rational>(4)), ConstantTermError);
    TruncSeries<LambdaPoly> bad(2);
    bad[0] = lambda_var();
    CHECK_THROWS_AS(series_invert(bad), ConstantTermError);
}

TEST_CASE("exponential-convention coefficient extraction") {
    const auto e = degenerate_exp(LambdaPoly::one(), 6);
    // k! * [t^k] recovers (1)_{k,l}
    for (int k = 0; k <= 6; ++k)
        CHECK(egf_coefficient(e, k) == falling_product(LambdaPoly::one(), lambda_var(), k));

    // (e_l(t)-1)^2/2! carries 3(1-l) at index 3
    auto base = degenerate_exp(LambdaPoly::one(), 4);
    base[0] -= LambdaPoly::one();
    const auto square = (base * base) * Rational(1, 2);
    CHECK(egf_coefficient(square, 3) == LambdaPoly::from_coeffs({Rational(3), Rational(-3)}));

    CHECK(egf_coefficient(e, 0) == LambdaPoly::one());
    CHECK_THROWS_AS(egf_coefficient(e, 7), MismatchError);
}

TEST_CASE("additivity of exponents, one variable symbolic") {
    // e_l^{x+y}(t) = e_l^x(t) e_l^y(t) with y swept over rationals.
    const int order = 6;
    const auto symbolic = degenerate_exp_x(order);
    for (const auto& y : {Rational(1), Rational(-2), Rational(1, 3), Rational(5, 2)}) {
        const auto shifted = degenerate_exp_poly(x_var() + BivarPoly(LambdaPoly(y)), order);
        const auto scalar = degenerate_exp(LambdaPoly(y), order);
        const auto lifted = map_series(scalar, [](const LambdaPoly& c) { return BivarPoly(c); });
        CHECK(shifted == symbolic * lifted);
    }
}

TEST_CASE("truncation consistency") {
    const auto full = degenerate_exp(LambdaPoly::one(), 12);
    const auto low = degenerate_exp(LambdaPoly::one(), 7);
    CHECK(full.truncated(7) == low);
    const auto inv_full = series_invert(deg_exp_minus_one_over_t(12));
    const auto inv_low = series_invert(deg_exp_minus_one_over_t(7));
    CHECK(inv_full.truncated(7) == inv_low);
    CHECK_THROWS_AS(low.truncated(9), MismatchError);
}

TEST_CASE("ratio series against known coefficients") {
    const auto r0 = ratio_power_series(0, 4);
    CHECK(r0 == TruncSeries<LambdaPoly>::constant(LambdaPoly::one(), 4));

    // power 1 at index 1: (1-l)/2; power 2 at index 1: 1-l
    const auto r1 = ratio_power_series(1, 4);
    CHECK(r1[1] == LambdaPoly::from_coeffs({Rational(1, 2), Rational(-1, 2)}));
    const auto r2 = ratio_power_series(2, 4);
    CHECK(r2[1] == LambdaPoly::from_coeffs({Rational(1), Rational(-1)}));
}
