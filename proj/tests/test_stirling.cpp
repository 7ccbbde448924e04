#include <doctest.h>

#include "degenstir/stirling.hpp"
#include "oracles.hpp"

using namespace degenstir;

namespace {

LambdaPoly lp(std::vector<Rational> coeffs) { return LambdaPoly::from_coeffs(std::move(coeffs)); }

}  // namespace

TEST_CASE("deg falling factorial") {
    CHECK(deg_falling_factorial_x(0) == BivarPoly::one());

    const auto f2 = deg_falling_factorial_x(2);  // x^2 - l x
    CHECK(f2.coeff(2) == LambdaPoly::one());
    CHECK(f2.coeff(1) == -lambda_var());
    CHECK(f2.coeff(0).is_zero());

    // (-x)_{n,l} = (-1)^n (x)_{n,-l}
    for (int n = 0; n <= 10; ++n) CHECK(negated_falling_check(n));
}

TEST_CASE("triangle by recurrence has the known small entries") {
    const auto tri = build_triangle(TriangleAlgorithm::Recurrence, 4);
    CHECK(tri.at(2, 1) == lp({Rational(1), Rational(-1)}));
    CHECK(tri.at(3, 2) == lp({Rational(3), Rational(-3)}));
    // (1-l)(7-11l) = 7 - 18l + 11l^2
    CHECK(tri.at(4, 2) == lp({Rational(7), Rational(-18), Rational(11)}));
    CHECK(tri.at(0, 0) == LambdaPoly::one());
    CHECK(tri.at(3, 0).is_zero());
    CHECK(tri.at(2, 3).is_zero());  // k > n convention
    CHECK_THROWS_AS(tri.at(5, 0), std::out_of_range);
}

TEST_CASE("triangle by alternating sums") {
    const auto tri = build_triangle(TriangleAlgorithm::EulerSum, 10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(tri.at(n, n) == LambdaPoly::one());
        // {n 1}_l = (1)_{n,l} for n >= 1
        if (n >= 1) CHECK(tri.at(n, 1) == deg_falling_factorial(LambdaPoly::one(), n));
    }
    // l := 0 hits the brute-force partition count
    CHECK(tri.at(4, 2).eval(Rational(0)) == Rational(testing::count_set_partitions(4, 2)));
    CHECK(testing::count_set_partitions(4, 2) == 7);
}

TEST_CASE("triangle by series extraction") {
    const auto tri = build_triangle(TriangleAlgorithm::Egf, 8);
    for (int n = 1; n <= 8; ++n) CHECK(tri.at(n, 0).is_zero());
    CHECK(tri.at(0, 0) == LambdaPoly::one());
    CHECK(tri.at(3, 2) == lp({Rational(3), Rational(-3)}));
}

TEST_CASE("three algorithms agree") {
    const auto a = shared_triangle(TriangleAlgorithm::Recurrence, 14);
    const auto b = shared_triangle(TriangleAlgorithm::EulerSum, 14);
    const auto c = shared_triangle(TriangleAlgorithm::Egf, 14);
    CHECK(!first_mismatch(*a, *b));
    CHECK(!first_mismatch(*a, *c));
}

TEST_CASE("memoized tables are shared") {
    const auto a = shared_triangle(TriangleAlgorithm::Recurrence, 9);
    const auto b = shared_triangle(TriangleAlgorithm::Recurrence, 9);
    CHECK(a.get() == b.get());
}

TEST_CASE("first_mismatch reports the smallest difference") {
    const auto good = build_triangle(TriangleAlgorithm::Recurrence, 4);
    auto rows = good.rows();
    rows[3][1] += LambdaPoly::one();
    const StirlingTriangle tampered(TriangleAlgorithm::Recurrence, rows);
    const auto where = first_mismatch(good, tampered);
    REQUIRE(where.has_value());
    CHECK(*where == std::make_pair(3, 1));
}

TEST_CASE("classical limit matches the classical recurrence") {
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 20);
    const auto classical = testing::classical_stirling_triangle(20);
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(tri->at(n, k).eval(Rational(0)) ==
                  classical[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

TEST_CASE("degree bound deg_l {n k} <= n - k") {
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 16);
    for (int n = 0; n <= 16; ++n)
        for (int k = 0; k <= n; ++k) CHECK(tri->at(n, k).degree() <= n - k);
}

TEST_CASE("near-diagonal closed forms") {
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 20);
    const auto one_minus_l = LambdaPoly::one() - lambda_var();
    for (int n = 2; n <= 20; ++n) {
        CHECK(tri->at(n, n - 1) == one_minus_l * binomial_int(n, 2));
        const auto expected = one_minus_l * lp({Rational(3 * n - 5), Rational(-(3 * n - 1))}) *
                              Rational(static_cast<long long>(n) * (n - 1) * (n - 2), 24);
        CHECK(tri->at(n, n - 2) == expected);
    }
}

TEST_CASE("falling-basis expansion equals triangle rows") {
    SUBCASE("hand-checked row 2") {
        const auto coeffs = expand_in_falling_basis(2);
        REQUIRE(coeffs.size() == 3);
        CHECK(coeffs[0].is_zero());
        CHECK(coeffs[1] == lp({Rational(1), Rational(-1)}));
        CHECK(coeffs[2] == LambdaPoly::one());
    }
    SUBCASE("row 0") {
        const auto coeffs = expand_in_falling_basis(0);
        REQUIRE(coeffs.size() == 1);
        CHECK(coeffs[0] == LambdaPoly::one());
    }
    SUBCASE("rows up to 10 against the recurrence") {
        const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 10);
        for (int n = 0; n <= 10; ++n) {
            const auto coeffs = expand_in_falling_basis(n);
            for (int k = 0; k <= n; ++k) CHECK(coeffs[static_cast<std::size_t>(k)] == tri->at(n, k));
        }
    }
}

TEST_CASE("product-of-columns convolution") {
    // (n,r,a) = (3,1,1): both sides equal 2 {3 2}_l = 6(1-l)
    CHECK(convolution_check(3, 1, 1));
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 3);
    CHECK(tri->at(3, 2) * binomial_int(2, 1) == lp({Rational(6), Rational(-6)}));

    // diagonal case n = r + a
    CHECK(convolution_check(5, 2, 3));

    for (int n = 2; n <= 12; ++n)
        for (int r = 1; r < n; ++r)
            for (int a = 1; r + a <= n; ++a) CHECK(convolution_check(n, r, a));

    CHECK_THROWS_AS(convolution_check(2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(convolution_check(3, 0, 1), std::invalid_argument);
}

TEST_CASE("binomial facts as polynomial identities") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(binomial_reflection_check(n));
        CHECK(alternating_binomial_sum_check(n));
        for (const auto& y : {Rational(2), Rational(-1, 2), Rational(7, 3)}) {
            CHECK(vandermonde_check(n, y));
            CHECK(deg_binomial_convolution_check(n, y));
        }
    }
}

TEST_CASE("symbolic-upper binomial column sums") {
    // sum_j {2 j}_l j! C(l, j-1) at n=2, a=1 equals 1!{2 1}_{-l} = 1 + l
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 2);
    const LambdaPoly sum = tri->at(2, 1) * factorial(1) * binomial(lambda_var(), 0) +
                           tri->at(2, 2) * factorial(2) * binomial(lambda_var(), 1);
    const auto expected = LambdaPoly::from_coeffs({Rational(1), Rational(1)});
    CHECK(sum == expected);
    CHECK(scale_lambda(tri->at(2, 1), Rational(-1)) == expected);
}

TEST_CASE("alternating shift expansion in z") {
    // n = a = 1: both sides equal 2z - 1 - l
    CHECK(alternating_shift_expansion_check(1, 1));
    for (int n = 1; n <= 6; ++n)
        for (int a = 1; a <= 6; ++a) CHECK(alternating_shift_expansion_check(n, a));
}
