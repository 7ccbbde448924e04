#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "degenstir/polynomial.hpp"

namespace degenstir {

enum class TriangleAlgorithm { Recurrence, EulerSum, Egf };

const char* algorithm_name(TriangleAlgorithm algo);
std::optional<TriangleAlgorithm> algorithm_from_name(std::string_view name);

/// Lower-triangular table of the deformed second-kind Stirling numbers
/// {n k}_l as LambdaPoly values, tagged by the algorithm that produced it.
class StirlingTriangle {
public:
    StirlingTriangle(TriangleAlgorithm algo, std::vector<std::vector<LambdaPoly>> rows)
        : algo_(algo), rows_(std::move(rows)) {}

    TriangleAlgorithm algorithm() const { return algo_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    /// {n k}_l; zero outside 0 <= k <= n, throws beyond the built range.
    const LambdaPoly& at(int n, int k) const;

    const std::vector<std::vector<LambdaPoly>>& rows() const { return rows_; }

private:
    TriangleAlgorithm algo_;
    std::vector<std::vector<LambdaPoly>> rows_;
};

StirlingTriangle build_triangle(TriangleAlgorithm algo, int n_max);

/// Memoized access: one table per (algorithm, n_max), built on first use.
std::shared_ptr<const StirlingTriangle> shared_triangle(TriangleAlgorithm algo, int n_max);

/// Lexicographically smallest (n, k) where the tables differ, if any.
std::optional<std::pair<int, int>> first_mismatch(const StirlingTriangle& a, const StirlingTriangle& b);

/// (x)_{n,l} = x(x-l)...(x-(n-1)l) with x symbolic; sign -1 builds (x)_{n,-l}.
BivarPoly deg_falling_factorial_x(int n, int sign = 1);

/// (v)_{n,l} for a concrete v in Q[l] (covers rational v via LambdaPoly(v)).
LambdaPoly deg_falling_factorial(const LambdaPoly& value, int n, int sign = 1);

/// Coefficients of (x)_{n,l} in the classical falling-factorial basis (x)_k;
/// index k of the result is the coefficient of (x)_k. Equals triangle row n.
std::vector<LambdaPoly> expand_in_falling_basis(int n);

/// C(r+a, r) {n r+a}_l = sum_{k=r}^{n} C(n,k) {k r}_l {n-k a}_l.
/// Preconditions: n >= r + a >= 1, r >= 1, a >= 1.
bool convolution_check(int n, int r, int a);

// The five basic facts about falling factorials and binomials, as exact
// polynomial identities. Two-variable statements take the second variable
// as a rational sample point and compare polynomials in the first.
bool negated_falling_check(int n);                              // (-x)_{n,l} = (-1)^n (x)_{n,-l}
bool binomial_reflection_check(int n);                          // C(x,n) = (-1)^n C(n-x-1,n)
bool vandermonde_check(int n, const Rational& y);               // C(x+y,n) = sum C(x,k) C(y,n-k)
bool deg_binomial_convolution_check(int n, const Rational& y);  // (x+y)_{n,l} = sum C(n,k)(x)_{k,l}(y)_{n-k,l}
bool alternating_binomial_sum_check(int n);                     // sum (-1)^k C(x,k) = (-1)^n C(x-1,n)

/// sum_{j=0}^{n} (-1)^j C(n,j) (z-j)_{n+a,l} = sum_{r=0}^{a} C(z-n,r) (n+r)! {n+a r+n}_l
/// as polynomials in z; n, a >= 1.
bool alternating_shift_expansion_check(int n, int a);

}  // namespace degenstir
