#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>

#include "degenstir/polynomial.hpp"
#include "degenstir/series.hpp"

namespace degenstir {

/// The four polynomial families built from deformed falling factorials:
///   S    : sum_k (-1)^k C(x,k) (k)_{r,l}        (alternating binomial sums)
///   Snr  : sum_k (k)_{r,l} x^k                  (weighted geometric sums)
///   T    : sum_k C(n,k) x^k (k)_{r,l}           (weighted binomial expansions)
///   Bell : sum_j {r j}_l x^j                    (closed-form companion of the
///                                                entire series sum_n (n)_{r,l} x^n/n!)
enum class Family { S, Snr, T, BellLike };

const char* family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Builds the family polynomial by direct summation of its definition.
/// BellLike uses only r (degree-r polynomial); the others sum k = 0..n.
BivarPoly family_poly(Family family, int n, int r);

BivarPoly bell_like_poly(int r);

/// S_n(x,r) = -x sum_{j<r} C(r-1,j) (1-l)_{r-1-j,l} S_{n-1}(x-1,j); n, r >= 1.
bool s_family_recurrence_check(int n, int r);

/// S against its two closed forms:
///   (-1)^n sum_j C(x,j) C(x-j-1,n-j) j! {r j}_l
///   sum_j (-1)^j C(n-x,n-j) C(x,j) j! {r j}_l
bool s_closed_form_checks(int n, int r);

/// sum_k C(x+k,k)(k)_{r,l} = sum_j C(x+j,j) C(x+n+1,n-j) j! {r j}_l  (r >= 1),
/// in both the triangle form and the alternating-inner-sum form.
bool hockey_stick_degenerate_check(int n, int r);

/// r = 0 specialization: sum_k C(x+k,k) = C(x+n+1,n).
bool hockey_stick_binomial_sum_check(int n);

/// x := n specialization, as an identity in Q[l].
bool hockey_stick_diagonal_check(int n, int r);

/// sum_k (-1)^k C(x,k) (z+yk)_{p,l} expanded through the rescaled triangle
/// {r j}_{l/y}; z, y rational with y != 0 (throws otherwise), x symbolic.
bool shifted_family_check(int n, int p, const Rational& z, const Rational& y);

/// Forward difference (f(x+h) - f(x))/h, iterated; h != 0, iterations >= 1.
BivarPoly difference_operator(const BivarPoly& f, const Rational& h, int iterations);

/// The same n-th iterate via its binomial expansion
/// h^{-n} sum_k C(n,k) (-1)^{n-k} f(x + hk).
BivarPoly difference_operator_binomial_form(const BivarPoly& f, const Rational& h, int n);

/// (1/n!) D^n_{x,h} (x)_{p,l} = sum_r C(p,r) (x)_{p-r,l} h^{r-n} {r n}_{l/h}.
bool difference_factorial_check(int n, int p, const Rational& h);

/// Applies (theta - shift)_{r,l} where theta = x d/dx: the coefficient of x^k
/// is multiplied by (k - shift)_{r,l}.
BivarPoly theta_factorial_apply(const BivarPoly& f, int r, const LambdaPoly& shift);

/// (theta - r l)_{p,l} applied to the T family advances its parameter:
/// result equals the T polynomial with parameter r+p.
bool theta_shift_check(int n, int r, int p);

/// sum_k (k)_{n,l} x^k = sum_j {n j}_l j! x^j / (1-x)^{j+1}, as truncated
/// series in x over Q[l].
bool geometric_theta_check(int n, int order);

/// Snr against sum_j j!{r j}_l sum_k C(k,j) x^k, and its x = 1 evaluation
/// against sum_j j! C(n+1,j+1) {r j}_l.
bool snr_expansion_check(int n, int r);

/// x = 1 evaluation against the sign-flipped variant
/// sum_j (-1)^{r-j} j! {r j}_{-l} C(n+j,j+1); r >= 1.
bool snr_flipped_sum_check(int n, int r);

/// Equality of the two x = 1 routes (l against -l); r >= 1.
bool snr_route_equality_check(int n, int r);

/// All of the above at once (the flipped routes only when r >= 1).
bool snr_identities_check(int n, int r);

/// T_n(x,r) against its alternating closed form, cleared of (1+x) denominators,
/// plus the direct {r j}_l expansion and the x = 1 evaluation.
bool t_closed_form_check(int n, int r);

/// As truncated series in x over Q[l]: e^{-x} * sum_n (n)_{r,l} x^n/n! collapses
/// to the degree-r Bell-like polynomial, and the entire-series recurrence
/// K_{r+1} = x sum_j C(r,j) K_j (1-l)_{r-j,l} holds termwise.
bool k_family_formal_check(int r, int order);

/// Double-precision partial sums of sum_k (k)_{r,l}/k! cos(kx) and sin(kx)
/// against their closed forms with exact {r j}_l evaluated at a rational l.
struct TrigSums {
    int r = 0;
    double x = 0;
    Rational lambda;
    int n_terms = 0;
    double cos_partial = 0, sin_partial = 0;
    double cos_closed = 0, sin_closed = 0;

    double cos_error() const { return std::abs(cos_partial - cos_closed); }
    double sin_error() const { return std::abs(sin_partial - sin_closed); }
    double max_error() const { return std::max(cos_error(), sin_error()); }
};

TrigSums trig_sums_numeric(int r, double x, const Rational& lambda, int n_terms);

}  // namespace degenstir
