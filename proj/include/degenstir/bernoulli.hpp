#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "degenstir/polynomial.hpp"

namespace degenstir {

enum class BernoulliRoute { Series, ClosedForm };

const char* route_name(BernoulliRoute route);
std::optional<BernoulliRoute> route_from_name(std::string_view name);

/// Deformed Bernoulli numbers of order alpha as polynomials in l,
/// index n of values = the n-th number, tagged by the producing route.
struct BernoulliTable {
    Rational alpha;
    BernoulliRoute route = BernoulliRoute::Series;
    std::vector<LambdaPoly> values;
};

/// Coefficients of (t/(e_l(t)-1))^alpha in the exponential convention,
/// for n = 0..n_max.
BernoulliTable bernoulli_series(const Rational& alpha, int n_max);

/// Closed form: alpha C(alpha+n,n) sum_j (-1)^j C(n,j) {n+j j}_l / ((alpha+j) C(n+j,n)).
/// Throws PoleError when alpha is one of 0, -1, ..., -n.
LambdaPoly bernoulli_closed_form(const Rational& alpha, int n);

BernoulliTable bernoulli_closed_form_table(const Rational& alpha, int n_max);

BernoulliTable bernoulli_table(const Rational& alpha, BernoulliRoute route, int n_max);

}  // namespace degenstir
