#include "degenstir/bernoulli.hpp"

#include <stdexcept>

#include "degenstir/series.hpp"
#include "degenstir/stirling.hpp"

namespace degenstir {

const char* route_name(BernoulliRoute route) {
    return route == BernoulliRoute::Series ? "series" : "closed-form";
}

std::optional<BernoulliRoute> route_from_name(std::string_view name) {
    if (name == "series") return BernoulliRoute::Series;
    if (name == "closed-form") return BernoulliRoute::ClosedForm;
    return std::nullopt;
}

BernoulliTable bernoulli_series(const Rational& alpha, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    const auto ratio = series_invert(deg_exp_minus_one_over_t(n_max));  // t/(e_l(t)-1)
    const auto powered = series_pow(ratio, alpha);
    BernoulliTable table{alpha, BernoulliRoute::Series, {}};
    table.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) table.values.push_back(egf_coefficient(powered, n));
    return table;
}

LambdaPoly bernoulli_closed_form(const Rational& alpha, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    for (int j = 0; j <= n; ++j) {
        if (alpha == Rational(-j))
            throw PoleError("closed form has a pole: order " + alpha.str() + " with n = " + std::to_string(n));
    }
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 2 * n);
    LambdaPoly sum;
    for (int j = 0; j <= n; ++j) {
        Rational weight = binomial_int(n, j) / ((alpha + Rational(j)) * binomial_int(n + j, n));
        if (j % 2 != 0) weight = -weight;
        sum += tri->at(n + j, j) * weight;
    }
    return sum * (alpha * binomial(alpha + Rational(n), n));
}

BernoulliTable bernoulli_closed_form_table(const Rational& alpha, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    BernoulliTable table{alpha, BernoulliRoute::ClosedForm, {}};
    table.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) table.values.push_back(bernoulli_closed_form(alpha, n));
    return table;
}

BernoulliTable bernoulli_table(const Rational& alpha, BernoulliRoute route, int n_max) {
    return route == BernoulliRoute::Series ? bernoulli_series(alpha, n_max)
                                           : bernoulli_closed_form_table(alpha, n_max);
}

}  // namespace degenstir
