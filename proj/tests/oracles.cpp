#include "oracles.hpp"

#include <algorithm>

#include "degenstir/series.hpp"

namespace degenstir::testing {

long long count_set_partitions(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    // Restricted growth strings: a[i] <= max(a[0..i-1]) + 1.
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    long long count = 0;
    const auto blocks_of = [&]() { return *std::max_element(rgs.begin(), rgs.end()) + 1; };
    while (true) {
        if (blocks_of() == k) ++count;
        int i = n - 1;
        for (; i >= 1; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= prefix_max) {
                ++rgs[static_cast<std::size_t>(i)];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
    return count;
}

std::vector<std::vector<Rational>> classical_stirling_triangle(int n_max) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n_max) + 1);
    rows[0] = {Rational(1)};
    for (int n = 0; n < n_max; ++n) {
        auto& next = rows[static_cast<std::size_t>(n) + 1];
        next.assign(static_cast<std::size_t>(n) + 2, Rational(0));
        for (int k = 1; k <= n + 1; ++k) {
            Rational v;
            if (k - 1 <= n) v += rows[n][static_cast<std::size_t>(k - 1)];
            if (k <= n) v += Rational(k) * rows[n][static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k)] = v;
        }
    }
    return rows;
}

std::vector<Rational> classical_bernoulli_recurrence(int n_max) {
    std::vector<Rational> b(static_cast<std::size_t>(n_max) + 1);
    b[0] = Rational(1);
    for (int m = 1; m <= n_max; ++m) {
        Rational sum;
        for (int k = 0; k < m; ++k) sum += binomial_int(m + 1, k) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(m)] = -sum / Rational(m + 1);
    }
    return b;
}

std::vector<Rational> classical_bernoulli_series(const Rational& alpha, int n_max) {
    // (e^t - 1)/t over plain rationals: coefficient of t^k is 1/(k+1)!.
    TruncSeries<Rational> ratio(n_max);
    for (int k = 0; k <= n_max; ++k) ratio[k] = factorial(k + 1).inverse();
    const auto powered = series_pow(series_invert(ratio), alpha);
    std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = egf_coefficient(powered, n);
    return out;
}

}  // namespace degenstir::testing
