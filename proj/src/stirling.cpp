#include "degenstir/stirling.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "degenstir/series.hpp"

namespace degenstir {

const char* algorithm_name(TriangleAlgorithm algo) {
    switch (algo) {
        case TriangleAlgorithm::Recurrence: return "recurrence";
        case TriangleAlgorithm::EulerSum: return "euler-sum";
        case TriangleAlgorithm::Egf: return "egf";
    }
    return "?";
}

std::optional<TriangleAlgorithm> algorithm_from_name(std::string_view name) {
    if (name == "recurrence") return TriangleAlgorithm::Recurrence;
    if (name == "euler-sum") return TriangleAlgorithm::EulerSum;
    if (name == "egf") return TriangleAlgorithm::Egf;
    return std::nullopt;
}

const LambdaPoly& StirlingTriangle::at(int n, int k) const {
    static const LambdaPoly kZero;
    if (n < 0 || n > n_max()) throw std::out_of_range("triangle row out of range");
    if (k < 0 || k > n) return kZero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

std::vector<std::vector<LambdaPoly>> rows_by_recurrence(int n_max) {
    std::vector<std::vector<LambdaPoly>> rows(static_cast<std::size_t>(n_max) + 1);
    rows[0] = {LambdaPoly::one()};
    for (int n = 0; n < n_max; ++n) {
        auto& next = rows[static_cast<std::size_t>(n) + 1];
        next.assign(static_cast<std::size_t>(n) + 2, LambdaPoly());
        for (int k = 1; k <= n + 1; ++k) {
            LambdaPoly entry;
            if (k - 1 <= n) entry = rows[n][static_cast<std::size_t>(k - 1)];
            if (k <= n) {
                const auto weight = LambdaPoly::from_coeffs({Rational(k), Rational(-n)});  // k - n*l
                entry += weight * rows[n][static_cast<std::size_t>(k)];
            }
            next[static_cast<std::size_t>(k)] = std::move(entry);
        }
    }
    return rows;
}

std::vector<std::vector<LambdaPoly>> rows_by_euler_sum(int n_max) {
    // fall[j] holds (j)_{n,l} for the current n, updated in place.
    std::vector<LambdaPoly> fall(static_cast<std::size_t>(n_max) + 1, LambdaPoly::one());
    std::vector<std::vector<LambdaPoly>> rows(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, LambdaPoly());
        for (int k = 0; k <= n; ++k) {
            LambdaPoly sum;
            for (int j = 0; j <= k; ++j) {
                LambdaPoly term = fall[static_cast<std::size_t>(j)] * binomial_int(k, j);
                if ((k - j) % 2 != 0) term = -term;
                sum += term;
            }
            row[static_cast<std::size_t>(k)] = sum / factorial(k);
        }
        if (n < n_max) {
            for (int j = 0; j <= n_max; ++j) {
                // (j)_{n+1,l} = (j)_{n,l} * (j - n*l)
                const auto factor = LambdaPoly::from_coeffs({Rational(j), Rational(-n)});
                fall[static_cast<std::size_t>(j)] *= factor;
            }
        }
    }
    return rows;
}

std::vector<std::vector<LambdaPoly>> rows_by_egf(int n_max) {
    const auto e = degenerate_exp(LambdaPoly::one(), n_max);
    TruncSeries<LambdaPoly> base = e;
    base[0] -= LambdaPoly::one();  // e_l(t) - 1
    std::vector<std::vector<LambdaPoly>> rows(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, LambdaPoly());
    auto power = TruncSeries<LambdaPoly>::constant(LambdaPoly::one(), n_max);
    for (int k = 0; k <= n_max; ++k) {
        const Rational inv_kfact = factorial(k).inverse();
        for (int n = k; n <= n_max; ++n)
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                egf_coefficient(power, n) * inv_kfact;
        if (k < n_max) power = power * base;
    }
    return rows;
}

}  // namespace

StirlingTriangle build_triangle(TriangleAlgorithm algo, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    switch (algo) {
        case TriangleAlgorithm::Recurrence: return {algo, rows_by_recurrence(n_max)};
        case TriangleAlgorithm::EulerSum: return {algo, rows_by_euler_sum(n_max)};
        case TriangleAlgorithm::Egf: return {algo, rows_by_egf(n_max)};
    }
    throw std::invalid_argument("unknown triangle algorithm");
}

std::shared_ptr<const StirlingTriangle> shared_triangle(TriangleAlgorithm algo, int n_max) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const StirlingTriangle>> cache;
    const auto key = std::make_pair(static_cast<int>(algo), n_max);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const StirlingTriangle>(build_triangle(algo, n_max));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(built));
    return it->second;
}

std::optional<std::pair<int, int>> first_mismatch(const StirlingTriangle& a, const StirlingTriangle& b) {
    const int n_max = std::min(a.n_max(), b.n_max());
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            if (a.at(n, k) != b.at(n, k)) return std::make_pair(n, k);
    return std::nullopt;
}

BivarPoly deg_falling_factorial_x(int n, int sign) {
    const LambdaPoly step = sign >= 0 ? lambda_var() : -lambda_var();
    return falling_product(x_var(), BivarPoly(step), n);
}

LambdaPoly deg_falling_factorial(const LambdaPoly& value, int n, int sign) {
    const LambdaPoly step = sign >= 0 ? lambda_var() : -lambda_var();
    return falling_product(value, step, n);
}

std::vector<LambdaPoly> expand_in_falling_basis(int n) {
    BivarPoly p = deg_falling_factorial_x(n);
    std::vector<LambdaPoly> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 0; --k) {
        // (x)_k is monic of degree k, so the top coefficient peels off directly.
        coeffs[static_cast<std::size_t>(k)] = p.coeff(k);
        if (!coeffs[static_cast<std::size_t>(k)].is_zero()) {
            const auto basis = falling_product(x_var(), BivarPoly::one(), k);
            p -= basis * coeffs[static_cast<std::size_t>(k)];
        }
    }
    return coeffs;
}

bool convolution_check(int n, int r, int a) {
    if (r < 1 || a < 1 || n < r + a) throw std::invalid_argument("convolution_check needs n >= r + a >= 1 with r, a >= 1");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, n);
    const LambdaPoly lhs = tri->at(n, r + a) * binomial_int(r + a, r);
    LambdaPoly rhs;
    for (int k = r; k <= n; ++k) rhs += tri->at(k, r) * tri->at(n - k, a) * binomial_int(n, k);
    return lhs == rhs;
}

bool negated_falling_check(int n) {
    const BivarPoly lhs = falling_product(-x_var(), BivarPoly(lambda_var()), n);
    BivarPoly rhs = deg_falling_factorial_x(n, -1);
    if (n % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

bool binomial_reflection_check(int n) {
    const BivarPoly lhs = binomial(x_var(), n);
    const BivarPoly upper = BivarPoly(LambdaPoly(Rational(n - 1))) - x_var();
    BivarPoly rhs = binomial(upper, n);
    if (n % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

bool vandermonde_check(int n, const Rational& y) {
    const BivarPoly lhs = binomial(x_var() + BivarPoly(LambdaPoly(y)), n);
    BivarPoly rhs;
    for (int k = 0; k <= n; ++k) rhs += binomial(x_var(), k) * binomial(y, n - k);
    return lhs == rhs;
}

bool deg_binomial_convolution_check(int n, const Rational& y) {
    const BivarPoly lam{lambda_var()};
    const BivarPoly lhs = falling_product(x_var() + BivarPoly(LambdaPoly(y)), lam, n);
    BivarPoly rhs;
    for (int k = 0; k <= n; ++k) {
        const auto x_part = falling_product(x_var(), lam, k);
        const auto y_part = deg_falling_factorial(LambdaPoly(y), n - k);
        rhs += x_part * y_part * binomial_int(n, k);
    }
    return lhs == rhs;
}

bool alternating_binomial_sum_check(int n) {
    BivarPoly lhs;
    for (int k = 0; k <= n; ++k) {
        BivarPoly term = binomial(x_var(), k);
        if (k % 2 != 0) term = -term;
        lhs += term;
    }
    BivarPoly rhs = binomial(x_var() - BivarPoly::one(), n);
    if (n % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

bool alternating_shift_expansion_check(int n, int a) {
    if (n < 1 || a < 1) throw std::invalid_argument("alternating_shift_expansion_check needs n, a >= 1");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, n + a);
    const BivarPoly lam{lambda_var()};
    BivarPoly lhs;
    for (int j = 0; j <= n; ++j) {
        const BivarPoly base = x_var() - BivarPoly(LambdaPoly(Rational(j)));
        BivarPoly term = falling_product(base, lam, n + a) * binomial_int(n, j);
        if (j % 2 != 0) term = -term;
        lhs += term;
    }
    BivarPoly rhs;
    for (int r = 0; r <= a; ++r) {
        const BivarPoly upper = x_var() - BivarPoly(LambdaPoly(Rational(n)));
        rhs += binomial(upper, r) * (tri->at(n + a, r + n) * factorial(n + r));
    }
    return lhs == rhs;
}

}  // namespace degenstir
