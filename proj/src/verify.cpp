#include "degenstir/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "degenstir/bernoulli.hpp"
#include "degenstir/families.hpp"
#include "degenstir/series.hpp"
#include "degenstir/stirling.hpp"

namespace degenstir {

namespace {

using Json = nlohmann::ordered_json;
using Rng = std::mt19937_64;

struct Outcome {
    CaseStatus status = CaseStatus::Pass;
    std::string detail;
};

Outcome pass() { return {CaseStatus::Pass, {}}; }
Outcome fail(std::string counterexample) { return {CaseStatus::Fail, std::move(counterexample)}; }
Outcome skipped() { return {CaseStatus::Skipped, "empty parameter domain"}; }

/// Wraps a sweep body: the body returns the first counterexample or nothing,
/// and reports via `ran` whether any tuple was visited at all.
Outcome sweep(const std::function<std::optional<std::string>(bool& ran)>& body) {
    bool ran = false;
    if (auto cx = body(ran)) return fail(*cx);
    return ran ? pass() : skipped();
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> dist(-9, 9);
    int num = 0, den = 0;
    while (num == 0) num = dist(rng);
    while (den == 0) den = dist(rng);
    return Rational(num, den);
}

std::vector<Rational> distinct_rationals(Rng& rng, int count) {
    std::set<std::pair<std::string, bool>> seen;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        const Rational q = random_rational(rng);
        if (seen.insert({q.str(), true}).second) out.push_back(q);
    }
    return out;
}

LambdaPoly int_deg_falling(int k, int r) {
    return deg_falling_factorial(LambdaPoly(Rational(k)), r);
}

std::string tuple_str(std::initializer_list<std::pair<const char*, std::string>> parts) {
    std::string out;
    for (const auto& [name, value] : parts) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += value;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Case runners. Each iterates its domain in lexicographic order and stops at
// the first failing tuple.
// ---------------------------------------------------------------------------

Outcome run_lemma_a(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n) {
            ran = true;
            if (!negated_falling_check(n)) return tuple_str({{"n", std::to_string(n)}});
        }
        return std::nullopt;
    });
}

Outcome run_lemma_b(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n) {
            ran = true;
            if (!binomial_reflection_check(n)) return tuple_str({{"n", std::to_string(n)}});
        }
        return std::nullopt;
    });
}

Outcome run_lemma_c(const SweepBounds& b, Rng& rng) {
    const auto ys = distinct_rationals(rng, b.sample_points);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n) {
            ran = true;
            for (const auto& y : ys)
                if (!vandermonde_check(n, y)) return tuple_str({{"n", std::to_string(n)}, {"y", y.str()}});
            // Fully numeric spot checks with both variables substituted.
            for (int t = 0; t < 2 * b.sample_points; ++t) {
                const Rational x = random_rational(rng), y = random_rational(rng);
                Rational rhs;
                for (int k = 0; k <= n; ++k) rhs += binomial(x, k) * binomial(y, n - k);
                if (binomial(x + y, n) != rhs)
                    return tuple_str({{"n", std::to_string(n)}, {"x", x.str()}, {"y", y.str()}});
            }
        }
        return std::nullopt;
    });
}

Outcome run_lemma_d(const SweepBounds& b, Rng& rng) {
    const auto ys = distinct_rationals(rng, b.sample_points);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n) {
            ran = true;
            for (const auto& y : ys)
                if (!deg_binomial_convolution_check(n, y))
                    return tuple_str({{"n", std::to_string(n)}, {"y", y.str()}});
            for (int t = 0; t < 2 * b.sample_points; ++t) {
                const Rational x = random_rational(rng), y = random_rational(rng);
                const Rational lam = random_rational(rng);
                const auto fall = [&](const Rational& base, int m) {
                    Rational acc = Rational::one(), f = base;
                    for (int i = 0; i < m; ++i) { acc *= f; f -= lam; }
                    return acc;
                };
                Rational rhs;
                for (int k = 0; k <= n; ++k) rhs += binomial_int(n, k) * fall(x, k) * fall(y, n - k);
                if (fall(x + y, n) != rhs)
                    return tuple_str({{"n", std::to_string(n)}, {"x", x.str()}, {"y", y.str()}, {"l", lam.str()}});
            }
        }
        return std::nullopt;
    });
}

Outcome run_lemma_e(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n) {
            ran = true;
            if (!alternating_binomial_sum_check(n)) return tuple_str({{"n", std::to_string(n)}});
        }
        return std::nullopt;
    });
}

Outcome run_full_history_recurrence(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 10);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 2; n <= cap; ++n)
            for (int a = 1; a < n; ++a) {
                ran = true;
                LambdaPoly rhs;
                for (int k = 1; k <= a; ++k) {
                    const auto weight = LambdaPoly::from_coeffs({Rational(a - k + 1), Rational(-(n - k))});
                    rhs += weight * tri->at(n - k, a - k + 1);
                }
                if (tri->at(n, a) != rhs) return tuple_str({{"n", std::to_string(n)}, {"a", std::to_string(a)}});
            }
        return std::nullopt;
    });
}

Outcome run_sign_flip_expansion(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 10);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 1; n <= cap; ++n)
            for (int a = 1; a <= n; ++a) {
                ran = true;
                const LambdaPoly lhs = scale_lambda(tri->at(n, a), Rational(-1)) * factorial(a);
                LambdaPoly rhs;
                for (int j = a; j <= n; ++j) {
                    LambdaPoly term = tri->at(n, j) * (factorial(j) * binomial_int(j - 1, j - a));
                    if ((n - j) % 2 != 0) term = -term;
                    rhs += term;
                }
                if (lhs != rhs) return tuple_str({{"n", std::to_string(n)}, {"a", std::to_string(a)}});
            }
        return std::nullopt;
    });
}

Outcome run_symbolic_binomial_expansion(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 10);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 1; n <= cap; ++n)
            for (int a = 1; a <= n; ++a) {
                ran = true;
                const auto scaled_lambda = lambda_var() * Rational(n - 1);  // (n-1) l as upper argument
                LambdaPoly lhs;
                for (int j = a; j <= n; ++j)
                    lhs += tri->at(n, j) * factorial(j) * binomial(scaled_lambda, j - a);
                const LambdaPoly mid = scale_lambda(tri->at(n, a), Rational(-1)) * factorial(a);
                if (lhs != mid) return tuple_str({{"n", std::to_string(n)}, {"a", std::to_string(a)}});
            }
        return std::nullopt;
    });
}

Outcome run_difference_factorial(const SweepBounds& b, Rng&) {
    const std::vector<Rational> steps = {Rational(1), Rational(2), Rational(1, 2), Rational(-1, 3)};
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 8); ++n)
            for (int p = 0; p <= std::min(b.n_max, 8); ++p)
                for (const auto& h : steps) {
                    ran = true;
                    if (!difference_factorial_check(n, p, h))
                        return tuple_str({{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"h", h.str()}});
                }
        return std::nullopt;
    });
}

Outcome run_double_flip_expansion(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 10);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= cap; ++n)
            for (int j = 0; j <= n; ++j) {
                ran = true;
                LambdaPoly rhs;
                for (int a = 0; a <= n; ++a) {
                    LambdaPoly term = scale_lambda(tri->at(a, j), Rational(-1)) *
                                      (binomial_int(n, a)) * int_deg_falling(j, n - a);
                    if ((a + j) % 2 != 0) term = -term;
                    rhs += term;
                }
                if (tri->at(n, j) != rhs) return tuple_str({{"n", std::to_string(n)}, {"j", std::to_string(j)}});
            }
        return std::nullopt;
    });
}

Outcome run_alternating_shift(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 8);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 1; n <= cap; ++n)
            for (int a = 1; a <= cap; ++a) {
                ran = true;
                if (!alternating_shift_expansion_check(n, a))
                    return tuple_str({{"n", std::to_string(n)}, {"a", std::to_string(a)}});
            }
        return std::nullopt;
    });
}

Outcome run_s_recurrence(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 1; n <= std::min(b.n_max, 10); ++n)
            for (int r = 1; r <= std::min(b.r_max, 10); ++r) {
                ran = true;
                if (!s_family_recurrence_check(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
            }
        return std::nullopt;
    });
}

Outcome run_s_closed_forms(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n)
            for (int r = 0; r <= std::min(b.r_max, 10); ++r) {
                ran = true;
                if (!s_closed_form_checks(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
            }
        return std::nullopt;
    });
}

Outcome run_hockey_stick(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n) {
            ran = true;
            if (!hockey_stick_binomial_sum_check(n)) return tuple_str({{"n", std::to_string(n)}, {"r", "0"}});
            for (int r = 1; r <= std::min(b.r_max, 10); ++r) {
                if (!hockey_stick_degenerate_check(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
                if (!hockey_stick_diagonal_check(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"x", std::to_string(n)}});
            }
        }
        return std::nullopt;
    });
}

Outcome run_k_family(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int r = 0; r <= std::min(b.r_max, 8); ++r) {
            ran = true;
            if (!k_family_formal_check(r, b.order)) return tuple_str({{"r", std::to_string(r)}});
        }
        return std::nullopt;
    });
}

Outcome run_trig(const SweepBounds& b, Rng&) {
    const std::vector<double> xs = {0.3, 0.7, 1.5, std::acos(-1.0) / 2};
    const std::vector<Rational> lams = {Rational(1, 3), Rational(-1, 2)};
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int r = 0; r <= std::min(b.r_max, 5); ++r)
            for (const double x : xs)
                for (const auto& lam : lams) {
                    ran = true;
                    const auto sums = trig_sums_numeric(r, x, lam, 200);
                    if (sums.max_error() > 1e-9) {
                        std::ostringstream os;
                        os << "r=" << r << " x=" << x << " l=" << lam.str() << " err=" << sums.max_error();
                        return os.str();
                    }
                }
        return std::nullopt;
    });
}

Outcome run_snr_expansion(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n)
            for (int r = 0; r <= std::min(b.r_max, 10); ++r) {
                ran = true;
                if (!snr_expansion_check(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
            }
        return std::nullopt;
    });
}

Outcome run_snr_flipped(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n)
            for (int r = 1; r <= std::min(b.r_max, 10); ++r) {
                ran = true;
                if (!snr_flipped_sum_check(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
            }
        return std::nullopt;
    });
}

Outcome run_snr_routes(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n)
            for (int r = 1; r <= std::min(b.r_max, 10); ++r) {
                ran = true;
                if (!snr_route_equality_check(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
            }
        return std::nullopt;
    });
}

Outcome run_t_closed_form(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 10); ++n)
            for (int r = 0; r <= std::min(b.r_max, 10); ++r) {
                ran = true;
                if (!t_closed_form_check(n, r))
                    return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
            }
        return std::nullopt;
    });
}

Outcome run_bernoulli_routes(const SweepBounds& b, Rng&) {
    std::vector<Rational> alphas = default_alpha_set();
    if (b.alpha_filter) alphas = {*b.alpha_filter};
    const int cap = std::min(b.n_max, 10);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (const auto& alpha : alphas) {
            const auto series = bernoulli_series(alpha, cap);
            for (int n = 0; n <= cap; ++n) {
                ran = true;
                if (bernoulli_closed_form(alpha, n) != series.values[static_cast<std::size_t>(n)])
                    return tuple_str({{"alpha", alpha.str()}, {"n", std::to_string(n)}});
            }
        }
        return std::nullopt;
    });
}

Outcome run_cor_2_11(const SweepBounds& b, Rng&) {
    const auto tri_max = std::min(b.r_max, 10);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, tri_max);
        for (int n = 0; n <= std::min(b.n_max, 10); ++n)
            for (int r = 0; r <= tri_max; ++r) {
                ran = true;
                const BivarPoly s = family_poly(Family::S, n, r);
                BivarPoly rhs;
                const BivarPoly n_minus_x = BivarPoly(LambdaPoly(Rational(n))) - x_var();
                for (int j = 0; j <= r; ++j) {
                    BivarPoly term = binomial(n_minus_x, n - j) * binomial(x_var(), j) *
                                     (tri->at(r, j) * factorial(j));
                    if (j % 2 != 0) term = -term;
                    rhs += term;
                }
                if (s != rhs) return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}});
            }
        return std::nullopt;
    });
}

Outcome run_cor_2_12(const SweepBounds& b, Rng& rng) {
    std::vector<std::pair<Rational, Rational>> pairs;
    while (static_cast<int>(pairs.size()) < b.sample_points) {
        const Rational z = random_rational(rng), y = random_rational(rng);
        if (!y.is_zero()) pairs.emplace_back(z, y);
    }
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 6); ++n)
            for (int p = 0; p <= std::min(b.n_max, 6); ++p)
                for (const auto& [z, y] : pairs) {
                    ran = true;
                    if (!shifted_family_check(n, p, z, y))
                        return tuple_str({{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"z", z.str()}, {"y", y.str()}});
                }
        return std::nullopt;
    });
}

Outcome run_basis_expansion(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 10);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= cap; ++n) {
            ran = true;
            const auto coeffs = expand_in_falling_basis(n);
            for (int k = 0; k <= n; ++k)
                if (coeffs[static_cast<std::size_t>(k)] != tri->at(n, k))
                    return tuple_str({{"n", std::to_string(n)}, {"k", std::to_string(k)}});
        }
        return std::nullopt;
    });
}

Outcome run_triangle_agreement(TriangleAlgorithm other, const SweepBounds& b) {
    const int cap = std::min(b.n_max, 12);
    if (cap < 0) return skipped();
    const auto reference = shared_triangle(TriangleAlgorithm::Recurrence, cap);
    const auto candidate = shared_triangle(other, cap);
    if (const auto mismatch = first_mismatch(*reference, *candidate))
        return fail(tuple_str({{"n", std::to_string(mismatch->first)}, {"k", std::to_string(mismatch->second)}}));
    return pass();
}

Outcome run_recurrence_on_euler(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 12);
    const auto tri = shared_triangle(TriangleAlgorithm::EulerSum, cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n < cap; ++n)
            for (int k = 1; k <= n + 1; ++k) {
                ran = true;
                const auto weight = LambdaPoly::from_coeffs({Rational(k), Rational(-n)});
                if (tri->at(n + 1, k) != tri->at(n, k - 1) + weight * tri->at(n, k))
                    return tuple_str({{"n", std::to_string(n + 1)}, {"k", std::to_string(k)}});
            }
        return std::nullopt;
    });
}

Outcome run_convolution(const SweepBounds& b, Rng&) {
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 2; n <= std::min(b.n_max, 12); ++n)
            for (int r = 1; r < n; ++r)
                for (int a = 1; r + a <= n; ++a) {
                    ran = true;
                    if (!convolution_check(n, r, a))
                        return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"a", std::to_string(a)}});
                }
        return std::nullopt;
    });
}

Outcome run_geometric_theta(const SweepBounds& b, Rng&) {
    const int order = std::min(b.order, 24);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= std::min(b.n_max, 8); ++n) {
            ran = true;
            if (!geometric_theta_check(n, order)) return tuple_str({{"n", std::to_string(n)}});
        }
        return std::nullopt;
    });
}

Outcome run_theta_shift(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 6);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= cap; ++n)
            for (int r = 0; r <= cap; ++r)
                for (int p = 0; p <= cap; ++p) {
                    ran = true;
                    if (!theta_shift_check(n, r, p))
                        return tuple_str({{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"p", std::to_string(p)}});
                }
        return std::nullopt;
    });
}

Outcome run_power_series_extraction(const SweepBounds& b, Rng&) {
    const int order = std::min(b.order, 24);
    const int cap = std::min(b.n_max, 8);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, order + cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        const auto e = degenerate_exp(LambdaPoly::one(), order);
        auto base = e;
        base[0] -= LambdaPoly::one();
        auto power = TruncSeries<LambdaPoly>::constant(LambdaPoly::one(), order);
        for (int n = 0; n <= cap; ++n) {
            if (n > 0) power = power * base;
            if (n == 0) continue;  // the n = 0 statement is the constant series 1
            ran = true;
            for (int j = 0; j <= order; ++j) {
                const LambdaPoly expected = j < n ? LambdaPoly()
                                                  : tri->at(j, n) * (factorial(n) * factorial(j).inverse());
                if (power[j] != expected)
                    return tuple_str({{"n", std::to_string(n)}, {"j", std::to_string(j)}});
            }
        }
        return std::nullopt;
    });
}

Outcome run_ratio_series(const SweepBounds& b, Rng&) {
    const int order = std::min(b.order, 24);
    const int cap = std::min(b.n_max, 8);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, order + cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= cap; ++n) {
            ran = true;
            const auto ratio = ratio_power_series(n, order);
            for (int j = 0; j <= order; ++j) {
                const LambdaPoly expected =
                    tri->at(j + n, n) * (binomial_int(j + n, n).inverse() * factorial(j).inverse());
                if (ratio[j] != expected) return tuple_str({{"n", std::to_string(n)}, {"j", std::to_string(j)}});
            }
        }
        return std::nullopt;
    });
}

Outcome run_ratio_egf_extraction(const SweepBounds& b, Rng&) {
    const int order = std::min(b.order, 24);
    const int cap = std::min(b.n_max, 8);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, order + cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int j = 0; j <= cap; ++j) {
            ran = true;
            const auto ratio = ratio_power_series(j, order);
            for (int n = 0; n <= order; ++n) {
                const LambdaPoly expected = tri->at(n + j, j) * binomial_int(n + j, j).inverse();
                if (egf_coefficient(ratio, n) != expected)
                    return tuple_str({{"j", std::to_string(j)}, {"n", std::to_string(n)}});
            }
        }
        return std::nullopt;
    });
}

Outcome run_signed_euler_formula(const SweepBounds& b, Rng&) {
    const int cap = std::min(b.n_max, 12);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, cap);
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 0; n <= cap; ++n)
            for (int k = 0; k <= cap; ++k) {
                ran = true;
                LambdaPoly lhs;
                for (int j = 0; j <= k; ++j) {
                    LambdaPoly term = int_deg_falling(j, n) * binomial_int(k, j);
                    if (j % 2 != 0) term = -term;
                    lhs += term;
                }
                LambdaPoly rhs = (k <= n ? tri->at(n, k) : LambdaPoly()) * factorial(k);
                if (k % 2 != 0) rhs = -rhs;
                if (lhs != rhs) return tuple_str({{"n", std::to_string(n)}, {"k", std::to_string(k)}});
            }
        return std::nullopt;
    });
}

Outcome run_remark_closed_forms(const SweepBounds&, Rng&) {
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, 20);
    const LambdaPoly one_minus_l = LambdaPoly::one() - lambda_var();
    return sweep([&](bool& ran) -> std::optional<std::string> {
        for (int n = 2; n <= 20; ++n) {
            ran = true;
            if (tri->at(n, n - 1) != one_minus_l * binomial_int(n, 2))
                return tuple_str({{"n", std::to_string(n)}, {"k", std::to_string(n - 1)}});
            const auto linear = LambdaPoly::from_coeffs({Rational(3 * n - 5), Rational(-(3 * n - 1))});
            const auto expected =
                one_minus_l * linear * Rational(static_cast<long long>(n) * (n - 1) * (n - 2), 24);
            if (tri->at(n, n - 2) != expected)
                return tuple_str({{"n", std::to_string(n)}, {"k", std::to_string(n - 2)}});
        }
        return std::nullopt;
    });
}

struct CaseDef {
    const char* id;
    const char* anchor;
    const char* domain;
    std::function<Outcome(const SweepBounds&, Rng&)> run;
};

const std::vector<CaseDef>& registry() {
    static const std::vector<CaseDef> cases = {
        {"lemma-1.1a", "(-x)_{n,l} = (-1)^n (x)_{n,-l}", "n <= min(n_max, 10)", run_lemma_a},
        {"lemma-1.1b", "C(x,n) = (-1)^n C(n-x-1, n)", "n <= min(n_max, 10)", run_lemma_b},
        {"lemma-1.1c", "C(x+y,n) = sum_k C(x,k) C(y,n-k)",
         "n <= min(n_max, 10); y over sample_points distinct rationals; plus numeric (x,y) spot checks",
         run_lemma_c},
        {"lemma-1.1d", "(x+y)_{n,l} = sum_k C(n,k) (x)_{k,l} (y)_{n-k,l}",
         "n <= min(n_max, 10); y over sample_points distinct rationals; plus numeric (x,y,l) spot checks",
         run_lemma_d},
        {"lemma-1.1e", "sum_{k<=n} (-1)^k C(x,k) = (-1)^n C(x-1,n)", "n <= min(n_max, 10)", run_lemma_e},
        {"thm-2.1", "{n a}_l = sum_{k=1..a} (a-k+1 - l(n-k)) {n-k a-k+1}_l",
         "2 <= n <= min(n_max, 10), 1 <= a < n", run_full_history_recurrence},
        {"thm-2.2", "a! {n a}_{-l} = sum_{j=a..n} (-1)^{n-j} j! {n j}_l C(j-1, j-a)",
         "1 <= a <= n <= min(n_max, 10)", run_sign_flip_expansion},
        {"thm-2.3", "sum_{j=a..n} {n j}_l j! C((n-1)l, j-a) = a! {n a}_{-l}",
         "1 <= a <= n <= min(n_max, 10)", run_symbolic_binomial_expansion},
        {"thm-2.4", "(1/n!) D_{x,h}^n (x)_{p,l} = sum_r C(p,r) (x)_{p-r,l} h^{r-n} {r n}_{l/h}",
         "n, p <= min(n_max, 8); h in {1, 2, 1/2, -1/3}", run_difference_factorial},
        {"thm-2.5", "{n j}_l = sum_a C(n,a) (-1)^{a+j} {a j}_{-l} (j)_{n-a,l}",
         "0 <= j <= n <= min(n_max, 10)", run_double_flip_expansion},
        {"thm-2.6", "sum_j (-1)^j C(n,j) (z-j)_{n+a,l} = sum_r C(z-n,r) (n+r)! {n+a r+n}_l",
         "1 <= n, a <= min(n_max, 8)", run_alternating_shift},
        {"thm-2.7", "S_n(x,r|l) = -x sum_j C(r-1,j) (1-l)_{r-1-j,l} S_{n-1}(x-1,j|l)",
         "1 <= n <= min(n_max, 10), 1 <= r <= min(r_max, 10)", run_s_recurrence},
        {"thm-2.8", "S_n(x,r|l) = (-1)^n sum_j C(x,j) C(x-j-1,n-j) j! {r j}_l",
         "n <= min(n_max, 10), r <= min(r_max, 10)", run_s_closed_forms},
        {"thm-2.10", "sum_k C(x+k,k)(k)_{r,l} = sum_j C(x+j,j) C(x+n+1,n-j) j! {r j}_l",
         "n <= min(n_max, 10), 1 <= r <= min(r_max, 10); plus r = 0 and x = n specializations",
         run_hockey_stick},
        {"thm-2.13", "e^{-x} sum_n (n)_{r,l} x^n/n! = sum_j {r j}_l x^j; K_{r+1} = x sum_j C(r,j) K_j (1-l)_{r-j,l}",
         "r <= min(r_max, 8), series order = bounds.order", run_k_family},
        {"thm-2.14", "sum_k (k)_{r,l}/k! cos(kx), sin(kx) against the e^{cos x} closed forms",
         "r <= min(r_max, 5); x in {0.3, 0.7, 1.5, pi/2}; l in {1/3, -1/2}; 200 terms; tol 1e-9",
         run_trig},
        {"thm-2.15", "sum_k (k)_{r,l} x^k = sum_j j! {r j}_l sum_k C(k,j) x^k; at x=1 with C(n+1,j+1)",
         "n <= min(n_max, 10), r <= min(r_max, 10)", run_snr_expansion},
        {"thm-2.16", "sum_k (k)_{r,l} = sum_j (-1)^{r-j} j! {r j}_{-l} C(n+j,j+1)",
         "n <= min(n_max, 10), 1 <= r <= min(r_max, 10)", run_snr_flipped},
        {"thm-2.18", "T_n(x,r|l) (1+x)^r = sum_j (-1)^j C(n,j) x^j (1+x)^{n+r-j} sum_k (-1)^k C(j,k)(k)_{r,l}",
         "n <= min(n_max, 10), r <= min(r_max, 10); plus direct expansion and x = 1", run_t_closed_form},
        {"thm-2.19", "b^{(a)}_{n,l} = a C(a+n,n) sum_j (-1)^j C(n,j) {n+j j}_l / ((a+j) C(n+j,n))",
         "n <= min(n_max, 10); a in {1..5, 1/2, 3/2, -1/2} or the --alpha filter", run_bernoulli_routes},
        {"cor-2.11", "S_n(x,r|l) = sum_j (-1)^j C(n-x,n-j) C(x,j) j! {r j}_l",
         "n <= min(n_max, 10), r <= min(r_max, 10)", run_cor_2_11},
        {"cor-2.12",
         "sum_k (-1)^k C(x,k) (z+yk)_{p,l} = sum_r C(p,r)(z)_{p-r,l} y^r sum_j (-1)^j C(n-x,n-j) C(x,j) j! {r j}_{l/y}",
         "n, p <= min(n_max, 6); sample_points random (z, y) pairs, y != 0", run_cor_2_12},
        {"cor-2.17", "sum_j j! C(n+1,j+1) {r j}_l = sum_j (-1)^{r-j} j! C(n+j,j+1) {r j}_{-l}",
         "n <= min(n_max, 10), 1 <= r <= min(r_max, 10)", run_snr_routes},
        {"eq-4", "(x)_{n,l} = sum_k {n k}_l (x)_k: basis expansion equals the triangle row",
         "n <= min(n_max, 10)", run_basis_expansion},
        {"eq-5", "series extraction table ((e_l(t)-1)^k/k!) equals the recurrence table",
         "n <= min(n_max, 12)",
         [](const SweepBounds& b, Rng&) { return run_triangle_agreement(TriangleAlgorithm::Egf, b); }},
        {"eq-6", "alternating-sum table equals the recurrence table", "n <= min(n_max, 12)",
         [](const SweepBounds& b, Rng&) { return run_triangle_agreement(TriangleAlgorithm::EulerSum, b); }},
        {"eq-7", "{n+1 k}_l = {n k-1}_l + (k - n l){n k}_l, checked on the alternating-sum table",
         "n < min(n_max, 12)", run_recurrence_on_euler},
        {"eq-24", "C(r+a,r) {n r+a}_l = sum_k C(n,k) {k r}_l {n-k a}_l",
         "r, a >= 1, r + a <= n <= min(n_max, 12)", run_convolution},
        {"eq-45-pre", "sum_k (k)_{n,l} x^k = sum_j {n j}_l j! x^j (1-x)^{-(j+1)} as truncated series",
         "n <= min(n_max, 8), order = min(order, 24)", run_geometric_theta},
        {"eq-51-pre", "(theta - r l)_{p,l} T_n(x,r|l) = T_n(x,r+p|l)",
         "n, r, p <= min(n_max, 6)", run_theta_shift},
        {"eq-55", "(e_l(x)-1)^n = sum_{j>=n} n! {j n}_l x^j / j!",
         "1 <= n <= min(n_max, 8), order = min(order, 24)", run_power_series_extraction},
        {"eq-56", "((e_l(x)-1)/x)^n = sum_j ({j+n n}_l / C(j+n,n)) x^j / j!",
         "n <= min(n_max, 8), order = min(order, 24)", run_ratio_series},
        {"eq-57", "n-th exponential coefficient of ((e_l(x)-1)/x)^j is {n+j j}_l / C(n+j,j)",
         "j <= min(n_max, 8), n <= min(order, 24)", run_ratio_egf_extraction},
        {"eq-60", "sum_j C(k,j) (-1)^j (j)_{n,l} = (-1)^k k! {n k}_l",
         "n, k <= min(n_max, 12)", run_signed_euler_formula},
        {"remark", "{n n-1}_l = (1-l) C(n,2); {n n-2}_l = (1/24)(1-l)(3n-5-l(3n-1)) n(n-1)(n-2)",
         "2 <= n <= 20", run_remark_closed_forms},
    };
    return cases;
}

}  // namespace

std::vector<Rational> default_alpha_set() {
    return {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5),
            Rational(1, 2), Rational(3, 2), Rational(-1, 2)};
}

const char* status_name(CaseStatus status) {
    switch (status) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        case CaseStatus::Skipped: return "skipped";
    }
    return "?";
}

bool VerifyReport::all_passed() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseResult& c) { return c.status != CaseStatus::Fail; });
}

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.emplace_back(c.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

VerifyReport run_suite(const SweepBounds& bounds, std::uint64_t seed,
                       const std::vector<std::string>& only_ids) {
    for (const auto& id : only_ids) {
        const bool known = std::any_of(registry().begin(), registry().end(),
                                       [&](const CaseDef& c) { return id == c.id; });
        if (!known) throw std::invalid_argument("unknown identity case id: " + id);
    }

    VerifyReport report;
    report.bounds = bounds;
    report.seed = seed;
    const bool empty_bounds = bounds.n_max < 0 || bounds.r_max < 0;
    for (const auto& def : registry()) {
        if (!only_ids.empty() &&
            std::find(only_ids.begin(), only_ids.end(), def.id) == only_ids.end())
            continue;
        Rng rng(seed ^ fnv1a(def.id));
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = empty_bounds ? skipped() : def.run(bounds, rng);
        const auto stop = std::chrono::steady_clock::now();
        CaseResult result;
        result.id = def.id;
        result.anchor = def.anchor;
        result.param_domain = def.domain;
        result.status = outcome.status;
        if (outcome.status == CaseStatus::Fail) result.counterexample = outcome.detail;
        if (outcome.status == CaseStatus::Skipped) result.reason = outcome.detail;
        result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        report.cases.push_back(std::move(result));
    }
    std::sort(report.cases.begin(), report.cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    return report;
}

std::string report_json(const VerifyReport& report, bool include_timing) {
    Json bounds;
    bounds["n_max"] = report.bounds.n_max;
    bounds["r_max"] = report.bounds.r_max;
    bounds["order"] = report.bounds.order;
    bounds["sample_points"] = report.bounds.sample_points;
    if (report.bounds.alpha_filter) bounds["alpha"] = report.bounds.alpha_filter->str();

    Json cases = Json::array();
    for (const auto& c : report.cases) {
        Json entry;
        entry["id"] = c.id;
        entry["anchor"] = c.anchor;
        entry["domain"] = c.param_domain;
        entry["status"] = status_name(c.status);
        if (c.status == CaseStatus::Fail) entry["counterexample"] = c.counterexample;
        if (c.status == CaseStatus::Skipped) entry["reason"] = c.reason;
        if (include_timing) entry["millis"] = c.millis;
        cases.push_back(std::move(entry));
    }

    Json root;
    root["bounds"] = std::move(bounds);
    root["seed"] = report.seed;
    root["cases"] = std::move(cases);
    return root.dump(2) + "\n";
}

std::string report_markdown(const VerifyReport& report, bool include_timing) {
    std::ostringstream os;
    os << "# identity verification report\n\n";
    os << "bounds: n_max=" << report.bounds.n_max << ", r_max=" << report.bounds.r_max
       << ", order=" << report.bounds.order << ", sample_points=" << report.bounds.sample_points;
    if (report.bounds.alpha_filter) os << ", alpha=" << report.bounds.alpha_filter->str();
    os << "; seed=" << report.seed << "\n\n";
    os << "| id | status | detail |";
    if (include_timing) os << " millis |";
    os << "\n|---|---|---|";
    if (include_timing) os << "---|";
    os << "\n";
    for (const auto& c : report.cases) {
        std::string detail;
        if (c.status == CaseStatus::Fail) detail = c.counterexample;
        if (c.status == CaseStatus::Skipped) detail = c.reason;
        os << "| " << c.id << " | " << status_name(c.status) << " | " << detail << " |";
        if (include_timing) os << " " << c.millis << " |";
        os << "\n";
    }
    return os.str();
}

}  // namespace degenstir
