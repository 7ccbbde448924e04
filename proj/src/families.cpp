#include "degenstir/families.hpp"

#include <cmath>
#include <stdexcept>

#include "degenstir/stirling.hpp"

namespace degenstir {

const char* family_name(Family family) {
    switch (family) {
        case Family::S: return "S";
        case Family::Snr: return "Snr";
        case Family::T: return "T";
        case Family::BellLike: return "Bell";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "S") return Family::S;
    if (name == "Snr") return Family::Snr;
    if (name == "T") return Family::T;
    if (name == "Bell") return Family::BellLike;
    return std::nullopt;
}

namespace {

/// (k)_{r,l} for integer k >= 0.
LambdaPoly int_deg_falling(int k, int r) {
    return deg_falling_factorial(LambdaPoly(Rational(k)), r);
}

BivarPoly x_power(int k) {
    std::vector<LambdaPoly> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] = LambdaPoly::one();
    return BivarPoly::from_coeffs(std::move(coeffs));
}

BivarPoly one_plus_x_power(int k) {
    return falling_product(x_var() + BivarPoly::one(), BivarPoly::zero(), k);
}

}  // namespace

BivarPoly bell_like_poly(int r) {
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    std::vector<LambdaPoly> coeffs(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) coeffs[static_cast<std::size_t>(j)] = tri->at(r, j);
    return BivarPoly::from_coeffs(std::move(coeffs));
}

BivarPoly family_poly(Family family, int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("family parameters must be nonnegative");
    switch (family) {
        case Family::S: {
            BivarPoly sum;
            BivarPoly binom = BivarPoly::one();  // C(x,k), advanced incrementally
            for (int k = 0; k <= n; ++k) {
                BivarPoly term = binom * int_deg_falling(k, r);
                if (k % 2 != 0) term = -term;
                sum += term;
                binom = binom * (x_var() - BivarPoly(LambdaPoly(Rational(k)))) / Rational(k + 1);
            }
            return sum;
        }
        case Family::Snr: {
            std::vector<LambdaPoly> coeffs(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = int_deg_falling(k, r);
            return BivarPoly::from_coeffs(std::move(coeffs));
        }
        case Family::T: {
            std::vector<LambdaPoly> coeffs(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k)
                coeffs[static_cast<std::size_t>(k)] = int_deg_falling(k, r) * binomial_int(n, k);
            return BivarPoly::from_coeffs(std::move(coeffs));
        }
        case Family::BellLike: return bell_like_poly(r);
    }
    throw std::invalid_argument("unknown family");
}

bool s_family_recurrence_check(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("s_family_recurrence_check needs n, r >= 1");
    const BivarPoly lhs = family_poly(Family::S, n, r);
    BivarPoly inner;
    for (int j = 0; j <= r - 1; ++j) {
        const auto weight = deg_falling_factorial(LambdaPoly::one() - lambda_var(), r - 1 - j) * binomial_int(r - 1, j);
        inner += shift_x(family_poly(Family::S, n - 1, j), Rational(-1)) * weight;
    }
    return lhs == -(x_var() * inner);
}

bool s_closed_form_checks(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("parameters must be nonnegative");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    const BivarPoly s = family_poly(Family::S, n, r);

    BivarPoly direct;
    for (int j = 0; j <= r; ++j) {
        const auto weight = tri->at(r, j) * factorial(j);
        const BivarPoly shifted_upper = x_var() - BivarPoly(LambdaPoly(Rational(j + 1)));
        direct += binomial(x_var(), j) * binomial(shifted_upper, n - j) * weight;
    }
    if (n % 2 != 0) direct = -direct;

    BivarPoly reflected;
    for (int j = 0; j <= r; ++j) {
        const auto weight = tri->at(r, j) * factorial(j);
        const BivarPoly n_minus_x = BivarPoly(LambdaPoly(Rational(n))) - x_var();
        BivarPoly term = binomial(n_minus_x, n - j) * binomial(x_var(), j) * weight;
        if (j % 2 != 0) term = -term;
        reflected += term;
    }
    return s == direct && s == reflected;
}

bool hockey_stick_degenerate_check(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("hockey_stick_degenerate_check needs n >= 0, r >= 1");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);

    BivarPoly lhs;
    for (int k = 0; k <= n; ++k) {
        const BivarPoly upper = x_var() + BivarPoly(LambdaPoly(Rational(k)));
        lhs += binomial(upper, k) * int_deg_falling(k, r);
    }

    const BivarPoly tail_upper = x_var() + BivarPoly(LambdaPoly(Rational(n + 1)));
    BivarPoly rhs_triangle;
    BivarPoly rhs_alternating;
    for (int j = 0; j <= r; ++j) {
        const BivarPoly head = binomial(x_var() + BivarPoly(LambdaPoly(Rational(j))), j);
        const BivarPoly tail = binomial(tail_upper, n - j);
        rhs_triangle += head * tail * (tri->at(r, j) * factorial(j));
        LambdaPoly inner;
        for (int k = 0; k <= j; ++k) {
            LambdaPoly term = int_deg_falling(k, r) * binomial_int(j, k);
            if ((j - k) % 2 != 0) term = -term;
            inner += term;
        }
        rhs_alternating += head * tail * inner;
    }
    return lhs == rhs_triangle && lhs == rhs_alternating;
}

bool hockey_stick_binomial_sum_check(int n) {
    BivarPoly lhs;
    for (int k = 0; k <= n; ++k) lhs += binomial(x_var() + BivarPoly(LambdaPoly(Rational(k))), k);
    return lhs == binomial(x_var() + BivarPoly(LambdaPoly(Rational(n + 1))), n);
}

bool hockey_stick_diagonal_check(int n, int r) {
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    LambdaPoly lhs;
    for (int k = 0; k <= n; ++k) lhs += int_deg_falling(k, r) * binomial_int(n + k, k);
    LambdaPoly rhs;
    for (int j = 0; j <= r; ++j)
        rhs += tri->at(r, j) * (factorial(j) * binomial_int(n + j, j) * binomial_int(2 * n + 1, n - j));
    return lhs == rhs;
}

bool shifted_family_check(int n, int p, const Rational& z, const Rational& y) {
    if (y.is_zero()) throw std::invalid_argument("shifted_family_check needs y != 0");
    if (n < 0 || p < 0) throw std::invalid_argument("parameters must be nonnegative");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, p);

    BivarPoly lhs;
    for (int k = 0; k <= n; ++k) {
        const auto value = deg_falling_factorial(LambdaPoly(z + y * Rational(k)), p);
        BivarPoly term = binomial(x_var(), k) * value;
        if (k % 2 != 0) term = -term;
        lhs += term;
    }

    BivarPoly rhs;
    const BivarPoly n_minus_x = BivarPoly(LambdaPoly(Rational(n))) - x_var();
    for (int r = 0; r <= p; ++r) {
        BivarPoly inner;
        for (int j = 0; j <= r; ++j) {
            const auto rescaled = scale_lambda(tri->at(r, j), y.inverse());
            BivarPoly term = binomial(n_minus_x, n - j) * binomial(x_var(), j) * (rescaled * factorial(j));
            if (j % 2 != 0) term = -term;
            inner += term;
        }
        const auto weight = deg_falling_factorial(LambdaPoly(z), p - r) * (binomial_int(p, r) * pow(y, r));
        rhs += inner * weight;
    }
    return lhs == rhs;
}

BivarPoly difference_operator(const BivarPoly& f, const Rational& h, int iterations) {
    if (h.is_zero()) throw std::invalid_argument("difference step h must be nonzero");
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    BivarPoly g = f;
    const Rational inv_h = h.inverse();
    for (int i = 0; i < iterations; ++i) g = (shift_x(g, h) - g) * inv_h;
    return g;
}

BivarPoly difference_operator_binomial_form(const BivarPoly& f, const Rational& h, int n) {
    if (h.is_zero()) throw std::invalid_argument("difference step h must be nonzero");
    if (n < 1) throw std::invalid_argument("iterations must be >= 1");
    BivarPoly sum;
    for (int k = 0; k <= n; ++k) {
        BivarPoly term = shift_x(f, h * Rational(k)) * binomial_int(n, k);
        if ((n - k) % 2 != 0) term = -term;
        sum += term;
    }
    return sum * pow(h, -n);
}

bool difference_factorial_check(int n, int p, const Rational& h) {
    const BivarPoly f = deg_falling_factorial_x(p);
    const BivarPoly lhs = n == 0 ? f : difference_operator(f, h, n) / factorial(n);
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, p);
    const Rational inv_h = h.inverse();
    BivarPoly rhs;
    for (int r = 0; r <= p; ++r) {
        const auto rescaled = scale_lambda(tri->at(r, n), inv_h);
        if (rescaled.is_zero()) continue;
        rhs += deg_falling_factorial_x(p - r) * (rescaled * (binomial_int(p, r) * pow(h, r - n)));
    }
    return lhs == rhs;
}

BivarPoly theta_factorial_apply(const BivarPoly& f, int r, const LambdaPoly& shift) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    std::vector<LambdaPoly> coeffs(f.coeffs().size());
    for (int k = 0; k < static_cast<int>(f.coeffs().size()); ++k) {
        const auto eigen = deg_falling_factorial(LambdaPoly(Rational(k)) - shift, r);
        coeffs[static_cast<std::size_t>(k)] = f.coeff(k) * eigen;
    }
    return BivarPoly::from_coeffs(std::move(coeffs));
}

bool theta_shift_check(int n, int r, int p) {
    const auto shift = lambda_var() * Rational(r);
    const auto advanced = theta_factorial_apply(family_poly(Family::T, n, r), p, shift);
    return advanced == family_poly(Family::T, n, r + p);
}

bool geometric_theta_check(int n, int order) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    TruncSeries<LambdaPoly> lhs(order);
    for (int k = 0; k <= order; ++k) lhs[k] = int_deg_falling(k, n);

    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, n);
    auto one_minus_x = TruncSeries<LambdaPoly>::constant(LambdaPoly::one(), order);
    if (order >= 1) one_minus_x[1] = -LambdaPoly::one();
    const auto geometric = series_invert(one_minus_x);

    TruncSeries<LambdaPoly> rhs(order);
    auto inv_power = geometric;  // (1-x)^{-(j+1)}
    for (int j = 0; j <= n; ++j) {
        auto term = inv_power * (tri->at(n, j) * factorial(j));
        for (int s = 0; s < j; ++s) term = shift_up(term);
        rhs = rhs + term;
        inv_power = inv_power * geometric;
    }
    return lhs == rhs;
}

bool snr_expansion_check(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("parameters must be nonnegative");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    const BivarPoly direct = family_poly(Family::Snr, n, r);

    BivarPoly expanded;
    for (int j = 0; j <= r; ++j) {
        BivarPoly inner;
        for (int k = 0; k <= n; ++k) inner += x_power(k) * LambdaPoly(binomial_int(k, j));
        expanded += inner * (tri->at(r, j) * factorial(j));
    }
    if (direct != expanded) return false;

    // x = 1 evaluation through C(n+1, j+1).
    LambdaPoly at_one;
    for (int k = 0; k <= n; ++k) at_one += int_deg_falling(k, r);
    LambdaPoly via_binom;
    for (int j = 0; j <= r; ++j) via_binom += tri->at(r, j) * (factorial(j) * binomial_int(n + 1, j + 1));
    return at_one == via_binom;
}

bool snr_flipped_sum_check(int n, int r) {
    if (r < 1) throw std::invalid_argument("snr_flipped_sum_check needs r >= 1");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    LambdaPoly at_one;
    for (int k = 0; k <= n; ++k) at_one += int_deg_falling(k, r);
    LambdaPoly via_flipped;
    for (int j = 0; j <= r; ++j) {
        LambdaPoly term = scale_lambda(tri->at(r, j), Rational(-1)) * (factorial(j) * binomial_int(n + j, j + 1));
        if ((r - j) % 2 != 0) term = -term;
        via_flipped += term;
    }
    return at_one == via_flipped;
}

bool snr_identities_check(int n, int r) {
    if (!snr_expansion_check(n, r)) return false;
    if (r >= 1 && !snr_flipped_sum_check(n, r)) return false;
    if (r >= 1 && !snr_route_equality_check(n, r)) return false;
    return true;
}

bool snr_route_equality_check(int n, int r) {
    if (r < 1) throw std::invalid_argument("snr_route_equality_check needs r >= 1");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    LambdaPoly plain;
    for (int j = 0; j <= r; ++j) plain += tri->at(r, j) * (factorial(j) * binomial_int(n + 1, j + 1));
    LambdaPoly flipped;
    for (int j = 0; j <= r; ++j) {
        LambdaPoly term = scale_lambda(tri->at(r, j), Rational(-1)) * (factorial(j) * binomial_int(n + j, j + 1));
        if ((r - j) % 2 != 0) term = -term;
        flipped += term;
    }
    return plain == flipped;
}

bool t_closed_form_check(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("parameters must be nonnegative");
    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    const BivarPoly t = family_poly(Family::T, n, r);

    // Alternating form, cleared of (1+x) denominators by multiplying with (1+x)^r.
    const BivarPoly lhs = t * one_plus_x_power(r);
    BivarPoly rhs;
    for (int j = 0; j <= r; ++j) {
        if (j > n) break;  // C(n,j) = 0 beyond
        LambdaPoly inner;
        for (int k = 0; k <= j; ++k) {
            LambdaPoly part = int_deg_falling(k, r) * binomial_int(j, k);
            if (k % 2 != 0) part = -part;
            inner += part;
        }
        BivarPoly term = x_power(j) * one_plus_x_power(n + r - j) * (inner * binomial_int(n, j));
        if (j % 2 != 0) term = -term;
        rhs += term;
    }
    if (lhs != rhs) return false;

    // Direct triangle expansion sum_j {r j}_l x^j j! C(n,j) (1+x)^{n-j}.
    BivarPoly via_triangle;
    for (int j = 0; j <= std::min(n, r); ++j)
        via_triangle += x_power(j) * one_plus_x_power(n - j) * (tri->at(r, j) * (factorial(j) * binomial_int(n, j)));
    if (t != via_triangle) return false;

    // x = 1 evaluation: T_n(1,r) = 2^n sum_j (-1)^j C(n,j) 2^{-j} sum_k (-1)^k C(j,k)(k)_{r,l}.
    const LambdaPoly at_one = substitute_x(t, Rational(1));
    LambdaPoly halved;
    for (int j = 0; j <= std::min(n, r); ++j) {
        LambdaPoly inner;
        for (int k = 0; k <= j; ++k) {
            LambdaPoly part = int_deg_falling(k, r) * binomial_int(j, k);
            if (k % 2 != 0) part = -part;
            inner += part;
        }
        LambdaPoly term = inner * (binomial_int(n, j) * pow(Rational(1, 2), j));
        if (j % 2 != 0) term = -term;
        halved += term;
    }
    return at_one == halved * pow(Rational(2), n);
}

bool k_family_formal_check(int r, int order) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");

    const auto entire = [order](int rr) {
        TruncSeries<LambdaPoly> s(order);
        for (int k = 0; k <= order; ++k) s[k] = int_deg_falling(k, rr) * factorial(k).inverse();
        return s;
    };

    // e^{-x} * K_r collapses to the Bell-like polynomial of degree r.
    TruncSeries<LambdaPoly> exp_neg(order);
    for (int k = 0; k <= order; ++k) {
        Rational c = factorial(k).inverse();
        if (k % 2 != 0) c = -c;
        exp_neg[k] = LambdaPoly(c);
    }
    const auto collapsed = exp_neg * entire(r);
    const auto bell = bell_like_poly(r);
    for (int k = 0; k <= order; ++k) {
        if (collapsed[k] != bell.coeff(k)) return false;
    }

    // K_{r+1} = x sum_j C(r,j) K_j (1-l)_{r-j,l}, termwise to the truncation order.
    TruncSeries<LambdaPoly> inner(order);
    for (int j = 0; j <= r; ++j) {
        const auto weight = deg_falling_factorial(LambdaPoly::one() - lambda_var(), r - j) * binomial_int(r, j);
        inner = inner + entire(j) * weight;
    }
    return shift_up(inner) == entire(r + 1);
}

TrigSums trig_sums_numeric(int r, double x, const Rational& lambda, int n_terms) {
    if (n_terms < r + 10) throw std::invalid_argument("n_terms must be at least r + 10");
    TrigSums out;
    out.r = r;
    out.x = x;
    out.lambda = lambda;
    out.n_terms = n_terms;

    const double lam = lambda.to_double();
    double inv_fact = 1.0;  // 1/k!
    for (int k = 0; k < n_terms; ++k) {
        if (k > 0) inv_fact /= k;
        double fall = 1.0;
        for (int i = 0; i < r; ++i) fall *= (k - i * lam);
        out.cos_partial += fall * inv_fact * std::cos(k * x);
        out.sin_partial += fall * inv_fact * std::sin(k * x);
    }

    const auto tri = shared_triangle(TriangleAlgorithm::Recurrence, r);
    double cos_mix = 0, sin_mix = 0;
    for (int j = 0; j <= r; ++j) {
        const double c = tri->at(r, j).eval(lambda).to_double();
        cos_mix += c * std::cos(j * x);
        sin_mix += c * std::sin(j * x);
    }
    const double scale = std::exp(std::cos(x));
    const double cs = std::cos(std::sin(x));
    const double sn = std::sin(std::sin(x));
    out.cos_closed = scale * (cs * cos_mix - sn * sin_mix);
    out.sin_closed = scale * (cs * sin_mix + sn * cos_mix);
    return out;
}

}  // namespace degenstir
