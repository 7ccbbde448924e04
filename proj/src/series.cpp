#include "degenstir/series.hpp"

namespace degenstir {

TruncSeries<LambdaPoly> degenerate_exp(const LambdaPoly& exponent, int order) {
    TruncSeries<LambdaPoly> s(order);
    s[0] = LambdaPoly::one();
    LambdaPoly factor = exponent;  // exponent - k*l as k advances
    for (int k = 1; k <= order; ++k) {
        s[k] = s[k - 1] * factor / Rational(k);
        factor -= lambda_var();
    }
    return s;
}

TruncSeries<BivarPoly> degenerate_exp_x(int order) {
    return degenerate_exp_poly(x_var(), order);
}

TruncSeries<BivarPoly> degenerate_exp_poly(const BivarPoly& exponent, int order) {
    TruncSeries<BivarPoly> s(order);
    s[0] = BivarPoly::one();
    BivarPoly factor = exponent;
    const BivarPoly lam{lambda_var()};
    for (int k = 1; k <= order; ++k) {
        s[k] = s[k - 1] * factor / Rational(k);
        factor -= lam;
    }
    return s;
}

TruncSeries<LambdaPoly> deg_exp_minus_one_over_t(int order) {
    const auto e = degenerate_exp(LambdaPoly::one(), order + 1);
    std::vector<LambdaPoly> shifted(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) shifted[k] = e[k + 1];
    return TruncSeries<LambdaPoly>::from_coeffs(std::move(shifted));
}

TruncSeries<LambdaPoly> ratio_power_series(int power, int order) {
    return series_pow_int(deg_exp_minus_one_over_t(order), power);
}

}  // namespace degenstir
