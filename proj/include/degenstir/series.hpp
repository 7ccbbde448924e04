#pragma once

#include <type_traits>
#include <vector>

#include "degenstir/errors.hpp"
#include "degenstir/polynomial.hpp"

namespace degenstir {

/// Truncated formal power series in t over a ring R, exact modulo t^{order+1}.
/// The coefficient vector always has exactly order+1 entries.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

    static TruncSeries constant(R value, int order) {
        TruncSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    static TruncSeries from_coeffs(std::vector<R> coeffs) {
        TruncSeries s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    R& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }

    const std::vector<R>& coeffs() const { return c_; }

    TruncSeries truncated(int new_order) const {
        if (new_order > order()) throw MismatchError("cannot truncate to a higher order");
        TruncSeries s(new_order);
        for (int i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
        return s;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
        check_orders(a, b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }

    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
        check_orders(a, b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries r(a.order());
        const int n = a.order();
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) throw MismatchError("series truncation orders differ");
    }

    std::vector<R> c_;
};

template <class R>
TruncSeries<R> operator*(TruncSeries<R> a, const Rational& s) {
    for (int i = 0; i <= a.order(); ++i) a[i] = a[i] * s;
    return a;
}

template <class R>
    requires(!std::is_same_v<R, Rational>)
TruncSeries<R> operator*(TruncSeries<R> a, const R& s) {
    for (int i = 0; i <= a.order(); ++i) a[i] = a[i] * s;
    return a;
}

/// Multiplication by t: coefficients move up one slot, the top one falls off.
template <class R>
TruncSeries<R> shift_up(const TruncSeries<R>& a) {
    TruncSeries<R> r(a.order());
    for (int i = a.order(); i >= 1; --i) r[i] = a[i - 1];
    return r;
}

/// Multiplicative inverse to order N. Over Rational any nonzero constant term
/// is invertible; over polynomial rings the constant term must be 1.
template <class R>
TruncSeries<R> series_invert(const TruncSeries<R>& a) {
    R inv0;
    if constexpr (std::is_same_v<R, Rational>) {
        if (a[0].is_zero()) throw ConstantTermError("series has zero constant term");
        inv0 = a[0].inverse();
    } else {
        if (!a[0].is_one()) throw ConstantTermError("series constant term must be 1 over a polynomial ring");
        inv0 = R::one();
    }
    TruncSeries<R> b(a.order());
    b[0] = inv0;
    for (int n = 1; n <= a.order(); ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
        b[n] = -(inv0 * acc);
    }
    return b;
}

/// a^alpha for rational alpha via the binomial series on u = a - 1.
/// Requires constant term 1; everything stays in the exact coefficient ring.
template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, const Rational& alpha) {
    if (!a[0].is_one()) throw ConstantTermError("series_pow needs constant term 1");
    const int n = a.order();
    TruncSeries<R> u = a;
    u[0] -= R::one();
    TruncSeries<R> result = TruncSeries<R>::constant(R::one(), n);
    TruncSeries<R> upow = TruncSeries<R>::constant(R::one(), n);
    Rational binom = Rational::one();
    for (int k = 1; k <= n; ++k) {
        upow = upow * u;
        binom *= (alpha - Rational(k - 1)) / Rational(k);
        if (binom.is_zero()) break;
        result = result + upow * binom;
    }
    return result;
}

/// a^k by repeated multiplication (no constant-term restriction).
template <class R>
TruncSeries<R> series_pow_int(const TruncSeries<R>& a, int k) {
    TruncSeries<R> acc = TruncSeries<R>::constant(R::one(), a.order());
    for (int i = 0; i < k; ++i) acc = acc * a;
    return acc;
}

/// Reads off n! * [t^n] a, the coefficient in the exponential convention.
template <class R>
R egf_coefficient(const TruncSeries<R>& a, int n) {
    if (n < 0 || n > a.order()) throw MismatchError("coefficient index beyond truncation order");
    return a[n] * factorial(n);
}

template <class R, class F>
auto map_series(const TruncSeries<R>& a, F f) {
    using Out = decltype(f(a[0]));
    TruncSeries<Out> r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = f(a[i]);
    return r;
}

/// e_l^w(t): coefficient of t^k is (w)_{k,l}/k!, l symbolic. w = 1 gives e_l(t).
TruncSeries<LambdaPoly> degenerate_exp(const LambdaPoly& exponent, int order);

/// e_l^x(t) with x the free indeterminate of Q[l][x].
TruncSeries<BivarPoly> degenerate_exp_x(int order);

/// e_l^w(t) for an arbitrary polynomial exponent w in Q[l][x].
TruncSeries<BivarPoly> degenerate_exp_poly(const BivarPoly& exponent, int order);

/// (e_l(t) - 1)/t, the unit-constant series inverted and powered elsewhere.
TruncSeries<LambdaPoly> deg_exp_minus_one_over_t(int order);

/// ((e_l(t) - 1)/t)^power.
TruncSeries<LambdaPoly> ratio_power_series(int power, int order);

}  // namespace degenstir
