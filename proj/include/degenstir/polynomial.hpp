#pragma once

#include <utility>
#include <vector>

#include "degenstir/rational.hpp"

namespace degenstir {

/// Dense univariate polynomial over a coefficient ring C.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial stores
/// an empty coefficient vector. C is Rational or another Poly, which gives
/// the two rings used everywhere: Q[l] and Q[l][x].
template <class C>
class Poly {
public:
    Poly() = default;

    explicit Poly(C constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(C::one()); }

    static Poly variable() {
        Poly p;
        p.c_ = {C::zero(), C::one()};
        return p;
    }

    static Poly from_coeffs(std::vector<C> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Degree; -1 denotes the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of var^i (zero outside the stored range).
    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return C();
        return c_[i];
    }

    const std::vector<C>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, C());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Horner evaluation in any ring R constructible from C.
    template <class R>
    R eval(const R& point) const {
        R acc{};
        for (int i = degree(); i >= 0; --i) acc = acc * point + R(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<C> c_;
};

/// Q[l]: polynomials in the deformation parameter l over the rationals.
using LambdaPoly = Poly<Rational>;

/// Q[l][x]: polynomials in one free indeterminate with LambdaPoly coefficients.
using BivarPoly = Poly<LambdaPoly>;

inline LambdaPoly lambda_var() { return LambdaPoly::variable(); }
inline BivarPoly x_var() { return BivarPoly::variable(); }

// Scalar products against the base field, coefficientwise.
inline LambdaPoly operator*(const LambdaPoly& p, const Rational& s) { return p * LambdaPoly(s); }
inline LambdaPoly operator*(const Rational& s, const LambdaPoly& p) { return p * LambdaPoly(s); }

inline BivarPoly operator*(const BivarPoly& p, const LambdaPoly& s) { return p * BivarPoly(s); }
inline BivarPoly operator*(const LambdaPoly& s, const BivarPoly& p) { return p * BivarPoly(s); }
inline BivarPoly operator*(const BivarPoly& p, const Rational& s) { return p * BivarPoly(LambdaPoly(s)); }
inline BivarPoly operator*(const Rational& s, const BivarPoly& p) { return p * BivarPoly(LambdaPoly(s)); }

inline LambdaPoly operator/(const LambdaPoly& p, const Rational& s) { return p * s.inverse(); }
inline BivarPoly operator/(const BivarPoly& p, const Rational& s) { return p * s.inverse(); }

/// base (base - step)(base - 2 step) ... (base - (n-1) step); empty product is 1.
template <class R>
R falling_product(const R& base, const R& step, int n) {
    R acc = R::one();
    R factor = base;
    for (int i = 0; i < n; ++i) {
        acc = acc * factor;
        factor -= step;
    }
    return acc;
}

/// Generalized binomial coefficient (upper choose k) = (upper)_k / k!.
/// Zero for k < 0; (upper choose 0) = 1 for every upper.
template <class R>
R binomial(const R& upper, int k) {
    if (k < 0) return R{};
    return falling_product(upper, R::one(), k) * factorial(k).inverse();
}

inline Rational binomial_int(long long upper, long long k) {
    return binomial(Rational(upper), static_cast<int>(k));
}

// Substitution. Each variant evaluates exactly; evaluation order between the
// two variables commutes (tested as a ring-hom property).
Rational substitute(const LambdaPoly& p, const Rational& lambda_value);
LambdaPoly substitute_x(const BivarPoly& p, const Rational& x_value);
/// Substitutes l only; the result is a polynomial in x over Q (same dense type).
LambdaPoly substitute_lambda(const BivarPoly& p, const Rational& lambda_value);
Rational substitute(const BivarPoly& p, const Rational& x_value, const Rational& lambda_value);

/// x := inner (full composition in the outer variable).
BivarPoly compose_x(const BivarPoly& p, const BivarPoly& inner);
/// x := x + delta.
BivarPoly shift_x(const BivarPoly& p, const Rational& delta);

/// The ring map l -> c*l (coefficient of l^i picks up c^i).
LambdaPoly scale_lambda(const LambdaPoly& p, const Rational& c);
BivarPoly scale_lambda(const BivarPoly& p, const Rational& c);

}  // namespace degenstir
