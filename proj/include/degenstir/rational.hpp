#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "degenstir/errors.hpp"

namespace degenstir {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number.
///
/// Always kept in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
/// The heavy lifting is delegated to boost::multiprecision::cpp_rational,
/// which maintains exactly this normal form through every operation; the
/// wrapper pins down construction, error signalling and the "p/q" text format.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) { assign(BigInt(num), BigInt(den)); }
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) { assign(num, den); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    /// Parses "p", "p/q" (optional leading '-' on either part).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return one() / *this;
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    double to_double() const;

private:
    void assign(const BigInt& num, const BigInt& den);

    boost::multiprecision::cpp_rational v_;
};

/// n! as a Rational (n >= 0).
Rational factorial(int n);

/// base^e for integer e; negative e inverts (base must be nonzero then).
Rational pow(const Rational& base, int e);

}  // namespace degenstir
