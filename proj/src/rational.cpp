#include "degenstir/rational.hpp"

#include <cctype>

namespace degenstir {

void Rational::assign(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw DivisionByZeroError("rational with zero denominator");
    // cpp_rational's two-argument constructor rejects negative denominators;
    // dividing two integral rationals lands in canonical form directly.
    v_ = boost::multiprecision::cpp_rational(num) / boost::multiprecision::cpp_rational(den);
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    }
    out = BigInt(std::string(s));
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    } else {
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den))
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        if (den.is_zero()) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (denominator() != 1) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

Rational factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational pow(const Rational& base, int e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational acc = Rational::one();
    Rational b = base;
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

}  // namespace degenstir
