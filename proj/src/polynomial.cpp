#include "degenstir/polynomial.hpp"

namespace degenstir {

Rational substitute(const LambdaPoly& p, const Rational& lambda_value) {
    return p.eval(lambda_value);
}

LambdaPoly substitute_x(const BivarPoly& p, const Rational& x_value) {
    return p.eval(LambdaPoly(x_value));
}

LambdaPoly substitute_lambda(const BivarPoly& p, const Rational& lambda_value) {
    std::vector<Rational> out(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i].eval(lambda_value);
    return LambdaPoly::from_coeffs(std::move(out));
}

Rational substitute(const BivarPoly& p, const Rational& x_value, const Rational& lambda_value) {
    return substitute_x(p, x_value).eval(lambda_value);
}

BivarPoly compose_x(const BivarPoly& p, const BivarPoly& inner) {
    return p.eval(inner);
}

BivarPoly shift_x(const BivarPoly& p, const Rational& delta) {
    return compose_x(p, x_var() + BivarPoly(LambdaPoly(delta)));
}

LambdaPoly scale_lambda(const LambdaPoly& p, const Rational& c) {
    std::vector<Rational> out(p.coeffs().size());
    Rational power = Rational::one();
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i] = p.coeffs()[i] * power;
        power *= c;
    }
    return LambdaPoly::from_coeffs(std::move(out));
}

BivarPoly scale_lambda(const BivarPoly& p, const Rational& c) {
    std::vector<LambdaPoly> out(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = scale_lambda(p.coeffs()[i], c);
    return BivarPoly::from_coeffs(std::move(out));
}

}  // namespace degenstir
