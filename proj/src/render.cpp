#include "degenstir/render.hpp"

#include <sstream>

namespace degenstir {

OutputFormat format_from_name(std::string_view name) {
    if (name == "json") return OutputFormat::JsonFormat;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "markdown") return OutputFormat::Markdown;
    throw ParseError("unknown output format: '" + std::string(name) + "'");
}

std::string_view lambda_symbol(OutputFormat format) {
    return format == OutputFormat::Markdown ? "\xce\xbb" : "l";
}

namespace {

std::string var_power(std::string_view var, int i) {
    if (i == 0) return {};
    std::string s(var);
    if (i > 1) s += "^" + std::to_string(i);
    return s;
}

/// One term "c*v^i" with the sign split off; magnitude "1" collapses onto the
/// variable part.
std::string term_string(const Rational& coeff, std::string_view var, int i) {
    const Rational mag = coeff < Rational(0) ? -coeff : coeff;
    const std::string vp = var_power(var, i);
    if (vp.empty()) return mag.str();
    if (mag.is_one()) return vp;
    return mag.str() + "*" + vp;
}

}  // namespace

std::string poly_string(const LambdaPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        const bool negative = c < Rational(0);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_string(c, var, i);
    }
    return out;
}

std::string bivar_string(const BivarPoly& p, std::string_view x, std::string_view lam) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const LambdaPoly c = p.coeff(i);
        if (c.is_zero()) continue;
        const std::string xp = var_power(x, i);

        int terms = 0, term_degree = 0;
        for (int d = 0; d <= c.degree(); ++d)
            if (!c.coeff(d).is_zero()) {
                ++terms;
                term_degree = d;
            }

        if (terms > 1) {
            // Multi-term coefficient: parenthesize, joined with '+'.
            if (!out.empty()) out += " + ";
            const std::string cs = "(" + poly_string(c, lam) + ")";
            out += xp.empty() ? cs : cs + "*" + xp;
            continue;
        }

        // Monomial coefficient fuses into one signed term "c*l^d*x^i".
        const Rational scalar = c.coeff(term_degree);
        const bool negative = scalar < Rational(0);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string lp = var_power(lam, term_degree);
        const std::string vars = lp.empty() ? xp : (xp.empty() ? lp : lp + "*" + xp);
        const Rational mag = negative ? -scalar : scalar;
        if (vars.empty())
            out += mag.str();
        else
            out += mag.is_one() ? vars : mag.str() + "*" + vars;
    }
    return out;
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const LambdaPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Json to_json(const BivarPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

std::string render_triangle(const StirlingTriangle& triangle, OutputFormat format,
                            const std::optional<Rational>& lambda_value) {
    const int n_max = triangle.n_max();
    switch (format) {
        case OutputFormat::JsonFormat: {
            Json root;
            root["algorithm"] = algorithm_name(triangle.algorithm());
            root["N_max"] = n_max;
            if (lambda_value) root["lambda"] = lambda_value->str();
            Json rows = Json::array();
            for (int n = 0; n <= n_max; ++n) {
                Json row = Json::array();
                for (int k = 0; k <= n; ++k) {
                    if (lambda_value)
                        row.push_back(triangle.at(n, k).eval(*lambda_value).str());
                    else
                        row.push_back(to_json(triangle.at(n, k)));
                }
                rows.push_back(std::move(row));
            }
            root["rows"] = std::move(rows);
            return root.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream os;
            os << "n,k,value\n";
            for (int n = 0; n <= n_max; ++n)
                for (int k = 0; k <= n; ++k) {
                    os << n << ',' << k << ',';
                    if (lambda_value)
                        os << triangle.at(n, k).eval(*lambda_value).str();
                    else
                        os << poly_string(triangle.at(n, k));
                    os << '\n';
                }
            return os.str();
        }
        case OutputFormat::Markdown: {
            std::ostringstream os;
            os << "| n \\ k |";
            for (int k = 0; k <= n_max; ++k) os << ' ' << k << " |";
            os << "\n|---|";
            for (int k = 0; k <= n_max; ++k) os << "---|";
            os << "\n";
            for (int n = 0; n <= n_max; ++n) {
                os << "| " << n << " |";
                for (int k = 0; k <= n_max; ++k) {
                    if (k > n) {
                        os << "  |";
                        continue;
                    }
                    if (lambda_value)
                        os << ' ' << triangle.at(n, k).eval(*lambda_value).str() << " |";
                    else
                        os << ' ' << poly_string(triangle.at(n, k), lambda_symbol(format)) << " |";
                }
                os << "\n";
            }
            return os.str();
        }
    }
    throw ParseError("unknown output format");
}

std::string render_bernoulli(const BernoulliTable& table, OutputFormat format,
                             const std::optional<Rational>& lambda_value) {
    switch (format) {
        case OutputFormat::JsonFormat: {
            Json root;
            root["alpha"] = table.alpha.str();
            root["route"] = route_name(table.route);
            if (lambda_value) root["lambda"] = lambda_value->str();
            Json values = Json::array();
            for (const auto& v : table.values) {
                if (lambda_value)
                    values.push_back(v.eval(*lambda_value).str());
                else
                    values.push_back(to_json(v));
            }
            root["values"] = std::move(values);
            return root.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream os;
            os << "n,value\n";
            for (std::size_t n = 0; n < table.values.size(); ++n) {
                os << n << ',';
                if (lambda_value)
                    os << table.values[n].eval(*lambda_value).str();
                else
                    os << poly_string(table.values[n]);
                os << '\n';
            }
            return os.str();
        }
        case OutputFormat::Markdown: {
            std::ostringstream os;
            os << "| n | value |\n|---|---|\n";
            for (std::size_t n = 0; n < table.values.size(); ++n) {
                os << "| " << n << " | ";
                if (lambda_value)
                    os << table.values[n].eval(*lambda_value).str();
                else
                    os << poly_string(table.values[n], lambda_symbol(format));
                os << " |\n";
            }
            return os.str();
        }
    }
    throw ParseError("unknown output format");
}

}  // namespace degenstir
