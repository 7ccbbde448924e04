#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "degenstir/bernoulli.hpp"
#include "degenstir/polynomial.hpp"
#include "degenstir/series.hpp"
#include "degenstir/stirling.hpp"

namespace degenstir {

using Json = nlohmann::ordered_json;

enum class OutputFormat { JsonFormat, Csv, Markdown };

/// Accepts "json", "csv", "markdown"; throws ParseError otherwise.
OutputFormat format_from_name(std::string_view name);

/// The deformation parameter prints as "l" in plain/CSV contexts and as
/// the Greek letter in markdown.
std::string_view lambda_symbol(OutputFormat format);

/// "3 - 3*l" style rendering, ascending powers.
std::string poly_string(const LambdaPoly& p, std::string_view var = "l");

/// Outer variable x, inner polynomial coefficients parenthesized when needed.
std::string bivar_string(const BivarPoly& p, std::string_view x = "x", std::string_view lam = "l");

Json to_json(const Rational& q);
Json to_json(const LambdaPoly& p);
Json to_json(const BivarPoly& p);

template <class R>
Json series_to_json(const TruncSeries<R>& s) {
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(to_json(s[i]));
    j["coeffs"] = std::move(coeffs);
    return j;
}

/// {algorithm, N_max, rows}; entries are coefficient arrays, or rational
/// strings when a lambda value is substituted.
std::string render_triangle(const StirlingTriangle& triangle, OutputFormat format,
                            const std::optional<Rational>& lambda_value);

/// {alpha, route, values} with the same lambda handling.
std::string render_bernoulli(const BernoulliTable& table, OutputFormat format,
                             const std::optional<Rational>& lambda_value);

}  // namespace degenstir
