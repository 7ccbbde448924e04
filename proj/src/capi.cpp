#include "degenstir/degenstir.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <sstream>
#include <string>

#include "degenstir/bernoulli.hpp"
#include "degenstir/families.hpp"
#include "degenstir/render.hpp"
#include "degenstir/stirling.hpp"
#include "degenstir/verify.hpp"

using namespace degenstir;

struct dgs_triangle {
    StirlingTriangle table;
};

struct dgs_bernoulli {
    BernoulliTable table;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dgs_status set_error(dgs_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

/// Runs the body, translating exceptions into status codes.
template <class F>
dgs_status guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return set_error(DGS_ERROR_PARSE, e.what());
    } catch (const PoleError& e) {
        return set_error(DGS_ERROR_DOMAIN, e.what());
    } catch (const DivisionByZeroError& e) {
        return set_error(DGS_ERROR_DOMAIN, e.what());
    } catch (const ConstantTermError& e) {
        return set_error(DGS_ERROR_DOMAIN, e.what());
    } catch (const MismatchError& e) {
        return set_error(DGS_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(DGS_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return set_error(DGS_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(DGS_ERROR_INTERNAL, e.what());
    }
}

std::optional<Rational> parse_optional_rational(const char* text) {
    if (text == nullptr) return std::nullopt;
    return Rational::parse(text);
}

dgs_status require(bool condition, const char* message) {
    if (condition) return DGS_OK;
    return set_error(DGS_ERROR_INVALID_ARGUMENT, message);
}

}  // namespace

extern "C" {

const char* dgs_version(void) { return "0.1.0"; }

const char* dgs_last_error(void) { return g_last_error.c_str(); }

void dgs_string_free(char* s) { std::free(s); }

dgs_status dgs_triangle_build(const char* algorithm, int n_max, dgs_triangle** out) {
    if (require(algorithm && out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        const auto algo = algorithm_from_name(algorithm);
        if (!algo)
            return set_error(DGS_ERROR_INVALID_ARGUMENT,
                             std::string("unknown triangle algorithm: '") + algorithm + "'");
        if (n_max < 0) return set_error(DGS_ERROR_INVALID_ARGUMENT, "n_max must be nonnegative");
        *out = new dgs_triangle{build_triangle(*algo, n_max)};
        return DGS_OK;
    });
}

void dgs_triangle_free(dgs_triangle* t) { delete t; }

int dgs_triangle_n_max(const dgs_triangle* t) { return t ? t->table.n_max() : -1; }

dgs_status dgs_triangle_entry(const dgs_triangle* t, int n, int k, char** json_out) {
    if (require(t && json_out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        *json_out = dup_string(to_json(t->table.at(n, k)).dump());
        return DGS_OK;
    });
}

dgs_status dgs_triangle_render(const dgs_triangle* t, const char* format, const char* lambda,
                               char** out) {
    if (require(t && format && out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        *out = dup_string(
            render_triangle(t->table, format_from_name(format), parse_optional_rational(lambda)));
        return DGS_OK;
    });
}

dgs_status dgs_bernoulli_build(const char* alpha, const char* route, int n_max, dgs_bernoulli** out) {
    if (require(alpha && route && out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        const auto r = route_from_name(route);
        if (!r)
            return set_error(DGS_ERROR_INVALID_ARGUMENT,
                             std::string("unknown bernoulli route: '") + route + "'");
        if (n_max < 0) return set_error(DGS_ERROR_INVALID_ARGUMENT, "n_max must be nonnegative");
        *out = new dgs_bernoulli{bernoulli_table(Rational::parse(alpha), *r, n_max)};
        return DGS_OK;
    });
}

void dgs_bernoulli_free(dgs_bernoulli* b) { delete b; }

dgs_status dgs_bernoulli_value(const dgs_bernoulli* b, int n, char** json_out) {
    if (require(b && json_out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        if (n < 0 || n >= static_cast<int>(b->table.values.size()))
            return set_error(DGS_ERROR_INVALID_ARGUMENT, "index beyond the built table");
        *json_out = dup_string(to_json(b->table.values[static_cast<std::size_t>(n)]).dump());
        return DGS_OK;
    });
}

dgs_status dgs_bernoulli_render(const dgs_bernoulli* b, const char* format, const char* lambda,
                                char** out) {
    if (require(b && format && out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        *out = dup_string(
            render_bernoulli(b->table, format_from_name(format), parse_optional_rational(lambda)));
        return DGS_OK;
    });
}

dgs_status dgs_eval_family(const char* family, int n, int r, const char* x, const char* lambda,
                           char** out) {
    if (require(family && out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        const auto fam = family_from_name(family);
        if (!fam)
            return set_error(DGS_ERROR_INVALID_ARGUMENT,
                             std::string("unknown family: '") + family + "'");
        const auto x_value = parse_optional_rational(x);
        const auto lambda_value = parse_optional_rational(lambda);
        const BivarPoly p = family_poly(*fam, n, r);
        std::string rendered;
        if (x_value && lambda_value) {
            rendered = substitute(p, *x_value, *lambda_value).str();
        } else if (x_value) {
            const LambdaPoly v = substitute_x(p, *x_value);
            // A value that carries no deformation dependence prints bare.
            rendered = v.degree() <= 0 ? v.coeff(0).str() : to_json(v).dump();
        } else if (lambda_value) {
            rendered = to_json(substitute_lambda(p, *lambda_value)).dump();
        } else {
            rendered = to_json(p).dump();
        }
        *out = dup_string(rendered);
        return DGS_OK;
    });
}

dgs_status dgs_eval_bernoulli(const char* alpha, int n, const char* lambda, char** out) {
    if (require(alpha && out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        if (n < 0) return set_error(DGS_ERROR_INVALID_ARGUMENT, "n must be nonnegative");
        const auto table = bernoulli_series(Rational::parse(alpha), n);
        const LambdaPoly& value = table.values[static_cast<std::size_t>(n)];
        const auto lambda_value = parse_optional_rational(lambda);
        *out = dup_string(lambda_value ? value.eval(*lambda_value).str() : to_json(value).dump());
        return DGS_OK;
    });
}

void dgs_verify_options_init(dgs_verify_options* opts) {
    if (!opts) return;
    opts->n_max = 10;
    opts->r_max = 10;
    opts->order = 32;
    opts->sample_points = 20;
    opts->seed = 42;
    opts->alpha = nullptr;
    opts->only = nullptr;
    opts->timing = 0;
}

dgs_status dgs_verify_run(const dgs_verify_options* opts, const char* format, int* all_pass,
                          char** report_out) {
    if (require(opts && format && all_pass && report_out, "null argument") != DGS_OK)
        return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        SweepBounds bounds;
        bounds.n_max = opts->n_max;
        bounds.r_max = opts->r_max;
        bounds.order = opts->order;
        bounds.sample_points = opts->sample_points;
        if (opts->alpha) bounds.alpha_filter = Rational::parse(opts->alpha);
        std::vector<std::string> only;
        if (opts->only) only.emplace_back(opts->only);
        const auto report = run_suite(bounds, opts->seed, only);
        std::string rendered;
        const std::string fmt = format;
        if (fmt == "json")
            rendered = report_json(report, opts->timing != 0);
        else if (fmt == "markdown")
            rendered = report_markdown(report, opts->timing != 0);
        else
            return set_error(DGS_ERROR_PARSE, "unknown report format: '" + fmt + "'");
        *all_pass = report.all_passed() ? 1 : 0;
        *report_out = dup_string(rendered);
        return DGS_OK;
    });
}

dgs_status dgs_verify_ids(char** out) {
    if (require(out != nullptr, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        std::string joined;
        for (const auto& id : registry_ids()) {
            joined += id;
            joined += '\n';
        }
        *out = dup_string(joined);
        return DGS_OK;
    });
}

dgs_status dgs_trig_check(int r, double x, const char* lambda, int n_terms, char** json_out) {
    if (require(lambda && json_out, "null argument") != DGS_OK) return DGS_ERROR_INVALID_ARGUMENT;
    return guarded([&]() -> dgs_status {
        const auto sums = trig_sums_numeric(r, x, Rational::parse(lambda), n_terms);
        Json record;
        record["r"] = sums.r;
        record["x"] = sums.x;
        record["lambda"] = sums.lambda.str();
        record["n_terms"] = sums.n_terms;
        record["cos_partial"] = sums.cos_partial;
        record["cos_closed"] = sums.cos_closed;
        record["sin_partial"] = sums.sin_partial;
        record["sin_closed"] = sums.sin_closed;
        record["abs_err"] = sums.max_error();
        *json_out = dup_string(record.dump(2) + "\n");
        return DGS_OK;
    });
}

}  // extern "C"
