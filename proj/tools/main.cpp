// Command-line front end. Batch only: every subcommand reads its flags, makes
// one or two calls into the shared library, prints the result and exits.
// Data goes to stdout (or --output), diagnostics to stderr.
// Exit codes: 0 success, 1 verification found a failing identity, 2 usage or
// parse errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "degenstir/degenstir.h"

namespace {

using CString = std::unique_ptr<char, void (*)(char*)>;

CString wrap(char* s) { return CString(s, &dgs_string_free); }

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "degenstir: cannot open output file '" << output_path << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

int report_error(dgs_status status) {
    std::cerr << "degenstir: " << dgs_last_error() << "\n";
    (void)status;
    return 2;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables and identity verification for deformed Stirling/Bernoulli numbers"};
    app.require_subcommand(1);

    std::string output_path;
    app.add_option("-o,--output", output_path, "write data to a file instead of stdout")->capture_default_str();

    // table ------------------------------------------------------------
    auto* table = app.add_subcommand("table", "triangle of {n k} values as polynomials in l");
    int table_n_max = 20;
    std::string table_algorithm = "recurrence";
    std::string table_lambda, table_format = "json";
    table->add_option("--n-max", table_n_max, "largest row")->capture_default_str();
    table->add_option("--algorithm", table_algorithm, "recurrence | euler-sum | egf")->capture_default_str();
    table->add_option("--lambda", table_lambda, "evaluate entries at this rational");
    table->add_option("--format", table_format, "json | csv | markdown")->capture_default_str();

    // bernoulli ---------------------------------------------------------
    auto* bern = app.add_subcommand("bernoulli", "deformed Bernoulli numbers of rational order");
    std::string bern_alpha;
    int bern_n_max = 20;
    std::string bern_route = "series", bern_lambda, bern_format = "json";
    bern->add_option("--alpha", bern_alpha, "order (rational)")->required();
    bern->add_option("--n-max", bern_n_max, "largest index")->capture_default_str();
    bern->add_option("--route", bern_route, "series | closed-form")->capture_default_str();
    bern->add_option("--lambda", bern_lambda, "evaluate values at this rational");
    bern->add_option("--format", bern_format, "json | csv | markdown")->capture_default_str();

    // verify --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    dgs_verify_options vopts;
    dgs_verify_options_init(&vopts);
    int verify_n_max = 20, verify_r_max = 10, verify_order = 32, verify_samples = 20;
    unsigned long long verify_seed = 42;
    std::string verify_alpha, verify_only, verify_format = "json";
    bool verify_timing = false, verify_list = false;
    verify->add_option("--n-max", verify_n_max, "sweep bound (capped per case)")->capture_default_str();
    verify->add_option("--r-max", verify_r_max, "sweep bound (capped per case)")->capture_default_str();
    verify->add_option("--order", verify_order, "series truncation order")
        ->envname("DEGENSTIR_ORDER")
        ->capture_default_str();
    verify->add_option("--sample-points", verify_samples, "random rational samples per two-variable check")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "seed for the random sample points")->capture_default_str();
    verify->add_option("--alpha", verify_alpha, "restrict order sweeps to one rational");
    verify->add_option("--only", verify_only, "run a single case id");
    verify->add_option("--format", verify_format, "json | markdown")->capture_default_str();
    verify->add_flag("--timing", verify_timing, "include per-case milliseconds");
    verify->add_flag("--list", verify_list, "print the case ids and exit");

    // eval ---------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate one family polynomial or Bernoulli number");
    std::string eval_family, eval_x, eval_lambda, eval_alpha;
    int eval_n = 0, eval_r = 0;
    bool eval_bernoulli = false;
    eval->add_option("--family", eval_family, "S | Snr | T | Bell");
    eval->add_flag("--bernoulli", eval_bernoulli, "evaluate a deformed Bernoulli number instead");
    eval->add_option("--alpha", eval_alpha, "order (with --bernoulli)");
    eval->add_option("--n", eval_n, "degree / index")->required();
    eval->add_option("--r", eval_r, "family parameter r");
    eval->add_option("--x", eval_x, "substitute this rational for x");
    eval->add_option("--lambda", eval_lambda, "substitute this rational for l");

    // trig ---------------------------------------------------------------
    auto* trig = app.add_subcommand("trig", "numeric check of the cos/sin weighted sums");
    int trig_r = 0, trig_terms = 200;
    double trig_x = 0.0;
    std::string trig_lambda;
    trig->add_option("--r", trig_r, "weight (k)_{r,l}")->required();
    trig->add_option("--x", trig_x, "angle (double)")->required();
    trig->add_option("--lambda", trig_lambda, "rational value of l")->required();
    trig->add_option("--n-terms", trig_terms, "partial-sum length")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (table->parsed()) {
        dgs_triangle* handle = nullptr;
        if (dgs_triangle_build(table_algorithm.c_str(), table_n_max, &handle) != DGS_OK)
            return report_error(DGS_ERROR_INVALID_ARGUMENT);
        std::unique_ptr<dgs_triangle, void (*)(dgs_triangle*)> guard(handle, &dgs_triangle_free);
        char* rendered = nullptr;
        if (dgs_triangle_render(handle, table_format.c_str(), opt(table_lambda), &rendered) != DGS_OK)
            return report_error(DGS_ERROR_PARSE);
        return emit(wrap(rendered).get(), output_path);
    }

    if (bern->parsed()) {
        dgs_bernoulli* handle = nullptr;
        if (dgs_bernoulli_build(bern_alpha.c_str(), bern_route.c_str(), bern_n_max, &handle) != DGS_OK)
            return report_error(DGS_ERROR_INVALID_ARGUMENT);
        std::unique_ptr<dgs_bernoulli, void (*)(dgs_bernoulli*)> guard(handle, &dgs_bernoulli_free);
        char* rendered = nullptr;
        if (dgs_bernoulli_render(handle, bern_format.c_str(), opt(bern_lambda), &rendered) != DGS_OK)
            return report_error(DGS_ERROR_PARSE);
        return emit(wrap(rendered).get(), output_path);
    }

    if (verify->parsed()) {
        if (verify_list) {
            char* ids = nullptr;
            if (dgs_verify_ids(&ids) != DGS_OK) return report_error(DGS_ERROR_INTERNAL);
            return emit(wrap(ids).get(), output_path);
        }
        vopts.n_max = verify_n_max;
        vopts.r_max = verify_r_max;
        vopts.order = verify_order;
        vopts.sample_points = verify_samples;
        vopts.seed = verify_seed;
        vopts.alpha = opt(verify_alpha);
        vopts.only = opt(verify_only);
        vopts.timing = verify_timing ? 1 : 0;
        int all_pass = 0;
        char* report = nullptr;
        if (dgs_verify_run(&vopts, verify_format.c_str(), &all_pass, &report) != DGS_OK)
            return report_error(DGS_ERROR_INVALID_ARGUMENT);
        const int emitted = emit(wrap(report).get(), output_path);
        if (emitted != 0) return emitted;
        if (all_pass == 0) {
            std::cerr << "degenstir: verification failed\n";
            return 1;
        }
        return 0;
    }

    if (eval->parsed()) {
        char* value = nullptr;
        if (eval_bernoulli) {
            if (eval_alpha.empty()) {
                std::cerr << "degenstir: --bernoulli needs --alpha\n";
                return 2;
            }
            if (dgs_eval_bernoulli(eval_alpha.c_str(), eval_n, opt(eval_lambda), &value) != DGS_OK)
                return report_error(DGS_ERROR_PARSE);
        } else {
            if (eval_family.empty()) {
                std::cerr << "degenstir: eval needs --family or --bernoulli\n";
                return 2;
            }
            if (dgs_eval_family(eval_family.c_str(), eval_n, eval_r, opt(eval_x), opt(eval_lambda),
                                &value) != DGS_OK)
                return report_error(DGS_ERROR_PARSE);
        }
        return emit(wrap(value).get(), output_path);
    }

    if (trig->parsed()) {
        char* record = nullptr;
        if (dgs_trig_check(trig_r, trig_x, trig_lambda.c_str(), trig_terms, &record) != DGS_OK)
            return report_error(DGS_ERROR_PARSE);
        return emit(wrap(record).get(), output_path);
    }

    return 2;
}
