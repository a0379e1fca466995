// Command-line calculator for saturation lengths of monomial-ideal powers
// and the K3 blow-up section sums. All computation is exact; JSON output
// serializes big integers and rationals as strings.

#include <cohlen/asymptotics.hpp>
#include <cohlen/k3.hpp>
#include <cohlen/lengths.hpp>
#include <cohlen/parser.hpp>
#include <cohlen/serialize.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using cohlen::json;

struct IdealArgs {
    std::string vars;
    std::string ideal_text;

    void attach(CLI::App* cmd) {
        cmd->add_option("--vars", vars, "comma-separated variable names, e.g. x,y,z")
            ->required();
        cmd->add_option("--ideal", ideal_text,
                        "generators, e.g. \"x^2, x*y\" (use - to read stdin)")
            ->required();
    }

    std::pair<std::vector<std::string>, cohlen::MonomialIdeal> parse() const {
        std::string text = ideal_text;
        if (text == "-") {
            std::string line, all;
            while (std::getline(std::cin, line)) {
                all += line;
                all += ' ';
            }
            text = all;
        }
        auto names = cohlen::parse_variable_names(vars);
        return {names, cohlen::parse_ideal(text, names)};
    }
};

void emit(const json& payload, const std::string& format) {
    if (format == "csv")
        std::cout << cohlen::to_csv(payload.is_array() ? payload : payload.at("rows"));
    else
        std::cout << payload.dump(2) << '\n';
}

json k3_params_json(const cohlen::K3Params& p) {
    return json{{"a", p.a()}, {"b", p.b()}, {"c", p.c()}, {"e", p.cutoff_e()}};
}

int run(int argc, char** argv) {
    CLI::App app{"exact lengths of local cohomology for powers of monomial ideals"};
    app.require_subcommand(1);

    // ---- length ----
    auto* length_cmd =
        app.add_subcommand("length", "table of lambda(H^0_m(R/I^n)) = sigma(n) - tau(n)");
    IdealArgs length_args;
    length_args.attach(length_cmd);
    long long length_nmax = 0;
    std::optional<long long> length_e;
    std::string length_format = "json";
    length_cmd->add_option("--nmax", length_nmax, "largest power n")->required();
    length_cmd->add_option("--e", length_e, "cutoff slope (default: empirical)");
    length_cmd->add_option("--format", length_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- limit ----
    auto* limit_cmd =
        app.add_subcommand("limit", "Richardson estimate of lambda(H^0)/n^degree");
    IdealArgs limit_args;
    limit_args.attach(limit_cmd);
    long long limit_nmax = 0, limit_degree = 0;
    limit_cmd->add_option("--nmax", limit_nmax, "largest power n")->required();
    limit_cmd->add_option("--degree", limit_degree, "normalization exponent d")->required();

    // ---- mult ----
    auto* mult_cmd = app.add_subcommand("mult", "multiplicity e(I) of an m-primary ideal");
    IdealArgs mult_args;
    mult_args.attach(mult_cmd);
    long long mult_nmax = 0;
    mult_cmd->add_option("--nmax", mult_nmax, "largest power n")->required();

    // ---- diag ----
    auto* diag_cmd =
        app.add_subcommand("diag", "diagonal Hilbert function n -> dim (I^{bn})_{an}");
    IdealArgs diag_args;
    diag_args.attach(diag_cmd);
    long long diag_a = 0, diag_b = 0, diag_nmax = 0;
    std::string diag_format = "json";
    diag_cmd->add_option("--a", diag_a, "diagonal degree slope")->required();
    diag_cmd->add_option("--b", diag_b, "diagonal power slope")->required();
    diag_cmd->add_option("--nmax", diag_nmax, "largest n")->required();
    diag_cmd->add_option("--format", diag_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- k3 ----
    auto* k3_cmd = app.add_subcommand("k3", "the K3 blow-up example");
    k3_cmd->require_subcommand(1);
    long long k3_a = 4, k3_b = 3, k3_c = 2, k3_e = 8;
    auto* k3_sigma_cmd = k3_cmd->add_subcommand("sigma", "table of sigma(n) and sigma(n)/n^4");
    auto* k3_limit_cmd =
        k3_cmd->add_subcommand("limit", "closed form of lim sigma(n)/n^4 in Q[sqrt(D)]");
    auto* k3_check_cmd =
        k3_cmd->add_subcommand("check", "verify recursion = decomposition exactly");
    for (auto* cmd : {k3_sigma_cmd, k3_limit_cmd, k3_check_cmd}) {
        cmd->add_option("--a", k3_a, "curve class a (default 4)");
        cmd->add_option("--b", k3_b, "curve class b (default 3)");
        cmd->add_option("--c", k3_c, "curve class c (default 2)");
        cmd->add_option("--e", k3_e, "summation cutoff (default 8)");
    }
    long long k3_sigma_nmax = 64;
    std::string k3_mode = "recursion";
    std::string k3_format = "json";
    k3_sigma_cmd->add_option("--nmax", k3_sigma_nmax, "largest n (default 64)");
    k3_sigma_cmd->add_option("--mode", k3_mode, "recursion or decomposition")
        ->check(CLI::IsMember({"recursion", "decomposition"}));
    k3_sigma_cmd->add_option("--format", k3_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    long long k3_check_nmax = 64;
    k3_check_cmd->add_option("--nmax", k3_check_nmax, "largest n (default 64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", {{"message", e.what()}, {"kind", "usage"}}}}.dump(2) << '\n';
        return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
    }

    if (length_cmd->parsed()) {
        auto [names, ideal] = length_args.parse();
        auto rows = cohlen::length_table(ideal, length_nmax, length_e);
        emit(cohlen::length_rows_json(rows), length_format);
        return 0;
    }

    if (limit_cmd->parsed()) {
        auto [names, ideal] = limit_args.parse();
        std::vector<cohlen::BigInt> lambdas;
        for (long long n = 1; n <= limit_nmax; ++n)
            lambdas.push_back(cohlen::h0_length(ideal, n));
        auto est = cohlen::richardson_limit(lambdas, limit_degree);
        json out = cohlen::to_json(est);
        out["ideal"] = cohlen::render_ideal(ideal, names);
        emit(out, "json");
        return 0;
    }

    if (mult_cmd->parsed()) {
        auto [names, ideal] = mult_args.parse();
        cohlen::Rational e = cohlen::multiplicity_mprimary(ideal, mult_nmax);
        cohlen::BigInt dfact(1);
        for (int i = 2; i <= ideal.dim(); ++i) dfact *= cohlen::BigInt(i);
        emit(json{{"ideal", cohlen::render_ideal(ideal, names)},
                  {"degree", ideal.dim()},
                  {"multiplicity", e.to_string()},
                  {"hilbert_samuel_limit", (e / cohlen::Rational(dfact)).to_string()}},
             "json");
        return 0;
    }

    if (diag_cmd->parsed()) {
        auto [names, ideal] = diag_args.parse();
        json rows = json::array();
        for (long long n = 0; n <= diag_nmax; ++n)
            rows.push_back(json{
                {"n", n}, {"value", cohlen::diagonal_hilbert(ideal, diag_a, diag_b, n).to_string()}});
        if (!cohlen::diagonal_in_finite_generation_regime(ideal, diag_a, diag_b) &&
            diag_format == "json") {
            emit(json{{"warning",
                       "a < b * max generator degree: outside the finite-generation regime, "
                       "values are still exact"},
                      {"rows", rows}},
                 "json");
        } else {
            emit(rows, diag_format);
        }
        return 0;
    }

    cohlen::K3Params params(k3_a, k3_b, k3_c, k3_e);

    if (k3_limit_cmd->parsed()) {
        cohlen::QuadraticNumber limit = cohlen::closed_form_limit(params);
        json out = cohlen::to_json(limit);
        out["decimal"] = limit.to_decimal_string(30);
        out["irrational"] = !limit.is_rational();
        emit(out, "json");
        return 0;
    }

    if (k3_sigma_cmd->parsed()) {
        if (k3_sigma_nmax < 1) throw std::invalid_argument("k3 sigma: nmax must be >= 1");
        cohlen::BlowupCohomology calc(params);
        std::vector<cohlen::ConvergenceRow> rows;
        std::vector<cohlen::Rational> ratios(static_cast<std::size_t>(k3_sigma_nmax) + 1);
        for (long long n = 1; n <= k3_sigma_nmax; ++n) {
            cohlen::ConvergenceRow row;
            row.n = n;
            row.sigma = k3_mode == "recursion" ? calc.sigma_by_recursion(n)
                                               : calc.sigma_by_decomposition(n);
            row.ratio = cohlen::Rational(row.sigma, cohlen::pow(cohlen::BigInt(n), 4));
            ratios[static_cast<std::size_t>(n)] = row.ratio;
            if (n % 2 == 0)
                row.extrapolant = cohlen::Rational(2) * row.ratio -
                                  ratios[static_cast<std::size_t>(n / 2)];
            rows.push_back(std::move(row));
        }
        json rows_json = cohlen::convergence_rows_json(rows);
        if (k3_format == "csv") {
            emit(rows_json, "csv");
            return 0;
        }
        json out{{"params", k3_params_json(params)}, {"mode", k3_mode}, {"rows", rows_json}};
        if (params.a() == 4) {
            cohlen::QuadraticNumber limit = cohlen::closed_form_limit(params);
            out["closed_form"] = cohlen::to_json(limit);
            out["closed_form_decimal"] = limit.to_decimal_string(30);
        }
        emit(out, "json");
        return 0;
    }

    if (k3_check_cmd->parsed()) {
        cohlen::BlowupCohomology calc(params);
        json out{{"params", k3_params_json(params)}, {"nmax", k3_check_nmax}};
        out["all_equal"] = true;
        out["first_mismatch"] = nullptr;
        for (long long n = 1; n <= k3_check_nmax; ++n) {
            cohlen::BigInt rec = calc.sigma_by_recursion(n);
            cohlen::BigInt dec = calc.sigma_by_decomposition(n);
            if (rec != dec) {
                out["all_equal"] = false;
                out["first_mismatch"] = json{{"n", n},
                                             {"recursion", rec.to_string()},
                                             {"decomposition", dec.to_string()}};
                break;
            }
        }
        emit(out, "json");
        return out["all_equal"].get<bool>() ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cohlen::ParseError& e) {
        std::cout << json{{"error", {{"message", e.what()}, {"position", e.position()}}}}.dump(2)
                  << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"message", e.what()}}}}.dump(2) << '\n';
        return 1;
    }
}
