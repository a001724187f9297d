#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>

#include "hilbetti/cli.hpp"

using namespace hilbetti;

namespace {

long long env_budget() {
    const char* env = std::getenv("HILBETTI_BUDGET");
    if (!env) return 100'000'000;
    try {
        return std::stoll(env);
    } catch (const std::exception&) {
        std::cerr << "warning: ignoring malformed HILBETTI_BUDGET\n";
        return 100'000'000;
    }
}

int emit(const cli::CommandResult& result, bool as_json) {
    if (as_json) {
        std::cout << result.record.to_json().dump(2) << "\n";
    } else {
        std::cout << cli::render_text(result.record);
    }
    return result.exit_code;
}

RatPoly parse_poly_arg(const std::string& text) {
    std::vector<std::string> coeffs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(tok);
    return poly_from_coeff_strings(coeffs);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hilbetti: Betti number sums of smooth Hilbert schemes over P^n,\n"
        "with exact closed forms and brute-force enumeration oracles"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    bool as_csv = false;  // accepted for symmetry; table output is always CSV
    app.add_flag("--json", as_json, "emit the record as JSON");
    app.add_flag("--csv", as_csv, "CSV output (table emits CSV regardless)");

    int n = 1;
    std::string lambda_text;
    std::string poly_text;
    long long budget = env_budget();
    int bound = -1;
    bool witnesses = false;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        if (needs_n) cmd->add_option("-n,--dim", n, "projective dimension n")->required();
        cmd->add_option("--budget", budget, "node budget per enumeration pass");
        cmd->add_option("--bound", bound, "degree cap / offset box override");
        cmd->add_flag("--witnesses", witnesses, "list witness ideals");
    };

    auto* classify_cmd = app.add_subcommand("classify", "match (n, lambda) against the smooth families");
    classify_cmd->add_option("-n,--dim", n, "projective dimension n")->required();
    classify_cmd->add_option("-l,--lambda", lambda_text, "partition, e.g. \"2^2,1\"");

    auto* betti_cmd = app.add_subcommand("betti", "sum of the Betti numbers for (n, lambda)");
    bool verify = false;
    betti_cmd->add_option("-l,--lambda", lambda_text, "partition");
    betti_cmd->add_flag("--verify", verify, "cross-check against the enumeration oracle");
    add_common(betti_cmd, true);

    auto* encode_cmd = app.add_subcommand("encode", "Hilbert polynomial of a partition");
    encode_cmd->add_option("-l,--lambda", lambda_text, "partition");

    auto* decode_cmd = app.add_subcommand("decode", "partition of a Hilbert polynomial");
    decode_cmd
        ->add_option("-p,--poly", poly_text,
                     "coefficients, ascending degree, e.g. \"1,5/2,1/2\"")
        ->required();

    auto* oi_cmd = app.add_subcommand("oracle-ideals", "count saturated monomial ideals directly");
    oi_cmd->add_option("-l,--lambda", lambda_text, "target partition");
    oi_cmd->add_option("-p,--poly", poly_text, "target polynomial coefficients");
    add_common(oi_cmd, true);

    auto* oa_cmd = app.add_subcommand("oracle-arrangements",
                                      "count ideals through orthant arrangements");
    oa_cmd->add_option("-l,--lambda", lambda_text, "target partition");
    oa_cmd->add_option("-p,--poly", poly_text, "target polynomial coefficients");
    add_common(oa_cmd, true);

    auto* table_cmd = app.add_subcommand("table", "CSV of Betti sums for one family");
    std::string family = "F7";
    int n_from = 1, n_to = 3, max_r = 4;
    table_cmd->add_option("--family", family, "family name F1..F7")->required();
    table_cmd->add_option("--n-from", n_from, "first n");
    table_cmd->add_option("--n-to", n_to, "last n");
    table_cmd->add_option("--max-r", max_r, "largest partition length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classify_cmd)) {
            return emit(cli::cmd_classify(n, lambda_text), as_json);
        }
        if (app.got_subcommand(betti_cmd)) {
            cli::BettiOptions opts;
            opts.verify = verify;
            opts.budget = budget;
            opts.bound = bound;
            opts.witnesses = witnesses;
            return emit(cli::cmd_betti(n, lambda_text, opts), as_json);
        }
        if (app.got_subcommand(encode_cmd)) {
            return emit(cli::cmd_encode(lambda_text), as_json);
        }
        if (app.got_subcommand(decode_cmd)) {
            return emit(cli::cmd_decode(parse_poly_arg(poly_text)), as_json);
        }
        if (app.got_subcommand(oi_cmd) || app.got_subcommand(oa_cmd)) {
            RatPoly target;
            if (!poly_text.empty()) {
                target = parse_poly_arg(poly_text);
            } else {
                target = encode(Partition::parse(lambda_text));
            }
            OracleOptions opts;
            opts.budget = budget;
            opts.bound = bound;
            opts.keep_witnesses = witnesses;
            OracleMethod method = app.got_subcommand(oi_cmd) ? OracleMethod::IdealEnum
                                                             : OracleMethod::ArrangementEnum;
            return emit(cli::cmd_oracle(method, n, target, opts), as_json);
        }
        if (app.got_subcommand(table_cmd)) {
            cli::cmd_table(std::cout, family, n_from, n_to, max_r);
            return cli::kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitBadInput;
    }
    return cli::kExitBadInput;
}
