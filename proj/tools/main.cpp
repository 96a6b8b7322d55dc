#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratarma/commands.hpp"
#include "ratarma/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ARMA modeling as rational approximation of transfer functions"};
    app.require_subcommand(1);

    ratarma::RunConfig config;
    app.add_option("--order", config.order, "Series truncation order")->capture_default_str();
    app.add_option("--grid-tol", config.grid_tol, "Circle-grid refinement tolerance")
        ->capture_default_str();
    app.add_option("--budget", config.budget, "Optimizer evaluations per restart")
        ->capture_default_str();
    app.add_option("--restarts", config.restarts, "Optimizer restarts")->capture_default_str();
    app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
    app.add_flag("--json", config.json, "Emit a JSON object instead of text/CSV");
    app.add_option("--out", config.out_path, "Write output to PATH instead of stdout");

    auto* examples = app.add_subcommand(
        "examples", "Reference norms, invertibility dictionary and truncation table");

    int grid = 256;
    auto* figure1 =
        app.add_subcommand("figure1", "CSV of the two candidate errors on the unit circle");
    figure1->add_option("--grid", grid, "Number of angular samples (>= 64)")
        ->capture_default_str();

    int m = 1, n = 1;
    auto* optimize = app.add_subcommand(
        "optimize", "Supnorm-optimized rational approximation of log(1 + z/2)");
    optimize->add_option("--m", m, "Numerator degree")->capture_default_str();
    optimize->add_option("--n", n, "Denominator degree")->capture_default_str();

    std::vector<int> budgets = {2, 4, 8};
    int k_expand = 4096;
    auto* conjecture = app.add_subcommand(
        "conjecture", "Truncation-versus-ARMA evidence table for the log(1 + z) process");
    conjecture->add_option("--budgets", budgets, "Coefficient budgets")->capture_default_str();
    conjecture->add_option("--k-expand", k_expand, "Comparison expansion order")
        ->capture_default_str();

    std::vector<int> dims = {2, 8, 64, 512};
    auto* spectral = app.add_subcommand(
        "spectral-check", "Compression-norm convergence and the bounded counterexample");
    spectral->add_option("--dims", dims, "Compression dimensions")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        ratarma::CommandResult result;
        if (examples->parsed())
            result = ratarma::cmd_examples(config);
        else if (figure1->parsed())
            result = ratarma::cmd_figure1(config, grid);
        else if (optimize->parsed())
            result = ratarma::cmd_optimize(config, m, n);
        else if (conjecture->parsed())
            result = ratarma::cmd_conjecture(config, budgets, k_expand);
        else if (spectral->parsed())
            result = ratarma::cmd_spectral_check(config, dims);
        ratarma::emit(result, config);
        return result.all_passed ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
