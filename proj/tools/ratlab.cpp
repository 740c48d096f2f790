#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ratlab/errors.hpp"
#include "ratlab/runner.hpp"

using namespace ratlab;

namespace {

struct CommonFlags {
    std::string config;
    ConfigMap cli;
};

// Registers a flag that is copied into the CLI layer only when given.
void flag(CLI::App* app, CommonFlags& common, const std::string& name, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(name, [&common, key](const std::string& v) { common.cli[key] = v; }, help);
}

void add_common(CLI::App* app, CommonFlags& common) {
    app->add_option("--config", common.config, "key = value configuration file");
    flag(app, common, "--seed", "seed", "random seed");
    flag(app, common, "--rel-tol", "rel_tol", "quadrature relative tolerance");
    flag(app, common, "--out", "out", "output path (default: standard output)");
    flag(app, common, "--format", "format", "csv or json");
    flag(app, common, "--jobs", "jobs", "worker threads (0: all cores)");
    flag(app, common, "--n", "n", "comma-separated degrees");
    flag(app, common, "--r", "r", "comma-separated radii in (0,1)");
    flag(app, common, "--p", "p", "comma-separated exponents (inf allowed)");
    flag(app, common, "--q", "q", "comma-separated exponents (inf allowed)");
    flag(app, common, "--max-nodes", "max_nodes", "quadrature node cap");
    flag(app, common, "--budget", "budget", "search evaluations per cell");
    flag(app, common, "--timing", "timing", "fill the ms column (true/false)");
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

int emit(const ExperimentGrid& grid, const std::string& command, const std::vector<ResultRow>& rows) {
    const OutputMeta meta{command, grid.seed, grid.rel_tol, timestamp()};
    std::ofstream file;
    if (!grid.output.empty()) {
        file.open(grid.output);
        if (!file) throw ConfigError("cannot write '" + grid.output + "'");
    }
    std::ostream& out = grid.output.empty() ? std::cout : file;
    if (grid.format == "json")
        write_json(out, rows, meta);
    else
        write_csv(out, rows, meta);
    for (const ResultRow& row : rows)
        if (row.flagged() && !row.slope) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-type inequalities for rational functions on the circle: checks and experiments"};
    app.require_subcommand(1);
    CommonFlags common;

    auto* verify = app.add_subcommand("verify", "representation, closed-form and inequality suites");
    add_common(verify, common);
    flag(verify, common, "--functions", "verify_functions", "random functions per suite");

    std::string kind = "bernstein";
    auto* sharp = app.add_subcommand("sharpness", "test-function ratios over the grid");
    add_common(sharp, common);
    sharp->add_option("--kind", kind, "bep | bernstein | nikolskii | dirichlet")
        ->check(CLI::IsMember({"bep", "bernstein", "nikolskii", "dirichlet"}));

    std::string method = "gram";
    auto* best = app.add_subcommand("best-constant", "lower bounds for the best Bernstein constant");
    add_common(best, common);
    best->add_option("--method", method, "gram | search")->check(CLI::IsMember({"gram", "search"}));

    auto* table = app.add_subcommand("table", "every inequality on a random function per grid cell");
    add_common(table, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const ConfigMap file = common.config.empty() ? ConfigMap{} : read_config_file(common.config);
        const ExperimentGrid grid = make_grid(file, common.cli);
        if (verify->parsed()) {
            const VerifyReport report = run_verify(grid);
            write_report(std::cout, report);
            return report.passed() ? 0 : 1;
        }
        if (sharp->parsed()) return emit(grid, "sharpness " + kind, run_sharpness(grid, parse_sharpness_kind(kind)));
        if (best->parsed()) return emit(grid, "best-constant " + method, run_best_constant(grid, parse_method(method)));
        return emit(grid, "table", run_table(grid));
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const MethodMismatch& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
