#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratlab/exponent.hpp"
#include "ratlab/quadrature.hpp"

namespace ratlab {

/// Flat key = value settings; later sources override earlier ones.
using ConfigMap = std::map<std::string, std::string>;

/// Reads a key = value file. Blank lines and lines starting with '#' are
/// ignored. Throws ConfigError on unreadable files and malformed lines.
ConfigMap read_config_file(const std::string& path);
ConfigMap parse_config_text(const std::string& text);

enum class SharpnessKind { Bep, Bernstein, Nikolskii, Dirichlet };
enum class BestConstantMethod { Gram, Search };

SharpnessKind parse_sharpness_kind(const std::string& name);
BestConstantMethod parse_method(const std::string& name);
std::string to_string(SharpnessKind kind);
std::string to_string(BestConstantMethod method);

struct ExperimentGrid {
    std::vector<int> n_values{8, 16, 32, 64};
    std::vector<double> r_values{0.5};
    std::vector<Exponent> p_values{1.0, 2.0, Exponent::infinity()};
    std::vector<Exponent> q_values{1.0, 2.0, Exponent::infinity()};
    std::uint64_t seed = 1;
    double rel_tol = 1e-8;
    long max_nodes = 1L << 22;
    std::string output;          ///< empty for standard output
    std::string format = "csv";  ///< csv | json
    int jobs = 0;                ///< 0 means every available core
    std::size_t max_cells = 20000;
    int budget = 400;            ///< search evaluations per cell
    bool timing = false;         ///< fill the ms column
    int verify_functions = 40;   ///< random functions per verify suite

    QuadratureConfig quadrature() const;
    /// Throws ConfigError when any value leaves its domain.
    void validate() const;
};

/// Defaults, then `file`, then `cli`. Unknown keys are a ConfigError.
ExperimentGrid make_grid(const ConfigMap& file, const ConfigMap& cli);

struct ResultRow {
    std::string kind;
    int n = 0;
    double r = 0.0;
    Exponent p = Exponent::infinity();
    Exponent q = Exponent::infinity();
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    std::optional<double> slope;
    std::optional<double> residual;
    long nodes = 0;
    std::optional<double> ms;
    std::string flag;  ///< empty for a good row

    bool flagged() const { return !flag.empty(); }
};

/// Summary rows: one least-squares fit of log lhs against log n per
/// (kind, r, p, q) series, skipping flagged rows and series with fewer than
/// two usable points. The flag column records "excluded=k".
std::vector<ResultRow> fit_series(const std::vector<ResultRow>& rows);

std::vector<ResultRow> run_sharpness(const ExperimentGrid& grid, SharpnessKind kind);
/// Throws MethodMismatch for gram with any exponent other than 2.
std::vector<ResultRow> run_best_constant(const ExperimentGrid& grid, BestConstantMethod method);
/// Every applicable inequality on a seeded random function per (n, r) cell.
std::vector<ResultRow> run_table(const ExperimentGrid& grid);

struct VerifyCheck {
    std::string name;
    double max_error = 0.0;
    double threshold = 0.0;
    int cases = 0;
    bool passed() const { return max_error <= threshold; }
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool passed() const;
};

VerifyReport run_verify(const ExperimentGrid& grid);

struct OutputMeta {
    std::string command;
    std::uint64_t seed = 0;
    double rel_tol = 0.0;
    std::string generated;  ///< timestamp, written only in the header comment
};

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows, const OutputMeta& meta);
void write_json(std::ostream& out, const std::vector<ResultRow>& rows, const OutputMeta& meta);
void write_report(std::ostream& out, const VerifyReport& report);

/// Parses what write_csv produced (header comment and all).
std::vector<ResultRow> read_csv(std::istream& in);

std::string version();

}  // namespace ratlab
