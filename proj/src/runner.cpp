#include "ratlab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ratlab/bounds.hpp"
#include "ratlab/errors.hpp"
#include "ratlab/extremal.hpp"
#include "ratlab/kernels.hpp"
#include "ratlab/random.hpp"
#include "ratlab/test_functions.hpp"

namespace ratlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    if (out.empty()) throw ConfigError("empty list '" + text + "'");
    return out;
}

long parse_long(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw ConfigError(key + ": expected an integer, got '" + text + "'");
    return v;
}

double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw ConfigError(key + ": expected a number, got '" + text + "'");
    return v;
}

Exponent parse_exponent(const std::string& key, const std::string& text) {
    try {
        return Exponent::parse(text);
    } catch (const DomainError&) {
        throw ConfigError(key + ": exponents must lie in [1, inf], got '" + text + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
    if (text == "0" || text == "false" || text == "no" || text == "off") return false;
    throw ConfigError(key + ": expected a boolean, got '" + text + "'");
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string clean_flag(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
    return s;
}

// Runs task(i) for i < count on up to `jobs` threads; results stay in index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& task) {
    std::vector<T> out(count);
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) out[i] = task(i);
    };
    if (workers <= 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return out;
}

ResultRow make_row(std::string kind, int n, double r, Exponent p, Exponent q, double lhs, double rhs, long nodes) {
    ResultRow row;
    row.kind = std::move(kind);
    row.n = n;
    row.r = r;
    row.p = p;
    row.q = q;
    row.lhs = lhs;
    row.rhs = rhs;
    row.ratio = bound_ratio(lhs, rhs);
    row.nodes = nodes;
    return row;
}

// Evaluates one cell, turning any library error into a flagged row.
ResultRow guarded(const ExperimentGrid& grid, ResultRow shape, const std::function<ResultRow()>& body) {
    const auto start = std::chrono::steady_clock::now();
    ResultRow row;
    try {
        row = body();
    } catch (const std::exception& e) {
        row = std::move(shape);
        row.lhs = row.rhs = row.ratio = 0.0;
        row.flag = clean_flag(std::string("error: ") + e.what());
    }
    if (grid.timing)
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

double expected_slope(const std::string& kind, Exponent p, Exponent q) {
    const double ip = p.reciprocal(), iq = q.reciprocal();
    if (kind == "bep") return 1.0 + ip;
    if (kind == "nikolskii") return ip - iq;
    if (kind == "dirichlet") return 1.0 - iq;
    return q >= p ? 1.0 + ip - iq : 1.0;
}

// Poles at radii in (0, r] or [1/r, 2/r], split evenly at random, and a
// numerator of degree n with standard complex normal coefficients.
RationalFunction random_in_class(Rng& rng, int n, double r) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Pole> poles;
    for (int k = 0; k < n; ++k) {
        const double angle = kTwoPi * u(rng);
        const double radius = u(rng) < 0.5 ? r * std::sqrt(std::max(u(rng), 1e-6)) : (1.0 + u(rng)) / r;
        poles.push_back({std::polar(radius, angle), 1});
    }
    std::vector<cplx> coeffs;
    for (int k = 0; k <= n; ++k) coeffs.push_back(standard_complex_normal(rng));
    return RationalFunction(Polynomial::from_coefficients(std::move(coeffs)), PoleSet(poles));
}

struct Cell {
    int n;
    double r;
    Exponent p;
    Exponent q;
};

std::vector<Cell> sharpness_cells(const ExperimentGrid& grid, SharpnessKind kind) {
    std::vector<Cell> cells;
    const Exponent inf = Exponent::infinity();
    for (double r : grid.r_values) {
        if (kind == SharpnessKind::Dirichlet && r != grid.r_values.front()) break;
        for (Exponent p : grid.p_values) {
            if (kind == SharpnessKind::Dirichlet && p != grid.p_values.front()) break;
            for (Exponent q : grid.q_values) {
                if (kind == SharpnessKind::Bep && q != grid.q_values.front()) break;
                for (int n : grid.n_values) {
                    switch (kind) {
                        case SharpnessKind::Bep:
                            if (p == Exponent(1.0) ? n >= 5 : n >= 2) cells.push_back({n, r, p, inf});
                            break;
                        case SharpnessKind::Bernstein:
                            if (q >= p ? n >= 4 : n >= 3) cells.push_back({n, r, p, q});
                            break;
                        case SharpnessKind::Nikolskii:
                            if (p < q && n >= 4) cells.push_back({n, r, p, q});
                            break;
                        case SharpnessKind::Dirichlet:
                            if (q > Exponent(1.0)) cells.push_back({n, 0.0, inf, q});
                            break;
                    }
                }
            }
        }
    }
    return cells;
}

}  // namespace

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap out;
    std::stringstream ss(text);
    std::string line;
    int number = 0;
    while (std::getline(ss, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(number) + ": expected key = value");
        const std::string key = normalize_key(trim(line.substr(0, eq)));
        if (key.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key");
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

ConfigMap read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

SharpnessKind parse_sharpness_kind(const std::string& name) {
    if (name == "bep") return SharpnessKind::Bep;
    if (name == "bernstein") return SharpnessKind::Bernstein;
    if (name == "nikolskii") return SharpnessKind::Nikolskii;
    if (name == "dirichlet") return SharpnessKind::Dirichlet;
    throw ConfigError("unknown sharpness kind '" + name + "'");
}

BestConstantMethod parse_method(const std::string& name) {
    if (name == "gram") return BestConstantMethod::Gram;
    if (name == "search") return BestConstantMethod::Search;
    throw ConfigError("unknown best-constant method '" + name + "'");
}

std::string to_string(SharpnessKind kind) {
    switch (kind) {
        case SharpnessKind::Bep: return "bep";
        case SharpnessKind::Bernstein: return "bernstein";
        case SharpnessKind::Nikolskii: return "nikolskii";
        case SharpnessKind::Dirichlet: return "dirichlet";
    }
    return "?";
}

std::string to_string(BestConstantMethod method) { return method == BestConstantMethod::Gram ? "gram" : "search"; }

QuadratureConfig ExperimentGrid::quadrature() const {
    QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.max_nodes = std::max(max_nodes, cfg.base_nodes);
    return cfg;
}

void ExperimentGrid::validate() const {
    if (n_values.empty() || r_values.empty() || p_values.empty() || q_values.empty())
        throw ConfigError("grid lists must be non-empty");
    for (int n : n_values)
        if (n < 1 || n > 4096) throw ConfigError("n must lie in [1, 4096], got " + std::to_string(n));
    for (double r : r_values)
        if (!(r > 0.0 && r < 1.0)) throw ConfigError("r must lie in (0, 1), got " + format_double(r));
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) throw ConfigError("rel_tol must lie in (0, 1e-2]");
    if (max_nodes < 4096) throw ConfigError("max_nodes must be at least 4096");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
    if (jobs < 0) throw ConfigError("jobs must be nonnegative");
    if (budget < 100) throw ConfigError("budget must be at least 100");
    if (verify_functions < 1) throw ConfigError("verify_functions must be positive");
    const std::size_t cells = n_values.size() * r_values.size() * p_values.size() * q_values.size();
    if (cells > max_cells)
        throw ConfigError("grid has " + std::to_string(cells) + " cells, above max_cells = " + std::to_string(max_cells));
}

ExperimentGrid make_grid(const ConfigMap& file, const ConfigMap& cli) {
    ConfigMap merged;
    for (const auto& [k, v] : file) merged[normalize_key(k)] = v;
    for (const auto& [k, v] : cli) merged[normalize_key(k)] = v;

    ExperimentGrid g;
    for (const auto& [key, value] : merged) {
        if (key == "n") {
            g.n_values.clear();
            for (const auto& s : split_list(value)) g.n_values.push_back(static_cast<int>(parse_long(key, s)));
        } else if (key == "r") {
            g.r_values.clear();
            for (const auto& s : split_list(value)) g.r_values.push_back(parse_double(key, s));
        } else if (key == "p" || key == "q") {
            auto& list = key == "p" ? g.p_values : g.q_values;
            list.clear();
            for (const auto& s : split_list(value)) list.push_back(parse_exponent(key, s));
        } else if (key == "seed") {
            const long s = parse_long(key, value);
            if (s < 0) throw ConfigError("seed must be nonnegative");
            g.seed = static_cast<std::uint64_t>(s);
        } else if (key == "rel_tol") {
            g.rel_tol = parse_double(key, value);
        } else if (key == "max_nodes") {
            g.max_nodes = parse_long(key, value);
        } else if (key == "out") {
            g.output = value;
        } else if (key == "format") {
            g.format = value;
        } else if (key == "jobs") {
            g.jobs = static_cast<int>(parse_long(key, value));
        } else if (key == "max_cells") {
            const long c = parse_long(key, value);
            if (c < 1) throw ConfigError("max_cells must be positive");
            g.max_cells = static_cast<std::size_t>(c);
        } else if (key == "budget") {
            g.budget = static_cast<int>(parse_long(key, value));
        } else if (key == "timing") {
            g.timing = parse_bool(key, value);
        } else if (key == "verify_functions") {
            g.verify_functions = static_cast<int>(parse_long(key, value));
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    g.validate();
    return g;
}

std::vector<ResultRow> fit_series(const std::vector<ResultRow>& rows) {
    struct Series {
        std::string kind;
        double r;
        Exponent p, q;
        std::vector<std::pair<double, double>> points;
        int excluded = 0;
    };
    std::vector<Series> series;
    for (const ResultRow& row : rows) {
        if (row.slope) continue;
        auto it = std::find_if(series.begin(), series.end(), [&](const Series& s) {
            return s.kind == row.kind && s.r == row.r && s.p == row.p && s.q == row.q;
        });
        if (it == series.end()) {
            series.push_back({row.kind, row.r, row.p, row.q, {}, 0});
            it = series.end() - 1;
        }
        if (row.flagged() || !(row.lhs > 0.0) || !std::isfinite(row.lhs))
            ++it->excluded;
        else
            it->points.emplace_back(row.n, row.lhs);
    }
    std::vector<ResultRow> out;
    for (const Series& s : series) {
        std::vector<std::pair<double, double>> pts = s.points;
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.first == b.first; }), pts.end());
        if (pts.size() < 2) continue;
        const ExponentFit fit = exponent_fit(pts);
        ResultRow row = make_row(s.kind + "-fit", static_cast<int>(pts.size()), s.r, s.p, s.q, fit.slope,
                                 expected_slope(s.kind, s.p, s.q), 0);
        row.slope = fit.slope;
        row.residual = fit.residual;
        row.flag = "excluded=" + std::to_string(s.excluded);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<ResultRow> run_sharpness(const ExperimentGrid& grid, SharpnessKind kind) {
    grid.validate();
    const std::vector<Cell> cells = sharpness_cells(grid, kind);
    const QuadratureConfig cfg = grid.quadrature();
    const std::string name = to_string(kind);
    std::vector<ResultRow> rows = parallel_map<ResultRow>(cells.size(), grid.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        return guarded(grid, make_row(name, c.n, c.r, c.p, c.q, 0, 0, 0), [&] {
            SharpnessResult res;
            switch (kind) {
                case SharpnessKind::Bep: res = sharpness_bep(c.n, c.r, c.p, cfg); break;
                case SharpnessKind::Bernstein: res = sharpness_bernstein(c.n, c.r, c.p, c.q, cfg); break;
                case SharpnessKind::Nikolskii: res = sharpness_nikolskii(c.n, c.r, c.p, c.q, cfg); break;
                case SharpnessKind::Dirichlet: {
                    const RationalFunction d = dirichlet(c.n);
                    const QuadratureResult norm = lp_norm([&](cplx z) { return d(z); }, c.q, cfg.adapted_to(d));
                    res.value = norm.checked();
                    res.upper = std::pow(static_cast<double>(c.n), 1.0 - c.q.reciprocal());
                    res.nodes = norm.nodes;
                    break;
                }
            }
            return make_row(name, c.n, c.r, c.p, c.q, res.value, res.upper, res.nodes);
        });
    });
    const std::vector<ResultRow> fits = fit_series(rows);
    rows.insert(rows.end(), fits.begin(), fits.end());
    return rows;
}

std::vector<ResultRow> run_best_constant(const ExperimentGrid& grid, BestConstantMethod method) {
    grid.validate();
    std::vector<Cell> cells;
    if (method == BestConstantMethod::Gram) {
        for (Exponent e : grid.p_values)
            if (e != Exponent(2.0)) throw MethodMismatch("gram method needs p = 2, got p = " + e.to_string());
        for (Exponent e : grid.q_values)
            if (e != Exponent(2.0)) throw MethodMismatch("gram method needs q = 2, got q = " + e.to_string());
        for (double r : grid.r_values)
            for (int n : grid.n_values) cells.push_back({n, r, 2.0, 2.0});
    } else {
        for (double r : grid.r_values)
            for (Exponent p : grid.p_values)
                for (Exponent q : grid.q_values)
                    for (int n : grid.n_values) cells.push_back({n, r, p, q});
    }
    const QuadratureConfig cfg = grid.quadrature();
    const std::string name = to_string(method);
    std::vector<ResultRow> rows = parallel_map<ResultRow>(cells.size(), grid.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        return guarded(grid, make_row(name, c.n, c.r, c.p, c.q, 0, 0, 0), [&] {
            const ConstantEstimate e =
                method == BestConstantMethod::Gram
                    ? gram_best_constant_L2(SubspaceBasis(PoleSet::single(-1.0 / c.r, c.n)), cfg)
                    : search_best_constant(c.n, c.r, c.p, c.q, grid.budget, grid.seed ^ i, cfg);
            return make_row(name, c.n, c.r, c.p, c.q, e.lower_bound, bernstein_upper(c.n, c.r, c.p, c.q), e.nodes);
        });
    });
    const std::vector<ResultRow> fits = fit_series(rows);
    rows.insert(rows.end(), fits.begin(), fits.end());
    return rows;
}

std::vector<ResultRow> run_table(const ExperimentGrid& grid) {
    grid.validate();
    std::vector<std::pair<int, double>> cells;
    for (double r : grid.r_values)
        for (int n : grid.n_values) cells.emplace_back(n, r);
    const QuadratureConfig cfg = grid.quadrature();
    const auto blocks = parallel_map<std::vector<ResultRow>>(cells.size(), grid.jobs, [&](std::size_t i) {
        const auto [n, r] = cells[i];
        Rng rng(grid.seed ^ i);
        std::vector<ResultRow> out;
        const RationalFunction f = random_in_class(rng, n, r);
        NormOracle oracle(f, cfg.adapted_to(f));
        InequalityParams base;
        base.xi = random_circle_point(rng);
        const double start = kTwoPi * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const double length = std::uniform_real_distribution<double>(0.05, kTwoPi)(rng);
        base.arc = Arc(start, start + length);
        auto add = [&](InequalityKind kind, Exponent p, Exponent q) {
            InequalityParams params = base;
            params.p = p;
            params.q = q;
            const std::string name(to_string(kind));
            out.push_back(guarded(grid, make_row(name, n, r, p, q, 0, 0, 0), [&] {
                const BoundReport rep = check_inequality(kind, oracle, params);
                ResultRow row = make_row(name, n, r, rep.p, rep.q, rep.lhs, rep.rhs, rep.nodes);
                if (!rep.holds) row.flag = "violated";
                return row;
            }));
        };
        const Exponent inf = Exponent::infinity();
        for (InequalityKind kind : all_inequality_kinds()) {
            switch (kind) {
                case InequalityKind::LevinRusak:
                case InequalityKind::BorweinErdelyi:
                    add(kind, inf, inf);
                    break;
                case InequalityKind::Spijker:
                case InequalityKind::Dolzhenko:
                    add(kind, inf, 1.0);
                    break;
                case InequalityKind::Bep:
                case InequalityKind::GenSpijker:
                    for (Exponent p : grid.p_values) add(kind, p, kind == InequalityKind::Bep ? inf : Exponent(1.0));
                    break;
                case InequalityKind::Bernstein:
                    for (Exponent p : grid.p_values)
                        for (Exponent q : grid.q_values) add(kind, p, q);
                    break;
                case InequalityKind::Nikolskii:
                    for (Exponent p : grid.p_values)
                        for (Exponent q : grid.q_values)
                            if (p < q) add(kind, p, q);
                    break;
            }
        }
        return out;
    });
    std::vector<ResultRow> rows;
    for (const auto& b : blocks) rows.insert(rows.end(), b.begin(), b.end());
    return rows;
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed(); });
}

VerifyReport run_verify(const ExperimentGrid& grid) {
    grid.validate();
    const QuadratureConfig cfg = grid.quadrature();
    const double tight = std::max(1e-7, 10.0 * grid.rel_tol);
    const int count = grid.verify_functions;
    std::uniform_int_distribution<int> degree(1, 8);
    VerifyReport report;

    auto suite = [&](std::string name, double threshold, const std::function<void(Rng&, VerifyCheck&)>& body) {
        VerifyCheck check{std::move(name), 0.0, threshold, 0};
        Rng rng(grid.seed ^ std::hash<std::string>{}(check.name));
        body(rng, check);
        report.checks.push_back(check);
    };
    auto note = [](VerifyCheck& c, double err) {
        c.max_error = std::max(c.max_error, std::isnan(err) ? std::numeric_limits<double>::infinity() : err);
        ++c.cases;
    };

    VerifyCheck derivative{"representation-derivative", 0.0, tight, 0};
    suite("representation-value", tight, [&](Rng& rng, VerifyCheck& c) {
        for (int k = 0; k < count; ++k) {
            const PartialFraction f = random_partial_fraction(rng, degree(rng), 0.2);
            for (int j = 0; j < 4; ++j) {
                const CirclePoint xi = random_circle_point(rng);
                const cplx v = represent_value(f, xi, cfg).checked();
                const cplx d = represent_derivative(f, xi, cfg).checked();
                note(c, std::abs(v - f(xi.value())) / (1.0 + std::abs(f(xi.value()))));
                note(derivative, std::abs(d - f.derivative(xi.value())) / (1.0 + std::abs(f.derivative(xi.value()))));
            }
        }
    });
    report.checks.push_back(derivative);

    suite("kernel-norm", tight, [&](Rng& rng, VerifyCheck& c) {
        std::uniform_int_distribution<int> d(1, 12);
        for (int k = 0; k < count; ++k) {
            const BlaschkeProduct b = random_blaschke(rng, d(rng), 0.9);
            const CirclePoint xi = random_circle_point(rng);
            const ReproducingKernel kern(b, xi.value());
            QuadratureConfig kc = QuadratureConfig::for_degree(b.degree(), 0.1, grid.rel_tol);
            kc.max_nodes = std::max(kc.max_nodes, grid.max_nodes);
            const double sq = std::pow(lp_norm([&](cplx z) { return kern(z); }, 2.0, kc).checked(), 2);
            const double expected = b.derivative_modulus(xi);
            note(c, std::abs(sq - expected) / expected);
        }
    });

    suite("blaschke-derivative-l1", tight, [&](Rng& rng, VerifyCheck& c) {
        std::uniform_int_distribution<int> d(1, 12);
        for (int k = 0; k < count; ++k) {
            const BlaschkeProduct b = random_blaschke(rng, d(rng), 0.9);
            QuadratureConfig kc = QuadratureConfig::for_degree(b.degree(), 0.1, grid.rel_tol);
            kc.max_nodes = std::max(kc.max_nodes, grid.max_nodes);
            const double l1 = lp_norm([&](cplx z) { return b.derivative(z); }, 1.0, kc).checked();
            note(c, std::abs(l1 - b.degree()) / b.degree());
        }
    });

    suite("spijker-equality", tight, [&](Rng&, VerifyCheck& c) {
        for (int n : {1, 8, 32}) {
            std::vector<cplx> coeffs(static_cast<std::size_t>(n + 1), 0.0);
            coeffs.back() = 1.0;
            const RationalFunction g = reflect(RationalFunction::polynomial(coeffs));
            const BoundReport rep = spijker_check(g, cfg.adapted_to(g));
            note(c, std::abs(rep.lhs / (rep.rhs / n) - n) / n);
        }
    });

    suite("nikolskii-family", tight, [&](Rng&, VerifyCheck& c) {
        for (int n : {8, 32}) {
            for (double r : {0.5, 0.9}) {
                const RationalFunction f = nikolskii_family(n, r);
                const double l2 = lp_norm([&](cplx z) { return f(z); }, 2.0, cfg.adapted_to(f)).checked();
                note(c, std::abs(l2 * l2 - n / (1 - r * r)) / (n / (1 - r * r)));
                note(c, std::abs(f(-1.0) - n / (1 - r)) / (n / (1 - r)));
            }
        }
    });

    suite("dirichlet-parseval", tight, [&](Rng&, VerifyCheck& c) {
        for (int n : {1, 16, 100, 256}) {
            const double v = dirichlet_limit(2.0, {n}, cfg).front();
            note(c, std::abs(v * v - 1.0));
        }
    });

    suite("inequalities-hold", 0.0, [&](Rng& rng, VerifyCheck& c) {
        std::uniform_int_distribution<int> d(1, 10);
        const std::vector<Exponent> exps{1.0, 2.0, Exponent::infinity()};
        for (int k = 0; k < count; ++k) {
            const RationalFunction f = random_rational(rng, d(rng), 0.1);
            NormOracle oracle(f, cfg.adapted_to(f));
            InequalityParams params;
            params.xi = random_circle_point(rng);
            const double start = kTwoPi * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            params.arc = Arc(start, start + std::uniform_real_distribution<double>(0.05, kTwoPi)(rng));
            auto check = [&](InequalityKind kind, Exponent p, Exponent q) {
                params.p = p;
                params.q = q;
                const BoundReport rep = check_inequality(kind, oracle, params);
                note(c, std::max(0.0, rep.ratio - (1.0 + rep.slack)));
            };
            for (InequalityKind kind : all_inequality_kinds())
                for (Exponent p : exps)
                    for (Exponent q : exps) {
                        const bool uses_p = kind == InequalityKind::Bep || kind == InequalityKind::GenSpijker;
                        const bool uses_pq = kind == InequalityKind::Bernstein || kind == InequalityKind::Nikolskii;
                        if (kind == InequalityKind::Nikolskii && !(p < q)) continue;
                        if (!uses_pq && q != exps.front()) continue;
                        if (!uses_p && !uses_pq && p != exps.front()) continue;
                        check(kind, p, q);
                    }
        }
    });
    return report;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows, const OutputMeta& meta) {
    out << "# generated " << meta.generated << "\n";
    out << "# command=" << meta.command << " seed=" << meta.seed << " rel_tol=" << format_double(meta.rel_tol)
        << " version=" << version() << "\n";
    out << "kind,n,r,p,q,lhs,rhs,ratio,slope,residual,nodes,ms,flag\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    for (const ResultRow& row : rows) {
        out << row.kind << ',' << row.n << ',' << format_double(row.r) << ',' << row.p.to_string() << ','
            << row.q.to_string() << ',' << format_double(row.lhs) << ',' << format_double(row.rhs) << ','
            << format_double(row.ratio) << ',' << opt(row.slope) << ',' << opt(row.residual) << ',' << row.nodes
            << ',' << opt(row.ms) << ',' << clean_flag(row.flag) << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<ResultRow>& rows, const OutputMeta& meta) {
    nlohmann::ordered_json doc;
    doc["metadata"] = {{"command", meta.command},
                       {"seed", meta.seed},
                       {"rel_tol", meta.rel_tol},
                       {"version", version()},
                       {"generated", meta.generated}};
    doc["rows"] = nlohmann::ordered_json::array();
    auto num = [](double v) -> nlohmann::ordered_json {
        if (std::isfinite(v)) return v;
        return format_double(v);
    };
    for (const ResultRow& row : rows) {
        nlohmann::ordered_json j;
        j["kind"] = row.kind;
        j["n"] = row.n;
        j["r"] = row.r;
        j["p"] = row.p.to_string();
        j["q"] = row.q.to_string();
        j["lhs"] = num(row.lhs);
        j["rhs"] = num(row.rhs);
        j["ratio"] = num(row.ratio);
        j["slope"] = row.slope ? num(*row.slope) : nullptr;
        j["residual"] = row.residual ? num(*row.residual) : nullptr;
        j["nodes"] = row.nodes;
        j["ms"] = row.ms ? nlohmann::ordered_json(*row.ms) : nullptr;
        j["flag"] = row.flag;
        doc["rows"].push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
}

void write_report(std::ostream& out, const VerifyReport& report) {
    char line[160];
    for (const VerifyCheck& c : report.checks) {
        std::snprintf(line, sizeof line, "%-28s %-4s cases=%-5d max_error=%-12.3e threshold=%.3e\n", c.name.c_str(),
                      c.passed() ? "ok" : "FAIL", c.cases, c.max_error, c.threshold);
        out << line;
    }
    out << (report.passed() ? "all checks passed\n" : "some checks FAILED\n");
}

std::vector<ResultRow> read_csv(std::istream& in) {
    std::vector<ResultRow> rows;
    std::string line;
    bool header = false;
    auto number = [](const std::string& s) { return s == "inf" ? HUGE_VAL : s == "-inf" ? -HUGE_VAL : std::stod(s); };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) f.push_back(item);
        if (f.size() == 12) f.emplace_back();
        if (f.size() != 13) throw ConfigError("malformed CSV row: " + line);
        ResultRow row;
        row.kind = f[0];
        row.n = std::stoi(f[1]);
        row.r = number(f[2]);
        row.p = Exponent::parse(f[3]);
        row.q = Exponent::parse(f[4]);
        row.lhs = number(f[5]);
        row.rhs = number(f[6]);
        row.ratio = number(f[7]);
        if (!f[8].empty()) row.slope = number(f[8]);
        if (!f[9].empty()) row.residual = number(f[9]);
        row.nodes = std::stol(f[10]);
        if (!f[11].empty()) row.ms = number(f[11]);
        row.flag = f[12];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string version() { return "0.1.0"; }

}  // namespace ratlab
