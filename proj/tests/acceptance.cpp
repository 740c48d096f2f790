// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "ratlab/blaschke.hpp"
#include "ratlab/bounds.hpp"
#include "ratlab/extremal.hpp"
#include "ratlab/kernels.hpp"
#include "ratlab/random.hpp"
#include "ratlab/runner.hpp"
#include "ratlab/test_functions.hpp"

using namespace ratlab;

namespace {

int failures = 0;

void criterion(const char* id, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s  %s (%.1f s)\n", id, ok ? "PASS" : "FAIL", detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
    return exponent_fit(pts).slope;
}

}  // namespace

int main() {
    const QuadratureConfig cfg{};

    criterion("AC1", [&](std::string& d) {
        Rng rng(101);
        std::uniform_int_distribution<int> deg(1, 8);
        double ev = 0, ed = 0;
        for (int k = 0; k < 100; ++k) {
            const PartialFraction f = random_partial_fraction(rng, deg(rng), 0.2);
            for (int j = 0; j < 16; ++j) {
                const CirclePoint xi = random_circle_point(rng);
                ev = std::max(ev, std::abs(represent_value(f, xi, cfg).checked() - f(xi.value())));
                ed = std::max(ed, std::abs(represent_derivative(f, xi, cfg).checked() - f.derivative(xi.value())));
            }
        }
        d = fmt("representation identities over 1600 cases: max |<f,phi>-f| = %.2e, max |<f,psi>-f'| = %.2e", ev, ed);
        return ev < 1e-7 && ed < 1e-7;
    });

    criterion("AC2", [&](std::string& d) {
        Rng rng(202);
        std::uniform_int_distribution<int> deg(1, 12);
        double ek = 0, eb = 0;
        for (int k = 0; k < 32; ++k) {
            const BlaschkeProduct b = random_blaschke(rng, deg(rng), 0.9);
            const CirclePoint xi = random_circle_point(rng);
            const ReproducingKernel kern(b, xi.value());
            const QuadratureConfig kc = QuadratureConfig::for_degree(b.degree(), 0.1);
            const double sq = std::pow(lp_norm([&](cplx z) { return kern(z); }, 2.0, kc).checked(), 2);
            ek = std::max(ek, std::abs(sq - b.derivative_modulus(xi)));
            eb = std::max(eb, std::abs(lp_norm([&](cplx z) { return b.derivative(z); }, 1.0, kc).checked() - b.degree()));
        }
        d = fmt("32 Blaschke products: max | ||k||^2 - |B'| | = %.2e, max | ||B'||_1 - d | = %.2e", ek, eb);
        return ek < 1e-8 && eb < 1e-8;
    });

    criterion("AC3", [&](std::string& d) {
        double worst = 0;
        for (int n : {1, 8, 32}) {
            std::vector<cplx> c(static_cast<std::size_t>(n + 1), 0.0);
            c.back() = 1.0;
            const RationalFunction g = reflect(RationalFunction::polynomial(c));
            const BoundReport rep = spijker_check(g, cfg.adapted_to(g));
            worst = std::max(worst, std::abs(rep.lhs / (rep.rhs / n) - n));
        }
        d = fmt("reflected z^n, n in {1,8,32}: max | ||f'||_1/||f||_inf - n | = %.2e", worst);
        return worst < 1e-6;
    });

    criterion("AC4", [&](std::string& d) {
        Rng rng(404);
        std::uniform_int_distribution<int> deg(1, 10);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const std::vector<Exponent> e{1.0, 2.0, Exponent::infinity()};
        int checks = 0, violations = 0;
        double worst = 0;
        for (int k = 0; k < 500; ++k) {
            const RationalFunction f = random_rational(rng, deg(rng), 0.1, k % 2 == 1);
            NormOracle oracle(f, cfg.adapted_to(f));
            InequalityParams params;
            params.xi = random_circle_point(rng);
            auto run = [&](InequalityKind kind, Exponent p, Exponent q) {
                params.p = p;
                params.q = q;
                const BoundReport rep = check_inequality(kind, oracle, params);
                ++checks;
                worst = std::max(worst, rep.ratio);
                if (!rep.holds) ++violations;
            };
            run(InequalityKind::LevinRusak, e[2], e[2]);
            run(InequalityKind::BorweinErdelyi, e[2], e[2]);
            for (Exponent p : e) {
                run(InequalityKind::Bep, p, e[2]);
                run(InequalityKind::GenSpijker, p, 1.0);
                for (Exponent q : e) {
                    run(InequalityKind::Bernstein, p, q);
                    if (p < q) run(InequalityKind::Nikolskii, p, q);
                }
            }
            for (int a = 0; a < 8; ++a) {
                const double start = kTwoPi * u(rng);
                params.arc = Arc(start, start + 0.05 + (kTwoPi - 0.05) * u(rng));
                run(InequalityKind::Dolzhenko, e[2], 1.0);
            }
        }
        d = "500 random functions, " + std::to_string(checks) + " checks: " + std::to_string(violations) +
            " violations" + fmt(", largest lhs/rhs = %.6f", worst);
        return violations == 0;
    });

    criterion("AC5", [&](std::string& d) {
        double worst = 0;
        for (int n : {8, 32})
            for (double r : {0.5, 0.9}) {
                const RationalFunction f = nikolskii_family(n, r);
                const double l2 = lp_norm([&](cplx z) { return f(z); }, 2.0, cfg.adapted_to(f)).checked();
                worst = std::max(worst, std::abs(l2 * l2 - n / (1 - r * r)));
                worst = std::max(worst, std::abs(f(-1.0) - n / (1 - r)));
            }
        d = fmt("nikolskii_family: max error in ||f||_2^2 and f(-1) = %.2e", worst);
        return worst < 1e-8;
    });

    criterion("AC6", [&](std::string& d) {
        QuadratureConfig c;
        c.rel_tol = 1e-8;
        const std::vector<double> ns{8, 16, 32, 64};
        const std::vector<double> rs{0.5, 0.75, 0.875, 0.9375};
        const Exponent inf = Exponent::infinity();
        std::ostringstream out;
        bool ok = true;
        auto judge = [&](const char* label, Exponent p, Exponent q, double slope, double expected) {
            ok = ok && std::abs(slope - expected) <= 0.15;
            out << label << "(" << p.to_string() << "," << q.to_string() << ")=" << fmt("%.3f/%.2f ", slope, expected);
        };
        for (auto [p, q] : {std::pair<Exponent, Exponent>{1.0, 2.0}, {2.0, inf}, {1.0, inf}}) {
            std::vector<double> v;
            for (double n : ns) v.push_back(sharpness_nikolskii(static_cast<int>(n), 0.5, p, q, c).value);
            judge("nik", p, q, fit_slope(ns, v), p.reciprocal() - q.reciprocal());
        }
        for (auto [p, q] : {std::pair<Exponent, Exponent>{2.0, 2.0}, {1.0, 2.0}, {2.0, inf}}) {
            std::vector<double> v;
            for (double n : ns) v.push_back(sharpness_bernstein(static_cast<int>(n), 0.5, p, q, c).value);
            judge("bern_n", p, q, fit_slope(ns, v), 1 + p.reciprocal() - q.reciprocal());
        }
        for (auto [p, q] : {std::pair<Exponent, Exponent>{inf, 1.0}, {2.0, 1.0}, {inf, 2.0}}) {
            std::vector<double> xs, v;
            for (double r : rs) {
                xs.push_back(1 / (1 - r));
                v.push_back(sharpness_bernstein(16, r, p, q, c).value);
            }
            judge("bern_r", p, q, fit_slope(xs, v), 1 + p.reciprocal() - q.reciprocal());
        }
        d = "slopes measured/expected: " + out.str();
        return ok;
    });

    criterion("AC7", [&](std::string& d) {
        const double r = 0.5;
        bool ok = true;
        double previous = 0;
        std::ostringstream out;
        for (int n : {8, 16, 32}) {
            const double est = gram_best_constant_L2(SubspaceBasis(PoleSet::single(-1.0 / r, n)), cfg).lower_bound;
            const double top = n * (1 + r) / (1 - r);
            ok = ok && est >= 0.5 * top && est <= top * (1 + 1e-6) && est / n >= previous;
            previous = est / n;
            out << fmt("n=%.0f: %.4f (upper %.0f) ", n, est, top);
        }
        d = "gram L2 constants " + out.str();
        return ok;
    });

    criterion("AC8", [&](std::string& d) {
        // (1/pi) int_R (sin x/x)^4 dx: Simpson on [0, 2000] plus the averaged tail.
        const double upper = 2000.0;
        const int pieces = 4000000;
        const double h = upper / pieces;
        auto f = [](double x) { return x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, 4); };
        double s = f(0.0) + f(upper);
        for (int k = 1; k < pieces; ++k) s += (k % 2 ? 4.0 : 2.0) * f(k * h);
        const double limit = std::pow(2.0 * (s * h / 3.0 + 0.375 / (3.0 * upper * upper * upper)) / std::numbers::pi, 0.25);
        const double v = dirichlet_limit(4.0, {256}, cfg).front();
        double parseval = 0;
        for (int n = 1; n <= 256; ++n) {
            const RationalFunction dn = dirichlet(n);
            const double l2 = lp_norm([&](cplx z) { return dn(z); }, 2.0, cfg.adapted_to(dn)).checked();
            parseval = std::max(parseval, std::abs(l2 * l2 - n));
        }
        d = fmt("||D_256||_4/256^(3/4) = %.5f vs limit %.5f; max | ||D_n||_2^2 - n | over n <= 256 = %.2e", v, limit,
                parseval);
        return std::abs(v - limit) <= 0.05 * limit && parseval < 1e-10;
    });

    criterion("AC9", [&](std::string& d) {
        const ExperimentGrid grid = make_grid({}, {{"n", "8,16,32"}, {"r", "0.5,0.8"}, {"seed", "9"}});
        ExperimentGrid serial = grid;
        serial.jobs = 1;
        auto csv = [](const ExperimentGrid& g, const char* stamp, SharpnessKind kind) {
            std::ostringstream out;
            write_csv(out, run_sharpness(g, kind), {"sharpness", g.seed, g.rel_tol, stamp});
            const std::string s = out.str();
            return s.substr(s.find('\n') + 1);
        };
        bool ok = true;
        for (SharpnessKind kind : {SharpnessKind::Bep, SharpnessKind::Bernstein, SharpnessKind::Nikolskii,
                                   SharpnessKind::Dirichlet}) {
            ok = ok && csv(grid, "first", kind) == csv(grid, "second", kind) && csv(grid, "x", kind) == csv(serial, "y", kind);
        }
        d = "sharpness CSV identical across repeated and serial/parallel runs (timestamp line excluded)";
        return ok;
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
