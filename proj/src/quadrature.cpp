#include "ratlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ratlab/errors.hpp"
#include "ratlab/rational.hpp"

namespace ratlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kRombergColumns = 6;

class Neumaier {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

class ComplexNeumaier {
public:
    void add(cplx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    Neumaier re_;
    Neumaier im_;
};

long next_pow2(double x) {
    long n = 1;
    while (static_cast<double>(n) < x && n < (1L << 40)) n <<= 1;
    return n;
}

cplx node(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Periodic trapezoid for the mean of `integrand` over [0, 2 pi). Doubling
// reuses every earlier node.
template <class Integrand>
ComplexQuadratureResult periodic_mean(Integrand integrand, const QuadratureConfig& cfg) {
    cfg.validate();
    ComplexNeumaier sum;
    Neumaier abs_sum;
    long n = cfg.base_nodes;
    for (long k = 0; k < n; ++k) {
        const cplx v = integrand(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
        sum.add(v);
        abs_sum.add(std::abs(v));
    }
    cplx estimate = sum.value() / static_cast<double>(n);
    while (2 * n <= cfg.max_nodes) {
        const long fine = 2 * n;
        for (long k = 1; k < fine; k += 2) {
            const cplx v = integrand(kTwoPi * static_cast<double>(k) / static_cast<double>(fine));
            sum.add(v);
            abs_sum.add(std::abs(v));
        }
        n = fine;
        const cplx next = sum.value() / static_cast<double>(n);
        const double floor = 64.0 * kEps * abs_sum.value() / static_cast<double>(n);
        if (std::abs(next - estimate) <= cfg.rel_tol * std::abs(next) + floor) return {next, true, n};
        estimate = next;
    }
    return {estimate, false, n};
}

// Grid maximum over nodes start + k L/N (k < N when periodic, k <= N
// otherwise), refined by a parabola through the best node and its two
// neighbours.
QuadratureResult grid_sup(const CircleFunction& f, double start, double length, bool periodic,
                          const QuadratureConfig& cfg) {
    cfg.validate();
    auto modulus = [&](double t) { return std::abs(f(node(t))); };
    long n = periodic ? cfg.base_nodes : std::max<long>(64, next_pow2(cfg.base_nodes * length / kTwoPi));
    double best = -1.0;
    long best_k = 0;
    auto scan = [&](long count, long first, long step) {
        for (long k = first; k <= count - (periodic ? 1 : 0); k += step) {
            const double v = modulus(start + length * static_cast<double>(k) / static_cast<double>(count));
            if (v > best) {
                best = v;
                best_k = k;
            }
        }
    };
    auto refine = [&](long count) {
        const double h = length / static_cast<double>(count);
        const double t0 = start + h * static_cast<double>(best_k);
        if (!periodic && (best_k == 0 || best_k == count)) return best;
        const double ym = modulus(t0 - h);
        const double yp = modulus(t0 + h);
        const double curvature = ym - 2.0 * best + yp;
        if (!(curvature < 0.0)) return best;
        const double offset = std::clamp(0.5 * h * (ym - yp) / curvature, -h, h);
        return std::max(best, modulus(t0 + offset));
    };
    scan(n, 0, 1);
    double estimate = refine(n);
    while (2 * n <= cfg.max_nodes) {
        best_k *= 2;
        n *= 2;
        scan(n, 1, 2);
        const double next = refine(n);
        if (std::abs(next - estimate) <= cfg.rel_tol * std::abs(next) + 64.0 * kEps * next) return {next, true, n};
        estimate = next;
    }
    return {estimate, false, n};
}

}  // namespace

QuadratureConfig QuadratureConfig::for_degree(int degree, double pole_margin, double rel_tol) {
    QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.pole_margin = pole_margin;
    double want = 4096.0;
    if (std::isfinite(pole_margin) && pole_margin > 0.0) want = std::max(want, 64.0 * degree / pole_margin);
    cfg.base_nodes = std::max<long>(4096, next_pow2(want));
    cfg.max_nodes = std::max(cfg.max_nodes, 4 * cfg.base_nodes);
    return cfg;
}

QuadratureConfig QuadratureConfig::for_function(const RationalFunction& f, double rel_tol) {
    return for_degree(std::max(1, f.degree()), f.poles().margin(), rel_tol);
}

QuadratureConfig QuadratureConfig::adapted_to(const RationalFunction& f) const {
    const QuadratureConfig need = for_function(f, rel_tol);
    QuadratureConfig out = *this;
    out.pole_margin = std::min(pole_margin, need.pole_margin);
    out.base_nodes = std::max(base_nodes, need.base_nodes);
    out.max_nodes = std::max(max_nodes, 4 * out.base_nodes);
    return out;
}

void QuadratureConfig::validate() const {
    if (base_nodes < 64) throw DomainError("quadrature base_nodes must be at least 64");
    if (max_nodes < base_nodes) throw DomainError("quadrature max_nodes must be at least base_nodes");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) throw DomainError("quadrature rel_tol must lie in (0, 1e-2]");
}

double QuadratureResult::checked() const {
    if (!converged) {
        std::ostringstream msg;
        msg << "quadrature did not converge with " << nodes << " nodes (best estimate " << value << ")";
        throw NoConvergence(msg.str());
    }
    return value;
}

cplx ComplexQuadratureResult::checked() const {
    if (!converged) {
        std::ostringstream msg;
        msg << "quadrature did not converge with " << nodes << " nodes";
        throw NoConvergence(msg.str());
    }
    return value;
}

Arc::Arc(double theta_start, double theta_end) : start_(theta_start), end_(theta_end) {
    const double len = theta_end - theta_start;
    if (!(len > 0.0 && len <= kTwoPi * (1.0 + 1e-15)))
        throw DomainError("arc must satisfy 0 < theta_end - theta_start <= 2 pi");
}

QuadratureResult lp_norm(const CircleFunction& f, Exponent p, const QuadratureConfig& cfg) {
    if (p.is_infinite()) return grid_sup(f, 0.0, kTwoPi, true, cfg);
    const double e = p.value();
    const auto mean = periodic_mean(
        [&](double t) {
            const double m = std::abs(f(node(t)));
            return cplx(e == 2.0 ? m * m : std::pow(m, e));
        },
        cfg);
    return {std::pow(mean.value.real(), 1.0 / e), mean.converged, mean.nodes};
}

ComplexQuadratureResult inner_product(const CircleFunction& f, const CircleFunction& g,
                                      const QuadratureConfig& cfg) {
    return periodic_mean(
        [&](double t) {
            const cplx z = node(t);
            return f(z) * std::conj(g(z));
        },
        cfg);
}

ComplexQuadratureResult circle_integral(const CircleFunction& f, const QuadratureConfig& cfg) {
    return periodic_mean([&](double t) { return f(node(t)); }, cfg);
}

QuadratureResult arc_integral(const std::function<double(double)>& g, const Arc& arc, const QuadratureConfig& cfg) {
    cfg.validate();
    const double a = arc.theta_start();
    const double len = arc.length();
    long n = std::max<long>(64, next_pow2(static_cast<double>(cfg.base_nodes) * arc.measure()));
    Neumaier interior;
    for (long k = 1; k < n; ++k) interior.add(g(a + len * static_cast<double>(k) / static_cast<double>(n)));
    const double ends = 0.5 * (g(a) + g(a + len));
    auto trapezoid = [&](long count) { return (ends + interior.value()) * len / static_cast<double>(count) / kTwoPi; };

    std::vector<double> previous{trapezoid(n)};
    double estimate = previous.back();
    while (2 * n <= cfg.max_nodes) {
        const long fine = 2 * n;
        for (long k = 1; k < fine; k += 2) interior.add(g(a + len * static_cast<double>(k) / static_cast<double>(fine)));
        n = fine;
        std::vector<double> row{trapezoid(n)};
        for (std::size_t j = 1; j <= previous.size() && j < kRombergColumns; ++j) {
            const double factor = std::pow(4.0, static_cast<double>(j)) - 1.0;
            row.push_back(row[j - 1] + (row[j - 1] - previous[j - 1]) / factor);
        }
        const double next = row.back();
        if (std::abs(next - estimate) <= cfg.rel_tol * std::abs(next) + 64.0 * kEps * std::abs(row.front()))
            return {next, true, n};
        estimate = next;
        previous = std::move(row);
    }
    return {estimate, false, n};
}

QuadratureResult arc_lp_integral(const CircleFunction& f, const Arc& arc, Exponent p, const QuadratureConfig& cfg) {
    if (p.is_infinite()) throw DomainError("arc_lp_integral needs a finite exponent");
    const double e = p.value();
    return arc_integral(
        [&](double t) {
            const double m = std::abs(f(node(t)));
            return e == 2.0 ? m * m : std::pow(m, e);
        },
        arc, cfg);
}

QuadratureResult sup_on_arc(const CircleFunction& f, const Arc& arc, const QuadratureConfig& cfg) {
    const bool whole = arc.length() >= kTwoPi;
    return grid_sup(f, arc.theta_start(), arc.length(), whole, cfg);
}

VectorQuadratureResult circle_integral_vector(const std::function<void(double, cplx*)>& fill, std::size_t size,
                                              const QuadratureConfig& cfg) {
    cfg.validate();
    std::vector<ComplexNeumaier> sums(size);
    std::vector<Neumaier> abs_sums(size);
    std::vector<cplx> buffer(size);
    auto add = [&](double t) {
        fill(t, buffer.data());
        for (std::size_t i = 0; i < size; ++i) {
            sums[i].add(buffer[i]);
            abs_sums[i].add(std::abs(buffer[i]));
        }
    };
    auto means = [&](long count) {
        std::vector<cplx> out(size);
        for (std::size_t i = 0; i < size; ++i) out[i] = sums[i].value() / static_cast<double>(count);
        return out;
    };
    long n = cfg.base_nodes;
    for (long k = 0; k < n; ++k) add(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    std::vector<cplx> estimate = means(n);
    while (2 * n <= cfg.max_nodes) {
        const long fine = 2 * n;
        for (long k = 1; k < fine; k += 2) add(kTwoPi * static_cast<double>(k) / static_cast<double>(fine));
        n = fine;
        std::vector<cplx> next = means(n);
        double change = 0.0, scale = 0.0, floor = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            change = std::max(change, std::abs(next[i] - estimate[i]));
            scale = std::max(scale, std::abs(next[i]));
            floor = std::max(floor, abs_sums[i].value() / static_cast<double>(n));
        }
        if (change <= cfg.rel_tol * scale + 64.0 * kEps * floor) return {std::move(next), true, n};
        estimate = std::move(next);
    }
    return {std::move(estimate), false, n};
}

}  // namespace ratlab
