#include "ratlab/extremal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ratlab/blaschke.hpp"
#include "ratlab/bounds.hpp"
#include "ratlab/errors.hpp"
#include "ratlab/random.hpp"
#include "ratlab/test_functions.hpp"

namespace ratlab {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

QuadratureConfig adapted_to_poles(const QuadratureConfig& cfg, const PoleSet& poles) {
    const QuadratureConfig need = QuadratureConfig::for_degree(std::max(1, poles.degree()), poles.margin(), cfg.rel_tol);
    QuadratureConfig out = cfg;
    out.pole_margin = std::min(cfg.pole_margin, need.pole_margin);
    out.base_nodes = std::max(cfg.base_nodes, need.base_nodes);
    out.max_nodes = std::max(cfg.max_nodes, 4 * out.base_nodes);
    return out;
}

void require_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("r must lie in (0, 1)");
}

SharpnessResult ratio_of_norms(const RationalFunction& t, Exponent p, Exponent q, bool derivative, const QuadratureConfig& cfg) {
    const QuadratureConfig c = cfg.adapted_to(t);
    const QuadratureResult top = derivative ? lp_norm([&](cplx z) { return t.derivative(z); }, q, c)
                                            : lp_norm([&](cplx z) { return t(z); }, q, c);
    const QuadratureResult bottom = lp_norm([&](cplx z) { return t(z); }, p, c);
    SharpnessResult out;
    out.value = top.checked() / bottom.checked();
    out.nodes = std::max(top.nodes, bottom.nodes);
    return out;
}

}  // namespace

SubspaceBasis::SubspaceBasis(PoleSet poles, BasisKind kind, std::vector<double> scales)
    : poles_(std::move(poles)), kind_(kind) {
    const PoleSplit split = split_poles(poles_);
    inside_ = split.inside;
    outside_ = split.outside;
    if (kind_ == BasisKind::PartialFraction && !poles_.distinct())
        throw DomainError("partial-fraction basis needs distinct poles");
    if (scales.empty()) scales.assign(static_cast<std::size_t>(dimension()), 1.0);
    if (static_cast<int>(scales.size()) != dimension()) throw DomainError("one scale per basis function");
    for (double s : scales)
        if (!(std::isfinite(s) && s != 0.0)) throw DomainError("basis scales must be finite and nonzero");
    scales_ = std::move(scales);
}

void SubspaceBasis::evaluate(cplx z, cplx* values, cplx* derivatives) const {
    values[0] = scales_[0];
    derivatives[0] = 0.0;
    std::size_t slot = 1;
    if (kind_ == BasisKind::PartialFraction) {
        for (cplx a : inside_) {
            const cplx inv = 1.0 / (z - a);
            values[slot] = scales_[slot] * inv;
            derivatives[slot] = -scales_[slot] * inv * inv;
            ++slot;
        }
        for (cplx a : outside_) {
            const cplx inv = 1.0 / (1.0 - z / a);
            values[slot] = scales_[slot] * inv;
            derivatives[slot] = scales_[slot] * inv * inv / a;
            ++slot;
        }
        return;
    }

    // Outside chain: zeros 0, mu_1, mu_2, ... with mu = 1/conj(a).
    cplx prod = -z, dprod = -1.0;
    for (cplx a : outside_) {
        const cplx mu = 1.0 / std::conj(a);
        const double s = std::sqrt(1.0 - std::norm(mu));
        const cplx inv = 1.0 / (1.0 - std::conj(mu) * z);
        values[slot] = scales_[slot] * s * inv * prod;
        derivatives[slot] = scales_[slot] * s * (std::conj(mu) * inv * inv * prod + inv * dprod);
        ++slot;
        const cplx b = blaschke_factor(mu, z);
        dprod = dprod * b + prod * blaschke_factor_derivative(mu, z);
        prod *= b;
    }

    // Inside chain: conjugates of z times the chain for the zeros a_k, written
    // as rational functions valid off the circle as well.
    cplx rest = 1.0, drest = 0.0;
    for (cplx a : inside_) {
        const double s = std::sqrt(1.0 - std::norm(a));
        const cplx inv = 1.0 / (z - a);
        values[slot] = scales_[slot] * s * inv * rest;
        derivatives[slot] = scales_[slot] * s * (inv * drest - inv * inv * rest);
        ++slot;
        const cplx factor = (std::conj(a) * z - 1.0) * inv;
        const cplx dfactor = (1.0 - std::norm(a)) * inv * inv;
        drest = drest * factor + rest * dfactor;
        rest *= factor;
    }
}

cplx SubspaceBasis::combination(const std::vector<cplx>& coeffs, cplx z) const {
    std::vector<cplx> v(static_cast<std::size_t>(dimension())), d(v.size());
    evaluate(z, v.data(), d.data());
    return std::inner_product(coeffs.begin(), coeffs.end(), v.begin(), cplx{});
}

cplx SubspaceBasis::combination_derivative(const std::vector<cplx>& coeffs, cplx z) const {
    std::vector<cplx> v(static_cast<std::size_t>(dimension())), d(v.size());
    evaluate(z, v.data(), d.data());
    return std::inner_product(coeffs.begin(), coeffs.end(), d.begin(), cplx{});
}

double reevaluate_witness(const ConstantEstimate& e, const QuadratureConfig& cfg) {
    const SubspaceBasis basis(e.poles, e.basis_kind);
    if (static_cast<int>(e.coefficients.size()) != basis.dimension())
        throw DomainError("witness coefficients do not match the pole configuration");
    const QuadratureConfig c = adapted_to_poles(cfg, e.poles);
    const double top = lp_norm([&](cplx z) { return basis.combination_derivative(e.coefficients, z); }, e.q, c).checked();
    const double bottom = lp_norm([&](cplx z) { return basis.combination(e.coefficients, z); }, e.p, c).checked();
    if (bottom == 0.0) return 0.0;
    return top / bottom;
}

ConstantEstimate gram_best_constant_L2(const SubspaceBasis& basis, const QuadratureConfig& cfg) {
    const int dim = basis.dimension();
    ConstantEstimate out;
    out.n = basis.poles().degree();
    out.r = basis.poles().empty() ? 0.0 : basis.poles().class_radius();
    out.method = "gram";
    out.poles = basis.poles();
    out.basis_kind = basis.kind();

    const std::size_t d = static_cast<std::size_t>(dim);
    const std::size_t block = d * d;
    const QuadratureConfig c = adapted_to_poles(cfg, basis.poles());
    std::vector<cplx> v(d), dv(d);
    const VectorQuadratureResult integrals = circle_integral_vector(
        [&](double t, cplx* slots) {
            basis.evaluate(std::polar(1.0, t), v.data(), dv.data());
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = i; j < d; ++j) {
                    slots[i * d + j] = std::conj(v[i]) * v[j];
                    slots[block + i * d + j] = std::conj(dv[i]) * dv[j];
                }
            }
        },
        2 * block, c);
    if (!integrals.converged) throw NoConvergence("Gram matrix quadrature did not converge");
    out.nodes = integrals.nodes;

    Matrix g(dim, dim), h(dim, dim);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            g(i, j) = integrals.value[i * d + j];
            h(i, j) = integrals.value[block + i * d + j];
            g(j, i) = std::conj(g(i, j));
            h(j, i) = std::conj(h(i, j));
        }
    }

    const Eigen::SelfAdjointEigenSolver<Matrix> spectrum(g, Eigen::EigenvaluesOnly);
    const double lo = spectrum.eigenvalues().minCoeff();
    const double hi = spectrum.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12) throw IllConditioned("Gram matrix condition number exceeds 1e12");

    const Eigen::LLT<Matrix> chol(g);
    const auto lower = chol.matrixL();
    Matrix m = lower.solve(h);
    m = lower.solve(m.adjoint()).adjoint();
    m = 0.5 * (m + m.adjoint()).eval();

    // Plain power iteration stalls when the leading eigenvalues cluster, so
    // it starts from the dense eigenvector and only polishes it.
    const Eigen::SelfAdjointEigenSolver<Matrix> dense(m);
    Vector x = dense.eigenvectors().col(dim - 1);
    double lambda = dense.eigenvalues()(dim - 1);
    for (int it = 0; it < 10 * dim; ++it) {
        Vector y = m * x;
        const double next = std::real(x.dot(y));
        const double norm = y.norm();
        out.iterations = it + 1;
        if (norm == 0.0) {
            lambda = 0.0;
            break;
        }
        x = y / norm;
        const bool settled = std::abs(next - lambda) <= 1e-10 * std::abs(next);
        lambda = next;
        if (settled) break;
    }
    const Vector y = m * x;
    lambda = std::max(0.0, std::real(x.dot(y)));
    const Vector coeffs = chol.matrixU().solve(x);
    out.coefficients.assign(coeffs.data(), coeffs.data() + dim);
    for (std::size_t i = 0; i < d; ++i) out.coefficients[i] *= basis.scales()[i];
    out.lower_bound = std::sqrt(lambda);
    return out;
}

std::vector<PoleSet> search_configurations(int n, double r) {
    if (n < 1) throw DomainError("search needs n >= 1");
    require_radius(r);
    std::vector<PoleSet> configs;
    configs.push_back(PoleSet::single(-1.0 / r, n));
    configs.push_back(PoleSet::single(1.0 / r, n));
    const int outside = (n + 1) / 2;
    std::vector<Pole> split{{-1.0 / r, outside}};
    if (n - outside > 0) split.push_back({-r, n - outside});
    configs.emplace_back(std::move(split));
    return configs;
}

namespace {

// The ratio ||f'||_q/||f||_p on a fixed grid, with basis values cached.
class GridObjective {
public:
    GridObjective(const SubspaceBasis& basis, long nodes, Exponent p, Exponent q)
        : dim_(static_cast<std::size_t>(basis.dimension())), nodes_(static_cast<std::size_t>(nodes)), p_(p), q_(q),
          values_(dim_ * nodes_), derivs_(dim_ * nodes_) {
        for (std::size_t k = 0; k < nodes_; ++k) {
            const cplx z = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(nodes_));
            basis.evaluate(z, &values_[k * dim_], &derivs_[k * dim_]);
        }
    }

    std::size_t dimension() const { return dim_; }

    double operator()(const std::vector<cplx>& c) const {
        double top = 0.0, bottom = 0.0;
        for (std::size_t k = 0; k < nodes_; ++k) {
            cplx f{}, df{};
            const cplx* v = &values_[k * dim_];
            const cplx* d = &derivs_[k * dim_];
            for (std::size_t i = 0; i < dim_; ++i) {
                f += c[i] * v[i];
                df += c[i] * d[i];
            }
            accumulate(top, std::abs(df), q_);
            accumulate(bottom, std::abs(f), p_);
        }
        top = finish(top, q_);
        bottom = finish(bottom, p_);
        return bottom > 0.0 ? top / bottom : 0.0;
    }

    // Leading generalized eigenvector of the grid L2 Rayleigh quotient.
    std::vector<cplx> l2_start() const {
        const int d = static_cast<int>(dim_);
        Matrix a = Matrix::Zero(d, d), b = Matrix::Zero(d, d);
        for (std::size_t k = 0; k < nodes_; ++k) {
            Eigen::Map<const Vector> v(&values_[k * dim_], d), dv(&derivs_[k * dim_], d);
            a.noalias() += dv.conjugate() * dv.transpose();
            b.noalias() += v.conjugate() * v.transpose();
        }
        const Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(a, b);
        const Vector top = solver.eigenvectors().col(d - 1);
        return std::vector<cplx>(top.data(), top.data() + d);
    }

private:
    void accumulate(double& acc, double x, Exponent e) const {
        if (e.is_infinite())
            acc = std::max(acc, x);
        else
            acc += std::pow(x, e.value());
    }
    double finish(double acc, Exponent e) const {
        if (e.is_infinite()) return acc;
        return std::pow(acc / static_cast<double>(nodes_), 1.0 / e.value());
    }

    std::size_t dim_;
    std::size_t nodes_;
    Exponent p_, q_;
    std::vector<cplx> values_;
    std::vector<cplx> derivs_;
};

std::vector<double> to_real(const std::vector<cplx>& c) {
    std::vector<double> x;
    x.reserve(2 * c.size());
    for (cplx v : c) {
        x.push_back(v.real());
        x.push_back(v.imag());
    }
    return x;
}

std::vector<cplx> to_complex(const std::vector<double>& x) {
    std::vector<cplx> c(x.size() / 2);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = cplx(x[2 * i], x[2 * i + 1]);
    return c;
}

struct SimplexResult {
    std::vector<double> best;
    double value = 0.0;
    int evaluations = 0;
};

// Maximizes `objective` with the Nelder-Mead simplex; stops when the budget
// is spent or the simplex has collapsed.
template <class F>
SimplexResult nelder_mead_max(const F& objective, std::vector<double> start, double step, int budget) {
    const std::size_t dim = start.size();
    SimplexResult out;
    auto eval = [&](const std::vector<double>& x) {
        ++out.evaluations;
        return -objective(x);
    };
    std::vector<std::vector<double>> pts{start};
    std::vector<double> vals{eval(start)};
    for (std::size_t i = 0; i < dim && out.evaluations < budget; ++i) {
        std::vector<double> x = start;
        x[i] += step;
        pts.push_back(x);
        vals.push_back(eval(x));
    }
    auto take_best = [&] {
        const auto it = std::min_element(vals.begin(), vals.end());
        out.best = pts[static_cast<std::size_t>(it - vals.begin())];
        out.value = -*it;
    };
    if (pts.size() < dim + 1) {
        take_best();
        return out;
    }

    std::vector<std::size_t> order(pts.size());
    while (out.evaluations < budget) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];
        if (std::abs(vals[worst] - vals[best]) <= 1e-13 * std::abs(vals[best])) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t k = 0; k + 1 < order.size(); ++k)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += pts[order[k]][i];
        for (double& c : centroid) c /= static_cast<double>(dim);
        auto along = [&](double t) {
            std::vector<double> x(dim);
            for (std::size_t i = 0; i < dim; ++i) x[i] = centroid[i] + t * (pts[worst][i] - centroid[i]);
            return x;
        };

        const std::vector<double> reflected = along(-1.0);
        const double fr = eval(reflected);
        if (fr < vals[best] && out.evaluations < budget) {
            std::vector<double> expanded = along(-2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                pts[worst] = std::move(expanded);
                vals[worst] = fe;
            } else {
                pts[worst] = reflected;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = reflected;
            vals[worst] = fr;
            continue;
        }
        if (out.evaluations >= budget) break;
        std::vector<double> contracted = fr < vals[worst] ? along(-0.5) : along(0.5);
        const double fc = eval(contracted);
        if (fc < std::min(fr, vals[worst])) {
            pts[worst] = std::move(contracted);
            vals[worst] = fc;
            continue;
        }
        for (std::size_t k = 1; k < order.size() && out.evaluations < budget; ++k) {
            std::vector<double>& x = pts[order[k]];
            for (std::size_t i = 0; i < dim; ++i) x[i] = pts[best][i] + 0.5 * (x[i] - pts[best][i]);
            vals[order[k]] = eval(x);
        }
    }
    take_best();
    return out;
}

}  // namespace

ConstantEstimate search_best_constant(int n, double r, Exponent p, Exponent q, int budget, std::uint64_t seed,
                                      const QuadratureConfig& cfg) {
    if (budget < 100) throw DomainError("search budget must be at least 100 evaluations");
    const std::vector<PoleSet> configs = search_configurations(n, r);
    constexpr int kRestartsPerConfig = 2;
    const int restarts = kRestartsPerConfig * static_cast<int>(configs.size());
    const int share = budget / restarts;

    Rng rng(seed);
    ConstantEstimate best;
    best.n = n;
    best.r = r;
    best.p = p;
    best.q = q;
    best.method = "search";
    best.lower_bound = -1.0;
    int spent = 0;
    for (const PoleSet& poles : configs) {
        const SubspaceBasis basis(poles);
        const QuadratureConfig c = adapted_to_poles(cfg, poles);
        const GridObjective objective(basis, c.base_nodes, p, q);
        auto real_objective = [&](const std::vector<double>& x) { return objective(to_complex(x)); };
        for (int k = 0; k < kRestartsPerConfig; ++k) {
            std::vector<cplx> start;
            if (k == 0) {
                start = objective.l2_start();
            } else {
                for (std::size_t i = 0; i < objective.dimension(); ++i) start.push_back(standard_complex_normal(rng));
            }
            double scale = 0.0;
            for (cplx v : start) scale = std::max(scale, std::abs(v));
            const SimplexResult found = nelder_mead_max(real_objective, to_real(start), 0.25 * scale, share);
            spent += found.evaluations;

            ConstantEstimate candidate = best;
            candidate.poles = poles;
            candidate.basis_kind = basis.kind();
            candidate.coefficients = to_complex(found.best);
            candidate.nodes = c.base_nodes;
            candidate.lower_bound = reevaluate_witness(candidate, cfg);
            if (candidate.lower_bound > best.lower_bound) best = std::move(candidate);
        }
    }
    best.iterations = spent;
    return best;
}

SharpnessResult sharpness_bep(int n, double r, Exponent p, const QuadratureConfig& cfg) {
    require_radius(r);
    const bool use_g = p == Exponent(1.0);
    if (use_g ? n < 5 : n < 2) throw DomainError(use_g ? "sharpness_bep with p = 1 needs n >= 5" : "sharpness_bep needs n >= 2");
    const RationalFunction t = use_g ? testfunc_g(n, r) : testfunc_f(n, r);
    const CirclePoint minus_one(std::numbers::pi);
    const QuadratureResult norm = lp_norm([&](cplx z) { return t(z); }, p, cfg.adapted_to(t));
    SharpnessResult out;
    out.value = std::abs(t.derivative(-1.0)) / norm.checked();
    out.nodes = norm.nodes;
    out.reference = std::pow(n * (1.0 + r) / (1.0 - r), 1.0 + p.reciprocal());
    out.upper = bep_rhs(t.poles(), minus_one, p);
    return out;
}

SharpnessResult sharpness_bernstein(int n, double r, Exponent p, Exponent q, const QuadratureConfig& cfg) {
    require_radius(r);
    const bool use_g = q >= p;
    if (use_g ? n < 4 : n < 3) throw DomainError(use_g ? "sharpness_bernstein with q >= p needs n >= 4" : "sharpness_bernstein with q < p needs n >= 3");
    const RationalFunction t = use_g ? testfunc_g(n, r) : testfunc_h(n, r);
    SharpnessResult out = ratio_of_norms(t, p, q, true, cfg);
    const double e = 1.0 + p.reciprocal() - q.reciprocal();
    out.reference = use_g ? std::pow(n / (1.0 - r), e) : n / std::pow(1.0 - r, e);
    out.upper = bernstein_upper(n, r, p, q);
    return out;
}

SharpnessResult sharpness_nikolskii(int n, double r, Exponent p, Exponent q, const QuadratureConfig& cfg) {
    require_radius(r);
    if (!(p < q)) throw DomainError("sharpness_nikolskii needs p < q");
    if (n < 4) throw DomainError("sharpness_nikolskii needs n >= 4");
    const RationalFunction g = testfunc_g(n, r);
    SharpnessResult out = ratio_of_norms(g, p, q, false, cfg);
    out.reference = std::pow(n / (1.0 - r), p.reciprocal() - q.reciprocal());
    out.upper = nikolskii_upper(0, n, r, p, q);
    return out;
}

std::vector<double> dirichlet_limit(Exponent q, const std::vector<int>& n_list, const QuadratureConfig& cfg) {
    if (!(q > Exponent(1.0))) throw DomainError("dirichlet_limit needs q > 1");
    std::vector<double> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        const RationalFunction d = dirichlet(n);
        const double norm = lp_norm([&](cplx z) { return d(z); }, q, cfg.adapted_to(d)).checked();
        out.push_back(norm / std::pow(static_cast<double>(n), 1.0 - q.reciprocal()));
    }
    return out;
}

ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& points, bool log_log) {
    if (points.size() < 2) throw DomainError("exponent_fit needs at least two points");
    std::vector<double> xs, ys;
    for (const auto& [x, y] : points) {
        if (log_log && !(x > 0.0 && y > 0.0)) throw DomainError("exponent_fit on log axes needs positive values");
        xs.push_back(log_log ? std::log(x) : x);
        ys.push_back(log_log ? std::log(y) : y);
    }
    const double m = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw DomainError("exponent_fit needs at least two distinct abscissae");
    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
}

}  // namespace ratlab
