#include "ratlab/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ratlab/errors.hpp"

namespace ratlab {

namespace {

CircleFunction value_of(const RationalFunction& f) {
    return [&f](cplx z) { return f(z); };
}

CircleFunction derivative_of(const RationalFunction& f) {
    return [&f](cplx z) { return f.derivative(z); };
}

CirclePoint conjugate(CirclePoint xi) { return CirclePoint(-xi.theta()); }

struct KindName {
    InequalityKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 8> kKindNames{{
    {InequalityKind::LevinRusak, "levin-rusak"},
    {InequalityKind::BorweinErdelyi, "borwein-erdelyi"},
    {InequalityKind::Bep, "bep"},
    {InequalityKind::Spijker, "spijker"},
    {InequalityKind::Dolzhenko, "dolzhenko"},
    {InequalityKind::GenSpijker, "gen-spijker"},
    {InequalityKind::Bernstein, "bernstein"},
    {InequalityKind::Nikolskii, "nikolskii"},
}};

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("class radius must lie in [0, 1)");
}

}  // namespace

double PoleSummary::inside_sum(CirclePoint xi) const {
    const cplx x = xi.value();
    double s = 0.0;
    for (const cplx& a : inside) s += (1.0 - std::norm(a)) / std::norm(a - x);
    return s;
}

double PoleSummary::outside_sum(CirclePoint xi) const {
    const cplx x = xi.value();
    double s = 0.0;
    for (const cplx& a : outside) s += (std::norm(a) - 1.0) / std::norm(a - x);
    return s;
}

PoleSummary pole_summary(const PoleSet& poles) {
    PoleSplit split = split_poles(poles);
    PoleSummary s;
    s.n1 = static_cast<int>(split.inside.size());
    s.n2 = static_cast<int>(split.outside.size());
    for (const cplx& a : split.inside) s.d1 += (1.0 + std::abs(a)) / (1.0 - std::abs(a));
    for (const cplx& a : split.outside) s.d2 += (std::abs(a) + 1.0) / (std::abs(a) - 1.0);
    s.inside = std::move(split.inside);
    s.outside = std::move(split.outside);
    return s;
}

double levin_rusak_rhs(const PoleSet& poles, CirclePoint xi) {
    const PoleSummary s = pole_summary(poles);
    return s.inside_sum(xi) + s.outside_sum(xi);
}

double borwein_erdelyi_rhs(const PoleSet& poles, CirclePoint xi) {
    const PoleSummary s = pole_summary(poles);
    return std::max(s.inside_sum(xi), s.outside_sum(xi));
}

double bep_rhs(const PoleSet& poles, CirclePoint xi, Exponent p) {
    const PoleSummary s = pole_summary(poles);
    const double e = p.reciprocal();
    return power_or_zero(s.d1, e) * s.inside_sum(xi) + power_or_zero(s.d2, e) * s.outside_sum(xi);
}

double gen_spijker_rhs(const PoleSet& poles, Exponent p) {
    const PoleSummary s = pole_summary(poles);
    const double e = p.reciprocal();
    return power_or_zero(s.n1, 1.0 - e) * power_or_zero(s.d1, e) + power_or_zero(s.n2, 1.0 - e) * power_or_zero(s.d2, e);
}

double bernstein_upper(int n, double r, Exponent p, Exponent q) {
    if (n < 0) throw DomainError("bernstein_upper needs n >= 0");
    require_radius(r);
    const double e = 1.0 + p.reciprocal() - q.reciprocal();
    if (q >= p) return std::pow((1.0 + r) * n / (1.0 - r), e);
    return std::pow(1.0 + r, e) * n / std::pow(1.0 - r, e);
}

double nikolskii_upper(int n1, int n2, double r, Exponent p, Exponent q) {
    if (!(p < q)) throw DomainError("nikolskii_upper needs p < q");
    if (n1 < 0 || n2 < 0) throw DomainError("nikolskii_upper needs nonnegative pole counts");
    require_radius(r);
    const double e = p.reciprocal() - q.reciprocal();
    return std::pow((1.0 + r) / (1.0 - r), e) * (power_or_zero(n1, e) + std::pow(n2 + 1.0, e));
}

double blaschke_deriv_lp_bound(const BlaschkeProduct& b, Exponent p_conj) {
    const double e = p_conj.reciprocal();
    return power_or_zero(b.degree(), e) * power_or_zero(b.derivative_sup_bound(), 1.0 - e);
}

std::string_view to_string(InequalityKind kind) {
    for (const KindName& k : kKindNames)
        if (k.kind == kind) return k.name;
    return "unknown";
}

InequalityKind parse_inequality_kind(std::string_view name) {
    for (const KindName& k : kKindNames)
        if (k.name == name) return k.kind;
    throw UnknownKind("unknown inequality kind '" + std::string(name) + "'");
}

const std::vector<InequalityKind>& all_inequality_kinds() {
    static const std::vector<InequalityKind> kinds = [] {
        std::vector<InequalityKind> out;
        for (const KindName& k : kKindNames) out.push_back(k.kind);
        return out;
    }();
    return kinds;
}

double bound_ratio(double lhs, double rhs) {
    if (lhs == 0.0) return 0.0;
    if (rhs == 0.0) return std::numeric_limits<double>::infinity();
    return lhs / rhs;
}

double bound_slack(double rel_tol) { return 1e-9 + 3.0 * rel_tol; }

BoundReport make_report(InequalityKind kind, double lhs, double rhs, double rel_tol) {
    BoundReport rep;
    rep.kind = kind;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.ratio = bound_ratio(lhs, rhs);
    rep.slack = bound_slack(rel_tol);
    rep.holds = rep.ratio <= 1.0 + rep.slack;
    return rep;
}

NormOracle::NormOracle(RationalFunction f, const QuadratureConfig& cfg)
    : f_(std::move(f)), g_(reflect(f_)), cfg_(cfg.adapted_to(f_)) {}

double NormOracle::norm(Exponent p) {
    auto it = norms_.find(p.value());
    if (it != norms_.end()) return it->second;
    const QuadratureResult res = lp_norm(value_of(f_), p, cfg_);
    nodes_ = std::max(nodes_, res.nodes);
    const double v = res.checked();
    norms_.emplace(p.value(), v);
    return v;
}

double NormOracle::derivative_norm(Exponent q) {
    auto it = derivative_norms_.find(q.value());
    if (it != derivative_norms_.end()) return it->second;
    const QuadratureResult res = lp_norm(derivative_of(f_), q, cfg_);
    nodes_ = std::max(nodes_, res.nodes);
    const double v = res.checked();
    derivative_norms_.emplace(q.value(), v);
    return v;
}

BoundReport spijker_check(const RationalFunction& f, const QuadratureConfig& cfg) {
    NormOracle oracle(f, cfg);
    return check_inequality(InequalityKind::Spijker, oracle, InequalityParams{});
}

BoundReport dolzhenko_subset_check(const RationalFunction& f, const Arc& e, const QuadratureConfig& cfg) {
    InequalityParams params;
    params.arc = e;
    NormOracle oracle(f, cfg);
    return check_inequality(InequalityKind::Dolzhenko, oracle, params);
}

BoundReport check_inequality(InequalityKind kind, NormOracle& oracle, const InequalityParams& params) {
    const RationalFunction& f = oracle.function();
    const RationalFunction& g = oracle.normalized();
    const QuadratureConfig& cfg = oracle.config();
    const int n = f.degree();
    const double r = g.poles().class_radius();
    Exponent p = params.p;
    Exponent q = params.q;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pointwise = false;

    switch (kind) {
        case InequalityKind::LevinRusak:
        case InequalityKind::BorweinErdelyi:
        case InequalityKind::Bep: {
            pointwise = true;
            if (kind != InequalityKind::Bep) p = Exponent::infinity();
            const CirclePoint at = f.normalized() ? params.xi : conjugate(params.xi);
            lhs = std::abs(f.derivative(params.xi.value()));
            double factor = 0.0;
            if (kind == InequalityKind::LevinRusak) factor = levin_rusak_rhs(g.poles(), at);
            if (kind == InequalityKind::BorweinErdelyi) factor = borwein_erdelyi_rhs(g.poles(), at);
            if (kind == InequalityKind::Bep) factor = bep_rhs(g.poles(), at, p);
            rhs = factor * oracle.norm(p);
            break;
        }
        case InequalityKind::Spijker:
            p = Exponent::infinity();
            q = 1.0;
            lhs = oracle.derivative_norm(1.0);
            rhs = n * oracle.norm(Exponent::infinity());
            break;
        case InequalityKind::Dolzhenko: {
            p = Exponent::infinity();
            q = 1.0;
            const Arc e = params.arc.value_or(Arc::full());
            const double sup = sup_on_arc(value_of(f), e, cfg).checked();
            const double mass = arc_lp_integral(derivative_of(f), e, 1.0, cfg).checked();
            lhs = sup > 0.0 ? kTwoPi * mass / sup : 0.0;
            rhs = kTwoPi * n;
            break;
        }
        case InequalityKind::GenSpijker:
            q = 1.0;
            lhs = oracle.derivative_norm(1.0);
            rhs = gen_spijker_rhs(g.poles(), p) * oracle.norm(p);
            break;
        case InequalityKind::Bernstein:
            lhs = oracle.derivative_norm(q);
            rhs = bernstein_upper(n, r, p, q) * oracle.norm(p);
            break;
        case InequalityKind::Nikolskii: {
            const PoleSummary s = pole_summary(g.poles());
            const double c = nikolskii_upper(s.n1, s.n2, r, p, q);
            lhs = oracle.norm(q);
            rhs = c * oracle.norm(p);
            break;
        }
        default:
            throw UnknownKind("unhandled inequality kind");
    }

    BoundReport rep = make_report(kind, lhs, rhs, cfg.rel_tol);
    rep.n = n;
    rep.r = r;
    rep.p = p;
    rep.q = q;
    if (pointwise) rep.xi = params.xi;
    rep.nodes = oracle.max_nodes_used();
    return rep;
}

BoundReport check_inequality(InequalityKind kind, const RationalFunction& f, const InequalityParams& params,
                             const QuadratureConfig& cfg) {
    NormOracle oracle(f, cfg);
    return check_inequality(kind, oracle, params);
}

}  // namespace ratlab
