#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratlab/blaschke.hpp"
#include "ratlab/exponent.hpp"
#include "ratlab/quadrature.hpp"
#include "ratlab/rational.hpp"

namespace ratlab {

struct PoleSummary {
    int n1 = 0;
    int n2 = 0;
    double d1 = 0.0;  ///< sum over inside poles of (1 + |a|)/(1 - |a|)
    double d2 = 0.0;  ///< sum over outside poles of (|a| + 1)/(|a| - 1)
    std::vector<cplx> inside;
    std::vector<cplx> outside;

    /// sum over inside poles of (1 - |a|^2)/|a - xi|^2
    double inside_sum(CirclePoint xi) const;
    /// sum over outside poles of (|a|^2 - 1)/|a - xi|^2
    double outside_sum(CirclePoint xi) const;
};

PoleSummary pole_summary(const PoleSet& poles);

double levin_rusak_rhs(const PoleSet& poles, CirclePoint xi);
double borwein_erdelyi_rhs(const PoleSet& poles, CirclePoint xi);
double bep_rhs(const PoleSet& poles, CirclePoint xi, Exponent p);
double gen_spijker_rhs(const PoleSet& poles, Exponent p);
/// Upper bound for the best constant in ||f'||_q <= C ||f||_p over R_{n,r}.
double bernstein_upper(int n, double r, Exponent p, Exponent q);
/// Requires p < q.
double nikolskii_upper(int n1, int n2, double r, Exponent p, Exponent q);
/// Bound d^{1/p'} D^{1 - 1/p'} on ||B'||_{p'}.
double blaschke_deriv_lp_bound(const BlaschkeProduct& b, Exponent p_conj);

enum class InequalityKind {
    LevinRusak,
    BorweinErdelyi,
    Bep,
    Spijker,
    Dolzhenko,
    GenSpijker,
    Bernstein,
    Nikolskii,
};

/// Kebab-case names: levin-rusak, borwein-erdelyi, bep, spijker, dolzhenko,
/// gen-spijker, bernstein, nikolskii.
std::string_view to_string(InequalityKind kind);
/// Throws UnknownKind.
InequalityKind parse_inequality_kind(std::string_view name);
const std::vector<InequalityKind>& all_inequality_kinds();

struct InequalityParams {
    Exponent p = Exponent::infinity();
    Exponent q = Exponent::infinity();
    CirclePoint xi;
    std::optional<Arc> arc;
};

struct BoundReport {
    InequalityKind kind = InequalityKind::Spijker;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double slack = 0.0;
    bool holds = false;
    int n = 0;
    double r = 0.0;
    Exponent p = Exponent::infinity();
    Exponent q = Exponent::infinity();
    std::optional<CirclePoint> xi;
    long nodes = 0;
};

/// lhs/rhs with 0/0 = 0 and x/0 = inf.
double bound_ratio(double lhs, double rhs);
double bound_slack(double rel_tol);
BoundReport make_report(InequalityKind kind, double lhs, double rhs, double rel_tol);

/// Lazily computed and cached norms of f and f' on the circle.
class NormOracle {
public:
    NormOracle(RationalFunction f, const QuadratureConfig& cfg);

    const RationalFunction& function() const { return f_; }
    /// reflect(f); shares |f| and |f'| on the circle up to conjugation.
    const RationalFunction& normalized() const { return g_; }
    const QuadratureConfig& config() const { return cfg_; }

    /// ||f||_p; throws NoConvergence.
    double norm(Exponent p);
    /// ||f'||_q; throws NoConvergence.
    double derivative_norm(Exponent q);
    long max_nodes_used() const { return nodes_; }

private:
    RationalFunction f_;
    RationalFunction g_;
    QuadratureConfig cfg_;
    std::map<double, double> norms_;
    std::map<double, double> derivative_norms_;
    long nodes_ = 0;
};

/// lhs = ||f'||_1, rhs = n ||f||_inf.
BoundReport spijker_check(const RationalFunction& f, const QuadratureConfig& cfg);
/// lhs = integral over E of |f'| |du| after scaling f so that sup_E |f| = 1;
/// rhs = 2 pi n.
BoundReport dolzhenko_subset_check(const RationalFunction& f, const Arc& e, const QuadratureConfig& cfg);

BoundReport check_inequality(InequalityKind kind, NormOracle& oracle, const InequalityParams& params);
BoundReport check_inequality(InequalityKind kind, const RationalFunction& f, const InequalityParams& params,
                             const QuadratureConfig& cfg);

}  // namespace ratlab
