#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratlab/exponent.hpp"
#include "ratlab/quadrature.hpp"
#include "ratlab/rational.hpp"

namespace ratlab {

enum class BasisKind {
    /// Takenaka-Malmquist chains: 1, the outside chain seeded with a zero at
    /// the origin, and the conjugate inside chain. Orthonormal on the circle
    /// and valid for repeated poles.
    Orthonormal,
    /// 1, 1/(z - a) for inside a, 1/(1 - z/a) for outside a. Needs distinct
    /// poles and degrades quickly as they cluster.
    PartialFraction,
};

/// A basis of V = {a + sum c/(z - a_k) + sum d/(1 - z/a_k)}: every rational
/// function with the given poles and deg P <= deg Q.
class SubspaceBasis {
public:
    explicit SubspaceBasis(PoleSet poles, BasisKind kind = BasisKind::Orthonormal, std::vector<double> scales = {});

    const PoleSet& poles() const { return poles_; }
    BasisKind kind() const { return kind_; }
    const std::vector<double>& scales() const { return scales_; }
    int dimension() const { return 1 + static_cast<int>(inside_.size() + outside_.size()); }

    /// Values and derivatives of every basis function at z.
    void evaluate(cplx z, cplx* values, cplx* derivatives) const;

    cplx combination(const std::vector<cplx>& coeffs, cplx z) const;
    cplx combination_derivative(const std::vector<cplx>& coeffs, cplx z) const;

private:
    PoleSet poles_;
    BasisKind kind_;
    std::vector<cplx> inside_;
    std::vector<cplx> outside_;
    std::vector<double> scales_;
};

struct ConstantEstimate {
    int n = 0;
    double r = 0.0;
    Exponent p = 2.0;
    Exponent q = 2.0;
    double lower_bound = 0.0;
    std::string method;
    PoleSet poles;
    BasisKind basis_kind = BasisKind::Orthonormal;
    std::vector<cplx> coefficients;
    long nodes = 0;
    int iterations = 0;
};

/// ||f'||_q/||f||_p for the witness of an estimate, by adaptive quadrature.
double reevaluate_witness(const ConstantEstimate& e, const QuadratureConfig& cfg);

/// sup over V of ||f'||_2/||f||_2. Throws IllConditioned when the Gram
/// matrix of the basis has condition number above 1e12.
ConstantEstimate gram_best_constant_L2(const SubspaceBasis& basis, const QuadratureConfig& cfg);

/// Pole configurations tried by the search: all at -1/r, all at +1/r, and
/// ceil(n/2) at -1/r with the rest at -r.
std::vector<PoleSet> search_configurations(int n, double r);

/// Multi-restart Nelder-Mead over coefficient vectors, poles frozen per
/// restart. `budget` counts objective evaluations in total.
ConstantEstimate search_best_constant(int n, double r, Exponent p, Exponent q, int budget, std::uint64_t seed,
                                      const QuadratureConfig& cfg);

struct SharpnessResult {
    double value = 0.0;      ///< the measured ratio
    double reference = 0.0;  ///< the claimed order in n and r
    double upper = 0.0;      ///< the closed-form upper bound for the ratio
    long nodes = 0;
};

/// |f'(-1)|/||f||_p with f = testfunc_f(n, r), or testfunc_g when p = 1.
SharpnessResult sharpness_bep(int n, double r, Exponent p, const QuadratureConfig& cfg);
/// ||t'||_q/||t||_p with t = testfunc_g(n, r) for q >= p, testfunc_h(n, r) for q < p.
SharpnessResult sharpness_bernstein(int n, double r, Exponent p, Exponent q, const QuadratureConfig& cfg);
/// ||g||_q/||g||_p with g = testfunc_g(n, r); requires p < q.
SharpnessResult sharpness_nikolskii(int n, double r, Exponent p, Exponent q, const QuadratureConfig& cfg);

/// ||D_n||_q / n^{1 - 1/q} for each n.
std::vector<double> dirichlet_limit(Exponent q, const std::vector<int>& n_list, const QuadratureConfig& cfg);

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  ///< root mean square of the fit residuals
};

/// Least squares line through (x, y), on log-log axes when `log_log`.
ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& points, bool log_log = true);

}  // namespace ratlab
