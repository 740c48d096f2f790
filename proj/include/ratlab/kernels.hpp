#pragma once

#include "ratlab/blaschke.hpp"
#include "ratlab/exponent.hpp"
#include "ratlab/quadrature.hpp"
#include "ratlab/rational.hpp"

namespace ratlab {

/// k_xi^B(z) = (1 - conj(B(xi)) B(z))/(1 - conj(xi) z), the reproducing
/// kernel of the model space K_B at the anchor xi.
class ReproducingKernel {
public:
    ReproducingKernel(BlaschkeProduct blaschke, cplx anchor);

    const BlaschkeProduct& blaschke() const { return blaschke_; }
    cplx anchor() const { return anchor_; }

    /// Evaluated by telescoping the product, so the diagonal z = xi on the
    /// circle returns its limit |B'(xi)| without any special case.
    cplx operator()(cplx z) const;

private:
    BlaschkeProduct blaschke_;
    cplx anchor_;
};

/// Requires |z| <= 1 (up to rounding).
cplx kernel_eval(const ReproducingKernel& k, cplx z);

/// The kernels phi_xi and psi_xi reproducing f(xi) and f'(xi) for every f
/// with inside poles among the zeros of B1tilde and outside poles at
/// 1/conj(mu) for mu among the zeros of B2.
class RepresentationKernels {
public:
    RepresentationKernels(BlaschkeProduct b1tilde, BlaschkeProduct b2, CirclePoint xi);

    static RepresentationKernels from_poles(const PoleSet& poles, CirclePoint xi);
    static RepresentationKernels from(const PartialFraction& f, CirclePoint xi);

    const BlaschkeProduct& b1tilde() const { return inside_.blaschke(); }
    const BlaschkeProduct& b2() const { return outside_.blaschke(); }
    CirclePoint anchor() const { return xi_; }

    /// k_xi^{zB2}(u) + xi conj(u k_xi^{B1tilde}(u))
    cplx phi(cplx u) const;
    /// u k_xi^{B2}(u)^2 - xi^2 conj(u) conj(k_xi^{B1tilde}(u)^2)
    cplx psi(cplx u) const;

private:
    CirclePoint xi_;
    ReproducingKernel inside_;
    ReproducingKernel outside_;
    ReproducingKernel outside_shifted_;
};

cplx phi_kernel(const RepresentationKernels& rk, CirclePoint u);
cplx psi_kernel(const RepresentationKernels& rk, CirclePoint u);

/// <f, phi_xi> by quadrature.
ComplexQuadratureResult represent_value(const PartialFraction& f, CirclePoint xi, const QuadratureConfig& cfg);
ComplexQuadratureResult represent_value(const RationalFunction& f, CirclePoint xi, const QuadratureConfig& cfg);
/// <f, psi_xi> by quadrature.
ComplexQuadratureResult represent_derivative(const PartialFraction& f, CirclePoint xi, const QuadratureConfig& cfg);
ComplexQuadratureResult represent_derivative(const RationalFunction& f, CirclePoint xi, const QuadratureConfig& cfg);

/// S^{1/2} D^{(1 - 1/p')/2} with S = sum (1 - |nu|^2)/|xi - nu|^2 and
/// D = sum (1 + |nu|)/(1 - |nu|); bounds ||k_xi^B||_{H^{2p'}}.
double kernel_lp_norm_bound(const BlaschkeProduct& b, CirclePoint xi, Exponent p_conj);

}  // namespace ratlab
