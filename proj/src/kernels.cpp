#include "ratlab/kernels.hpp"

#include <cmath>

#include "ratlab/errors.hpp"

namespace ratlab {

namespace {

BlaschkeProduct outside_blaschke(const std::vector<cplx>& outside_poles) {
    std::vector<cplx> mu;
    mu.reserve(outside_poles.size());
    for (const cplx& a : outside_poles) mu.push_back(1.0 / std::conj(a));
    return BlaschkeProduct(std::move(mu));
}

}  // namespace

ReproducingKernel::ReproducingKernel(BlaschkeProduct blaschke, cplx anchor)
    : blaschke_(std::move(blaschke)), anchor_(anchor) {
    if (!(std::abs(anchor) <= 1.0 + 1e-12)) throw DomainError("kernel anchor must lie in the closed unit disc");
}

cplx ReproducingKernel::operator()(cplx z) const {
    const cplx xi_conj = std::conj(anchor_);
    cplx prefix = 1.0;
    cplx sum = 0.0;
    for (const cplx& nu : blaschke_.zeros()) {
        sum += prefix * (1.0 - std::norm(nu)) / ((1.0 - nu * xi_conj) * (1.0 - std::conj(nu) * z));
        prefix *= std::conj(blaschke_factor(nu, anchor_)) * blaschke_factor(nu, z);
    }
    return sum;
}

cplx kernel_eval(const ReproducingKernel& k, cplx z) {
    if (!(std::abs(z) <= 1.0 + 1e-12)) throw DomainError("kernel_eval needs |z| <= 1");
    return k(z);
}

RepresentationKernels::RepresentationKernels(BlaschkeProduct b1tilde, BlaschkeProduct b2, CirclePoint xi)
    : xi_(xi),
      inside_(std::move(b1tilde), xi.value()),
      outside_(std::move(b2), xi.value()),
      outside_shifted_(outside_.blaschke().times_z(), xi.value()) {}

RepresentationKernels RepresentationKernels::from_poles(const PoleSet& poles, CirclePoint xi) {
    PoleSplit split = split_poles(poles);
    return RepresentationKernels(BlaschkeProduct(std::move(split.inside)), outside_blaschke(split.outside), xi);
}

RepresentationKernels RepresentationKernels::from(const PartialFraction& f, CirclePoint xi) {
    return from_poles(f.poles(), xi);
}

cplx RepresentationKernels::phi(cplx u) const {
    const cplx xi = xi_.value();
    return outside_shifted_(u) + xi * std::conj(u * inside_(u));
}

cplx RepresentationKernels::psi(cplx u) const {
    const cplx xi = xi_.value();
    const cplx k2 = outside_(u);
    const cplx k1 = inside_(u);
    return u * k2 * k2 - xi * xi * std::conj(u) * std::conj(k1 * k1);
}

cplx phi_kernel(const RepresentationKernels& rk, CirclePoint u) { return rk.phi(u.value()); }

cplx psi_kernel(const RepresentationKernels& rk, CirclePoint u) { return rk.psi(u.value()); }

ComplexQuadratureResult represent_value(const PartialFraction& f, CirclePoint xi, const QuadratureConfig& cfg) {
    const auto rk = RepresentationKernels::from(f, xi);
    return inner_product([&](cplx u) { return f(u); }, [&](cplx u) { return rk.phi(u); }, cfg);
}

ComplexQuadratureResult represent_value(const RationalFunction& f, CirclePoint xi, const QuadratureConfig& cfg) {
    if (!f.normalized()) throw DomainError("represent_value needs deg P <= deg Q");
    const auto rk = RepresentationKernels::from_poles(f.poles(), xi);
    return inner_product([&](cplx u) { return f(u); }, [&](cplx u) { return rk.phi(u); }, cfg);
}

ComplexQuadratureResult represent_derivative(const PartialFraction& f, CirclePoint xi, const QuadratureConfig& cfg) {
    const auto rk = RepresentationKernels::from(f, xi);
    return inner_product([&](cplx u) { return f(u); }, [&](cplx u) { return rk.psi(u); }, cfg);
}

ComplexQuadratureResult represent_derivative(const RationalFunction& f, CirclePoint xi, const QuadratureConfig& cfg) {
    if (!f.normalized()) throw DomainError("represent_derivative needs deg P <= deg Q");
    const auto rk = RepresentationKernels::from_poles(f.poles(), xi);
    return inner_product([&](cplx u) { return f(u); }, [&](cplx u) { return rk.psi(u); }, cfg);
}

double kernel_lp_norm_bound(const BlaschkeProduct& b, CirclePoint xi, Exponent p_conj) {
    const double s = b.derivative_modulus(xi);
    const double d = b.derivative_sup_bound();
    return std::sqrt(s) * power_or_zero(d, 0.5 * (1.0 - p_conj.reciprocal()));
}

}  // namespace ratlab
