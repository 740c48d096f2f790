#pragma once

#include <vector>

#include "ratlab/circle.hpp"

namespace ratlab {

/// b_nu(z) = (nu - z)/(1 - conj(nu) z).
cplx blaschke_factor(cplx nu, cplx z);
/// b_nu'(z) = (|nu|^2 - 1)/(1 - conj(nu) z)^2.
cplx blaschke_factor_derivative(cplx nu, cplx z);

/// Finite Blaschke product prod_j b_{nu_j}, all |nu_j| < 1.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    explicit BlaschkeProduct(std::vector<cplx> zeros);

    const std::vector<cplx>& zeros() const { return zeros_; }
    int degree() const { return static_cast<int>(zeros_.size()); }

    /// zB: the same product with an extra zero at the origin.
    BlaschkeProduct times_z() const;

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    /// sum_j (1 - |nu_j|^2)/|xi - nu_j|^2, equal to |B'(xi)| on the circle.
    double derivative_modulus(CirclePoint xi) const;
    /// sum_j (1 + |nu_j|)/(1 - |nu_j|), the bound on sup |B'| over the circle.
    double derivative_sup_bound() const;
    /// max_j |nu_j|; 0 when empty.
    double max_modulus() const;

private:
    std::vector<cplx> zeros_;
};

cplx blaschke_eval(const BlaschkeProduct& b, cplx z);
double blaschke_derivative_modulus(const BlaschkeProduct& b, CirclePoint xi);

}  // namespace ratlab
