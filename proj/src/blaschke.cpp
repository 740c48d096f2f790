#include "ratlab/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "ratlab/errors.hpp"
#include "ratlab/poles.hpp"

namespace ratlab {

cplx blaschke_factor(cplx nu, cplx z) { return (nu - z) / (1.0 - std::conj(nu) * z); }

cplx blaschke_factor_derivative(cplx nu, cplx z) {
    const cplx w = 1.0 - std::conj(nu) * z;
    return (std::norm(nu) - 1.0) / (w * w);
}

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {
    for (const cplx& nu : zeros_)
        if (!(std::abs(nu) < 1.0)) throw DomainError("Blaschke zeros must lie in the open unit disc");
}

BlaschkeProduct BlaschkeProduct::times_z() const {
    std::vector<cplx> z = zeros_;
    z.insert(z.begin(), cplx(0.0));
    return BlaschkeProduct(std::move(z));
}

cplx BlaschkeProduct::operator()(cplx z) const {
    cplx v = 1.0;
    for (const cplx& nu : zeros_) v *= blaschke_factor(nu, z);
    return v;
}

cplx BlaschkeProduct::derivative(cplx z) const {
    cplx v = 1.0;
    cplx d = 0.0;
    for (const cplx& nu : zeros_) {
        const cplx b = blaschke_factor(nu, z);
        d = d * b + v * blaschke_factor_derivative(nu, z);
        v *= b;
    }
    return d;
}

double BlaschkeProduct::derivative_modulus(CirclePoint xi) const {
    const cplx x = xi.value();
    double s = 0.0;
    for (const cplx& nu : zeros_) s += (1.0 - std::norm(nu)) / std::norm(x - nu);
    return s;
}

double BlaschkeProduct::derivative_sup_bound() const {
    double s = 0.0;
    for (const cplx& nu : zeros_) {
        const double a = std::abs(nu);
        s += (1.0 + a) / (1.0 - a);
    }
    return s;
}

double BlaschkeProduct::max_modulus() const {
    double m = 0.0;
    for (const cplx& nu : zeros_) m = std::max(m, std::abs(nu));
    return m;
}

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) {
    for (const cplx& nu : b.zeros()) {
        if (nu == cplx(0.0)) continue;
        if (std::abs(z - 1.0 / std::conj(nu)) < kDefaultPoleGuard)
            throw PoleProximity("evaluation point sits on a pole of the Blaschke product");
    }
    return b(z);
}

double blaschke_derivative_modulus(const BlaschkeProduct& b, CirclePoint xi) { return b.derivative_modulus(xi); }

}  // namespace ratlab
