#include "ratlab/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace ratlab {

std::vector<cplx> expand_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{1.0};
    for (const cplx& root : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - root * c[k];
        c[0] = -root * c[0];
    }
    return c;
}

Polynomial Polynomial::from_coefficients(std::vector<cplx> ascending) {
    while (!ascending.empty() && ascending.back() == cplx(0.0)) ascending.pop_back();
    Polynomial p;
    p.coeffs_ = std::move(ascending);
    return p;
}

Polynomial Polynomial::from_roots(cplx scale, std::vector<cplx> roots) {
    if (scale == cplx(0.0)) return Polynomial{};
    Polynomial p;
    p.coeffs_ = expand_roots(roots);
    for (cplx& c : p.coeffs_) c *= scale;
    p.roots_ = std::move(roots);
    p.scale_ = scale;
    p.factored_ = true;
    return p;
}

int Polynomial::degree() const {
    if (factored_) return static_cast<int>(roots_.size());
    return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

cplx Polynomial::leading_coefficient() const {
    if (factored_) return scale_;
    return coeffs_.empty() ? cplx(0.0) : coeffs_.back();
}

cplx Polynomial::operator()(cplx z) const { return value_and_derivative(z).first; }

cplx Polynomial::derivative(cplx z) const { return value_and_derivative(z).second; }

std::pair<cplx, cplx> Polynomial::value_and_derivative(cplx z) const {
    if (factored_) {
        // Running product rule: exact at the roots themselves.
        cplx value = scale_;
        cplx deriv = 0.0;
        for (const cplx& root : roots_) {
            const cplx factor = z - root;
            deriv = deriv * factor + value;
            value *= factor;
        }
        return {value, deriv};
    }
    cplx value = 0.0;
    cplx deriv = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        deriv = deriv * z + value;
        value = value * z + *it;
    }
    return {value, deriv};
}

Polynomial Polynomial::reversed() const {
    if (factored_) {
        // z^d * s * prod(1/z - w) = s * prod(1 - w z); zero roots only drop the degree.
        cplx scale = scale_;
        std::vector<cplx> roots;
        for (const cplx& w : roots_) {
            if (w == cplx(0.0)) continue;
            scale *= -w;
            roots.push_back(1.0 / w);
        }
        return from_roots(scale, std::move(roots));
    }
    std::vector<cplx> c(coeffs_.rbegin(), coeffs_.rend());
    return from_coefficients(std::move(c));
}

Polynomial Polynomial::shifted(int k) const {
    if (k <= 0 || is_zero()) return *this;
    if (factored_) {
        std::vector<cplx> roots = roots_;
        roots.insert(roots.end(), static_cast<std::size_t>(k), cplx(0.0));
        return from_roots(scale_, std::move(roots));
    }
    std::vector<cplx> c(static_cast<std::size_t>(k), cplx(0.0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return from_coefficients(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    if (a.factored_ && b.factored_) {
        std::vector<cplx> roots = a.roots_;
        roots.insert(roots.end(), b.roots_.begin(), b.roots_.end());
        return Polynomial::from_roots(a.scale_ * b.scale_, std::move(roots));
    }
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial::from_coefficients(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial::from_coefficients(std::move(c));
}

Polynomial operator*(cplx c, const Polynomial& a) {
    if (c == cplx(0.0)) return Polynomial{};
    if (a.factored_) return Polynomial::from_roots(c * a.scale_, a.roots_);
    std::vector<cplx> coeffs = a.coeffs_;
    for (cplx& x : coeffs) x *= c;
    return Polynomial::from_coefficients(std::move(coeffs));
}

}  // namespace ratlab
