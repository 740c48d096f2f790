#pragma once

#include <utility>
#include <vector>

#include "ratlab/circle.hpp"

namespace ratlab {

/// Complex polynomial held either by monomial coefficients or in factored
/// form scale * prod (z - root_j).
///
/// Factored polynomials evaluate through the product, which stays accurate
/// when roots cluster; coefficients() is still available for both forms but
/// the expansion of a high-degree factored polynomial may be inaccurate.
class Polynomial {
public:
    Polynomial() = default;

    /// Ascending coefficients; exact trailing zeros are dropped.
    static Polynomial from_coefficients(std::vector<cplx> ascending);
    static Polynomial from_roots(cplx scale, std::vector<cplx> roots);
    static Polynomial constant(cplx c) { return from_coefficients({c}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; the zero polynomial reports 0.
    int degree() const;
    bool factored() const { return factored_; }

    const std::vector<cplx>& coefficients() const { return coeffs_; }
    const std::vector<cplx>& roots() const { return roots_; }
    cplx scale() const { return scale_; }
    cplx leading_coefficient() const;

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    std::pair<cplx, cplx> value_and_derivative(cplx z) const;

    /// z^degree() * P(1/z); the roots of a factored polynomial map to 1/root.
    Polynomial reversed() const;
    /// z^k * P(z).
    Polynomial shifted(int k) const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(cplx c, const Polynomial& a);

private:
    std::vector<cplx> coeffs_;
    std::vector<cplx> roots_;
    cplx scale_{0.0, 0.0};
    bool factored_ = false;
};

/// Coefficients of prod (z - root_j), ascending.
std::vector<cplx> expand_roots(const std::vector<cplx>& roots);

}  // namespace ratlab
