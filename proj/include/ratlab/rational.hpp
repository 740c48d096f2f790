#pragma once

#include <utility>
#include <vector>

#include "ratlab/poles.hpp"
#include "ratlab/polynomial.hpp"

namespace ratlab {

/// f = P/Q with Q given by its poles (see PoleSet::denominator).
///
/// deg f = max(deg P, deg Q). Instances with deg P > deg Q are legal and
/// evaluate normally; operations that rely on the partial-fraction form
/// require normalized() and reflect() produces it.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Polynomial numerator, PoleSet poles);

    static RationalFunction polynomial(std::vector<cplx> ascending);

    const Polynomial& numerator() const { return numerator_; }
    const PoleSet& poles() const { return poles_; }
    int degree() const;
    bool normalized() const { return numerator_.degree() <= poles_.degree(); }

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    std::pair<cplx, cplx> value_and_derivative(cplx z) const;

private:
    Polynomial numerator_;
    PoleSet poles_;
};

cplx eval(const RationalFunction& f, cplx z);
cplx derivative_eval(const RationalFunction& f, cplx z);

/// g(z) = f(1/z), normalized so that deg P <= deg Q. Identity when f is
/// already normalized. On the circle |g(xi)| = |f(conj xi)| and
/// |g'(xi)| = |f'(conj xi)|.
RationalFunction reflect(const RationalFunction& f);

/// Replaces each pole of multiplicity m > 1 by the m points
/// a + delta e^{2 pi i j/m}. Requires delta < guard/2.
PoleSet perturb_to_distinct(const PoleSet& poles, double delta);
RationalFunction perturb_to_distinct(const RationalFunction& f, double delta);

struct InsideTerm {
    cplx pole;         ///< lambda_bar, |pole| < 1
    cplx coefficient;  ///< c in c/(z - pole)
};

struct OutsideTerm {
    cplx mu_conj;      ///< mu_bar with |mu| < 1; the pole sits at 1/mu_bar
    cplx coefficient;  ///< d in d/(1 - mu_bar z)
    cplx pole() const { return 1.0 / mu_conj; }
};

/// f = a + sum c_k/(z - lambda_bar_k) + sum d_k/(1 - mu_bar_k z) with
/// pairwise distinct poles.
class PartialFraction {
public:
    PartialFraction(cplx constant, std::vector<InsideTerm> inside, std::vector<OutsideTerm> outside,
                    double guard = kDefaultPoleGuard);

    cplx constant() const { return constant_; }
    const std::vector<InsideTerm>& inside() const { return inside_; }
    const std::vector<OutsideTerm>& outside() const { return outside_; }
    int degree() const { return static_cast<int>(inside_.size() + outside_.size()); }

    PoleSet poles() const;
    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    RationalFunction to_rational() const;

private:
    cplx constant_;
    std::vector<InsideTerm> inside_;
    std::vector<OutsideTerm> outside_;
    double guard_;
};

/// Requires normalized() and distinct poles.
PartialFraction to_partial_fractions(const RationalFunction& f);

}  // namespace ratlab
