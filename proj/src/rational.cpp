#include "ratlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratlab/errors.hpp"

namespace ratlab {

namespace {

cplx pole_factor(cplx a, cplx z) { return std::abs(a) < 1.0 ? z - a : 1.0 - z / a; }

Polynomial pole_factor_polynomial(cplx a) {
    if (std::abs(a) < 1.0) return Polynomial::from_coefficients({-a, 1.0});
    return Polynomial::from_coefficients({1.0, -1.0 / a});
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator, PoleSet poles)
    : numerator_(std::move(numerator)), poles_(std::move(poles)) {}

RationalFunction RationalFunction::polynomial(std::vector<cplx> ascending) {
    return RationalFunction(Polynomial::from_coefficients(std::move(ascending)), PoleSet{});
}

int RationalFunction::degree() const { return std::max(numerator_.degree(), poles_.degree()); }

cplx RationalFunction::operator()(cplx z) const {
    poles_.require_clear(z);
    return numerator_(z) / poles_.denominator(z);
}

cplx RationalFunction::derivative(cplx z) const { return value_and_derivative(z).second; }

std::pair<cplx, cplx> RationalFunction::value_and_derivative(cplx z) const {
    poles_.require_clear(z);
    const auto [p, dp] = numerator_.value_and_derivative(z);
    if (poles_.empty()) return {p, dp};
    const cplx q = poles_.denominator(z);
    const cplx lq = poles_.log_derivative(z);
    return {p / q, (dp - p * lq) / q};
}

cplx eval(const RationalFunction& f, cplx z) { return f(z); }

cplx derivative_eval(const RationalFunction& f, cplx z) { return f.derivative(z); }

RationalFunction reflect(const RationalFunction& f) {
    if (f.normalized()) return f;
    const int extra = f.numerator().degree() - f.poles().degree();
    std::vector<Pole> poles;
    for (const Pole& p : f.poles().entries()) {
        if (p.location == cplx(0.0))
            throw DomainError("reflect: f has poles at both 0 and infinity; deg P <= deg Q is unreachable");
        poles.push_back({1.0 / p.location, p.multiplicity});
    }
    poles.push_back({0.0, extra});
    double guard = f.poles().guard();
    for (const Pole& p : poles) guard = std::min(guard, std::abs(std::abs(p.location) - 1.0));
    return RationalFunction(f.numerator().reversed(), PoleSet(std::move(poles), guard));
}

PoleSet perturb_to_distinct(const PoleSet& poles, double delta) {
    if (!(delta > 0.0) || !(delta < poles.guard() / 2.0))
        throw DomainError("perturb_to_distinct: delta must lie in (0, guard/2)");
    std::vector<Pole> out;
    for (const Pole& p : poles.entries()) {
        if (p.multiplicity == 1) {
            out.push_back(p);
            continue;
        }
        const double dist = std::abs(std::abs(p.location) - 1.0);
        if (dist - delta < poles.guard()) {
            std::ostringstream msg;
            msg << "perturbing pole " << p.location << " by " << delta << " would enter the guard band";
            throw GuardViolation(msg.str());
        }
        for (int j = 0; j < p.multiplicity; ++j) {
            const double angle = kTwoPi * j / p.multiplicity;
            out.push_back({p.location + std::polar(delta, angle), 1});
        }
    }
    return PoleSet(std::move(out), poles.guard());
}

RationalFunction perturb_to_distinct(const RationalFunction& f, double delta) {
    return RationalFunction(f.numerator(), perturb_to_distinct(f.poles(), delta));
}

PartialFraction::PartialFraction(cplx constant, std::vector<InsideTerm> inside,
                                 std::vector<OutsideTerm> outside, double guard)
    : constant_(constant), inside_(std::move(inside)), outside_(std::move(outside)), guard_(guard) {
    for (const InsideTerm& t : inside_)
        if (!(std::abs(t.pole) <= 1.0 - guard)) throw GuardViolation("inside partial-fraction pole too close to the circle");
    for (const OutsideTerm& t : outside_)
        if (!(std::abs(t.mu_conj) < 1.0) || !(1.0 / std::abs(t.mu_conj) - 1.0 >= guard))
            throw GuardViolation("outside partial-fraction pole too close to the circle");
    if (!poles().distinct()) throw DomainError("partial-fraction poles must be pairwise distinct");
}

PoleSet PartialFraction::poles() const {
    std::vector<Pole> p;
    for (const InsideTerm& t : inside_) p.push_back({t.pole, 1});
    for (const OutsideTerm& t : outside_) p.push_back({t.pole(), 1});
    return PoleSet(std::move(p), guard_);
}

cplx PartialFraction::operator()(cplx z) const {
    cplx s = constant_;
    for (const InsideTerm& t : inside_) s += t.coefficient / (z - t.pole);
    for (const OutsideTerm& t : outside_) s += t.coefficient / (1.0 - t.mu_conj * z);
    return s;
}

cplx PartialFraction::derivative(cplx z) const {
    cplx s = 0.0;
    for (const InsideTerm& t : inside_) {
        const cplx w = z - t.pole;
        s -= t.coefficient / (w * w);
    }
    for (const OutsideTerm& t : outside_) {
        const cplx w = 1.0 - t.mu_conj * z;
        s += t.coefficient * t.mu_conj / (w * w);
    }
    return s;
}

RationalFunction PartialFraction::to_rational() const {
    std::vector<cplx> locations;
    std::vector<cplx> coefficients;
    for (const InsideTerm& t : inside_) {
        locations.push_back(t.pole);
        coefficients.push_back(t.coefficient);
    }
    for (const OutsideTerm& t : outside_) {
        locations.push_back(t.pole());
        coefficients.push_back(t.coefficient);
    }
    // P = a Q + sum_k coeff_k Q / factor_k
    Polynomial q = Polynomial::constant(1.0);
    for (const cplx& a : locations) q = q * pole_factor_polynomial(a);
    Polynomial p = constant_ * q;
    for (std::size_t k = 0; k < locations.size(); ++k) {
        Polynomial rest = Polynomial::constant(coefficients[k]);
        for (std::size_t j = 0; j < locations.size(); ++j)
            if (j != k) rest = rest * pole_factor_polynomial(locations[j]);
        p = p + rest;
    }
    return RationalFunction(std::move(p), poles());
}

PartialFraction to_partial_fractions(const RationalFunction& f) {
    if (!f.normalized()) throw DomainError("to_partial_fractions requires deg P <= deg Q; reflect first");
    const PoleSet& poles = f.poles();
    if (!poles.distinct()) throw DomainError("to_partial_fractions requires distinct poles; perturb first");
    const auto& entries = poles.entries();
    std::vector<InsideTerm> inside;
    std::vector<OutsideTerm> outside;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const cplx a = entries[k].location;
        cplx rest = 1.0;
        for (std::size_t j = 0; j < entries.size(); ++j)
            if (j != k) rest *= pole_factor(entries[j].location, a);
        const cplx residue = f.numerator()(a) / rest;
        if (std::abs(a) < 1.0)
            inside.push_back({a, residue});
        else
            outside.push_back({1.0 / a, residue});
    }
    cplx constant = 0.0;
    if (!f.numerator().is_zero() && f.numerator().degree() == poles.degree()) {
        cplx lead_q = 1.0;
        for (const Pole& p : entries)
            if (std::abs(p.location) > 1.0) lead_q *= -1.0 / p.location;
        constant = f.numerator().leading_coefficient() / lead_q;
    }
    return PartialFraction(constant, std::move(inside), std::move(outside), poles.guard());
}

}  // namespace ratlab
