#include "ratlab/random.hpp"

#include <cmath>

#include "ratlab/errors.hpp"

namespace ratlab {

namespace {

double uniform(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

cplx random_pole(Rng& rng, double margin) {
    const double angle = kTwoPi * uniform(rng);
    if (uniform(rng) < 0.5) {
        const double rad = (1.0 - margin) * std::sqrt(uniform(rng));
        return std::polar(rad, angle);
    }
    const double rad = 1.0 + margin + (2.0 - margin) * uniform(rng);
    return std::polar(rad, angle);
}

}  // namespace

cplx standard_complex_normal(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    const double re = gauss(rng);
    const double im = gauss(rng);
    return {re, im};
}

PoleSet random_simple_poles(Rng& rng, int n, double margin) {
    if (n < 0 || !(margin > 0.0 && margin < 1.0)) throw DomainError("random_simple_poles: bad arguments");
    std::vector<Pole> poles;
    while (static_cast<int>(poles.size()) < n) {
        const cplx a = random_pole(rng, margin);
        bool clear = true;
        for (const Pole& p : poles) clear = clear && std::abs(p.location - a) >= 1e-3;
        if (clear) poles.push_back({a, 1});
    }
    return PoleSet(std::move(poles), std::min(margin, kDefaultPoleGuard));
}

PartialFraction random_partial_fraction(Rng& rng, int n, double margin) {
    const PoleSet poles = random_simple_poles(rng, n, margin);
    const cplx a = standard_complex_normal(rng);
    std::vector<InsideTerm> inside;
    std::vector<OutsideTerm> outside;
    for (const Pole& p : poles.entries()) {
        const cplx c = standard_complex_normal(rng);
        if (std::abs(p.location) < 1.0)
            inside.push_back({p.location, c});
        else
            outside.push_back({1.0 / p.location, c});
    }
    return PartialFraction(a, std::move(inside), std::move(outside), poles.guard());
}

RationalFunction random_rational(Rng& rng, int n, double margin, bool repeats) {
    std::vector<Pole> entries;
    int used = 0;
    while (used < n) {
        const int left = n - used;
        int m = 1;
        if (repeats && left > 1 && uniform(rng) < 0.3) m = 2 + static_cast<int>(uniform(rng) * (left - 1));
        m = std::min(m, left);
        const cplx a = random_pole(rng, margin);
        bool clear = true;
        for (const Pole& p : entries) clear = clear && std::abs(p.location - a) >= 1e-3;
        if (!clear) continue;
        entries.push_back({a, m});
        used += m;
    }
    std::vector<cplx> coeffs;
    for (int k = 0; k <= n; ++k) coeffs.push_back(standard_complex_normal(rng));
    return RationalFunction(Polynomial::from_coefficients(std::move(coeffs)),
                            PoleSet(std::move(entries), std::min(margin, kDefaultPoleGuard)));
}

BlaschkeProduct random_blaschke(Rng& rng, int d, double max_modulus) {
    std::vector<cplx> zeros;
    for (int k = 0; k < d; ++k) zeros.push_back(std::polar(max_modulus * std::sqrt(uniform(rng)), kTwoPi * uniform(rng)));
    return BlaschkeProduct(std::move(zeros));
}

CirclePoint random_circle_point(Rng& rng) { return CirclePoint(kTwoPi * uniform(rng)); }

}  // namespace ratlab
