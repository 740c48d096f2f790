#include "ratlab/poles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ratlab/errors.hpp"

namespace ratlab {

namespace {

bool is_inside(cplx a) { return std::abs(a) < 1.0; }

}  // namespace

PoleSet::PoleSet(std::vector<Pole> entries, double guard) : guard_(guard) {
    if (!(guard > 0.0)) throw DomainError("pole guard must be positive");
    for (const Pole& p : entries) {
        if (p.multiplicity < 1) throw DomainError("pole multiplicity must be positive");
        const double dist = std::abs(std::abs(p.location) - 1.0);
        if (!(dist >= guard)) {
            std::ostringstream msg;
            msg << "pole " << p.location << " lies within " << guard << " of the unit circle";
            throw GuardViolation(msg.str());
        }
        auto same = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const Pole& q) { return q.location == p.location; });
        if (same != entries_.end())
            same->multiplicity += p.multiplicity;
        else
            entries_.push_back(p);
    }
}

PoleSet PoleSet::single(cplx location, int multiplicity, double guard) {
    return PoleSet({{location, multiplicity}}, guard);
}

int PoleSet::n_inside() const {
    int n = 0;
    for (const Pole& p : entries_)
        if (is_inside(p.location)) n += p.multiplicity;
    return n;
}

int PoleSet::n_outside() const {
    int n = 0;
    for (const Pole& p : entries_)
        if (!is_inside(p.location)) n += p.multiplicity;
    return n;
}

bool PoleSet::distinct() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Pole& p) { return p.multiplicity == 1; });
}

double PoleSet::margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const Pole& p : entries_) m = std::min(m, std::abs(std::abs(p.location) - 1.0));
    return m;
}

double PoleSet::class_radius() const {
    double r = 0.0;
    for (const Pole& p : entries_) {
        const double a = std::abs(p.location);
        r = std::max(r, a < 1.0 ? a : 1.0 / a);
    }
    return r;
}

std::vector<cplx> PoleSet::expanded() const {
    std::vector<cplx> out;
    for (const Pole& p : entries_) out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), p.location);
    return out;
}

std::vector<cplx> PoleSet::expanded_inside() const { return split_poles(*this).inside; }

std::vector<cplx> PoleSet::expanded_outside() const { return split_poles(*this).outside; }

PoleSet PoleSet::with_guard(double guard) const { return PoleSet(entries_, guard); }

cplx PoleSet::denominator(cplx z) const {
    cplx q = 1.0;
    for (const Pole& p : entries_) {
        const cplx factor = is_inside(p.location) ? z - p.location : 1.0 - z / p.location;
        for (int k = 0; k < p.multiplicity; ++k) q *= factor;
    }
    return q;
}

cplx PoleSet::log_derivative(cplx z) const {
    cplx s = 0.0;
    for (const Pole& p : entries_) {
        // d/dz log(1 - z/a) = 1/(z - a) as well.
        s += static_cast<double>(p.multiplicity) / (z - p.location);
    }
    return s;
}

void PoleSet::require_clear(cplx z) const {
    for (const Pole& p : entries_) {
        if (std::abs(z - p.location) < guard_) {
            std::ostringstream msg;
            msg << "evaluation point " << z << " is within the guard band of pole " << p.location;
            throw PoleProximity(msg.str());
        }
    }
}

PoleSplit split_poles(const PoleSet& poles) {
    PoleSplit split;
    for (const Pole& p : poles.entries()) {
        auto& side = is_inside(p.location) ? split.inside : split.outside;
        side.insert(side.end(), static_cast<std::size_t>(p.multiplicity), p.location);
    }
    return split;
}

}  // namespace ratlab
