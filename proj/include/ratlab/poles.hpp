#pragma once

#include <vector>

#include "ratlab/circle.hpp"

namespace ratlab {

inline constexpr double kDefaultPoleGuard = 1e-6;

struct Pole {
    cplx location;
    int multiplicity = 1;
};

/// Multiset of poles kept away from the unit circle by a guard band.
///
/// Identical locations are merged on construction. Every location satisfies
/// ||a| - 1| >= guard; a pole at the origin is legal (it arises from
/// reflecting a polynomial part).
class PoleSet {
public:
    PoleSet() = default;
    explicit PoleSet(std::vector<Pole> entries, double guard = kDefaultPoleGuard);

    /// All poles at one location.
    static PoleSet single(cplx location, int multiplicity, double guard = kDefaultPoleGuard);

    const std::vector<Pole>& entries() const { return entries_; }
    double guard() const { return guard_; }
    bool empty() const { return entries_.empty(); }

    /// Total multiplicity inside the disc.
    int n_inside() const;
    /// Total multiplicity outside the closed disc.
    int n_outside() const;
    int degree() const { return n_inside() + n_outside(); }
    bool distinct() const;
    /// Smallest distance of a pole to the circle; +inf when empty.
    double margin() const;
    /// Smallest r in [0, 1) with every pole outside the annulus r < |z| < 1/r.
    double class_radius() const;

    /// Locations repeated by multiplicity, in entry order.
    std::vector<cplx> expanded() const;
    std::vector<cplx> expanded_inside() const;
    std::vector<cplx> expanded_outside() const;

    PoleSet with_guard(double guard) const;

    /// Q(z) = prod over poles of (z - a) for |a| < 1 and (1 - z/a) for |a| > 1.
    cplx denominator(cplx z) const;
    /// Q'(z)/Q(z); requires z away from every pole.
    cplx log_derivative(cplx z) const;
    /// Throws PoleProximity when |z - a| < guard for some pole a.
    void require_clear(cplx z) const;

private:
    std::vector<Pole> entries_;
    double guard_ = kDefaultPoleGuard;
};

/// Poles repeated by multiplicity, split by side of the circle. The single
/// routine used by the kernel constructions and the bound formulas.
struct PoleSplit {
    std::vector<cplx> inside;
    std::vector<cplx> outside;
};

PoleSplit split_poles(const PoleSet& poles);

}  // namespace ratlab
