#pragma once

#include <functional>
#include <vector>

#include "ratlab/circle.hpp"
#include "ratlab/exponent.hpp"

namespace ratlab {

class RationalFunction;

/// A function sampled at points of the unit circle.
using CircleFunction = std::function<cplx(cplx)>;

struct QuadratureConfig {
    long base_nodes = 4096;
    long max_nodes = 1L << 22;
    double rel_tol = 1e-9;
    double pole_margin = 1.0;

    /// base_nodes = max(4096, next power of two >= 64 degree / pole_margin).
    static QuadratureConfig for_degree(int degree, double pole_margin, double rel_tol = 1e-9);
    static QuadratureConfig for_function(const RationalFunction& f, double rel_tol = 1e-9);
    /// This configuration with node counts raised to what f needs.
    QuadratureConfig adapted_to(const RationalFunction& f) const;

    /// Throws DomainError unless base_nodes >= 64, max_nodes >= base_nodes
    /// and rel_tol lies in (0, 1e-2].
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    bool converged = false;
    long nodes = 0;

    /// value, or NoConvergence when the tolerance was not met.
    double checked() const;
};

struct ComplexQuadratureResult {
    cplx value{};
    bool converged = false;
    long nodes = 0;

    cplx checked() const;
};

struct VectorQuadratureResult {
    std::vector<cplx> value;
    bool converged = false;
    long nodes = 0;
};

/// The arc {e^{i theta} : theta_start <= theta <= theta_end}.
class Arc {
public:
    Arc(double theta_start, double theta_end);

    static Arc full() { return Arc(0.0, kTwoPi); }

    double theta_start() const { return start_; }
    double theta_end() const { return end_; }
    double length() const { return end_ - start_; }
    /// Normalized measure length / 2pi.
    double measure() const { return length() / kTwoPi; }

private:
    double start_;
    double end_;
};

/// ||f||_p over the normalized measure; p = inf is the refined grid maximum.
QuadratureResult lp_norm(const CircleFunction& f, Exponent p, const QuadratureConfig& cfg);

/// Integral of f conj(g) dm.
ComplexQuadratureResult inner_product(const CircleFunction& f, const CircleFunction& g,
                                      const QuadratureConfig& cfg);

/// Integral of f dm.
ComplexQuadratureResult circle_integral(const CircleFunction& f, const QuadratureConfig& cfg);

/// Integral over the arc of |f|^p dm, finite p.
QuadratureResult arc_lp_integral(const CircleFunction& f, const Arc& arc, Exponent p,
                                 const QuadratureConfig& cfg);

/// Integral of g(theta) d theta / 2pi over the arc for a real integrand
/// given in angle form.
QuadratureResult arc_integral(const std::function<double(double)>& g, const Arc& arc, const QuadratureConfig& cfg);

/// sup over the arc of |f|, grid maximum plus one parabolic refinement.
QuadratureResult sup_on_arc(const CircleFunction& f, const Arc& arc, const QuadratureConfig& cfg);

/// Integrals over the circle of every component of a vector-valued
/// integrand; fill(theta, out) writes out[0..size).
VectorQuadratureResult circle_integral_vector(const std::function<void(double, cplx*)>& fill, std::size_t size,
                                              const QuadratureConfig& cfg);

}  // namespace ratlab
