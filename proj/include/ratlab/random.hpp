#pragma once

#include <cstdint>
#include <random>

#include "ratlab/blaschke.hpp"
#include "ratlab/rational.hpp"

namespace ratlab {

using Rng = std::mt19937_64;

/// Real and imaginary parts independent N(0, 1/2), so E|z|^2 = 1.
cplx standard_complex_normal(Rng& rng);

/// n distinct simple poles, each inside or outside with equal odds, all at
/// distance >= margin from the circle and within 3 of the origin; pairwise
/// separation at least 1e-3.
PoleSet random_simple_poles(Rng& rng, int n, double margin);

/// a + sum c/(z - lambda) + sum d/(1 - mu z) with n terms and standard
/// complex normal coefficients.
PartialFraction random_partial_fraction(Rng& rng, int n, double margin);

/// P/Q with deg P <= n, random simple poles of total degree n (some may be
/// repeated when `repeats` is set) and standard complex normal numerator
/// coefficients.
RationalFunction random_rational(Rng& rng, int n, double margin, bool repeats = false);

/// d zeros drawn uniformly from the disc of radius max_modulus.
BlaschkeProduct random_blaschke(Rng& rng, int d, double max_modulus);

/// Uniform point of the circle.
CirclePoint random_circle_point(Rng& rng);

}  // namespace ratlab
