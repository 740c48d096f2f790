#pragma once

#include <complex>
#include <numbers>

namespace ratlab {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point e^{i theta} of the unit circle, stored by its angle in [0, 2pi).
class CirclePoint {
public:
    constexpr CirclePoint() = default;
    explicit CirclePoint(double theta);

    /// Nearest circle point in angle; `z` need not be unimodular.
    static CirclePoint from_complex(cplx z);

    double theta() const { return theta_; }
    cplx value() const;

private:
    double theta_ = 0.0;
};

}  // namespace ratlab
