#include "ratlab/circle.hpp"

#include <cmath>

namespace ratlab {

CirclePoint::CirclePoint(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    theta_ = t;
}

CirclePoint CirclePoint::from_complex(cplx z) { return CirclePoint(std::arg(z)); }

cplx CirclePoint::value() const { return {std::cos(theta_), std::sin(theta_)}; }

}  // namespace ratlab
