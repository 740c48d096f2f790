#include "ratlab/exponent.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "ratlab/errors.hpp"

namespace ratlab {

Exponent::Exponent(double value) : value_(value) {
    if (!(value >= 1.0)) throw DomainError("exponent must lie in [1, inf], got " + std::to_string(value));
}

Exponent Exponent::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
    std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("cannot parse exponent '" + s + "'");
    }
    if (used != s.size()) throw DomainError("cannot parse exponent '" + s + "'");
    return Exponent(v);
}

Exponent Exponent::conjugate() const {
    if (is_infinite()) return Exponent(1.0);
    if (value_ == 1.0) return infinity();
    return Exponent(value_ / (value_ - 1.0));
}

std::string Exponent::to_string() const {
    if (is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
}

double power_or_zero(double base, double e) { return base == 0.0 ? 0.0 : std::pow(base, e); }

}  // namespace ratlab
