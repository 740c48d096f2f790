#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace ratlab {

/// A Lebesgue exponent p in [1, inf].
///
/// Every computation that needs 1/p goes through reciprocal(), which maps
/// infinity to exactly 0. The token "inf" is used for infinity in text form.
class Exponent {
public:
    Exponent(double value);  // NOLINT(google-explicit-constructor)

    static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }
    static Exponent parse(std::string_view text);

    double value() const { return value_; }
    bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
    double reciprocal() const { return is_infinite() ? 0.0 : 1.0 / value_; }
    /// Hoelder conjugate p' with 1/p + 1/p' = 1.
    Exponent conjugate() const;

    std::string to_string() const;

    friend bool operator==(Exponent a, Exponent b) { return a.value_ == b.value_; }
    friend auto operator<=>(Exponent a, Exponent b) { return a.value_ <=> b.value_; }

private:
    double value_;
};

/// base^e with 0^e = 0 for every e, including e = 0.
double power_or_zero(double base, double e);

}  // namespace ratlab
