#pragma once

#include <string_view>

#include "mirrorwell/specfun.hpp"

namespace mirrorwell {

// Even states obey the Neumann condition psi'(0) = 0, odd states the
// Dirichlet condition psi(0) = 0.
enum class ParitySector { Even, Odd };

// Double: min[(x+d)^2, (x-d)^2]. Single: max[(x+d)^2, (x-d)^2].
enum class WellKind { Double, Single };

std::string_view to_string(ParitySector sector);
std::string_view to_string(WellKind kind);

// Value = mantissa * 2^scale_exponent with |mantissa| in [1, 2), or the
// canonical zero. term_scale is the size of the largest cancelling term,
// so |value| / term_scale is a relative residual.
struct ConditionValue {
    double mantissa = 0.0;
    int scale_exponent = 0;
    int raw_sign = 0;
    double term_scale = 0.0;

    static ConditionValue from(const ExtendedReal& value, double term_scale);

    double to_double() const;
    double relative() const;

    friend bool operator==(const ConditionValue&, const ConditionValue&) = default;
};

// Supported window of the connection conditions.
inline constexpr double kConditionMaxAbsD = 6.0;
inline constexpr double kConditionMinEnergy = -1.0;
inline constexpr double kConditionMaxEnergy = 60.0;

// a = (1 - E)/4, b = 1/2.
KummerParameters kummer_params_of_energy(double energy);

// Left-hand side of the connection condition whose zeros in E are the
// eigenvalues of the given well and sector, with the common e^{d^2/2}
// factor removed. Accepts signed d in [-6, 6]; E in (-1, 60).
ConditionValue condition(WellKind kind, ParitySector sector, double d, double energy);

// The other well's condition, obtained by evaluating this well's formula at -d.
ConditionValue duality_image(WellKind kind, ParitySector sector, double d, double energy);

WellKind dual(WellKind kind);

}  // namespace mirrorwell
