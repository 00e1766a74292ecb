#include "mirrorwell/connection.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mirrorwell {

namespace {

void require_window(double d, double energy)
{
    if (!(std::abs(d) <= kConditionMaxAbsD) ||
        !(energy > kConditionMinEnergy && energy < kConditionMaxEnergy)) {
        std::ostringstream msg;
        msg << "connection condition outside supported window: d=" << d << ", E=" << energy
            << " (need |d| <= " << kConditionMaxAbsD << ", " << kConditionMinEnergy << " < E < "
            << kConditionMaxEnergy << ")";
        throw std::domain_error(msg.str());
    }
}

// Boundary value (odd) or slope (even) at x = 0 of e^{-s^2/2} Ubar(a; s),
// where s is the signed root at the origin: s = -d for the double well
// (its right piece sits on (x-d)^2) and s = +d for the single well.
ConditionValue boundary_condition(ParitySector sector, double s, double energy)
{
    const KummerParameters p = kummer_params_of_energy(energy);
    const double a = p.a;
    const ExtendedReal z = ExtendedReal::exact_square(s);
    const double rg_regular = gamma_reciprocal(a + 0.5);
    const double rg_singular = gamma_reciprocal(a);
    const KummerParameters p_regular{a, 0.5};
    const KummerParameters p_singular{a + 0.5, 1.5};

    ExtendedReal regular(0.0);
    ExtendedReal singular(0.0);
    if (sector == ParitySector::Odd) {
        if (rg_regular != 0.0) {
            regular = ExtendedReal(rg_regular) * kummer_1f1_extended(p_regular, z);
        }
        if (rg_singular != 0.0) {
            singular = ExtendedReal(-2.0 * rg_singular) * ExtendedReal(s) *
                       kummer_1f1_extended(p_singular, z);
        }
    } else {
        if (rg_regular != 0.0) {
            const ExtendedReal bracket =
                kummer_1f1_extended(p_regular, z) -
                ExtendedReal(2.0) * kummer_1f1_derivative_extended(p_regular, z);
            regular = ExtendedReal(-rg_regular) * ExtendedReal(s) * bracket;
        }
        if (rg_singular != 0.0) {
            const ExtendedReal bracket =
                (ExtendedReal(1.0) - z) * kummer_1f1_extended(p_singular, z) +
                ExtendedReal(2.0) * z * kummer_1f1_derivative_extended(p_singular, z);
            singular = ExtendedReal(-2.0 * rg_singular) * bracket;
        }
    }
    const double term_scale = std::abs(regular.value()) + std::abs(singular.value());
    return ConditionValue::from(regular + singular, term_scale);
}

}  // namespace

std::string_view to_string(ParitySector sector)
{
    return sector == ParitySector::Even ? "even" : "odd";
}

std::string_view to_string(WellKind kind)
{
    return kind == WellKind::Double ? "D" : "S";
}

ConditionValue ConditionValue::from(const ExtendedReal& value, double term_scale)
{
    ConditionValue out;
    out.term_scale = term_scale;
    const double v = value.to_double();
    if (v == 0.0) {
        return out;
    }
    int exponent = 0;
    const double frac = std::frexp(v, &exponent);  // |frac| in [0.5, 1)
    out.mantissa = 2.0 * frac;
    out.scale_exponent = exponent - 1;
    out.raw_sign = v > 0.0 ? 1 : -1;
    return out;
}

double ConditionValue::to_double() const { return std::ldexp(mantissa, scale_exponent); }

double ConditionValue::relative() const
{
    if (raw_sign == 0) {
        return 0.0;
    }
    return term_scale > 0.0 ? std::abs(to_double()) / term_scale : 1.0;
}

KummerParameters kummer_params_of_energy(double energy)
{
    return {(1.0 - energy) / 4.0, 0.5};
}

WellKind dual(WellKind kind)
{
    return kind == WellKind::Double ? WellKind::Single : WellKind::Double;
}

ConditionValue condition(WellKind kind, ParitySector sector, double d, double energy)
{
    require_window(d, energy);
    const double root_at_origin = kind == WellKind::Double ? -d : d;
    return boundary_condition(sector, root_at_origin, energy);
}

ConditionValue duality_image(WellKind kind, ParitySector sector, double d, double energy)
{
    return condition(kind, sector, -d, energy);
}

}  // namespace mirrorwell
