#include "mirrorwell/specfun.hpp"

#include <cmath>
#include <sstream>

namespace mirrorwell {

namespace {

constexpr double kSqrtTwoPi = 2.50662827463100050241576528481104525;
constexpr double kIntegerProximity = 1e-12;

// Lanczos approximation, g = 7, nine terms. Valid for a >= 0.5.
double lanczos_gamma_reciprocal(double a)
{
    static constexpr double kG = 7.0;
    static constexpr double kCoef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    const double x = a - 1.0;
    double series = kCoef[0];
    for (int i = 1; i < 9; ++i) {
        series += kCoef[i] / (x + i);
    }
    const double t = x + kG + 0.5;
    if (a < 120.0) {
        return std::exp(t) / (kSqrtTwoPi * std::pow(t, x + 0.5) * series);
    }
    return std::exp(t - (x + 0.5) * std::log(t) - std::log(kSqrtTwoPi * series));
}

ExtendedReal kummer_series(double a, double b, const ExtendedReal& z)
{
    if (!(std::abs(z.value()) <= kKummerMaxAbsZ)) {
        std::ostringstream msg;
        msg << "kummer_1f1: |z| = " << std::abs(z.value()) << " exceeds supported range "
            << kKummerMaxAbsZ;
        throw SeriesRangeError(msg.str());
    }
    if (b <= 0.0 && b == std::nearbyint(b)) {
        throw std::domain_error("kummer_1f1: b must not be a non-positive integer");
    }

    ExtendedReal term(1.0);
    ExtendedReal sum(1.0);
    if (z.is_zero()) {
        return sum;
    }
    for (int k = 0; k < kKummerTermCap; ++k) {
        const ExtendedReal num = (ExtendedReal(a) + ExtendedReal(k)) * z;
        if (num.is_zero()) {
            return sum;  // a is a non-positive integer: the series terminated
        }
        const ExtendedReal den = (ExtendedReal(b) + ExtendedReal(k)) * ExtendedReal(k + 1.0);
        term *= num / den;
        sum += term;
        const bool past_sign_changes = (k + 1) > -a;
        const bool shrinking = std::abs(num.value()) < std::abs(den.value());
        if (past_sign_changes && shrinking &&
            std::abs(term.value()) <= 1e-34 * std::abs(sum.value())) {
            return sum;
        }
    }
    std::ostringstream msg;
    msg << "kummer_1f1: no convergence after " << kKummerTermCap << " terms (a=" << a
        << ", b=" << b << ", z=" << z.to_double() << ")";
    throw SeriesRangeError(msg.str());
}

}  // namespace

double gamma_reciprocal(double a)
{
    if (a >= 0.5) {
        return lanczos_gamma_reciprocal(a);
    }
    const double nearest = std::nearbyint(a);
    const double frac = a - nearest;
    if (nearest <= 0.0 && std::abs(frac) < kIntegerProximity) {
        return 0.0;
    }
    // Reflection: 1/Gamma(a) = sin(pi a) Gamma(1-a) / pi.
    double sin_pi = std::sin(kPi * frac);
    if (std::fmod(nearest, 2.0) != 0.0) {
        sin_pi = -sin_pi;
    }
    return sin_pi / (kPi * lanczos_gamma_reciprocal(1.0 - a));
}

ExtendedReal kummer_1f1_extended(KummerParameters p, const ExtendedReal& z)
{
    return kummer_series(p.a, p.b, z);
}

double kummer_1f1(KummerParameters p, double z)
{
    return kummer_series(p.a, p.b, ExtendedReal(z)).to_double();
}

ExtendedReal kummer_1f1_derivative_extended(KummerParameters p, const ExtendedReal& z)
{
    if (p.a == 0.0) {
        return ExtendedReal(0.0);
    }
    const ExtendedReal factor = ExtendedReal(p.a) / ExtendedReal(p.b);
    return factor * kummer_series(p.a + 1.0, p.b + 1.0, z);
}

double kummer_1f1_derivative(KummerParameters p, double z)
{
    return kummer_1f1_derivative_extended(p, ExtendedReal(z)).to_double();
}

double kummer_1f1_transformed(KummerParameters p, double z)
{
    const ExtendedReal reflected = kummer_series(p.b - p.a, p.b, ExtendedReal(-z));
    return std::exp(z) * reflected.to_double();
}

UbarEvaluation ubar_signed(double a, double root)
{
    const ExtendedReal z = ExtendedReal::exact_square(root);
    const ExtendedReal s(root);
    const double rg_regular = gamma_reciprocal(a + 0.5);
    const double rg_singular = gamma_reciprocal(a);

    ExtendedReal regular(0.0);
    ExtendedReal regular_slope(0.0);
    if (rg_regular != 0.0) {
        const KummerParameters p{a, 0.5};
        regular = ExtendedReal(rg_regular) * kummer_1f1_extended(p, z);
        regular_slope = ExtendedReal(2.0 * rg_regular) * s * kummer_1f1_derivative_extended(p, z);
    }

    ExtendedReal singular(0.0);
    ExtendedReal singular_slope(0.0);
    if (rg_singular != 0.0) {
        const KummerParameters p{a + 0.5, 1.5};
        const ExtendedReal m = kummer_1f1_extended(p, z);
        const ExtendedReal dm = kummer_1f1_derivative_extended(p, z);
        singular = ExtendedReal(2.0 * rg_singular) * s * m;
        singular_slope = ExtendedReal(2.0 * rg_singular) * (m + ExtendedReal(2.0) * z * dm);
    }

    UbarEvaluation out;
    out.value = regular - singular;
    out.slope = regular_slope - singular_slope;
    out.term_magnitude = std::abs(regular.value()) + std::abs(singular.value());
    return out;
}

double ubar(double a, double z)
{
    if (z < 0.0) {
        throw std::domain_error("ubar: z must be non-negative");
    }
    return ubar_signed(a, std::sqrt(z)).value.to_double();
}

}  // namespace mirrorwell
