#pragma once

#include <stdexcept>

#include "mirrorwell/extended_real.hpp"

namespace mirrorwell {

// Parameters of the Kummer function 1F1(a, b; z). b is a positive
// half-integer on every call path of this library.
struct KummerParameters {
    double a = 0.0;
    double b = 0.5;
};

// Raised when a series leaves its supported range (|z| > 100, term cap hit).
class SeriesRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr int kKummerTermCap = 500;
inline constexpr double kKummerMaxAbsZ = 100.0;

// 1/Gamma(a). Entire; returns exactly 0 within 1e-12 of a non-positive integer.
double gamma_reciprocal(double a);

// 1F1(a, b; z) by direct power series with double-length accumulation.
ExtendedReal kummer_1f1_extended(KummerParameters p, const ExtendedReal& z);
double kummer_1f1(KummerParameters p, double z);

// d/dz 1F1(a, b; z) = (a/b) 1F1(a+1, b+1; z).
ExtendedReal kummer_1f1_derivative_extended(KummerParameters p, const ExtendedReal& z);
double kummer_1f1_derivative(KummerParameters p, double z);

// e^z 1F1(b-a, b; -z). Mathematically equal to kummer_1f1; evaluates the
// series on the opposite side of the origin, so it is an independent route.
double kummer_1f1_transformed(KummerParameters p, double z);

// The decaying combination
//   Ubar(a; s) = 1F1(a, 1/2; s^2)/Gamma(a+1/2) - 2 s 1F1(a+1/2, 3/2; s^2)/Gamma(a)
// for a signed square root s. Ubar is U(a, 1/2; s^2)/sqrt(pi) on s > 0.
struct UbarEvaluation {
    ExtendedReal value;  // Ubar(a; s)
    ExtendedReal slope;  // dUbar/ds
    // |first term| + |second term| of value; measures cancellation.
    double term_magnitude = 0.0;
};
UbarEvaluation ubar_signed(double a, double root);

// Ubar(a, 1/2; z) with the non-negative branch sqrt(z).
double ubar(double a, double z);

// Physicists' Hermite polynomial via H_{k+1} = 2x H_k - 2k H_{k-1}.
template <typename T>
T hermite(int n, T x)
{
    if (n < 0) {
        throw std::invalid_argument("hermite: negative degree");
    }
    T prev = T(1);
    if (n == 0) {
        return prev;
    }
    T cur = T(2) * x;
    for (int k = 1; k < n; ++k) {
        T next = T(2) * x * cur - T(2 * k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Generalized Laguerre polynomial, normalized so L_n^(alpha)(0) = (alpha+1)_n / n!.
template <typename T>
T laguerre(int n, T alpha, T x)
{
    if (n < 0) {
        throw std::invalid_argument("laguerre: negative degree");
    }
    T prev = T(1);
    if (n == 0) {
        return prev;
    }
    T cur = T(1) + alpha - x;
    for (int k = 1; k < n; ++k) {
        T next = ((T(2 * k + 1) + alpha - x) * cur - (T(k) + alpha) * prev) / T(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace mirrorwell
