#pragma once

#include <vector>

#include "mirrorwell/connection.hpp"
#include "mirrorwell/spectrum.hpp"

namespace mirrorwell {

// Separations d at which the level 2n+1 is carried by a single Hermite
// function on each half line. Even: H_n'(d) - d H_n(d) = 0. Odd: H_n(d) = 0.
struct PolynomialParameterSet {
    int n = 0;
    std::vector<double> even_params;  // ascending
    std::vector<double> odd_params;   // ascending
};

inline constexpr int kMaxPolynomialDegree = 100;

// floor(<<n>>/2) with <<n>> = n+1 (n odd), n (n even).
std::size_t expected_even_count(int n);
// floor(<n>/2) with <n> = n+1 (n even), n (n odd).
std::size_t expected_odd_count(int n);

// Upper bound on the largest Hermite zero: sqrt(2n+1) - c (2n+1)^(-1/6).
inline constexpr double kHermiteZeroBoundConstant = 1.85575;
double hermite_zero_bound(int n);

// Positive zeros of H_n, ascending, polished to ~1 ulp.
std::vector<double> odd_params(int n);
// Positive roots of H_n'(d) - d H_n(d), ascending.
std::vector<double> even_params(int n);
PolynomialParameterSet parameter_set(int n);

// Left piece: left_sign e^{-t^2/2} H_n(t) with t = x + left_shift d, on x <= 0;
// right piece likewise on x >= 0.
struct PieceSigns {
    int left = 1;
    int right = 1;
};

struct PolynomialEigenstate {
    int n = 0;
    double d = 0.0;
    ParitySector sector = ParitySector::Even;
    WellKind kind = WellKind::Double;
    double energy = 0.0;  // exactly 2n+1
    PieceSigns signs;
    // Shift of the Hermite argument on each side: t = x + shift * d.
    int left_shift = 1;
    int right_shift = -1;
};

// j is 1-based within the even or odd parameter list of degree n.
PolynomialEigenstate build_eigenstate(int n, int j, ParitySector sector, WellKind kind);

EigenvalueRecord polynomial_record(const PolynomialEigenstate& state, int index_in_sector);

}  // namespace mirrorwell
