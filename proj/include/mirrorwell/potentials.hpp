#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mirrorwell/specfun.hpp"

namespace mirrorwell {

enum class Family {
    HarmonicShifted,   // (x + shift_sign d)^2
    DoubleMin,         // min[(x+d)^2, (x-d)^2]
    SingleMax,         // max[(x+d)^2, (x-d)^2]
    LinearDouble,      // min[g^3|x+d|, g^3|x-d|]
    LinearSingle,      // max[g^3|x+d|, g^3|x-d|]
    KreinAdler,        // harmonic oscillator with levels 1, 2 deleted
    KreinAdlerDouble,  // min[V_KA(x+d), V_KA(x-d)]
    KreinAdlerSingle,  // max[V_KA(x+d), V_KA(x-d)]
    HalfLineWalled,    // one half of D or S behind an impenetrable wall at 0
};

enum class HalfLineSide { DR, DL, SR, SL };

struct PotentialSpec {
    Family family = Family::DoubleMin;
    double d = 0.0;
    double g = 1.0;
    int shift_sign = +1;
    HalfLineSide side = HalfLineSide::DR;

    static PotentialSpec harmonic(double d, int shift_sign = +1)
    {
        return {Family::HarmonicShifted, d, 1.0, shift_sign, HalfLineSide::DR};
    }
    static PotentialSpec of(Family family, double d = 0.0, double g = 1.0)
    {
        return {family, d, g, +1, HalfLineSide::DR};
    }
    static PotentialSpec walled(HalfLineSide side, double d)
    {
        return {Family::HalfLineWalled, d, 1.0, +1, side};
    }
};

// Throws std::invalid_argument on d < 0 or g <= 0.
void validate(const PotentialSpec& spec);

bool is_mirror_symmetric(Family family);

// Pointwise value; +infinity on the closed forbidden half-line of a wall.
double evaluate(const PotentialSpec& spec, double x);

double krein_adler(double x);

// Stable CLI names: "D", "S", "L-D", "L-S", "KA", "KA-D", "KA-S",
// "DR", "DL", "SR", "SL", "H+", "H-" (and "H" for "H+").
PotentialSpec parse_potential(std::string_view name, double d, double g = 1.0);
std::string potential_name(const PotentialSpec& spec);

// Krein-Adler levels are 2n for n >= 0 except the deleted n = 1, 2.
double ka_eigenvalue(int n);

inline void require_ka_index(int n)
{
    if (n < 0 || n == 1 || n == 2) {
        throw std::invalid_argument("Krein-Adler index must be >= 0 and not 1 or 2");
    }
}

// Wronskian W[H_1, H_2, H_n](x) from Hermite values and H_k' = 2k H_{k-1}.
template <typename T>
T ka_wronskian(int n, T x)
{
    const T h1 = T(2) * x;
    const T dh1 = T(2);
    const T h2 = T(4) * x * x - T(2);
    const T dh2 = T(8) * x;
    const T ddh2 = T(8);
    const T hn = hermite(n, x);
    const T dhn = n >= 1 ? T(2 * n) * hermite(n - 1, x) : T(0);
    const T ddhn = n >= 2 ? T(4 * n * (n - 1)) * hermite(n - 2, x) : T(0);
    // Cofactor expansion along the first row (d^2 H_1/dx^2 = 0).
    return h1 * (dh2 * ddhn - dhn * ddh2) - h2 * (dh1 * ddhn) + hn * (dh1 * ddh2);
}

template <typename T>
T ka_eigenfunction(int n, T x)
{
    require_ka_index(n);
    using std::exp;
    return exp(-x * x / T(2)) * ka_wronskian(n, x) / (T(4) * (T(2) * x * x + T(1)));
}

template <typename T>
T krein_adler_t(T x)
{
    const T q = T(2) * x * x + T(1);
    return x * x + T(3) + T(32) * x * x / (q * q) - T(8) / q;
}

}  // namespace mirrorwell
