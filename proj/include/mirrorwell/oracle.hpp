#pragma once

#include <stdexcept>
#include <vector>

#include "mirrorwell/potentials.hpp"

namespace mirrorwell {

// Symmetric grid x_i = i*step, |i| <= half_width/step, with a node at 0 and
// Dirichlet conditions at both ends.
struct GridSpec {
    double half_width = 14.0;
    double step = 2e-3;
    bool richardson = true;

    static GridSpec defaults(double d) { return {d + 14.0, 2e-3, true}; }
};

struct OracleResult {
    std::vector<double> eigenvalues;  // ascending
    double h_used = 0.0;              // finest step used
    bool extrapolated = false;
    // Richardson runs: max |E(h, h/2 extrapolated) - E(h/2)|. Otherwise 0.
    double est_error = 0.0;
};

// The grid cannot represent the requested levels: too coarse for the
// highest level or too narrow for its tail.
class OracleGridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxOracleCount = 15;

// Lowest `count` eigenvalues of -psi'' + V psi by the 3-point difference
// operator. +infinity potential values remove grid nodes, so walls become
// Dirichlet conditions at the last finite node's neighbour.
OracleResult fd_spectrum(const PotentialSpec& spec, int count, const GridSpec& grid);
OracleResult fd_spectrum(const PotentialSpec& spec, int count);

OracleResult halfline_spectrum(HalfLineSide side, double d, int count, const GridSpec& grid);
OracleResult halfline_spectrum(HalfLineSide side, double d, int count);

enum class KreinAdlerVariant { Double, Single };

// min or max of V_KA(x+d), V_KA(x-d); requires 0 <= d <= 4.
OracleResult ka_double_single_spectrum(KreinAdlerVariant variant, double d, int count,
                                       const GridSpec& grid);
OracleResult ka_double_single_spectrum(KreinAdlerVariant variant, double d, int count);

struct GridFunction {
    std::vector<double> xs;
    std::vector<double> values;  // sum values^2 * step = 1
};

// Eigenvector of the index-th level on a single grid (no extrapolation).
GridFunction fd_eigenvector(const PotentialSpec& spec, int index, const GridSpec& grid);

}  // namespace mirrorwell
