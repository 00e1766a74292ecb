#include "mirrorwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mirrorwell/tridiagonal.hpp"

namespace mirrorwell {

namespace {

// Tail decay exponent required beyond the last classical turning point;
// e^{-2*12} in amplitude keeps truncation far below the 1e-8 level.
constexpr double kMinTailAction = 12.0;
// Highest level must be resolved by at least ~12 points per local wavelength.
constexpr double kMaxPhasePerStep = 0.5;

void check_grid(const GridSpec& grid, int count)
{
    if (count < 1 || count > kMaxOracleCount) {
        throw std::invalid_argument("oracle: count must lie in [1, 15]");
    }
    if (!(grid.step > 0.0) || !(grid.half_width > 0.0) || !std::isfinite(grid.half_width)) {
        throw std::invalid_argument("oracle: grid step and half-width must be positive");
    }
    if (grid.half_width < 4.0 * grid.step) {
        throw std::invalid_argument("oracle: grid has too few nodes");
    }
}

struct Discretization {
    std::vector<double> xs;
    std::vector<double> potential;
    SymmetricTridiagonal matrix;
};

Discretization discretize(const PotentialSpec& spec, double half_width, double step)
{
    const auto n = static_cast<long>(std::floor(half_width / step + 1e-9));
    Discretization out;
    bool seen_finite = false;
    bool closed = false;
    // Interior nodes only; the end nodes +-n*step carry the Dirichlet zeros.
    for (long i = -n + 1; i <= n - 1; ++i) {
        const double x = static_cast<double>(i) * step;
        const double v = evaluate(spec, x);
        if (std::isinf(v) && v > 0.0) {
            if (seen_finite) {
                closed = true;
            }
            continue;
        }
        if (closed) {
            throw std::invalid_argument("oracle: potential must be finite on one connected interval");
        }
        seen_finite = true;
        out.xs.push_back(x);
        out.potential.push_back(v);
    }
    if (out.xs.size() < 3) {
        throw std::invalid_argument("oracle: fewer than three finite grid nodes");
    }
    const double inv_h2 = 1.0 / (step * step);
    out.matrix.diagonal.resize(out.xs.size());
    for (std::size_t i = 0; i < out.xs.size(); ++i) {
        out.matrix.diagonal[i] = 2.0 * inv_h2 + out.potential[i];
    }
    out.matrix.off_diagonal.assign(out.xs.size() - 1, -inv_h2);
    return out;
}

// Integral of sqrt(V - E) from the outermost turning point to the end node.
double tail_action(const Discretization& g, double energy, double step, bool from_right)
{
    double action = 0.0;
    const std::size_t n = g.xs.size();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = from_right ? n - 1 - k : k;
        const double excess = g.potential[i] - energy;
        if (excess <= 0.0) {
            break;
        }
        action += std::sqrt(excess) * step;
    }
    return action;
}

void check_resolution(const PotentialSpec& spec, const Discretization& g, double energy,
                      double step)
{
    if (step * std::sqrt(std::max(energy, 0.0)) > kMaxPhasePerStep) {
        std::ostringstream msg;
        msg << "oracle: step " << step << " too coarse for E=" << energy << " ("
            << potential_name(spec) << ")";
        throw OracleGridError(msg.str());
    }
    // A wall end is an exact condition, not a truncation.
    const bool left_open = std::isfinite(evaluate(spec, g.xs.front() - step));
    const bool right_open = std::isfinite(evaluate(spec, g.xs.back() + step));
    const double left = left_open ? tail_action(g, energy, step, false) : kMinTailAction;
    const double right = right_open ? tail_action(g, energy, step, true) : kMinTailAction;
    if (std::min(left, right) < kMinTailAction) {
        std::ostringstream msg;
        msg << "oracle: half-width too small for E=" << energy << " (" << potential_name(spec)
            << ", tail action " << std::min(left, right) << ")";
        throw OracleGridError(msg.str());
    }
}

std::vector<double> single_grid(const PotentialSpec& spec, int count, double half_width,
                                double step)
{
    const Discretization g = discretize(spec, half_width, step);
    if (static_cast<std::size_t>(count) > g.xs.size()) {
        throw OracleGridError("oracle: more levels requested than grid nodes");
    }
    std::vector<double> levels = lowest_eigenvalues(g.matrix, static_cast<std::size_t>(count));
    check_resolution(spec, g, levels.back(), step);
    return levels;
}

}  // namespace

OracleResult fd_spectrum(const PotentialSpec& spec, int count, const GridSpec& grid)
{
    validate(spec);
    check_grid(grid, count);
    OracleResult out;
    const std::vector<double> coarse = single_grid(spec, count, grid.half_width, grid.step);
    if (!grid.richardson) {
        out.eigenvalues = coarse;
        out.h_used = grid.step;
        return out;
    }
    const double fine_step = 0.5 * grid.step;
    const std::vector<double> fine = single_grid(spec, count, grid.half_width, fine_step);
    out.h_used = fine_step;
    out.extrapolated = true;
    out.eigenvalues.resize(fine.size());
    for (std::size_t k = 0; k < fine.size(); ++k) {
        out.eigenvalues[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
        out.est_error = std::max(out.est_error, std::abs(out.eigenvalues[k] - fine[k]));
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

OracleResult fd_spectrum(const PotentialSpec& spec, int count)
{
    return fd_spectrum(spec, count, GridSpec::defaults(spec.d));
}

OracleResult halfline_spectrum(HalfLineSide side, double d, int count, const GridSpec& grid)
{
    return fd_spectrum(PotentialSpec::walled(side, d), count, grid);
}

OracleResult halfline_spectrum(HalfLineSide side, double d, int count)
{
    return halfline_spectrum(side, d, count, GridSpec::defaults(d));
}

OracleResult ka_double_single_spectrum(KreinAdlerVariant variant, double d, int count,
                                       const GridSpec& grid)
{
    if (!(d >= 0.0 && d <= 4.0)) {
        throw std::invalid_argument("ka_double_single_spectrum: d must lie in [0, 4]");
    }
    const Family family =
        variant == KreinAdlerVariant::Double ? Family::KreinAdlerDouble : Family::KreinAdlerSingle;
    return fd_spectrum(PotentialSpec::of(family, d), count, grid);
}

OracleResult ka_double_single_spectrum(KreinAdlerVariant variant, double d, int count)
{
    return ka_double_single_spectrum(variant, d, count, GridSpec::defaults(d));
}

GridFunction fd_eigenvector(const PotentialSpec& spec, int index, const GridSpec& grid)
{
    validate(spec);
    check_grid(grid, index + 1);
    const Discretization g = discretize(spec, grid.half_width, grid.step);
    const std::vector<double> levels =
        lowest_eigenvalues(g.matrix, static_cast<std::size_t>(index) + 1);
    check_resolution(spec, g, levels.back(), grid.step);
    GridFunction out;
    out.xs = g.xs;
    out.values = eigenvector(g.matrix, levels.back());
    const double scale = 1.0 / std::sqrt(grid.step);
    for (double& v : out.values) {
        v *= scale;
    }
    return out;
}

}  // namespace mirrorwell
