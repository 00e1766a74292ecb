#include "mirrorwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mirrorwell/root_finding.hpp"

namespace mirrorwell {

namespace {

constexpr double kEnergyCeiling = kConditionMaxEnergy - 1e-9;

void require_inputs(double d, int count)
{
    if (!(d >= 0.0 && d <= kConditionMaxAbsD)) {
        throw std::invalid_argument("spectrum: d must lie in [0, 6]");
    }
    if (count < 1 || count > kMaxSpectrumCount) {
        throw std::invalid_argument("spectrum: count must lie in [1, 20]");
    }
}

struct Window {
    double low = 0.0;
    double high = 0.0;
};

Window resolve_window(WellKind kind, double d, double span, const ScanConfig& config)
{
    Window w;
    const double floor_energy = kind == WellKind::Single ? d * d : 0.0;
    w.low = std::isnan(config.e_min) ? floor_energy : config.e_min;
    w.high = std::isnan(config.e_max) ? d * d + span : config.e_max;
    w.high = std::min(w.high, kEnergyCeiling);
    w.low = std::max(w.low, kConditionMinEnergy + 1e-9);
    if (!(w.low < w.high)) {
        throw std::invalid_argument("spectrum: empty energy window");
    }
    return w;
}

// Coarse grid, plus a fine grid around odd integers for the double well
// where tunnelling pairs crowd together at large d.
std::vector<double> scan_grid(WellKind kind, const Window& w, const ScanConfig& config)
{
    std::vector<double> grid;
    const auto coarse = static_cast<long>(std::ceil((w.high - w.low) / config.coarse_step));
    grid.reserve(static_cast<std::size_t>(coarse) + 1);
    for (long i = 0; i <= coarse; ++i) {
        grid.push_back(std::min(w.low + static_cast<double>(i) * config.coarse_step, w.high));
    }
    if (kind == WellKind::Double && config.degeneracy_window > 0.0 && config.fine_step > 0.0) {
        const auto fine_half = static_cast<long>(config.degeneracy_window / config.fine_step);
        for (double m = 1.0; m < w.high + config.degeneracy_window; m += 2.0) {
            for (long j = -fine_half; j <= fine_half; ++j) {
                const double e = m + static_cast<double>(j) * config.fine_step;
                if (e > w.low && e < w.high) {
                    grid.push_back(e);
                }
            }
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    return grid;
}

// All zeros of one sector's condition inside the window, ascending.
std::vector<EigenvalueRecord> scan_sector(WellKind kind, ParitySector sector, double d,
                                          const Window& w, const ScanConfig& config,
                                          std::vector<std::string>& diagnostics)
{
    auto f = [&](double e) { return condition(kind, sector, d, e).to_double(); };
    const std::vector<double> grid = scan_grid(kind, w, config);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = f(grid[i]);
    }

    std::vector<EigenvalueRecord> found;
    auto make_record = [&](double energy, Bracket bracket, bool converged) {
        EigenvalueRecord r;
        r.kind = kind;
        r.sector = sector;
        r.d = d;
        r.energy = energy;
        r.bracket = bracket;
        r.residual = condition(kind, sector, d, energy).relative();
        r.method = Method::Connection;
        r.converged = converged;
        return r;
    };

    std::size_t last_nonzero = grid.size();  // sentinel: none yet
    bool zero_since_last = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (values[i] == 0.0) {
            const double lo = i > 0 ? grid[i - 1] : grid[i] - config.coarse_step;
            const double hi = i + 1 < grid.size() ? grid[i + 1] : grid[i] + config.coarse_step;
            found.push_back(make_record(grid[i], {lo, hi}, true));
            zero_since_last = true;
            continue;
        }
        if (last_nonzero != grid.size() && !zero_since_last &&
            (values[i] > 0.0) != (values[last_nonzero] > 0.0)) {
            const double lo = grid[last_nonzero];
            const double hi = grid[i];
            const RootResult root = brent_root(f, lo, hi, values[last_nonzero], values[i],
                                               config.refine_tol, config.max_refine_iter);
            if (!root.converged) {
                std::ostringstream msg;
                msg << to_string(kind) << "/" << to_string(sector) << " d=" << d
                    << ": refinement did not converge in [" << lo << ", " << hi << "]";
                diagnostics.push_back(msg.str());
            }
            found.push_back(make_record(root.root, {lo, hi}, root.converged));
        }
        last_nonzero = i;
        zero_since_last = false;
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        found[i].index = static_cast<int>(i);
    }
    return found;
}

std::string exhaustion_message(WellKind kind, std::string_view what, double d, std::size_t got,
                               int wanted, const Window& w)
{
    std::ostringstream msg;
    msg << to_string(kind) << " " << what << " d=" << d << ": found " << got << " of " << wanted
        << " eigenvalues in [" << w.low << ", " << w.high << "]; widen the window";
    return msg.str();
}

}  // namespace

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::Connection:
        return "connection";
    case Method::Polynomial:
        return "polynomial";
    case Method::Oracle:
        return "oracle";
    }
    return "?";
}

void ScanConfig::validate() const
{
    if (!(coarse_step > 0.0)) {
        throw std::invalid_argument("ScanConfig: coarse_step must be positive");
    }
    if (!(refine_tol >= 1e-12)) {
        throw std::invalid_argument("ScanConfig: refine_tol must be >= 1e-12");
    }
    if (max_refine_iter < 1) {
        throw std::invalid_argument("ScanConfig: max_refine_iter must be positive");
    }
    if (!std::isnan(e_min) && !std::isnan(e_max) && !(e_min < e_max)) {
        throw std::invalid_argument("ScanConfig: e_min must be below e_max");
    }
}

SpectrumResult sector_eigenvalues(WellKind kind, ParitySector sector, double d, int count,
                                  const ScanConfig& config)
{
    require_inputs(d, count);
    config.validate();
    // Same-sector levels are two rungs apart.
    const double span = kind == WellKind::Single ? 8.0 * count + 8.0 : 4.0 * count + 8.0;
    const Window w = resolve_window(kind, d, span, config);
    SpectrumResult out;
    out.records = scan_sector(kind, sector, d, w, config, out.diagnostics);
    if (out.records.size() < static_cast<std::size_t>(count)) {
        out.diagnostics.push_back(
            exhaustion_message(kind, to_string(sector), d, out.records.size(), count, w));
    } else {
        out.records.resize(static_cast<std::size_t>(count));
    }
    return out;
}

SpectrumResult find_eigenvalues(WellKind kind, double d, int count, const ScanConfig& config)
{
    require_inputs(d, count);
    config.validate();
    // Single-well levels are spaced wider than 2 once d grows.
    const double span = kind == WellKind::Single ? 4.0 * count + 8.0 : 2.0 * count + 8.0;
    const Window w = resolve_window(kind, d, span, config);
    SpectrumResult out;
    for (ParitySector sector : {ParitySector::Even, ParitySector::Odd}) {
        auto part = scan_sector(kind, sector, d, w, config, out.diagnostics);
        out.records.insert(out.records.end(), part.begin(), part.end());
    }
    std::stable_sort(out.records.begin(), out.records.end(),
                     [](const EigenvalueRecord& x, const EigenvalueRecord& y) {
                         if (x.energy != y.energy) {
                             return x.energy < y.energy;
                         }
                         return x.sector == ParitySector::Even && y.sector == ParitySector::Odd;
                     });
    if (out.records.size() < static_cast<std::size_t>(count)) {
        out.diagnostics.push_back(
            exhaustion_message(kind, "both sectors", d, out.records.size(), count, w));
    } else {
        out.records.resize(static_cast<std::size_t>(count));
    }
    return out;
}

std::vector<SplitLevel> splitting_table(double d, int levels, WellKind kind,
                                        const ScanConfig& config)
{
    const SpectrumResult even = sector_eigenvalues(kind, ParitySector::Even, d, levels, config);
    const SpectrumResult odd = sector_eigenvalues(kind, ParitySector::Odd, d, levels, config);
    if (!even.complete() || !odd.complete()) {
        throw std::runtime_error("splitting_table: could not resolve " + std::to_string(levels) +
                                 " levels per sector");
    }
    std::vector<SplitLevel> table;
    for (int n = 0; n < levels; ++n) {
        const double e = even.records[static_cast<std::size_t>(n)].energy;
        const double o = odd.records[static_cast<std::size_t>(n)].energy;
        table.push_back({n, e, o, o - e});
    }
    return table;
}

}  // namespace mirrorwell
