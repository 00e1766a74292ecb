#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "mirrorwell/connection.hpp"

namespace mirrorwell {

enum class Method { Connection, Polynomial, Oracle };

std::string_view to_string(Method method);

struct Bracket {
    double low = 0.0;
    double high = 0.0;
};

struct EigenvalueRecord {
    WellKind kind = WellKind::Double;
    ParitySector sector = ParitySector::Even;
    int index = 0;  // ordinal within the sector
    double d = 0.0;
    double energy = 0.0;
    Bracket bracket;
    double residual = 0.0;  // |condition| / term scale at the energy
    Method method = Method::Connection;
    bool converged = true;
};

// NaN window bounds mean "choose from d and the requested count".
struct ScanConfig {
    double e_min = std::numeric_limits<double>::quiet_NaN();
    double e_max = std::numeric_limits<double>::quiet_NaN();
    double coarse_step = 0.02;
    double refine_tol = 1e-10;
    int max_refine_iter = 200;
    // Half-width of the window around each odd integer that is rescanned at fine_step.
    double degeneracy_window = 0.05;
    double fine_step = 1e-4;

    void validate() const;
};

// Records plus soft diagnostics (window exhausted, refinement failures).
struct SpectrumResult {
    std::vector<EigenvalueRecord> records;
    std::vector<std::string> diagnostics;

    bool complete() const { return diagnostics.empty(); }
};

inline constexpr int kMaxSpectrumCount = 20;

// The `count` lowest eigenvalues over both sectors, ascending; ties at d = 0
// list the even record first.
SpectrumResult find_eigenvalues(WellKind kind, double d, int count,
                                const ScanConfig& config = {});

SpectrumResult sector_eigenvalues(WellKind kind, ParitySector sector, double d, int count,
                                  const ScanConfig& config = {});

struct SplitLevel {
    int n = 0;
    double even = 0.0;
    double odd = 0.0;
    double gap = 0.0;  // odd - even
};

std::vector<SplitLevel> splitting_table(double d, int levels, WellKind kind = WellKind::Double,
                                        const ScanConfig& config = {});

}  // namespace mirrorwell
