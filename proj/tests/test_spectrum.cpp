#include <doctest.h>

#include <cmath>

#include "mirrorwell/spectrum.hpp"
#include "support.hpp"

using namespace mirrorwell;

namespace {

std::vector<double> table_row(WellKind kind, double d)
{
    const SpectrumResult even = sector_eigenvalues(kind, ParitySector::Even, d, 4);
    const SpectrumResult odd = sector_eigenvalues(kind, ParitySector::Odd, d, 3);
    REQUIRE(even.complete());
    REQUIRE(odd.complete());
    std::vector<double> row;
    for (int k = 0; k < 7; ++k) {
        row.push_back((k % 2 == 0 ? even : odd).records[static_cast<std::size_t>(k / 2)].energy);
    }
    return row;
}

// Printed values carry six significant digits, some rounded and some cut off;
// accept ours if it rounds or truncates to the printed figure.
bool agrees_to_printed_digits(double ours, const testdata::Printed& printed)
{
    const double unit = std::pow(10.0, -printed.decimals());
    const double diff = ours - printed.value();
    return diff >= -0.5 * unit - 1e-12 && diff < unit;
}

}  // namespace

TEST_CASE("double-well levels reproduce the reference table for d > 0")
{
    for (const auto& row : testdata::kDoubleLevels) {
        if (row.d == 0.0) {
            continue;
        }
        const std::vector<double> ours = table_row(WellKind::Double, row.d);
        for (int k = 0; k < 7; ++k) {
            INFO("d=" << row.d << " column " << k << " ours " << ours[k]);
            CHECK(agrees_to_printed_digits(ours[static_cast<std::size_t>(k)], row.levels[k]));
            CHECK(std::abs(ours[static_cast<std::size_t>(k)] - row.levels[k].value()) < 2.5e-5);
        }
    }
}

TEST_CASE("double well at d = 0 is the harmonic oscillator")
{
    const SpectrumResult r = find_eigenvalues(WellKind::Double, 0.0, 7);
    REQUIRE(r.complete());
    for (int k = 0; k < 7; ++k) {
        CHECK(r.records[static_cast<std::size_t>(k)].energy ==
              doctest::Approx(2.0 * k + 1.0).epsilon(1e-11));
        CHECK(r.records[static_cast<std::size_t>(k)].sector ==
              (k % 2 == 0 ? ParitySector::Even : ParitySector::Odd));
    }
}

TEST_CASE("single-well levels reproduce the reference table")
{
    for (const auto& row : testdata::kSingleLevels) {
        const std::vector<double> ours = table_row(WellKind::Single, row.d);
        for (int k = 0; k < 7; ++k) {
            INFO("d=" << row.d << " column " << k << " ours " << ours[k]);
            CHECK(std::abs(ours[static_cast<std::size_t>(k)] - row.levels[k].value()) <=
                  5e-5 * row.levels[k].value());
            CHECK(agrees_to_printed_digits(ours[static_cast<std::size_t>(k)], row.levels[k]));
        }
    }
}

TEST_CASE("levels alternate in parity and single-well levels exceed d^2")
{
    testdata::Generator gen(41);
    for (int trial = 0; trial < 12; ++trial) {
        const double d = gen.uniform(0.05, 4.0);
        for (WellKind kind : {WellKind::Double, WellKind::Single}) {
            const SpectrumResult r = find_eigenvalues(kind, d, 8);
            REQUIRE(r.complete());
            for (std::size_t k = 0; k < r.records.size(); ++k) {
                const auto& rec = r.records[k];
                INFO(to_string(kind) << " d=" << d << " k=" << k << " E=" << rec.energy);
                CHECK(rec.sector == (k % 2 == 0 ? ParitySector::Even : ParitySector::Odd));
                CHECK(rec.index == static_cast<int>(k / 2));
                // The relative residual depends on how strongly the condition's
                // terms cancel; the sign change pins the energy itself.
                CHECK(rec.residual < 1e-6);
                const double lo = condition(kind, rec.sector, d, rec.energy - 2e-10).to_double();
                const double hi = condition(kind, rec.sector, d, rec.energy + 2e-10).to_double();
                CHECK(lo * hi <= 0.0);
                CHECK(rec.converged);
                CHECK(rec.method == Method::Connection);
                if (k > 0) {
                    CHECK(rec.energy > r.records[k - 1].energy);
                }
                if (kind == WellKind::Single) {
                    CHECK(rec.energy > d * d);
                }
            }
        }
    }
}

TEST_CASE("single-well levels grow with d")
{
    double previous = 0.0;
    for (double d = 0.0; d <= 5.5; d += 0.5) {
        const SpectrumResult r = sector_eigenvalues(WellKind::Single, ParitySector::Even, d, 1);
        REQUIRE(r.complete());
        CHECK(r.records[0].energy > previous);
        CHECK(r.records[0].energy > d * d);
        previous = r.records[0].energy;
    }
}

TEST_CASE("tunnelling splitting closes at large separation")
{
    const std::vector<SplitLevel> split = splitting_table(4.0, 3);
    REQUIRE(split.size() == 3);
    for (const SplitLevel& s : split) {
        CHECK(s.gap > 0.0);
        CHECK(s.gap < 2.1e-3);
        CHECK(s.even < 2.0 * s.n + 1.0);
        CHECK(s.odd > 2.0 * s.n + 1.0);
    }
    CHECK(split[0].gap < split[1].gap);
    CHECK(split[1].gap < split[2].gap);
    // The d = 4 ground pair is split by about 1e-6 yet both members resolve.
    CHECK(split[0].gap == doctest::Approx(1.02e-6).epsilon(0.05));
}

TEST_CASE("window exhaustion is reported, not thrown")
{
    ScanConfig config;
    config.e_max = 5.0;
    const SpectrumResult r = find_eigenvalues(WellKind::Double, 1.0, 7, config);
    CHECK_FALSE(r.complete());
    CHECK(r.records.size() == 4);
    CHECK(r.diagnostics.front().find("widen") != std::string::npos);
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(find_eigenvalues(WellKind::Double, -0.1, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_eigenvalues(WellKind::Double, 6.5, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_eigenvalues(WellKind::Double, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_eigenvalues(WellKind::Double, 1.0, 21), std::invalid_argument);
    ScanConfig bad;
    bad.refine_tol = 1e-14;
    CHECK_THROWS_AS(find_eigenvalues(WellKind::Double, 1.0, 3, bad), std::invalid_argument);
    bad = {};
    bad.coarse_step = 0.0;
    CHECK_THROWS_AS(find_eigenvalues(WellKind::Double, 1.0, 3, bad), std::invalid_argument);
    bad = {};
    bad.e_min = 5.0;
    bad.e_max = 2.0;
    CHECK_THROWS_AS(find_eigenvalues(WellKind::Double, 1.0, 3, bad), std::invalid_argument);
}

TEST_CASE("explicit energy window selects a slice of the spectrum")
{
    ScanConfig config;
    config.e_min = 2.0;
    config.e_max = 6.5;
    const SpectrumResult r = find_eigenvalues(WellKind::Double, 1.0, 3, config);
    REQUIRE(r.complete());
    CHECK(r.records[0].energy == doctest::Approx(3.0));
    CHECK(r.records[1].energy == doctest::Approx(4.39493).epsilon(1e-5));
    CHECK(r.records[2].energy == doctest::Approx(5.99720).epsilon(1e-5));
}
