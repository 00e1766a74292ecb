#include <doctest.h>

#include <cmath>

#include "mirrorwell/oracle.hpp"
#include "mirrorwell/spectrum.hpp"
#include "support.hpp"

using namespace mirrorwell;

namespace {

std::vector<double> connection_levels(WellKind kind, double d, int count)
{
    const SpectrumResult r = find_eigenvalues(kind, d, count);
    REQUIRE(r.complete());
    std::vector<double> out;
    for (const auto& rec : r.records) {
        out.push_back(rec.energy);
    }
    return out;
}

}  // namespace

TEST_CASE("harmonic oscillator levels")
{
    const OracleResult r = fd_spectrum(PotentialSpec::harmonic(0.0), 8);
    REQUIRE(r.eigenvalues.size() == 8);
    CHECK(r.extrapolated);
    CHECK(r.h_used == 1e-3);
    for (int k = 0; k < 8; ++k) {
        CHECK(std::abs(r.eigenvalues[static_cast<std::size_t>(k)] - (2.0 * k + 1.0)) < 1e-6);
    }
    CHECK(r.est_error < 1e-5);
    // A shift by d moves nothing.
    const OracleResult shifted = fd_spectrum(PotentialSpec::harmonic(1.5, -1), 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(shifted.eigenvalues[static_cast<std::size_t>(k)] - (2.0 * k + 1.0)) < 1e-6);
    }
}

TEST_CASE("finite differences agree with the connection method")
{
    for (double d : {0.5, 1.0, 2.0}) {
        for (WellKind kind : {WellKind::Double, WellKind::Single}) {
            const Family family = kind == WellKind::Double ? Family::DoubleMin : Family::SingleMax;
            const OracleResult fd = fd_spectrum(PotentialSpec::of(family, d), 7);
            const std::vector<double> exact = connection_levels(kind, d, 7);
            for (std::size_t k = 0; k < 7; ++k) {
                INFO(to_string(kind) << " d=" << d << " k=" << k);
                CHECK(std::abs(fd.eigenvalues[k] - exact[k]) < 1e-5);
                if (kind == WellKind::Single) {
                    CHECK(fd.eigenvalues[k] > d * d);
                }
            }
        }
    }
    CHECK(fd_spectrum(PotentialSpec::of(Family::DoubleMin, 1.0), 1).eigenvalues[0] ==
          doctest::Approx(0.618919).epsilon(2e-6));
}

TEST_CASE("walled half-lines reproduce the odd sector")
{
    for (double d : {0.5, 1.0, 2.0}) {
        const OracleResult right = halfline_spectrum(HalfLineSide::DR, d, 4);
        const OracleResult left = halfline_spectrum(HalfLineSide::DL, d, 4);
        const SpectrumResult odd = sector_eigenvalues(WellKind::Double, ParitySector::Odd, d, 4);
        REQUIRE(odd.complete());
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(std::abs(right.eigenvalues[k] - left.eigenvalues[k]) < 1e-9);
            CHECK(std::abs(right.eigenvalues[k] - odd.records[k].energy) < 1e-5);
        }
        const OracleResult s_right = halfline_spectrum(HalfLineSide::SR, d, 3);
        const SpectrumResult s_odd = sector_eigenvalues(WellKind::Single, ParitySector::Odd, d, 3);
        REQUIRE(s_odd.complete());
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(std::abs(s_right.eigenvalues[k] - s_odd.records[k].energy) < 1e-5);
            CHECK(s_right.eigenvalues[k] > d * d);
        }
    }
    const OracleResult dr = halfline_spectrum(HalfLineSide::DR, 1.0, 1);
    CHECK(dr.eigenvalues[0] == doctest::Approx(1.46847).epsilon(2e-6));
    CHECK(dr.eigenvalues[0] > 1.0);
}

TEST_CASE("Krein-Adler spectrum lacks the deleted levels")
{
    const OracleResult r = fd_spectrum(PotentialSpec::of(Family::KreinAdler), 4);
    const double expected[] = {0.0, 6.0, 8.0, 10.0};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(r.eigenvalues[k] - expected[k]) < 1e-4);
        CHECK(r.eigenvalues[k] == doctest::Approx(ka_eigenvalue(k == 0 ? 0 : static_cast<int>(k) + 2)).epsilon(1e-4));
    }
}

TEST_CASE("Krein-Adler double and single wells")
{
    const OracleResult at_zero = ka_double_single_spectrum(KreinAdlerVariant::Double, 0.0, 4);
    const OracleResult plain = fd_spectrum(PotentialSpec::of(Family::KreinAdler), 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(at_zero.eigenvalues[k] - plain.eigenvalues[k]) < 1e-9);
    }
    for (double d : {0.5, 1.5, 3.0}) {
        const OracleResult dbl = ka_double_single_spectrum(KreinAdlerVariant::Double, d, 3);
        const OracleResult sgl = ka_double_single_spectrum(KreinAdlerVariant::Single, d, 3);
        CHECK(sgl.eigenvalues[0] > dbl.eigenvalues[0]);
        CHECK(std::is_sorted(dbl.eigenvalues.begin(), dbl.eigenvalues.end()));
    }
    CHECK_THROWS_AS(ka_double_single_spectrum(KreinAdlerVariant::Single, 4.5, 3),
                    std::invalid_argument);
}

TEST_CASE("second-order convergence and domain insensitivity")
{
    const PotentialSpec spec = PotentialSpec::of(Family::DoubleMin, 1.0);
    const double exact = connection_levels(WellKind::Double, 1.0, 3)[2];
    GridSpec coarse{15.0, 8e-3, false};
    GridSpec fine{15.0, 4e-3, false};
    const double e_coarse = fd_spectrum(spec, 3, coarse).eigenvalues[2] - exact;
    const double e_fine = fd_spectrum(spec, 3, fine).eigenvalues[2] - exact;
    CHECK(e_coarse / e_fine == doctest::Approx(4.0).epsilon(0.3 / 4.0));

    GridSpec wide = GridSpec::defaults(1.0);
    wide.half_width += 2.0;
    const OracleResult base = fd_spectrum(spec, 5);
    const OracleResult wider = fd_spectrum(spec, 5, wide);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(std::abs(base.eigenvalues[k] - wider.eigenvalues[k]) < 1e-8);
    }
}

TEST_CASE("tabulated double-well levels for d <= 2")
{
    for (const auto& row : testdata::kDoubleLevels) {
        if (row.d == 0.0 || row.d > 2.0) {
            continue;
        }
        const OracleResult fd = fd_spectrum(PotentialSpec::of(Family::DoubleMin, row.d), 7);
        const std::vector<double> exact = connection_levels(WellKind::Double, row.d, 7);
        for (std::size_t k = 0; k < 7; ++k) {
            CHECK(std::abs(fd.eigenvalues[k] - exact[k]) < 1e-5);
            CHECK(std::abs(fd.eigenvalues[k] - row.levels[k].value()) < 2.5e-5);
        }
    }
}

TEST_CASE("grid checks")
{
    const PotentialSpec spec = PotentialSpec::of(Family::DoubleMin, 1.0);
    CHECK_THROWS_AS(fd_spectrum(spec, 0), std::invalid_argument);
    CHECK_THROWS_AS(fd_spectrum(spec, 16), std::invalid_argument);
    CHECK_THROWS_AS(fd_spectrum(spec, 3, GridSpec{15.0, 0.0, true}), std::invalid_argument);
    CHECK_THROWS_AS(fd_spectrum(spec, 3, GridSpec{1e-3, 1e-3, true}), std::invalid_argument);
    CHECK_THROWS_AS(fd_spectrum(spec, 3, GridSpec{3.0, 2e-3, true}), OracleGridError);
    CHECK_THROWS_AS(fd_spectrum(spec, 15, GridSpec{30.0, 0.2, false}), OracleGridError);
    CHECK_THROWS_AS(fd_spectrum(PotentialSpec::of(Family::DoubleMin, -1.0), 3),
                    std::invalid_argument);

    const GridFunction v = fd_eigenvector(spec, 1, GridSpec::defaults(1.0));
    double sum = 0.0;
    for (double x : v.values) {
        sum += x * x * 2e-3;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.xs.size() == v.values.size());
}
