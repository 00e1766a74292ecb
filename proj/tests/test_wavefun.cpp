#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hp_oracle.hpp"
#include "mirrorwell/oracle.hpp"
#include "mirrorwell/spectrum.hpp"
#include "mirrorwell/wavefun.hpp"
#include "support.hpp"

using namespace mirrorwell;

namespace {

struct State {
    WellKind kind;
    ParitySector sector;
    double d;
    double energy;
    int ordinal;  // position in the full spectrum
};

std::vector<State> lowest_states(WellKind kind, double d, int count)
{
    const SpectrumResult r = find_eigenvalues(kind, d, count);
    REQUIRE(r.complete());
    std::vector<State> out;
    for (std::size_t k = 0; k < r.records.size(); ++k) {
        out.push_back({kind, r.records[k].sector, d, r.records[k].energy, static_cast<int>(k)});
    }
    return out;
}

double potential(WellKind kind, double d, double x)
{
    const double p = (x + d) * (x + d);
    const double m = (x - d) * (x - d);
    return kind == WellKind::Double ? std::min(p, m) : std::max(p, m);
}

double peak_of(const Eigenfunction& psi)
{
    double peak = 0.0;
    const double w = psi.d() + std::sqrt(psi.energy()) + 3.0;
    for (double x = -w; x <= w; x += 0.01) {
        peak = std::max(peak, std::abs(psi(x)));
    }
    return peak;
}

}  // namespace

TEST_CASE("low states: parity, matching, boundary values, equation, nodes")
{
    for (double d : {0.5, 1.0, 2.0}) {
        for (WellKind kind : {WellKind::Double, WellKind::Single}) {
            for (const State& s : lowest_states(kind, d, 7)) {
                INFO(to_string(kind) << " d=" << d << " state " << s.ordinal << " E=" << s.energy);
                const Eigenfunction psi(kind, s.sector, d, s.energy);
                const double peak = peak_of(psi);
                const double parity = s.sector == ParitySector::Even ? 1.0 : -1.0;

                double parity_err = 0.0;
                double residual = 0.0;
                for (double x = 0.013; x < d + std::sqrt(s.energy) + 4.0; x += 0.047) {
                    parity_err = std::max(parity_err, std::abs(psi(-x) - parity * psi(x)));
                    for (double y : {x, -x}) {
                        const double lhs = -testdata::second_difference<double>(psi, y, 1e-3) +
                                           (potential(kind, d, y) - s.energy) * psi(y);
                        residual = std::max(residual, std::abs(lhs));
                    }
                }
                CHECK(parity_err <= 1e-9 * peak);
                CHECK(residual <= 1e-6 * peak);
                CHECK(psi.continuity_gap() <= 1e-8 * peak);
                CHECK(psi.derivative_gap() <= 1e-8 * peak * std::sqrt(s.energy + 1.0));
                if (s.sector == ParitySector::Odd) {
                    CHECK(std::abs(psi(0.0)) <= 1e-9 * peak);
                    CHECK(psi.derivative(0.0) > 0.0);
                } else {
                    CHECK(std::abs(psi.derivative(0.0)) <= 1e-8 * peak);
                    CHECK(psi(psi.support_half_width()) > 0.0);
                }

                const double w = psi.support_half_width();
                const SampledWavefunction sampled =
                    sample(kind, s.sector, d, s.energy, -w, w, 4001);
                CHECK(node_count(sampled) == s.ordinal);
            }
        }
    }
}

TEST_CASE("tails decay monotonically beyond the turning point")
{
    for (WellKind kind : {WellKind::Double, WellKind::Single}) {
        for (const State& s : lowest_states(kind, 1.5, 5)) {
            const Eigenfunction psi(kind, s.sector, s.d, s.energy);
            const double turn = s.d + std::sqrt(s.energy) + 0.5;
            double previous = std::abs(psi(turn));
            for (double x = turn + 0.1; x <= psi.support_half_width(); x += 0.1) {
                const double v = std::abs(psi(x));
                CHECK(v < previous);
                CHECK(v <= previous * std::exp(-0.1 * (x - 0.1 - s.d) + 0.1 * std::sqrt(s.energy)));
                previous = v;
            }
            CHECK(std::abs(psi(psi.support_half_width())) <= 1e-8 * peak_of(psi));
        }
    }
}

TEST_CASE("decaying solution agrees with the decimal oracle past the series switch")
{
    for (double energy : {0.7, 3.3, 10.5, 27.0}) {
        const DecayingSolution y(energy, -2.0, 24.0);
        const hp::Wide a = (hp::Wide(1) - hp::Wide(energy)) / 4;
        for (double s : {-1.5, 0.5, 3.0, 5.0, 5.3, 7.1, 9.0, 11.4}) {
            const hp::Wide hs(s);
            const double want = hp::to_double(exp(-hs * hs / 2) * hp::ubar(a, hs));
            const double want_dy =
                hp::to_double(exp(-hs * hs / 2) * (hp::ubar_slope(a, hs) - hs * hp::ubar(a, hs)));
            INFO("E=" << energy << " s=" << s);
            CHECK(y(s).y == doctest::Approx(want).epsilon(1e-9));
            CHECK(y(s).dy == doctest::Approx(want_dy).epsilon(1e-8));
        }
        CHECK(y.switch_point() == kUbarSeriesSwitch);
        CHECK_THROWS_AS(y(24.01), std::domain_error);
        CHECK_THROWS_AS(y(-2.01), std::domain_error);
    }
    CHECK_THROWS_AS(DecayingSolution(1.0, 3.0, 2.0), std::invalid_argument);
}

TEST_CASE("tail-only solution keeps its shape")
{
    const DecayingSolution far(5.5, 6.0, 20.0);
    const DecayingSolution full(5.5, 0.0, 20.0);
    const double ratio = far(6.0).y / full(6.0).y;
    for (double s : {6.0, 8.0, 11.0, 15.0}) {
        CHECK(far(s).y == doctest::Approx(ratio * full(s).y).epsilon(1e-10));
    }
}

TEST_CASE("normalization")
{
    const SampledWavefunction gauss =
        sample([](double x) { return std::exp(-x * x / 2); }, -6.0, 6.0, 121, 12.0);
    CHECK(l2_norm(gauss) * l2_norm(gauss) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    const SampledWavefunction g1 = normalize(gauss);
    CHECK(*g1.norm == doctest::Approx(std::pow(kPi, 0.25)).epsilon(1e-13));
    CHECK(g1.values[60] == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-13));

    for (WellKind kind : {WellKind::Double, WellKind::Single}) {
        for (const State& s : lowest_states(kind, 1.0, 4)) {
            const SampledWavefunction w = sample(kind, s.sector, 1.0, s.energy, -6.0, 6.0, 241);
            const SampledWavefunction once = normalize(w);
            const SampledWavefunction twice = normalize(once);
            CHECK(l2_norm(once) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(*twice.norm == doctest::Approx(1.0).epsilon(1e-12));
            for (std::size_t i = 0; i < once.values.size(); ++i) {
                CHECK(twice.values[i] == doctest::Approx(once.values[i]).epsilon(1e-12));
            }
            CHECK(once.continuity_gap <= 1e-8);
        }
    }

    const SampledWavefunction growing =
        sample([](double x) { return std::exp(-0.01 * x * x); }, -3.0, 3.0, 61, 10.0);
    CHECK_THROWS_AS(normalize(growing), std::runtime_error);
    SampledWavefunction bare;
    CHECK_THROWS_AS(normalize(bare), std::invalid_argument);
    CHECK_THROWS_AS(l2_norm(bare), std::invalid_argument);
}

TEST_CASE("eigenfunction matches the finite-difference eigenvector")
{
    for (WellKind kind : {WellKind::Double, WellKind::Single}) {
        const PotentialSpec spec =
            PotentialSpec::of(kind == WellKind::Double ? Family::DoubleMin : Family::SingleMax, 1.0);
        for (const State& s : lowest_states(kind, 1.0, 3)) {
            const GridFunction fd = fd_eigenvector(spec, s.ordinal, GridSpec::defaults(1.0));
            const SampledWavefunction w = normalize(sample(kind, s.sector, 1.0, s.energy, -1.0, 1.0, 3));
            // Align signs at the node nearest the largest component.
            std::size_t at = 0;
            for (std::size_t i = 0; i < fd.values.size(); ++i) {
                if (std::abs(fd.values[i]) > std::abs(fd.values[at])) {
                    at = i;
                }
            }
            const double sign =
                (fd.values[at] > 0.0) == (w.amplitude * w.evaluator(fd.xs[at]) > 0.0) ? 1.0 : -1.0;
            double worst = 0.0;
            for (std::size_t i = 0; i < fd.xs.size(); i += 37) {
                if (std::abs(fd.xs[i]) > w.support_half_width) {
                    continue;
                }
                worst = std::max(worst, std::abs(sign * fd.values[i] -
                                                 w.amplitude * w.evaluator(fd.xs[i])));
            }
            INFO(to_string(kind) << " state " << s.ordinal);
            CHECK(worst < 1e-4);
        }
    }
}

TEST_CASE("sampling grids and argument checks")
{
    const SampledWavefunction w =
        sample(WellKind::Double, ParitySector::Even, 1.0, 0.618919, -2.0, 3.0, 10);
    CHECK(w.xs.size() == 11);
    CHECK(std::count(w.xs.begin(), w.xs.end(), 0.0) == 1);
    CHECK(std::is_sorted(w.xs.begin(), w.xs.end()));
    const SampledWavefunction snapped =
        sample(WellKind::Double, ParitySector::Even, 1.0, 0.618919, -2.0, 2.0, 5);
    CHECK(snapped.xs.size() == 5);
    CHECK(snapped.xs[2] == 0.0);

    CHECK_THROWS_AS(sample(WellKind::Double, ParitySector::Even, 1.0, 1.0, 0.5, 2.0, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample(WellKind::Double, ParitySector::Even, 1.0, 1.0, -2.0, 2.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample(WellKind::Double, ParitySector::Even, 1.0, 1.0, -40.0, 2.0, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(Eigenfunction(WellKind::Double, ParitySector::Even, -1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Eigenfunction(WellKind::Double, ParitySector::Even, 1.0, 70.0),
                    std::invalid_argument);
}

TEST_CASE("CSV and SVG output")
{
    const double e_odd = lowest_states(WellKind::Double, 1.0, 2)[1].energy;
    const SampledWavefunction w =
        normalize(sample(WellKind::Double, ParitySector::Odd, 1.0, e_odd, -4.0, 4.0, 9));
    const std::string csv = to_csv(w);
    CHECK(csv.rfind("x,psi\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
    const std::size_t origin = csv.find("\n0,");
    REQUIRE(origin != std::string::npos);
    CHECK(std::abs(std::stod(csv.substr(origin + 3))) < 1e-12);
    CHECK(csv.find('\r') == std::string::npos);

    const SampledWavefunction s =
        sample(WellKind::Single, ParitySector::Even, 1.0, 3.0, -4.0, 4.0, 9);
    const std::string svg = to_svg({w, s}, "psi <D & S>");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
    CHECK(svg.find("stroke=\"red\"") != std::string::npos);
    CHECK(svg.find("psi &lt;D &amp; S&gt;") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK_THROWS_AS(to_svg({}, ""), std::invalid_argument);
    SampledWavefunction broken = w;
    broken.values.pop_back();
    CHECK_THROWS_AS(to_csv(broken), std::invalid_argument);
}
