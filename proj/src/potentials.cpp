#include "mirrorwell/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mirrorwell {

namespace {

constexpr double kWall = std::numeric_limits<double>::infinity();

double square(double v) { return v * v; }

double linear(double g, double x) { return g * g * g * std::abs(x); }

}  // namespace

void validate(const PotentialSpec& spec)
{
    if (!(spec.d >= 0.0) || !std::isfinite(spec.d)) {
        throw std::invalid_argument("potential: separation d must be finite and >= 0");
    }
    if (!(spec.g > 0.0) || !std::isfinite(spec.g)) {
        throw std::invalid_argument("potential: coupling g must be finite and > 0");
    }
    if (spec.shift_sign != 1 && spec.shift_sign != -1) {
        throw std::invalid_argument("potential: shift sign must be +1 or -1");
    }
}

bool is_mirror_symmetric(Family family)
{
    return family != Family::HalfLineWalled && family != Family::HarmonicShifted;
}

double krein_adler(double x) { return krein_adler_t(x); }

double evaluate(const PotentialSpec& spec, double x)
{
    const double d = spec.d;
    switch (spec.family) {
    case Family::HarmonicShifted:
        return square(x + spec.shift_sign * d);
    case Family::DoubleMin:
        return std::min(square(x + d), square(x - d));
    case Family::SingleMax:
        return std::max(square(x + d), square(x - d));
    case Family::LinearDouble:
        return std::min(linear(spec.g, x + d), linear(spec.g, x - d));
    case Family::LinearSingle:
        return std::max(linear(spec.g, x + d), linear(spec.g, x - d));
    case Family::KreinAdler:
        return krein_adler(x);
    case Family::KreinAdlerDouble:
        return std::min(krein_adler(x + d), krein_adler(x - d));
    case Family::KreinAdlerSingle:
        return std::max(krein_adler(x + d), krein_adler(x - d));
    case Family::HalfLineWalled:
        switch (spec.side) {
        case HalfLineSide::DR:
            return x > 0.0 ? square(x - d) : kWall;
        case HalfLineSide::DL:
            return x < 0.0 ? square(x + d) : kWall;
        case HalfLineSide::SR:
            return x > 0.0 ? square(x + d) : kWall;
        case HalfLineSide::SL:
            return x < 0.0 ? square(x - d) : kWall;
        }
    }
    throw std::logic_error("evaluate: unknown potential family");
}

PotentialSpec parse_potential(std::string_view name, double d, double g)
{
    PotentialSpec spec;
    if (name == "D") {
        spec = PotentialSpec::of(Family::DoubleMin, d);
    } else if (name == "S") {
        spec = PotentialSpec::of(Family::SingleMax, d);
    } else if (name == "L-D") {
        spec = PotentialSpec::of(Family::LinearDouble, d, g);
    } else if (name == "L-S") {
        spec = PotentialSpec::of(Family::LinearSingle, d, g);
    } else if (name == "KA") {
        spec = PotentialSpec::of(Family::KreinAdler, d);
    } else if (name == "KA-D") {
        spec = PotentialSpec::of(Family::KreinAdlerDouble, d);
    } else if (name == "KA-S") {
        spec = PotentialSpec::of(Family::KreinAdlerSingle, d);
    } else if (name == "DR") {
        spec = PotentialSpec::walled(HalfLineSide::DR, d);
    } else if (name == "DL") {
        spec = PotentialSpec::walled(HalfLineSide::DL, d);
    } else if (name == "SR") {
        spec = PotentialSpec::walled(HalfLineSide::SR, d);
    } else if (name == "SL") {
        spec = PotentialSpec::walled(HalfLineSide::SL, d);
    } else if (name == "H" || name == "H+") {
        spec = PotentialSpec::harmonic(d, +1);
    } else if (name == "H-") {
        spec = PotentialSpec::harmonic(d, -1);
    } else {
        throw std::invalid_argument("unknown potential name '" + std::string(name) + "'");
    }
    validate(spec);
    return spec;
}

std::string potential_name(const PotentialSpec& spec)
{
    switch (spec.family) {
    case Family::HarmonicShifted:
        return spec.shift_sign > 0 ? "H+" : "H-";
    case Family::DoubleMin:
        return "D";
    case Family::SingleMax:
        return "S";
    case Family::LinearDouble:
        return "L-D";
    case Family::LinearSingle:
        return "L-S";
    case Family::KreinAdler:
        return "KA";
    case Family::KreinAdlerDouble:
        return "KA-D";
    case Family::KreinAdlerSingle:
        return "KA-S";
    case Family::HalfLineWalled:
        switch (spec.side) {
        case HalfLineSide::DR:
            return "DR";
        case HalfLineSide::DL:
            return "DL";
        case HalfLineSide::SR:
            return "SR";
        case HalfLineSide::SL:
            return "SL";
        }
    }
    return "?";
}

double ka_eigenvalue(int n)
{
    require_ka_index(n);
    return 2.0 * n;
}

}  // namespace mirrorwell
