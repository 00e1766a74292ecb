#include "mirrorwell/wavefun.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

namespace mirrorwell {

namespace {

constexpr int kRenormalizeBits = 600;
constexpr int kTaylorMaxOrder = 90;

struct TaylorValue {
    double y = 0.0;
    double dy = 0.0;
};

// y(s0 + t) for y'' = (s^2 - E) y with y(s0) = y0, y'(s0) = dy0. With
// s = s0 + t the coefficients obey
// (k+2)(k+1) c_{k+2} = (s0^2 - E) c_k + 2 s0 c_{k-1} + c_{k-2}.
TaylorValue taylor_step(double s0, double y0, double dy0, double energy, double t)
{
    const double q0 = s0 * s0 - energy;
    double c[kTaylorMaxOrder + 1] = {};
    c[0] = y0;
    c[1] = dy0;
    double y = y0 + dy0 * t;
    double dy = dy0;
    double power = t;  // t^{m-1} before the update below
    int quiet = 0;
    for (int k = 0; k + 2 <= kTaylorMaxOrder; ++k) {
        double rhs = q0 * c[k];
        if (k >= 1) {
            rhs += 2.0 * s0 * c[k - 1];
        }
        if (k >= 2) {
            rhs += c[k - 2];
        }
        const int m = k + 2;
        c[m] = rhs / (static_cast<double>(m) * (m - 1));
        const double dterm = m * c[m] * power;
        power *= t;
        const double term = c[m] * power;
        y += term;
        dy += dterm;
        const double scale = std::abs(y) + std::abs(dy * t);
        if (std::abs(term) + std::abs(dterm * t) <= 1e-18 * scale) {
            if (++quiet >= 3) {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    return {y, dy};
}

double series_switch(double s_min, double s_max)
{
    return std::clamp(kUbarSeriesSwitch, s_min, s_max);
}

double far_point(double energy, double s_max)
{
    return std::max(s_max + 2.0, std::sqrt(std::max(energy, 0.0)) + 13.0);
}

}  // namespace

DecayingSolution::DecayingSolution(double energy, double s_min, double s_max)
    : energy_(energy), a_((1.0 - energy) / 4.0), s_min_(s_min), s_max_(s_max)
{
    if (!(s_min < s_max) || !std::isfinite(s_min) || !std::isfinite(s_max)) {
        throw std::invalid_argument("DecayingSolution: need finite s_min < s_max");
    }
    switch_ = series_switch(s_min, s_max);
    if (switch_ >= s_max) {
        return;  // the series covers the whole range
    }

    // Inward integration from where y ~ s^{(E-1)/2} e^{-s^2/2}; the growing
    // companion solution decays in this direction, so the start error dies out.
    const double s_far = far_point(energy, s_max);
    Node node{s_far, 1.0, (energy - 1.0) / (2.0 * s_far) - s_far, 0};
    nodes_.push_back(node);
    while (node.s > switch_) {
        const double h = std::min(kTaylorStep, node.s - switch_);
        const TaylorValue v = taylor_step(node.s, node.y, node.dy, energy, -h);
        node.s = (node.s - h <= switch_) ? switch_ : node.s - h;
        node.y = v.y;
        node.dy = v.dy;
        if (std::abs(node.y) > std::ldexp(1.0, kRenormalizeBits)) {
            node.y = std::ldexp(node.y, -kRenormalizeBits);
            node.dy = std::ldexp(node.dy, -kRenormalizeBits);
            node.exponent += kRenormalizeBits;
        }
        nodes_.push_back(node);
    }

    const Node& inner = nodes_.back();
    tail_exponent_ = -inner.exponent;
    if (switch_ > s_min) {
        const Value ref = series(switch_);
        tail_factor_ = (ref.y * inner.y + ref.dy * inner.dy) / (inner.y * inner.y + inner.dy * inner.dy);
    } else {
        tail_factor_ = 1.0 / std::abs(inner.y);
    }
}

DecayingSolution::Value DecayingSolution::series(double s) const
{
    const UbarEvaluation u = ubar_signed(a_, s);
    const double envelope = std::exp(-0.5 * s * s);
    const double value = u.value.to_double();
    const double slope = u.slope.to_double();
    return {envelope * value, envelope * (slope - s * value)};
}

DecayingSolution::Value DecayingSolution::tail(double s) const
{
    const double s_far = nodes_.front().s;
    const auto last = static_cast<long>(nodes_.size()) - 1;
    const long k = std::clamp(std::lround((s_far - s) / kTaylorStep), 0L, last);
    const Node& node = nodes_[static_cast<std::size_t>(k)];
    const TaylorValue v = taylor_step(node.s, node.y, node.dy, energy_, s - node.s);
    const int exponent = node.exponent + tail_exponent_;
    return {std::ldexp(tail_factor_ * v.y, exponent), std::ldexp(tail_factor_ * v.dy, exponent)};
}

DecayingSolution::Value DecayingSolution::operator()(double s) const
{
    const double low_slack = 1e-9 * (1.0 + std::abs(s_min_));
    const double high_slack = 1e-9 * (1.0 + std::abs(s_max_));
    if (!(s >= s_min_ - low_slack && s <= s_max_ + high_slack)) {
        std::ostringstream msg;
        msg << "DecayingSolution: s=" << s << " outside [" << s_min_ << ", " << s_max_ << "]";
        throw std::domain_error(msg.str());
    }
    // With s_min at or past the switch the series is never used.
    if (nodes_.empty() || (s <= switch_ && switch_ > s_min_)) {
        return series(s);
    }
    return tail(s);
}

namespace {

double support_width(double d, double energy)
{
    return std::max(12.0 + d, d + std::sqrt(std::max(energy, 0.0)) + 8.0);
}

double checked_separation(double d, double energy)
{
    if (!(d >= 0.0 && d <= kConditionMaxAbsD)) {
        throw std::invalid_argument("Eigenfunction: d must lie in [0, 6]");
    }
    if (!(energy > kConditionMinEnergy && energy < kConditionMaxEnergy)) {
        throw std::invalid_argument("Eigenfunction: energy must lie in (-1, 60)");
    }
    return d;
}

}  // namespace

Eigenfunction::Eigenfunction(WellKind kind, ParitySector sector, double d, double energy)
    : kind_(kind),
      sector_(sector),
      d_(checked_separation(d, energy)),
      energy_(energy),
      solution_(energy, kind == WellKind::Double ? -d : d, support_width(d, energy) + d + 1.0)
{
    const double a = (1.0 - energy) / 4.0;
    const int alpha = sector == ParitySector::Even ? +1 : -1;
    // Double: right piece on (x-d)^2 with root x-d, left on (x+d)^2 with root -(x+d).
    // Single: right piece on (x+d)^2 with root x+d, left on (x-d)^2 with root d-x.
    const int right_shift = kind == WellKind::Double ? -1 : +1;
    right_ = {Side::Right, right_shift, +1, +1, UbarForm{a}};
    left_ = {Side::Left, -right_shift, -1, alpha, UbarForm{a}};

    if (sector == ParitySector::Odd && piece_derivative(Side::Right, 0.0) < 0.0) {
        right_.amplitude_sign = -right_.amplitude_sign;
        left_.amplitude_sign = -left_.amplitude_sign;
    }
}

const WavefunctionPiece& Eigenfunction::piece(Side side) const
{
    return side == Side::Right ? right_ : left_;
}

double Eigenfunction::piece_value(Side side, double x) const
{
    const WavefunctionPiece& p = piece(side);
    return p.amplitude_sign * solution_(p.local_coordinate(d_, x)).y;
}

double Eigenfunction::piece_derivative(Side side, double x) const
{
    const WavefunctionPiece& p = piece(side);
    return p.amplitude_sign * p.sqrt_branch * solution_(p.local_coordinate(d_, x)).dy;
}

double Eigenfunction::operator()(double x) const
{
    return piece_value(x >= 0.0 ? Side::Right : Side::Left, x);
}

double Eigenfunction::derivative(double x) const
{
    return piece_derivative(x >= 0.0 ? Side::Right : Side::Left, x);
}

double Eigenfunction::support_half_width() const
{
    return support_width(d_, energy_);
}

double Eigenfunction::continuity_gap() const
{
    return std::abs(piece_value(Side::Right, 0.0) - piece_value(Side::Left, 0.0));
}

double Eigenfunction::derivative_gap() const
{
    return std::abs(piece_derivative(Side::Right, 0.0) - piece_derivative(Side::Left, 0.0));
}

double evaluate_eigenfunction(WellKind kind, ParitySector sector, double d, double energy,
                              double x)
{
    return Eigenfunction(kind, sector, d, energy)(x);
}

WavefunctionPiece polynomial_piece(const PolynomialEigenstate& state, Side side)
{
    const bool right = side == Side::Right;
    return {side, right ? state.right_shift : state.left_shift, +1,
            right ? state.signs.right : state.signs.left, HermiteForm{state.n}};
}

namespace {

std::vector<double> grid_with_origin(double x_min, double x_max, int n_points)
{
    if (n_points < 2) {
        throw std::invalid_argument("sample: need at least 2 points");
    }
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
        throw std::invalid_argument("sample: degenerate range");
    }
    if (x_min > 0.0 || x_max < 0.0) {
        throw std::invalid_argument("sample: range must contain 0");
    }
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n_points) + 1);
    const double step = (x_max - x_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        xs.push_back(i + 1 == n_points ? x_max : x_min + i * step);
    }
    // Snap a grid point within rounding of 0 onto it, otherwise insert 0.
    auto nearest = std::min_element(xs.begin(), xs.end(),
                                    [](double p, double q) { return std::abs(p) < std::abs(q); });
    if (std::abs(*nearest) <= 1e-12 * (x_max - x_min)) {
        *nearest = 0.0;
    } else {
        xs.insert(std::upper_bound(xs.begin(), xs.end(), 0.0), 0.0);
    }
    return xs;
}

void fill_values(SampledWavefunction& w)
{
    w.values.clear();
    w.values.reserve(w.xs.size());
    for (double x : w.xs) {
        const double v = w.amplitude * w.evaluator(x);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "sample: non-finite value at x=" << x;
            throw std::runtime_error(msg.str());
        }
        w.values.push_back(v);
    }
}

}  // namespace

SampledWavefunction sample(std::function<double(double)> evaluator, double x_min, double x_max,
                           int n_points, double support_half_width)
{
    SampledWavefunction w;
    w.xs = grid_with_origin(x_min, x_max, n_points);
    w.evaluator = std::move(evaluator);
    w.support_half_width = support_half_width;
    fill_values(w);
    return w;
}

SampledWavefunction sample(WellKind kind, ParitySector sector, double d, double energy,
                           double x_min, double x_max, int n_points)
{
    auto psi = std::make_shared<const Eigenfunction>(kind, sector, d, energy);
    const double reach = psi->support_half_width() + 1.0;
    if (x_min < -reach || x_max > reach) {
        std::ostringstream msg;
        msg << "sample: range exceeds supported |x| <= " << reach;
        throw std::invalid_argument(msg.str());
    }
    SampledWavefunction w =
        sample([psi](double x) { return (*psi)(x); }, x_min, x_max, n_points,
               psi->support_half_width());
    w.kind = kind;
    w.sector = sector;
    w.d = d;
    w.energy = energy;
    w.continuity_gap = psi->continuity_gap();
    w.derivative_gap = psi->derivative_gap();
    return w;
}

SampledWavefunction sample(const PolynomialEigenstate& state, double x_min, double x_max,
                           int n_points)
{
    const double width = state.d + std::sqrt(2.0 * state.n + 1.0) + 10.0;
    SampledWavefunction w = sample(
        [state](double x) { return evaluate_polynomial_eigenstate(state, x); }, x_min, x_max,
        n_points, width);
    w.kind = state.kind;
    w.sector = state.sector;
    w.d = state.d;
    w.energy = state.energy;
    w.continuity_gap = std::abs(evaluate_polynomial_eigenstate(state, 0.0, Side::Right) -
                                evaluate_polynomial_eigenstate(state, 0.0, Side::Left));
    w.derivative_gap = std::abs(polynomial_eigenstate_derivative(state, 0.0, Side::Right) -
                                polynomial_eigenstate_derivative(state, 0.0, Side::Left));
    return w;
}

double l2_norm(const SampledWavefunction& w)
{
    if (!w.evaluator) {
        throw std::invalid_argument("l2_norm: wavefunction has no evaluator");
    }
    const int panels = static_cast<int>(std::ceil(w.support_half_width));
    auto density = [&w](double x) {
        const double v = w.amplitude * w.evaluator(x);
        return v * v;
    };
    double total = 0.0;
    for (int k = -panels; k < panels; ++k) {
        total += boost::math::quadrature::gauss<double, 64>::integrate(density, k, k + 1.0);
    }
    return std::sqrt(total);
}

SampledWavefunction normalize(const SampledWavefunction& w)
{
    if (!w.evaluator || !(w.support_half_width > 0.0)) {
        throw std::invalid_argument("normalize: wavefunction has no evaluator or support");
    }
    const double edge = w.support_half_width;
    double peak = 0.0;
    constexpr int kProbe = 512;
    for (int i = 0; i <= kProbe; ++i) {
        const double x = -edge + 2.0 * edge * i / kProbe;
        peak = std::max(peak, std::abs(w.amplitude * w.evaluator(x)));
    }
    for (double v : w.values) {
        peak = std::max(peak, std::abs(v));
    }
    const double tail = std::max(std::abs(w.amplitude * w.evaluator(-edge)),
                                 std::abs(w.amplitude * w.evaluator(edge)));
    if (!(peak > 0.0) || tail > kNormalizeDecayThreshold * peak) {
        std::ostringstream msg;
        msg << "normalize: insufficient decay at |x|=" << edge << " (|psi|=" << tail
            << ", max=" << peak << ")";
        throw std::runtime_error(msg.str());
    }
    const double norm = l2_norm(w);
    SampledWavefunction out = w;
    out.norm = norm;
    out.amplitude = w.amplitude / norm;
    for (double& v : out.values) {
        v /= norm;
    }
    out.continuity_gap = w.continuity_gap / norm;
    out.derivative_gap = w.derivative_gap / norm;
    return out;
}

int node_count(const SampledWavefunction& w)
{
    double peak = 0.0;
    for (double v : w.values) {
        peak = std::max(peak, std::abs(v));
    }
    const double floor = 1e-10 * peak;
    int nodes = 0;
    int last_sign = 0;
    for (double v : w.values) {
        if (std::abs(v) <= floor) {
            continue;
        }
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) {
            ++nodes;
        }
        last_sign = sign;
    }
    return nodes;
}

}  // namespace mirrorwell
