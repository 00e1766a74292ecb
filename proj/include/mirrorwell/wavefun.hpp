#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mirrorwell/connection.hpp"
#include "mirrorwell/polyparams.hpp"

namespace mirrorwell {

enum class Side { Right, Left };  // x >= 0, x <= 0

struct UbarForm {
    double a = 0.0;
};
struct HermiteForm {
    int n = 0;
};

// One half of a piecewise eigenfunction. With t = sqrt_branch * (x + shift_sign * d)
// the piece is amplitude_sign * e^{-t^2/2} F(t), where F is Ubar(a; t) or H_n(t).
// For Ubar pieces sqrt_branch makes t -> +infinity at the piece's own infinity.
struct WavefunctionPiece {
    Side side = Side::Right;
    int shift_sign = -1;
    int sqrt_branch = +1;
    int amplitude_sign = +1;
    std::variant<UbarForm, HermiteForm> form;

    double local_coordinate(double d, double x) const
    {
        return sqrt_branch * (x + shift_sign * d);
    }
};

// y(s) = e^{-s^2/2} Ubar(a; s) with a = (1-E)/4, for s in [s_min, s_max].
// The Kummer series is used up to a switch point; beyond it, where the two
// Kummer terms cancel, y is continued by Taylor-series integration of
// y'' = (s^2 - E) y inward from far out, matched to the series at the switch.
class DecayingSolution {
public:
    struct Value {
        double y = 0.0;
        double dy = 0.0;  // dy/ds
    };

    DecayingSolution(double energy, double s_min, double s_max);

    Value operator()(double s) const;

    double switch_point() const { return switch_; }
    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }

private:
    struct Node {
        double s = 0.0;
        double y = 0.0;   // mantissa
        double dy = 0.0;  // mantissa
        int exponent = 0; // value = mantissa * 2^exponent
    };

    Value series(double s) const;
    Value tail(double s) const;

    double energy_ = 0.0;
    double a_ = 0.0;
    double s_min_ = 0.0;
    double s_max_ = 0.0;
    double switch_ = 0.0;
    std::vector<Node> nodes_;  // ascending s; nodes_.front().s == switch_
    double tail_factor_ = 1.0;
    int tail_exponent_ = 0;
};

// Series/Taylor switch for DecayingSolution: e^{25} cancellation still
// leaves ~20 digits of the double-length sum.
inline constexpr double kUbarSeriesSwitch = 5.0;
inline constexpr double kTaylorStep = 0.05;

// Piecewise eigenfunction of V_D or V_S built from Ubar pieces. Right piece
// amplitude +1, left piece +1 (even) or -1 (odd), then a global sign so that
// even states are positive in the right tail and odd states rise from 0.
class Eigenfunction {
public:
    Eigenfunction(WellKind kind, ParitySector sector, double d, double energy);

    double operator()(double x) const;
    double derivative(double x) const;

    double piece_value(Side side, double x) const;
    double piece_derivative(Side side, double x) const;
    const WavefunctionPiece& piece(Side side) const;

    double continuity_gap() const;
    double derivative_gap() const;

    WellKind kind() const { return kind_; }
    ParitySector sector() const { return sector_; }
    double d() const { return d_; }
    double energy() const { return energy_; }
    // Evaluation is supported on |x| <= support_half_width() + 1.
    double support_half_width() const;

private:
    WellKind kind_;
    ParitySector sector_;
    double d_;
    double energy_;
    WavefunctionPiece right_;
    WavefunctionPiece left_;
    DecayingSolution solution_;
};

double evaluate_eigenfunction(WellKind kind, ParitySector sector, double d, double energy,
                              double x);

// Pieces of a polynomial-type state.
WavefunctionPiece polynomial_piece(const PolynomialEigenstate& state, Side side);

template <typename T>
T evaluate_polynomial_eigenstate(const PolynomialEigenstate& state, T x, Side side)
{
    using std::exp;
    const bool right = side == Side::Right;
    const T t = x + T(right ? state.right_shift : state.left_shift) * T(state.d);
    const int sign = right ? state.signs.right : state.signs.left;
    return T(sign) * exp(-t * t / T(2)) * hermite(state.n, t);
}

template <typename T>
T evaluate_polynomial_eigenstate(const PolynomialEigenstate& state, T x)
{
    return evaluate_polynomial_eigenstate(state, x, x >= T(0) ? Side::Right : Side::Left);
}

template <typename T>
T polynomial_eigenstate_derivative(const PolynomialEigenstate& state, T x, Side side)
{
    using std::exp;
    const bool right = side == Side::Right;
    const T t = x + T(right ? state.right_shift : state.left_shift) * T(state.d);
    const int sign = right ? state.signs.right : state.signs.left;
    const T dh = state.n >= 1 ? T(2 * state.n) * hermite(state.n - 1, t) : T(0);
    return T(sign) * exp(-t * t / T(2)) * (dh - t * hermite(state.n, t));
}

struct SampledWavefunction {
    WellKind kind = WellKind::Double;
    ParitySector sector = ParitySector::Even;
    double d = 0.0;
    double energy = 0.0;
    std::vector<double> xs;      // ascending, contains 0
    std::vector<double> values;  // amplitude * evaluator(xs[i])
    double continuity_gap = 0.0;
    double derivative_gap = 0.0;
    std::optional<double> norm;  // L2 norm before the last normalize()

    // Continuous evaluator and the scale applied to it; normalize() integrates
    // amplitude^2 * evaluator^2 over [-support_half_width, support_half_width].
    std::function<double(double)> evaluator;
    double amplitude = 1.0;
    double support_half_width = 0.0;
};

// n_points equally spaced points on [x_min, x_max], with 0 inserted if absent.
// Requires x_min <= 0 <= x_max and x_min < x_max.
SampledWavefunction sample(WellKind kind, ParitySector sector, double d, double energy,
                           double x_min, double x_max, int n_points);
SampledWavefunction sample(const PolynomialEigenstate& state, double x_min, double x_max,
                           int n_points);

// Generic form for states without piecewise structure; gaps are left at 0.
SampledWavefunction sample(std::function<double(double)> evaluator, double x_min, double x_max,
                           int n_points, double support_half_width);

// Relative decay required at +-support_half_width before normalizing.
inline constexpr double kNormalizeDecayThreshold = 1e-8;

SampledWavefunction normalize(const SampledWavefunction& w);

// L2 norm of amplitude * evaluator by composite 64-point Gauss-Legendre on unit-width panels.
double l2_norm(const SampledWavefunction& w);

// Strict sign changes, ignoring samples with |v| <= 1e-10 max|v|.
int node_count(const SampledWavefunction& w);

// CSV with header "x,psi", 17 significant digits, LF endings.
std::string to_csv(const SampledWavefunction& w);

// One polyline per state; Double blue, Single red.
std::string to_svg(const std::vector<SampledWavefunction>& states, const std::string& caption);

}  // namespace mirrorwell
