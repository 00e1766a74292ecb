#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mirrorwell {

struct RootResult {
    double root = 0.0;
    double value = 0.0;
    double low = 0.0;   // final bracket
    double high = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Brent's method (bisection with secant and inverse quadratic steps) on a
// bracket [low, high] with f(low) f(high) <= 0. Stops when the bracket is
// narrower than 2*tol.
template <typename F>
RootResult brent_root(F&& f, double low, double high, double f_low, double f_high, double tol,
                      int max_iter)
{
    if (f_low * f_high > 0.0) {
        throw std::invalid_argument("brent_root: root not bracketed");
    }
    RootResult out;
    if (f_low == 0.0) {
        return {low, 0.0, low, low, 0, true};
    }
    if (f_high == 0.0) {
        return {high, 0.0, high, high, 0, true};
    }

    double a = low;
    double b = high;
    double fa = f_low;
    double fb = f_high;
    double c = a;
    double fc = fa;
    double step = b - a;
    double prev_step = step;

    for (int iter = 1; iter <= max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            step = prev_step = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
        const double half = 0.5 * (c - b);
        if (std::abs(half) <= tol1 || fb == 0.0) {
            out.root = b;
            out.value = fb;
            out.low = std::min(b, c);
            out.high = std::max(b, c);
            out.iterations = iter;
            out.converged = true;
            return out;
        }
        if (std::abs(prev_step) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p = 0.0;
            double q = 0.0;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * half * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * half * q - std::abs(tol1 * q), std::abs(prev_step * q))) {
                prev_step = step;
                step = p / q;
            } else {
                step = half;
                prev_step = step;
            }
        } else {
            step = half;
            prev_step = step;
        }
        a = b;
        fa = fb;
        b += std::abs(step) > tol1 ? step : std::copysign(tol1, half);
        fb = f(b);
        out.iterations = iter;
    }
    out.root = b;
    out.value = fb;
    out.low = std::min(b, c);
    out.high = std::max(b, c);
    out.converged = false;
    return out;
}

}  // namespace mirrorwell
