#pragma once

#include <cmath>

namespace mirrorwell {

// Double-length real: the unevaluated sum value + correction, with
// |correction| <= ulp(value)/2. Gives roughly 31 significant digits, which
// is what the alternating Kummer series at z ~ 25 needs.
//
// Error-free transformations after Dekker and Knuth; products use fma.
class ExtendedReal {
public:
    constexpr ExtendedReal() = default;
    constexpr ExtendedReal(double v) : hi_(v), lo_(0.0) {}  // NOLINT: implicit by intent

    static ExtendedReal from_parts(double hi, double lo)
    {
        return normalized(hi, lo);
    }

    constexpr double value() const { return hi_; }
    constexpr double correction() const { return lo_; }

    // Rounded once.
    double to_double() const { return hi_ + lo_; }

    ExtendedReal operator-() const { return {-hi_, -lo_, raw_tag{}}; }

    friend ExtendedReal operator+(const ExtendedReal& x, const ExtendedReal& y)
    {
        double e1 = 0.0;
        double e2 = 0.0;
        double s = two_sum(x.hi_, y.hi_, e1);
        double t = two_sum(x.lo_, y.lo_, e2);
        e1 += t;
        s = quick_two_sum(s, e1, e1);
        e1 += e2;
        s = quick_two_sum(s, e1, e1);
        return {s, e1, raw_tag{}};
    }

    friend ExtendedReal operator-(const ExtendedReal& x, const ExtendedReal& y)
    {
        return x + (-y);
    }

    friend ExtendedReal operator*(const ExtendedReal& x, const ExtendedReal& y)
    {
        double err = 0.0;
        double p = two_prod(x.hi_, y.hi_, err);
        err += x.hi_ * y.lo_ + x.lo_ * y.hi_;
        p = quick_two_sum(p, err, err);
        return {p, err, raw_tag{}};
    }

    friend ExtendedReal operator/(const ExtendedReal& x, const ExtendedReal& y)
    {
        // Long division: two correction steps on the leading quotient.
        double q1 = x.hi_ / y.hi_;
        ExtendedReal r = x - y * ExtendedReal(q1);
        double q2 = r.hi_ / y.hi_;
        r = r - y * ExtendedReal(q2);
        double q3 = r.hi_ / y.hi_;
        double e = 0.0;
        q1 = quick_two_sum(q1, q2, e);
        return ExtendedReal(q1, e, raw_tag{}) + ExtendedReal(q3);
    }

    ExtendedReal& operator+=(const ExtendedReal& y) { return *this = *this + y; }
    ExtendedReal& operator-=(const ExtendedReal& y) { return *this = *this - y; }
    ExtendedReal& operator*=(const ExtendedReal& y) { return *this = *this * y; }
    ExtendedReal& operator/=(const ExtendedReal& y) { return *this = *this / y; }

    friend bool operator==(const ExtendedReal& x, const ExtendedReal& y)
    {
        return x.hi_ == y.hi_ && x.lo_ == y.lo_;
    }

    int sign() const { return (hi_ > 0.0) - (hi_ < 0.0); }
    bool is_zero() const { return hi_ == 0.0; }

    friend ExtendedReal abs(const ExtendedReal& x) { return x.hi_ < 0.0 ? -x : x; }

    // Exact: s + err == a + b.
    static double two_sum(double a, double b, double& err)
    {
        double s = a + b;
        double bb = s - a;
        err = (a - (s - bb)) + (b - bb);
        return s;
    }

    // Requires |a| >= |b|.
    static double quick_two_sum(double a, double b, double& err)
    {
        double s = a + b;
        err = b - (s - a);
        return s;
    }

    // Exact: p + err == a * b.
    static double two_prod(double a, double b, double& err)
    {
        double p = a * b;
        err = std::fma(a, b, -p);
        return p;
    }

    // a*a without rounding, as an ExtendedReal.
    static ExtendedReal exact_square(double a)
    {
        double err = 0.0;
        double p = two_prod(a, a, err);
        return {p, err, raw_tag{}};
    }

private:
    struct raw_tag {};
    constexpr ExtendedReal(double hi, double lo, raw_tag) : hi_(hi), lo_(lo) {}

    static ExtendedReal normalized(double hi, double lo)
    {
        double e = 0.0;
        double s = two_sum(hi, lo, e);
        return {s, e, raw_tag{}};
    }

    double hi_ = 0.0;
    double lo_ = 0.0;
};

}  // namespace mirrorwell
