#include "mirrorwell/polyparams.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mirrorwell/root_finding.hpp"
#include "mirrorwell/tridiagonal.hpp"

namespace mirrorwell {

namespace {

void require_degree(int n)
{
    if (n < 1 || n > kMaxPolynomialDegree) {
        throw std::invalid_argument("polynomial degree must lie in [1, 100]");
    }
}

// Orthonormal Hermite functions without the Gaussian: h_k = H_k / sqrt(2^k k! sqrt(pi)).
// Same zeros and signs as H_k, no overflow for the degrees used here.
struct HermitePair {
    double previous = 0.0;  // h_{n-1}
    double current = 0.0;   // h_n
};

HermitePair normalized_hermite(int n, double x)
{
    double prev = 0.0;
    double cur = 1.0 / std::sqrt(std::sqrt(kPi));
    for (int k = 0; k < n; ++k) {
        const double next =
            std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return {prev, cur};
}

// Same sign as H_n'(x) - x H_n(x); uses H_n' = 2n H_{n-1} and H_n/H_{n-1} scaling sqrt(2n).
double even_branch(int n, double x)
{
    const HermitePair h = normalized_hermite(n, x);
    return std::sqrt(2.0 * n) * h.previous - x * h.current;
}

double polish(auto&& f, double low, double high)
{
    const double f_low = f(low);
    const double f_high = f(high);
    if (f_low * f_high > 0.0) {
        throw std::logic_error("polyparams: polishing interval lost its sign change");
    }
    return brent_root(f, low, high, f_low, f_high, 1e-15, 200).root;
}

}  // namespace

std::size_t expected_even_count(int n)
{
    const int outer = (n % 2 != 0) ? n + 1 : n;
    return static_cast<std::size_t>(outer / 2);
}

std::size_t expected_odd_count(int n)
{
    const int inner = (n % 2 == 0) ? n + 1 : n;
    return static_cast<std::size_t>(inner / 2);
}

double hermite_zero_bound(int n)
{
    const double m = 2.0 * n + 1.0;
    return std::sqrt(m) - kHermiteZeroBoundConstant / std::cbrt(std::sqrt(m));
}

std::vector<double> odd_params(int n)
{
    require_degree(n);
    // Jacobi matrix of the Hermite recurrence: zero diagonal, off-diagonal sqrt(k/2).
    SymmetricTridiagonal jacobi;
    jacobi.diagonal.assign(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k < n; ++k) {
        jacobi.off_diagonal.push_back(std::sqrt(k / 2.0));
    }
    const std::vector<double> zeros = lowest_eigenvalues(jacobi, static_cast<std::size_t>(n));

    auto h = [n](double x) { return normalized_hermite(n, x).current; };
    std::vector<double> positive;
    for (std::size_t i = static_cast<std::size_t>(n + 1) / 2; i < zeros.size(); ++i) {
        const double x = zeros[i];
        double width = 1e-9 * (1.0 + x);
        while (h(x - width) * h(x + width) > 0.0 && width < 1e-3) {
            width *= 4.0;
        }
        positive.push_back(polish(h, x - width, x + width));
    }
    return positive;
}

std::vector<double> even_params(int n)
{
    require_degree(n);
    // The roots are the critical points of e^{-x^2/2} H_n, so they interlace
    // with the Hermite zeros: one between consecutive zeros and one beyond the last.
    std::vector<double> edges;
    if (n % 2 != 0) {
        edges.push_back(0.0);
    }
    const std::vector<double> zeros = odd_params(n);
    edges.insert(edges.end(), zeros.begin(), zeros.end());
    const double cap = std::sqrt(2.0 * n + 3.0);
    if (!edges.empty() && edges.back() >= cap) {
        throw std::runtime_error("even_params: Hermite zero beyond the scan cap");
    }
    edges.push_back(cap);

    auto g = [n](double x) { return even_branch(n, x); };
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i];
        const double hi = edges[i + 1];
        if (g(lo) * g(hi) > 0.0) {
            std::ostringstream msg;
            msg << "even_params(" << n << "): no sign change on [" << lo << ", " << hi << "]";
            if (i + 2 == edges.size()) {
                msg << "; largest root lies beyond sqrt(2n+3)";
            }
            throw std::runtime_error(msg.str());
        }
        roots.push_back(polish(g, lo, hi));
    }
    return roots;
}

PolynomialParameterSet parameter_set(int n)
{
    return {n, even_params(n), odd_params(n)};
}

PolynomialEigenstate build_eigenstate(int n, int j, ParitySector sector, WellKind kind)
{
    const std::vector<double> params = sector == ParitySector::Even ? even_params(n) : odd_params(n);
    if (j < 1 || static_cast<std::size_t>(j) > params.size()) {
        std::ostringstream msg;
        msg << "build_eigenstate: j=" << j << " outside 1.." << params.size() << " for n=" << n
            << " (" << to_string(sector) << ")";
        throw std::out_of_range(msg.str());
    }
    PolynomialEigenstate s;
    s.n = n;
    s.d = params[static_cast<std::size_t>(j - 1)];
    s.sector = sector;
    s.kind = kind;
    s.energy = 2.0 * n + 1.0;
    const int parity = n % 2 == 0 ? 1 : -1;
    const int odd_flip = sector == ParitySector::Odd ? -1 : 1;
    if (kind == WellKind::Double) {
        s.left_shift = +1;
        s.right_shift = -1;
        s.signs = {odd_flip, parity};
    } else {
        s.left_shift = -1;
        s.right_shift = +1;
        s.signs = {parity, odd_flip};
    }
    return s;
}

EigenvalueRecord polynomial_record(const PolynomialEigenstate& state, int index_in_sector)
{
    EigenvalueRecord r;
    r.kind = state.kind;
    r.sector = state.sector;
    r.index = index_in_sector;
    r.d = state.d;
    r.energy = state.energy;
    r.bracket = {state.energy, state.energy};
    r.method = Method::Polynomial;
    r.residual = std::numeric_limits<double>::quiet_NaN();
    if (state.d <= kConditionMaxAbsD && state.energy < kConditionMaxEnergy) {
        r.residual = condition(state.kind, state.sector, state.d, state.energy).relative();
    }
    return r;
}

}  // namespace mirrorwell
