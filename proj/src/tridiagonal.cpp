#include "mirrorwell/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mirrorwell {

std::size_t count_below(const SymmetricTridiagonal& m, double lambda)
{
    const std::size_t n = m.size();
    std::size_t negatives = 0;
    double pivot = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double coupling = i == 0 ? 0.0 : m.off_diagonal[i - 1] * m.off_diagonal[i - 1];
        pivot = m.diagonal[i] - lambda - (i == 0 ? 0.0 : coupling / pivot);
        if (pivot == 0.0) {
            pivot = -std::numeric_limits<double>::epsilon() *
                    (std::abs(m.diagonal[i]) + std::abs(lambda) + 1.0);
        }
        if (pivot < 0.0) {
            ++negatives;
        }
    }
    return negatives;
}

std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& m)
{
    if (m.size() == 0) {
        throw std::invalid_argument("gershgorin_bounds: empty matrix");
    }
    double low = std::numeric_limits<double>::infinity();
    double high = -low;
    for (std::size_t i = 0; i < m.size(); ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(m.off_diagonal[i - 1]);
        }
        if (i + 1 < m.size()) {
            radius += std::abs(m.off_diagonal[i]);
        }
        low = std::min(low, m.diagonal[i] - radius);
        high = std::max(high, m.diagonal[i] + radius);
    }
    return {low, high};
}

double kth_eigenvalue(const SymmetricTridiagonal& m, std::size_t k, double low, double high)
{
    if (k >= m.size()) {
        throw std::out_of_range("kth_eigenvalue: index exceeds matrix size");
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (low + high);
        if (mid <= low || mid >= high) {
            break;  // interval exhausted at double resolution
        }
        if (count_below(m, mid) > k) {
            high = mid;
        } else {
            low = mid;
        }
    }
    return 0.5 * (low + high);
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& m, std::size_t count)
{
    if (count > m.size()) {
        throw std::out_of_range("lowest_eigenvalues: more eigenvalues requested than rows");
    }
    const auto [low, high] = gershgorin_bounds(m);
    std::vector<double> out;
    out.reserve(count);
    double floor = low;
    for (std::size_t k = 0; k < count; ++k) {
        const double value = kth_eigenvalue(m, k, floor, high);
        out.push_back(value);
        floor = std::max(low, value - 1e-9 * (1.0 + std::abs(value)));
    }
    return out;
}

std::vector<double> eigenvector(const SymmetricTridiagonal& m, double eigenvalue)
{
    const std::size_t n = m.size();
    if (n == 0) {
        throw std::invalid_argument("eigenvector: empty matrix");
    }
    // Shift slightly off the eigenvalue so the factorization stays regular.
    const double shift = eigenvalue + 1e-10 * (1.0 + std::abs(eigenvalue));
    std::vector<double> x(n, 1.0);
    std::vector<double> c(n);
    std::vector<double> y(n);
    for (int sweep = 0; sweep < 3; ++sweep) {
        // Thomas algorithm on (M - shift I) y = x.
        double denom = m.diagonal[0] - shift;
        if (denom == 0.0) {
            denom = 1e-300;
        }
        c[0] = n > 1 ? m.off_diagonal[0] / denom : 0.0;
        y[0] = x[0] / denom;
        for (std::size_t i = 1; i < n; ++i) {
            const double sub = m.off_diagonal[i - 1];
            denom = m.diagonal[i] - shift - sub * c[i - 1];
            if (denom == 0.0) {
                denom = 1e-300;
            }
            c[i] = i + 1 < n ? m.off_diagonal[i] / denom : 0.0;
            y[i] = (x[i] - sub * y[i - 1]) / denom;
        }
        for (std::size_t i = n - 1; i-- > 0;) {
            y[i] -= c[i] * y[i + 1];
        }
        double norm = 0.0;
        for (double v : y) {
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = y[i] / norm;
        }
    }
    return x;
}

}  // namespace mirrorwell
