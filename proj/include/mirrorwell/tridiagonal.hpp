#pragma once

#include <span>
#include <vector>

namespace mirrorwell {

// Symmetric tridiagonal matrix: diagonal[i], and off_diagonal[i] coupling
// rows i and i+1 (size n-1).
struct SymmetricTridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    std::size_t size() const { return diagonal.size(); }
};

// Number of eigenvalues strictly below lambda (Sturm sequence via LDL^T pivots).
std::size_t count_below(const SymmetricTridiagonal& m, double lambda);

// Gershgorin interval containing the whole spectrum.
std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& m);

// k-th smallest eigenvalue (k = 0, 1, ...) by bisection on count_below,
// searched in [low, high].
double kth_eigenvalue(const SymmetricTridiagonal& m, std::size_t k, double low, double high);

// The lowest `count` eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& m, std::size_t count);

// Eigenvector for a known eigenvalue by inverse iteration, unit Euclidean norm.
std::vector<double> eigenvector(const SymmetricTridiagonal& m, double eigenvalue);

}  // namespace mirrorwell
