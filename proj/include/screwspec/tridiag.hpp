#pragma once

#include <span>
#include <vector>

namespace screwspec::tridiag {

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// strictly below x, from the Sturm sequence sign count.
int count_below(std::span<const double> diag, std::span<const double> off, double x);

/// The k smallest eigenvalues, ascending, by Gerschgorin-bracketed bisection
/// on the Sturm count. off has diag.size() - 1 entries.
std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> off, int k);

/// Eigenvector for an isolated eigenvalue by shifted inverse iteration.
/// Returned vector is 2-norm normalized with its first significant component
/// positive.
std::vector<double> eigenvector(std::span<const double> diag, std::span<const double> off,
                                double eigenvalue);

}  // namespace screwspec::tridiag
