#pragma once

// Eigenpairs of real symmetric tridiagonal matrices by Sturm-sequence
// bisection (eigenvalues) and inverse iteration (eigenvectors).

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qls::tridiag {

struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size n-1; entry i couples i and i+1

  std::size_t size() const { return diagonal.size(); }
};

// Number of eigenvalues strictly below `shift` (negative pivots of the
// LDL^T factorization of T - shift).
std::size_t count_below(const SymmetricTridiagonal& t, double shift);

// Interval containing the whole spectrum.
std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& t);

// k-th smallest eigenvalue (0-based), bisected inside [lower, upper] to
// about machine precision. The interval must contain it.
double eigenvalue(const SymmetricTridiagonal& t, std::size_t k, double lower,
                  double upper);

// Unit-norm eigenvector for the eigenvalue `lambda`, orthogonalised against
// `previous` (unit vectors of nearby eigenvalues). Throws
// qls::NumericalError if the iteration stalls.
std::vector<double> eigenvector(const SymmetricTridiagonal& t, double lambda,
                                std::span<const std::vector<double>> previous = {},
                                int max_iterations = 12);

}  // namespace qls::tridiag
