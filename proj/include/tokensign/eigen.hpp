#pragma once

#include <span>
#include <vector>

#include "tokensign/matrix.hpp"

namespace tokensign {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double tolerance = 1e-12;
};

struct EigenDecomposition {
  int order = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major; column j is the eigenvector of values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a dense symmetric row-major matrix. Stops when
/// the off-diagonal Frobenius norm drops below tol times the initial norm.
EigenDecomposition jacobi_eigen(std::span<const double> symmetric, int order, double tol = 1e-12,
                                int max_sweeps = 100);

Spectrum eigenvalues_symmetric(const ExactMatrix& m, double tol = 1e-12);

/// Elementwise comparison of two ascending lists.
bool spectra_match(std::span<const double> a, std::span<const double> b, double tol);

}  // namespace tokensign
