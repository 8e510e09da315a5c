#pragma once

#include <cstddef>
#include <vector>

namespace privclust {

// Dense symmetric matrix, row-major, size x size.
struct SymmetricMatrix {
  std::size_t size = 0;
  std::vector<double> values;

  explicit SymmetricMatrix(std::size_t n = 0) : size(n), values(n * n, 0.0) {}
  double operator()(std::size_t r, std::size_t c) const { return values[r * size + c]; }
  double& operator()(std::size_t r, std::size_t c) { return values[r * size + c]; }
};

struct EigenDecomposition {
  // Sorted nonincreasing.
  std::vector<double> eigenvalues;
  // vectors[j] is the unit eigenvector for eigenvalues[j].
  std::vector<std::vector<double>> vectors;
  int sweeps = 0;
};

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
// drops below the tolerance (relative to the matrix scale for large inputs)
// or after max_sweeps.
EigenDecomposition symmetric_eigen(SymmetricMatrix a, const JacobiOptions& options = {});

}  // namespace privclust
