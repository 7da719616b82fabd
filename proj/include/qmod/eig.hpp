#pragma once

#include <cstdint>
#include <vector>

#include "qmod/matrix.hpp"

namespace qmod {

// Eigendecomposition of a Hermitian matrix: values ascending, vectors
// unitary column-wise (m = V diag(values) V†).
struct EigResult {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Cyclic complex Jacobi.  Errors when m is not Hermitian within hermitian_tol
// (relative to the entrywise scale).
EigResult hermitian_eig(const ComplexMatrix& m, double hermitian_tol = 1e-8);

double min_eigenvalue(const ComplexMatrix& m);

// ‖m‖ = sqrt(λ_max(m† m)); defined for every square matrix.
double operator_norm(const ComplexMatrix& m);

// Haar-ish random unitary: Gram-Schmidt of a random complex Gaussian matrix.
class Sampler;
ComplexMatrix random_unitary(int d, uint64_t seed);

}  // namespace qmod
