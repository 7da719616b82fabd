#pragma once

#include <complex>
#include <vector>

namespace qmod {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.  The numeric layer of the
// library: representations, spectra, norms.  Exactness stops here;
// everything upstream of this type is rational.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int d) : d_(d), a_(static_cast<size_t>(d) * d) {}

  static ComplexMatrix identity(int d);

  int dim() const { return d_; }
  cplx& at(int r, int c) { return a_[static_cast<size_t>(r) * d_ + c]; }
  const cplx& at(int r, int c) const { return a_[static_cast<size_t>(r) * d_ + c]; }
  const std::vector<cplx>& data() const { return a_; }

  ComplexMatrix adjoint() const;
  // Entrywise complex conjugate (no transpose).
  ComplexMatrix conj() const;
  cplx trace() const;
  double max_abs() const;       // entrywise sup
  double frobenius() const;
  bool is_hermitian(double tol) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx z, const ComplexMatrix& a);

 private:
  int d_ = 0;
  std::vector<cplx> a_;
};

// Matrix product kernels.  The parallel kernel splits rows across OpenMP
// threads; each output entry is accumulated in the same order as the serial
// reference, so the two agree bitwise.
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b);
// Dispatch: serial below a size threshold, parallel above.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

// Batched spectral helpers used by the audit loops (one result per input,
// order-preserving; the parallel variants split the batch).
std::vector<double> batch_min_eigenvalue_serial(const std::vector<ComplexMatrix>& ms);
std::vector<double> batch_min_eigenvalue_parallel(const std::vector<ComplexMatrix>& ms);
std::vector<double> batch_min_eigenvalue(const std::vector<ComplexMatrix>& ms);
std::vector<double> batch_operator_norm_serial(const std::vector<ComplexMatrix>& ms);
std::vector<double> batch_operator_norm_parallel(const std::vector<ComplexMatrix>& ms);
std::vector<double> batch_operator_norm(const std::vector<ComplexMatrix>& ms);

}  // namespace qmod
