#include "qmod/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qmod/eig.hpp"
#include "qmod/error.hpp"

namespace qmod {

namespace {

// Below this dimension the parallel kernel's fork overhead dominates.
constexpr int kParallelCutoff = 48;

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) fail("matrix dimension mismatch");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int d) {
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(d_);
  for (int r = 0; r < d_; ++r)
    for (int c = 0; c < d_; ++c) m.at(c, r) = std::conj(at(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix m(d_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = std::conj(a_[i]);
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < d_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const cplx& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < d_; ++r)
    for (int c = r; c < d_; ++c)
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
  return true;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  ComplexMatrix m(a.d_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  ComplexMatrix m(a.d_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

ComplexMatrix operator*(cplx z, const ComplexMatrix& a) {
  ComplexMatrix m(a.d_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = z * a.a_[i];
  return m;
}

namespace {

inline void matmul_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out, int r) {
  const int d = a.dim();
  for (int c = 0; c < d; ++c) {
    cplx acc = 0.0;
    for (int k = 0; k < d; ++k) acc += a.at(r, k) * b.at(k, c);
    out.at(r, c) = acc;
  }
}

}  // namespace

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  ComplexMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r) matmul_row(a, b, out, r);
  return out;
}

ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  ComplexMatrix out(a.dim());
  const int d = a.dim();
#pragma omp parallel for schedule(static)
  for (int r = 0; r < d; ++r) matmul_row(a, b, out, r);
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
#ifdef QMOD_HAVE_OPENMP
  if (a.dim() >= kParallelCutoff) return matmul_parallel(a, b);
#endif
  return matmul_serial(a, b);
}

std::vector<double> batch_min_eigenvalue_serial(const std::vector<ComplexMatrix>& ms) {
  std::vector<double> out(ms.size());
  for (size_t i = 0; i < ms.size(); ++i) out[i] = min_eigenvalue(ms[i]);
  return out;
}

std::vector<double> batch_min_eigenvalue_parallel(const std::vector<ComplexMatrix>& ms) {
  std::vector<double> out(ms.size());
  const auto n = static_cast<long>(ms.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = min_eigenvalue(ms[i]);
  return out;
}

std::vector<double> batch_min_eigenvalue(const std::vector<ComplexMatrix>& ms) {
#ifdef QMOD_HAVE_OPENMP
  if (ms.size() >= 8) return batch_min_eigenvalue_parallel(ms);
#endif
  return batch_min_eigenvalue_serial(ms);
}

std::vector<double> batch_operator_norm_serial(const std::vector<ComplexMatrix>& ms) {
  std::vector<double> out(ms.size());
  for (size_t i = 0; i < ms.size(); ++i) out[i] = operator_norm(ms[i]);
  return out;
}

std::vector<double> batch_operator_norm_parallel(const std::vector<ComplexMatrix>& ms) {
  std::vector<double> out(ms.size());
  const auto n = static_cast<long>(ms.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = operator_norm(ms[i]);
  return out;
}

std::vector<double> batch_operator_norm(const std::vector<ComplexMatrix>& ms) {
#ifdef QMOD_HAVE_OPENMP
  if (ms.size() >= 8) return batch_operator_norm_parallel(ms);
#endif
  return batch_operator_norm_serial(ms);
}

}  // namespace qmod
