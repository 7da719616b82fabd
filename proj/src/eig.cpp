#include "qmod/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qmod/error.hpp"

namespace qmod {

namespace {

// One two-sided Jacobi rotation zeroing A_pq.  The 2×2 Hermitian block
// [[α, γ], [γ̄, β]] is made real by the phase of γ, then rotated away.
// U has U_pp = e^{iφ}c, U_pq = e^{iφ}s, U_qp = −s, U_qq = c.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cplx apq = a.at(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const double alpha = a.at(p, p).real();
  const double beta = a.at(q, q).real();
  const cplx phase = apq / g;

  const double tau = (beta - alpha) / (2.0 * g);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const cplx upp = phase * c, upq = phase * s;
  const cplx uqp = -s, uqq = c;

  const int d = a.dim();
  // columns: A ← A·U
  for (int k = 0; k < d; ++k) {
    const cplx akp = a.at(k, p), akq = a.at(k, q);
    a.at(k, p) = akp * upp + akq * uqp;
    a.at(k, q) = akp * upq + akq * uqq;
  }
  // rows: A ← U†·A
  for (int k = 0; k < d; ++k) {
    const cplx apk = a.at(p, k), aqk = a.at(q, k);
    a.at(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a.at(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  // accumulate V ← V·U
  for (int k = 0; k < d; ++k) {
    const cplx vkp = v.at(k, p), vkq = v.at(k, q);
    v.at(k, p) = vkp * upp + vkq * uqp;
    v.at(k, q) = vkp * upq + vkq * uqq;
  }
  // clamp the annihilated pair against drift
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
}

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = r + 1; c < a.dim(); ++c) s += std::norm(a.at(r, c));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& m, double hermitian_tol) {
  const int d = m.dim();
  if (d == 0) fail("eigendecomposition of an empty matrix");
  const double scale = std::max(1.0, m.max_abs());
  if (!m.is_hermitian(hermitian_tol * scale)) fail("matrix is not Hermitian");

  // Symmetrize exactly to kill representation noise below the tolerance.
  ComplexMatrix a(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a.at(r, c) = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(d);
  const double stop = 1e-14 * std::max(1.0, a.frobenius());
  for (int sweep = 0; sweep < 80; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q)
        if (std::abs(a.at(p, q)) > stop / (d * d + 1)) rotate(a, v, p, q);
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a.at(x, x).real() < a.at(y, y).real(); });

  EigResult out;
  out.values.resize(d);
  out.vectors = ComplexMatrix(d);
  for (int j = 0; j < d; ++j) {
    out.values[j] = a.at(order[j], order[j]).real();
    for (int i = 0; i < d; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eig(m).values.front(); }

double operator_norm(const ComplexMatrix& m) {
  if (m.dim() == 0) fail("operator norm of an empty matrix");
  ComplexMatrix mm = matmul(m.adjoint(), m);
  double top = hermitian_eig(mm, 1e-6).values.back();
  return std::sqrt(std::max(0.0, top));
}

ComplexMatrix random_unitary(int d, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g.at(r, c) = cplx(n(rng), n(rng));

  // Gram-Schmidt on columns.
  for (int c = 0; c < d; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cplx dot = 0.0;
      for (int r = 0; r < d; ++r) dot += std::conj(g.at(r, prev)) * g.at(r, c);
      for (int r = 0; r < d; ++r) g.at(r, c) -= dot * g.at(r, prev);
    }
    double nrm = 0.0;
    for (int r = 0; r < d; ++r) nrm += std::norm(g.at(r, c));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) fail("degenerate random matrix in unitary sampling");
    for (int r = 0; r < d; ++r) g.at(r, c) /= nrm;
  }
  return g;
}

}  // namespace qmod
