#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qmod/eig.hpp"
#include "qmod/error.hpp"
#include "qmod/matrix.hpp"

using namespace qmod;

namespace {

ComplexMatrix random_matrix(int d, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = cplx(u(rng), u(rng));
  return m;
}

ComplexMatrix random_hermitian(int d, uint64_t seed) {
  ComplexMatrix m = random_matrix(d, seed);
  ComplexMatrix h(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      h.at(r, c) = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));
  return h;
}

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (size_t i = 0; i < a.data().size(); ++i)
    if (a.data()[i] != b.data()[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("matmul against a hand-expanded 2x2 product") {
  ComplexMatrix a(2), b(2);
  a.at(0, 0) = cplx(1, 1);
  a.at(0, 1) = cplx(0, 2);
  a.at(1, 0) = cplx(3, 0);
  a.at(1, 1) = cplx(-1, 0);
  b.at(0, 0) = cplx(2, 0);
  b.at(0, 1) = cplx(0, 1);
  b.at(1, 0) = cplx(1, -1);
  b.at(1, 1) = cplx(4, 0);

  // Row 1: (1+i)*2 + 2i*(1-i)  = 2+2i + 2i+2 = 4+4i
  //        (1+i)*i + 2i*4      = -1+i + 8i   = -1+9i
  // Row 2: 3*2 + (-1)*(1-i)    = 5+i
  //        3*i + (-1)*4        = -4+3i
  ComplexMatrix p = a * b;
  CHECK(p.at(0, 0) == cplx(4, 4));
  CHECK(p.at(0, 1) == cplx(-1, 9));
  CHECK(p.at(1, 0) == cplx(5, 1));
  CHECK(p.at(1, 1) == cplx(-4, 3));
}

TEST_CASE("serial and parallel matmul agree bitwise") {
  for (int d : {1, 7, 48, 65}) {
    ComplexMatrix a = random_matrix(d, 100 + static_cast<uint64_t>(d));
    ComplexMatrix b = random_matrix(d, 200 + static_cast<uint64_t>(d));
    ComplexMatrix s = matmul_serial(a, b);
    ComplexMatrix p = matmul_parallel(a, b);
    CHECK(bitwise_equal(s, p));
    CHECK(bitwise_equal(s, matmul(a, b)));
  }
}

TEST_CASE("matmul rejects dimension mismatch") {
  CHECK_THROWS_AS(matmul(ComplexMatrix(2), ComplexMatrix(3)), Error);
}

TEST_CASE("adjoint, trace, identity") {
  ComplexMatrix m(2);
  m.at(0, 1) = cplx(1, 2);
  m.at(1, 1) = cplx(0, 3);
  ComplexMatrix a = m.adjoint();
  CHECK(a.at(1, 0) == cplx(1, -2));
  CHECK(a.at(1, 1) == cplx(0, -3));
  CHECK(m.trace() == cplx(0, 3));
  ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(bitwise_equal(id * id, id));
  CHECK(id.trace() == cplx(3, 0));
}

TEST_CASE("hermitian_eig on fixed oracles") {
  SUBCASE("identity: all eigenvalues 1") {
    EigResult e = hermitian_eig(ComplexMatrix::identity(4));
    for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("diag(3, -4): ascending (-4, 3)") {
    ComplexMatrix m(2);
    m.at(0, 0) = 3;
    m.at(1, 1) = -4;
    EigResult e = hermitian_eig(m);
    CHECK(e.values[0] == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("[[0,1],[1,0]]: eigenvalues (-1, 1)") {
    // Characteristic polynomial t^2 - 1.
    ComplexMatrix m(2);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    EigResult e = hermitian_eig(m);
    CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eig rejects a non-Hermitian matrix") {
  ComplexMatrix m(2);
  m.at(0, 1) = cplx(1, 0);
  m.at(1, 0) = cplx(0.5, 0);
  CHECK_THROWS_AS(hermitian_eig(m), Error);
}

TEST_CASE("hermitian_eig reconstruction and unitarity on random input") {
  for (int d : {1, 2, 5, 12, 25, 40}) {
    ComplexMatrix m = random_hermitian(d, 7000 + static_cast<uint64_t>(d));
    EigResult e = hermitian_eig(m);
    const double scale = std::max(1.0, m.max_abs());

    // ascending order
    for (size_t i = 1; i < e.values.size(); ++i) CHECK(e.values[i - 1] <= e.values[i]);

    // m = V Λ V†
    ComplexMatrix lam(d);
    for (int i = 0; i < d; ++i) lam.at(i, i) = e.values[i];
    ComplexMatrix rec = e.vectors * lam * e.vectors.adjoint();
    CHECK((m - rec).max_abs() <= 1e-9 * scale);

    // V†V = I
    ComplexMatrix gram = e.vectors.adjoint() * e.vectors;
    CHECK((gram - ComplexMatrix::identity(d)).max_abs() <= 1e-9);
  }
}

TEST_CASE("operator_norm oracles") {
  CHECK(operator_norm(ComplexMatrix(3)) == doctest::Approx(0.0));
  ComplexMatrix d2(2);
  d2.at(0, 0) = 3;
  d2.at(1, 1) = -4;
  CHECK(operator_norm(d2) == doctest::Approx(4.0).epsilon(1e-10));
  // m†m = diag(0, 4), so the norm is 2.
  ComplexMatrix n(2);
  n.at(0, 1) = 2;
  CHECK(operator_norm(n) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("min_eigenvalue matches hermitian_eig") {
  ComplexMatrix m = random_hermitian(9, 31);
  EigResult e = hermitian_eig(m);
  CHECK(min_eigenvalue(m) == doctest::Approx(e.values.front()).epsilon(1e-12));
}

TEST_CASE("random_unitary is unitary and seed-stable") {
  for (int d : {1, 3, 8}) {
    ComplexMatrix u = random_unitary(d, 42);
    ComplexMatrix gram = u.adjoint() * u;
    CHECK((gram - ComplexMatrix::identity(d)).max_abs() <= 1e-12);
    CHECK(bitwise_equal(u, random_unitary(d, 42)));
    if (d > 1) CHECK_FALSE(bitwise_equal(u, random_unitary(d, 43)));
  }
}

TEST_CASE("batched spectral helpers match their scalar counterparts") {
  std::vector<ComplexMatrix> ms;
  for (int i = 0; i < 12; ++i) ms.push_back(random_hermitian(3 + i % 4, 900 + static_cast<uint64_t>(i)));
  std::vector<double> mins_s = batch_min_eigenvalue_serial(ms);
  std::vector<double> mins_p = batch_min_eigenvalue_parallel(ms);
  std::vector<double> norms_s = batch_operator_norm_serial(ms);
  std::vector<double> norms_p = batch_operator_norm_parallel(ms);
  REQUIRE(mins_s.size() == ms.size());
  for (size_t i = 0; i < ms.size(); ++i) {
    CHECK(mins_s[i] == mins_p[i]);
    CHECK(norms_s[i] == norms_p[i]);
    CHECK(mins_s[i] == min_eigenvalue(ms[i]));
    CHECK(norms_s[i] == operator_norm(ms[i]));
  }
  CHECK(batch_min_eigenvalue(ms) == mins_s);
  CHECK(batch_operator_norm(ms) == norms_s);
}
