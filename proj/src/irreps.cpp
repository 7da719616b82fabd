#include "qmod/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qmod/eig.hpp"
#include "qmod/error.hpp"

namespace qmod {

namespace {

// An invariant subspace of the regular representation, held as orthonormal
// columns of length |G|.
using Cols = std::vector<std::vector<cplx>>;

// V† λ(a) V, using that λ(a) permutes coordinates: (λ(a)v)[i] = v[a⁻¹·i].
ComplexMatrix restricted_image(const FiniteGroup& g, uint32_t a, const Cols& v) {
  const int k = static_cast<int>(v.size());
  const int d = static_cast<int>(v[0].size());
  const uint32_t ainv = g.inv(a);
  ComplexMatrix out(k);
  std::vector<cplx> w(d);
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < d; ++i)
      w[i] = v[c][g.mul(ainv, static_cast<uint32_t>(i))];
    for (int r = 0; r < k; ++r) {
      cplx s = 0.0;
      for (int i = 0; i < d; ++i) s += std::conj(v[r][i]) * w[i];
      out.at(r, c) = s;
    }
  }
  return out;
}

ComplexMatrix random_hermitian(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix x(k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) x.at(r, c) = cplx(u(rng), u(rng));
  return cplx(0.5) * (x + x.adjoint());
}

// Recursive commutant splitting.  Appends the invariant subspaces carrying
// irreducible summands to `leaves`.
void split(const FiniteGroup& g, Cols v, std::mt19937_64& rng, std::vector<Cols>& leaves) {
  const int k = static_cast<int>(v.size());
  if (k == 1) {
    leaves.push_back(std::move(v));
    return;
  }
  std::vector<ComplexMatrix> pi(g.order());
  for (uint32_t a = 0; a < g.order(); ++a) pi[a] = restricted_image(g, a, v);

  int scalar_votes = 0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    // Average a random Hermitian over the action; the result commutes with
    // every pi[a], so its eigenspace clusters are invariant subspaces.
    ComplexMatrix h0 = random_hermitian(k, rng);
    ComplexMatrix h(k);
    for (uint32_t a = 0; a < g.order(); ++a)
      h = h + matmul_serial(matmul_serial(pi[a], h0), pi[a].adjoint());
    h = cplx(1.0 / g.order()) * (cplx(0.5) * (h + h.adjoint()));

    EigResult eig = hermitian_eig(h, 1e-6);
    const double lo = eig.values.front();
    const double hi = eig.values.back();
    const double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});

    if (hi - lo <= 1e-7 * scale) {
      // Commutant element is scalar; demand a second independent vote
      // before certifying irreducibility.
      if (++scalar_votes == 2) {
        leaves.push_back(std::move(v));
        return;
      }
      continue;
    }
    scalar_votes = 0;

    // Cluster eigenvalues by gaps.
    std::vector<std::pair<int, int>> clusters;
    int start = 0;
    for (int i = 1; i < k; ++i) {
      if (eig.values[i] - eig.values[i - 1] >= 1e-6 * scale) {
        clusters.push_back({start, i});
        start = i;
      }
    }
    clusters.push_back({start, k});
    if (clusters.size() < 2) continue;  // no clean gap, resample

    for (const auto& [i0, i1] : clusters) {
      Cols sub;
      for (int j = i0; j < i1; ++j) {
        std::vector<cplx> col(v[0].size(), 0.0);
        for (int t = 0; t < k; ++t) {
          const cplx w = eig.vectors.at(t, j);
          for (size_t i = 0; i < col.size(); ++i) col[i] += w * v[t][i];
        }
        sub.push_back(std::move(col));
      }
      split(g, std::move(sub), rng, leaves);
    }
    return;
  }
  fail("decompose_irreps: splitting failed to converge");
}

// Deterministic comparison of character rows with a tolerance band.
bool char_less(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i].real() - b[i].real()) > 5e-7) return a[i].real() < b[i].real();
    if (std::fabs(a[i].imag() - b[i].imag()) > 5e-7) return a[i].imag() < b[i].imag();
  }
  return false;
}

double char_dist(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

IrrepSet attempt_decompose(const Carrier& c, uint64_t seed, uint64_t round_seed) {
  const FiniteGroup& g = c.group();
  const uint32_t n = g.order();
  std::mt19937_64 rng(round_seed);

  Cols top;
  for (uint32_t j = 0; j < n; ++j) {
    std::vector<cplx> e(n, 0.0);
    e[j] = 1.0;
    top.push_back(std::move(e));
  }
  std::vector<Cols> leaves;
  split(g, std::move(top), rng, leaves);

  // Materialize each leaf as a checked representation with its character.
  struct Leaf {
    Representation rep;
    std::vector<cplx> character;
  };
  std::vector<Leaf> built;
  for (const Cols& v : leaves) {
    std::vector<ComplexMatrix> images;
    std::vector<cplx> chi;
    images.reserve(n);
    for (uint32_t a = 0; a < n; ++a) {
      images.push_back(restricted_image(g, a, v));
      chi.push_back(images.back().trace());
    }
    built.push_back({Representation::group_rep(c, std::move(images), Flag::yes),
                     std::move(chi)});
  }

  // Group leaves into unitary-equivalence classes by character.
  std::vector<size_t> class_of(built.size(), SIZE_MAX);
  std::vector<size_t> class_head;
  std::vector<uint32_t> class_count;
  for (size_t i = 0; i < built.size(); ++i) {
    for (size_t k = 0; k < class_head.size(); ++k) {
      if (char_dist(built[i].character, built[class_head[k]].character) < 1e-6) {
        class_of[i] = k;
        ++class_count[k];
        break;
      }
    }
    if (class_of[i] == SIZE_MAX) {
      class_of[i] = class_head.size();
      class_head.push_back(i);
      class_count.push_back(1);
    }
  }

  // The regular representation contains each irreducible with multiplicity
  // equal to its dimension; Σ d² = |G| exactly.
  uint64_t sum_sq = 0;
  for (size_t k = 0; k < class_head.size(); ++k) {
    const uint32_t d = static_cast<uint32_t>(built[class_head[k]].rep.dim());
    if (class_count[k] != d) fail("decompose_irreps: multiplicity does not match dimension");
    sum_sq += static_cast<uint64_t>(d) * d;
  }
  if (sum_sq != n) fail("decompose_irreps: dimension count does not add up");

  std::vector<size_t> order(class_head.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const int dx = built[class_head[x]].rep.dim();
    const int dy = built[class_head[y]].rep.dim();
    if (dx != dy) return dx < dy;
    return char_less(built[class_head[x]].character, built[class_head[y]].character);
  });

  IrrepSet out;
  out.carrier = c;
  out.seed = seed;
  for (size_t k : order) {
    out.reps.push_back(built[class_head[k]].rep);
    out.multiplicities.push_back(class_count[k]);
    out.character_table.push_back(built[class_head[k]].character);
  }
  if (character_orthogonality_defect(out) > 1e-6)
    fail("decompose_irreps: character orthogonality check failed");
  return out;
}

}  // namespace

IrrepSet decompose_irreps(const Carrier& c, uint64_t seed) {
  if (!c.valid() || c.kind() != CarrierKind::group_ring)
    fail("decompose_irreps: carrier is not a group ring");
  std::string last;
  for (int round = 0; round < 5; ++round) {
    try {
      return attempt_decompose(c, seed, seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(round));
    } catch (const Error& e) {
      last = e.what();
    }
  }
  fail("decompose_irreps: retries exhausted: " + last);
}

double character_orthogonality_defect(const IrrepSet& s) {
  const uint32_t n = s.carrier.group().order();
  double worst = 0.0;
  for (size_t i = 0; i < s.character_table.size(); ++i) {
    for (size_t j = 0; j < s.character_table.size(); ++j) {
      cplx acc = 0.0;
      for (uint32_t g = 0; g < n; ++g)
        acc += s.character_table[i][g] * std::conj(s.character_table[j][g]);
      acc /= static_cast<double>(n);
      worst = std::max(worst, std::abs(acc - (i == j ? cplx(1.0) : cplx(0.0))));
    }
  }
  return worst;
}

bool characters_match_up_to_permutation(const IrrepSet& a, const IrrepSet& b, double tol) {
  if (a.character_table.size() != b.character_table.size()) return false;
  std::vector<bool> used(b.character_table.size(), false);
  for (const auto& row : a.character_table) {
    bool found = false;
    for (size_t j = 0; j < b.character_table.size(); ++j) {
      if (!used[j] && char_dist(row, b.character_table[j]) < tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace qmod
