#include "qmod/group.hpp"

#include <algorithm>
#include <cmath>

#include "qmod/error.hpp"

namespace qmod {

namespace {

constexpr uint32_t kMaxOrder = 64;

}  // namespace

FiniteGroup::FiniteGroup(std::vector<uint32_t> table, std::vector<std::string> names) {
  size_t sz = table.size();
  uint32_t n = static_cast<uint32_t>(std::lround(std::sqrt(static_cast<double>(sz))));
  if (n == 0 || static_cast<size_t>(n) * n != sz) fail("group table is not square");
  if (n > kMaxOrder) fail("group order exceeds the cap of 64");
  for (uint32_t v : table)
    if (v >= n) fail("group table entry out of range");

  n_ = n;
  table_ = std::move(table);

  // Identity: the unique e with e*a = a*e = a for all a.
  bool found = false;
  for (uint32_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (uint32_t a = 0; a < n_ && ok; ++a)
      ok = (mul(e, a) == a) && (mul(a, e) == a);
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail("group table has no identity");

  inverse_.assign(n_, 0);
  for (uint32_t a = 0; a < n_; ++a) {
    bool ok = false;
    for (uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        ok = true;
        break;
      }
    }
    if (!ok) fail("group table element " + std::to_string(a) + " has no inverse");
  }

  for (uint32_t a = 0; a < n_; ++a)
    for (uint32_t b = 0; b < n_; ++b)
      for (uint32_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("group table is not associative");

  abelian_ = true;
  for (uint32_t a = 0; a < n_ && abelian_; ++a)
    for (uint32_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  if (names.empty()) {
    names_.reserve(n_);
    for (uint32_t a = 0; a < n_; ++a) names_.push_back("g" + std::to_string(a));
  } else {
    if (names.size() != n_) fail("group name list does not match the table size");
    names_ = std::move(names);
  }
}

FiniteGroup FiniteGroup::cyclic(uint32_t n) {
  if (n == 0) fail("cyclic group order must be positive");
  std::vector<uint32_t> t(static_cast<size_t>(n) * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(uint32_t n) {
  if (n == 0) fail("dihedral parameter must be positive");
  // Elements 0..n-1: rotations r^i; n..2n-1: reflections r^i s.
  // Relations: s r = r^{-1} s.
  uint32_t m = 2 * n;
  auto idx = [n](uint32_t rot, bool ref) { return rot + (ref ? n : 0); };
  std::vector<uint32_t> t(static_cast<size_t>(m) * m);
  std::vector<std::string> names;
  for (uint32_t a = 0; a < m; ++a) {
    uint32_t ra = a % n;
    bool fa = a >= n;
    for (uint32_t b = 0; b < m; ++b) {
      uint32_t rb = b % n;
      bool fb = b >= n;
      // (r^ra s^fa)(r^rb s^fb) = r^(ra ± rb) s^(fa xor fb)
      uint32_t rot = fa ? (ra + n - rb % n) % n : (ra + rb) % n;
      t[a * m + b] = idx(rot, fa != fb);
    }
  }
  for (uint32_t a = 0; a < m; ++a) {
    uint32_t ra = a % n;
    std::string nm = (a < n) ? "r" + std::to_string(ra) : "r" + std::to_string(ra) + "s";
    names.push_back(nm);
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(uint32_t n) {
  if (n == 0 || n > 4) fail("symmetric group supported for 1 <= n <= 4");
  // Enumerate permutations in lexicographic order; identity is first.
  std::vector<std::vector<uint32_t>> perms;
  std::vector<uint32_t> p(n);
  for (uint32_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  uint32_t m = static_cast<uint32_t>(perms.size());
  auto find = [&](const std::vector<uint32_t>& q) -> uint32_t {
    for (uint32_t i = 0; i < m; ++i)
      if (perms[i] == q) return i;
    fail("permutation composition fell outside the enumeration");
  };
  std::vector<uint32_t> t(static_cast<size_t>(m) * m);
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = 0; b < m; ++b) {
      // (σ τ)(x) = σ(τ(x))
      std::vector<uint32_t> q(n);
      for (uint32_t x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
      t[a * m + b] = find(q);
    }
  std::vector<std::string> names;
  for (uint32_t i = 0; i < m; ++i) {
    std::string nm = "p";
    for (uint32_t x = 0; x < n; ++x) nm += std::to_string(perms[i][x]);
    names.push_back(nm);
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::quaternion8() {
  // 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
  auto neg = [](uint32_t a) { return a ^ 1u; };
  std::vector<uint32_t> t(64, 0);
  auto set = [&](uint32_t a, uint32_t b, uint32_t c) { t[a * 8 + b] = c; };
  // Base products among {1, i, j, k} with signs, then extend by negation.
  // i*i = j*j = k*k = -1, i*j = k, j*i = -k, j*k = i, k*j = -i, k*i = j, i*k = -j.
  uint32_t one = 0, I = 2, J = 4, K = 6;
  auto base = [&](uint32_t a, uint32_t b) -> uint32_t {
    if (a == one) return b;
    if (b == one) return a;
    if (a == I && b == I) return neg(one);
    if (a == J && b == J) return neg(one);
    if (a == K && b == K) return neg(one);
    if (a == I && b == J) return K;
    if (a == J && b == I) return neg(K);
    if (a == J && b == K) return I;
    if (a == K && b == J) return neg(I);
    if (a == K && b == I) return J;
    if (a == I && b == K) return neg(J);
    fail("quaternion base product missing");
  };
  for (uint32_t a = 0; a < 8; ++a)
    for (uint32_t b = 0; b < 8; ++b) {
      uint32_t pa = a & ~1u, pb = b & ~1u;
      uint32_t prod = base(pa, pb);
      bool flip = ((a & 1u) != 0) != ((b & 1u) != 0);
      set(a, b, flip ? neg(prod) : prod);
    }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup(std::move(t), std::move(names));
}

}  // namespace qmod
