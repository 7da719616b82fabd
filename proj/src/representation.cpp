#include "qmod/representation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qmod/eig.hpp"
#include "qmod/error.hpp"

namespace qmod {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

double unitary_defect(const ComplexMatrix& u) {
  return (matmul_serial(u.adjoint(), u) - ComplexMatrix::identity(u.dim())).max_abs();
}

// Index of w in a sorted basis list.
size_t basis_index(const std::vector<BasisWord>& basis, const BasisWord& w) {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || !(*it == w)) fail("basis word is not in the carrier enumeration");
  return static_cast<size_t>(it - basis.begin());
}

}  // namespace

std::vector<BasisWord> enumerate_basis(const Carrier& c) {
  require(c.basis_size().has_value(), "enumerate_basis: carrier has an infinite basis");
  std::vector<BasisWord> out;
  switch (c.kind()) {
    case CarrierKind::group_ring: {
      for (uint32_t g = 0; g < c.group().order(); ++g) {
        BasisWord w;
        w.group = g;
        out.push_back(w);
      }
      break;
    }
    case CarrierKind::matrix_ring: {
      const uint32_t n = c.matrix_size();
      const uint32_t m = c.inner().group().order();
      for (uint32_t r = 0; r < n; ++r)
        for (uint32_t col = 0; col < n; ++col)
          for (uint32_t g = 0; g < m; ++g) {
            BasisWord w;
            w.row = r;
            w.col = col;
            w.group = g;
            out.push_back(w);
          }
      break;
    }
    case CarrierKind::complexified: {
      const uint32_t m = c.inner().group().order();
      for (uint8_t comp = 0; comp < 2; ++comp)
        for (uint32_t g = 0; g < m; ++g) {
          BasisWord w;
          w.comp = comp;
          w.group = g;
          out.push_back(w);
        }
      break;
    }
    default:
      fail("enumerate_basis: carrier has an infinite basis");
  }
  return out;
}

Representation Representation::group_rep(const Carrier& c, std::vector<ComplexMatrix> images,
                                         Flag irreducible) {
  require(c.valid() && c.kind() == CarrierKind::group_ring,
          "group_rep: carrier is not a group ring");
  const FiniteGroup& g = c.group();
  require(images.size() == g.order(), "group_rep: one image per group element required");
  const int d = images[0].dim();
  require(d >= 1, "group_rep: empty image");
  for (const ComplexMatrix& m : images)
    require(m.dim() == d, "group_rep: images have mixed dimensions");
  for (const ComplexMatrix& m : images)
    require(unitary_defect(m) <= 1e-9, "group_rep: image is not unitary");
  require((images[g.identity()] - ComplexMatrix::identity(d)).max_abs() <= 1e-9,
          "group_rep: identity does not map to the unit matrix");

  // Multiplicativity: all pairs for small groups, a seeded sample otherwise.
  const uint32_t n = g.order();
  auto check_pair = [&](uint32_t a, uint32_t b) {
    ComplexMatrix p = matmul_serial(images[a], images[b]);
    require((p - images[g.mul(a, b)]).max_abs() <= 1e-9,
            "group_rep: images are not multiplicative");
  };
  if (n <= 12) {
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b) check_pair(a, b);
  } else {
    std::mt19937_64 rng(0x5eedULL ^ n);
    std::uniform_int_distribution<uint32_t> pick(0, n - 1);
    for (int i = 0; i < 96; ++i) check_pair(pick(rng), pick(rng));
  }

  Representation r;
  r.rkind_ = RKind::group_images;
  r.carrier_ = c;
  r.dim_ = d;
  r.images_ = std::move(images);
  r.irreducible_ = irreducible;
  r.unital_ = true;
  return r;
}

Representation Representation::matrix_point_rep(const Carrier& c,
                                                std::vector<ComplexMatrix> points) {
  require(c.valid() && c.kind() == CarrierKind::free_star,
          "matrix_point_rep: carrier is not a free *-ring");
  require(points.size() == c.letters(), "matrix_point_rep: one matrix per letter required");
  require(!points.empty(), "matrix_point_rep: at least one letter required");
  const int d = points[0].dim();
  require(d >= 1, "matrix_point_rep: empty point");
  for (const ComplexMatrix& m : points) {
    require(m.dim() == d, "matrix_point_rep: points have mixed dimensions");
    for (const cplx& z : m.data())
      require(std::isfinite(z.real()) && std::isfinite(z.imag()),
              "matrix_point_rep: non-finite entry");
  }
  Representation r;
  r.rkind_ = RKind::free_letters;
  r.carrier_ = c;
  r.dim_ = d;
  r.images_ = std::move(points);
  r.unital_ = true;
  return r;
}

Representation Representation::basis_rep(const Carrier& c, std::vector<ComplexMatrix> images,
                                         Flag irreducible) {
  std::vector<BasisWord> basis = enumerate_basis(c);
  require(images.size() == basis.size(), "basis_rep: one image per basis word required");
  const int d = images[0].dim();
  for (const ComplexMatrix& m : images)
    require(m.dim() == d, "basis_rep: images have mixed dimensions");

  double scale = 1.0;
  for (const ComplexMatrix& m : images) scale = std::max(scale, m.max_abs());

  // Star compatibility on the whole basis: image(w*) = image(w)†.
  for (size_t j = 0; j < basis.size(); ++j) {
    auto [sw, sign] = word_star(c, basis[j]);
    ComplexMatrix expect = images[basis_index(basis, sw)];
    if (sign < 0) expect = cplx(-1.0) * expect;
    require((expect - images[j].adjoint()).max_abs() <= 1e-9 * scale,
            "basis_rep: images are not star-compatible");
  }

  // Multiplicativity on word pairs (all pairs when affordable).
  const size_t n = basis.size();
  auto check_pair = [&](size_t j, size_t k) {
    ComplexMatrix p = matmul_serial(images[j], images[k]);
    auto prod = word_mul(c, basis[j], basis[k]);
    if (!prod) {
      require(p.max_abs() <= 1e-9 * scale * scale,
              "basis_rep: images are not multiplicative");
      return;
    }
    ComplexMatrix expect = images[basis_index(basis, prod->first)];
    if (prod->second < 0) expect = cplx(-1.0) * expect;
    require((p - expect).max_abs() <= 1e-9 * scale * scale,
            "basis_rep: images are not multiplicative");
  };
  if (n * n <= 512) {
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) check_pair(j, k);
  } else {
    std::mt19937_64 rng(0x5eedULL ^ n);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    for (int i = 0; i < 512; ++i) check_pair(pick(rng), pick(rng));
  }

  Representation r;
  r.rkind_ = RKind::basis_images;
  r.carrier_ = c;
  r.dim_ = d;
  r.images_ = std::move(images);
  r.basis_ = std::move(basis);
  r.irreducible_ = irreducible;

  ComplexMatrix unit = r.apply(StarElement::one(c));
  ComplexMatrix usq = matmul_serial(unit, unit);
  require((usq - unit).max_abs() <= 1e-8 * scale && (unit - unit.adjoint()).max_abs() <= 1e-8,
          "basis_rep: unit image is not a projection");
  r.unital_ = (unit - ComplexMatrix::identity(d)).max_abs() <= 1e-9;
  return r;
}

Representation Representation::block_lift(Representation inner, uint32_t n) {
  require(n >= 1, "block_lift: size must be positive");
  Carrier c = Carrier::matrix_ring(n, inner.carrier());
  Representation r;
  r.rkind_ = RKind::lifted_matrix;
  r.carrier_ = c;
  r.dim_ = static_cast<int>(n) * inner.dim();
  r.irreducible_ = inner.irreducible();
  r.unital_ = inner.unital();
  r.inner_ = std::make_shared<Representation>(std::move(inner));
  return r;
}

Representation complexify_rep(const Representation& rep) {
  if (rep.carrier().kind() == CarrierKind::complexified)
    fail("complexify_rep: carrier already complexified");
  Carrier c = Carrier::complexified(rep.carrier());
  Representation r;
  r.rkind_ = Representation::RKind::lifted_complex;
  r.carrier_ = c;
  r.dim_ = rep.dim();
  r.irreducible_ = rep.irreducible();
  r.unital_ = rep.unital();
  r.inner_ = std::make_shared<Representation>(rep);
  return r;
}

const std::vector<ComplexMatrix>& Representation::images() const {
  require(rkind_ == RKind::group_images || rkind_ == RKind::free_letters ||
              rkind_ == RKind::basis_images,
          "representation has no direct image table");
  return images_;
}

ComplexMatrix Representation::raw_word_image(const BasisWord& w) const {
  switch (rkind_) {
    case RKind::group_images:
      return images_[w.group];
    case RKind::free_letters: {
      ComplexMatrix acc = ComplexMatrix::identity(dim_);
      for (uint16_t sym : w.word) {
        const uint16_t letter = sym & static_cast<uint16_t>(~BasisWord::STAR_BIT);
        require(letter < images_.size(), "representation: unmapped letter");
        const ComplexMatrix& m = images_[letter];
        acc = matmul_serial(acc, (sym & BasisWord::STAR_BIT) ? m.adjoint() : m);
      }
      return acc;
    }
    case RKind::basis_images:
      return images_[basis_index(basis_, w)];
    case RKind::lifted_matrix: {
      BasisWord iw;
      iw.group = w.group;
      iw.word = w.word;
      ComplexMatrix blk = inner_->word_image(iw);
      const int di = inner_->dim();
      ComplexMatrix out(dim_);
      for (int r = 0; r < di; ++r)
        for (int c = 0; c < di; ++c)
          out.at(static_cast<int>(w.row) * di + r, static_cast<int>(w.col) * di + c) =
              blk.at(r, c);
      return out;
    }
    case RKind::lifted_complex: {
      BasisWord iw;
      iw.group = w.group;
      iw.word = w.word;
      ComplexMatrix m = inner_->word_image(iw);
      if (w.comp) m = (cplx_minus_ ? cplx(0, -1) : cplx(0, 1)) * m;
      return m;
    }
  }
  fail("representation: unreachable word kind");
}

ComplexMatrix Representation::word_image(const BasisWord& w) const {
  ComplexMatrix m = raw_word_image(w);
  if (frame_) return matmul_serial(matmul_serial(frame_->adjoint(), m), *frame_);
  return m;
}

ComplexMatrix Representation::apply(const StarElement& a) const {
  require(a.carrier() == carrier_, "carrier mismatch in representation application");
  ComplexMatrix acc(dim_);
  for (const auto& [w, z] : a.terms()) {
    const cplx zc = z.to_complex();
    ComplexMatrix m = word_image(w);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) acc.at(r, c) += zc * m.at(r, c);
  }
  return acc;
}

Representation Representation::conjugate() const {
  Representation r = *this;
  for (ComplexMatrix& m : r.images_) m = m.conj();
  if (r.frame_) r.frame_ = r.frame_->conj();
  if (inner_) r.inner_ = std::make_shared<Representation>(inner_->conjugate());
  if (rkind_ == RKind::lifted_complex) r.cplx_minus_ = !cplx_minus_;
  return r;
}

Representation Representation::unitary_conjugate(const ComplexMatrix& u) const {
  require(u.dim() == dim_, "unitary_conjugate: dimension mismatch");
  require(unitary_defect(u) <= 1e-9, "unitary_conjugate: matrix is not unitary");
  Representation r = *this;
  r.frame_ = frame_ ? matmul_serial(*frame_, u) : u;
  return r;
}

Representation regular_rep(const Carrier& c) {
  require(c.valid() && c.kind() == CarrierKind::group_ring,
          "regular_rep: carrier is not a group ring");
  const FiniteGroup& g = c.group();
  const uint32_t n = g.order();
  std::vector<ComplexMatrix> images;
  images.reserve(n);
  for (uint32_t a = 0; a < n; ++a) {
    ComplexMatrix m(static_cast<int>(n));
    for (uint32_t j = 0; j < n; ++j) m.at(static_cast<int>(g.mul(a, j)), static_cast<int>(j)) = 1.0;
    images.push_back(std::move(m));
  }
  return Representation::group_rep(c, std::move(images), n == 1 ? Flag::yes : Flag::no);
}

Representation conjugate_rep(const Representation& rep) { return rep.conjugate(); }

ComplexMatrix rep_apply(const Representation& rep, const StarElement& a) { return rep.apply(a); }

Positivity is_M_positive(const Representation& rep, const ModulePresentation& pres, double tol) {
  require(rep.carrier() == pres.carrier(), "carrier mismatch in M-positivity test");
  require(tol > 0, "M-positivity tolerance must be positive");
  double worst = 0.0;
  for (const StarElement& s : pres.generators()) {
    ComplexMatrix m = rep.apply(s);
    ComplexMatrix h = cplx(0.5) * (m + m.adjoint());
    worst = std::min(worst, min_eigenvalue(h));
  }
  if (worst >= -tol) return Positivity::yes;
  if (worst < -10.0 * tol) return Positivity::no;
  return Positivity::marginal;
}

}  // namespace qmod
