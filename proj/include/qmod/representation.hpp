#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qmod/matrix.hpp"
#include "qmod/presentation.hpp"

namespace qmod {

enum class Flag { yes, no, unknown };
enum class Positivity { yes, no, marginal };

// A finite-dimensional *-representation of a carrier.  Construction
// validates the defining properties (star-compatibility, multiplicativity
// on sampled pairs, unitarity of group images), so a value of this type is
// always a checked representation within the stated tolerances.  Immutable.
class Representation {
 public:
  // GroupRing carrier; one image per group element, validated unitary and
  // multiplicative (all pairs for small groups, a seeded sample otherwise).
  static Representation group_rep(const Carrier& c, std::vector<ComplexMatrix> images,
                                  Flag irreducible = Flag::unknown);

  // FreeStar carrier; one square matrix per letter, stars go to adjoints.
  static Representation matrix_point_rep(const Carrier& c, std::vector<ComplexMatrix> points);

  // Any finite carrier; one image per basis word in canonical order.
  // Validated star-compatible and multiplicative on sampled word pairs.
  static Representation basis_rep(const Carrier& c, std::vector<ComplexMatrix> images,
                                  Flag irreducible = Flag::unknown);

  // Representation of Mat_n(A) from one of A: E_rc ⊗ u acts as the block
  // matrix with inner(u) at block (r, c).
  static Representation block_lift(Representation inner, uint32_t n);

  const Carrier& carrier() const { return carrier_; }
  int dim() const { return dim_; }
  Flag irreducible() const { return irreducible_; }
  bool unital() const { return unital_; }

  // Base flavors: the defining images (per group element, letter, or basis
  // word).  Lifted flavors have no direct image table.
  const std::vector<ComplexMatrix>& images() const;

  ComplexMatrix word_image(const BasisWord& w) const;
  ComplexMatrix apply(const StarElement& a) const;

  // Entrywise complex conjugate representation.
  Representation conjugate() const;
  // a ↦ u† π(a) u for unitary u.
  Representation unitary_conjugate(const ComplexMatrix& u) const;

  friend Representation complexify_rep(const Representation& rep);

 private:
  enum class RKind { group_images, free_letters, basis_images, lifted_matrix, lifted_complex };

  Representation() = default;
  ComplexMatrix raw_word_image(const BasisWord& w) const;

  RKind rkind_ = RKind::group_images;
  Carrier carrier_;
  int dim_ = 0;
  std::vector<ComplexMatrix> images_;
  std::vector<BasisWord> basis_;  // basis_images flavor, sorted
  std::shared_ptr<const Representation> inner_;
  bool cplx_minus_ = false;  // lifted_complex: (0, 1) ↦ -i instead of i
  std::optional<ComplexMatrix> frame_;
  Flag irreducible_ = Flag::unknown;
  bool unital_ = true;
};

// Left regular representation of a group ring: λ(g) the permutation matrix
// of left multiplication.
Representation regular_rep(const Carrier& c);

// ψ°(x, y) = ψ(x) + iψ(y) on Complexified(A).  Errors when the carrier of
// rep is already complexified.
Representation complexify_rep(const Representation& rep);

// Entrywise complex conjugation (the involution π ↦ π̄; note this is not
// the adjoint, which would not be multiplicative).
Representation conjugate_rep(const Representation& rep);

ComplexMatrix rep_apply(const Representation& rep, const StarElement& a);

// Generator-wise PSD test: yes when every generator image has min
// eigenvalue ≥ -tol, no when some is < -10·tol, marginal between.
Positivity is_M_positive(const Representation& rep, const ModulePresentation& pres,
                         double tol = 1e-8);

// All basis words of a finite carrier in canonical order.  Errors when the
// carrier involves a free *-ring.
std::vector<BasisWord> enumerate_basis(const Carrier& c);

}  // namespace qmod
