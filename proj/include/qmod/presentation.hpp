#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qmod/element.hpp"

namespace qmod {

// A finitely generated quadratic module M_S on a carrier: the set of sums
// Σ q·a·c·a* with c ∈ {1} ∪ S and q a positive rational.  The implicit
// generator 1 is always present and is addressed as generator index 0;
// the explicit generators are indices 1..S.size().
class ModulePresentation {
 public:
  ModulePresentation(Carrier carrier, std::vector<StarElement> generators);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<StarElement>& generators() const { return generators_; }
  size_t generator_count() const { return generators_.size(); }

  // Value of a certificate generator index: 0 -> 1, k -> S[k-1].
  StarElement generator_value(size_t index) const;

  // Index (1-based, certificate convention) of a generator of the shape
  // c - Σ_j x_j x_j*, detected at construction.  FreeStar carriers only.
  std::optional<size_t> archimedean_witness() const { return witness_; }
  // The scalar c and the letters covered by the witness.
  Rational witness_level() const;
  const std::vector<uint32_t>& witness_letters() const { return witness_letters_; }

 private:
  Carrier carrier_;
  std::vector<StarElement> generators_;
  std::optional<size_t> witness_;
  Rational witness_level_ = 0;
  std::vector<uint32_t> witness_letters_;
};

// M° on A°: generators of M injected via a ↦ (a, 0).
ModulePresentation complexify_presentation(const ModulePresentation& p);
// M_n on Mat_n(A): generators of M lifted to s·I_n.
ModulePresentation matrix_presentation(const ModulePresentation& p, uint32_t n);
// Inverse of the two lifts: recovers the inner presentation of a wrapped
// one; errors when some generator is not a lifted inner generator.
ModulePresentation inner_presentation(const ModulePresentation& p);

}  // namespace qmod
