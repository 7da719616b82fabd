#pragma once

#include <cstdint>
#include <vector>

#include "qmod/representation.hpp"

namespace qmod {

// One representative per unitary-equivalence class of irreducible
// representations of a group ring, with the multiplicity each class has in
// the left regular representation (= its dimension) and the character
// table, one row per class and one column per group element.
struct IrrepSet {
  Carrier carrier;
  std::vector<Representation> reps;
  std::vector<uint32_t> multiplicities;
  std::vector<std::vector<cplx>> character_table;
  uint64_t seed = 0;
};

// Numerical commutant splitting of the regular representation: average a
// random Hermitian matrix over the group action, eigendecompose, recurse on
// the eigenspace clusters, and certify leaves by the scalar-commutant test.
// Deterministic given the seed; retries internally and errors when the
// splitting fails to converge.
IrrepSet decompose_irreps(const Carrier& c, uint64_t seed = 1);

// True when the two character tables agree up to a row permutation within
// tol (unitary-equivalence classes coincide).
bool characters_match_up_to_permutation(const IrrepSet& a, const IrrepSet& b, double tol);

// Max over pairs of |(1/|G|)·Σ_g χ_i(g)·conj(χ_j(g)) − δ_ij|.
double character_orthogonality_defect(const IrrepSet& s);

}  // namespace qmod
