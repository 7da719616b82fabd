#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/certificate.hpp"
#include "qmod/irreps.hpp"

namespace qmod {

// Two-sided estimate of the seminorm n_M(a).  Exact on finite-dimensional
// carriers (full irrep model); on free carriers the upper bound comes from
// a certificate and the lower bound from sampled M-positive matrix points,
// each side carrying its witness.
struct NormEstimate {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool exact = false;
  std::optional<NormCertificate> upper_witness;
  std::optional<std::pair<Representation, StarElement>> lower_witness;
  std::string note;  // set when upper is infinite
};

// Finite-dimensional model of the completion A_M: the M-positive
// irreducible representations of the carrier, with j(a) the tuple of
// blocks π(a).
struct AMModel {
  ModulePresentation pres;
  std::vector<Representation> irreps;
  // Index of each kept representation in the underlying irrep enumeration
  // of the base group ring.
  std::vector<size_t> class_index;
  uint64_t seed = 0;
};

AMModel build_AM_model(const ModulePresentation& pres, uint64_t seed = 1, double tol = 1e-8);

std::vector<ComplexMatrix> j_apply(const AMModel& m, const StarElement& a);

NormEstimate seminorm(const StarElement& a, const AMModel& m);
// Convenience: builds the model for finite carriers; for free carriers runs
// bound propagation against sampled matrix-point lower bounds.
NormEstimate seminorm(const StarElement& a, const ModulePresentation& pres, uint64_t seed = 1,
                      int sample_budget = 64);

enum class Boundedness { bounded, infinitesimal, unbounded, unknown };

Boundedness classify_bounded(
    const StarElement& a, const ModulePresentation& pres, uint64_t seed = 1,
    double unbounded_threshold = std::numeric_limits<double>::infinity());

enum class ArchStatus { interior, boundary_arch, outside, unknown };

ArchStatus arch_membership(const StarElement& x, const ModulePresentation& pres,
                           double tol = 1e-8, uint64_t seed = 1);
ArchStatus arch_membership_model(const StarElement& x, const AMModel& m, double tol = 1e-8);

const char* to_string(ArchStatus s);
const char* to_string(Boundedness b);
const char* to_string(Positivity p);

// One verified statement inside an audit report.
struct AuditCheck {
  std::string name;
  std::string status;  // pass | fail | marginal | info
  double residual = 0.0;
  double tolerance = 0.0;
  std::string witness;
};

struct AuditReport {
  std::string title;
  std::vector<AuditCheck> checks;
  bool passed() const;
  bool marginal() const;
};

// Block-diagonal image checks: pointed cone, boundedness, closedness proxy,
// completeness (trivial in finite dimension).
AuditReport corollary8_audit(const AMModel& m, int samples = 50, uint64_t seed = 1,
                             double tol = 1e-8);

// A 1-dimensional M-positive representation of an abelian group ring.
struct Character {
  std::vector<cplx> values;  // one per group element
  size_t conj_index = 0;
  bool boundary = false;  // some generator evaluates within tol of 0
};

struct CharacterSpace {
  Carrier carrier;
  std::vector<Character> points;
};

CharacterSpace character_space(const ModulePresentation& pres, double tol = 1e-8,
                               uint64_t seed = 1);

// Membership in Arch(M) matches nonnegativity over the character space on
// sampled symmetric elements.
AuditReport theorem1_audit(const ModulePresentation& pres, int samples = 100, uint64_t seed = 1,
                           double tol = 1e-8);

// Isometry, *-homomorphism, unitary equivariance, and conjugation
// compatibility of the evaluation map a ↦ (π ↦ π(a)).
AuditReport evaluation_map_audit(const ModulePresentation& pres, const StarElement& a,
                                 int pair_samples = 100, int unitaries = 20, uint64_t seed = 1);

// Norm compatibility of the complexified and matrix lifts:
// n_{M°}((a,0)) = n_M(a) and n_{M_n}(embedded a) = n_M(a).
AuditReport example9_audit(const ModulePresentation& pres, int samples = 50, uint64_t seed = 1);

// M-positive matrix-point representations of a free carrier, sampled on a
// rational grid and scaled into the generator constraints.  Any returned
// point is a valid lower-bound witness; the list may be empty.
std::vector<Representation> sample_point_reps(const ModulePresentation& pres, uint64_t seed,
                                              int budget);

}  // namespace qmod
