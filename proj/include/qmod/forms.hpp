#pragma once

#include <cstdint>
#include <vector>

#include "qmod/positivity.hpp"

namespace qmod {

// Positive linear functional on a finite-dimensional carrier, stored as its
// values on the canonical monomial basis.  Validity means f(a*) = conj(f(a))
// and f(aa*) >= 0, the latter checked as positive semidefiniteness of the
// Gram matrix F_{jk} = f(b_j b_k*).
class PositiveForm {
 public:
  const Carrier& carrier() const { return carrier_; }
  const std::vector<BasisWord>& basis() const { return basis_; }
  const std::vector<cplx>& values() const { return values_; }
  const ComplexMatrix& gram() const { return gram_; }

  // Linear extension to arbitrary elements of the carrier.
  cplx operator()(const StarElement& a) const;

 private:
  friend PositiveForm form_from_values(const Carrier& c, const std::vector<cplx>& values,
                                       double tol);
  Carrier carrier_;
  std::vector<BasisWord> basis_;
  std::vector<cplx> values_;
  ComplexMatrix gram_{0};
};

// Validates the data and builds the form.  Rejects hermiticity violations
// (above 1e-10) and non-PSD Gram matrices (most negative eigenvalue below
// -tol), naming the offending quantity.
PositiveForm form_from_values(const Carrier& c, const std::vector<cplx>& values,
                              double tol = 1e-8);

// Proposition 9 condition (1): for each generator s the matrix
// [f(b_j s b_k*)]_{jk} is PSD, which by additivity is f(a s a*) >= 0 for
// all a and hence f(M_S) >= 0.
Positivity form_respects_module(const PositiveForm& f, const ModulePresentation& pres,
                                double tol = 1e-8);

// M-respecting form built as a random convex combination of vector states
// through the M-positive irreducible representations.
PositiveForm random_positive_form(const ModulePresentation& pres, uint64_t seed = 1);

// GNS data: rep acts on the rank space of the Gram matrix, cyclic carries
// the class of 1, and <rep.apply(a) cyclic, cyclic> = f(a).
struct GNSResult {
  Representation rep;
  std::vector<cplx> cyclic;
  double scale = 0.0;  // f(1)
};

// Inner product convention: <a, b> = f(b* a), so rep is left multiplication
// pushed through the rank factorization of the Gram matrix.  Eigenvalues
// below rank_tol * lambda_max are treated as the null space.
GNSResult gns(const PositiveForm& f, double rank_tol = 1e-9);

// Proposition 9 equivalences on samples: an M-respecting form is dominated
// by the seminorm (|f(a)| <= n_M(a) f(1)); a non-respecting form yields a
// certificate-built m in M_S with f(m) < 0.  Cauchy-Schwarz is checked
// alongside.
AuditReport prop9_audit(const PositiveForm& f, const ModulePresentation& pres,
                        int samples = 50, uint64_t seed = 1);

// Proposition 10 on samples: ||psi(a)|| <= n_M(a) ||psi(1)|| for the GNS
// representation of an M-respecting form; reports the tightest ratio seen.
AuditReport prop10_audit(const GNSResult& g, const ModulePresentation& pres,
                         int samples = 50, uint64_t seed = 1);

}  // namespace qmod
