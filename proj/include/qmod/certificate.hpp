#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmod/presentation.hpp"

namespace qmod {

// One summand q·a·c·a* of a membership certificate: positive rational
// weight, conjugator a, and the index of c in {1} ∪ S (0 = the implicit 1).
struct CertTerm {
  Rational weight;
  StarElement conjugator;
  size_t generator = 0;
};

// Machine-checkable witness that an element lies in M_S: value(cert) =
// Σ q·a·c·a*.  Certificates carry no claim by themselves; cert_verify
// checks them against a target exactly.
struct Certificate {
  std::vector<CertTerm> terms;
};

// Witness for n_M(a) <= r: a certificate whose value is r² − a·a* exactly.
// The bound is nonnegative; it is zero only for a = 0 (every transformer
// that divides by the bound requires it positive).
struct NormCertificate {
  StarElement element;
  Rational bound;
  Certificate cert;
};

StarElement cert_eval(const Certificate& cert, const ModulePresentation& pres);

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty on accept
};

VerifyResult cert_verify(const Certificate& cert, const StarElement& target,
                         const ModulePresentation& pres);
// Checks the r² − a·a* identity of a NormCertificate.
VerifyResult cert_verify(const NormCertificate& nc, const ModulePresentation& pres);

// r² − a·a* for the declared element/bound (the target a NormCertificate
// must hit).
StarElement norm_cert_target(const StarElement& a, const Rational& r);

// The trivial NormCertificate(0, s) with certificate {(s², 1, "1")}, s > 0.
NormCertificate norm_cert_zero(const Carrier& c, const Rational& s);

// ---- transformers extracted from the proofs ----
// Every transformer verifies its inputs and its output; a failure aborts
// with the failing identity named.

// From a certificate for r² − c² (c symmetric, r > 0) to certificates for
// r + c and r − c, via r ± c = (1/2r)((r ± c)² + (r² − c²)).
struct SplitResult {
  Certificate plus;   // verifies against r + c
  Certificate minus;  // verifies against r − c
};
SplitResult lemma3_split(const Certificate& nc, const Rational& r, const StarElement& c,
                         const ModulePresentation& pres);

// Reverse direction: r² − c² = (1/2r)((r−c)(r+c)(r−c) + (r+c)(r−c)(r+c)).
Certificate lemma3_join(const Certificate& cp, const Certificate& cm, const Rational& r,
                        const StarElement& c, const ModulePresentation& pres);

// n(a*) ≤ n(a), via (r²/2)² − (r²/2 − a*a)² = a*(r² − aa*)a and lemma3_split.
NormCertificate norm_cert_star(const NormCertificate& na, const ModulePresentation& pres);

// n(ab) ≤ n(a)n(b), via r²s² − (ab)(ab)* = s(r² − aa*)s + a(s² − bb*)a*.
NormCertificate norm_cert_product(const NormCertificate& na, const NormCertificate& nb,
                                  const ModulePresentation& pres);

// n(a+b) ≤ n(a) + n(b), via the 4r²s² − (ab* + ba*)² identity, lemma3_split,
// and (r+s)² − (a+b)(a+b)* = (r² − aa*) + (s² − bb*) + (2rs − (ab* + ba*)).
NormCertificate norm_cert_sum(const NormCertificate& na, const NormCertificate& nb,
                              const ModulePresentation& pres);

// From a certificate for r − aa* − bb* to one for r − aa* (bb* ∈ M).
Certificate norm_cert_pair_drop(const Certificate& nc, const StarElement& a,
                                const StarElement& b, const Rational& r,
                                const ModulePresentation& pres);

// n(ta) = |t|n(a).  Rational t on any carrier; non-real Gaussian t only on
// Complexified carriers (where i is central).  When |t| is irrational the
// bound is padded up to a dyadic rational.
NormCertificate norm_cert_scale(const NormCertificate& na, const GaussianRational& t,
                                const ModulePresentation& pres);

// Example 3's identity: NormCertificate(a, ‖a‖₁) on a group ring, one term
// per unordered pair of support elements.
NormCertificate l1_certificate(const StarElement& a, const ModulePresentation& pres);

// C*-identity, both directions (Theorem 4(5)).
Certificate c_star_upper(const NormCertificate& na, const ModulePresentation& pres);
NormCertificate c_star_lower(const NormCertificate& naa, const StarElement& a,
                             const Rational& r_prime, const ModulePresentation& pres);

// Base bounds for bound_propagate, keyed by letter index (FreeStar).
using BaseBounds = std::map<uint32_t, NormCertificate>;

// Derives per-letter NormCertificates from the archimedean witness
// generator c − Σ x_j x_j*.
BaseBounds letter_base_bounds(const ModulePresentation& pres);

// Compositional Theorem 4 closure over the term structure of a.  The bound
// is Σ over monomials of |coef|·Π letter bounds, never asserted optimal.
NormCertificate bound_propagate(const StarElement& a, const ModulePresentation& pres,
                                const BaseBounds& base = {});

// Example 7: certificate on Mat_n(A) with value Σ q·(col·a)·ĉ·(col·a)*,
// against the generators of matrix_presentation(pres, n).
Certificate lift_matrix_cert(const Certificate& cert, const std::vector<StarElement>& column,
                             const ModulePresentation& pres);

// Example 6: certificate on A° with value (value(cert), 0), against the
// generators of complexify_presentation(pres).
Certificate lift_complex_cert(const Certificate& cert, const ModulePresentation& pres);

}  // namespace qmod
