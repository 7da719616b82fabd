#include "qmod/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qmod/eig.hpp"
#include "qmod/error.hpp"
#include "qmod/sampler.hpp"

namespace qmod {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

double block_min_eig(const std::vector<ComplexMatrix>& blocks) {
  double worst = std::numeric_limits<double>::infinity();
  for (const ComplexMatrix& b : blocks) {
    ComplexMatrix h = cplx(0.5) * (b + b.adjoint());
    worst = std::min(worst, min_eigenvalue(h));
  }
  return worst;
}

double block_max_norm(const std::vector<ComplexMatrix>& blocks) {
  double best = 0.0;
  for (const ComplexMatrix& b : blocks) best = std::max(best, operator_norm(b));
  return best;
}

// The irreducible representations of the carrier, lifted from the base
// group ring when the carrier is wrapped, aligned with the class indices of
// decompose_irreps on the base.
std::vector<Representation> carrier_irreps(const Carrier& c, uint64_t seed) {
  switch (c.kind()) {
    case CarrierKind::group_ring:
      return decompose_irreps(c, seed).reps;
    case CarrierKind::matrix_ring: {
      require(c.inner().kind() == CarrierKind::group_ring,
              "build_AM_model: carrier is not finite-dimensional");
      IrrepSet inner = decompose_irreps(c.inner(), seed);
      std::vector<Representation> out;
      for (const Representation& r : inner.reps)
        out.push_back(Representation::block_lift(r, c.matrix_size()));
      return out;
    }
    case CarrierKind::complexified: {
      require(c.inner().kind() == CarrierKind::group_ring,
              "build_AM_model: carrier is not finite-dimensional");
      IrrepSet inner = decompose_irreps(c.inner(), seed);
      std::vector<Representation> out;
      for (const Representation& r : inner.reps) out.push_back(complexify_rep(r));
      return out;
    }
    default:
      fail("build_AM_model: carrier is not finite-dimensional");
  }
}

AuditCheck make_check(std::string name, bool pass, double residual, double tol,
                      std::string witness = "") {
  return AuditCheck{std::move(name), pass ? "pass" : "fail", residual, tol, std::move(witness)};
}

}  // namespace

bool AuditReport::passed() const {
  for (const AuditCheck& c : checks)
    if (c.status == "fail") return false;
  return true;
}

bool AuditReport::marginal() const {
  for (const AuditCheck& c : checks)
    if (c.status == "marginal") return true;
  return false;
}

const char* to_string(ArchStatus s) {
  switch (s) {
    case ArchStatus::interior: return "interior";
    case ArchStatus::boundary_arch: return "boundary_arch";
    case ArchStatus::outside: return "outside";
    default: return "unknown";
  }
}

const char* to_string(Boundedness b) {
  switch (b) {
    case Boundedness::bounded: return "bounded";
    case Boundedness::infinitesimal: return "infinitesimal";
    case Boundedness::unbounded: return "unbounded";
    default: return "unknown";
  }
}

const char* to_string(Positivity p) {
  switch (p) {
    case Positivity::yes: return "yes";
    case Positivity::no: return "no";
    default: return "marginal";
  }
}

AMModel build_AM_model(const ModulePresentation& pres, uint64_t seed, double tol) {
  std::vector<Representation> all = carrier_irreps(pres.carrier(), seed);
  AMModel m{pres, {}, {}, seed};
  for (size_t i = 0; i < all.size(); ++i) {
    if (is_M_positive(all[i], pres, tol) == Positivity::yes) {
      m.irreps.push_back(all[i]);
      m.class_index.push_back(i);
    }
  }
  if (m.irreps.empty()) fail("no M-positive representations");
  return m;
}

std::vector<ComplexMatrix> j_apply(const AMModel& m, const StarElement& a) {
  require(a.carrier() == m.pres.carrier(), "carrier mismatch in j");
  std::vector<ComplexMatrix> out;
  out.reserve(m.irreps.size());
  for (const Representation& r : m.irreps) out.push_back(r.apply(a));
  return out;
}

NormEstimate seminorm(const StarElement& a, const AMModel& m) {
  require(a.carrier() == m.pres.carrier(), "carrier mismatch in seminorm");
  NormEstimate est;
  est.exact = true;
  double best = 0.0;
  size_t best_idx = 0;
  for (size_t i = 0; i < m.irreps.size(); ++i) {
    double v = operator_norm(m.irreps[i].apply(a));
    if (v > best) {
      best = v;
      best_idx = i;
    }
  }
  est.lower = est.upper = best;
  est.lower_witness = {m.irreps[best_idx], a};
  return est;
}

std::vector<Representation> sample_point_reps(const ModulePresentation& pres, uint64_t seed,
                                              int budget) {
  const Carrier& c = pres.carrier();
  require(c.kind() == CarrierKind::free_star, "sample_point_reps: carrier is not free");
  const uint32_t k = c.letters();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> grid(-8, 8);
  std::uniform_int_distribution<int> pickd(1, 4);

  const bool witnessed = pres.archimedean_witness().has_value();
  const double level = witnessed ? to_double(pres.witness_level()) : 1.0;

  std::vector<Representation> kept;
  auto consider = [&](std::vector<ComplexMatrix> pts) {
    Representation r = Representation::matrix_point_rep(c, std::move(pts));
    if (is_M_positive(r, pres) == Positivity::yes) kept.push_back(std::move(r));
  };

  // The origin is always worth a look.
  consider(std::vector<ComplexMatrix>(k, ComplexMatrix(1)));

  for (int trial = 0; trial < budget; ++trial) {
    const int d = pickd(rng);
    std::vector<ComplexMatrix> pts;
    if (trial % 3 == 1 && witnessed) {
      // Single letter at a scaled unitary: sits on the witness boundary.
      pts.assign(k, ComplexMatrix(d));
      const uint32_t which = static_cast<uint32_t>(rng() % k);
      pts[which] = cplx(std::sqrt(level)) * random_unitary(d, rng());
    } else {
      for (uint32_t j = 0; j < k; ++j) {
        ComplexMatrix m(d);
        for (int r = 0; r < d; ++r)
          for (int col = 0; col < d; ++col)
            m.at(r, col) = cplx(grid(rng) / 8.0, grid(rng) / 8.0);
        pts.push_back(std::move(m));
      }
      if (witnessed) {
        ComplexMatrix s(d);
        for (const ComplexMatrix& m : pts) s = s + matmul_serial(m, m.adjoint());
        EigResult eig = hermitian_eig(cplx(0.5) * (s + s.adjoint()));
        const double lam = eig.values.back();
        if (lam > 1e-12) {
          const double scale = std::sqrt(level / lam);
          for (ComplexMatrix& m : pts) m = cplx(scale) * m;
        }
      }
    }
    consider(std::move(pts));
  }
  return kept;
}

NormEstimate seminorm(const StarElement& a, const ModulePresentation& pres, uint64_t seed,
                      int sample_budget) {
  require(a.carrier() == pres.carrier(), "carrier mismatch in seminorm");
  if (pres.carrier().kind() != CarrierKind::free_star)
    return seminorm(a, build_AM_model(pres, seed));

  NormEstimate est;
  if (a.is_zero()) {
    est.lower = est.upper = 0.0;
    est.exact = true;
    return est;
  }

  // Upper bound by certificate, when the witness covers every letter of a.
  bool coverable = pres.archimedean_witness().has_value();
  if (coverable) {
    const auto& lets = pres.witness_letters();
    for (const auto& [w, z] : a.terms())
      for (uint16_t sym : w.word) {
        const uint32_t letter = sym & static_cast<uint16_t>(~BasisWord::STAR_BIT);
        if (std::find(lets.begin(), lets.end(), letter) == lets.end()) coverable = false;
      }
  }
  if (coverable) {
    NormCertificate nc = bound_propagate(a, pres);
    est.upper = to_double(nc.bound);
    est.upper_witness = std::move(nc);
  } else {
    est.note = "no archimedean witness covering the element; n_M may be infinite";
  }

  for (const Representation& r : sample_point_reps(pres, seed, sample_budget)) {
    const double v = operator_norm(r.apply(a));
    if (v > est.lower) {
      est.lower = v;
      est.lower_witness = {r, a};
    }
  }
  require(est.lower <= est.upper + 1e-7 * std::max(1.0, est.lower),
          "seminorm: sampled lower bound exceeds the certificate upper bound");
  return est;
}

Boundedness classify_bounded(const StarElement& a, const ModulePresentation& pres, uint64_t seed,
                             double unbounded_threshold) {
  NormEstimate est = seminorm(a, pres, seed);
  if (std::isfinite(est.upper)) {
    if (est.exact && est.upper <= 1e-7) return Boundedness::infinitesimal;
    return Boundedness::bounded;
  }
  if (est.lower > unbounded_threshold) return Boundedness::unbounded;
  return Boundedness::unknown;
}

ArchStatus arch_membership_model(const StarElement& x, const AMModel& m, double tol) {
  require(x.is_symmetric(), "arch_membership: element is not symmetric");
  const double worst = block_min_eig(j_apply(m, x));
  if (worst > tol) return ArchStatus::interior;
  if (worst >= -tol) return ArchStatus::boundary_arch;
  if (worst < -10.0 * tol) return ArchStatus::outside;
  return ArchStatus::unknown;
}

ArchStatus arch_membership(const StarElement& x, const ModulePresentation& pres, double tol,
                           uint64_t seed) {
  require(x.is_symmetric(), "arch_membership: element is not symmetric");
  require(x.carrier() == pres.carrier(), "carrier mismatch in arch_membership");
  if (pres.carrier().kind() != CarrierKind::free_star)
    return arch_membership_model(x, build_AM_model(pres, seed), tol);
  // Free carrier: a sampled M-positive point with a negative image proves
  // "outside"; nothing here can prove membership.
  for (const Representation& r : sample_point_reps(pres, seed, 48)) {
    ComplexMatrix b = r.apply(x);
    ComplexMatrix h = cplx(0.5) * (b + b.adjoint());
    if (min_eigenvalue(h) < -10.0 * tol) return ArchStatus::outside;
  }
  return ArchStatus::unknown;
}

AuditReport corollary8_audit(const AMModel& m, int samples, uint64_t seed, double tol) {
  AuditReport rep;
  rep.title = "corollary8";
  if (m.irreps.empty()) {
    rep.checks.push_back({"model", "info", 0.0, 0.0, "vacuous: no M-positive representations"});
    return rep;
  }
  Sampler smp(seed);
  const Carrier& c = m.pres.carrier();

  int pointed_violations = 0;
  double pointed_worst = 0.0;
  double norm_seen = 0.0;
  int closed_violations = 0;
  for (int t = 0; t < samples; ++t) {
    StarElement x = smp.symmetric_element(c, 4, 2);
    std::vector<ComplexMatrix> blocks = j_apply(m, x);
    const double mu = block_min_eig(blocks);
    const double nu = block_min_eig([&] {
      std::vector<ComplexMatrix> neg;
      for (const ComplexMatrix& b : blocks) neg.push_back(cplx(-1.0) * b);
      return neg;
    }());
    const double norm = block_max_norm(blocks);
    norm_seen = std::max(norm_seen, norm);

    // (1) pointedness: x and -x both PSD forces x = 0.
    if (mu >= -tol && nu >= -tol && norm > 10.0 * tol) {
      ++pointed_violations;
      pointed_worst = std::max(pointed_worst, norm);
    }

    // (3) closedness proxy 1: all blocks PSD means arch accepts.
    if (mu >= -tol) {
      ArchStatus st = arch_membership_model(x, m, tol);
      if (st == ArchStatus::outside || st == ArchStatus::unknown) ++closed_violations;
    }
    // (3) closedness proxy 2: shift x until PSD and re-test.
    if (mu < 0) {
      Rational shift(mpq_class(-mu + tol));
      StarElement shifted = x + StarElement::scalar(c, GaussianRational(shift));
      ArchStatus st = arch_membership_model(shifted, m, tol);
      if (st == ArchStatus::outside || st == ArchStatus::unknown) ++closed_violations;
    }
  }

  rep.checks.push_back(make_check("pointed cone M' ∩ -M' = 0", pointed_violations == 0,
                                  pointed_worst, 10.0 * tol));
  rep.checks.push_back(make_check("every sampled element bounded", std::isfinite(norm_seen),
                                  norm_seen, 0.0));
  rep.checks.push_back(
      make_check("closedness proxy via arch membership", closed_violations == 0,
                 static_cast<double>(closed_violations), 0.0));
  rep.checks.push_back({"completeness", "info", 0.0, 0.0,
                        "finite-dimensional model, complete by construction"});
  return rep;
}

CharacterSpace character_space(const ModulePresentation& pres, double tol, uint64_t seed) {
  const Carrier& c = pres.carrier();
  require(c.valid() && c.kind() == CarrierKind::group_ring,
          "character_space: carrier is not a group ring");
  require(c.group().is_abelian(), "character_space: group is not abelian");

  IrrepSet irr = decompose_irreps(c, seed);
  CharacterSpace out{c, {}};
  for (size_t i = 0; i < irr.reps.size(); ++i) {
    const Representation& r = irr.reps[i];
    if (is_M_positive(r, pres, tol) != Positivity::yes) continue;
    Character ch;
    ch.values = irr.character_table[i];  // dim 1: character = image value
    ch.boundary = false;
    for (const StarElement& s : pres.generators()) {
      const double v = r.apply(s).at(0, 0).real();
      if (std::fabs(v) <= tol) ch.boundary = true;
    }
    out.points.push_back(std::move(ch));
  }
  if (out.points.empty()) fail("no M-positive representations");

  for (size_t i = 0; i < out.points.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < out.points.size(); ++j) {
      double d = 0.0;
      for (size_t g = 0; g < out.points[i].values.size(); ++g)
        d = std::max(d, std::abs(std::conj(out.points[i].values[g]) - out.points[j].values[g]));
      if (d < 1e-6) {
        out.points[i].conj_index = j;
        found = true;
        break;
      }
    }
    require(found, "character_space: conjugate character missing");
  }
  for (size_t i = 0; i < out.points.size(); ++i)
    require(out.points[out.points[i].conj_index].conj_index == i,
            "character_space: conjugation pairing is not an involution");
  return out;
}

AuditReport theorem1_audit(const ModulePresentation& pres, int samples, uint64_t seed,
                           double tol) {
  AuditReport rep;
  rep.title = "theorem1";
  CharacterSpace xm{pres.carrier(), {}};
  try {
    xm = character_space(pres, tol, seed);
  } catch (const Error& e) {
    rep.checks.push_back({"character space", "info", 0.0, 0.0,
                          std::string("degenerate presentation: ") + e.what()});
    return rep;
  }
  rep.checks.push_back(make_check("character space nonempty", !xm.points.empty(),
                                  static_cast<double>(xm.points.size()), 1.0));

  bool involution = true;
  for (size_t i = 0; i < xm.points.size(); ++i)
    if (xm.points[xm.points[i].conj_index].conj_index != i) involution = false;
  rep.checks.push_back(make_check("conjugation pairing is an involution", involution, 0.0, 0.0));

  AMModel model = build_AM_model(pres, seed, tol);
  Sampler smp(seed ^ 0xABCDULL);
  int violations = 0;
  for (int t = 0; t < samples; ++t) {
    StarElement x = smp.symmetric_element(pres.carrier(), 4, 1);
    double minval = std::numeric_limits<double>::infinity();
    for (const Character& ch : xm.points) {
      cplx v = 0.0;
      for (const auto& [w, z] : x.terms()) v += z.to_complex() * ch.values[w.group];
      minval = std::min(minval, v.real());
    }
    ArchStatus st = arch_membership_model(x, model, tol);
    const bool in_arch = st == ArchStatus::interior || st == ArchStatus::boundary_arch;
    if (minval >= -tol && st == ArchStatus::outside) ++violations;
    if (minval < -10.0 * tol && in_arch) ++violations;
  }
  rep.checks.push_back(make_check("Φ⁻¹(C⁺(X_M)) = Arch(M) on samples", violations == 0,
                                  static_cast<double>(violations), 0.0));
  return rep;
}

AuditReport evaluation_map_audit(const ModulePresentation& pres, const StarElement& a,
                                 int pair_samples, int unitaries, uint64_t seed) {
  AuditReport rep;
  rep.title = "evaluation_map";
  AMModel model = build_AM_model(pres, seed);
  const Carrier& c = pres.carrier();

  // (i) isometry
  const double jnorm = block_max_norm(j_apply(model, a));
  const double nm = seminorm(a, model).upper;
  rep.checks.push_back(make_check("isometry ‖Φ(a)‖ = n_M(a)",
                                  std::fabs(jnorm - nm) <= 1e-7 * std::max(1.0, nm),
                                  std::fabs(jnorm - nm), 1e-7));

  // (ii) *-homomorphism on sampled pairs
  Sampler smp(seed ^ 0x715EULL);
  double hom_res = 0.0;
  for (int t = 0; t < pair_samples; ++t) {
    StarElement b = smp.element(c, 3, 2);
    StarElement d = smp.element(c, 3, 2);
    double scale = 1.0;
    for (size_t i = 0; i < model.irreps.size(); ++i) {
      const Representation& pi = model.irreps[i];
      ComplexMatrix ib = pi.apply(b);
      ComplexMatrix id = pi.apply(d);
      scale = std::max({scale, ib.max_abs() * id.max_abs(), ib.max_abs() + id.max_abs()});
      hom_res = std::max(hom_res, (pi.apply(b * d) - matmul_serial(ib, id)).max_abs() / scale);
      hom_res = std::max(hom_res, (pi.apply(b + d) - (ib + id)).max_abs() / scale);
      hom_res = std::max(hom_res, (pi.apply(b.star()) - ib.adjoint()).max_abs() / scale);
    }
  }
  rep.checks.push_back(
      make_check("*-homomorphism residual on pairs", hom_res <= 1e-9, hom_res, 1e-9));

  // (iii) equivariance over sampled unitaries
  double equi_res = 0.0;
  for (size_t i = 0; i < model.irreps.size(); ++i) {
    const Representation& pi = model.irreps[i];
    ComplexMatrix pia = pi.apply(a);
    const double scale = std::max(1.0, pia.max_abs());
    for (int t = 0; t < unitaries; ++t) {
      ComplexMatrix u = random_unitary(pi.dim(), smp.rng()());
      Representation moved = pi.unitary_conjugate(u);
      ComplexMatrix expect = matmul_serial(matmul_serial(u.adjoint(), pia), u);
      equi_res = std::max(equi_res, (moved.apply(a) - expect).max_abs() / scale);
    }
  }
  rep.checks.push_back(
      make_check("equivariance Φ(a)(u†πu) = u†Φ(a)(π)u", equi_res <= 1e-9, equi_res, 1e-9));

  // (iv) conjugation compatibility, for real-coefficient a
  bool real_coeffs = true;
  for (const auto& [w, z] : a.terms())
    if (!z.is_real()) real_coeffs = false;
  if (real_coeffs) {
    double conj_res = 0.0;
    for (const Representation& pi : model.irreps) {
      ComplexMatrix lhs = conjugate_rep(pi).apply(a);
      ComplexMatrix rhs = pi.apply(a).conj();
      conj_res = std::max(conj_res, (lhs - rhs).max_abs());
    }
    rep.checks.push_back(
        make_check("conjugation Φ(a)(π̄) = conj Φ(a)(π)", conj_res <= 1e-9, conj_res, 1e-9));
  } else {
    rep.checks.push_back({"conjugation Φ(a)(π̄) = conj Φ(a)(π)", "info", 0.0, 1e-9,
                          "skipped: element has non-real coefficients"});
  }
  return rep;
}

AuditReport example9_audit(const ModulePresentation& pres, int samples, uint64_t seed) {
  AuditReport rep;
  rep.title = "example9";
  require(pres.carrier().kind() == CarrierKind::group_ring,
          "example9_audit: carrier must be a group ring");

  AMModel base = build_AM_model(pres, seed);
  ModulePresentation cpres = complexify_presentation(pres);
  AMModel cplx_model = build_AM_model(cpres, seed);
  ModulePresentation m2 = matrix_presentation(pres, 2);
  ModulePresentation m3 = matrix_presentation(pres, 3);
  AMModel mat2 = build_AM_model(m2, seed);
  AMModel mat3 = build_AM_model(m3, seed);

  Sampler smp(seed ^ 0xE9ULL);
  double r_cplx = 0.0, r_diag2 = 0.0, r_corner2 = 0.0, r_diag3 = 0.0, r_corner3 = 0.0;
  for (int t = 0; t < samples; ++t) {
    StarElement a = smp.element(pres.carrier(), 4, 1);
    const double n = seminorm(a, base).upper;
    const double scale = std::max(1.0, n);

    r_cplx = std::max(r_cplx,
                      std::fabs(seminorm(complexify(a), cplx_model).upper - n) / scale);

    auto diag = [&](uint32_t nn) {
      StarElement acc = matrix_unit(nn, 0, 0, a);
      for (uint32_t r = 1; r < nn; ++r) acc = acc + matrix_unit(nn, r, r, a);
      return acc;
    };
    r_diag2 = std::max(r_diag2, std::fabs(seminorm(diag(2), mat2).upper - n) / scale);
    r_corner2 = std::max(r_corner2,
                         std::fabs(seminorm(matrix_unit(2, 0, 0, a), mat2).upper - n) / scale);
    r_diag3 = std::max(r_diag3, std::fabs(seminorm(diag(3), mat3).upper - n) / scale);
    r_corner3 = std::max(r_corner3,
                         std::fabs(seminorm(matrix_unit(3, 0, 0, a), mat3).upper - n) / scale);
  }
  rep.checks.push_back(make_check("n_{M°}((a,0)) = n_M(a)", r_cplx <= 1e-7, r_cplx, 1e-7));
  rep.checks.push_back(make_check("n_{M_2}(diag a) = n_M(a)", r_diag2 <= 1e-7, r_diag2, 1e-7));
  rep.checks.push_back(
      make_check("n_{M_2}(corner a) = n_M(a)", r_corner2 <= 1e-7, r_corner2, 1e-7));
  rep.checks.push_back(make_check("n_{M_3}(diag a) = n_M(a)", r_diag3 <= 1e-7, r_diag3, 1e-7));
  rep.checks.push_back(
      make_check("n_{M_3}(corner a) = n_M(a)", r_corner3 <= 1e-7, r_corner3, 1e-7));
  return rep;
}

}  // namespace qmod
