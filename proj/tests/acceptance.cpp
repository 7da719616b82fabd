// Acceptance suite: one line per criterion, exit code = number of failures.
// Every tolerance and sample count here is pinned; loosening any of them is
// a behavior change, not a cleanup.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmod/eig.hpp"
#include "qmod/error.hpp"
#include "qmod/expr.hpp"
#include "qmod/forms.hpp"
#include "qmod/irreps.hpp"
#include "qmod/jsonio.hpp"
#include "qmod/positivity.hpp"
#include "qmod/sampler.hpp"

using namespace qmod;
using nlohmann::json;
using clock_t_ = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

double seconds_since(clock_t_::time_point t0) {
  return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

StarElement rat_elem(const Carrier& c, long v) {
  return StarElement::scalar(c, GaussianRational(Rational(v)));
}

// Symmetric element with real rational coefficients (sum of w + w* terms),
// so that l1 bounds stay exactly rational.
StarElement random_sym_rational(const Carrier& c, Sampler& smp, int terms, int len) {
  StarElement e = StarElement::zero(c);
  for (int t = 0; t < terms; ++t) {
    StarElement w = StarElement::from_word(c, smp.word(c, len), GaussianRational(smp.rational()));
    e = e + w + w.star();
  }
  return e;
}

StarElement nonzero_rational_elem(const Carrier& c, Sampler& smp, int terms, int len) {
  for (;;) {
    StarElement a = smp.element_rational_modulus(c, terms, len);
    if (!a.is_zero()) return a;
  }
}

// ---------------------------------------------------------------------------
// 1. certificate soundness: 1000 randomized derivations, exact verification

Outcome criterion1() {
  auto t0 = clock_t_::now();
  std::vector<Carrier> groups{
      Carrier::group_ring(FiniteGroup::cyclic(2)), Carrier::group_ring(FiniteGroup::cyclic(3)),
      Carrier::group_ring(FiniteGroup::cyclic(4)),
      Carrier::group_ring(FiniteGroup::symmetric(3))};
  Carrier fr = Carrier::free_star(2);
  ModulePresentation free_pres(
      fr, {rat_elem(fr, 4) - StarElement::letter(fr, 0) * StarElement::letter(fr, 0).star() -
               StarElement::letter(fr, 1) * StarElement::letter(fr, 1).star()});

  int total = 0, failed = 0;
  auto check = [&](const VerifyResult& vr) {
    if (!vr.ok) ++failed;
  };

  for (int i = 0; i < 100; ++i) {
    Sampler smp(1000 + i);
    const Carrier& gc = groups[i % groups.size()];
    ModulePresentation pres(gc, {});

    // lemma3_split on a symmetric rational element
    {
      StarElement c = random_sym_rational(gc, smp, 2, 2);
      Rational r(1);
      Certificate base{{{Rational(1), StarElement::one(gc), 0}}};
      if (!c.is_zero()) {
        NormCertificate nl = l1_certificate(c, pres);
        r = nl.bound;
        base = nl.cert;
      }
      SplitResult sp = lemma3_split(base, r, c, pres);
      ++total;
      check(cert_verify(sp.plus, StarElement::scalar(gc, GaussianRational(r)) + c, pres));
      check(cert_verify(sp.minus, StarElement::scalar(gc, GaussianRational(r)) - c, pres));

      // lemma3_join reverses it
      Certificate joined = lemma3_join(sp.plus, sp.minus, r, c, pres);
      ++total;
      check(cert_verify(joined, StarElement::scalar(gc, GaussianRational(r * r)) - c * c, pres));
    }

    // norm_cert_star / product / sum on l1-certified elements
    {
      StarElement a = nonzero_rational_elem(gc, smp, 3, 2);
      StarElement b = nonzero_rational_elem(gc, smp, 3, 2);
      NormCertificate na = l1_certificate(a, pres), nb = l1_certificate(b, pres);
      ++total;
      check(cert_verify(norm_cert_star(na, pres), pres));
      ++total;
      check(cert_verify(norm_cert_product(na, nb, pres), pres));
      ++total;
      check(cert_verify(norm_cert_sum(na, nb, pres), pres));

      // pair_drop: concatenated l1 certificates witness r - aa* - bb*
      Certificate cat = na.cert;
      for (const CertTerm& t : nb.cert.terms) cat.terms.push_back(t);
      Rational r = na.bound * na.bound + nb.bound * nb.bound;
      Certificate dropped = norm_cert_pair_drop(cat, a, b, r, pres);
      ++total;
      check(cert_verify(dropped, StarElement::scalar(gc, GaussianRational(r)) - a * a.star(), pres));

      // plain l1 certificate
      ++total;
      check(cert_verify(na, pres));
    }

    // bound_propagate over the free carrier with archimedean witness
    {
      StarElement a = smp.element_rational_modulus(fr, 3, 2);
      NormCertificate nc = bound_propagate(a, free_pres);
      ++total;
      check(cert_verify(nc, free_pres));
    }

    // lift_matrix_cert: column-conjugated lift into Mat2(C[Z2])
    {
      const Carrier& z2 = groups[0];
      ModulePresentation zpres(z2, {});
      StarElement a = nonzero_rational_elem(z2, smp, 2, 1);
      NormCertificate na = l1_certificate(a, zpres);
      std::vector<StarElement> col{smp.element_rational_modulus(z2, 2, 1),
                                   smp.element_rational_modulus(z2, 2, 1)};
      Certificate lifted = lift_matrix_cert(na.cert, col, zpres);
      StarElement v = cert_eval(na.cert, zpres);
      ModulePresentation mpres = matrix_presentation(zpres, 2);
      StarElement target = StarElement::zero(mpres.carrier());
      for (uint32_t r = 0; r < 2; ++r)
        for (uint32_t cc = 0; cc < 2; ++cc)
          target = target + matrix_unit(2, r, cc, col[r] * v * col[cc].star());
      ++total;
      check(cert_verify(lifted, target, mpres));
    }

    // lift_complex_cert: certificates push to the complexification
    {
      const Carrier& z3 = groups[1];
      ModulePresentation zpres(z3, {});
      StarElement a = nonzero_rational_elem(z3, smp, 2, 1);
      NormCertificate na = l1_certificate(a, zpres);
      Certificate lifted = lift_complex_cert(na.cert, zpres);
      ModulePresentation cpres = complexify_presentation(zpres);
      ++total;
      check(cert_verify(lifted, complexify(cert_eval(na.cert, zpres)), cpres));
    }
  }

  double dt = seconds_since(t0);
  bool ok = failed == 0 && total == 1000 && dt < 60.0;
  return {ok, std::to_string(total - failed) + "/" + std::to_string(total) +
                  " derivations verified exactly, " + fmt(dt) + " s"};
}

// ---------------------------------------------------------------------------
// 2. seminorm oracle equivalence against the regular representation

Outcome criterion2() {
  auto t0 = clock_t_::now();
  std::vector<std::pair<std::string, FiniteGroup>> gs{
      {"Z2", FiniteGroup::cyclic(2)},   {"Z3", FiniteGroup::cyclic(3)},
      {"Z4", FiniteGroup::cyclic(4)},   {"Z2xZ2", FiniteGroup::dihedral(2)},
      {"S3", FiniteGroup::symmetric(3)}, {"D4", FiniteGroup::dihedral(4)},
      {"Q8", FiniteGroup::quaternion8()}};
  double worst = 0.0;
  int l1_violations = 0;
  for (auto& [name, g] : gs) {
    Carrier c = Carrier::group_ring(g);
    ModulePresentation pres(c, {});
    AMModel m = build_AM_model(pres, 11);
    Representation reg = regular_rep(c);
    Sampler smp(2000);
    for (int i = 0; i < 100; ++i) {
      StarElement a = smp.element_rational_modulus(c, 4, 3);
      NormEstimate est = seminorm(a, m);
      double nreg = operator_norm(reg.apply(a));
      worst = std::max(worst, std::fabs(est.upper - nreg));
      NormCertificate nl = l1_certificate(a, pres);
      if (to_double(nl.bound) + 1e-9 < est.upper) ++l1_violations;
    }
  }
  double dt = seconds_since(t0);
  bool ok = worst <= 1e-7 && l1_violations == 0 && dt < 120.0;
  return {ok, "700 elements, max |model - regular| = " + fmt(worst) + ", l1 violations " +
                  std::to_string(l1_violations) + ", " + fmt(dt) + " s"};
}

// ---------------------------------------------------------------------------
// 3. the six seminorm laws on C[S3] and Mat2 over the scalars

Outcome criterion3() {
  std::vector<Carrier> carriers{
      Carrier::group_ring(FiniteGroup::symmetric(3)),
      Carrier::matrix_ring(2, Carrier::group_ring(FiniteGroup::trivial()))};
  double worst = 0.0;
  int violations = 0;
  for (const Carrier& c : carriers) {
    ModulePresentation pres(c, {});
    AMModel m = build_AM_model(pres, 7);
    auto n = [&](const StarElement& x) { return seminorm(x, m).upper; };
    Sampler smp(3000);
    for (int i = 0; i < 500; ++i) {
      StarElement a = smp.element(c, 4, 2), b = smp.element(c, 4, 2);
      double na = n(a), nb = n(b);
      double tol = 1e-6;
      auto law = [&](double lhs, double rhs) {
        double slack = rhs - lhs;
        if (slack < -tol) ++violations;
        worst = std::max(worst, -slack);
      };
      law(n(a + b), na + nb);                     // triangle
      law(n(a * b), na * nb);                     // submultiplicative
      law(std::fabs(n(a.star()) - na), 0.0);      // *-invariance
      Rational t = smp.rational();
      StarElement ta = StarElement::scalar(c, GaussianRational(t)) * a;
      law(std::fabs(n(ta) - std::fabs(to_double(t)) * na), 0.0);  // scaling
      double cs = std::fabs(n(a * a.star()) - na * na);           // C*-identity
      if (cs > tol * std::max(1.0, na * na)) ++violations;
      law(na * na, n(a * a.star() + b * b.star()));  // n(a)^2 <= n(aa*+bb*)
    }
  }
  bool ok = violations == 0;
  return {ok, "1000 pairs, " + std::to_string(violations) +
                  " violations, worst slack deficit " + fmt(worst)};
}

// ---------------------------------------------------------------------------
// 4. character-space audit over abelian group rings

Outcome criterion4() {
  std::vector<FiniteGroup> gs{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                              FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
                              FiniteGroup::dihedral(2)};
  int reports = 0, failed = 0;
  uint64_t seed = 40;
  for (const FiniteGroup& g : gs) {
    Carrier c = Carrier::group_ring(g);
    std::vector<std::vector<StarElement>> gen_sets;
    gen_sets.push_back({});
    Sampler smp(seed);
    for (int k = 0; k < 3; ++k) {
      std::vector<StarElement> s;
      int count = 1 + static_cast<int>(smp.uniform(2));
      for (int j = 0; j < count; ++j) s.push_back(random_sym_rational(c, smp, 2, 2));
      gen_sets.push_back(std::move(s));
    }
    for (auto& s : gen_sets) {
      ModulePresentation pres(c, std::vector<StarElement>(s));
      AuditReport rep = theorem1_audit(pres, 100, seed + 13);
      ++reports;
      if (!rep.passed()) ++failed;
    }
    ++seed;
  }
  bool ok = failed == 0 && reports == 20;
  return {ok, std::to_string(reports) + " presentations audited, " + std::to_string(failed) +
                  " failed"};
}

// ---------------------------------------------------------------------------
// 5. arch membership coheres with block PSD and the dyadic shift test

Outcome criterion5() {
  Carrier c = Carrier::group_ring(FiniteGroup::symmetric(3));
  // order-2 element for the nontrivial module: 2 - t - t* has image
  // eigenvalues in {0, 4} in every irrep, so every irrep survives
  const FiniteGroup& grp = c.group();
  uint32_t t_idx = grp.identity();
  for (uint32_t i = 0; i < grp.order(); ++i)
    if (i != grp.identity() && grp.mul(i, i) == grp.identity()) {
      t_idx = i;
      break;
    }
  StarElement t = StarElement::group_element(c, t_idx);
  std::vector<ModulePresentation> presentations;
  presentations.emplace_back(c, std::vector<StarElement>{});
  presentations.emplace_back(c, std::vector<StarElement>{rat_elem(c, 2) - t - t.star()});

  const double band = 2e-6, dyadic = std::ldexp(1.0, -20);
  int disagreements = 0, tested = 0, in_band = 0;
  for (size_t p = 0; p < presentations.size(); ++p) {
    AMModel m = build_AM_model(presentations[p], 21);
    Sampler smp(5000 + p);
    for (int i = 0; i < 200; ++i) {
      StarElement x = smp.symmetric_element(c, 4, 3);
      ++tested;
      double lambda = std::numeric_limits<double>::infinity();
      for (const ComplexMatrix& blk : j_apply(m, x))
        lambda = std::min(lambda, min_eigenvalue(blk));
      if (std::fabs(lambda) <= band) {
        ++in_band;  // marginal: no classification is required to agree
        continue;
      }
      bool psd_in = lambda > 0.0;
      bool dyadic_in = lambda >= -dyadic;  // x + r stays PSD down to 2^-20
      ArchStatus st = arch_membership_model(x, m);
      bool arch_in = st == ArchStatus::interior || st == ArchStatus::boundary_arch;
      bool arch_definite = arch_in || st == ArchStatus::outside;
      if (!arch_definite || arch_in != psd_in || psd_in != dyadic_in) ++disagreements;
    }
  }
  bool ok = disagreements == 0 && tested == 400;
  return {ok, "400 elements, " + std::to_string(disagreements) + " disagreements, " +
                  std::to_string(in_band) + " skipped in the marginal band"};
}

// ---------------------------------------------------------------------------
// 6. positive-form audits and negative witnesses for rejected forms

Outcome criterion6() {
  std::vector<Carrier> carriers{Carrier::group_ring(FiniteGroup::cyclic(4)),
                                Carrier::group_ring(FiniteGroup::symmetric(3))};
  int audits = 0, failed = 0, rejected_forms = 0, witnesses = 0;
  for (const Carrier& c : carriers) {
    ModulePresentation plain(c, {});
    for (int i = 0; i < 50; ++i) {
      PositiveForm f = random_positive_form(plain, 600 + i);
      AuditReport r9 = prop9_audit(f, plain, 25, 601 + i);
      GNSResult g = gns(f);
      AuditReport r10 = prop10_audit(g, plain, 25, 602 + i);
      ++audits;
      if (!r9.passed() || !r10.passed()) ++failed;
    }

    // rejected forms: a sign character violates positivity against a module
    // generated by an element it sends to -1
    const FiniteGroup& grp = c.group();
    std::vector<cplx> vals(grp.order(), cplx(1.0, 0.0));
    StarElement gen = StarElement::zero(c);
    if (grp.is_abelian()) {
      // Z4: the character g^k -> (-1)^k, rejected against S = {g + g*}
      uint32_t p = grp.identity();
      for (uint32_t k = 0; k < grp.order(); ++k) {
        vals[p] = cplx(k % 2 == 0 ? 1.0 : -1.0, 0.0);
        p = grp.mul(p, 1);
      }
      StarElement g1 = StarElement::group_element(c, 1);
      gen = g1 + g1.star();
    } else {
      // S3: the sign character, -1 on the order-2 elements (transpositions),
      // rejected against S = {transposition}
      uint32_t t_idx = grp.identity();
      for (uint32_t k = 0; k < grp.order(); ++k) {
        bool order2 = k != grp.identity() && grp.mul(k, k) == grp.identity();
        if (order2 && t_idx == grp.identity()) t_idx = k;
        vals[k] = cplx(order2 ? -1.0 : 1.0, 0.0);
      }
      gen = StarElement::group_element(c, t_idx);
    }
    ModulePresentation modp(c, {gen});
    PositiveForm sign_form = form_from_values(c, vals);
    std::vector<PositiveForm> candidates{sign_form};
    for (int i = 0; i < 8; ++i) candidates.push_back(random_positive_form(plain, 700 + i));
    for (const PositiveForm& f : candidates) {
      if (form_respects_module(f, modp) != Positivity::no) continue;
      ++rejected_forms;
      AuditReport r9 = prop9_audit(f, modp, 25, 99);
      for (const AuditCheck& ch : r9.checks)
        if (ch.status == "pass" && ch.residual < -1e-8 &&
            ch.witness.find("certificate verified") != std::string::npos)
          ++witnesses;
    }
  }
  bool ok = failed == 0 && audits == 100 && rejected_forms > 0 && witnesses == rejected_forms;
  return {ok, std::to_string(audits) + " form audits, " + std::to_string(failed) + " failed; " +
                  std::to_string(witnesses) + "/" + std::to_string(rejected_forms) +
                  " rejected forms produced a verified negative witness"};
}

// ---------------------------------------------------------------------------
// 7. GNS reconstruction and the C[Z2] trace form

Outcome criterion7() {
  std::vector<Carrier> carriers{Carrier::group_ring(FiniteGroup::cyclic(4)),
                                Carrier::group_ring(FiniteGroup::symmetric(3))};
  double worst = 0.0;
  int forms = 0;
  for (const Carrier& c : carriers) {
    ModulePresentation plain(c, {});
    for (int i = 0; i < 25; ++i) {
      PositiveForm f = random_positive_form(plain, 800 + i);
      GNSResult g = gns(f);
      ++forms;
      const std::vector<BasisWord>& basis = f.basis();
      for (size_t k = 0; k < basis.size(); ++k) {
        StarElement b = StarElement::from_word(c, basis[k], GaussianRational(1));
        ComplexMatrix psi = g.rep.apply(b);
        cplx rec(0.0, 0.0);
        for (int r = 0; r < psi.dim(); ++r) {
          cplx row(0.0, 0.0);
          for (int cc = 0; cc < psi.dim(); ++cc) row += psi.at(r, cc) * g.cyclic[cc];
          rec += row * std::conj(g.cyclic[r]);
        }
        worst = std::max(worst, std::abs(rec - f.values()[k]));
      }
    }
  }

  // trace form on C[Z2]: GNS must be the regular representation
  Carrier z2 = Carrier::group_ring(FiniteGroup::cyclic(2));
  PositiveForm trace = form_from_values(z2, {cplx(2.0, 0.0), cplx(0.0, 0.0)});
  GNSResult g = gns(trace);
  Representation reg = regular_rep(z2);
  double char_diff = 0.0;
  bool dims = g.rep.dim() == reg.dim();
  for (uint32_t k = 0; k < 2; ++k) {
    StarElement b = StarElement::group_element(z2, k);
    char_diff = std::max(char_diff,
                         std::abs(g.rep.apply(b).trace() - reg.apply(b).trace()));
  }
  bool ok = worst <= 1e-8 && forms == 50 && dims && char_diff <= 1e-6;
  return {ok, "50 forms, max reconstruction defect " + fmt(worst) +
                  "; trace-form character gap " + fmt(char_diff)};
}

// ---------------------------------------------------------------------------
// 8. evaluation-map audit on C[S3]

Outcome criterion8() {
  Carrier c = Carrier::group_ring(FiniteGroup::symmetric(3));
  ModulePresentation pres(c, {});
  Sampler smp(900);
  std::vector<StarElement> elems{StarElement::one(c) + StarElement::group_element(c, 1),
                                 smp.element_rational_modulus(c, 4, 3),
                                 smp.symmetric_element(c, 4, 3)};
  double iso = 0.0, hom = 0.0, equi = 0.0;
  int failed = 0;
  for (const StarElement& a : elems) {
    AuditReport rep = evaluation_map_audit(pres, a, 100, 20, 901);
    if (!rep.passed()) ++failed;
    for (const AuditCheck& ch : rep.checks) {
      if (ch.name.find("isometry") != std::string::npos) iso = std::max(iso, ch.residual);
      if (ch.name.find("homomorphism") != std::string::npos) hom = std::max(hom, ch.residual);
      if (ch.name.find("equivariance") != std::string::npos) equi = std::max(equi, ch.residual);
    }
  }
  bool ok = failed == 0 && iso <= 1e-7 && hom <= 1e-9 && equi <= 1e-9;
  return {ok, "isometry " + fmt(iso) + ", homomorphism " + fmt(hom) + ", equivariance " +
                  fmt(equi)};
}

// ---------------------------------------------------------------------------
// 9. complexified and matrix lifts preserve the seminorm

Outcome criterion9() {
  std::vector<Carrier> carriers{Carrier::group_ring(FiniteGroup::cyclic(2)),
                                Carrier::group_ring(FiniteGroup::cyclic(3))};
  double worst = 0.0;
  int samples = 0;
  for (const Carrier& c : carriers) {
    ModulePresentation pres(c, {});
    AMModel base = build_AM_model(pres, 31);
    AMModel cx = build_AM_model(complexify_presentation(pres), 31);
    std::vector<AMModel> mats;
    for (uint32_t n : {2u, 3u}) mats.push_back(build_AM_model(matrix_presentation(pres, n), 31));
    Sampler smp(1100);
    for (int i = 0; i < 50; ++i) {
      StarElement a = smp.element(c, 4, 2);
      double nb = seminorm(a, base).upper;
      worst = std::max(worst, std::fabs(seminorm(complexify(a), cx).upper - nb));
      for (size_t mi = 0; mi < mats.size(); ++mi) {
        uint32_t n = mi == 0 ? 2 : 3;
        StarElement corner = matrix_unit(n, 0, 0, a);
        StarElement diag = StarElement::zero(mats[mi].pres.carrier());
        for (uint32_t k = 0; k < n; ++k) diag = diag + matrix_unit(n, k, k, a);
        worst = std::max(worst, std::fabs(seminorm(corner, mats[mi]).upper - nb));
        worst = std::max(worst, std::fabs(seminorm(diag, mats[mi]).upper - nb));
      }
      ++samples;
    }
  }
  bool ok = worst <= 1e-7 && samples == 100;
  return {ok, "100 elements through complexified, Mat2 and Mat3 lifts, max gap " + fmt(worst)};
}

// ---------------------------------------------------------------------------
// 10. irrep engine self-checks

Outcome criterion10() {
  std::vector<std::pair<std::string, FiniteGroup>> gs{
      {"Z2", FiniteGroup::cyclic(2)},    {"Z3", FiniteGroup::cyclic(3)},
      {"Z4", FiniteGroup::cyclic(4)},    {"Z6", FiniteGroup::cyclic(6)},
      {"Z2xZ2", FiniteGroup::dihedral(2)}, {"D3", FiniteGroup::dihedral(3)},
      {"D4", FiniteGroup::dihedral(4)},  {"S3", FiniteGroup::symmetric(3)},
      {"S4", FiniteGroup::symmetric(4)}, {"Q8", FiniteGroup::quaternion8()}};
  int bad_sum = 0;
  double ortho = 0.0;
  int perm_mismatch = 0;
  for (auto& [name, g] : gs) {
    Carrier c = Carrier::group_ring(g);
    IrrepSet s1 = decompose_irreps(c, 1), s2 = decompose_irreps(c, 2);
    uint64_t sum = 0;
    for (const Representation& r : s1.reps) sum += uint64_t(r.dim()) * uint64_t(r.dim());
    if (sum != g.order()) ++bad_sum;
    ortho = std::max(ortho, character_orthogonality_defect(s1));
    if (!characters_match_up_to_permutation(s1, s2, 1e-6)) ++perm_mismatch;
  }
  bool ok = bad_sum == 0 && ortho <= 1e-6 && perm_mismatch == 0;
  return {ok, "10 groups; dimension-sum failures " + std::to_string(bad_sum) +
                  ", orthogonality defect " + fmt(ortho) + ", seed mismatches " +
                  std::to_string(perm_mismatch)};
}

// ---------------------------------------------------------------------------
// 11. CLI contract

#ifndef QMOD_CLI_PATH
#define QMOD_CLI_PATH "qmod"
#endif

int run_cli(const std::string& args, std::string* out) {
  std::string cmd = std::string(QMOD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  std::string collected;
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) collected.append(buf, n);
  int status = pclose(p);
  if (out) *out = collected;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion11() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qmod_acceptance";
  fs::create_directories(dir);
  std::string out;
  std::vector<std::string> problems;

  if (run_cli("norm --carrier cyclic:2 \"1 + g1\"", &out) != 0 || out != "2 (exact)\n")
    problems.push_back("norm example");

  fs::path good = dir / "good.json", bad = dir / "bad.json";
  if (run_cli("cert-derive --carrier cyclic:2 --op l1 \"1 + g1\" --out " + good.string(), &out) !=
      0)
    problems.push_back("cert-derive");
  if (run_cli("cert-verify " + good.string(), &out) != 0 || out != "accepted\n")
    problems.push_back("cert-verify good");
  {
    std::ifstream in(good);
    json j;
    in >> j;
    j["terms"][0]["weight"] = "7/8";  // corrupt one weight
    std::ofstream o(bad);
    o << j.dump(2) << "\n";
  }
  if (run_cli("cert-verify " + bad.string(), &out) != 1) problems.push_back("cert-verify bad");

  if (run_cli("arch --carrier cyclic:2 --gen \"g1\" -- \"g1\"", &out) != 0 ||
      out != "interior\n")
    problems.push_back("arch example");

  // byte-stability of JSON output under a fixed seed
  std::string a1, a2, b1, b2;
  run_cli("norm --carrier cyclic:3 --seed 7 --json \"1 + g1 + g2\"", &a1);
  run_cli("norm --carrier cyclic:3 --seed 7 --json \"1 + g1 + g2\"", &a2);
  run_cli("irreps --carrier cyclic:4 --seed 5 --json", &b1);
  run_cli("irreps --carrier cyclic:4 --seed 5 --json", &b2);
  if (a1.empty() || a1 != a2 || b1.empty() || b1 != b2) problems.push_back("byte stability");

  bool ok = problems.empty();
  std::string detail = ok ? "3 worked examples and byte-stable JSON" : "failed:";
  for (const std::string& p : problems) detail += " " + p + ";";
  return {ok, detail};
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Outcome (*fn)();
  };
  std::vector<Row> rows{{"certificate soundness", criterion1},
                        {"seminorm oracle equivalence", criterion2},
                        {"seminorm law suite", criterion3},
                        {"character-space audit", criterion4},
                        {"arch membership coherence", criterion5},
                        {"positive-form audits", criterion6},
                        {"GNS reconstruction", criterion7},
                        {"evaluation-map audit", criterion8},
                        {"lift seminorm equality", criterion9},
                        {"irrep engine self-checks", criterion10},
                        {"CLI contract", criterion11}};
  int failures = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    Outcome oc;
    try {
      oc = rows[i].fn();
    } catch (const std::exception& e) {
      oc = {false, std::string("exception: ") + e.what()};
    }
    if (!oc.ok) ++failures;
    std::printf("[%2zu/11] %-28s %s (%s)\n", i + 1, rows[i].name, oc.ok ? "PASS" : "FAIL",
                oc.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
