#include "qmod/forms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "qmod/eig.hpp"
#include "qmod/error.hpp"
#include "qmod/sampler.hpp"

namespace qmod {

namespace {

size_t basis_index(const std::vector<BasisWord>& basis, const BasisWord& w) {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || !(*it == w)) fail("form: word outside the carrier basis");
  return static_cast<size_t>(it - basis.begin());
}

cplx eval_on(const std::vector<BasisWord>& basis, const std::vector<cplx>& values,
             const StarElement& a) {
  cplx out(0.0);
  for (const auto& [w, z] : a.terms()) out += z.to_complex() * values[basis_index(basis, w)];
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// On a complexified carrier the seminorm is computed on the quotient that
// identifies the internal imaginary unit (0,1) with the coefficient i.  A
// form (or GNS representation) participates in the Proposition 9/10 bounds
// only when it factors through that identification.
bool factors_through_complex_structure(const PositiveForm& f) {
  const Carrier& c = f.carrier();
  if (c.kind() != CarrierKind::complexified) return true;
  StarElement j = complex_pair(StarElement::zero(c.inner()), StarElement::one(c.inner()));
  for (size_t idx = 0; idx < f.basis().size(); ++idx) {
    StarElement b =
        StarElement::from_word(c, f.basis()[idx], GaussianRational(Rational(1)));
    if (std::abs(f(j * b) - cplx(0, 1) * f.values()[idx]) > 1e-9) return false;
  }
  return true;
}

// Exact rationalization of a floating-point vector (doubles are dyadic
// rationals, so this is lossless).
StarElement rationalized_combination(const Carrier& c, const std::vector<BasisWord>& basis,
                                     const std::vector<cplx>& coeffs) {
  StarElement a = StarElement::zero(c);
  for (size_t j = 0; j < basis.size(); ++j) {
    if (std::abs(coeffs[j]) < 1e-14) continue;
    GaussianRational z(Rational(coeffs[j].real()), Rational(coeffs[j].imag()));
    a = a + z * StarElement::from_word(c, basis[j], GaussianRational(Rational(1)));
  }
  return a;
}

}  // namespace

cplx PositiveForm::operator()(const StarElement& a) const {
  if (!(a.carrier() == carrier_)) fail("form: carrier mismatch");
  return eval_on(basis_, values_, a);
}

PositiveForm form_from_values(const Carrier& c, const std::vector<cplx>& values, double tol) {
  std::vector<BasisWord> basis = enumerate_basis(c);
  if (values.size() != basis.size())
    fail("form_from_values: expected " + std::to_string(basis.size()) + " values, got " +
         std::to_string(values.size()));

  const size_t n = basis.size();
  std::vector<StarElement> be;
  be.reserve(n);
  for (const BasisWord& w : basis)
    be.push_back(StarElement::from_word(c, w, GaussianRational(Rational(1))));

  // f(a*) = conj(f(a)) on the basis closure
  for (size_t j = 0; j < n; ++j) {
    cplx lhs = eval_on(basis, values, be[j].star());
    double defect = std::abs(lhs - std::conj(values[j]));
    if (defect > 1e-10)
      fail("form_from_values: hermiticity violation " + fmt(defect) + " on basis word " +
           std::to_string(j));
  }

  // Gram matrix F_{jk} = f(b_j b_k*); PSD is exactly f(aa*) >= 0
  ComplexMatrix F(static_cast<int>(n));
  double scale = 1.0;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      cplx v = eval_on(basis, values, be[j] * be[k].star());
      F.at(static_cast<int>(j), static_cast<int>(k)) = v;
      scale = std::max(scale, std::abs(v));
    }
  ComplexMatrix H = 0.5 * (F + F.adjoint());
  double mu = min_eigenvalue(H);
  if (mu < -tol * scale)
    fail("form_from_values: Gram matrix is not PSD, most negative eigenvalue " + fmt(mu));

  PositiveForm f;
  f.carrier_ = c;
  f.basis_ = std::move(basis);
  f.values_ = values;
  f.gram_ = H;
  return f;
}

Positivity form_respects_module(const PositiveForm& f, const ModulePresentation& pres,
                                double tol) {
  if (!(f.carrier() == pres.carrier())) fail("form_respects_module: carrier mismatch");
  const std::vector<BasisWord>& basis = f.basis();
  const size_t n = basis.size();
  std::vector<StarElement> be;
  be.reserve(n);
  for (const BasisWord& w : basis)
    be.push_back(StarElement::from_word(f.carrier(), w, GaussianRational(Rational(1))));

  Positivity out = Positivity::yes;
  for (const StarElement& s : pres.generators()) {
    ComplexMatrix H(static_cast<int>(n));
    double scale = 1.0;
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        cplx v = f(be[j] * s * be[k].star());
        H.at(static_cast<int>(j), static_cast<int>(k)) = v;
        scale = std::max(scale, std::abs(v));
      }
    H = 0.5 * (H + H.adjoint());
    double mu = min_eigenvalue(H);
    if (mu < -10.0 * tol * scale) return Positivity::no;
    if (mu < -tol * scale) out = Positivity::marginal;
  }
  return out;
}

PositiveForm random_positive_form(const ModulePresentation& pres, uint64_t seed) {
  AMModel m = build_AM_model(pres, seed);
  Sampler smp(seed ^ 0xf0f0f0f0ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<BasisWord> basis = enumerate_basis(pres.carrier());
  std::vector<cplx> values(basis.size(), cplx(0.0));
  for (const Representation& rep : m.irreps) {
    double w = 0.25 * static_cast<double>(1 + smp.uniform(4));
    std::vector<cplx> xi(static_cast<size_t>(rep.dim()));
    double nrm = 0.0;
    for (cplx& z : xi) {
      z = cplx(gauss(smp.rng()), gauss(smp.rng()));
      nrm += std::norm(z);
    }
    nrm = std::sqrt(nrm);
    for (cplx& z : xi) z /= nrm;
    for (size_t j = 0; j < basis.size(); ++j) {
      ComplexMatrix img = rep.apply(
          StarElement::from_word(pres.carrier(), basis[j], GaussianRational(Rational(1))));
      cplx acc(0.0);
      for (int r = 0; r < rep.dim(); ++r)
        for (int cidx = 0; cidx < rep.dim(); ++cidx)
          acc += std::conj(xi[static_cast<size_t>(r)]) * img.at(r, cidx) *
                 xi[static_cast<size_t>(cidx)];
      values[j] += w * acc;
    }
  }
  return form_from_values(pres.carrier(), values);
}

GNSResult gns(const PositiveForm& f, double rank_tol) {
  const Carrier& c = f.carrier();
  const std::vector<BasisWord>& basis = f.basis();
  const size_t n = basis.size();
  std::vector<StarElement> be;
  be.reserve(n);
  for (const BasisWord& w : basis)
    be.push_back(StarElement::from_word(c, w, GaussianRational(Rational(1))));

  cplx f1 = f(StarElement::one(c));
  if (!(f1.real() > 1e-12)) fail("gns: f(1) is not positive; no cyclic vector");

  // <a, b> = f(b* a): Gram G_{jk} = f(b_j* b_k), so <u, v> = v-dagger G u
  ComplexMatrix G(static_cast<int>(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      G.at(static_cast<int>(j), static_cast<int>(k)) = f(be[j].star() * be[k]);
  G = 0.5 * (G + G.adjoint());

  EigResult eg = hermitian_eig(G);
  double lam_max = eg.values.back();
  if (lam_max <= 0.0) fail("gns: Gram matrix has no positive part");
  std::vector<size_t> keep;
  for (size_t i = 0; i < n; ++i)
    if (eg.values[i] > rank_tol * lam_max) keep.push_back(i);
  const size_t r = keep.size();

  // K maps coefficient vectors to rank-space coordinates; P is its right
  // inverse on the range (K = Lambda^{1/2} V-dagger, P = V Lambda^{-1/2}).
  std::vector<std::vector<cplx>> K(r, std::vector<cplx>(n));
  std::vector<std::vector<cplx>> P(n, std::vector<cplx>(r));
  for (size_t i = 0; i < r; ++i) {
    double root = std::sqrt(eg.values[keep[i]]);
    for (size_t j = 0; j < n; ++j) {
      cplx vji = eg.vectors.at(static_cast<int>(j), static_cast<int>(keep[i]));
      K[i][j] = root * std::conj(vji);
      P[j][i] = vji / root;
    }
  }

  // psi(b) = K C_b P with C_b the left-multiplication structure matrix
  std::vector<ComplexMatrix> images;
  images.reserve(n);
  for (size_t widx = 0; widx < n; ++widx) {
    std::vector<std::vector<cplx>> C(n, std::vector<cplx>(n, cplx(0.0)));
    for (size_t k = 0; k < n; ++k) {
      StarElement prod = be[widx] * be[k];
      for (const auto& [w, z] : prod.terms()) C[basis_index(basis, w)][k] = z.to_complex();
    }
    ComplexMatrix psi(static_cast<int>(r));
    for (size_t i = 0; i < r; ++i)
      for (size_t l = 0; l < r; ++l) {
        cplx acc(0.0);
        for (size_t j = 0; j < n; ++j) {
          cplx cp(0.0);
          for (size_t k = 0; k < n; ++k)
            if (C[j][k] != cplx(0.0)) cp += C[j][k] * P[k][l];
          acc += K[i][j] * cp;
        }
        psi.at(static_cast<int>(i), static_cast<int>(l)) = acc;
      }
    images.push_back(psi);
  }

  GNSResult out{Representation::basis_rep(c, images), {}, f1.real()};

  // cyclic vector: the class of 1
  std::vector<cplx> u1(n, cplx(0.0));
  StarElement unit = StarElement::one(c);
  for (const auto& [w, z] : unit.terms()) u1[basis_index(basis, w)] = z.to_complex();
  out.cyclic.assign(r, cplx(0.0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < n; ++j) out.cyclic[i] += K[i][j] * u1[j];

  // faithfulness: <psi(b) Omega, Omega> reproduces f on every basis word
  for (size_t widx = 0; widx < n; ++widx) {
    cplx acc(0.0);
    for (size_t i = 0; i < r; ++i) {
      cplx row(0.0);
      for (size_t l = 0; l < r; ++l)
        row += images[widx].at(static_cast<int>(i), static_cast<int>(l)) * out.cyclic[l];
      acc += std::conj(out.cyclic[i]) * row;
    }
    double defect = std::abs(acc - f.values()[widx]);
    if (defect > 1e-8 * std::max(1.0, std::abs(f.values()[widx])))
      fail("gns: reconstruction defect " + fmt(defect) + " on basis word " +
           std::to_string(widx));
  }
  return out;
}

AuditReport prop9_audit(const PositiveForm& f, const ModulePresentation& pres, int samples,
                        uint64_t seed) {
  AuditReport rep;
  rep.title = "positive form vs seminorm";
  std::optional<AMModel> model;
  try {
    model = build_AM_model(pres, seed);
  } catch (const Error& e) {
    rep.checks.push_back({"model", "info", 0.0, 0.0,
                          std::string("degenerate presentation: ") + e.what()});
    return rep;
  }

  if (!factors_through_complex_structure(f)) {
    rep.checks.push_back({"form factors through the complex structure", "info", 0.0, 0.0,
                          "f does not identify (0,1) with i; the seminorm comparison "
                          "applies on the quotient only"});
    return rep;
  }

  const Carrier& c = pres.carrier();
  const double f1 = f(StarElement::one(c)).real();
  Positivity resp = form_respects_module(f, pres);
  Sampler smp(seed);

  std::vector<StarElement> probes = {StarElement::one(c)};
  for (const StarElement& s : pres.generators()) probes.push_back(s);
  for (int t = 0; t < samples; ++t) probes.push_back(smp.element(c, 4, 2));

  if (resp == Positivity::yes) {
    double worst = 0.0;
    double cs_worst = 0.0;
    for (const StarElement& a : probes) {
      double na = seminorm(a, *model).upper;
      worst = std::max(worst, std::abs(f(a)) - na * f1);
      cs_worst = std::max(cs_worst,
                          std::norm(f(a)) - (f(a * a.star()).real() * f1));
    }
    rep.checks.push_back({"seminorm domination |f(a)| <= n_M(a) f(1)",
                          worst <= 1e-6 ? "pass" : "fail", worst, 1e-6,
                          std::to_string(probes.size()) + " samples"});
    rep.checks.push_back({"Cauchy-Schwarz |f(a)|^2 <= f(aa*) f(1)",
                          cs_worst <= 1e-6 ? "pass" : "fail", cs_worst, 1e-6, ""});
  } else if (resp == Positivity::no) {
    // exhibit m = a s a* in M_S with f(m) < 0, certificate-built
    const std::vector<BasisWord>& basis = f.basis();
    std::vector<StarElement> be;
    for (const BasisWord& w : basis)
      be.push_back(StarElement::from_word(c, w, GaussianRational(Rational(1))));
    bool found = false;
    for (size_t si = 0; si < pres.generators().size() && !found; ++si) {
      const StarElement& s = pres.generators()[si];
      ComplexMatrix H(static_cast<int>(basis.size()));
      for (size_t j = 0; j < basis.size(); ++j)
        for (size_t k = 0; k < basis.size(); ++k)
          H.at(static_cast<int>(j), static_cast<int>(k)) = f(be[j] * s * be[k].star());
      H = 0.5 * (H + H.adjoint());
      EigResult eg = hermitian_eig(H);
      if (eg.values.front() >= 0.0) continue;
      std::vector<cplx> coeff(basis.size());
      for (size_t j = 0; j < basis.size(); ++j)
        coeff[j] = std::conj(eg.vectors.at(static_cast<int>(j), 0));
      StarElement a = rationalized_combination(c, basis, coeff);
      StarElement m = a * s * a.star();
      Certificate cert{{CertTerm{Rational(1), a, si + 1}}};
      VerifyResult vr = cert_verify(cert, m, pres);
      double fm = f(m).real();
      if (vr.ok && fm < -1e-8) {
        rep.checks.push_back({"negative value on a certified element of M_S", "pass", fm,
                              -1e-8,
                              "f(a s a*) = " + fmt(fm) + " with generator " +
                                  std::to_string(si) + ", certificate verified"});
        found = true;
      }
    }
    if (!found)
      rep.checks.push_back({"negative value on a certified element of M_S", "fail", 0.0,
                            -1e-8, "no witness found"});
  } else {
    rep.checks.push_back({"form is marginal on the module", "info", 0.0, 0.0,
                          "PSD check within the marginal band; no definite verdict"});
  }
  return rep;
}

AuditReport prop10_audit(const GNSResult& g, const ModulePresentation& pres, int samples,
                         uint64_t seed) {
  AuditReport rep;
  rep.title = "GNS norm bound";
  Positivity pos = is_M_positive(g.rep, pres);
  if (pos == Positivity::no) {
    rep.checks.push_back({"GNS representation is M-positive", "fail", 0.0, 0.0,
                          "a generator has a negative image; the bound does not apply"});
    return rep;
  }
  rep.checks.push_back({"GNS representation is M-positive",
                        pos == Positivity::yes ? "pass" : "marginal", 0.0, 0.0, ""});

  const Carrier& c = pres.carrier();
  if (c.kind() == CarrierKind::complexified) {
    StarElement j =
        complex_pair(StarElement::zero(c.inner()), StarElement::one(c.inner()));
    StarElement ideal = GaussianRational::i() * StarElement::one(c) - j;
    double defect = operator_norm(g.rep.apply(ideal));
    if (defect > 1e-8) {
      rep.checks.push_back({"representation factors through the complex structure", "info",
                            defect, 1e-8,
                            "psi does not kill i - (0,1); the seminorm bound applies on "
                            "the quotient only"});
      return rep;
    }
  }

  AMModel model = build_AM_model(pres, seed);
  const double n1 = operator_norm(g.rep.apply(StarElement::one(c)));
  Sampler smp(seed ^ 0xabcdULL);

  double worst = 0.0;
  double tightest = 0.0;
  for (int t = 0; t < samples; ++t) {
    StarElement a = t == 0 ? StarElement::one(c) : smp.element(c, 4, 2);
    double na = seminorm(a, model).upper;
    double lhs = operator_norm(g.rep.apply(a));
    worst = std::max(worst, lhs - na * n1);
    if (na * n1 > 1e-12) tightest = std::max(tightest, lhs / (na * n1));
  }
  rep.checks.push_back({"||psi(a)|| <= n_M(a) ||psi(1)||",
                        worst <= 1e-6 ? "pass" : "fail", worst, 1e-6,
                        "tightest ratio " + fmt(tightest) + " over " +
                            std::to_string(samples) + " samples"});
  return rep;
}

}  // namespace qmod
