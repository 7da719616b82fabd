#include "qmod/certificate.hpp"

#include <algorithm>

#include "qmod/error.hpp"

namespace qmod {

namespace {

StarElement rat(const Carrier& c, const Rational& q) {
  return StarElement::scalar(c, GaussianRational(q));
}

void require(const Certificate& cert, const StarElement& target, const ModulePresentation& pres,
             const char* stage) {
  VerifyResult v = cert_verify(cert, target, pres);
  if (!v.ok) fail(std::string(stage) + ": " + v.reason);
}

void require(const NormCertificate& nc, const ModulePresentation& pres, const char* stage) {
  VerifyResult v = cert_verify(nc, pres);
  if (!v.ok) fail(std::string(stage) + ": " + v.reason);
}

// Weights scaled by q >= 0; q = 0 drops every term.
Certificate scale_cert(const Certificate& in, const Rational& q) {
  if (q < 0) fail("certificate weights must stay positive");
  Certificate out;
  if (q == 0) return out;
  out.terms.reserve(in.terms.size());
  for (const CertTerm& t : in.terms) out.terms.push_back({t.weight * q, t.conjugator, t.generator});
  return out;
}

// Conjugators left-multiplied by m: value v becomes m·v·m*.
Certificate conjugate_cert(const Certificate& in, const StarElement& m) {
  Certificate out;
  out.terms.reserve(in.terms.size());
  for (const CertTerm& t : in.terms) out.terms.push_back({t.weight, m * t.conjugator, t.generator});
  return out;
}

void append(Certificate& into, const Certificate& more) {
  into.terms.insert(into.terms.end(), more.terms.begin(), more.terms.end());
}

CertTerm unit_term(const Rational& weight, const StarElement& conjugator) {
  return {weight, conjugator, 0};
}

// A NormCertificate may carry bound 0 only for the zero element.
NormCertificate zero_norm_cert(const Carrier& c) {
  return {StarElement::zero(c), Rational(0), Certificate{}};
}

}  // namespace

StarElement norm_cert_target(const StarElement& a, const Rational& r) {
  return rat(a.carrier(), r * r) - a * a.star();
}

NormCertificate norm_cert_zero(const Carrier& c, const Rational& s) {
  if (s <= 0) fail("norm_cert_zero needs a positive bound");
  Certificate cert;
  cert.terms.push_back(unit_term(s * s, StarElement::one(c)));
  return {StarElement::zero(c), s, std::move(cert)};
}

StarElement cert_eval(const Certificate& cert, const ModulePresentation& pres) {
  StarElement total(pres.carrier());
  for (const CertTerm& t : cert.terms) {
    if (t.weight <= 0) fail("certificate weights must be strictly positive");
    if (t.generator > pres.generator_count()) fail("generator index out of range");
    if (t.conjugator.carrier() != pres.carrier()) fail("carrier mismatch in certificate");
    StarElement c = pres.generator_value(t.generator);
    total = total + GaussianRational(t.weight) * (t.conjugator * c * t.conjugator.star());
  }
  return total;
}

VerifyResult cert_verify(const Certificate& cert, const StarElement& target,
                         const ModulePresentation& pres) {
  if (target.carrier() != pres.carrier()) fail("carrier mismatch in certificate");
  if (!target.is_symmetric()) return {false, "target not symmetric"};
  StarElement value = cert_eval(cert, pres);
  if (value != target) return {false, "value mismatch"};
  return {true, ""};
}

VerifyResult cert_verify(const NormCertificate& nc, const ModulePresentation& pres) {
  if (nc.bound < 0) return {false, "negative bound"};
  if (nc.bound == 0 && !nc.element.is_zero()) return {false, "zero bound on a nonzero element"};
  return cert_verify(nc.cert, norm_cert_target(nc.element, nc.bound), pres);
}

SplitResult lemma3_split(const Certificate& nc, const Rational& r, const StarElement& c,
                         const ModulePresentation& pres) {
  if (r <= 0) fail("lemma3_split: r must be positive");
  if (!c.is_symmetric()) fail("lemma3_split: c is not symmetric");
  const Carrier& car = pres.carrier();
  StarElement rr = rat(car, r);
  require(nc, rr * rr - c * c, pres, "lemma3_split: input certificate for r² − c²");

  // r ± c = (1/2r)((r ± c)² + (r² − c²)); (r±c)² = (r±c)·1·(r±c)* since c = c*.
  Rational half(1);
  half /= (2 * r);
  SplitResult out;
  out.plus = scale_cert(nc, half);
  out.plus.terms.insert(out.plus.terms.begin(), unit_term(half, rr + c));
  out.minus = scale_cert(nc, half);
  out.minus.terms.insert(out.minus.terms.begin(), unit_term(half, rr - c));

  require(out.plus, rr + c, pres, "lemma3_split: output certificate for r + c");
  require(out.minus, rr - c, pres, "lemma3_split: output certificate for r − c");
  return out;
}

Certificate lemma3_join(const Certificate& cp, const Certificate& cm, const Rational& r,
                        const StarElement& c, const ModulePresentation& pres) {
  if (r <= 0) fail("lemma3_join: r must be positive");
  if (!c.is_symmetric()) fail("lemma3_join: c is not symmetric");
  const Carrier& car = pres.carrier();
  StarElement rr = rat(car, r);
  require(cp, rr + c, pres, "lemma3_join: input certificate for r + c");
  require(cm, rr - c, pres, "lemma3_join: input certificate for r − c");

  // r² − c² = (1/2r)((r−c)(r+c)(r−c) + (r+c)(r−c)(r+c)).
  Rational half(1);
  half /= (2 * r);
  Certificate out = scale_cert(conjugate_cert(cp, rr - c), half);
  append(out, scale_cert(conjugate_cert(cm, rr + c), half));

  require(out, rr * rr - c * c, pres, "lemma3_join: output certificate for r² − c²");
  return out;
}

NormCertificate norm_cert_star(const NormCertificate& na, const ModulePresentation& pres) {
  require(na, pres, "norm_cert_star: input");
  const StarElement& a = na.element;
  const Rational& r = na.bound;
  if (r == 0) return zero_norm_cert(pres.carrier());

  // a*(r² − aa*)a = (r²/2)² − (r²/2 − a*a)².
  Certificate conj = conjugate_cert(na.cert, a.star());
  Rational big = r * r / 2;
  StarElement c = rat(pres.carrier(), big) - a.star() * a;
  SplitResult split = lemma3_split(conj, big, c, pres);

  // r²/2 + (r²/2 − a*a) = r² − a*(a*)*.
  NormCertificate out{a.star(), r, std::move(split.plus)};
  require(out, pres, "norm_cert_star: output");
  return out;
}

NormCertificate norm_cert_product(const NormCertificate& na, const NormCertificate& nb,
                                  const ModulePresentation& pres) {
  require(na, pres, "norm_cert_product: input na");
  require(nb, pres, "norm_cert_product: input nb");
  if (na.element.carrier() != nb.element.carrier()) fail("norm_cert_product: carrier mismatch");

  // r²s² − (ab)(ab)* = s²(r² − aa*) + a(s² − bb*)a*.
  Certificate out = scale_cert(na.cert, nb.bound * nb.bound);
  append(out, conjugate_cert(nb.cert, na.element));

  NormCertificate result{na.element * nb.element, na.bound * nb.bound, std::move(out)};
  require(result, pres, "norm_cert_product: output");
  return result;
}

NormCertificate norm_cert_sum(const NormCertificate& na, const NormCertificate& nb,
                              const ModulePresentation& pres) {
  require(na, pres, "norm_cert_sum: input na");
  require(nb, pres, "norm_cert_sum: input nb");
  if (na.bound == 0) return nb;
  if (nb.bound == 0) return na;
  const StarElement& a = na.element;
  const StarElement& b = nb.element;
  const Rational &r = na.bound, &s = nb.bound;

  // Certs for r²s² − (ab*)(ab*)* and r²s² − (ba*)(ba*)*.
  NormCertificate nab = norm_cert_product(na, norm_cert_star(nb, pres), pres);
  NormCertificate nba = norm_cert_product(nb, norm_cert_star(na, pres), pres);

  // 4r²s² − (ab* + ba*)² = 2(r²s² − ab*ba*) + 2(r²s² − ba*ab*) + (ab* − ba*)(ab* − ba*)*.
  StarElement h = a * b.star() + b * a.star();
  Certificate big = scale_cert(nab.cert, 2);
  append(big, scale_cert(nba.cert, 2));
  StarElement skew = a * b.star() - b * a.star();
  if (!skew.is_zero()) big.terms.push_back(unit_term(1, skew));
  StarElement two_rs = rat(pres.carrier(), 2 * r * s);
  require(big, two_rs * two_rs - h * h, pres, "norm_cert_sum: 4r²s² − (ab* + ba*)² identity");

  SplitResult split = lemma3_split(big, 2 * r * s, h, pres);

  // (r+s)² − (a+b)(a+b)* = (r² − aa*) + (s² − bb*) + (2rs − (ab* + ba*)).
  Certificate total = na.cert;
  append(total, nb.cert);
  append(total, split.minus);

  NormCertificate out{a + b, r + s, std::move(total)};
  require(out, pres, "norm_cert_sum: final identity");
  return out;
}

Certificate norm_cert_pair_drop(const Certificate& nc, const StarElement& a,
                                const StarElement& b, const Rational& r,
                                const ModulePresentation& pres) {
  const Carrier& car = pres.carrier();
  StarElement target_in = rat(car, r) - a * a.star() - b * b.star();
  require(nc, target_in, pres, "norm_cert_pair_drop: input certificate for r − aa* − bb*");

  Certificate out = nc;
  out.terms.push_back(unit_term(1, b));
  require(out, rat(car, r) - a * a.star(), pres, "norm_cert_pair_drop: output");
  return out;
}

NormCertificate norm_cert_scale(const NormCertificate& na, const GaussianRational& t,
                                const ModulePresentation& pres) {
  require(na, pres, "norm_cert_scale: input");
  if (t.is_zero()) fail("norm_cert_scale: scale factor must be nonzero");
  if (!t.is_real() && pres.carrier().kind() != CarrierKind::complexified)
    fail("norm_cert_scale: non-real scalar needs a complexified carrier (central i)");

  Rational n2 = t.norm2();
  StarElement ta = t * na.element;
  Certificate cert = scale_cert(na.cert, n2);
  Rational bound;
  if (auto m = exact_sqrt(n2)) {
    bound = *m * na.bound;
  } else {
    // |t| irrational: pad the bound up to a dyadic rational.
    bound = ceil_sqrt(n2 * na.bound * na.bound);
    Rational pad = bound * bound - n2 * na.bound * na.bound;
    if (pad > 0) cert.terms.push_back(unit_term(pad, StarElement::one(pres.carrier())));
  }
  NormCertificate out{std::move(ta), std::move(bound), std::move(cert)};
  require(out, pres, "norm_cert_scale: output");
  return out;
}

NormCertificate l1_certificate(const StarElement& a, const ModulePresentation& pres) {
  if (a.carrier() != pres.carrier()) fail("carrier mismatch in certificate");
  if (a.is_zero()) fail("l1_certificate needs a nonzero element");
  Rational big = l1_norm(a);  // rejects non-group carriers and irrational moduli

  const FiniteGroup& g = pres.carrier().group();
  std::vector<std::pair<uint32_t, GaussianRational>> support;
  support.reserve(a.terms().size());
  for (const auto& [w, coeff] : a.terms()) support.emplace_back(w.group, coeff);

  Certificate cert;
  for (size_t i = 0; i < support.size(); ++i) {
    for (size_t j = i + 1; j < support.size(); ++j) {
      const auto& [gi, ai] = support[i];
      const auto& [gj, aj] = support[j];
      Rational w = *ai.modulus() * *aj.modulus();
      // 1 − (α_i ᾱ_j / |α_i α_j|)·g_i g_j⁻¹
      GaussianRational z = (ai * aj.conj()) / GaussianRational(w);
      StarElement u = StarElement::group_element(pres.carrier(), g.mul(gi, g.inv(gj)));
      cert.terms.push_back(unit_term(w, StarElement::one(pres.carrier()) - z * u));
    }
  }
  NormCertificate out{a, big, std::move(cert)};
  require(out, pres, "l1_certificate: Example 3 identity");
  return out;
}

Certificate c_star_upper(const NormCertificate& na, const ModulePresentation& pres) {
  require(na, pres, "c_star_upper: input");
  if (na.bound == 0) return Certificate{};
  const StarElement& a = na.element;
  const Rational& r = na.bound;

  // r² + aa* = (r² − aa*) + 2·a·1·a*; join with r² − aa* at level r².
  Certificate plus = na.cert;
  if (!a.is_zero()) plus.terms.push_back({Rational(2), a, 0});
  Certificate out = lemma3_join(plus, na.cert, r * r, a * a.star(), pres);
  StarElement r2 = rat(pres.carrier(), r * r);
  require(out, r2 * r2 - a * a.star() * a * a.star(), pres, "c_star_upper: output for r⁴ − (aa*)²");
  return out;
}

NormCertificate c_star_lower(const NormCertificate& naa, const StarElement& a,
                             const Rational& r_prime, const ModulePresentation& pres) {
  require(naa, pres, "c_star_lower: input");
  if (!(naa.element == a * a.star())) fail("c_star_lower: element is not aa* for the declared a");
  if (r_prime <= 0) fail("c_star_lower: bound must be positive");
  Rational rho = naa.bound;
  if (r_prime * r_prime < rho) fail("c_star_lower: r'² must dominate the aa* bound");

  Certificate cert;
  if (a.is_zero()) {
    cert.terms.push_back(unit_term(r_prime * r_prime, StarElement::one(pres.carrier())));
  } else {
    SplitResult split = lemma3_split(naa.cert, rho, a * a.star(), pres);
    cert = std::move(split.minus);  // verifies against rho − aa*
    Rational pad = r_prime * r_prime - rho;
    if (pad > 0) cert.terms.push_back(unit_term(pad, StarElement::one(pres.carrier())));
  }
  NormCertificate out{a, r_prime, std::move(cert)};
  require(out, pres, "c_star_lower: output");
  return out;
}

BaseBounds letter_base_bounds(const ModulePresentation& pres) {
  if (!pres.archimedean_witness()) fail("presentation has no archimedean witness");
  size_t widx = *pres.archimedean_witness();
  Rational level = pres.witness_level();
  const std::vector<uint32_t>& letters = pres.witness_letters();

  Rational r = exact_sqrt(level).value_or(Rational(0));
  if (r == 0) r = ceil_sqrt(level);
  Rational pad = r * r - level;

  BaseBounds out;
  for (uint32_t i : letters) {
    Certificate cert;
    cert.terms.push_back({Rational(1), StarElement::one(pres.carrier()), widx});
    for (uint32_t j : letters) {
      if (j == i) continue;
      cert.terms.push_back(unit_term(1, StarElement::letter(pres.carrier(), j)));
    }
    if (pad > 0) cert.terms.push_back(unit_term(pad, StarElement::one(pres.carrier())));
    NormCertificate nc{StarElement::letter(pres.carrier(), i), r, std::move(cert)};
    require(nc, pres, "letter_base_bounds: witness-derived bound");
    out.emplace(i, std::move(nc));
  }
  return out;
}

namespace {

// NormCertificate for a single basis word with coefficient 1.  inner_pres is
// the presentation the word's inner part lives on (pres itself for base
// carriers, the recovered inner presentation for wrapped ones; generator
// indices are aligned by construction of the lifts).
NormCertificate word_norm_cert(const BasisWord& w, const ModulePresentation& pres,
                               const ModulePresentation& inner_pres, const BaseBounds& base) {
  const Carrier& car = pres.carrier();
  switch (car.kind()) {
    case CarrierKind::group_ring:
      // g·g* = 1, so 1² − gg* = 0: the empty certificate witnesses bound 1.
      return {StarElement::from_word(car, w, GaussianRational(1)), Rational(1), Certificate{}};
    case CarrierKind::free_star: {
      // Fold the letters left-to-right through the product rule.
      NormCertificate nc{StarElement::one(car), Rational(1), Certificate{}};
      for (uint16_t sym : w.word) {
        uint32_t letter = sym & ~BasisWord::STAR_BIT;
        auto it = base.find(letter);
        if (it == base.end()) fail("missing base bound for letter x" + std::to_string(letter + 1));
        NormCertificate step = it->second;
        if (sym & BasisWord::STAR_BIT) step = norm_cert_star(step, pres);
        nc = norm_cert_product(nc, step, pres);
      }
      return nc;
    }
    case CarrierKind::matrix_ring: {
      // Inner certificate placed at diagonal position (row, row), plus the
      // full bound on the other diagonal slots.
      uint32_t n = car.matrix_size();
      BasisWord iw = w;
      iw.row = iw.col = 0;
      NormCertificate inner = word_norm_cert(iw, inner_pres, inner_pres, base);

      Certificate cert;
      for (const CertTerm& t : inner.cert.terms)
        cert.terms.push_back({t.weight, matrix_unit(n, w.row, w.row, t.conjugator), t.generator});
      StarElement one_inner = StarElement::one(inner_pres.carrier());
      Rational b2 = inner.bound * inner.bound;
      for (uint32_t j = 0; j < n; ++j) {
        if (j == w.row) continue;
        cert.terms.push_back(unit_term(b2, matrix_unit(n, j, j, one_inner)));
      }
      StarElement elem = StarElement::from_word(car, w, GaussianRational(1));
      return {std::move(elem), inner.bound, std::move(cert)};
    }
    case CarrierKind::complexified: {
      // Both components satisfy ww* = (uu*, 0), so the inner certificate
      // lifts unchanged.
      BasisWord iw = w;
      iw.comp = 0;
      NormCertificate nc = word_norm_cert(iw, inner_pres, inner_pres, base);
      Certificate cert;
      for (const CertTerm& t : nc.cert.terms)
        cert.terms.push_back({t.weight, complexify(t.conjugator), t.generator});
      StarElement elem = StarElement::from_word(car, w, GaussianRational(1));
      return {std::move(elem), nc.bound, std::move(cert)};
    }
  }
  fail("unreachable carrier kind");
}

// |z|-scaling of a word certificate; pads the bound when |z| is irrational.
NormCertificate scale_word_cert(const NormCertificate& nc, const GaussianRational& z,
                                const ModulePresentation& pres) {
  Rational n2 = z.norm2();
  Certificate cert = scale_cert(nc.cert, n2);
  Rational bound;
  if (auto m = exact_sqrt(n2)) {
    bound = *m * nc.bound;
  } else {
    bound = ceil_sqrt(n2 * nc.bound * nc.bound);
    Rational pad = bound * bound - n2 * nc.bound * nc.bound;
    if (pad > 0) cert.terms.push_back(unit_term(pad, StarElement::one(pres.carrier())));
  }
  return {z * nc.element, std::move(bound), std::move(cert)};
}

}  // namespace

NormCertificate bound_propagate(const StarElement& a, const ModulePresentation& pres,
                                const BaseBounds& base) {
  if (a.carrier() != pres.carrier()) fail("carrier mismatch in certificate");
  if (a.is_zero()) return zero_norm_cert(pres.carrier());

  // Wrapped carriers work through the recovered inner presentation.
  std::optional<ModulePresentation> inner_storage;
  const ModulePresentation* word_pres = &pres;
  if (pres.carrier().is_wrapped()) {
    inner_storage = inner_presentation(pres);
    word_pres = &*inner_storage;
  }

  const BaseBounds* effective = &base;
  BaseBounds derived;
  if (base.empty() && pres.carrier().base().kind() == CarrierKind::free_star &&
      word_pres->archimedean_witness()) {
    derived = letter_base_bounds(*word_pres);
    effective = &derived;
  }

  NormCertificate total;
  bool first = true;
  for (const auto& [w, coeff] : a.terms()) {
    NormCertificate mono =
        scale_word_cert(word_norm_cert(w, pres, *word_pres, *effective), coeff, pres);
    require(mono, pres, "bound_propagate: monomial certificate");
    if (first) {
      total = std::move(mono);
      first = false;
    } else {
      total = norm_cert_sum(total, mono, pres);
    }
  }
  require(total, pres, "bound_propagate: output");
  return total;
}

Certificate lift_matrix_cert(const Certificate& cert, const std::vector<StarElement>& column,
                             const ModulePresentation& pres) {
  if (column.empty()) fail("lift_matrix_cert needs a nonempty column");
  uint32_t n = static_cast<uint32_t>(column.size());
  for (const StarElement& e : column)
    if (e.carrier() != pres.carrier()) fail("lift_matrix_cert: column carrier mismatch");

  ModulePresentation mpres = matrix_presentation(pres, n);
  Certificate out;
  out.terms.reserve(cert.terms.size());
  for (const CertTerm& t : cert.terms) {
    StarElement conj(mpres.carrier());
    for (uint32_t i = 0; i < n; ++i) conj = conj + matrix_unit(n, i, 0, column[i] * t.conjugator);
    out.terms.push_back({t.weight, std::move(conj), t.generator});
  }

  // Cross-check against the entrywise assembly of Σ q·(col·a)·c·(col·a)*.
  std::vector<std::vector<StarElement>> grid(
      n, std::vector<StarElement>(n, StarElement::zero(pres.carrier())));
  for (const CertTerm& t : cert.terms) {
    StarElement core = t.conjugator * pres.generator_value(t.generator) * t.conjugator.star();
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        grid[i][j] = grid[i][j] + GaussianRational(t.weight) * (column[i] * core * column[j].star());
  }
  require(out, matrix_lift(grid), mpres, "lift_matrix_cert: Example 7 identity");
  return out;
}

Certificate lift_complex_cert(const Certificate& cert, const ModulePresentation& pres) {
  ModulePresentation cpres = complexify_presentation(pres);
  Certificate out;
  out.terms.reserve(cert.terms.size());
  for (const CertTerm& t : cert.terms)
    out.terms.push_back({t.weight, complexify(t.conjugator), t.generator});
  require(out, complexify(cert_eval(cert, pres)), cpres, "lift_complex_cert: Example 6 identity");
  return out;
}

}  // namespace qmod
