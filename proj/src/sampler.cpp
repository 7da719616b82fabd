#include "qmod/sampler.hpp"

namespace qmod {

uint64_t Sampler::uniform(uint64_t n) {
  std::uniform_int_distribution<uint64_t> d(0, n - 1);
  return d(rng_);
}

Rational Sampler::rational(long max_num, long max_den) {
  long num = static_cast<long>(uniform(2 * max_num)) - max_num;
  if (num >= 0) num += 1;  // skip zero
  long den = static_cast<long>(uniform(max_den)) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational Sampler::gaussian() {
  switch (uniform(4)) {
    case 0:
      return {rational(), Rational(0)};
    case 1:
      return {Rational(0), rational()};
    default:
      return {rational(), rational()};
  }
}

GaussianRational Sampler::gaussian_rational_modulus() {
  Rational a = rational();
  switch (uniform(4)) {
    case 0:
      return {a, Rational(0)};
    case 1:
      return {Rational(0), a};
    case 2: {
      // |(3 ± 4i)/5| = 1
      Rational three = Rational(3, 5) * a, four = Rational(4, 5) * a;
      return coin() ? GaussianRational{three, four} : GaussianRational{three, -four};
    }
    default: {
      Rational four = Rational(4, 5) * a, three = Rational(3, 5) * a;
      return coin() ? GaussianRational{four, three} : GaussianRational{four, -three};
    }
  }
}

BasisWord Sampler::word(const Carrier& c, int max_len) {
  BasisWord w;
  const Carrier base = c.base();
  if (c.kind() == CarrierKind::matrix_ring) {
    w.row = static_cast<uint32_t>(uniform(c.matrix_size()));
    w.col = static_cast<uint32_t>(uniform(c.matrix_size()));
  }
  if (c.kind() == CarrierKind::complexified) w.comp = static_cast<uint8_t>(uniform(2));
  if (base.kind() == CarrierKind::group_ring) {
    w.group = static_cast<uint32_t>(uniform(base.group().order()));
  } else {
    int len = static_cast<int>(uniform(static_cast<uint64_t>(max_len) + 1));
    for (int i = 0; i < len; ++i) {
      auto sym = static_cast<uint16_t>(uniform(base.letters()));
      if (coin()) sym |= BasisWord::STAR_BIT;
      w.word.push_back(sym);
    }
  }
  return w;
}

StarElement Sampler::element(const Carrier& c, int max_terms, int max_len) {
  StarElement out(c);
  int terms = 1 + static_cast<int>(uniform(static_cast<uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t)
    out = out + StarElement::from_word(c, word(c, max_len), gaussian());
  return out;
}

StarElement Sampler::symmetric_element(const Carrier& c, int max_terms, int max_len) {
  StarElement b = element(c, max_terms, max_len);
  StarElement out = b + b.star();
  if (coin()) out = out + StarElement::scalar(c, GaussianRational(rational()));
  return out;
}

StarElement Sampler::element_rational_modulus(const Carrier& c, int max_terms, int max_len) {
  StarElement out(c);
  int terms = 1 + static_cast<int>(uniform(static_cast<uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    // Avoid collisions: merged coefficients can lose the rational modulus.
    BasisWord w = word(c, max_len);
    if (!out.coefficient(w).is_zero()) continue;
    out = out + StarElement::from_word(c, std::move(w), gaussian_rational_modulus());
  }
  return out;
}

}  // namespace qmod
