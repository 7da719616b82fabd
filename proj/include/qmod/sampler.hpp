#pragma once

#include <cstdint>
#include <random>

#include "qmod/element.hpp"

namespace qmod {

// Deterministic random inputs for property tests and audits.  Every
// randomized entry point in the library takes an explicit seed and draws
// through one of these.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  uint64_t uniform(uint64_t n);  // [0, n)
  bool coin() { return uniform(2) == 1; }

  // Small nonzero rational, numerator in [-max_num, max_num].
  Rational rational(long max_num = 4, long max_den = 3);
  GaussianRational gaussian();
  // Gaussian rational with rational modulus (real, imaginary, or a
  // Pythagorean direction scaled by a rational).
  GaussianRational gaussian_rational_modulus();

  BasisWord word(const Carrier& c, int max_len);
  StarElement element(const Carrier& c, int max_terms, int max_len);
  StarElement symmetric_element(const Carrier& c, int max_terms, int max_len);
  // Element whose coefficients all have rational modulus.
  StarElement element_rational_modulus(const Carrier& c, int max_terms, int max_len);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qmod
