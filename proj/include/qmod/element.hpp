#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qmod/carrier.hpp"
#include "qmod/gaussian.hpp"

namespace qmod {

// Star of a basis word: the starred word and a sign (complexified words pick
// up -1 on the imaginary component).  Coefficient conjugation is applied at
// the element level.
std::pair<BasisWord, int> word_star(const Carrier& c, const BasisWord& w);

// Product of two basis words: the product word and a sign, or nullopt when
// the product is zero (matrix units with mismatched inner indices).
std::optional<std::pair<BasisWord, int>> word_mul(const Carrier& c, const BasisWord& a,
                                                  const BasisWord& b);

// Element of a *-ring in canonical normal form: a finite map from basis
// words to nonzero Gaussian-rational coefficients.  Immutable value type;
// all arithmetic is exact.
class StarElement {
 public:
  StarElement() = default;
  explicit StarElement(Carrier c) : carrier_(std::move(c)) {}

  static StarElement zero(const Carrier& c) { return StarElement(c); }
  static StarElement one(const Carrier& c);
  static StarElement scalar(const Carrier& c, const GaussianRational& z);
  // FreeStar letter x_(i+1), optionally starred.
  static StarElement letter(const Carrier& c, uint32_t i, bool starred = false);
  // GroupRing basis element by table index.
  static StarElement group_element(const Carrier& c, uint32_t idx);
  static StarElement from_word(const Carrier& c, BasisWord w, GaussianRational coeff);

  const Carrier& carrier() const { return carrier_; }
  const std::map<BasisWord, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const BasisWord& w) const;

  StarElement star() const;
  bool is_symmetric() const { return *this == star(); }

  // The coefficient of the unit word(s) if the element is a scalar multiple
  // of 1, otherwise nullopt.
  std::optional<GaussianRational> as_scalar() const;

  friend StarElement operator+(const StarElement& a, const StarElement& b);
  friend StarElement operator-(const StarElement& a, const StarElement& b);
  friend StarElement operator-(const StarElement& a);
  friend StarElement operator*(const StarElement& a, const StarElement& b);
  friend StarElement operator*(const GaussianRational& z, const StarElement& a);

  friend bool operator==(const StarElement& a, const StarElement& b) {
    return a.carrier_ == b.carrier_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const StarElement& a, const StarElement& b) { return !(a == b); }

 private:
  void insert_term(BasisWord w, GaussianRational coeff);

  Carrier carrier_;
  std::map<BasisWord, GaussianRational> terms_;
};

// a over C  ->  (a, 0) over Complexified(C).
StarElement complexify(const StarElement& a);
// (x, y) over Complexified(common carrier of x and y).
StarElement complex_pair(const StarElement& x, const StarElement& y);
// The (·, 0) and (0, ·) parts of a complexified element, as inner elements.
std::pair<StarElement, StarElement> complex_parts(const StarElement& a);

// n×n grid of elements over a common inner carrier -> element of Mat_n.
StarElement matrix_lift(const std::vector<std::vector<StarElement>>& entries);
// a at position (r, c) of Mat_n(carrier of a), zeros elsewhere.
StarElement matrix_unit(uint32_t n, uint32_t r, uint32_t c, const StarElement& a);
// Entry (r, c) of a MatrixRing element, as an inner element.
StarElement matrix_entry(const StarElement& a, uint32_t r, uint32_t c);

// Σ|α_i| over a GroupRing element; errors on other carriers and when some
// |α_i| is irrational.
Rational l1_norm(const StarElement& a);

}  // namespace qmod
