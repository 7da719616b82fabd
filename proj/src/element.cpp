#include "qmod/element.hpp"

#include <algorithm>

#include "qmod/error.hpp"

namespace qmod {

namespace {

void check_letter(const Carrier& base, uint16_t sym) {
  uint16_t idx = sym & ~BasisWord::STAR_BIT;
  if (idx >= base.letters()) fail("letter index out of range");
}

// Validates a word against its carrier (used by from_word and deserializers).
void check_word(const Carrier& c, const BasisWord& w) {
  const Carrier base = c.base();
  switch (c.kind()) {
    case CarrierKind::free_star:
      if (w.comp || w.row || w.col || w.group) fail("basis word does not fit a free *-ring");
      for (uint16_t s : w.word) check_letter(c, s);
      return;
    case CarrierKind::group_ring:
      if (w.comp || w.row || w.col || !w.word.empty()) fail("basis word does not fit a group ring");
      if (w.group >= c.group().order()) fail("group element index out of range");
      return;
    case CarrierKind::matrix_ring:
      if (w.comp) fail("basis word does not fit a matrix ring");
      if (w.row >= c.matrix_size() || w.col >= c.matrix_size()) fail("matrix index out of range");
      break;
    case CarrierKind::complexified:
      if (w.row || w.col) fail("basis word does not fit a complexified ring");
      if (w.comp > 1) fail("complexified component out of range");
      break;
  }
  if (base.kind() == CarrierKind::free_star) {
    if (w.group) fail("basis word mixes group and free data");
    for (uint16_t s : w.word) check_letter(base, s);
  } else {
    if (!w.word.empty()) fail("basis word mixes group and free data");
    if (w.group >= base.group().order()) fail("group element index out of range");
  }
}

// Star of the inner (free/group) part of a word.
void inner_star(const Carrier& base, BasisWord& w) {
  if (base.kind() == CarrierKind::free_star) {
    std::reverse(w.word.begin(), w.word.end());
    for (uint16_t& s : w.word) s ^= BasisWord::STAR_BIT;
  } else {
    w.group = base.group().inv(w.group);
  }
}

// Inner product; always defined (concatenation or table lookup).
void inner_mul(const Carrier& base, const BasisWord& a, const BasisWord& b, BasisWord& out) {
  if (base.kind() == CarrierKind::free_star) {
    out.word = a.word;
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  } else {
    out.group = base.group().mul(a.group, b.group);
  }
}

}  // namespace

std::pair<BasisWord, int> word_star(const Carrier& c, const BasisWord& w) {
  BasisWord out = w;
  int sign = 1;
  switch (c.kind()) {
    case CarrierKind::free_star:
    case CarrierKind::group_ring:
      inner_star(c, out);
      break;
    case CarrierKind::matrix_ring:
      std::swap(out.row, out.col);
      inner_star(c.base(), out);
      break;
    case CarrierKind::complexified:
      // (x, 0)* = (x*, 0); (0, y)* = (0, -y*).
      inner_star(c.base(), out);
      if (w.comp == 1) sign = -1;
      break;
  }
  return {std::move(out), sign};
}

std::optional<std::pair<BasisWord, int>> word_mul(const Carrier& c, const BasisWord& a,
                                                  const BasisWord& b) {
  BasisWord out;
  int sign = 1;
  switch (c.kind()) {
    case CarrierKind::free_star:
    case CarrierKind::group_ring:
      inner_mul(c, a, b, out);
      break;
    case CarrierKind::matrix_ring:
      if (a.col != b.row) return std::nullopt;
      out.row = a.row;
      out.col = b.col;
      inner_mul(c.base(), a, b, out);
      break;
    case CarrierKind::complexified:
      // (0,u)(0,v) = (-uv, 0); mixed components multiply into comp 1.
      out.comp = a.comp ^ b.comp;
      if (a.comp == 1 && b.comp == 1) sign = -1;
      inner_mul(c.base(), a, b, out);
      break;
  }
  return std::make_pair(std::move(out), sign);
}

void StarElement::insert_term(BasisWord w, GaussianRational coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(coeff));
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

StarElement StarElement::one(const Carrier& c) {
  StarElement out(c);
  switch (c.kind()) {
    case CarrierKind::free_star:
      out.terms_[BasisWord{}] = GaussianRational(1);
      break;
    case CarrierKind::group_ring: {
      BasisWord w;
      w.group = c.group().identity();
      out.terms_[w] = GaussianRational(1);
      break;
    }
    case CarrierKind::matrix_ring: {
      const Carrier base = c.base();
      for (uint32_t r = 0; r < c.matrix_size(); ++r) {
        BasisWord w;
        w.row = w.col = r;
        if (base.kind() == CarrierKind::group_ring) w.group = base.group().identity();
        out.terms_[w] = GaussianRational(1);
      }
      break;
    }
    case CarrierKind::complexified: {
      BasisWord w;
      const Carrier base = c.base();
      if (base.kind() == CarrierKind::group_ring) w.group = base.group().identity();
      out.terms_[w] = GaussianRational(1);
      break;
    }
  }
  return out;
}

StarElement StarElement::scalar(const Carrier& c, const GaussianRational& z) {
  StarElement out = one(c);
  StarElement res(c);
  for (auto& [w, coeff] : out.terms_) res.insert_term(w, z * coeff);
  return res;
}

StarElement StarElement::letter(const Carrier& c, uint32_t i, bool starred) {
  if (c.kind() != CarrierKind::free_star) fail("letters live on free *-ring carriers");
  if (i >= c.letters()) fail("letter index out of range");
  BasisWord w;
  w.word.push_back(static_cast<uint16_t>(i | (starred ? BasisWord::STAR_BIT : 0)));
  StarElement out(c);
  out.terms_[std::move(w)] = GaussianRational(1);
  return out;
}

StarElement StarElement::group_element(const Carrier& c, uint32_t idx) {
  if (c.kind() != CarrierKind::group_ring) fail("group elements live on group ring carriers");
  if (idx >= c.group().order()) fail("group element index out of range");
  BasisWord w;
  w.group = idx;
  StarElement out(c);
  out.terms_[w] = GaussianRational(1);
  return out;
}

StarElement StarElement::from_word(const Carrier& c, BasisWord w, GaussianRational coeff) {
  check_word(c, w);
  StarElement out(c);
  out.insert_term(std::move(w), std::move(coeff));
  return out;
}

GaussianRational StarElement::coefficient(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

StarElement StarElement::star() const {
  StarElement out(carrier_);
  for (const auto& [w, coeff] : terms_) {
    auto [sw, sign] = word_star(carrier_, w);
    GaussianRational z = coeff.conj();
    if (sign < 0) z = -z;
    out.insert_term(std::move(sw), std::move(z));
  }
  return out;
}

std::optional<GaussianRational> StarElement::as_scalar() const {
  StarElement unit = one(carrier_);
  if (terms_.empty()) return GaussianRational(0);
  // Candidate scalar from the first unit word.
  const auto& first_unit = unit.terms_.begin()->first;
  GaussianRational z = coefficient(first_unit);
  if (z.is_zero()) return std::nullopt;
  if (*this == z * unit) return z;
  return std::nullopt;
}

StarElement operator+(const StarElement& a, const StarElement& b) {
  if (a.carrier_ != b.carrier_) fail("carrier mismatch in addition");
  StarElement out = a;
  for (const auto& [w, coeff] : b.terms_) out.insert_term(w, coeff);
  return out;
}

StarElement operator-(const StarElement& a, const StarElement& b) {
  if (a.carrier_ != b.carrier_) fail("carrier mismatch in subtraction");
  StarElement out = a;
  for (const auto& [w, coeff] : b.terms_) out.insert_term(w, -coeff);
  return out;
}

StarElement operator-(const StarElement& a) {
  StarElement out(a.carrier_);
  for (const auto& [w, coeff] : a.terms_) out.terms_[w] = -coeff;
  return out;
}

StarElement operator*(const StarElement& a, const StarElement& b) {
  if (a.carrier_ != b.carrier_) fail("carrier mismatch in multiplication");
  StarElement out(a.carrier_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      auto prod = word_mul(a.carrier_, wa, wb);
      if (!prod) continue;
      GaussianRational z = ca * cb;
      if (prod->second < 0) z = -z;
      out.insert_term(std::move(prod->first), std::move(z));
    }
  }
  return out;
}

StarElement operator*(const GaussianRational& z, const StarElement& a) {
  StarElement out(a.carrier_);
  if (z.is_zero()) return out;
  for (const auto& [w, coeff] : a.terms_) out.terms_[w] = z * coeff;
  return out;
}

StarElement complexify(const StarElement& a) {
  if (a.carrier().is_wrapped()) fail("complexification nests at most one level");
  StarElement out(Carrier::complexified(a.carrier()));
  for (const auto& [w, coeff] : a.terms()) {
    BasisWord cw = w;
    cw.comp = 0;
    out = out + StarElement::from_word(out.carrier(), std::move(cw), coeff);
  }
  return out;
}

StarElement complex_pair(const StarElement& x, const StarElement& y) {
  if (x.carrier() != y.carrier()) fail("carrier mismatch in complex pair");
  if (x.carrier().is_wrapped()) fail("complexification nests at most one level");
  Carrier cc = Carrier::complexified(x.carrier());
  StarElement out(cc);
  for (const auto& [w, coeff] : x.terms()) {
    BasisWord cw = w;
    cw.comp = 0;
    out = out + StarElement::from_word(cc, std::move(cw), coeff);
  }
  for (const auto& [w, coeff] : y.terms()) {
    BasisWord cw = w;
    cw.comp = 1;
    out = out + StarElement::from_word(cc, std::move(cw), coeff);
  }
  return out;
}

std::pair<StarElement, StarElement> complex_parts(const StarElement& a) {
  if (a.carrier().kind() != CarrierKind::complexified)
    fail("complex_parts needs a complexified carrier");
  Carrier base = a.carrier().base();
  StarElement x(base), y(base);
  for (const auto& [w, coeff] : a.terms()) {
    BasisWord bw = w;
    bw.comp = 0;
    auto part = StarElement::from_word(base, std::move(bw), coeff);
    if (w.comp == 0)
      x = x + part;
    else
      y = y + part;
  }
  return {std::move(x), std::move(y)};
}

StarElement matrix_lift(const std::vector<std::vector<StarElement>>& entries) {
  if (entries.empty()) fail("matrix lift needs a nonempty grid");
  size_t n = entries.size();
  const Carrier inner = entries[0][0].carrier();
  if (inner.is_wrapped()) fail("matrix ring nests at most one level");
  Carrier mc = Carrier::matrix_ring(static_cast<uint32_t>(n), inner);
  StarElement out(mc);
  for (size_t r = 0; r < n; ++r) {
    if (entries[r].size() != n) fail("ragged matrix entry grid");
    for (size_t c = 0; c < n; ++c) {
      if (entries[r][c].carrier() != inner) fail("mixed inner carriers in matrix lift");
      for (const auto& [w, coeff] : entries[r][c].terms()) {
        BasisWord mw = w;
        mw.row = static_cast<uint32_t>(r);
        mw.col = static_cast<uint32_t>(c);
        out = out + StarElement::from_word(mc, std::move(mw), coeff);
      }
    }
  }
  return out;
}

StarElement matrix_unit(uint32_t n, uint32_t r, uint32_t c, const StarElement& a) {
  if (r >= n || c >= n) fail("matrix index out of range");
  if (a.carrier().is_wrapped()) fail("matrix ring nests at most one level");
  Carrier mc = Carrier::matrix_ring(n, a.carrier());
  StarElement out(mc);
  for (const auto& [w, coeff] : a.terms()) {
    BasisWord mw = w;
    mw.row = r;
    mw.col = c;
    out = out + StarElement::from_word(mc, std::move(mw), coeff);
  }
  return out;
}

StarElement matrix_entry(const StarElement& a, uint32_t r, uint32_t c) {
  if (a.carrier().kind() != CarrierKind::matrix_ring)
    fail("matrix_entry needs a matrix ring carrier");
  Carrier base = a.carrier().base();
  StarElement out(base);
  for (const auto& [w, coeff] : a.terms()) {
    if (w.row != r || w.col != c) continue;
    BasisWord bw = w;
    bw.row = bw.col = 0;
    out = out + StarElement::from_word(base, std::move(bw), coeff);
  }
  return out;
}

Rational l1_norm(const StarElement& a) {
  if (a.carrier().kind() != CarrierKind::group_ring)
    fail("the l1 value is defined on group ring carriers");
  Rational total = 0;
  for (const auto& [w, coeff] : a.terms()) {
    auto m = coeff.modulus();
    if (!m) fail("irrational modulus");
    total += *m;
  }
  return total;
}

}  // namespace qmod
