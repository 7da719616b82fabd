#include "qmod/presentation.hpp"

#include <set>

#include "qmod/error.hpp"

namespace qmod {

namespace {

// Matches c - Σ_j x_j x_j* with c a positive rational and distinct letters.
// Returns the level c and the letters, or nullopt.
std::optional<std::pair<Rational, std::vector<uint32_t>>> match_witness(const StarElement& s) {
  if (s.carrier().kind() != CarrierKind::free_star) return std::nullopt;
  Rational level = 0;
  std::set<uint32_t> letters;
  for (const auto& [w, coeff] : s.terms()) {
    if (w.word.empty()) {
      if (!coeff.is_real() || coeff.re <= 0) return std::nullopt;
      level = coeff.re;
      continue;
    }
    if (w.word.size() != 2) return std::nullopt;
    uint16_t a = w.word[0], b = w.word[1];
    if (a & BasisWord::STAR_BIT) return std::nullopt;
    if (b != (a | BasisWord::STAR_BIT)) return std::nullopt;
    if (!(coeff == GaussianRational(-1))) return std::nullopt;
    if (!letters.insert(a).second) return std::nullopt;
  }
  if (level == 0 || letters.empty()) return std::nullopt;
  return std::make_pair(level, std::vector<uint32_t>(letters.begin(), letters.end()));
}

}  // namespace

ModulePresentation::ModulePresentation(Carrier carrier, std::vector<StarElement> generators)
    : carrier_(std::move(carrier)), generators_(std::move(generators)) {
  if (!carrier_.valid()) fail("module presentation needs a carrier");
  for (size_t k = 0; k < generators_.size(); ++k) {
    const StarElement& s = generators_[k];
    if (s.carrier() != carrier_) fail("generator carrier mismatch");
    if (!s.is_symmetric())
      fail("generator " + std::to_string(k + 1) + " is not symmetric");
  }
  for (size_t k = 0; k < generators_.size(); ++k) {
    if (auto m = match_witness(generators_[k])) {
      witness_ = k + 1;
      witness_level_ = m->first;
      witness_letters_ = m->second;
      break;
    }
  }
}

StarElement ModulePresentation::generator_value(size_t index) const {
  if (index == 0) return StarElement::one(carrier_);
  if (index > generators_.size()) fail("generator index out of range");
  return generators_[index - 1];
}

Rational ModulePresentation::witness_level() const {
  if (!witness_) fail("presentation has no archimedean witness");
  return witness_level_;
}

ModulePresentation complexify_presentation(const ModulePresentation& p) {
  std::vector<StarElement> gens;
  gens.reserve(p.generators().size());
  for (const auto& s : p.generators()) gens.push_back(complexify(s));
  return ModulePresentation(Carrier::complexified(p.carrier()), std::move(gens));
}

ModulePresentation matrix_presentation(const ModulePresentation& p, uint32_t n) {
  Carrier mc = Carrier::matrix_ring(n, p.carrier());
  std::vector<StarElement> gens;
  gens.reserve(p.generators().size());
  for (const auto& s : p.generators()) {
    StarElement lifted(mc);
    for (uint32_t r = 0; r < n; ++r) lifted = lifted + matrix_unit(n, r, r, s);
    gens.push_back(std::move(lifted));
  }
  return ModulePresentation(mc, std::move(gens));
}

ModulePresentation inner_presentation(const ModulePresentation& p) {
  const Carrier& car = p.carrier();
  if (!car.is_wrapped()) fail("inner_presentation needs a wrapped carrier");
  Carrier base = car.base();
  std::vector<StarElement> gens;
  gens.reserve(p.generators().size());
  for (const auto& g : p.generators()) {
    if (car.kind() == CarrierKind::matrix_ring) {
      uint32_t n = car.matrix_size();
      StarElement s = matrix_entry(g, 0, 0);
      StarElement lifted(car);
      for (uint32_t r = 0; r < n; ++r) lifted = lifted + matrix_unit(n, r, r, s);
      if (lifted != g) fail("generator is not a diagonal lift of an inner generator");
      gens.push_back(std::move(s));
    } else {
      auto [x, y] = complex_parts(g);
      if (!y.is_zero()) fail("generator is not an injected inner generator");
      gens.push_back(std::move(x));
    }
  }
  return ModulePresentation(base, std::move(gens));
}

}  // namespace qmod
