#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmod/group.hpp"

namespace qmod {

enum class CarrierKind { free_star, group_ring, matrix_ring, complexified };

// Description of a *-ring: a free *-ring on k letters, a finite group ring,
// a matrix ring over one of those, or a complexification A° = A + iA of one
// of those.  Carrier is a cheap immutable value (shared payload); equality
// is structural.
class Carrier {
 public:
  Carrier() = default;

  static Carrier free_star(uint32_t letters);
  static Carrier group_ring(FiniteGroup g);
  // Wrapping is one level deep: inner must be FreeStar or GroupRing.
  static Carrier matrix_ring(uint32_t n, Carrier inner);
  static Carrier complexified(Carrier inner);

  bool valid() const { return d_ != nullptr; }
  CarrierKind kind() const { return d_->kind; }
  uint32_t letters() const;          // free_star only
  const FiniteGroup& group() const;  // group_ring only
  uint32_t matrix_size() const;      // matrix_ring only
  Carrier inner() const;             // matrix_ring / complexified only

  bool is_wrapped() const {
    return kind() == CarrierKind::matrix_ring || kind() == CarrierKind::complexified;
  }
  // The free_star / group_ring carrier at the bottom.
  Carrier base() const { return is_wrapped() ? inner() : *this; }

  // Number of basis words, when finite (no free_star anywhere).
  std::optional<uint64_t> basis_size() const;

  friend bool operator==(const Carrier& a, const Carrier& b);
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }

 private:
  struct Data {
    CarrierKind kind;
    uint32_t letters = 0;               // free_star
    std::optional<FiniteGroup> group;   // group_ring
    uint32_t size = 0;                  // matrix_ring
    std::shared_ptr<const Data> inner;  // matrix_ring / complexified
  };
  explicit Carrier(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static bool data_equal(const Data* a, const Data* b);
  std::shared_ptr<const Data> d_;
};

// A basis word of a carrier, the unit of the normal form:
//   free_star:    word = sequence of symbols, sym = letter | STAR_BIT for the
//                 starred letter; empty word is the ring unit
//   group_ring:   the single field group = element index
//   matrix_ring:  row/col of the matrix unit E_rc times an inner word
//   complexified: comp = 0 for the (a, 0) component, 1 for (0, b)
// Ordering: (comp, row, col, group, then length-lexicographic on word) so
// normal forms are deterministic.
struct BasisWord {
  static constexpr uint16_t STAR_BIT = 0x8000;

  uint8_t comp = 0;
  uint32_t row = 0;
  uint32_t col = 0;
  uint32_t group = 0;
  std::vector<uint16_t> word;

  friend bool operator==(const BasisWord& a, const BasisWord& b) {
    return a.comp == b.comp && a.row == b.row && a.col == b.col && a.group == b.group &&
           a.word == b.word;
  }
  friend bool operator<(const BasisWord& a, const BasisWord& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.row != b.row) return a.row < b.row;
    if (a.col != b.col) return a.col < b.col;
    if (a.group != b.group) return a.group < b.group;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

}  // namespace qmod
