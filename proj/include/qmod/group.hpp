#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmod {

// Finite group given by its full multiplication table.  Construction
// validates closure, associativity, identity and inverses, so a value of
// this type is always a genuine group.
class FiniteGroup {
 public:
  // table[a * n + b] = index of the product a*b; names may be empty (then
  // synthesized as g0, g1, ...).  The identity is located by scanning the
  // table; construction fails if there is none.
  explicit FiniteGroup(std::vector<uint32_t> table, std::vector<std::string> names = {});

  static FiniteGroup cyclic(uint32_t n);
  static FiniteGroup dihedral(uint32_t n);   // order 2n, n >= 1
  static FiniteGroup symmetric(uint32_t n);  // order n!, n <= 4
  static FiniteGroup quaternion8();
  static FiniteGroup trivial() { return cyclic(1); }

  uint32_t order() const { return n_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return table_[a * n_ + b]; }
  uint32_t inv(uint32_t a) const { return inverse_[a]; }
  uint32_t identity() const { return identity_; }
  const std::string& name(uint32_t a) const { return names_[a]; }
  bool is_abelian() const { return abelian_; }
  const std::vector<uint32_t>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  uint32_t n_ = 0;
  uint32_t identity_ = 0;
  std::vector<uint32_t> table_;
  std::vector<uint32_t> inverse_;
  std::vector<std::string> names_;
  bool abelian_ = false;
};

}  // namespace qmod
