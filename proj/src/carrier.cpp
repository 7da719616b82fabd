#include "qmod/carrier.hpp"

#include "qmod/error.hpp"

namespace qmod {

Carrier Carrier::free_star(uint32_t letters) {
  if (letters == 0) fail("free *-ring needs at least one letter");
  if (letters >= BasisWord::STAR_BIT) fail("letter count too large");
  auto d = std::make_shared<Data>();
  d->kind = CarrierKind::free_star;
  d->letters = letters;
  return Carrier(std::move(d));
}

Carrier Carrier::group_ring(FiniteGroup g) {
  auto d = std::make_shared<Data>();
  d->kind = CarrierKind::group_ring;
  d->group = std::move(g);
  return Carrier(std::move(d));
}

Carrier Carrier::matrix_ring(uint32_t n, Carrier inner) {
  if (n == 0) fail("matrix size must be positive");
  if (!inner.valid()) fail("matrix ring needs an inner carrier");
  if (inner.is_wrapped()) fail("MatrixRing/Complexified nest at most one level");
  auto d = std::make_shared<Data>();
  d->kind = CarrierKind::matrix_ring;
  d->size = n;
  d->inner = inner.d_;
  return Carrier(std::move(d));
}

Carrier Carrier::complexified(Carrier inner) {
  if (!inner.valid()) fail("complexification needs an inner carrier");
  if (inner.is_wrapped()) fail("MatrixRing/Complexified nest at most one level");
  auto d = std::make_shared<Data>();
  d->kind = CarrierKind::complexified;
  d->inner = inner.d_;
  return Carrier(std::move(d));
}

uint32_t Carrier::letters() const {
  if (kind() != CarrierKind::free_star) fail("carrier has no letters");
  return d_->letters;
}

const FiniteGroup& Carrier::group() const {
  if (kind() != CarrierKind::group_ring) fail("carrier is not a group ring");
  return *d_->group;
}

uint32_t Carrier::matrix_size() const {
  if (kind() != CarrierKind::matrix_ring) fail("carrier is not a matrix ring");
  return d_->size;
}

Carrier Carrier::inner() const {
  if (!is_wrapped()) fail("carrier has no inner carrier");
  return Carrier(d_->inner);
}

std::optional<uint64_t> Carrier::basis_size() const {
  switch (kind()) {
    case CarrierKind::free_star:
      return std::nullopt;
    case CarrierKind::group_ring:
      return d_->group->order();
    case CarrierKind::matrix_ring: {
      auto inner_sz = inner().basis_size();
      if (!inner_sz) return std::nullopt;
      return static_cast<uint64_t>(d_->size) * d_->size * *inner_sz;
    }
    case CarrierKind::complexified: {
      auto inner_sz = inner().basis_size();
      if (!inner_sz) return std::nullopt;
      return 2 * *inner_sz;
    }
  }
  fail("unreachable carrier kind");
}

bool operator==(const Carrier& a, const Carrier& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return Carrier::data_equal(a.d_.get(), b.d_.get());
}

bool Carrier::data_equal(const Data* a, const Data* b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case CarrierKind::free_star:
      return a->letters == b->letters;
    case CarrierKind::group_ring:
      return *a->group == *b->group;
    case CarrierKind::matrix_ring:
      return a->size == b->size && data_equal(a->inner.get(), b->inner.get());
    case CarrierKind::complexified:
      return data_equal(a->inner.get(), b->inner.get());
  }
  return false;
}

}  // namespace qmod
