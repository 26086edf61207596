#include "homcover/detail/tuple_index.hpp"

#include <algorithm>

namespace homcover::detail {

TupleIndex::TupleIndex(std::size_t arity) : arity_(arity), slots_(16, kEmpty) {}

std::uint64_t TupleIndex::hash(std::span<const std::uint32_t> tuple) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint32_t v : tuple) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h ^ (h >> 31);
}

std::size_t TupleIndex::probe(std::span<const std::uint32_t> tuple) const noexcept {
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash(tuple) & mask;
  while (slots_[slot] != kEmpty) {
    auto stored = this->tuple(slots_[slot]);
    if (std::equal(stored.begin(), stored.end(), tuple.begin())) return slot;
    slot = (slot + 1) & mask;
  }
  return slot;
}

void TupleIndex::grow() {
  std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
  slots_.swap(old);
  for (std::uint32_t index = 0; index < count_; ++index) {
    slots_[probe(tuple(index))] = index;
  }
}

std::pair<std::uint32_t, bool> TupleIndex::insert(std::span<const std::uint32_t> t) {
  std::size_t slot = probe(t);
  if (slots_[slot] != kEmpty) return {slots_[slot], false};
  auto index = static_cast<std::uint32_t>(count_);
  data_.insert(data_.end(), t.begin(), t.end());
  slots_[slot] = index;
  ++count_;
  if (count_ * 2 > slots_.size()) grow();
  return {index, true};
}

std::optional<std::uint32_t> TupleIndex::find(std::span<const std::uint32_t> t) const {
  std::size_t slot = probe(t);
  if (slots_[slot] == kEmpty) return std::nullopt;
  return slots_[slot];
}

TupleIndex TupleIndex::over(std::vector<std::uint32_t> data, std::size_t arity) {
  TupleIndex index(arity);
  index.count_ = arity == 0 ? 1 : data.size() / arity;
  index.data_ = std::move(data);
  std::size_t capacity = 16;
  while (capacity < index.count_ * 2 + 2) capacity *= 2;
  index.slots_.assign(capacity, kEmpty);
  for (std::uint32_t i = 0; i < index.count_; ++i) {
    index.slots_[index.probe(index.tuple(i))] = i;
  }
  return index;
}

}  // namespace homcover::detail
