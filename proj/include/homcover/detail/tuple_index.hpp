#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace homcover::detail {

// Open-addressing hash set of fixed-arity tuples stored contiguously. Maps a
// tuple to its insertion index.
class TupleIndex {
 public:
  explicit TupleIndex(std::size_t arity = 0);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return count_; }

  // Inserts the tuple if absent. Returns {index, inserted}.
  std::pair<std::uint32_t, bool> insert(std::span<const std::uint32_t> tuple);
  std::optional<std::uint32_t> find(std::span<const std::uint32_t> tuple) const;

  std::span<const std::uint32_t> tuple(std::uint32_t index) const {
    return {data_.data() + static_cast<std::size_t>(index) * arity_, arity_};
  }
  const std::vector<std::uint32_t>& data() const noexcept { return data_; }
  std::vector<std::uint32_t> release_data() { return std::move(data_); }

  // Builds an index over already-stored tuples (no duplicates allowed).
  static TupleIndex over(std::vector<std::uint32_t> data, std::size_t arity);

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  std::uint64_t hash(std::span<const std::uint32_t> tuple) const noexcept;
  void grow();
  std::size_t probe(std::span<const std::uint32_t> tuple) const noexcept;

  std::size_t arity_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace homcover::detail
