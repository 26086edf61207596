#pragma once

#include <cstdint>

namespace homcover {

// Resource caps. Exceeding any of them raises the matching cap error; results
// are never truncated.
struct Limits {
  std::uint64_t max_table_order = 20000;       // Cayley-table backend
  std::uint64_t max_closure = 1ull << 22;      // tuple-subgroup closures
  std::uint64_t max_candidates = 1000000000;   // |G|^n for enumeration
  std::uint64_t max_lattice_order = 400;       // subgroup lattice
  std::uint64_t max_lattice_size = 200000;     // number of subgroups

  // Defaults with HOMCOVER_MAX_CLOSURE applied when set.
  static Limits from_environment();
};

}  // namespace homcover
