#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "sparse_ssa/emitter.hpp"

namespace sparse_ssa {

// CSV: header "ssa,slcp", then one "position,lcp" line per rank.
void write_csv(std::ostream& out, const SsaSlcp& arrays);
SsaSlcp read_csv(std::istream& in);

// Binary: magic "SSA1", n and b as u64 little-endian, then b pairs of
// u64 little-endian (position, lcp).
void write_bin(std::ostream& out, const SsaSlcp& arrays, std::uint64_t n);

struct BinaryArrays {
  std::uint64_t n = 0;
  SsaSlcp arrays;
};
BinaryArrays read_bin(std::istream& in);

}  // namespace sparse_ssa
