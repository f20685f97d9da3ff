#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sparse_ssa/grouper.hpp"

namespace sparse_ssa {

/// Sparse suffix array and sparse LCP array. ssa[r] is the 1-based start of
/// the suffix of rank r + 1; slcp[0] = 0 and slcp[r] is the LCP of the
/// suffixes at ssa[r - 1] and ssa[r].
struct SsaSlcp {
  std::vector<std::size_t> ssa;
  std::vector<std::size_t> slcp;

  std::size_t size() const noexcept { return ssa.size(); }
  friend bool operator==(const SsaSlcp&, const SsaSlcp&) = default;
};

/// DFS stack entry: a member id and the lcp of the group that pushed it.
struct StackEntry {
  std::size_t id;
  std::size_t parent_lcp;
  friend bool operator==(const StackEntry&, const StackEntry&) = default;
};

struct EmitStats {
  std::size_t stack_high_water = 0;
  std::size_t pops = 0;
};

/// Observer invoked once before the first pop and once after every pop.
/// `stack` is ordered bottom to top.
using EmitObserver = std::function<void(const std::vector<StackEntry>& stack,
                                        const SsaSlcp& partial)>;

/// Pre-order walk over a sorted forest producing SSA and SLCP.
/// Throws ForestError on a dangling member id or an empty forest with b > 1.
SsaSlcp output_arrays(const GroupForest& forest, EmitStats* stats = nullptr,
                      const EmitObserver& observer = {});

}  // namespace sparse_ssa
