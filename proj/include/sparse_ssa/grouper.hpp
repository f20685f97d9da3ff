#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sparse_ssa/fingerprint.hpp"
#include "sparse_ssa/text.hpp"

namespace sparse_ssa {

/// An LCP group: every suffix reachable through `members` shares a prefix
/// of length >= lcp. Member ids <= b are suffixes, ids > b are child groups.
struct Group {
  std::size_t id = 0;
  std::size_t lcp = 0;
  std::vector<std::size_t> members;
};

/// Refinement state: the group list plus the witness-extended position
/// array. Group id g lives at groups[g - b - 1]; the root is b + 1.
struct GroupForest {
  std::size_t b = 0;
  std::size_t n = 0;
  std::vector<Group> groups;
  // witness[id - 1]: start of a suffix reachable from id. The first b
  // entries are the input positions.
  std::vector<std::size_t> witness;

  std::size_t root_id() const noexcept { return b + 1; }
  bool is_suffix(std::size_t id) const noexcept { return id <= b; }
  std::size_t witness_of(std::size_t id) const noexcept {
    return witness[id - 1];
  }
  const Group& group(std::size_t id) const { return groups.at(id - b - 1); }
  std::size_t total_members() const noexcept;
};

struct RefineStats {
  std::size_t iterations = 0;
  std::size_t peak_groups = 0;
  std::size_t peak_members = 0;
  std::size_t max_table_size = 0;
  std::size_t fingerprints = 0;
};

/// Called after each refinement round with the window length 2^j.
using IterationObserver =
    std::function<void(std::size_t window, const GroupForest& forest)>;

struct RefineOptions {
  std::uint64_t table_seed = 0;
  RefineStats* stats = nullptr;
  IterationObserver on_iteration;
};

/// Refines LCP groups for window lengths 2^j_start, ..., 2, 1. With
/// j_start = floor(log2 n) every group lcp is exact; with a smaller j_start
/// lcp values are exact below 2^(j_start + 1) - 1 and capped there.
///
/// For b = 1 the forest has no groups.
GroupForest refine(const Text& text, const PositionSet& positions,
                   const FingerprintIndex& index, unsigned j_start,
                   const RefineOptions& options = {});

/// Orders every group's members by the letter after the group's lcp;
/// a member whose suffix ends exactly at the lcp sorts first.
void sort_groups(GroupForest& forest, const Text& text);

/// One line per group: "(id, lcp, (m1, m2, ...))".
std::string dump(const GroupForest& forest);

}  // namespace sparse_ssa
