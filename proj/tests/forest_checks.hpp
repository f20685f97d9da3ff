#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sparse_ssa/grouper.hpp"
#include "sparse_ssa/oracle.hpp"

namespace ssa_test {

/// Returns an empty string when the forest is a well-formed tree whose
/// leaves partition the suffix ids; otherwise a description of the problem.
inline std::string check_partition(const sparse_ssa::GroupForest& f) {
  const std::size_t last = f.b + f.groups.size();
  std::vector<int> seen(last + 1, 0);
  for (const auto& g : f.groups)
    for (std::size_t m : g.members) {
      if (m == 0 || m > last) return "dangling member " + std::to_string(m);
      ++seen[m];
    }
  for (std::size_t id = 1; id <= last; ++id) {
    const int expected = (id == f.root_id()) ? 0 : 1;
    if (seen[id] != expected)
      return "id " + std::to_string(id) + " appears " + std::to_string(seen[id]) + " times";
  }
  return {};
}

/// Suffix starts reachable from each id, by DFS.
inline std::vector<std::size_t> reachable_starts(const sparse_ssa::GroupForest& f,
                                                 std::size_t id) {
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    if (f.is_suffix(x)) {
      out.push_back(f.witness_of(x));
      return;
    }
    for (std::size_t m : f.group(x).members) walk(m);
  };
  walk(id);
  return out;
}

/// parent[id] for every non-root id.
inline std::map<std::size_t, std::size_t> parents(const sparse_ssa::GroupForest& f) {
  std::map<std::size_t, std::size_t> p;
  for (const auto& g : f.groups)
    for (std::size_t m : g.members) p[m] = g.id;
  return p;
}

/// Lowest common ancestor group of two suffix ids.
inline std::size_t lca(const std::map<std::size_t, std::size_t>& parent,
                       std::size_t u, std::size_t v) {
  std::vector<std::size_t> chain;
  for (std::size_t x = u; parent.count(x); x = parent.at(x)) chain.push_back(parent.at(x));
  for (std::size_t x = v; parent.count(x); x = parent.at(x)) {
    const std::size_t up = parent.at(x);
    for (std::size_t c : chain)
      if (c == up) return up;
  }
  return 0;
}

}  // namespace ssa_test
