#include "sparse_ssa/grouper.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sparse_ssa/errors.hpp"

namespace sparse_ssa {

namespace {

struct TableKey {
  std::uint64_t value;
  std::size_t window_len;
  bool operator==(const TableKey&) const = default;
};

struct TableHash {
  std::uint64_t seed;
  std::size_t operator()(const TableKey& k) const noexcept {
    // splitmix64 finalizer
    std::uint64_t z = k.value ^ seed ^ (k.window_len * 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

}  // namespace

std::size_t GroupForest::total_members() const noexcept {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.members.size();
  return total;
}

GroupForest refine(const Text& text, const PositionSet& positions,
                   const FingerprintIndex& index, unsigned j_start,
                   const RefineOptions& options) {
  if (positions.text_length() != text.size())
    throw ContractError("position set was validated against a different text");
  if (j_start >= 63) throw ContractError("j_start must be < 63");

  const std::size_t n = text.size();
  const std::size_t b = positions.size();

  GroupForest forest;
  forest.b = b;
  forest.n = n;
  forest.witness.assign(positions.positions().begin(),
                        positions.positions().end());
  if (b == 1) return forest;

  forest.groups.reserve(b - 1);
  forest.witness.reserve(2 * b - 1);

  Group root{b + 1, 0, {}};
  root.members.reserve(b);
  for (std::size_t id = 1; id <= b; ++id) root.members.push_back(id);
  forest.groups.push_back(std::move(root));
  forest.witness.push_back(positions[0]);

  RefineStats local;
  RefineStats& stats = options.stats ? *options.stats : local;

  std::unordered_map<TableKey, std::size_t, TableHash> table(
      16, TableHash{options.table_seed});
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> draining;
  std::vector<Group> created;

  for (unsigned j = j_start + 1; j-- > 0;) {
    const std::size_t window = std::size_t{1} << j;
    created.clear();
    const std::size_t existing = forest.groups.size();

    for (std::size_t gi = 0; gi < existing; ++gi) {
      Group& group = forest.groups[gi];
      const std::size_t k = group.lcp;
      const std::size_t original = group.members.size();

      table.clear();
      std::size_t used = 0;
      draining.swap(group.members);
      group.members.clear();

      for (std::size_t member : draining) {
        const std::size_t start = forest.witness_of(member) + k;
        if (start > n) {
          // Suffix exhausted at the certified prefix: stays a singleton.
          group.members.push_back(member);
          continue;
        }
        const Fingerprint fp = index.fingerprint(start, window);
        ++stats.fingerprints;
        auto [it, inserted] = table.try_emplace(TableKey{fp.value, fp.window_len}, used);
        if (inserted) {
          if (classes.size() <= used) classes.emplace_back();
          classes[used].clear();
          ++used;
        }
        classes[it->second].push_back(member);
      }
      draining.clear();
      stats.max_table_size = std::max(stats.max_table_size, table.size());

      // Classes are visited in order of first appearance, singletons before
      // multi-member classes. Any visiting order is admissible; this one
      // makes group ids independent of the table's bucket layout.
      for (std::size_t slot = 0; slot < used; ++slot) {
        if (classes[slot].size() == 1) group.members.push_back(classes[slot].front());
      }
      for (std::size_t slot = 0; slot < used; ++slot) {
        auto& members = classes[slot];
        if (members.size() == original) {
          group.lcp = k + window;
          group.members.swap(members);
        } else if (members.size() >= 2) {
          const std::size_t id = b + 1 + existing + created.size();
          group.members.push_back(id);
          forest.witness.push_back(forest.witness_of(members.front()));
          created.push_back(Group{id, k + window, members});
        }
      }
    }

    for (auto& g : created) forest.groups.push_back(std::move(g));

    ++stats.iterations;
    stats.peak_groups = std::max(stats.peak_groups, forest.groups.size());
    stats.peak_members = std::max(stats.peak_members, forest.total_members());
    if (options.on_iteration) options.on_iteration(window, forest);
  }
  return forest;
}

void sort_groups(GroupForest& forest, const Text& text) {
  const std::size_t n = text.size();
  for (auto& group : forest.groups) {
    const std::size_t k = group.lcp;
    // 0 for an exhausted suffix, letter + 1 otherwise.
    auto key = [&](std::size_t member) -> unsigned {
      const std::size_t pos = forest.witness_of(member) + k;
      return pos > n ? 0u : text[pos] + 1u;
    };
    std::sort(group.members.begin(), group.members.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  }
}

std::string dump(const GroupForest& forest) {
  std::ostringstream out;
  for (const auto& g : forest.groups) {
    out << '(' << g.id << ", " << g.lcp << ", (";
    for (std::size_t i = 0; i < g.members.size(); ++i)
      out << (i ? ", " : "") << g.members[i];
    out << "))\n";
  }
  return out.str();
}

}  // namespace sparse_ssa
