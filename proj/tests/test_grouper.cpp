#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "forest_checks.hpp"
#include "sparse_ssa/driver.hpp"
#include "sparse_ssa/grouper.hpp"
#include "sparse_ssa/oracle.hpp"
#include "support.hpp"

using namespace sparse_ssa;

namespace {

using GroupSet = std::set<std::tuple<std::size_t, std::size_t, std::set<std::size_t>>>;

GroupSet as_set(const GroupForest& f) {
  GroupSet s;
  for (const auto& g : f.groups)
    s.insert({g.id, g.lcp, std::set<std::size_t>(g.members.begin(), g.members.end())});
  return s;
}

struct Example {
  Text text = Text::from_string(ssa_test::kExampleText);
  PositionSet positions{ssa_test::kExamplePositions, 16};
};

}  // namespace

TEST_CASE("running example refinement matches the worked table") {
  Example ex;
  FingerprintIndex idx(ex.text, 6, 1);
  std::map<std::size_t, GroupSet> after;
  RefineOptions opts;
  opts.on_iteration = [&](std::size_t window, const GroupForest& f) {
    after[window] = as_set(f);
  };
  GroupForest forest = refine(ex.text, ex.positions, idx, floor_log2(16), opts);

  const GroupSet initial{{7, 0, {1, 2, 3, 4, 5, 6}}};
  CHECK(after.at(16) == initial);
  CHECK(after.at(8) == initial);
  CHECK(after.at(4) == GroupSet{{7, 0, {2, 4, 5, 6, 8}}, {8, 4, {1, 3}}});
  CHECK(after.at(2) == GroupSet{{7, 0, {5, 9, 10}},
                                {8, 4, {1, 3}},
                                {9, 2, {2, 4}},
                                {10, 2, {6, 8}}});
  CHECK(after.at(1) == GroupSet{{7, 0, {9, 11}},
                                {8, 4, {1, 3}},
                                {9, 2, {2, 4}},
                                {10, 2, {6, 8}},
                                {11, 1, {5, 10}}});

  // Witnesses: first member of each class.
  CHECK(forest.witness_of(8) == 1);
  CHECK(forest.witness_of(9) == 3);
  CHECK(forest.witness_of(10) == 13);
  CHECK(forest.witness_of(11) == 11);

  sort_groups(forest, ex.text);
  CHECK(dump(forest) ==
        "(7, 0, (11, 9))\n"
        "(8, 4, (1, 3))\n"
        "(9, 2, (2, 4))\n"
        "(10, 2, (6, 8))\n"
        "(11, 1, (10, 5))\n");
}

TEST_CASE("group ids do not depend on the seeds") {
  Example ex;
  FingerprintIndex a(ex.text, 6, 1), b(ex.text, 16, 999);
  auto fa = refine(ex.text, ex.positions, a, 4, {1, nullptr, {}});
  auto fb = refine(ex.text, ex.positions, b, 4, {424242, nullptr, {}});
  sort_groups(fa, ex.text);
  sort_groups(fb, ex.text);
  CHECK(dump(fa) == dump(fb));
}

TEST_CASE("two suffixes that differ at the first letter") {
  Text t = Text::from_string("ab");
  PositionSet p({1, 2}, 2);
  FingerprintIndex idx(t, 2, 3);
  RefineStats stats;
  GroupForest f = refine(t, p, idx, floor_log2(2), {0, &stats, {}});
  REQUIRE(f.groups.size() == 1);
  CHECK(f.groups[0].id == 3);
  CHECK(f.groups[0].lcp == 0);
  CHECK(f.groups[0].members == std::vector<std::size_t>{1, 2});
  sort_groups(f, t);
  CHECK(f.groups[0].members == std::vector<std::size_t>{1, 2});
  CHECK(stats.iterations == 2);
}

TEST_CASE("single suffix produces no groups") {
  Text t = Text::from_string("abc");
  PositionSet p({2}, 3);
  FingerprintIndex idx(t, 1, 3);
  GroupForest f = refine(t, p, idx, 1);
  CHECK(f.groups.empty());
  CHECK(f.witness == std::vector<std::size_t>{2});
}

TEST_CASE("sort_groups is idempotent") {
  Example ex;
  FingerprintIndex idx(ex.text, 6, 1);
  GroupForest f = refine(ex.text, ex.positions, idx, 4);
  sort_groups(f, ex.text);
  const std::string once = dump(f);
  sort_groups(f, ex.text);
  CHECK(dump(f) == once);
}

TEST_CASE("exhausted suffix sorts before its extensions") {
  Text t = Text::from_string("aaaa");
  PositionSet p({1, 2, 3, 4}, 4);
  FingerprintIndex idx(t, 4, 2);
  GroupForest f = refine(t, p, idx, floor_log2(4));
  CHECK(ssa_test::check_partition(f).empty());
  sort_groups(f, t);
  // Every group has exactly one exhausted member, which must come first.
  for (const auto& g : f.groups) {
    REQUIRE(!g.members.empty());
    CHECK(f.witness_of(g.members.front()) + g.lcp == 5);
  }
}

TEST_CASE("random instances: structure, exactness and sort order") {
  std::mt19937_64 rng(8);
  const unsigned sigmas[] = {1, 2, 4, 26, 255};
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 2 + rng() % 300;
    const unsigned sigma = sigmas[rng() % 5];
    const std::size_t b = 2 + rng() % (n - 1);
    auto inst = ssa_test::random_instance(n, sigma, b, rng());
    const Text& t = inst.text;
    FingerprintIndex idx(t, b, rng());

    const bool bounded = round % 2 == 1;
    const unsigned j_start = bounded ? floor_log2(n / b) : floor_log2(n);
    const std::size_t cap = certified_lcp_cap(j_start);

    RefineOptions opts;
    opts.table_seed = rng();
    opts.on_iteration = [&](std::size_t, const GroupForest& f) {
      REQUIRE(f.groups.size() <= b - 1);
      REQUIRE(f.total_members() <= 2 * b - 2);
      REQUIRE(ssa_test::check_partition(f) == "");
      for (const auto& g : f.groups) {
        auto starts = ssa_test::reachable_starts(f, g.id);
        REQUIRE(starts.size() >= 2);
        for (std::size_t s : starts)
          REQUIRE(naive_lcp(t, starts.front(), s) >= g.lcp);
      }
    };
    GroupForest f = refine(t, inst.positions, idx, j_start, opts);
    sort_groups(f, t);

    auto parent = ssa_test::parents(f);
    for (std::size_t u = 1; u <= b; ++u) {
      for (std::size_t v = u + 1; v <= b; ++v) {
        const std::size_t g = ssa_test::lca(parent, u, v);
        REQUIRE(g != 0);
        const std::size_t truth = naive_lcp(t, f.witness_of(u), f.witness_of(v));
        if (bounded)
          REQUIRE(f.group(g).lcp == std::min(truth, cap));
        else
          REQUIRE(f.group(g).lcp == truth);
      }
    }

    if (!bounded) {
      for (const auto& g : f.groups) {
        for (std::size_t i = 1; i < g.members.size(); ++i) {
          auto key = [&](std::size_t m) -> int {
            const std::size_t pos = f.witness_of(m) + g.lcp;
            return pos > n ? -1 : t[pos];
          };
          REQUIRE(key(g.members[i - 1]) < key(g.members[i]));
        }
      }
    }
  }
}
