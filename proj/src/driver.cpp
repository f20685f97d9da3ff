#include "sparse_ssa/driver.hpp"

#include <bit>
#include <chrono>
#include <string>

#include "sparse_ssa/errors.hpp"
#include "sparse_ssa/fingerprint.hpp"
#include "sparse_ssa/grouper.hpp"

namespace sparse_ssa {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

DerivedSeeds derive_seeds(std::uint64_t seed) noexcept {
  return {splitmix64(seed ^ 0x6670'7269'6e74ULL),
          splitmix64(seed ^ 0x7461'626c'65ULL),
          splitmix64(seed ^ 0x706f'7369'7469'6f6eULL)};
}

std::uint64_t second_pass_seed(std::uint64_t seed) noexcept {
  return seed + 0x632be59bd9b4e019ULL;
}

unsigned floor_log2(std::size_t x) noexcept {
  return x == 0 ? 0u : static_cast<unsigned>(std::bit_width(x) - 1);
}

std::size_t certified_lcp_cap(unsigned j_start) noexcept {
  return (std::size_t{2} << j_start) - 1;
}

SsaSlcp main_algo(const Text& text, const PositionSet& positions,
                  const RunConfig& cfg, std::optional<unsigned> j_start,
                  RunStats* stats) {
  const auto started = Clock::now();
  const std::size_t n = text.size();
  const std::size_t b = positions.size();
  if (positions.text_length() != n)
    throw ContractError("position set was validated against a different text");

  const unsigned start_round =
      j_start ? *j_start : cfg.j_start_override.value_or(floor_log2(n));
  const std::size_t samples = cfg.samples.value_or(b);
  if (samples < b || samples > n)
    throw ContractError("fingerprint sample count s=" + std::to_string(samples) +
                        " outside [b, n] = [" + std::to_string(b) + ", " +
                        std::to_string(n) + "]");

  RunStats local;
  RunStats& st = stats ? *stats : local;
  ++st.passes;

  if (b == 1) {
    st.stack_high_water = std::max<std::size_t>(st.stack_high_water, 1);
    st.total_ms += elapsed_ms(started);
    return SsaSlcp{{positions[0]}, {0}};
  }

  const DerivedSeeds seeds = derive_seeds(cfg.seed);

  auto t = Clock::now();
  const FingerprintIndex index(text, samples, seeds.fingerprint);
  st.phases.preprocess_ms += elapsed_ms(t);

  t = Clock::now();
  RefineStats refine_stats;
  GroupForest forest = refine(text, positions, index, start_round,
                              RefineOptions{seeds.table, &refine_stats, {}});
  st.phases.refine_ms += elapsed_ms(t);

  t = Clock::now();
  sort_groups(forest, text);
  st.phases.sort_ms += elapsed_ms(t);

  t = Clock::now();
  EmitStats emit_stats;
  SsaSlcp out = output_arrays(forest, &emit_stats);
  st.phases.emit_ms += elapsed_ms(t);

  st.peak_groups = std::max(st.peak_groups, refine_stats.peak_groups);
  st.peak_members = std::max(st.peak_members, refine_stats.peak_members);
  st.max_table_size = std::max(st.max_table_size, refine_stats.max_table_size);
  st.stack_high_water = std::max(st.stack_high_water, emit_stats.stack_high_water);
  st.fingerprints += refine_stats.fingerprints;
  st.total_ms += elapsed_ms(started);
  return out;
}

ParamResult parameterized_algo(const Text& text, const PositionSet& positions,
                               const RunConfig& cfg, RunStats* stats) {
  const auto started = Clock::now();
  const std::size_t n = text.size();
  const std::size_t b = positions.size();

  RunStats local;
  RunStats& st = stats ? *stats : local;
  const double outer_before = st.total_ms;

  ParamResult result;
  ParamStats& ps = result.stats;
  ps.j_start = cfg.j_start_override.value_or(floor_log2(n / b));
  ps.ell = certified_lcp_cap(ps.j_start);

  RunConfig first = cfg;
  first.j_start_override.reset();
  SsaSlcp& arrays = result.arrays;
  arrays = main_algo(text, positions, first, ps.j_start, &st);

  auto t = Clock::now();
  std::vector<std::size_t> resorted;
  for (std::size_t i = 0; i < b; ++i) {
    if (arrays.slcp[i] == ps.ell || (i + 1 < b && arrays.slcp[i + 1] == ps.ell))
      resorted.push_back(i + 1);
  }
  st.phases.merge_ms += elapsed_ms(t);

  if (!resorted.empty()) {
    std::vector<std::size_t> subset;
    subset.reserve(resorted.size());
    for (std::size_t rank : resorted) subset.push_back(arrays.ssa[rank - 1]);
    const PositionSet second_positions(std::move(subset), n);

    RunConfig second;
    second.seed = second_pass_seed(cfg.seed);
    second.samples = second_positions.size();
    const SsaSlcp refined =
        main_algo(text, second_positions, second, floor_log2(n), &st);
    ps.second_pass_ran = true;

    t = Clock::now();
    for (std::size_t i = 0; i < resorted.size(); ++i) {
      const std::size_t slot = resorted[i] - 1;
      arrays.ssa[slot] = refined.ssa[i];
      if (arrays.slcp[slot] == ps.ell) arrays.slcp[slot] = refined.slcp[i];
    }
    st.phases.merge_ms += elapsed_ms(t);
  }

  ps.b_prime = resorted.size();
  ps.resorted_ranks = std::move(resorted);
  // main_algo already added its own wall time; add only the remainder.
  st.total_ms = outer_before + elapsed_ms(started);
  return result;
}

std::size_t compute_b_prime(std::span<const std::size_t> slcp, std::size_t ell) {
  const std::size_t b = slcp.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < b; ++i) {
    if (slcp[i] >= ell || (i + 1 < b && slcp[i + 1] >= ell)) ++count;
  }
  return count;
}

}  // namespace sparse_ssa
