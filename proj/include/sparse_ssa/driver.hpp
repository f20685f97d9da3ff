#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparse_ssa/emitter.hpp"
#include "sparse_ssa/text.hpp"

namespace sparse_ssa {

struct RunConfig {
  /// Fingerprint sample count s in [b, n]; defaults to b.
  std::optional<std::size_t> samples;
  /// Replaces the default starting round (floor(log2 n) for main_algo,
  /// floor(log2(n/b)) for the first pass of parameterized_algo).
  std::optional<unsigned> j_start_override;
  /// Root seed; the fingerprint base and hash-table seed derive from it.
  std::uint64_t seed = 1;
};

struct DerivedSeeds {
  std::uint64_t fingerprint;
  std::uint64_t table;
  std::uint64_t positions;
};

DerivedSeeds derive_seeds(std::uint64_t seed) noexcept;

/// Root seed used by the second pass of parameterized_algo.
std::uint64_t second_pass_seed(std::uint64_t seed) noexcept;

struct PhaseTimes {
  double preprocess_ms = 0;
  double refine_ms = 0;
  double sort_ms = 0;
  double emit_ms = 0;
  double merge_ms = 0;

  double sum() const noexcept {
    return preprocess_ms + refine_ms + sort_ms + emit_ms + merge_ms;
  }
};

/// Timings and peak logical-entry counters. Accumulated across calls:
/// times add up, peaks take the maximum.
struct RunStats {
  PhaseTimes phases;
  double total_ms = 0;
  std::size_t peak_groups = 0;
  std::size_t peak_members = 0;
  std::size_t stack_high_water = 0;
  std::size_t max_table_size = 0;
  std::size_t fingerprints = 0;
  std::size_t passes = 0;
};

struct ParamStats {
  std::size_t ell = 0;
  unsigned j_start = 0;
  std::size_t b_prime = 0;
  bool second_pass_ran = false;
  /// 1-based ranks whose suffixes were re-sorted (P).
  std::vector<std::size_t> resorted_ranks;
};

struct ParamResult {
  SsaSlcp arrays;
  ParamStats stats;
};

/// floor(log2 x) for x >= 1.
unsigned floor_log2(std::size_t x) noexcept;

/// Largest lcp certified by rounds j_start..0: 2^(j_start + 1) - 1.
std::size_t certified_lcp_cap(unsigned j_start) noexcept;

/// Refine, sort and emit. `j_start` wins over cfg.j_start_override, which
/// wins over floor(log2 n). Exact with high probability at the default;
/// with a smaller start, lcp values are capped at certified_lcp_cap.
SsaSlcp main_algo(const Text& text, const PositionSet& positions,
                  const RunConfig& cfg = {},
                  std::optional<unsigned> j_start = std::nullopt,
                  RunStats* stats = nullptr);

/// Quasi-sort all b suffixes with a short first pass, then fully re-sort
/// only the suffixes adjacent to a capped lcp and merge them back.
ParamResult parameterized_algo(const Text& text, const PositionSet& positions,
                               const RunConfig& cfg = {},
                               RunStats* stats = nullptr);

/// |{i : slcp[i] >= ell or (i < b and slcp[i + 1] >= ell)}| (1-based i).
std::size_t compute_b_prime(std::span<const std::size_t> slcp, std::size_t ell);

}  // namespace sparse_ssa
