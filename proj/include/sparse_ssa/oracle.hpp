#pragma once

#include <cstddef>

#include "sparse_ssa/emitter.hpp"
#include "sparse_ssa/text.hpp"

namespace sparse_ssa {

/// Longest common prefix of T[u..n] and T[v..n] by direct letter scan.
std::size_t naive_lcp(const Text& text, std::size_t u, std::size_t v);

/// True iff T[u..n] < T[v..n]; a proper prefix is smaller.
bool naive_suffix_less(const Text& text, std::size_t u, std::size_t v);

/// Brute-force SSA/SLCP: comparison sort with direct suffix comparison.
SsaSlcp naive_ssa_slcp(const Text& text, const PositionSet& positions);

}  // namespace sparse_ssa
