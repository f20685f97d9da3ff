#include "sparse_ssa/oracle.hpp"

#include <algorithm>

namespace sparse_ssa {

std::size_t naive_lcp(const Text& text, std::size_t u, std::size_t v) {
  const std::size_t n = text.size();
  std::size_t l = 0;
  while (u + l <= n && v + l <= n && text[u + l] == text[v + l]) ++l;
  return l;
}

bool naive_suffix_less(const Text& text, std::size_t u, std::size_t v) {
  const std::size_t n = text.size();
  const std::size_t l = naive_lcp(text, u, v);
  if (u + l > n) return v + l <= n;  // u exhausted first
  if (v + l > n) return false;
  return text[u + l] < text[v + l];
}

SsaSlcp naive_ssa_slcp(const Text& text, const PositionSet& positions) {
  SsaSlcp out;
  out.ssa.assign(positions.positions().begin(), positions.positions().end());
  std::sort(out.ssa.begin(), out.ssa.end(), [&](std::size_t u, std::size_t v) {
    return naive_suffix_less(text, u, v);
  });
  out.slcp.resize(out.ssa.size());
  out.slcp[0] = 0;
  for (std::size_t r = 1; r < out.ssa.size(); ++r)
    out.slcp[r] = naive_lcp(text, out.ssa[r - 1], out.ssa[r]);
  return out;
}

}  // namespace sparse_ssa
