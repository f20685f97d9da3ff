#include "sparse_ssa/emitter.hpp"

#include <string>

#include "sparse_ssa/errors.hpp"

namespace sparse_ssa {

SsaSlcp output_arrays(const GroupForest& forest, EmitStats* stats,
                      const EmitObserver& observer) {
  const std::size_t b = forest.b;
  if (b == 0) throw ForestError("forest has no suffixes");
  if (forest.witness.size() < b + forest.groups.size())
    throw ForestError("witness array shorter than b + group count");

  SsaSlcp out;
  out.ssa.reserve(b);
  out.slcp.reserve(b);
  EmitStats local;
  EmitStats& st = stats ? *stats : local;

  if (forest.groups.empty()) {
    if (b != 1) throw ForestError("forest without groups must have b = 1");
    out.ssa.push_back(forest.witness_of(1));
    out.slcp.push_back(0);
    st.stack_high_water = 1;
    st.pops = 1;
    return out;
  }

  const std::size_t last_id = b + forest.groups.size();
  const std::size_t infinity = forest.n + 1;

  std::vector<StackEntry> stack;
  stack.reserve(b);
  stack.push_back({forest.root_id(), 0});
  st.stack_high_water = 1;
  std::size_t ell = 0;
  if (observer) observer(stack, out);

  while (!stack.empty()) {
    const StackEntry top = stack.back();
    stack.pop_back();
    if (++st.pops > last_id)
      throw ForestError("member id reached more than once (cycle or shared child)");
    if (top.parent_lcp < ell) ell = top.parent_lcp;

    if (top.id == 0 || top.id > last_id)
      throw ForestError("dangling member id " + std::to_string(top.id));

    if (forest.is_suffix(top.id)) {
      out.ssa.push_back(forest.witness_of(top.id));
      out.slcp.push_back(ell);
      ell = infinity;
    } else {
      const Group& g = forest.groups[top.id - b - 1];
      for (auto it = g.members.rbegin(); it != g.members.rend(); ++it)
        stack.push_back({*it, g.lcp});
      if (stack.size() > st.stack_high_water) st.stack_high_water = stack.size();
    }
    if (observer) observer(stack, out);
  }

  if (out.ssa.size() != b)
    throw ForestError("walk emitted " + std::to_string(out.ssa.size()) +
                      " suffixes, expected " + std::to_string(b));
  return out;
}

}  // namespace sparse_ssa
