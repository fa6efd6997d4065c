#include "gkmcalc/action.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gkmcalc {

BasisExpansion average_class(std::size_t v, const SchubertVariety& x)
{
  const auto& group = x.group();
  const auto& g = *x.graph;
  const auto n = g.nvars();
  // orbit[u] = u . [Omega_v]; ids are length-sorted so s_i u is ready before u.
  std::vector<BasisExpansion> orbit(group.order());
  orbit[0].emplace(v, Polynomial::constant(n, 1));
  BasisExpansion sum = orbit[0];
  for (auto u : group.elements()) {
    if (u.id == 0)
      continue;
    std::size_t i = 1;
    while (!group.has_left_descent(u, i))
      ++i;
    orbit[u.id] = act_simple(i, orbit[group.left_simple(i, u).id], g);
    for (const auto& [k, c] : orbit[u.id])
      accumulate(sum, k, c);
  }
  const Rational scale(1, static_cast<unsigned long>(group.order()));
  for (auto& [k, c] : sum)
    c *= scale;
  return sum;
}

DdiffClosure divided_difference_closure(const BasisExpansion& start, const MomentGraph& g)
{
  const auto rank = g.group()->rank();
  std::set<BasisExpansion> seen;
  DdiffClosure out;
  std::deque<BasisExpansion> queue;
  if (start.empty())
    out.reaches_zero = true;
  else {
    seen.insert(start);
    queue.push_back(start);
  }
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 1; i <= rank; ++i) {
      auto next = divided_difference_expansion(i, cur, g);
      if (next.empty()) {
        out.reaches_zero = true;
        continue;
      }
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  out.classes.assign(seen.begin(), seen.end());
  return out;
}

bool DecompositionReport::ok() const
{
  for (const auto& e : entries)
    if (!e.invariant || !e.unitriangular || !e.trivial_mod_t)
      return false;
  return multiplicities == poincare;
}

DecompositionReport decompose(const SchubertVariety& x)
{
  const auto& group = x.group();
  const auto& g = *x.graph;
  const auto n = g.nvars();
  const auto reach = g.reachability();
  DecompositionReport report;
  report.root_system = group.root_system().name();
  report.top = group.name(x.top);
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    max_degree = std::max(max_degree, g.out_degree(v));
  report.multiplicities.assign(max_degree + 1, 0);
  report.poincare.assign(max_degree + 1, 0);

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    DecompositionEntry entry;
    entry.vertex = v;
    entry.degree = x.basis.degree(v);
    entry.averaged = average_class(v, x);
    ++report.poincare[g.out_degree(v)];

    auto lead = entry.averaged.find(v);
    entry.unitriangular = lead != entry.averaged.end() &&
                          lead->second == Polynomial::constant(n, 1);
    for (const auto& [k, c] : entry.averaged)
      if (!reach[v][k])
        entry.unitriangular = false;

    const auto y = reconstruct(entry.averaged, x.basis);
    entry.invariant = true;
    entry.trivial_mod_t = true;
    for (std::size_t i = 1; i <= group.rank(); ++i) {
      const auto s = group.simple(i);
      const bool fixed = act(s, y, x) == y;
      entry.generator_invariance.push_back(fixed);
      if (!fixed)
        entry.invariant = false;
      const auto moved = expand_in_basis(act(s, x.basis[v], x), x.basis);
      for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        auto it = moved.find(k);
        const Rational c0 = it == moved.end() ? Rational(0) : evaluate_at_origin(it->second);
        if (c0 != (k == v ? 1 : 0))
          entry.trivial_mod_t = false;
      }
    }
    if (entry.invariant && entry.unitriangular)
      ++report.multiplicities[static_cast<std::size_t>(entry.degree)];
    report.entries.push_back(std::move(entry));
  }
  return report;
}

} // namespace gkmcalc
