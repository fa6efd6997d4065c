#include "gkmcalc/linear_solve.hpp"
#include "gkmcalc/moment_graph.hpp"

#include <cstdint>
#include <stdexcept>

namespace gkmcalc {

namespace {

std::optional<std::size_t> first_failure(const MomentGraph& g, const std::vector<bool>& flip)
{
  std::vector<std::size_t> outdeg(g.vertex_count(), 0);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    ++outdeg[flip[k] ? e.head : e.tail];
  }
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    const auto tail = flip[k] ? e.head : e.tail;
    const auto head = flip[k] ? e.tail : e.head;
    if (outdeg[tail] <= outdeg[head])
      return k;
  }
  return std::nullopt;
}

PalaisSmaleResult search_acyclic(const MomentGraph& g)
{
  const std::size_t m = g.edges().size();
  if (m > 20)
    throw std::invalid_argument("too many edges for orientation enumeration");
  PalaisSmaleResult result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> flip(m);
    for (std::size_t k = 0; k < m; ++k)
      flip[k] = (mask >> k) & 1U;
    if (!g.reoriented(flip).is_acyclic())
      continue;
    ++result.orientations_checked;
    result.flipped = flip;
    result.failing_edge = first_failure(g, flip);
    if (!result.failing_edge) {
      result.holds = true;
      return result;
    }
  }
  return result;
}

} // namespace

std::optional<std::size_t> palais_smale_failure(const MomentGraph& g)
{
  return first_failure(g, std::vector<bool>(g.edges().size(), false));
}

PalaisSmaleResult is_palais_smale(const MomentGraph& g, PalaisSmaleMode mode)
{
  PalaisSmaleResult result;
  const std::size_t m = g.edges().size();
  if (mode == PalaisSmaleMode::given_orientation) {
    result.flipped.assign(m, false);
    result.failing_edge = first_failure(g, result.flipped);
    result.holds = !result.failing_edge.has_value();
    result.orientations_checked = 1;
    return result;
  }
  if (mode == PalaisSmaleMode::search_acyclic_orientations)
    return search_acyclic(g);

  // Distinct label directions; scale[k] relates edge k's label to its direction.
  std::vector<LinearForm> directions;
  std::vector<std::size_t> dir_of(m);
  std::vector<int> sign_of(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& label = g.edges()[k].label;
    std::size_t d = 0;
    while (d < directions.size() && !directions[d].proportional_to(label))
      ++d;
    if (d == directions.size())
      directions.push_back(label);
    dir_of[k] = d;
    const auto piv = directions[d].pivot() - 1;
    sign_of[k] = sgn(label.coefficients()[piv]) * sgn(directions[d].coefficients()[piv]);
  }

  const std::size_t dcount = directions.size();
  if (dcount > 20)
    throw std::invalid_argument("too many label directions for chamber enumeration");
  std::vector<RationalRow> base;
  for (const auto& d : directions)
    base.push_back(d.coefficients());

  if (m == 0) {
    result.holds = true;
    result.orientations_checked = 1;
    return result;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dcount); ++mask) {
    std::vector<RationalRow> rows = base;
    for (std::size_t d = 0; d < dcount; ++d)
      if (mask & (std::uint64_t{1} << d))
        for (auto& c : rows[d])
          c = -c;
    auto xi = strictly_feasible_point(rows);
    if (!xi)
      continue;
    ++result.orientations_checked;
    std::vector<bool> flip(m);
    for (std::size_t k = 0; k < m; ++k) {
      const bool negative_dir = (mask >> dir_of[k]) & 1U;
      // xi(label) > 0 keeps the stored direction.
      const int s = sign_of[k] * (negative_dir ? -1 : 1);
      flip[k] = s < 0;
    }
    auto fail = first_failure(g, flip);
    result.flipped = flip;
    result.covector = *xi;
    result.failing_edge = fail;
    if (!fail) {
      result.holds = true;
      return result;
    }
  }
  result.holds = false;
  return result;
}

} // namespace gkmcalc
