#include "gkmcalc/moment_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gkmcalc {

std::string to_string(GraphKind kind)
{
  switch (kind) {
  case GraphKind::flag:
    return "flag";
  case GraphKind::schubert:
    return "schubert";
  case GraphKind::external:
    return "external";
  }
  return "external";
}

std::string to_string(AxiomViolation::Kind kind)
{
  switch (kind) {
  case AxiomViolation::Kind::cycle:
    return "cycle";
  case AxiomViolation::Kind::dependent_labels:
    return "dependent_labels";
  case AxiomViolation::Kind::out_degree:
    return "out_degree";
  case AxiomViolation::Kind::out_labels:
    return "out_labels";
  }
  return "cycle";
}

MomentGraph::MomentGraph(std::size_t nvars, std::string prefix, std::vector<std::string> names,
                         std::vector<MomentEdge> edges)
    : nvars_(nvars), prefix_(std::move(prefix)), names_(std::move(names)), edges_(std::move(edges)),
      out_(names_.size()), in_(names_.size())
{
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size())
    throw std::invalid_argument("duplicate vertex names in moment graph");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (e.tail >= names_.size() || e.head >= names_.size())
      throw std::invalid_argument("edge endpoint outside the vertex set");
    if (e.label.nvars() != nvars_)
      throw DimensionMismatch("edge label lives in a ring of the wrong dimension");
    out_[e.tail].push_back(k);
    in_[e.head].push_back(k);
  }
}

std::optional<std::size_t> MomentGraph::index_of(std::string_view name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<LinearForm> MomentGraph::out_labels(std::size_t v) const
{
  std::vector<LinearForm> out;
  for (auto k : out_edges(v))
    out.push_back(edges_[k].label);
  return out;
}

std::optional<std::size_t> MomentGraph::vertex_of(WeylElement x) const
{
  if (!group_ || x.id >= vertex_by_element_.size())
    return std::nullopt;
  const auto v = vertex_by_element_[x.id];
  if (v == static_cast<std::size_t>(-1))
    return std::nullopt;
  return v;
}

void MomentGraph::attach_group(std::shared_ptr<const WeylGroup> group,
                               std::vector<WeylElement> elements, GraphKind kind,
                               std::optional<WeylElement> top)
{
  if (elements.size() != names_.size())
    throw std::invalid_argument("one Weyl element per vertex required");
  group_ = std::move(group);
  elements_ = std::move(elements);
  kind_ = kind;
  top_ = top;
  vertex_by_element_.assign(group_->order(), static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < elements_.size(); ++v)
    vertex_by_element_[elements_[v].id] = v;
}

std::optional<std::vector<std::size_t>> MomentGraph::topological_order() const
{
  // Kahn's algorithm on out-degrees: a vertex is emitted once all its
  // out-neighbors have been.
  std::vector<std::size_t> remaining(vertex_count());
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    remaining[v] = out_degree(v);
    if (remaining[v] == 0)
      ready.push_back(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const auto v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto k : in_[v])
      if (--remaining[edges_[k].tail] == 0)
        ready.push_back(edges_[k].tail);
  }
  if (order.size() != vertex_count())
    return std::nullopt;
  return order;
}

std::vector<std::vector<char>> MomentGraph::reachability() const
{
  const auto n = vertex_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    reach[s][s] = 1;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto k : out_[v]) {
        const auto h = edges_[k].head;
        if (!reach[s][h]) {
          reach[s][h] = 1;
          queue.push_back(h);
        }
      }
    }
  }
  return reach;
}

MomentGraph MomentGraph::reoriented(const std::vector<bool>& flip) const
{
  if (flip.size() != edges_.size())
    throw std::invalid_argument("one flip flag per edge required");
  std::vector<MomentEdge> edges;
  edges.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (flip[k])
      edges.push_back({e.head, e.tail, LinearForm(-e.label.polynomial())});
    else
      edges.push_back(e);
  }
  MomentGraph out(nvars_, prefix_, names_, std::move(edges));
  if (group_)
    out.attach_group(group_, elements_, GraphKind::external, std::nullopt);
  return out;
}

MomentGraph build_flag_moment_graph(std::shared_ptr<const WeylGroup> group)
{
  const auto& rs = group->root_system();
  std::vector<std::string> names;
  for (auto x : group->elements())
    names.push_back(group->name(x));
  std::vector<MomentEdge> edges;
  for (auto u : group->elements()) {
    for (auto k : group->inversions(u)) {
      const auto head = group->multiply(group->reflections()[k], u);
      edges.push_back({u.id, head.id, rs.form(rs.positive_roots()[k])});
    }
  }
  MomentGraph g(rs.nvars(), rs.variable_prefix(), std::move(names), std::move(edges));
  g.attach_group(group, group->elements(), GraphKind::flag, group->longest());
  return g;
}

MomentGraph build_schubert_moment_graph(std::shared_ptr<const WeylGroup> group, WeylElement w)
{
  const auto& rs = group->root_system();
  const auto verts = group->lower_interval(w);
  std::vector<std::size_t> local(group->order(), static_cast<std::size_t>(-1));
  std::vector<std::string> names;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    local[verts[v].id] = v;
    names.push_back(group->name(verts[v]));
  }
  std::vector<MomentEdge> edges;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const auto u = verts[v];
    for (auto k : group->inversions(u)) {
      const auto head = group->multiply(group->reflections()[k], u);
      // s_beta u < u <= w, so the head always lies in the interval.
      edges.push_back({v, local[head.id], rs.form(rs.positive_roots()[k])});
    }
  }
  MomentGraph g(rs.nvars(), rs.variable_prefix(), std::move(names), std::move(edges));
  g.attach_group(group, verts, w == group->longest() ? GraphKind::flag : GraphKind::schubert, w);
  return g;
}

AxiomReport validate_axioms(const MomentGraph& g)
{
  AxiomReport report;
  if (!g.is_acyclic()) {
    report.acyclic = false;
    report.violations.push_back({AxiomViolation::Kind::cycle, std::nullopt,
                                 "the graph has a directed cycle"});
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto labels = g.out_labels(v);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        if (labels[a].proportional_to(labels[b])) {
          report.labels_independent = false;
          report.violations.push_back(
              {AxiomViolation::Kind::dependent_labels, v,
               "out-labels '" + labels[a].to_string(g.variable_prefix()) + "' and '" +
                   labels[b].to_string(g.variable_prefix()) + "' at " + g.name(v) +
                   " are proportional"});
        }
      }
    }
  }
  if (g.has_group() && g.kind() != GraphKind::external) {
    const auto& group = *g.group();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto x = g.element(v);
      if (g.out_degree(v) != static_cast<std::size_t>(group.length(x))) {
        report.degrees_match_length = false;
        report.violations.push_back({AxiomViolation::Kind::out_degree, v,
                                     "out-degree of " + g.name(v) + " differs from its length"});
      }
      auto expected = group.inversion_forms(x);
      auto actual = g.out_labels(v);
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      if (expected != actual) {
        report.labels_match_inversions = false;
        report.violations.push_back({AxiomViolation::Kind::out_labels, v,
                                     "out-labels of " + g.name(v) + " differ from its inversions"});
      }
    }
  }
  return report;
}

} // namespace gkmcalc
