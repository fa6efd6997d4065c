#include "gkmcalc/equivariant_class.hpp"

#include "gkmcalc/action.hpp"

#include <stdexcept>

namespace gkmcalc {

EquivariantClass::EquivariantClass(GraphPtr graph, std::vector<Polynomial> localizations)
    : graph_(std::move(graph)), loc_(std::move(localizations))
{
  if (!graph_)
    throw std::invalid_argument("equivariant class needs a graph");
  if (loc_.size() != graph_->vertex_count())
    throw std::invalid_argument("one localization per vertex required");
  for (const auto& p : loc_)
    if (p.nvars() != graph_->nvars())
      throw DimensionMismatch("localization lives in a ring of the wrong dimension");
}

EquivariantClass EquivariantClass::zero(GraphPtr graph)
{
  const auto n = graph->nvars();
  std::vector<Polynomial> loc(graph->vertex_count(), Polynomial(n));
  return {std::move(graph), std::move(loc)};
}

EquivariantClass EquivariantClass::unit(GraphPtr graph)
{
  const auto n = graph->nvars();
  std::vector<Polynomial> loc(graph->vertex_count(), Polynomial::constant(n, 1));
  return {std::move(graph), std::move(loc)};
}

bool EquivariantClass::is_zero() const
{
  for (const auto& p : loc_)
    if (!p.is_zero())
      return false;
  return true;
}

void EquivariantClass::check_compatible(const EquivariantClass& rhs) const
{
  if (graph_ != rhs.graph_ && graph_->names() != rhs.graph_->names())
    throw std::invalid_argument("classes live on different moment graphs");
}

EquivariantClass& EquivariantClass::operator+=(const EquivariantClass& rhs)
{
  check_compatible(rhs);
  for (std::size_t v = 0; v < loc_.size(); ++v)
    loc_[v] += rhs.loc_[v];
  return *this;
}

EquivariantClass& EquivariantClass::operator-=(const EquivariantClass& rhs)
{
  check_compatible(rhs);
  for (std::size_t v = 0; v < loc_.size(); ++v)
    loc_[v] -= rhs.loc_[v];
  return *this;
}

EquivariantClass operator*(const Polynomial& c, const EquivariantClass& x)
{
  auto loc = x.loc_;
  for (auto& p : loc)
    p = c * p;
  return {x.graph_, std::move(loc)};
}

EquivariantClass operator*(const Rational& c, const EquivariantClass& x)
{
  auto loc = x.loc_;
  for (auto& p : loc)
    p *= c;
  return {x.graph_, std::move(loc)};
}

bool operator==(const EquivariantClass& a, const EquivariantClass& b)
{
  if (a.graph_ != b.graph_ && a.graph_->names() != b.graph_->names())
    return false;
  return a.loc_ == b.loc_;
}

GkmCheck check_gkm(const EquivariantClass& c)
{
  GkmCheck out;
  const auto& g = *c.graph();
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (!divides(e.label, c.at(e.tail) - c.at(e.head))) {
      out.holds = false;
      out.failing_edges.push_back(k);
    }
  }
  return out;
}

KtConditions check_knutson_tao(const EquivariantClass& c, std::size_t base)
{
  const auto& g = *c.graph();
  KtConditions out;
  const auto labels = g.out_labels(base);
  out.product_at_base = c.at(base) == product(labels, g.nvars());
  const int d = static_cast<int>(labels.size());
  out.homogeneous = true;
  for (const auto& p : c.localizations())
    if (!is_homogeneous(p, d))
      out.homogeneous = false;
  const auto reach = g.reachability();
  out.vanishes_off_upset = true;
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (!reach[u][base] && !c.at(u).is_zero())
      out.vanishes_off_upset = false;
  out.gkm = check_gkm(c).holds;
  return out;
}

KnutsonTaoClass point_class_top(const GraphPtr& g)
{
  std::optional<std::size_t> top;
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    if (!g->in_edges(v).empty())
      continue;
    if (top)
      throw std::invalid_argument("graph has more than one source");
    top = v;
  }
  if (!top)
    throw std::invalid_argument("graph has no source");
  auto c = EquivariantClass::zero(g);
  std::vector<Polynomial> loc = c.localizations();
  loc[*top] = product(g->out_labels(*top), g->nvars());
  return {EquivariantClass(g, std::move(loc)), *top};
}

namespace {

void require_flag(const MomentGraph& g)
{
  if (!g.has_group() || g.vertex_count() != g.group()->order())
    throw std::invalid_argument("operation needs the full flag moment graph");
}

std::size_t vertex_or_throw(const MomentGraph& g, WeylElement x)
{
  auto v = g.vertex_of(x);
  if (!v)
    throw std::invalid_argument("element is not a vertex of the graph");
  return *v;
}

} // namespace

KnutsonTaoClass knutson_tao_class_descent(const GraphPtr& flag, WeylElement v)
{
  require_flag(*flag);
  const auto& group = *flag->group();
  auto top = point_class_top(flag);
  const auto z = group.multiply(group.longest(), group.inverse(v));
  auto cls = top.cls;
  for (int i : group.reduced_word(z))
    cls = left_divided_difference(static_cast<std::size_t>(i), cls);
  return {std::move(cls), vertex_or_throw(*flag, v)};
}

EquivariantClass restrict_class(const EquivariantClass& c, const GraphPtr& sub)
{
  const auto& from = *c.graph();
  if (from.nvars() != sub->nvars())
    throw DimensionMismatch("graphs live in rings of different dimension");
  const bool by_element = from.has_group() && sub->has_group() && from.group() == sub->group();
  std::vector<Polynomial> loc;
  loc.reserve(sub->vertex_count());
  for (std::size_t v = 0; v < sub->vertex_count(); ++v) {
    std::optional<std::size_t> u =
        by_element ? from.vertex_of(sub->element(v)) : from.index_of(sub->name(v));
    if (!u)
      throw std::invalid_argument("vertex '" + sub->name(v) + "' is missing from the source graph");
    loc.push_back(c.at(*u));
  }
  return {sub, std::move(loc)};
}

KtBasis::KtBasis(GraphPtr graph, std::vector<EquivariantClass> classes)
    : graph_(std::move(graph)), classes_(std::move(classes))
{
  if (classes_.size() != graph_->vertex_count())
    throw std::invalid_argument("one basis class per vertex required");
}

KtBasis descent_basis(const GraphPtr& flag)
{
  require_flag(*flag);
  const auto& group = *flag->group();
  const auto n = flag->vertex_count();
  std::vector<std::optional<EquivariantClass>> classes(n);
  const auto top = point_class_top(flag);
  classes[top.base] = top.cls;
  // Ids are sorted by length, so walking them backwards visits s_i v before v.
  const auto elems = group.elements();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
    const auto v = vertex_or_throw(*flag, *it);
    if (classes[v])
      continue;
    std::size_t i = 1;
    while (group.has_left_descent(*it, i))
      ++i;
    const auto above = vertex_or_throw(*flag, group.left_simple(i, *it));
    classes[v] = left_divided_difference(i, *classes[above]);
  }
  std::vector<EquivariantClass> out;
  out.reserve(n);
  for (auto& c : classes)
    out.push_back(std::move(*c));
  return {flag, std::move(out)};
}

KtBasis restricted_basis(const KtBasis& flag_basis, const GraphPtr& sub)
{
  const auto& from = *flag_basis.graph();
  const bool by_element = from.has_group() && sub->has_group() && from.group() == sub->group();
  std::vector<EquivariantClass> out;
  out.reserve(sub->vertex_count());
  for (std::size_t v = 0; v < sub->vertex_count(); ++v) {
    std::optional<std::size_t> u =
        by_element ? from.vertex_of(sub->element(v)) : from.index_of(sub->name(v));
    if (!u)
      throw std::invalid_argument("vertex '" + sub->name(v) + "' is missing from the flag graph");
    out.push_back(restrict_class(flag_basis[*u], sub));
  }
  return {sub, std::move(out)};
}

void accumulate(BasisExpansion& e, std::size_t v, const Polynomial& c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = e.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      e.erase(it);
  }
}

BasisExpansion expand_in_basis(const EquivariantClass& c, const KtBasis& basis)
{
  const auto& g = *basis.graph();
  if (c.graph() != basis.graph() && c.graph()->names() != g.names())
    throw std::invalid_argument("class and basis live on different moment graphs");
  const auto order = g.topological_order();
  if (!order)
    throw std::invalid_argument("expansion needs an acyclic moment graph");
  auto current = c.localizations();
  BasisExpansion out;
  for (auto u : *order) {
    if (current[u].is_zero())
      continue;
    Polynomial q = current[u];
    for (const auto& label : g.out_labels(u))
      q = exact_divide(q, label);
    const auto& omega = basis[u];
    for (std::size_t x = 0; x < current.size(); ++x)
      if (!omega.at(x).is_zero())
        current[x] -= q * omega.at(x);
    out.emplace(u, std::move(q));
  }
  return out;
}

EquivariantClass reconstruct(const BasisExpansion& e, const KtBasis& basis)
{
  auto out = EquivariantClass::zero(basis.graph());
  for (const auto& [v, c] : e)
    out += c * basis[v];
  return out;
}

FlagVariety::FlagVariety(std::shared_ptr<const WeylGroup> group)
    : group_(std::move(group)),
      graph_(std::make_shared<const MomentGraph>(build_flag_moment_graph(group_)))
{
}

std::shared_ptr<const FlagVariety> FlagVariety::create(std::shared_ptr<const WeylGroup> group)
{
  return std::shared_ptr<const FlagVariety>(new FlagVariety(std::move(group)));
}

const KtBasis& FlagVariety::basis() const
{
  std::call_once(basis_once_, [this] { basis_ = std::make_unique<KtBasis>(descent_basis(graph_)); });
  return *basis_;
}

SchubertVariety schubert_variety(const std::shared_ptr<const FlagVariety>& flag, WeylElement w)
{
  auto graph = std::make_shared<const MomentGraph>(build_schubert_moment_graph(flag->group(), w));
  auto basis = restricted_basis(flag->basis(), graph);
  return {flag, w, graph, std::move(basis)};
}

} // namespace gkmcalc
