#include "gkmcalc/action.hpp"

#include <stdexcept>

namespace gkmcalc {

namespace {

const WeylGroup& full_group(const MomentGraph& g)
{
  if (!g.has_group() || g.vertex_count() != g.group()->order())
    throw std::invalid_argument("pointwise action needs the full flag moment graph");
  return *g.group();
}

const WeylGroup& group_of(const MomentGraph& g)
{
  if (!g.has_group())
    throw std::invalid_argument("graph carries no Weyl group");
  return *g.group();
}

void check_simple_index(const WeylGroup& group, std::size_t i)
{
  if (i < 1 || i > group.rank())
    throw std::out_of_range("simple reflection index out of range");
}

std::size_t vertex(const MomentGraph& g, WeylElement x)
{
  auto v = g.vertex_of(x);
  if (!v)
    throw std::invalid_argument("element is not a vertex of the graph");
  return *v;
}

Polynomial simple_root_poly(const WeylGroup& group, std::size_t i)
{
  const auto& rs = group.root_system();
  return rs.form(rs.simple_root(i)).polynomial();
}

EquivariantClass divide_pointwise(const EquivariantClass& diff, const LinearForm& root)
{
  auto loc = diff.localizations();
  for (auto& p : loc)
    p = exact_divide(p, root);
  return {diff.graph(), std::move(loc)};
}

} // namespace

EquivariantClass act(WeylElement u, const EquivariantClass& c)
{
  const auto& g = *c.graph();
  const auto& group = full_group(g);
  const auto uinv = group.inverse(u);
  const auto sub = group.coadjoint_substitution(u);
  std::vector<Polynomial> loc;
  loc.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto from = vertex(g, group.multiply(uinv, g.element(v)));
    loc.push_back(u.id == 0 ? c.at(from) : substitute(c.at(from), sub));
  }
  return {c.graph(), std::move(loc)};
}

EquivariantClass act(WeylElement u, const EquivariantClass& c, const SchubertVariety& x)
{
  const auto& group = x.group();
  const auto& flag = *x.flag;
  const auto expansion = expand_in_basis(c, x.basis);
  auto out = EquivariantClass::zero(x.graph);
  for (const auto& [v, coeff] : expansion) {
    const auto fv = vertex(*flag.graph(), x.graph->element(v));
    const auto moved = act(u, flag.basis()[fv]);
    out += group.act_on_polynomial(u, coeff) * restrict_class(moved, x.graph);
  }
  return out;
}

BasisExpansion act_on_schubert_basis(std::size_t i, std::size_t v, const MomentGraph& g)
{
  const auto& group = group_of(g);
  check_simple_index(group, i);
  BasisExpansion out;
  accumulate(out, v, Polynomial::constant(g.nvars(), 1));
  const auto x = g.element(v);
  if (group.has_left_descent(x, i))
    accumulate(out, vertex(g, group.left_simple(i, x)), -simple_root_poly(group, i));
  return out;
}

BasisExpansion act_simple(std::size_t i, const BasisExpansion& e, const MomentGraph& g)
{
  const auto& group = group_of(g);
  check_simple_index(group, i);
  const auto s = group.simple(i);
  BasisExpansion out;
  for (const auto& [v, coeff] : e) {
    const auto moved = group.act_on_polynomial(s, coeff);
    for (const auto& [x, c] : act_on_schubert_basis(i, v, g))
      accumulate(out, x, moved * c);
  }
  return out;
}

BasisExpansion act_word(WeylElement u, const BasisExpansion& e, const MomentGraph& g)
{
  const auto word = group_of(g).reduced_word(u);
  BasisExpansion out = e;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = act_simple(static_cast<std::size_t>(*it), out, g);
  return out;
}

EquivariantClass left_divided_difference(std::size_t i, const EquivariantClass& c)
{
  const auto& group = full_group(*c.graph());
  check_simple_index(group, i);
  const auto& rs = group.root_system();
  return divide_pointwise(c - act(group.simple(i), c), rs.form(rs.simple_root(i)));
}

EquivariantClass left_divided_difference(std::size_t i, const EquivariantClass& c,
                                         const SchubertVariety& x)
{
  const auto& group = x.group();
  check_simple_index(group, i);
  const auto& rs = group.root_system();
  return divide_pointwise(c - act(group.simple(i), c, x), rs.form(rs.simple_root(i)));
}

EquivariantClass right_divided_difference(std::size_t i, const EquivariantClass& c)
{
  const auto& g = *c.graph();
  const auto& group = full_group(g);
  check_simple_index(group, i);
  const auto& rs = group.root_system();
  std::vector<Polynomial> loc;
  loc.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto x = g.element(v);
    const auto y = vertex(g, group.right_simple(x, i));
    const RootVector image = -group.act(x, rs.simple_root(i));
    loc.push_back(exact_divide(c.at(v) - c.at(y), rs.form(image)));
  }
  return {c.graph(), std::move(loc)};
}

BasisExpansion divided_difference_expansion(std::size_t i, const BasisExpansion& e,
                                            const MomentGraph& g)
{
  const auto& group = group_of(g);
  check_simple_index(group, i);
  const auto& rs = group.root_system();
  const auto s = group.simple(i);
  const auto reflection = group.coadjoint_substitution(s);
  const auto root = rs.form(rs.simple_root(i));
  BasisExpansion out;
  for (const auto& [v, coeff] : e) {
    accumulate(out, v, poly_divided_difference(coeff, reflection, root));
    const auto x = g.element(v);
    if (group.has_left_descent(x, i))
      accumulate(out, vertex(g, group.left_simple(i, x)), group.act_on_polynomial(s, coeff));
  }
  return out;
}

} // namespace gkmcalc
