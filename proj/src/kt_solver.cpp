#include "gkmcalc/equivariant_class.hpp"
#include "gkmcalc/linear_solve.hpp"

#include <map>

namespace gkmcalc {

namespace {

void monomials_rec(std::size_t nvars, std::size_t pos, int left, Exponent& cur,
                   std::vector<Exponent>& out)
{
  if (pos + 1 == nvars) {
    cur[pos] = static_cast<std::uint16_t>(left);
    out.push_back(cur);
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur[pos] = static_cast<std::uint16_t>(k);
    monomials_rec(nvars, pos + 1, left - k, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree)
{
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  if (nvars == 0) {
    if (degree == 0)
      out.push_back(cur);
    return out;
  }
  monomials_rec(nvars, 0, degree, cur, out);
  return out;
}

/// Solves the local systems for one graph; images of monomials under each
/// hyperplane substitution are shared between vertices and bases.
class LocalSolver {
public:
  explicit LocalSolver(const GraphPtr& g) : g_(g), reach_(g->reachability())
  {
    auto order = g->topological_order();
    if (!order)
      throw KtSolveError("moment graph has a directed cycle");
    order_ = std::move(*order);
  }

  EquivariantClass solve(std::size_t v)
  {
    const auto n = g_->nvars();
    const int d = static_cast<int>(g_->out_degree(v));
    std::vector<Polynomial> loc(g_->vertex_count(), Polynomial(n));
    for (auto u : order_) {
      if (!reach_[u][v])
        continue;
      if (u == v) {
        loc[u] = product(g_->out_labels(v), n);
        continue;
      }
      loc[u] = solve_vertex(u, d, loc);
    }
    EquivariantClass cls(g_, std::move(loc));
    if (!check_gkm(cls).holds)
      throw KtSolveError("solved class for " + g_->name(v) + " fails the GKM condition");
    return cls;
  }

private:
  struct Images {
    Substitution sub;
    std::map<int, std::vector<Polynomial>> by_degree;
  };

  Images& images_for(const LinearForm& label)
  {
    auto it = images_.find(label);
    if (it == images_.end())
      it = images_.emplace(label, Images{label.hyperplane_substitution(), {}}).first;
    return it->second;
  }

  const std::vector<Polynomial>& monomial_images(Images& im, int d)
  {
    auto it = im.by_degree.find(d);
    if (it != im.by_degree.end())
      return it->second;
    std::vector<Polynomial> out;
    for (const auto& m : monomials(d))
      out.push_back(substitute(Polynomial::monomial(m, 1), im.sub));
    return im.by_degree.emplace(d, std::move(out)).first->second;
  }

  const std::vector<Exponent>& monomials(int d)
  {
    auto it = monomials_.find(d);
    if (it == monomials_.end())
      it = monomials_.emplace(d, monomials_of_degree(g_->nvars(), d)).first;
    return it->second;
  }

  Polynomial solve_vertex(std::size_t u, int d, const std::vector<Polynomial>& loc)
  {
    const auto& basis = monomials(d);
    const std::size_t cols = basis.size();
    std::vector<RationalRow> rows;
    std::vector<Rational> rhs;
    for (auto k : g_->out_edges(u)) {
      const auto& e = g_->edges()[k];
      auto& im = images_for(e.label);
      const auto& imgs = monomial_images(im, d);
      const auto target = substitute(loc[e.head], im.sub);
      std::map<Exponent, std::size_t, GrlexGreater> row_of;
      auto row_index = [&](const Exponent& exp) {
        auto [it, inserted] = row_of.try_emplace(exp, rows.size());
        if (inserted) {
          rows.emplace_back(cols, Rational(0));
          rhs.emplace_back(0);
        }
        return it->second;
      };
      for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [exp, c] : imgs[j].terms())
          rows[row_index(exp)][j] += c;
      for (const auto& [exp, c] : target.terms())
        rhs[row_index(exp)] += c;
    }
    auto sol = solve_linear_system(std::move(rows), std::move(rhs), cols);
    if (sol.status == SolveStatus::inconsistent)
      throw KtSolveError("local system at " + g_->name(u) + " is inconsistent");
    if (sol.status == SolveStatus::underdetermined)
      throw KtSolveError("local system at " + g_->name(u) + " has more than one solution");
    Polynomial p(g_->nvars());
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(sol.x[j]) != 0)
        p.add_term(basis[j], sol.x[j]);
    return p;
  }

  GraphPtr g_;
  std::vector<std::vector<char>> reach_;
  std::vector<std::size_t> order_;
  std::map<LinearForm, Images> images_;
  std::map<int, std::vector<Exponent>> monomials_;
};

} // namespace

KnutsonTaoClass knutson_tao_class_solve(const GraphPtr& g, std::size_t v)
{
  if (v >= g->vertex_count())
    throw std::out_of_range("vertex index out of range");
  LocalSolver solver(g);
  return {solver.solve(v), v};
}

KtBasis solved_basis(const GraphPtr& g)
{
  LocalSolver solver(g);
  std::vector<EquivariantClass> classes;
  classes.reserve(g->vertex_count());
  for (std::size_t v = 0; v < g->vertex_count(); ++v)
    classes.push_back(solver.solve(v));
  return {g, std::move(classes)};
}

} // namespace gkmcalc
