#include "gkmcalc/verify.hpp"

#include "gkmcalc/action.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gkmcalc {

namespace {

class Ledger {
public:
  Ledger(std::vector<CheckResult>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  /// Runs body; every call to expect() inside counts as one case.
  void check(const std::string& name, const std::function<void()>& body)
  {
    current_ = CheckResult{suite_, name, true, 0, {}};
    try {
      body();
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    out_.push_back(current_);
  }

  void expect(bool ok, const std::function<std::string()>& what)
  {
    ++current_.cases;
    if (!ok)
      fail(what());
  }

private:
  void fail(const std::string& detail)
  {
    if (current_.passed)
      current_.detail = detail;
    current_.passed = false;
  }

  std::vector<CheckResult>& out_;
  std::string suite_;
  CheckResult current_;
};

std::vector<SchubertVariety> all_schubert(const std::shared_ptr<const FlagVariety>& flag)
{
  std::vector<SchubertVariety> out;
  for (auto w : flag->group()->elements())
    out.push_back(schubert_variety(flag, w));
  return out;
}

void coxeter_suite(Ledger& ledger, const std::shared_ptr<const FlagVariety>& flag)
{
  const auto& group = *flag->group();
  ledger.check("length equals number of inversions and word length", [&] {
    for (auto w : group.elements())
      ledger.expect(group.length(w) == static_cast<int>(group.reduced_word(w).size()) &&
                        group.from_word(group.reduced_word(w)) == w,
                    [&] { return group.name(w); });
  });
  ledger.check("inverse and multiplication", [&] {
    for (auto w : group.elements())
      ledger.expect(group.multiply(w, group.inverse(w)) == group.identity() &&
                        group.length(group.inverse(w)) == group.length(w),
                    [&] { return group.name(w); });
  });
  ledger.check("inversions of s_i w for s_i w > w", [&] {
    const auto& rs = group.root_system();
    for (auto w : group.elements())
      for (std::size_t i = 1; i <= group.rank(); ++i) {
        if (group.has_left_descent(w, i))
          continue;
        std::vector<LinearForm> expected{rs.form(rs.simple_root(i))};
        for (auto k : group.inversions(w))
          expected.push_back(rs.form(rs.reflect(rs.simple_root(i), rs.positive_roots()[k])));
        auto actual = group.inversion_forms(group.left_simple(i, w));
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        ledger.expect(expected == actual, [&] { return group.name(w) + " i=" + std::to_string(i); });
      }
  });
}

void graph_suite(Ledger& ledger, const std::shared_ptr<const FlagVariety>& flag,
                 const std::vector<SchubertVariety>& xs)
{
  const auto& group = *flag->group();
  const auto& g = *flag->graph();
  ledger.check("flag graph axioms", [&] {
    const auto r = validate_axioms(g);
    ledger.expect(r.ok(), [&] { return r.violations.front().detail; });
  });
  ledger.check("path order equals Bruhat order", [&] {
    const auto reach = g.reachability();
    for (auto u : group.elements())
      for (auto v : group.elements())
        ledger.expect((reach[*g.vertex_of(u)][*g.vertex_of(v)] != 0) == group.bruhat_leq(v, u),
                      [&] { return group.name(u) + " vs " + group.name(v); });
  });
  ledger.check("Schubert graphs: axioms and Palais-Smale", [&] {
    for (const auto& x : xs) {
      ledger.expect(validate_axioms(*x.graph).ok(), [&] { return group.name(x.top); });
      ledger.expect(is_palais_smale(*x.graph, PalaisSmaleMode::given_orientation).holds,
                    [&] { return group.name(x.top); });
    }
  });
  ledger.check("Schubert graphs are induced subgraphs", [&] {
    for (const auto& x : xs) {
      std::size_t expected = 0;
      for (const auto& e : g.edges())
        if (group.bruhat_leq(g.element(e.tail), x.top) && group.bruhat_leq(g.element(e.head), x.top))
          ++expected;
      ledger.expect(expected == x.graph->edges().size(), [&] { return group.name(x.top); });
    }
  });
}

void gkm_suite(Ledger& ledger, const std::shared_ptr<const FlagVariety>& flag,
               const std::vector<SchubertVariety>& xs)
{
  const auto& group = *flag->group();
  const auto& basis = flag->basis();
  ledger.check("descent classes satisfy the Knutson-Tao conditions", [&] {
    for (std::size_t v = 0; v < basis.size(); ++v)
      ledger.expect(check_knutson_tao(basis[v], v).ok(), [&] { return flag->graph()->name(v); });
  });
  ledger.check("descent and solver routes agree", [&] {
    const auto solved = solved_basis(flag->graph());
    for (std::size_t v = 0; v < basis.size(); ++v)
      ledger.expect(solved[v] == basis[v], [&] { return flag->graph()->name(v); });
  });
  ledger.check("restricted classes are Knutson-Tao classes of X_w", [&] {
    for (const auto& x : xs)
      for (std::size_t v = 0; v < x.basis.size(); ++v)
        ledger.expect(check_knutson_tao(x.basis[v], v).ok(),
                      [&] { return group.name(x.top) + " v=" + x.graph->name(v); });
  });
  ledger.check("expansion of basis classes", [&] {
    for (std::size_t v = 0; v < basis.size(); ++v) {
      const auto e = expand_in_basis(basis[v], basis);
      ledger.expect(e.size() == 1 && e.begin()->first == v &&
                        e.begin()->second == Polynomial::constant(group.nvars(), 1),
                    [&] { return flag->graph()->name(v); });
    }
  });
}

void action_suite(Ledger& ledger, const std::shared_ptr<const FlagVariety>& flag,
                  const std::vector<SchubertVariety>& xs)
{
  const auto& group = *flag->group();
  ledger.check("simple reflection formula on every X_w", [&] {
    for (const auto& x : xs)
      for (std::size_t v = 0; v < x.basis.size(); ++v)
        for (std::size_t i = 1; i <= group.rank(); ++i) {
          const auto lhs = expand_in_basis(act(group.simple(i), x.basis[v], x), x.basis);
          ledger.expect(lhs == act_on_schubert_basis(i, v, *x.graph), [&] {
            return group.name(x.top) + " v=" + x.graph->name(v) + " i=" + std::to_string(i);
          });
        }
  });
  ledger.check("action is a group action on the flag basis", [&] {
    const auto& basis = flag->basis();
    for (std::size_t v = 0; v < basis.size(); ++v)
      for (auto u : group.elements())
        for (std::size_t i = 1; i <= group.rank(); ++i) {
          const auto s = group.simple(i);
          ledger.expect(act(s, act(u, basis[v])) == act(group.multiply(s, u), basis[v]),
                        [&] { return group.name(u) + " i=" + std::to_string(i); });
        }
  });
  ledger.check("acted classes are GKM with unitriangular expansions", [&] {
    const auto& basis = flag->basis();
    const auto reach = flag->graph()->reachability();
    for (std::size_t v = 0; v < basis.size(); ++v)
      for (auto u : group.elements()) {
        const auto moved = act(u, basis[v]);
        const auto e = expand_in_basis(moved, basis);
        bool ok = check_gkm(moved).holds && e.count(v) &&
                  e.at(v) == Polynomial::constant(group.nvars(), 1);
        for (const auto& [k, c] : e)
          ok = ok && reach[v][k] &&
               is_homogeneous(c, basis.degree(v) - basis.degree(k));
        ledger.expect(ok, [&] { return group.name(u) + " on " + flag->graph()->name(v); });
      }
  });
}

void ddiff_suite(Ledger& ledger, const std::shared_ptr<const FlagVariety>& flag)
{
  const auto& group = *flag->group();
  const auto& basis = flag->basis();
  const auto& g = *flag->graph();
  ledger.check("D_i on basis classes", [&] {
    for (std::size_t v = 0; v < basis.size(); ++v)
      for (std::size_t i = 1; i <= group.rank(); ++i) {
        const auto d = left_divided_difference(i, basis[v]);
        const auto x = g.element(v);
        const auto expected = group.has_left_descent(x, i)
                                  ? basis[*g.vertex_of(group.left_simple(i, x))]
                                  : EquivariantClass::zero(flag->graph());
        ledger.expect(d == expected, [&] { return g.name(v) + " i=" + std::to_string(i); });
        ledger.expect(left_divided_difference(i, d).is_zero(),
                      [&] { return "D_i D_i at " + g.name(v); });
      }
  });
  ledger.check("expansion-level D_i agrees with the pointwise D_i", [&] {
    const auto n = group.nvars();
    for (std::size_t v = 0; v < basis.size(); ++v)
      for (std::size_t i = 1; i <= group.rank(); ++i) {
        BasisExpansion e;
        accumulate(e, v, Polynomial::variable(n, 1 + v % n) * Polynomial::variable(n, 1 + (v + i) % n));
        if (v > 0)
          accumulate(e, v - 1, Polynomial::variable(n, n) - Polynomial::constant(n, 2));
        const auto direct = expand_in_basis(left_divided_difference(i, reconstruct(e, basis)), basis);
        ledger.expect(direct == divided_difference_expansion(i, e, g),
                      [&] { return g.name(v) + " i=" + std::to_string(i); });
      }
  });
  ledger.check("right divided differences are GKM", [&] {
    for (std::size_t v = 0; v < basis.size(); ++v)
      for (std::size_t i = 1; i <= group.rank(); ++i)
        ledger.expect(check_gkm(right_divided_difference(i, basis[v])).holds,
                      [&] { return g.name(v) + " i=" + std::to_string(i); });
  });
}

void decomposition_suite(Ledger& ledger, const std::shared_ptr<const FlagVariety>& flag,
                         const std::vector<SchubertVariety>& xs)
{
  const auto& group = *flag->group();
  ledger.check("trivial decomposition of every X_w", [&] {
    for (const auto& x : xs) {
      const auto r = decompose(x);
      ledger.expect(r.ok(), [&] { return group.name(x.top); });
    }
  });
}

} // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"coxeter", "graph",         "gkm", "action",
                                              "ddiff",   "decomposition", "all"};
  return names;
}

std::vector<CheckResult> run_suites(const std::shared_ptr<const FlagVariety>& flag,
                                    const std::string& suite)
{
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  std::vector<SchubertVariety> xs;
  if (all || suite == "graph" || suite == "gkm" || suite == "action" || suite == "decomposition")
    xs = all_schubert(flag);
  if (all || suite == "coxeter") {
    Ledger l(out, "coxeter");
    coxeter_suite(l, flag);
  }
  if (all || suite == "graph") {
    Ledger l(out, "graph");
    graph_suite(l, flag, xs);
  }
  if (all || suite == "gkm") {
    Ledger l(out, "gkm");
    gkm_suite(l, flag, xs);
  }
  if (all || suite == "action") {
    Ledger l(out, "action");
    action_suite(l, flag, xs);
  }
  if (all || suite == "ddiff") {
    Ledger l(out, "ddiff");
    ddiff_suite(l, flag);
  }
  if (all || suite == "decomposition") {
    Ledger l(out, "decomposition");
    decomposition_suite(l, flag, xs);
  }
  return out;
}

} // namespace gkmcalc
