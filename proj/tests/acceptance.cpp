// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fail.

#include "cli.hpp"
#include "gkmcalc/action.hpp"
#include "gkmcalc/serialize.hpp"
#include "gkmcalc/verify.hpp"

#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace gkmcalc;

namespace {

// Wall-clock limits in seconds.
constexpr double small_classes_limit = 1.0;
constexpr double eq1_limit = 60.0;
constexpr double palais_smale_limit = 10.0;
constexpr double properties_limit = 120.0;
// Random cases for the divided difference formula.
constexpr int ddiff_random_cases = 120;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string note;

  void expect(bool cond, const std::string& what)
  {
    ++checks;
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::shared_ptr<const FlagVariety> flag_of(const std::string& type)
{
  return FlagVariety::create(std::make_shared<const WeylGroup>(RootSystem::parse(type)));
}

Json cli_json(const std::vector<std::string>& args)
{
  std::ostringstream out, err;
  if (run_cli(args, out, err) != 0)
    throw std::runtime_error("cli failed: " + err.str());
  return Json::parse(out.str());
}

BasisExpansion delta(std::size_t v, std::size_t nvars)
{
  return {{v, Polynomial::constant(nvars, 1)}};
}

// Classes of e, (12) and (23) on the n = 3 flag variety, vertex by vertex.
Outcome small_classes()
{
  Outcome o;
  const std::map<std::string, std::map<std::string, std::string>> expected{
    {"e", {{"123", "1"}, {"213", "1"}, {"132", "1"}, {"231", "1"}, {"312", "1"}, {"321", "1"}}},
    {"(12)", {{"123", "0"}, {"213", "t1 - t2"}, {"132", "0"}, {"231", "t1 - t2"}, {"312", "t1 - t3"}, {"321", "t1 - t3"}}},
    {"(23)", {{"123", "0"}, {"213", "0"}, {"132", "t2 - t3"}, {"231", "t1 - t3"}, {"312", "t2 - t3"}, {"321", "t1 - t3"}}},
  };
  for (const auto& [v, locs] : expected) {
    const auto j = cli_json({"class", "--type", "A:3", "--w", "321", "--v", v, "--format", "json"});
    const auto& got = j.at("localizations");
    o.expect(got.size() == locs.size(), "vertex count for " + v);
    for (const auto& [u, text] : locs)
      o.expect(got.at(u) == text, "class " + v + " at " + u);
  }
  return o;
}

Outcome simple_action()
{
  Outcome o;
  const auto flag = flag_of("A:3");
  const auto& g = flag->graph();
  const auto& group = *flag->group();
  const auto v12 = *g->index_of("213");
  const auto& omega = flag->basis()[v12];

  const std::map<std::string, std::string> right{{"123", "t2 - t1"}, {"213", "0"},       {"132", "t2 - t1"},
                                                 {"231", "0"},       {"312", "t2 - t3"}, {"321", "t2 - t3"}};
  const auto acted = act(group.simple(1), omega);
  for (const auto& [u, text] : right)
    o.expect(acted.at(*g->index_of(u)) == parse_polynomial(text, 3), "s1 [Omega_(12)] at " + u);
  o.expect(expand_in_basis(acted, flag->basis()) ==
             BasisExpansion{{v12, parse_polynomial("1", 3)}, {*g->index_of("123"), parse_polynomial("t2 - t1", 3)}},
           "expansion of s1 [Omega_(12)]");
  o.expect(act(group.simple(2), omega) == omega, "s2 fixes [Omega_(12)]");
  return o;
}

Outcome eq1()
{
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto flag = flag_of("A:" + std::to_string(n));
    const auto& group = *flag->group();
    for (auto w : group.elements()) {
      const auto x = schubert_variety(flag, w);
      const auto& g = *x.graph;
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 1; i < n; ++i) {
          // Right-hand side written out from the formula.
          BasisExpansion rhs = delta(v, n);
          const auto siv = group.left_simple(i, g.element(v));
          if (group.length(siv) < group.length(g.element(v)))
            rhs.emplace(*g.vertex_of(siv), LinearForm::difference(n, i + 1, i).polynomial());
          const auto lhs = expand_in_basis(act(group.simple(i), x.basis[v], x), x.basis);
          o.expect(lhs == rhs, "X_" + group.name(w) + " v=" + g.name(v) + " i=" + std::to_string(i));
        }
    }
  }
  return o;
}

Outcome routes()
{
  Outcome o;
  for (const char* type : {"A:2", "A:3", "A:4", "B2", "G2"}) {
    const auto flag = flag_of(type);
    const auto& g = flag->graph();
    const auto descent = descent_basis(g);
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
      const auto by_descent = knutson_tao_class_descent(g, g->element(v));
      const auto by_solver = knutson_tao_class_solve(g, v);
      const std::string tag = std::string(type) + " v=" + g->name(v);
      o.expect(by_descent.cls == by_solver.cls, "routes differ at " + tag);
      o.expect(descent[v] == by_solver.cls, "basis builder differs at " + tag);
      const auto kt = check_knutson_tao(by_solver.cls, v);
      o.expect(kt.product_at_base && kt.homogeneous && kt.vanishes_off_upset, "KT conditions at " + tag);
      o.expect(check_gkm(by_solver.cls).holds, "GKM at " + tag);
    }
  }
  return o;
}

Outcome decomposition()
{
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto flag = flag_of("A:" + std::to_string(n));
    const auto& group = *flag->group();
    for (auto w : group.elements()) {
      const auto x = schubert_variety(flag, w);
      const auto r = decompose(x);
      const std::string tag = "X_" + group.name(w);
      std::vector<std::size_t> counts(static_cast<std::size_t>(group.length(w)) + 1, 0);
      for (auto v : group.lower_interval(w))
        ++counts[static_cast<std::size_t>(group.length(v))];
      for (const auto& e : r.entries) {
        o.expect(e.invariant && std::all_of(e.generator_invariance.begin(), e.generator_invariance.end(),
                                            [](bool b) { return b; }),
                 tag + " invariance at " + x.graph->name(e.vertex));
        o.expect(e.unitriangular, tag + " unitriangular at " + x.graph->name(e.vertex));
        o.expect(e.trivial_mod_t, tag + " mod t at " + x.graph->name(e.vertex));
      }
      o.expect(r.multiplicities == counts, tag + " multiplicities");
      if (n == 3 && w == group.longest())
        o.expect(r.multiplicities == std::vector<std::size_t>{1, 2, 2, 1}, "(1,2,2,1) for S_3");
    }
  }
  return o;
}

Outcome palais_smale()
{
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto group = std::make_shared<const WeylGroup>(RootSystem::type_a(n));
    for (auto w : group->elements())
      o.expect(is_palais_smale(build_schubert_moment_graph(group, w), PalaisSmaleMode::given_orientation).holds,
               "X_" + group->name(w));
  }
  const auto hexagon = load_external_graph_text(R"({
    "vertices": ["321", "231", "312", "213", "132", "123"],
    "edges": [
      {"tail": "321", "head": "231", "label": "t2 - t3"},
      {"tail": "321", "head": "312", "label": "t1 - t2"},
      {"tail": "231", "head": "213", "label": "t1 - t3"},
      {"tail": "312", "head": "132", "label": "t1 - t3"},
      {"tail": "213", "head": "123", "label": "t1 - t2"},
      {"tail": "132", "head": "123", "label": "t2 - t3"}]})");
  o.expect(validate_axioms(hexagon).ok(), "hexagon axioms");
  o.expect(!is_palais_smale(hexagon, PalaisSmaleMode::search_flow_orientations).holds, "hexagon fails");
  return o;
}

Outcome general_type()
{
  Outcome o;
  for (const char* type : {"B2", "G2"}) {
    const auto flag = flag_of(type);
    const auto& g = flag->graph();
    const auto& group = *flag->group();
    const auto& rs = group.root_system();
    for (std::size_t w = 0; w < g->vertex_count(); ++w)
      for (std::size_t i = 1; i <= rs.rank(); ++i) {
        const auto siw = group.left_simple(i, g->element(w));
        if (group.length(siw) > group.length(g->element(w)))
          continue;
        const auto alpha = rs.form(rs.simple_root(i)).polynomial();
        const auto expected = flag->basis()[w] - alpha * flag->basis()[*g->vertex_of(siw)];
        o.expect(act(group.simple(i), flag->basis()[w]) == expected,
                 std::string(type) + " s" + std::to_string(i) + " on " + g->name(w));
      }
    for (auto w : group.elements())
      for (const auto& alpha : rs.positive_roots()) {
        const auto sw = group.multiply(group.reflection(alpha), w);
        if (group.length(sw) != group.length(w) + 1)
          continue;
        const auto sub = rs.form(alpha).hyperplane_substitution();
        auto residue = [&](const RootVector& beta) { return substitute(rs.form(beta).polynomial(), sub); };
        std::multiset<Polynomial> lhs, rhs{Polynomial(rs.nvars())};
        for (auto k : group.inversions(sw))
          lhs.insert(residue(rs.positive_roots()[k]));
        for (auto k : group.inversions(w))
          rhs.insert(residue(rs.reflect(alpha, rs.positive_roots()[k])));
        o.expect(lhs == rhs, std::string(type) + " inversions of " + group.name(sw));
      }
  }
  return o;
}

Outcome divided_differences()
{
  Outcome o;
  std::mt19937 rng(41);
  std::vector<std::shared_ptr<const FlagVariety>> flags{flag_of("A:2"), flag_of("A:3"), flag_of("A:4")};
  int cases = 0;
  while (cases < ddiff_random_cases)
    for (const auto& flag : flags) {
      const auto& g = flag->graph();
      BasisExpansion e;
      for (std::size_t v = 0; v < g->vertex_count(); ++v)
        accumulate(e, v, testing::random_polynomial(rng, g->nvars(), 2, 2));
      const auto c = reconstruct(e, flag->basis());
      for (std::size_t i = 1; i < g->nvars(); ++i)
        o.expect(divided_difference_expansion(i, e, *g) == expand_in_basis(left_divided_difference(i, c), flag->basis()),
                 "formula on a random class");
      ++cases;
    }
  for (const auto& flag : flags)
    for (std::size_t v = 0; v < flag->graph()->vertex_count(); ++v)
      for (std::size_t i = 1; i < flag->graph()->nvars(); ++i)
        o.expect(check_gkm(right_divided_difference(i, flag->basis()[v])).holds, "right operator GKM");

  const auto flag = flag_of("A:3");
  const auto& group = *flag->group();
  const auto top = group.from_word({1, 2});
  const auto x = schubert_variety(flag, top);
  const auto& g = *x.graph;
  const auto closure = divided_difference_closure(delta(*g.vertex_of(top), 3), g);
  auto reached = [&](WeylElement v) {
    return std::find(closure.classes.begin(), closure.classes.end(), delta(*g.vertex_of(v), 3)) !=
           closure.classes.end();
  };
  o.expect(closure.reaches_zero, "zero reached");
  o.expect(closure.classes.size() == 3, "three nonzero classes");
  o.expect(reached(top) && reached(group.identity()), "top and e reached");
  o.expect(reached(group.simple(1)) != reached(group.simple(2)), "exactly one of s1, s2");
  o.note = o.ok ? std::to_string(cases) + " random expansions" : o.note;
  return o;
}

Outcome properties()
{
  Outcome o;
  for (const char* type : {"A:2", "A:3", "A:4", "B2", "G2"})
    for (const auto& r : run_suites(flag_of(type), "all")) {
      o.checks += r.cases;
      if (!r.passed && o.ok) {
        o.ok = false;
        o.note = std::string(type) + " " + r.suite + ": " + r.name + " " + r.detail;
      }
    }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  double limit; // seconds; 0 means none
};

} // namespace

int main()
{
  const std::vector<Criterion> criteria{
    {1, "basis classes of e, (12), (23) for n = 3", small_classes, small_classes_limit},
    {2, "s1 and s2 acting on [Omega_(12)]", simple_action, 0},
    {3, "simple reflections on the basis, n <= 4", eq1, eq1_limit},
    {4, "descent and solver routes agree", routes, 0},
    {5, "trivial decomposition of every X_w, n <= 4", decomposition, 0},
    {6, "Palais-Smale", palais_smale, palais_smale_limit},
    {7, "B2 and G2", general_type, 0},
    {8, "divided differences", divided_differences, 0},
    {9, "property suites, n <= 4", properties, properties_limit},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool pass = o.ok;
    if (c.limit > 0 && secs >= c.limit) {
      pass = false;
      o.note = "over the " + std::to_string(c.limit) + " s limit";
    }
    all = all && pass;
    std::printf("%s  %d  %s  (%zu checks, %.3f s%s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, o.checks, secs,
                c.limit > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit)) + " s").c_str() : "",
                o.note.empty() ? "" : "  ", o.note.c_str());
  }
  return all ? 0 : 1;
}
