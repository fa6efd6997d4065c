#include "cli.hpp"

#include "gkmcalc/action.hpp"
#include "gkmcalc/serialize.hpp"
#include "gkmcalc/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gkmcalc {

namespace {

/// Raised for flag values that parse but make no sense together.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string type = "A:3";
  std::string w;
  std::string format = "json";
  std::string output;
};

void add_variety(CLI::App* cmd, Common& c)
{
  cmd->add_option("--type", c.type, "A:n, B2 or G2")->capture_default_str();
  cmd->add_option("--w", c.w, "top element of X_w (default w0)");
}

void add_output(CLI::App* cmd, Common& c, std::vector<std::string> formats)
{
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--output", c.output,
                  "write to a file; relative paths resolve under $GKMCALC_OUTPUT_DIR");
}

SchubertVariety variety(const Common& c)
{
  if (c.w.empty())
    return open_variety(c.type);
  return open_variety(c.type, c.w);
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path)
{
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

void emit(const std::string& text, const Common& c, std::ostream& out)
{
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path(c.output);
  if (path.is_relative())
    if (const char* dir = std::getenv("GKMCALC_OUTPUT_DIR"); dir && *dir)
      path = std::filesystem::path(dir) / path;
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file)
    throw std::runtime_error("cannot write '" + path.string() + "'");
  file << text;
}

std::string dump(const Json& j)
{
  return j.dump(2) + "\n";
}

std::size_t vertex_arg(const MomentGraph& g, const std::string& name)
{
  if (g.has_group()) {
    const auto x = g.group()->parse(name);
    if (auto v = g.vertex_of(x))
      return *v;
  } else if (auto v = g.index_of(name)) {
    return *v;
  }
  throw UsageError("'" + name + "' is not a vertex of the graph");
}

std::string class_table(const EquivariantClass& c)
{
  const auto& g = *c.graph();
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << g.name(v) << "\t" << c.at(v).to_string(g.variable_prefix()) << "\n";
  return out.str();
}

std::string expansion_table(const BasisExpansion& e, const MomentGraph& g)
{
  std::ostringstream out;
  for (const auto& [v, c] : e)
    out << g.name(v) << "\t" << c.to_string(g.variable_prefix()) << "\n";
  return out.str();
}

// graph ----------------------------------------------------------------------

struct GraphArgs {
  Common c;
  std::string load;
  std::string check;
  std::string mode = "flow";
};

int cmd_graph(const GraphArgs& a, std::ostream& out)
{
  std::shared_ptr<const MomentGraph> g;
  if (!a.load.empty())
    g = std::make_shared<const MomentGraph>(load_external_graph_text(read_file(a.load)));
  else
    g = variety(a.c).graph;

  if (a.check == "axioms") {
    const auto r = validate_axioms(*g);
    Json violations = Json::array();
    for (const auto& v : r.violations)
      violations.push_back({{"kind", to_string(v.kind)},
                            {"vertex", v.vertex ? Json(g->name(*v.vertex)) : Json(nullptr)},
                            {"detail", v.detail}});
    emit(dump({{"ok", r.ok()}, {"violations", violations}}), a.c, out);
    return r.ok() ? 0 : 1;
  }
  if (a.check == "palais-smale") {
    const auto mode = a.mode == "given"     ? PalaisSmaleMode::given_orientation
                      : a.mode == "acyclic" ? PalaisSmaleMode::search_acyclic_orientations
                                            : PalaisSmaleMode::search_flow_orientations;
    const auto r = is_palais_smale(*g, mode);
    Json j = {{"palais_smale", r.holds}, {"mode", a.mode}, {"orientations_checked", r.orientations_checked}};
    if (r.failing_edge) {
      const auto& e = g->edges()[*r.failing_edge];
      const bool flipped = !r.flipped.empty() && r.flipped[*r.failing_edge];
      const auto tail = flipped ? e.head : e.tail;
      const auto head = flipped ? e.tail : e.head;
      j["failing_edge"] = {{"tail", g->name(tail)}, {"head", g->name(head)}};
    }
    if (r.holds && r.covector) {
      Json xi = Json::array();
      for (const auto& q : *r.covector)
        xi.push_back(to_string(q));
      j["covector"] = xi;
    }
    if (r.holds && !r.flipped.empty()) {
      Json flipped = Json::array();
      for (std::size_t k = 0; k < r.flipped.size(); ++k)
        if (r.flipped[k])
          flipped.push_back({{"tail", g->name(g->edges()[k].tail)}, {"head", g->name(g->edges()[k].head)}});
      j["reversed_edges"] = flipped;
    }
    emit(dump(j), a.c, out);
    return r.holds ? 0 : 1;
  }
  if (a.c.format == "dot") {
    emit(graph_to_dot(*g), a.c, out);
    return 0;
  }
  auto j = graph_to_json(*g);
  if (g->has_group())
    j["metadata"]["root_system"] = root_system_to_json(g->group()->root_system());
  emit(dump(j), a.c, out);
  return 0;
}

// class ----------------------------------------------------------------------

struct ClassArgs {
  Common c;
  std::string v;
  std::string route = "restrict";
};

int cmd_class(const ClassArgs& a, std::ostream& out)
{
  auto x = variety(a.c);
  const auto v = vertex_arg(*x.graph, a.v);
  std::optional<EquivariantClass> cls;
  if (a.route == "solve") {
    cls = knutson_tao_class_solve(x.graph, v).cls;
  } else if (a.route == "descent") {
    const auto flag_class = knutson_tao_class_descent(x.flag->graph(), x.graph->element(v));
    cls = restrict_class(flag_class.cls, x.graph);
  } else {
    cls = x.basis[v];
  }
  if (a.c.format == "table")
    emit(class_table(*cls), a.c, out);
  else
    emit(dump(class_to_json(*cls, variety_ref(x), v)), a.c, out);
  return 0;
}

// act ------------------------------------------------------------------------

struct ActArgs {
  Common c;
  std::string perm;
  std::string v;
  std::string class_file;
};

LoadedClass operand(const Common& c, const std::string& v, const std::string& class_file)
{
  if (!class_file.empty()) {
    if (!v.empty())
      throw UsageError("--v and --class are mutually exclusive");
    return class_from_json(read_json(class_file));
  }
  if (v.empty())
    throw UsageError("one of --v or --class is required");
  auto x = variety(c);
  const auto base = vertex_arg(*x.graph, v);
  auto cls = x.basis[base];
  return {std::move(x), std::move(cls), base};
}

int cmd_act(const ActArgs& a, std::ostream& out)
{
  const auto in = operand(a.c, a.v, a.class_file);
  const auto& x = in.variety;
  const auto u = x.group().parse(a.perm);
  const auto result = act(u, in.cls, x);
  const auto expansion = expand_in_basis(result, x.basis);
  if (a.c.format == "table") {
    emit(class_table(result) + "--\n" + expansion_table(expansion, *x.graph), a.c, out);
    return 0;
  }
  const auto ref = variety_ref(x);
  Json j = {{"element", x.group().name(u)},
            {"class", class_to_json(result, ref)},
            {"expansion", expansion_to_json(expansion, *x.graph, ref)}};
  emit(dump(j), a.c, out);
  return 0;
}

// ddiff ----------------------------------------------------------------------

struct DdiffArgs {
  Common c;
  std::string side = "left";
  std::size_t i = 1;
  std::string v;
  std::string class_file;
};

int cmd_ddiff(const DdiffArgs& a, std::ostream& out)
{
  const auto in = operand(a.c, a.v, a.class_file);
  const auto& x = in.variety;
  std::optional<EquivariantClass> result;
  if (a.side == "right") {
    if (x.graph->vertex_count() != x.group().order())
      throw UsageError("the right operator needs the full flag variety (w = w0)");
    result = right_divided_difference(a.i, in.cls);
  } else {
    result = left_divided_difference(a.i, in.cls, x);
  }
  const auto ref = variety_ref(x);
  const bool gkm = check_gkm(*result).holds;
  if (a.c.format == "table") {
    emit(class_table(*result), a.c, out);
    return gkm ? 0 : 1;
  }
  Json j = {{"side", a.side}, {"i", a.i}, {"gkm", gkm}, {"class", class_to_json(*result, ref)}};
  if (gkm)
    j["expansion"] = expansion_to_json(expand_in_basis(*result, x.basis), *x.graph, ref);
  emit(dump(j), a.c, out);
  return gkm ? 0 : 1;
}

// expand ---------------------------------------------------------------------

struct ExpandArgs {
  Common c;
  std::string class_file;
};

int cmd_expand(const ExpandArgs& a, std::ostream& out)
{
  const auto in = class_from_json(read_json(a.class_file));
  const auto gkm = check_gkm(in.cls);
  if (!gkm.holds) {
    const auto& g = *in.cls.graph();
    Json bad = Json::array();
    for (auto k : gkm.failing_edges)
      bad.push_back({{"tail", g.name(g.edges()[k].tail)},
                     {"head", g.name(g.edges()[k].head)},
                     {"label", g.edges()[k].label.to_string(g.variable_prefix())}});
    emit(dump({{"gkm", false}, {"failing_edges", bad}}), a.c, out);
    return 1;
  }
  const auto e = expand_in_basis(in.cls, in.variety.basis);
  if (a.c.format == "table")
    emit(expansion_table(e, *in.variety.graph), a.c, out);
  else
    emit(dump(expansion_to_json(e, *in.variety.graph, variety_ref(in.variety))), a.c, out);
  return 0;
}

// decompose ------------------------------------------------------------------

int cmd_decompose(const Common& c, std::ostream& out)
{
  const auto x = variety(c);
  const auto r = decompose(x);
  const auto& g = *x.graph;
  if (c.format == "json") {
    emit(dump(report_to_json(r, g)), c, out);
    return r.ok() ? 0 : 1;
  }
  std::ostringstream t;
  t << "X_" << r.top << " (" << r.root_system << ")\n";
  t << "vertex\tdegree\tinvariant\tunitriangular\ttrivial_mod_t\n";
  for (const auto& e : r.entries)
    t << g.name(e.vertex) << "\t" << e.degree << "\t" << (e.invariant ? "yes" : "no") << "\t"
      << (e.unitriangular ? "yes" : "no") << "\t" << (e.trivial_mod_t ? "yes" : "no") << "\n";
  t << "multiplicities:";
  for (auto m : r.multiplicities)
    t << " " << m;
  t << "\npoincare:";
  for (auto m : r.poincare)
    t << " " << m;
  t << "\n" << (r.ok() ? "ok" : "FAILED") << "\n";
  emit(t.str(), c, out);
  return r.ok() ? 0 : 1;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  Common c;
  bool type_given = false;
  std::string suite = "all";
  std::size_t max_n = 4;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
  std::vector<std::string> types;
  if (a.type_given)
    types.push_back(a.c.type);
  else {
    for (std::size_t n = 2; n <= a.max_n; ++n)
      types.push_back("A:" + std::to_string(n));
    types.push_back("B2");
    types.push_back("G2");
  }
  std::ostringstream t;
  bool ok = true;
  for (const auto& type : types) {
    auto flag = FlagVariety::create(std::make_shared<const WeylGroup>(RootSystem::parse(type)));
    for (const auto& r : run_suites(flag, a.suite)) {
      ok = ok && r.passed;
      t << (r.passed ? "PASS" : "FAIL") << "  " << type << "  " << r.suite << ": " << r.name << " ("
        << r.cases << " cases)";
      if (!r.passed)
        t << "  first failure: " << r.detail;
      t << "\n";
    }
  }
  t << (ok ? "all checks passed" : "some checks failed") << "\n";
  emit(t.str(), a.c, out);
  return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Equivariant cohomology of Schubert varieties via moment graphs", "gkmcalc"};
  app.require_subcommand(1, 1);

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "build, load, export or check a moment graph");
  add_variety(graph, graph_args.c);
  add_output(graph, graph_args.c, {"json", "dot"});
  graph->add_option("--load", graph_args.load, "read an external graph from JSON");
  graph->add_option("--check", graph_args.check, "run a check instead of exporting")
      ->check(CLI::IsMember({"palais-smale", "axioms"}));
  graph->add_option("--mode", graph_args.mode, "Palais-Smale orientations to consider")
      ->check(CLI::IsMember({"given", "flow", "acyclic"}))
      ->capture_default_str();

  ClassArgs class_args;
  auto* klass = app.add_subcommand("class", "Knutson-Tao class of a vertex");
  add_variety(klass, class_args.c);
  add_output(klass, class_args.c, {"json", "table"});
  klass->add_option("--v", class_args.v, "base vertex")->required();
  klass->add_option("--route", class_args.route, "construction route")
      ->check(CLI::IsMember({"descent", "solve", "restrict"}))
      ->capture_default_str();

  ActArgs act_args;
  auto* act_cmd = app.add_subcommand("act", "Weyl group action on a class");
  add_variety(act_cmd, act_args.c);
  add_output(act_cmd, act_args.c, {"json", "table"});
  act_cmd->add_option("--perm,--u", act_args.perm, "acting element")->required();
  act_cmd->add_option("--v", act_args.v, "act on the basis class of this vertex");
  act_cmd->add_option("--class", act_args.class_file, "act on a class read from JSON");

  DdiffArgs ddiff_args;
  auto* ddiff = app.add_subcommand("ddiff", "left or right divided difference");
  add_variety(ddiff, ddiff_args.c);
  add_output(ddiff, ddiff_args.c, {"json", "table"});
  ddiff->add_option("--side", ddiff_args.side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  ddiff->add_option("--i", ddiff_args.i, "simple index")->required();
  ddiff->add_option("--v", ddiff_args.v, "use the basis class of this vertex");
  ddiff->add_option("--class", ddiff_args.class_file, "class JSON file");

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "expand a class in the Knutson-Tao basis");
  add_output(expand, expand_args.c, {"json", "table"});
  expand->add_option("--class", expand_args.class_file, "class JSON file")->required();

  Common decompose_args;
  auto* decomp = app.add_subcommand("decompose", "trivial-representation decomposition of X_w");
  add_variety(decomp, decompose_args);
  add_output(decomp, decompose_args, {"json", "table"});

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run invariant suites and print a ledger");
  auto* type_opt = verify->add_option("--type", verify_args.c.type, "restrict to one type");
  verify->add_option("--suite", verify_args.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--max-n", verify_args.max_n, "largest S_n when no type is given")
      ->check(CLI::Range(2, 6))
      ->capture_default_str();
  verify->add_option("--output", verify_args.c.output, "write the ledger to a file");

  std::vector<const char*> argv{"gkmcalc"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty())
      err << app.help();
    return 2;
  }

  try {
    if (*graph)
      return cmd_graph(graph_args, out);
    if (*klass)
      return cmd_class(class_args, out);
    if (*act_cmd)
      return cmd_act(act_args, out);
    if (*ddiff)
      return cmd_ddiff(ddiff_args, out);
    if (*expand)
      return cmd_expand(expand_args, out);
    if (*decomp)
      return cmd_decompose(decompose_args, out);
    if (*verify) {
      verify_args.type_given = type_opt->count() > 0;
      return cmd_verify(verify_args, out);
    }
  } catch (const NotDivisible& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const KtSolveError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace gkmcalc
