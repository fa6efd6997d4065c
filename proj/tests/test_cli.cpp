#include "cli.hpp"
#include "gkmcalc/serialize.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gkmcalc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name)
{
  auto dir = std::filesystem::temp_directory_path() / ("gkmcalc_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::filesystem::path& path, const std::string& text)
{
  std::ofstream(path) << text;
  return path.string();
}

std::string hexagon_path()
{
  return std::string(GKMCALC_TEST_DATA) + "/hexagon.json";
}

} // namespace

TEST_CASE("graph")
{
  const auto r = run({"graph", "--type", "A:3", "--w", "321", "--format", "dot"});
  CHECK(r.code == 0);
  std::size_t nodes = 0, edges = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("->") != std::string::npos)
      ++edges;
    else if (line.find("[label=") != std::string::npos)
      ++nodes;
  }
  CHECK(nodes == 6);
  CHECK(edges == 9);

  const auto j = run({"graph", "--type", "A:3", "--w", "231"});
  CHECK(j.code == 0);
  const auto g = load_external_graph_text(j.out);
  CHECK(g.vertex_count() == 4);
  CHECK(same_graph(g, *open_variety("A:3", "231").graph));

  CHECK(run({"graph", "--type", "B2"}).code == 0);
  CHECK(run({"graph", "--type", "G2", "--w", "s1s2"}).code == 0);
}

TEST_CASE("graph checks")
{
  CHECK(run({"graph", "--type", "A:4", "--check", "palais-smale"}).code == 0);
  CHECK(run({"graph", "--type", "A:4", "--check", "axioms"}).code == 0);
  CHECK(run({"graph", "--load", hexagon_path(), "--check", "axioms"}).code == 0);

  const auto flow = run({"graph", "--load", hexagon_path(), "--check", "palais-smale", "--mode", "flow"});
  CHECK(flow.code == 1);
  CHECK(Json::parse(flow.out).at("palais_smale") == false);
  const auto acyclic = run({"graph", "--load", hexagon_path(), "--check", "palais-smale", "--mode", "acyclic"});
  CHECK(acyclic.code == 0);
  CHECK(Json::parse(acyclic.out).at("palais_smale") == true);

  const auto dir = scratch_dir("checks");
  const auto cyc = write_file(dir / "cycle.json", R"({"vertices": ["a", "b"], "edges": [
      {"tail": "a", "head": "b", "label": "t1 - t2"},
      {"tail": "b", "head": "a", "label": "t2 - t1"}]})");
  CHECK(run({"graph", "--load", cyc, "--check", "axioms"}).code == 1);
  const auto dangling = write_file(dir / "dangling.json", R"({"vertices": ["a"], "edges": [
      {"tail": "a", "head": "b", "label": "t1 - t2"}]})");
  const auto d = run({"graph", "--load", dangling});
  CHECK(d.code == 2);
  CHECK(d.err.find("error:") != std::string::npos);
}

TEST_CASE("class")
{
  const auto r = run({"class", "--type", "A:3", "--w", "321", "--v", "213", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("base") == "213");
  const auto& loc = j.at("localizations");
  CHECK(loc.at("123") == "0");
  CHECK(loc.at("213") == "t1 - t2");
  CHECK(loc.at("132") == "0");
  CHECK(loc.at("231") == "t1 - t2");
  CHECK(loc.at("312") == "t1 - t3");
  CHECK(loc.at("321") == "t1 - t3");

  for (const char* route : {"descent", "solve", "restrict"}) {
    const auto other = run({"class", "--type", "A:3", "--v", "213", "--route", route});
    CHECK(other.code == 0);
    CHECK(Json::parse(other.out).at("localizations") == loc);
  }
  CHECK(run({"class", "--type", "A:3", "--v", "(12)", "--format", "table"}).code == 0);
  CHECK(run({"class", "--type", "G2", "--v", "s2s1"}).code == 0);
}

TEST_CASE("act, ddiff and expand")
{
  const auto a = run({"act", "--type", "A:3", "--perm", "213", "--v", "213"});
  CHECK(a.code == 0);
  const auto j = Json::parse(a.out);
  CHECK(j.at("expansion").at("coefficients") == Json::parse(R"({"123": "-t1 + t2", "213": "1"})"));

  const auto s2 = Json::parse(run({"act", "--perm", "132", "--v", "213"}).out);
  CHECK(s2.at("expansion").at("coefficients") == Json::parse(R"({"213": "1"})"));

  // The emitted class re-parses and expands to the same coefficients.
  const auto dir = scratch_dir("act");
  const auto cls = write_file(dir / "cls.json", j.at("class").dump());
  const auto e = run({"expand", "--class", cls});
  CHECK(e.code == 0);
  CHECK(Json::parse(e.out).at("coefficients") == j.at("expansion").at("coefficients"));
  const auto acted = run({"act", "--perm", "321", "--class", cls});
  CHECK(acted.code == 0);

  const auto d = run({"ddiff", "--side", "left", "--i", "1", "--v", "213"});
  CHECK(d.code == 0);
  for (const auto& [name, value] : Json::parse(d.out).at("class").at("localizations").items())
    CHECK(value == "1");
  const auto r = run({"ddiff", "--side", "right", "--i", "1", "--v", "213"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("gkm") == true);

  // Schubert variety: the lifted action.
  CHECK(run({"act", "--w", "231", "--perm", "321", "--v", "132"}).code == 0);
  CHECK(run({"ddiff", "--w", "231", "--i", "2", "--v", "231"}).code == 0);

  // A class that is not GKM.
  auto bad = Json::parse(run({"class", "--v", "213"}).out);
  bad["localizations"]["123"] = "t3";
  const auto badfile = write_file(dir / "bad.json", bad.dump());
  const auto x = run({"expand", "--class", badfile});
  CHECK(x.code == 1);
  const auto report = Json::parse(x.out);
  CHECK(report.at("gkm") == false);
  CHECK(report.at("failing_edges")[0] == Json::parse(R"({"tail": "213", "head": "123", "label": "t1 - t2"})"));
}

TEST_CASE("decompose")
{
  const auto r = run({"decompose", "--type", "A:3", "--w", "321", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("multiplicities") == Json::array({1, 2, 2, 1}));
  CHECK(j.at("poincare") == Json::array({1, 2, 2, 1}));
  CHECK(j.at("ok") == true);
  const auto t = run({"decompose", "--type", "A:3", "--w", "231", "--format", "table"});
  CHECK(t.code == 0);
  CHECK(t.out.find("multiplicities: 1 2 1") != std::string::npos);
}

TEST_CASE("verify")
{
  const auto r = run({"verify", "--type", "A:3", "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(run({"verify", "--max-n", "3", "--suite", "coxeter"}).code == 0);
  CHECK(run({"verify", "--max-n", "9"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("usage errors")
{
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"class", "--type", "A:3"}).code == 2);
  CHECK(run({"class", "--type", "A:3", "--v", "4321"}).code == 2);
  CHECK(run({"class", "--type", "E8", "--v", "e"}).code == 2);
  CHECK(run({"graph", "--format", "svg"}).code == 2);
  CHECK(run({"graph", "--load", "/nonexistent/graph.json"}).code != 0);
  CHECK(run({"act", "--perm", "213"}).code == 2);
  CHECK(run({"class", "--w", "231", "--v", "321"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic")
{
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"graph", "--type", "A:4", "--format", "dot"},
        std::vector<std::string>{"class", "--type", "B2", "--v", "s1s2"},
        std::vector<std::string>{"decompose", "--type", "A:4", "--w", "3412"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output directory")
{
  const auto dir = scratch_dir("outdir");
  ::setenv("GKMCALC_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = run({"graph", "--type", "A:3", "--format", "dot", "--output", "sub/flag.dot"});
  ::unsetenv("GKMCALC_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "sub" / "flag.dot");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run({"graph", "--type", "A:3", "--format", "dot"}).out);

  const auto abs = dir / "abs.json";
  CHECK(run({"decompose", "--output", abs.string()}).code == 0);
  CHECK(std::filesystem::exists(abs));
}
