#include "gkmcalc/serialize.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gkmcalc;
using testing::poly;

TEST_CASE("open_variety and references")
{
  const auto x = open_variety("A:3", "231");
  CHECK(x.graph->vertex_count() == 4);
  CHECK(variety_ref(x) == Json::parse(R"({"type": "A:3", "w": "231"})"));
  const auto y = variety_from_ref(variety_ref(x));
  CHECK(same_graph(*x.graph, *y.graph));

  const auto full = open_variety("B2");
  CHECK(full.graph->vertex_count() == 8);
  CHECK(same_graph(*variety_from_ref(variety_ref(full)).graph, *full.graph));

  CHECK_THROWS_AS(variety_from_ref(Json::parse(R"({"w": "231"})")), ParseError);
  CHECK_THROWS(open_variety("A:3", "1234"));
  CHECK_THROWS(open_variety("E8"));
}

TEST_CASE("graph json round trip")
{
  for (const char* type : {"A:2", "A:3", "A:4", "B2", "G2"}) {
    const auto x = open_variety(type);
    const auto j = graph_to_json(*x.graph);
    CHECK(j.at("metadata").at("kind") == "flag");
    const auto back = load_external_graph(j);
    CHECK(same_graph(*x.graph, back));
    CHECK(back.has_group());
    CHECK(load_external_graph_text(j.dump()).edges().size() == x.graph->edges().size());
  }
  const auto x = open_variety("A:4", "2143");
  const auto back = load_external_graph(graph_to_json(*x.graph));
  CHECK(same_graph(*x.graph, back));
  CHECK(back.kind() == GraphKind::schubert);
}

TEST_CASE("dot export")
{
  const auto x = open_variety("A:3");
  const auto dot = graph_to_dot(*x.graph);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"321\" [label=\"321\\n(13)\"]") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("color=\"black:black\"") != std::string::npos);
  std::size_t arrows = 0;
  for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2))
    ++arrows;
  CHECK(arrows == 9);
  CHECK(graph_to_dot(*x.graph) == dot);
}

TEST_CASE("class json round trip")
{
  const auto x = open_variety("A:3", "231");
  const auto v = *x.graph->index_of("213");
  const auto j = class_to_json(x.basis[v], variety_ref(x), v);
  CHECK(j.at("base") == "213");
  CHECK(j.at("localizations").at("231") == "t1 - t2");
  CHECK(j.at("localizations").at("123") == "0");
  const auto back = class_from_json(j);
  CHECK(back.base == v);
  CHECK(back.cls.localizations() == x.basis[v].localizations());

  std::mt19937 rng(37);
  for (const char* type : {"A:4", "B2", "G2"}) {
    const auto y = open_variety(type);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Polynomial> loc;
      for (std::size_t k = 0; k < y.graph->vertex_count(); ++k)
        loc.push_back(testing::random_polynomial(rng, y.graph->nvars(), 3));
      const EquivariantClass c(y.graph, loc);
      const auto r = class_from_json(class_to_json(c, variety_ref(y)));
      CHECK(r.cls.localizations() == loc);
      CHECK_FALSE(r.base.has_value());
    }
  }

  auto bad = j;
  bad["localizations"].erase("231");
  CHECK_THROWS_AS(class_from_json(bad), ParseError);
  bad = j;
  bad["localizations"]["231"] = "t1 +";
  CHECK_THROWS_AS(class_from_json(bad), ParseError);
  bad = j;
  bad["localizations"]["999"] = "0";
  CHECK_THROWS_AS(class_from_json(bad), ParseError);
}

TEST_CASE("expansion json round trip")
{
  const auto x = open_variety("A:3");
  const BasisExpansion e{{*x.graph->index_of("123"), poly("t2 - t1")}, {*x.graph->index_of("213"), poly("1")}};
  const auto j = expansion_to_json(e, *x.graph, variety_ref(x));
  CHECK(j.at("coefficients").at("123") == "-t1 + t2");
  CHECK(j.at("coefficients").at("213") == "1");
  CHECK(expansion_from_json(j, *x.graph) == e);
  CHECK(expansion_from_json(expansion_to_json({}, *x.graph, variety_ref(x)), *x.graph).empty());
}

TEST_CASE("report and root system json")
{
  const auto x = open_variety("A:3", "231");
  const auto j = report_to_json(decompose(x), *x.graph);
  CHECK(j.at("multiplicities") == Json::array({1, 2, 1}));
  CHECK(j.at("poincare") == Json::array({1, 2, 1}));
  CHECK(j.at("ok") == true);
  CHECK(j.at("entries").size() == 4);
  CHECK(j.at("entries")[0].at("generator_invariance") == Json::array({true, true}));

  const auto rs = root_system_to_json(RootSystem::g2());
  CHECK(rs.at("name") == "G2");
  CHECK(rs.at("rank") == 2);
  CHECK(rs.at("positive_roots").size() == 6);
  CHECK(rs.at("cartan").size() == 2);
}
