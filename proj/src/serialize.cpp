#include "gkmcalc/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gkmcalc {

namespace {

const Json& field(const Json& j, const char* key)
{
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key)
{
  const auto& f = field(j, key);
  if (!f.is_string())
    throw ParseError(std::string("field '") + key + "' must be a string");
  return f.get<std::string>();
}

Polynomial parse_text(const std::string& text, std::size_t nvars)
{
  try {
    return parse_polynomial(text, nvars);
  } catch (const std::invalid_argument& e) {
    throw ParseError("bad polynomial '" + text + "': " + e.what());
  }
}

std::size_t vertex_by_name(const MomentGraph& g, const std::string& name)
{
  auto v = g.index_of(name);
  if (!v)
    throw ParseError("unknown vertex '" + name + "'");
  return *v;
}

} // namespace

Json polynomial_to_json(const Polynomial& p, std::string_view prefix)
{
  Json terms = Json::array();
  for (const auto& [exp, c] : p.terms()) {
    Json e = Json::array();
    for (auto k : exp)
      e.push_back(k);
    terms.push_back({{"exp", e}, {"coeff", to_string(c)}});
  }
  return {{"n", p.nvars()}, {"terms", terms}, {"text", p.to_string(prefix)}};
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars)
{
  if (j.is_string())
    return parse_text(j.get<std::string>(), nvars);
  if (!j.is_object())
    throw ParseError("polynomial must be a string or an object");
  const auto& n = field(j, "n");
  if (!n.is_number_unsigned())
    throw ParseError("field 'n' must be a non-negative integer");
  const auto dim = n.get<std::size_t>();
  Polynomial p(dim);
  for (const auto& t : field(j, "terms")) {
    const auto& e = field(t, "exp");
    if (!e.is_array() || e.size() != dim)
      throw ParseError("exponent length differs from 'n'");
    Exponent exp;
    for (const auto& k : e) {
      if (!k.is_number_unsigned() || k.get<unsigned>() > 0xFFFF)
        throw ParseError("exponents must be small non-negative integers");
      exp.push_back(static_cast<std::uint16_t>(k.get<unsigned>()));
    }
    Rational c;
    try {
      c = parse_rational(string_field(t, "coeff"));
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what());
    }
    p.add_term(exp, c);
  }
  return p;
}

SchubertVariety open_variety(std::string_view type, std::optional<std::string_view> w)
{
  auto group = std::make_shared<const WeylGroup>(RootSystem::parse(type));
  auto flag = FlagVariety::create(group);
  const auto top = w ? group->parse(*w) : group->longest();
  return schubert_variety(flag, top);
}

Json variety_ref(const SchubertVariety& x)
{
  return {{"type", x.group().root_system().name()}, {"w", x.group().name(x.top)}};
}

SchubertVariety variety_from_ref(const Json& ref)
{
  const auto type = string_field(ref, "type");
  const auto w = string_field(ref, "w");
  try {
    return open_variety(type, w);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json graph_to_json(const MomentGraph& g)
{
  Json vertices = Json::array();
  for (const auto& name : g.names())
    vertices.push_back(name);
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"tail", g.name(e.tail)},
                     {"head", g.name(e.head)},
                     {"label", e.label.to_string(g.variable_prefix())}});
  Json meta = {{"kind", to_string(g.kind())}, {"nvars", g.nvars()}, {"prefix", g.variable_prefix()}};
  if (g.has_group()) {
    meta["type"] = g.group()->root_system().name();
    if (g.top())
      meta["top"] = g.group()->name(*g.top());
  }
  return {{"vertices", vertices}, {"edges", edges}, {"metadata", meta}};
}

MomentGraph load_external_graph(const Json& j)
{
  if (!j.is_object())
    throw ParseError("graph description must be a JSON object");
  const auto& vs = field(j, "vertices");
  const auto& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array())
    throw ParseError("'vertices' and 'edges' must be arrays");
  const Json meta = j.contains("metadata") ? j.at("metadata") : Json::object();

  std::vector<std::string> names;
  for (const auto& v : vs) {
    if (!v.is_string())
      throw ParseError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < names.size(); ++k)
    if (!index.emplace(names[k], k).second)
      throw ParseError("duplicate vertex '" + names[k] + "'");

  std::size_t nvars = 0;
  std::string prefix = "t";
  if (meta.contains("nvars") && meta.at("nvars").is_number_unsigned())
    nvars = meta.at("nvars").get<std::size_t>();
  if (meta.contains("prefix") && meta.at("prefix").is_string())
    prefix = meta.at("prefix").get<std::string>();
  std::vector<std::string> label_text;
  for (const auto& e : es) {
    label_text.push_back(string_field(e, "label"));
    nvars = std::max(nvars, max_variable_index(label_text.back()));
    if (!meta.contains("prefix") && label_text.back().find('a') != std::string::npos)
      prefix = "a";
  }
  nvars = std::max<std::size_t>(nvars, 1);

  std::vector<MomentEdge> edges;
  for (std::size_t k = 0; k < es.size(); ++k) {
    const auto tail = string_field(es[k], "tail");
    const auto head = string_field(es[k], "head");
    auto t = index.find(tail);
    auto h = index.find(head);
    if (t == index.end() || h == index.end())
      throw ParseError("edge " + tail + " -> " + head + " has an endpoint outside the vertex set");
    try {
      edges.push_back({t->second, h->second, LinearForm(parse_text(label_text[k], nvars))});
    } catch (const std::invalid_argument& e) {
      throw ParseError("edge label '" + label_text[k] + "' is not a nonzero linear form");
    }
  }
  MomentGraph g(nvars, prefix, names, std::move(edges));

  if (meta.contains("type") && meta.at("type").is_string()) {
    try {
      auto group = std::make_shared<const WeylGroup>(RootSystem::parse(meta.at("type").get<std::string>()));
      if (group->nvars() == nvars) {
        std::vector<WeylElement> elems;
        for (const auto& name : names)
          elems.push_back(group->parse(name));
        GraphKind kind = GraphKind::external;
        const auto k = meta.value("kind", std::string("external"));
        if (k == "flag")
          kind = GraphKind::flag;
        else if (k == "schubert")
          kind = GraphKind::schubert;
        std::optional<WeylElement> top;
        if (meta.contains("top") && meta.at("top").is_string())
          top = group->parse(meta.at("top").get<std::string>());
        g.attach_group(group, std::move(elems), kind, top);
      }
    } catch (const std::invalid_argument&) {
      // Names that are not group elements leave the graph external.
    }
  }
  return g;
}

MomentGraph load_external_graph_text(std::string_view text)
{
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return load_external_graph(j);
}

bool same_graph(const MomentGraph& a, const MomentGraph& b)
{
  if (a.nvars() != b.nvars() || a.names() != b.names() || a.kind() != b.kind() ||
      a.edges().size() != b.edges().size())
    return false;
  for (std::size_t k = 0; k < a.edges().size(); ++k) {
    const auto& x = a.edges()[k];
    const auto& y = b.edges()[k];
    if (x.tail != y.tail || x.head != y.head || !(x.label == y.label))
      return false;
  }
  return true;
}

std::string graph_to_dot(const MomentGraph& g)
{
  static const char* styles[] = {"style=solid", "style=dashed", "color=\"black:black\"",
                                 "style=dotted", "style=bold"};
  const auto& prefix = g.variable_prefix();
  std::vector<std::string> labels;
  for (const auto& e : g.edges())
    labels.push_back(e.label.to_string(prefix));
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto style_of = [&](const std::string& label) {
    const auto k = std::lower_bound(labels.begin(), labels.end(), label) - labels.begin();
    return styles[static_cast<std::size_t>(k) % std::size(styles)];
  };

  std::ostringstream out;
  out << "digraph moment_graph {\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < labels.size(); ++k)
    out << "  // " << style_of(labels[k]) << ": " << labels[k] << "\n";
  const bool cycles = g.has_group() && g.group()->root_system().is_type_a();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.name(v) << "\" [label=\"" << g.name(v);
    if (cycles)
      out << "\\n" << g.group()->permutation(g.element(v))->to_cycle_string();
    out << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    const auto label = e.label.to_string(prefix);
    out << "  \"" << g.name(e.tail) << "\" -> \"" << g.name(e.head) << "\" [label=\"" << label
        << "\", " << style_of(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json class_to_json(const EquivariantClass& c, const Json& graph_ref, std::optional<std::size_t> base)
{
  const auto& g = *c.graph();
  Json loc = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    loc[g.name(v)] = c.at(v).to_string(g.variable_prefix());
  Json out = {{"graph_ref", graph_ref}};
  out["base"] = base ? Json(g.name(*base)) : Json(nullptr);
  out["localizations"] = loc;
  return out;
}

LoadedClass class_from_json(const Json& j)
{
  auto x = variety_from_ref(field(j, "graph_ref"));
  const auto& g = *x.graph;
  const auto& loc = field(j, "localizations");
  if (!loc.is_object())
    throw ParseError("'localizations' must be an object");
  std::vector<std::optional<Polynomial>> values(g.vertex_count());
  for (const auto& [name, value] : loc.items())
    values[vertex_by_name(g, name)] = polynomial_from_json(value, g.nvars());
  std::vector<Polynomial> polys;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (!values[v])
      throw ParseError("no localization for vertex '" + g.name(v) + "'");
    polys.push_back(std::move(*values[v]));
  }
  std::optional<std::size_t> base;
  if (j.contains("base") && j.at("base").is_string())
    base = vertex_by_name(g, j.at("base").get<std::string>());
  EquivariantClass cls(x.graph, std::move(polys));
  return {std::move(x), std::move(cls), base};
}

Json expansion_to_json(const BasisExpansion& e, const MomentGraph& g, const Json& graph_ref)
{
  Json coeffs = Json::object();
  for (const auto& [v, c] : e)
    coeffs[g.name(v)] = c.to_string(g.variable_prefix());
  return {{"graph_ref", graph_ref}, {"coefficients", coeffs}};
}

BasisExpansion expansion_from_json(const Json& j, const MomentGraph& g)
{
  const auto& coeffs = field(j, "coefficients");
  if (!coeffs.is_object())
    throw ParseError("'coefficients' must be an object");
  BasisExpansion out;
  for (const auto& [name, value] : coeffs.items())
    accumulate(out, vertex_by_name(g, name), polynomial_from_json(value, g.nvars()));
  return out;
}

Json report_to_json(const DecompositionReport& r, const MomentGraph& g)
{
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json coeffs = Json::object();
    for (const auto& [v, c] : e.averaged)
      coeffs[g.name(v)] = c.to_string(g.variable_prefix());
    entries.push_back({{"vertex", g.name(e.vertex)},
                       {"degree", e.degree},
                       {"invariant", e.invariant},
                       {"generator_invariance", e.generator_invariance},
                       {"unitriangular", e.unitriangular},
                       {"trivial_mod_t", e.trivial_mod_t},
                       {"averaged", coeffs}});
  }
  return {{"type", r.root_system},
          {"w", r.top},
          {"multiplicities", r.multiplicities},
          {"poincare", r.poincare},
          {"ok", r.ok()},
          {"entries", entries}};
}

Json root_system_to_json(const RootSystem& rs)
{
  Json cartan = Json::array();
  for (Eigen::Index i = 0; i < rs.cartan().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < rs.cartan().cols(); ++j)
      row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  Json roots = Json::array();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const auto& c = rs.simple_coordinates(k);
    roots.push_back(std::vector<int>(c.data(), c.data() + c.size()));
  }
  return {{"name", rs.name()}, {"rank", rs.rank()}, {"cartan", cartan}, {"positive_roots", roots}};
}

} // namespace gkmcalc
