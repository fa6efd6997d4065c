#pragma once

#include "gkmcalc/action.hpp"
#include "gkmcalc/equivariant_class.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gkmcalc {

using Json = nlohmann::ordered_json;

/// Malformed JSON artifact or textual input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Polynomials ----------------------------------------------------------------

/// {"n": 3, "terms": [{"exp": [1,0,0], "coeff": "1"}, ...], "text": "t1 - t2"}
Json polynomial_to_json(const Polynomial& p, std::string_view prefix = "t");
/// Accepts the object form or a plain string; `nvars` is needed for strings.
Polynomial polynomial_from_json(const Json& j, std::size_t nvars);

// Varieties ------------------------------------------------------------------

/// Flag variety of "A:n", "B2" or "G2" together with X_w; w defaults to w0.
SchubertVariety open_variety(std::string_view type, std::optional<std::string_view> w = std::nullopt);

/// {"type": "A:3", "w": "321"}.
Json variety_ref(const SchubertVariety& x);
SchubertVariety variety_from_ref(const Json& ref);

// Graphs ---------------------------------------------------------------------

Json graph_to_json(const MomentGraph& g);
/// Parses the graph format; Weyl metadata ("type", "kind") is reattached when
/// present. Throws ParseError on malformed input or dangling endpoints.
MomentGraph load_external_graph(const Json& j);
MomentGraph load_external_graph_text(std::string_view text);

/// Same names, kinds and edges in the same order.
bool same_graph(const MomentGraph& a, const MomentGraph& b);

/// Vertices labeled by name (plus cycle notation in type A), one line style
/// per distinct edge label.
std::string graph_to_dot(const MomentGraph& g);

// Classes and expansions -------------------------------------------------------

/// A class read back from JSON, with the variety it lives on.
struct LoadedClass {
  SchubertVariety variety;
  EquivariantClass cls;
  std::optional<std::size_t> base;
};

Json class_to_json(const EquivariantClass& c, const Json& graph_ref,
                   std::optional<std::size_t> base = std::nullopt);
LoadedClass class_from_json(const Json& j);

Json expansion_to_json(const BasisExpansion& e, const MomentGraph& g, const Json& graph_ref);
/// Reads coefficients against the vertex names of g.
BasisExpansion expansion_from_json(const Json& j, const MomentGraph& g);

Json report_to_json(const DecompositionReport& r, const MomentGraph& g);
Json root_system_to_json(const RootSystem& rs);

} // namespace gkmcalc
