#pragma once

#include "gkmcalc/polynomial.hpp"
#include "gkmcalc/root_system.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gkmcalc {

enum class GraphKind { flag, schubert, external };

std::string to_string(GraphKind kind);

/// Directed edge tail -> head. The label is the torus weight at the tail.
struct MomentEdge {
  std::size_t tail;
  std::size_t head;
  LinearForm label;
};

/// Combinatorial moment graph: a finite directed graph with edges labeled by
/// linear forms. Graphs built from a Weyl group keep a handle to it and the
/// element behind each vertex; external graphs only carry names.
class MomentGraph {
public:
  MomentGraph(std::size_t nvars, std::string prefix, std::vector<std::string> names,
              std::vector<MomentEdge> edges);

  std::size_t nvars() const { return nvars_; }
  const std::string& variable_prefix() const { return prefix_; }
  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const std::vector<MomentEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }
  std::size_t out_degree(std::size_t v) const { return out_.at(v).size(); }
  std::vector<LinearForm> out_labels(std::size_t v) const;

  GraphKind kind() const { return kind_; }
  const std::shared_ptr<const WeylGroup>& group() const { return group_; }
  bool has_group() const { return group_ != nullptr; }
  /// Weyl element at vertex v; requires has_group().
  WeylElement element(std::size_t v) const { return elements_.at(v); }
  std::optional<std::size_t> vertex_of(WeylElement x) const;
  /// Top element w of a Schubert graph (w0 for the flag graph).
  std::optional<WeylElement> top() const { return top_; }

  /// Attaches Weyl group metadata; names must already match the elements.
  void attach_group(std::shared_ptr<const WeylGroup> group, std::vector<WeylElement> elements,
                    GraphKind kind, std::optional<WeylElement> top);

  /// Vertices ordered so that every edge points to an earlier vertex (sinks
  /// first); nullopt if the graph has a directed cycle.
  std::optional<std::vector<std::size_t>> topological_order() const;
  bool is_acyclic() const { return topological_order().has_value(); }
  /// reach[u][v] != 0 iff there is a directed path u -> ... -> v (length 0 allowed).
  std::vector<std::vector<char>> reachability() const;

  /// Copy with the chosen edges reversed; a reversed edge gets the negated
  /// label, the weight at its new tail.
  MomentGraph reoriented(const std::vector<bool>& flip) const;

private:
  std::size_t nvars_;
  std::string prefix_;
  std::vector<std::string> names_;
  std::vector<MomentEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;

  GraphKind kind_ = GraphKind::external;
  std::shared_ptr<const WeylGroup> group_;
  std::vector<WeylElement> elements_;
  std::vector<std::size_t> vertex_by_element_;
  std::optional<WeylElement> top_;
};

/// Moment graph of G/B: one edge u -> s_beta u labeled beta for every
/// beta in Inv(u).
MomentGraph build_flag_moment_graph(std::shared_ptr<const WeylGroup> group);

/// Moment graph of X_w: the subgraph of the flag graph induced on [e, w].
MomentGraph build_schubert_moment_graph(std::shared_ptr<const WeylGroup> group, WeylElement w);

struct AxiomViolation {
  enum class Kind { cycle, dependent_labels, out_degree, out_labels };
  Kind kind;
  std::optional<std::size_t> vertex;
  std::string detail;
};

std::string to_string(AxiomViolation::Kind kind);

struct AxiomReport {
  bool acyclic = true;
  bool labels_independent = true;
  /// Only meaningful for graphs with Weyl metadata.
  bool degrees_match_length = true;
  bool labels_match_inversions = true;
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks acyclicity, pairwise independence of out-labels at each vertex and,
/// for Weyl graphs, out-degree = length and out-labels = Inv(v).
AxiomReport validate_axioms(const MomentGraph& g);

enum class PalaisSmaleMode { given_orientation, search_flow_orientations, search_acyclic_orientations };

struct PalaisSmaleResult {
  bool holds = false;
  /// Orientation that works (or the last one examined), as per-edge flips.
  std::vector<bool> flipped;
  /// Covector inducing that orientation (search mode).
  std::optional<std::vector<Rational>> covector;
  /// An edge tail -> head with out_degree(tail) <= out_degree(head).
  std::optional<std::size_t> failing_edge;
  std::size_t orientations_checked = 0;
};

/// Given mode checks out_degree(tail) > out_degree(head) on every edge as
/// stored. Search mode enumerates the sign chambers of generic covectors xi
/// on the label directions; each chamber orients an edge out of the endpoint
/// whose weight pairs positively with xi. The acyclic mode tries every acyclic
/// reorientation instead; it is a diagnostic and certifies more graphs than the
/// flow-induced mode does.
PalaisSmaleResult is_palais_smale(const MomentGraph& g, PalaisSmaleMode mode);

/// Out-degree inequality on the graph as oriented; returns the first failing edge.
std::optional<std::size_t> palais_smale_failure(const MomentGraph& g);

} // namespace gkmcalc
