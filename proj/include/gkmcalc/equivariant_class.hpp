#pragma once

#include "gkmcalc/moment_graph.hpp"
#include "gkmcalc/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace gkmcalc {

using GraphPtr = std::shared_ptr<const MomentGraph>;

/// Tuple of localizations (p_v) indexed by the vertices of a moment graph.
class EquivariantClass {
public:
  EquivariantClass(GraphPtr graph, std::vector<Polynomial> localizations);

  static EquivariantClass zero(GraphPtr graph);
  /// The class that localizes to 1 everywhere.
  static EquivariantClass unit(GraphPtr graph);

  const GraphPtr& graph() const { return graph_; }
  const Polynomial& at(std::size_t v) const { return loc_.at(v); }
  const std::vector<Polynomial>& localizations() const { return loc_; }
  bool is_zero() const;

  EquivariantClass& operator+=(const EquivariantClass& rhs);
  EquivariantClass& operator-=(const EquivariantClass& rhs);
  friend EquivariantClass operator+(EquivariantClass a, const EquivariantClass& b) { return a += b; }
  friend EquivariantClass operator-(EquivariantClass a, const EquivariantClass& b) { return a -= b; }
  /// Module structure over the polynomial ring.
  friend EquivariantClass operator*(const Polynomial& c, const EquivariantClass& x);
  friend EquivariantClass operator*(const Rational& c, const EquivariantClass& x);

  /// Same vertex set and equal localizations.
  friend bool operator==(const EquivariantClass& a, const EquivariantClass& b);

private:
  void check_compatible(const EquivariantClass& rhs) const;

  GraphPtr graph_;
  std::vector<Polynomial> loc_;
};

struct GkmCheck {
  bool holds = true;
  std::vector<std::size_t> failing_edges;
};

/// For every edge (a, b, beta): beta divides p_a - p_b.
GkmCheck check_gkm(const EquivariantClass& c);

/// The three defining conditions of a Knutson-Tao class for `base`, plus GKM.
struct KtConditions {
  bool product_at_base = false;
  bool homogeneous = false;
  bool vanishes_off_upset = false;
  bool gkm = false;
  bool ok() const { return product_at_base && homogeneous && vanishes_off_upset && gkm; }
};

KtConditions check_knutson_tao(const EquivariantClass& c, std::size_t base);

struct KnutsonTaoClass {
  EquivariantClass cls;
  std::size_t base;
};

class KtSolveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Class of the unique maximal vertex w of g: prod Inv(w) at w, zero elsewhere.
KnutsonTaoClass point_class_top(const GraphPtr& g);

/// [Omega_v] on a flag graph: D_{i_1}, ..., D_{i_m} applied to the top class,
/// where s_{i_1} ... s_{i_m} is the leftmost-descent word of w0 v^{-1}.
KnutsonTaoClass knutson_tao_class_descent(const GraphPtr& flag, WeylElement v);

/// [Omega_v] on any acyclic moment graph by induction up the path order:
/// at each vertex the localization is the unique homogeneous polynomial that
/// agrees with every out-neighbor modulo the edge label. Throws KtSolveError
/// when a local system is inconsistent or has more than one solution.
KnutsonTaoClass knutson_tao_class_solve(const GraphPtr& g, std::size_t v);

/// Localizations of c on the vertices of `sub` (matched by Weyl element when
/// both graphs carry one, otherwise by name).
EquivariantClass restrict_class(const EquivariantClass& c, const GraphPtr& sub);

enum class KtRoute { descent, solve, restrict };

/// Knutson-Tao classes for every vertex of a graph, indexed by vertex.
class KtBasis {
public:
  KtBasis(GraphPtr graph, std::vector<EquivariantClass> classes);

  const GraphPtr& graph() const { return graph_; }
  const EquivariantClass& operator[](std::size_t v) const { return classes_.at(v); }
  std::size_t size() const { return classes_.size(); }
  /// deg [Omega_v] = out-degree of v.
  int degree(std::size_t v) const { return static_cast<int>(graph_->out_degree(v)); }

private:
  GraphPtr graph_;
  std::vector<EquivariantClass> classes_;
};

/// Whole basis on a flag graph from the top class, using
/// [Omega_v] = D_i [Omega_{s_i v}] for the smallest i with s_i v > v.
KtBasis descent_basis(const GraphPtr& flag);
/// Whole basis by the local linear solver.
KtBasis solved_basis(const GraphPtr& g);
/// Restriction of a flag basis to a subgraph.
KtBasis restricted_basis(const KtBasis& flag_basis, const GraphPtr& sub);

/// Coefficients c_v with c = sum_v c_v [Omega_v], keyed by vertex. Zero
/// coefficients are omitted.
using BasisExpansion = std::map<std::size_t, Polynomial>;

/// Peels a path-order-minimal vertex at a time; throws NotDivisible when c is
/// not in the span of the basis (a non-GKM input).
BasisExpansion expand_in_basis(const EquivariantClass& c, const KtBasis& basis);
EquivariantClass reconstruct(const BasisExpansion& e, const KtBasis& basis);

/// Adds c * [Omega_v] to an expansion, dropping zero coefficients.
void accumulate(BasisExpansion& e, std::size_t v, const Polynomial& c);

/// G/B for a Weyl group, with its flag graph and Knutson-Tao basis. The basis
/// is built on first use.
class FlagVariety {
public:
  static std::shared_ptr<const FlagVariety> create(std::shared_ptr<const WeylGroup> group);

  const std::shared_ptr<const WeylGroup>& group() const { return group_; }
  const GraphPtr& graph() const { return graph_; }
  const KtBasis& basis() const;

private:
  explicit FlagVariety(std::shared_ptr<const WeylGroup> group);

  std::shared_ptr<const WeylGroup> group_;
  GraphPtr graph_;
  mutable std::once_flag basis_once_;
  mutable std::unique_ptr<KtBasis> basis_;
};

/// X_w together with the flag variety it sits in.
struct SchubertVariety {
  std::shared_ptr<const FlagVariety> flag;
  WeylElement top;
  GraphPtr graph;
  KtBasis basis;

  const WeylGroup& group() const { return *flag->group(); }
};

SchubertVariety schubert_variety(const std::shared_ptr<const FlagVariety>& flag, WeylElement w);

} // namespace gkmcalc
