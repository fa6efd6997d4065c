#pragma once

#include "gkmcalc/equivariant_class.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gkmcalc {

/// (u . p)_v = u . p_{u^{-1} v} on a graph whose vertices are all of W.
EquivariantClass act(WeylElement u, const EquivariantClass& c);

/// Action on H_T(X_w): c is lifted to G/B through the Knutson-Tao basis,
/// acted on there and restricted back.
EquivariantClass act(WeylElement u, const EquivariantClass& c, const SchubertVariety& x);

/// s_i [Omega_v] in the basis of the graph containing v:
/// [Omega_v] if s_i v > v, else [Omega_v] - alpha_i [Omega_{s_i v}].
BasisExpansion act_on_schubert_basis(std::size_t i, std::size_t v, const MomentGraph& g);

/// s_i applied to an expansion, coefficients included.
BasisExpansion act_simple(std::size_t i, const BasisExpansion& e, const MomentGraph& g);

/// u applied to an expansion by its leftmost-descent word, rightmost letter first.
BasisExpansion act_word(WeylElement u, const BasisExpansion& e, const MomentGraph& g);

/// D_i p = (p - s_i . p) / alpha_i, pointwise on the flag graph.
EquivariantClass left_divided_difference(std::size_t i, const EquivariantClass& c);
/// D_i on H_T(X_w), via the lifted action.
EquivariantClass left_divided_difference(std::size_t i, const EquivariantClass& c,
                                         const SchubertVariety& x);

/// (p_v - p_{v s_i}) / (-v(alpha_i)), pointwise on the flag graph.
EquivariantClass right_divided_difference(std::size_t i, const EquivariantClass& c);

/// D_i on an expansion: sum d_i(c_v) [Omega_v] + sum_{s_i v < v} s_i(c_v) [Omega_{s_i v}].
BasisExpansion divided_difference_expansion(std::size_t i, const BasisExpansion& e,
                                            const MomentGraph& g);

/// Y_v = |W|^{-1} sum_{u in W} u . [Omega_v], as an expansion on X.
BasisExpansion average_class(std::size_t v, const SchubertVariety& x);

/// Every nonzero expansion reachable from `start` by the operators D_i,
/// together with the zero class when it is reached. Results are sorted.
struct DdiffClosure {
  std::vector<BasisExpansion> classes;
  bool reaches_zero = false;
};
DdiffClosure divided_difference_closure(const BasisExpansion& start, const MomentGraph& g);

struct DecompositionEntry {
  std::size_t vertex = 0;
  int degree = 0;
  BasisExpansion averaged;
  /// s_i Y_v = Y_v for every simple i, checked through the lifted action.
  bool invariant = false;
  /// s_i Y_v = Y_v, one entry per simple i.
  std::vector<bool> generator_invariance;
  /// Coefficient of [Omega_v] in Y_v is 1 and only vertices below v occur.
  bool unitriangular = false;
  /// Every s_i acts on [Omega_v] as the identity modulo the augmentation ideal.
  bool trivial_mod_t = false;
};

struct DecompositionReport {
  std::string root_system;
  std::string top;
  std::vector<DecompositionEntry> entries;
  /// Number of invariant generators in each degree.
  std::vector<std::size_t> multiplicities;
  /// Number of v <= w of each length.
  std::vector<std::size_t> poincare;

  bool ok() const;
};

/// Trivial-representation decomposition of H_T(X_w) from the averaged classes.
DecompositionReport decompose(const SchubertVariety& x);

} // namespace gkmcalc
