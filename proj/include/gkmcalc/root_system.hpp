#pragma once

#include "gkmcalc/permutation.hpp"
#include "gkmcalc/polynomial.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkmcalc {

/// Integer coordinates of a root in the ring variables (t_1..t_n for type A,
/// simple-root coordinates a_1..a_r otherwise).
using RootVector = Eigen::VectorXi;
/// Linear action on ring variables; column l holds the image of x_{l+1}.
using LatticeMap = Eigen::MatrixXi;

/// Finite crystallographic root system realized in a polynomial ring.
///
/// Type A_{n-1} lives in n variables t_1..t_n with roots t_j - t_k; B2 and G2
/// live in their two simple-root coordinates. Roots are generated from the
/// Cartan matrix, so every coordinate stays integral.
class RootSystem {
public:
  /// Root system of S_n (type A_{n-1}), n >= 1.
  static RootSystem type_a(std::size_t n);
  /// B2 with a_1 long and a_2 short.
  static RootSystem b2();
  /// G2 with a_1 short and a_2 long.
  static RootSystem g2();
  /// "A:n", "B2" or "G2".
  static RootSystem parse(std::string_view selector);

  const std::string& name() const { return name_; }
  bool is_type_a() const { return type_a_; }
  std::size_t rank() const { return static_cast<std::size_t>(cartan_.rows()); }
  std::size_t nvars() const { return static_cast<std::size_t>(gram_.rows()); }
  /// "t" for type A, "a" otherwise.
  const std::string& variable_prefix() const { return prefix_; }

  /// cartan(i, j) = <a_i^vee, a_j>, so s_i(a_j) = a_j - cartan(i, j) a_i.
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  /// Invariant symmetric form on the variable space.
  const Eigen::MatrixXi& gram() const { return gram_; }

  /// 1-based simple index.
  const RootVector& simple_root(std::size_t i) const { return simple_roots_.at(i - 1); }
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  /// Coordinates of positive root k in the basis of simple roots.
  const RootVector& simple_coordinates(std::size_t k) const { return simple_coords_.at(k); }

  std::optional<std::size_t> positive_root_index(const RootVector& beta) const;
  bool is_root(const RootVector& beta) const;
  bool is_positive_root(const RootVector& beta) const
  {
    return positive_root_index(beta).has_value();
  }

  /// <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha).
  int pairing(const RootVector& beta, const RootVector& alpha) const;
  /// s_alpha(beta) = beta - <beta, alpha^vee> alpha. Throws unless alpha is a
  /// positive root and beta a root.
  RootVector reflect(const RootVector& alpha, const RootVector& beta) const;
  /// Matrix of s_alpha on the variable space.
  LatticeMap reflection_matrix(const RootVector& alpha) const;
  const LatticeMap& simple_reflection(std::size_t i) const { return simple_reflections_.at(i - 1); }

  LinearForm form(const RootVector& beta) const;
  /// Inverse of form(); throws if the form has non-integral coefficients.
  RootVector vector_of(const LinearForm& f) const;

private:
  RootSystem() = default;
  void generate_roots();

  std::string name_;
  std::string prefix_ = "t";
  bool type_a_ = false;
  Eigen::MatrixXi cartan_;
  Eigen::MatrixXi gram_;
  std::vector<RootVector> simple_roots_;
  std::vector<LatticeMap> simple_reflections_;
  std::vector<RootVector> positive_roots_;
  std::vector<RootVector> simple_coords_;
};

/// Handle to an element of an enumerated WeylGroup. Ids are dense, ordered by
/// length and then by reduced word, and 0 is the identity.
struct WeylElement {
  std::uint32_t id = 0;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

/// The finite Weyl group of a RootSystem, fully enumerated.
///
/// Elements are stored as their matrices on the variable space. Left
/// multiplication by simple reflections, inverses, lengths, inversion sets and
/// the Bruhat order are tabulated at construction; everything else is derived.
class WeylGroup {
public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t order() const { return matrices_.size(); }
  std::size_t rank() const { return rs_.rank(); }
  std::size_t nvars() const { return rs_.nvars(); }
  std::vector<WeylElement> elements() const;

  WeylElement identity() const { return {0}; }
  WeylElement longest() const { return {static_cast<std::uint32_t>(order() - 1)}; }
  WeylElement simple(std::size_t i) const { return left_simple(i, identity()); }
  /// s_beta for a positive root beta.
  WeylElement reflection(const RootVector& beta) const;
  /// All reflections, aligned with root_system().positive_roots().
  const std::vector<WeylElement>& reflections() const { return reflections_; }

  WeylElement multiply(WeylElement a, WeylElement b) const;
  WeylElement inverse(WeylElement a) const { return inverse_[a.id]; }
  /// s_i a.
  WeylElement left_simple(std::size_t i, WeylElement a) const { return left_simple_[a.id][i - 1]; }
  /// a s_i.
  WeylElement right_simple(WeylElement a, std::size_t i) const;
  /// s_i a < a.
  bool has_left_descent(WeylElement a, std::size_t i) const;

  int length(WeylElement a) const { return static_cast<int>(inversions_[a.id].size()); }
  /// Indices into root_system().positive_roots() of Inv(a) = Phi+ cap a Phi-.
  const std::vector<std::size_t>& inversions(WeylElement a) const { return inversions_[a.id]; }
  std::vector<LinearForm> inversion_forms(WeylElement a) const;

  /// Leftmost-descent reduced word: a = s_{w[0]} s_{w[1]} ...
  std::vector<int> reduced_word(WeylElement a) const;
  WeylElement from_word(const std::vector<int>& word) const;

  bool bruhat_leq(WeylElement v, WeylElement w) const { return below_[w.id][v.id] != 0; }
  /// Elements v <= w, in id order.
  std::vector<WeylElement> lower_interval(WeylElement w) const;

  const LatticeMap& matrix(WeylElement a) const { return matrices_[a.id]; }
  RootVector act(WeylElement a, const RootVector& beta) const { return matrix(a) * beta; }
  /// Images of the ring variables under a (the coadjoint action).
  Substitution coadjoint_substitution(WeylElement a) const;
  /// a . p = p(a(x_1), ..., a(x_n)).
  Polynomial act_on_polynomial(WeylElement a, const Polynomial& p) const;

  /// One-line notation in type A, otherwise the reduced word ("e", "s1s2").
  std::string name(WeylElement a) const;
  /// Accepts name() output, "w0", words "s1s2" and, in type A, any
  /// Permutation::parse syntax.
  WeylElement parse(std::string_view text) const;

  std::optional<Permutation> permutation(WeylElement a) const;
  WeylElement from_permutation(const Permutation& p) const;

private:
  std::optional<WeylElement> lookup(const LatticeMap& m) const;
  static std::vector<int> key(const LatticeMap& m);

  RootSystem rs_;
  std::vector<LatticeMap> matrices_;
  std::map<std::vector<int>, std::uint32_t> index_;
  std::vector<std::vector<WeylElement>> left_simple_;
  std::vector<WeylElement> inverse_;
  std::vector<std::vector<std::size_t>> inversions_;
  std::vector<std::vector<char>> below_;
  std::vector<WeylElement> reflections_;
};

} // namespace gkmcalc
