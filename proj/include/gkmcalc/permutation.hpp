#pragma once

#include "gkmcalc/polynomial.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gkmcalc {

/// Element of S_n in one-line notation [w(1), ..., w(n)], acting on basis
/// vectors by w e_i = e_{w(i)}. Values are 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(std::size_t n);
  /// Simple transposition s_i = s_{i,i+1}.
  static Permutation simple(std::size_t n, std::size_t i);
  /// Transposition exchanging j and k.
  static Permutation transposition(std::size_t n, std::size_t j, std::size_t k);

  /// Accepts "231", "2,3,1", cycle notation "(123)(45)" and "e". Cycle
  /// notation and "e" need n; one-line input must match n when n > 0.
  static Permutation parse(std::string_view text, std::size_t n = 0);

  std::size_t size() const { return one_line_.size(); }
  /// w(i) for 1-based i.
  int operator()(std::size_t i) const { return one_line_.at(i - 1); }
  const std::vector<int>& one_line() const { return one_line_; }
  Permutation inverse() const;
  bool is_identity() const;

  /// "231" for n <= 9, otherwise "2,3,1".
  std::string to_string() const;
  /// "(123)", "(12)(34)" or "e".
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> one_line_;
};

/// (u o v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v)
{
  return compose(u, v);
}

/// Number of pairs i < j with w^{-1}(i) > w^{-1}(j).
int length(const Permutation& w);

/// Inv(w) = { t_i - t_j : i < j, w^{-1}(i) > w^{-1}(j) }.
using InversionSet = std::set<LinearForm>;
InversionSet inversions(const Permutation& w);

/// True iff s_i w < w, i.e. w^{-1}(i) > w^{-1}(i+1).
bool has_left_descent(const Permutation& w, std::size_t i);

/// Reduced word by repeatedly stripping the smallest left descent, so that
/// w = s_{word[0]} s_{word[1]} ...
std::vector<int> reduced_word(const Permutation& w);

/// Product s_{word[0]} s_{word[1]} ... in S_n.
Permutation from_word(std::size_t n, const std::vector<int>& word);

/// All products of subwords of a reduced word of w, i.e. the Bruhat interval [e, w].
std::vector<Permutation> lower_interval(const Permutation& w);

bool bruhat_leq(const Permutation& v, const Permutation& w);

/// u . p(t_1, ..., t_n) = p(t_{u(1)}, ..., t_{u(n)}).
Polynomial apply_to_variables(const Permutation& u, const Polynomial& p);

/// Applies u to each form of an inversion set.
InversionSet apply_to_forms(const Permutation& u, const InversionSet& forms);

/// All n! permutations in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(std::size_t n);

} // namespace gkmcalc
