#pragma once

#include "gkmcalc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gkmcalc {

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotDivisible : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

using Exponent = std::vector<std::uint16_t>;

/// Graded lexicographic order, largest first. Iterating a term map therefore
/// visits the leading term first, which fixes the printed form.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Variables are 1-based when addressed by index. Zero coefficients are never
/// stored, so two equal polynomials always have identical term maps.
class Polynomial {
public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  /// Linear form sum_l coeffs[l] * x_{l+1}.
  static Polynomial linear(std::span<const Rational> coeffs);
  static Polynomial linear(std::span<const int> coeffs);
  static Polynomial monomial(const Exponent& exp, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Degree of the leading term; -1 for the zero polynomial.
  int total_degree() const;
  Rational coefficient(const Exponent& exp) const;
  Rational constant_term() const;

  /// Adds c * x^exp in place.
  void add_term(const Exponent& exp, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b)
  {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  /// Arbitrary but fixed total order, so polynomials can key ordered containers.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  /// Human-readable form such as "t1^2 - 3/2*t1*t3"; zero prints as "0".
  std::string to_string(std::string_view prefix = "t") const;

private:
  void check_same_ring(const Polynomial& rhs) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Images of x_1..x_n under a ring endomorphism, one polynomial per variable.
using Substitution = std::vector<Polynomial>;

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Simultaneous substitution x_l -> assignment[l-1].
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> assignment);

/// Substitution x_l -> x_{perm[l-1]} for a 1-based permutation of variable indices.
Polynomial permute_variables(const Polynomial& p, std::span<const int> perm);

Polynomial swap_variables(const Polynomial& p, std::size_t i, std::size_t j);

/// Replaces every variable by zero.
Rational evaluate_at_origin(const Polynomial& p);

/// Homogeneous polynomial of degree one. Construction validates the shape.
class LinearForm {
public:
  explicit LinearForm(Polynomial p);
  /// t_j - t_k in n variables (1-based indices).
  static LinearForm difference(std::size_t nvars, std::size_t j, std::size_t k);

  const Polynomial& polynomial() const { return poly_; }
  std::size_t nvars() const { return poly_.nvars(); }
  /// Dense coefficient vector, index l for x_{l+1}.
  std::vector<Rational> coefficients() const;
  /// Largest 1-based variable index with nonzero coefficient.
  std::size_t pivot() const;
  /// Substitution solving this form for the pivot variable, i.e. the
  /// parametrization of the hyperplane {form = 0}.
  Substitution hyperplane_substitution() const;
  /// True if the two forms differ by a nonzero scalar.
  bool proportional_to(const LinearForm& other) const;

  std::string to_string(std::string_view prefix = "t") const { return poly_.to_string(prefix); }

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.poly_ == b.poly_; }
  friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.poly_ < b.poly_; }

private:
  Polynomial poly_;
};

/// True iff p lies in the principal ideal generated by f.
bool divides(const LinearForm& f, const Polynomial& p);

/// q with q * f == p. Throws NotDivisible when the remainder is nonzero.
Polynomial exact_divide(const Polynomial& p, const LinearForm& f);

/// Ordinary divided difference (p - s_i p) / (t_i - t_{i+1}), 1 <= i < n.
Polynomial poly_divided_difference(const Polynomial& p, std::size_t i);

/// Generic divided difference (p - reflection(p)) / root for a reflection
/// given as a variable substitution that negates the root.
Polynomial poly_divided_difference(const Polynomial& p, std::span<const Polynomial> reflection,
                                   const LinearForm& root);

bool is_homogeneous(const Polynomial& p, int degree);

/// Product of linear forms; the empty product is 1.
Polynomial product(std::span<const LinearForm> forms, std::size_t nvars);

// Text form ------------------------------------------------------------------

/// Parses "t1 - t2", "(t1-t2)*(a2+3/2)", "2 t1^2 t3", ... Variable prefixes
/// t, a and x are all accepted. Indices above nvars are rejected.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

/// Largest variable index mentioned in a textual polynomial (0 if none).
std::size_t max_variable_index(std::string_view text);

} // namespace gkmcalc
