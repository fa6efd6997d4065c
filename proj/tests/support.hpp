#pragma once

#include "gkmcalc/polynomial.hpp"

#include <random>

namespace testing {

inline gkmcalc::Polynomial poly(const char* text, std::size_t n = 3)
{
  return gkmcalc::parse_polynomial(text, n);
}

inline gkmcalc::LinearForm form(const char* text, std::size_t n = 3)
{
  return gkmcalc::LinearForm(poly(text, n));
}

/// Random polynomial with small integer coefficients and degree <= max_degree.
inline gkmcalc::Polynomial random_polynomial(std::mt19937& rng, std::size_t n, int max_degree,
                                             int terms = 4)
{
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  gkmcalc::Polynomial p(n);
  for (int k = 0; k < terms; ++k) {
    gkmcalc::Exponent e(n, 0);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j)
      ++e[var(rng)];
    p.add_term(e, coeff(rng));
  }
  return p;
}

/// Random homogeneous polynomial of the given degree.
inline gkmcalc::Polynomial random_homogeneous(std::mt19937& rng, std::size_t n, int degree,
                                              int terms = 3)
{
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  gkmcalc::Polynomial p(n);
  for (int k = 0; k < terms; ++k) {
    gkmcalc::Exponent e(n, 0);
    for (int j = 0; j < degree; ++j)
      ++e[var(rng)];
    p.add_term(e, coeff(rng));
  }
  return p;
}

} // namespace testing
