#include "gkmcalc/linear_solve.hpp"

#include <stdexcept>

namespace gkmcalc {

LinearSolution solve_linear_system(std::vector<RationalRow> a, std::vector<Rational> b,
                                   std::size_t columns)
{
  if (a.size() != b.size())
    throw std::invalid_argument("row count of matrix and right-hand side differ");
  for (const auto& row : a)
    if (row.size() != columns)
      throw std::invalid_argument("ragged coefficient matrix");

  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < columns; ++k)
      a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0)
        continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < columns; ++k)
        if (sgn(a[r][k]) != 0)
          a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(b[i]) != 0) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  if (r < columns) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.status = SolveStatus::unique;
  out.x.assign(columns, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    out.x[pivot_col[i]] = b[i];
  return out;
}

namespace {

// Rows are strict inequalities row . x > 0 over the first `vars` entries.
struct Stage {
  std::vector<RationalRow> rows;
};

} // namespace

std::optional<std::vector<Rational>> strictly_feasible_point(const std::vector<RationalRow>& rows)
{
  if (rows.empty())
    return std::vector<Rational>{};
  const std::size_t n = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != n)
      throw std::invalid_argument("ragged inequality system");

  // stages[k] holds the system in variables 0..k (rows padded to length n).
  std::vector<Stage> stages(n == 0 ? 1 : n);
  if (n == 0) {
    // Only constant rows "0 > 0", which are never satisfied.
    return std::nullopt;
  }
  stages[n - 1].rows = rows;
  for (std::size_t k = n - 1; k > 0; --k) {
    const auto& cur = stages[k].rows;
    std::vector<RationalRow> next;
    std::vector<const RationalRow*> pos, neg;
    for (const auto& row : cur) {
      const int s = sgn(row[k]);
      if (s > 0)
        pos.push_back(&row);
      else if (s < 0)
        neg.push_back(&row);
      else
        next.push_back(row);
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        // (-q_k) * p + p_k * q eliminates x_k with positive multipliers.
        const Rational mp = -(*q)[k];
        const Rational mq = (*p)[k];
        RationalRow combo(n);
        for (std::size_t j = 0; j < n; ++j)
          combo[j] = mp * (*p)[j] + mq * (*q)[j];
        next.push_back(std::move(combo));
      }
    }
    stages[k - 1].rows = std::move(next);
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    // With x_0..x_{k-1} fixed each row reads coeff * x_k + rest > 0.
    std::optional<Rational> lower, upper;
    for (const auto& row : stages[k].rows) {
      Rational rest = 0;
      for (std::size_t j = 0; j < k; ++j)
        rest += row[j] * x[j];
      const int s = sgn(row[k]);
      if (s == 0) {
        if (sgn(rest) <= 0)
          return std::nullopt;
        continue;
      }
      const Rational bound = -rest / row[k];
      if (s > 0) {
        if (!lower || bound > *lower)
          lower = bound;
      } else {
        if (!upper || bound < *upper)
          upper = bound;
      }
    }
    if (lower && upper) {
      if (!(*lower < *upper))
        return std::nullopt;
      x[k] = (*lower + *upper) / 2;
    } else if (lower) {
      x[k] = *lower + 1;
    } else if (upper) {
      x[k] = *upper - 1;
    }
  }
  return x;
}

} // namespace gkmcalc
