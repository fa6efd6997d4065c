#pragma once

#include "gkmcalc/rational.hpp"

#include <optional>
#include <vector>

namespace gkmcalc {

using RationalRow = std::vector<Rational>;

enum class SolveStatus { unique, inconsistent, underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> x; // filled only when status == unique
  std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination for A x = b with `columns` unknowns.
LinearSolution solve_linear_system(std::vector<RationalRow> a, std::vector<Rational> b,
                                   std::size_t columns);

/// A point xi with row . xi > 0 for every row, found by Fourier-Motzkin
/// elimination and back substitution; nullopt when the strict system is
/// infeasible. All rows must have the same length.
std::optional<std::vector<Rational>> strictly_feasible_point(const std::vector<RationalRow>& rows);

} // namespace gkmcalc
