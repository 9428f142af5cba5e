#include "popswitch/linalg.hpp"

#include <stdexcept>

namespace popswitch {

RowEchelon row_reduce(const RfMatrix& matrix, std::size_t columns) {
  for (const auto& row : matrix) {
    if (row.size() != columns) throw std::invalid_argument("row_reduce: ragged matrix");
  }
  RfMatrix rows = matrix;
  RowEchelon out;
  out.columns = columns;
  std::size_t next = 0;
  for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    RfVector& prow = rows[next];
    const RatFunc inv = prow[col].inverse();
    for (std::size_t j = col; j < columns; ++j) {
      if (!prow[j].is_zero()) prow[j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][col].is_zero()) continue;
      const RatFunc factor = rows[i][col];
      for (std::size_t j = col; j < columns; ++j) {
        if (!prow[j].is_zero()) rows[i][j] -= factor * prow[j];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.reduced = std::move(rows);
  return out;
}

std::vector<RfVector> nullspace(const RfMatrix& matrix, std::size_t columns) {
  const RowEchelon ech = row_reduce(matrix, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<RfVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RfVector v(columns);
    v[free] = RatFunc(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult rf_solve(const RfMatrix& matrix, const RfVector& rhs) {
  if (matrix.size() != rhs.size()) throw std::invalid_argument("rf_solve: rhs length differs from row count");
  const std::size_t columns = matrix.empty() ? 0 : matrix.front().size();
  RfMatrix augmented = matrix;
  for (std::size_t i = 0; i < augmented.size(); ++i) {
    if (augmented[i].size() != columns) throw std::invalid_argument("rf_solve: ragged matrix");
    augmented[i].push_back(rhs[i]);
  }
  const RowEchelon ech = row_reduce(augmented, columns + 1);
  SolveResult result;
  result.rank = 0;
  for (auto c : ech.pivots) {
    if (c < columns) ++result.rank;
  }
  if (!ech.pivots.empty() && ech.pivots.back() == columns) {
    result.nullspace = nullspace(matrix, columns);
    return result;
  }
  RfVector x(columns);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced[r][columns];
  result.solution = std::move(x);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RfVector v(columns);
    v[free] = RatFunc(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced[r][free];
    result.nullspace.push_back(std::move(v));
  }
  return result;
}

}  // namespace popswitch
