// Exact linear algebra over Q(q).

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "popswitch/qarith.hpp"

namespace popswitch {

using RfVector = std::vector<RatFunc>;
/// Row-major; every row must have the same length.
using RfMatrix = std::vector<RfVector>;

struct RowEchelon {
  RfMatrix reduced;                  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row of `reduced`
  std::size_t columns = 0;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. The pivot in each column is the first row with a
/// nonzero entry there.
RowEchelon row_reduce(const RfMatrix& matrix, std::size_t columns);

/// A basis of { x : matrix * x = 0 }.
std::vector<RfVector> nullspace(const RfMatrix& matrix, std::size_t columns);

struct SolveResult {
  std::optional<RfVector> solution;  // empty when inconsistent
  std::size_t rank = 0;
  std::vector<RfVector> nullspace;
  bool consistent() const { return solution.has_value(); }
};

/// Solves matrix * x = rhs. Free variables of a consistent system are set to
/// zero. Throws std::invalid_argument on shape mismatch.
SolveResult rf_solve(const RfMatrix& matrix, const RfVector& rhs);

/// Sparse vectors keyed by an ordered coordinate type.
template <class Key>
using SparseVector = std::map<Key, RatFunc>;

/// Incremental echelon basis of a span of sparse vectors. Each accepted vector
/// remembers how it is expressed in terms of the inputs offered so far, so a
/// basis element can be traced back to the generators that produced it.
template <class Key>
class SpanBuilder {
 public:
  struct Row {
    SparseVector<Key> vector;                  // pivot entry (first key) is 1
    std::map<std::size_t, RatFunc> combination;  // input index -> coefficient
  };

  /// Offers the next input vector; returns true if it enlarged the span.
  bool offer(SparseVector<Key> v) {
    std::map<std::size_t, RatFunc> combo;
    combo.emplace(inputs_++, RatFunc(1));
    reduce(v, combo);
    if (v.empty()) return false;
    const RatFunc inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    rows_.push_back(Row{std::move(v), std::move(combo)});
    pivot_index_.emplace(rows_.back().vector.begin()->first, rows_.size() - 1);
    return true;
  }

  /// Reduces v against the current basis; true iff v lies in the span.
  bool contains(SparseVector<Key> v) const {
    std::map<std::size_t, RatFunc> unused;
    reduce(v, unused);
    return v.empty();
  }

  const std::vector<Row>& rows() const { return rows_; }
  std::size_t dimension() const { return rows_.size(); }

 private:
  void reduce(SparseVector<Key>& v, std::map<std::size_t, RatFunc>& combo) const {
    // Row pivots are their first keys; scanning v in key order, every pivot
    // hit is eliminated and later entries only change.
    auto it = v.begin();
    while (it != v.end()) {
      auto pivot = pivot_index_.find(it->first);
      if (pivot == pivot_index_.end()) {
        ++it;
        continue;
      }
      const Row& row = rows_[pivot->second];
      const RatFunc factor = it->second;
      const Key key = it->first;
      for (const auto& [k, c] : row.vector) {
        RatFunc& slot = v[k];
        slot -= factor * c;
      }
      for (const auto& [idx, c] : row.combination) {
        RatFunc& slot = combo[idx];
        slot -= factor * c;
        if (slot.is_zero()) combo.erase(idx);
      }
      for (auto jt = v.begin(); jt != v.end();) {
        jt = jt->second.is_zero() ? v.erase(jt) : std::next(jt);
      }
      it = v.upper_bound(key);
    }
  }

  std::vector<Row> rows_;
  std::map<Key, std::size_t> pivot_index_;
  std::size_t inputs_ = 0;
};

}  // namespace popswitch
