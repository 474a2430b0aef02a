#pragma once

// Exact linear algebra over Q(zeta_M): dense nullspaces for the component
// solver and a sparse incremental span for reachability / membership checks.

#include <map>
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"

namespace lietori {

// Nullspace basis of a dense matrix (rows x cols) over Q(zeta_M).
// Rows may be empty; returns vectors of length cols.
inline std::vector<std::vector<Cyclotomic>> nullspace(
    std::vector<std::vector<Cyclotomic>> m, long cols, long order) {
  const long rows = static_cast<long>(m.size());
  std::vector<long> pivot_col;  // pivot column of each reduced row
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long pr = -1;
    for (long r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    Cyclotomic inv = inverse(m[rank][c]);
    for (long j = c; j < cols; ++j) m[rank][j] = mul(m[rank][j], inv);
    for (long r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Cyclotomic f = m[r][c];
      for (long j = c; j < cols; ++j) m[r][j] = sub(m[r][j], mul(f, m[rank][j]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Cyclotomic>> basis;
  for (long fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Cyclotomic> v(cols, cyclo_zero(order));
    v[fc] = cyclo_one(order);
    for (long r = 0; r < rank; ++r) v[pivot_col[r]] = neg(m[r][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Sparse vector keyed by an arbitrary integer tuple (e.g. matrix position +
// grading degree, flattened).
using SparseKey = std::vector<long>;
using SparseVec = std::map<SparseKey, Cyclotomic>;

inline void sparse_axpy(SparseVec& dst, const Cyclotomic& c, const SparseVec& src) {
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      Cyclotomic w = mul(c, v);
      if (!w.is_zero()) dst.emplace(k, std::move(w));
    } else {
      it->second = add(it->second, mul(c, v));
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

// Maintains a row-echelon basis of the span of inserted sparse vectors.
class IncrementalSpan {
 public:
  // Reduce v against the current echelon; returns the residue.
  SparseVec reduce(SparseVec v) const {
    while (!v.empty()) {
      const SparseKey& lead = v.begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) break;
      Cyclotomic c = neg(v.begin()->second);
      sparse_axpy(v, c, it->second);  // row is normalized: leading coeff 1
    }
    return v;
  }

  // Returns true if v enlarged the span.
  bool add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Cyclotomic inv = inverse(v.begin()->second);
    for (auto& [k, c] : v) c = mul(c, inv);
    SparseKey lead = v.begin()->first;
    rows_.emplace(std::move(lead), std::move(v));
    return true;
  }

  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

  long dimension() const { return static_cast<long>(rows_.size()); }

 private:
  std::map<SparseKey, SparseVec> rows_;  // keyed by leading SparseKey
};

}  // namespace lietori
