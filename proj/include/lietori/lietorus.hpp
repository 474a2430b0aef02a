#pragma once

// The four families of graded matrix Lie algebras over associative tori:
//   SL: trace-in-[A,A] matrices over a torus A
//   SU: G-skew matrices for G = diag(J, D) over a torus with involution
//   SP: G-skew matrices for the symplectic G
//   O:  J-skew matrices over a Laurent torus
// together with the component solver (root x external degree), bracket, and
// the truncated axiom verifier.
//
// Degrees: for SU the external degrees carry half-integer shifts, so all
// internal degrees are stored doubled (scale = 2); for the other families
// internal degrees equal torus degrees (scale = 1).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rootsys.hpp"
#include "torus.hpp"
#include "zlattice.hpp"

namespace lietori {

enum class Family { SL, SU, SP, O };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SU: return "su";
    case Family::SP: return "sp";
    case Family::O: return "o";
  }
  return "?";
}

struct QuantumParam {
  long M = 2, e = 1;  // the commutation scalar is zeta_M^e
};

struct ConstructionParams {
  Family family = Family::SL;
  int r = 1;
  std::vector<QuantumParam> quantum;  // SL only
  int k = 0, p = 0;                   // SU, SP
  int q = 0;                          // all families
  int m = 0;                          // SU only
  std::vector<Degree> delta;          // SU only; torus coordinates

  bool operator==(const ConstructionParams& o) const {
    auto key = [](const ConstructionParams& c) {
      std::vector<long> v{static_cast<long>(c.family), c.r, c.k, c.p, c.q, c.m};
      for (const auto& qf : c.quantum) {
        v.push_back(qf.M);
        v.push_back(qf.e);
      }
      for (const auto& d : c.delta)
        for (long x : d) v.push_back(x);
      return v;
    };
    return key(*this) == key(o);
  }
};

// ---- sparse matrices over a torus ------------------------------------------

struct MatElement {
  long size = 0;
  std::map<std::pair<long, long>, TorusElement> cells;

  bool is_zero() const { return cells.empty(); }
  void set(long i, long j, TorusElement v) {
    if (v.is_zero())
      cells.erase({i, j});
    else
      cells[{i, j}] = std::move(v);
  }
  const TorusElement* get(long i, long j) const {
    auto it = cells.find({i, j});
    return it == cells.end() ? nullptr : &it->second;
  }
};

inline MatElement mat_add(const TorusSpec& spec, const MatElement& a, const MatElement& b) {
  MatElement out = a;
  for (const auto& [pos, v] : b.cells) {
    auto it = out.cells.find(pos);
    if (it == out.cells.end()) {
      out.cells.emplace(pos, v);
    } else {
      it->second = add(spec, it->second, v);
      if (it->second.is_zero()) out.cells.erase(it);
    }
  }
  return out;
}

inline MatElement mat_neg(const MatElement& a) {
  MatElement out;
  out.size = a.size;
  for (const auto& [pos, v] : a.cells) out.cells.emplace(pos, neg(v));
  return out;
}

inline MatElement mat_sub(const TorusSpec& spec, const MatElement& a, const MatElement& b) {
  return mat_add(spec, a, mat_neg(b));
}

inline MatElement mat_scale(const MatElement& a, const Cyclotomic& c) {
  MatElement out;
  out.size = a.size;
  if (c.is_zero()) return out;
  for (const auto& [pos, v] : a.cells) {
    TorusElement w = scale(v, c);
    if (!w.is_zero()) out.cells.emplace(pos, std::move(w));
  }
  return out;
}

inline MatElement mat_mul(const TorusSpec& spec, const MatElement& a, const MatElement& b) {
  MatElement out;
  out.size = a.size;
  for (const auto& [pa, va] : a.cells)
    for (const auto& [pb, vb] : b.cells) {
      if (pa.second != pb.first) continue;
      TorusElement prod = mul(spec, va, vb);
      if (prod.is_zero()) continue;
      std::pair<long, long> pos{pa.first, pb.second};
      auto it = out.cells.find(pos);
      if (it == out.cells.end()) {
        out.cells.emplace(pos, std::move(prod));
      } else {
        it->second = add(spec, it->second, prod);
        if (it->second.is_zero()) out.cells.erase(it);
      }
    }
  return out;
}

inline MatElement mat_commutator(const TorusSpec& spec, const MatElement& a, const MatElement& b) {
  return mat_sub(spec, mat_mul(spec, a, b), mat_mul(spec, b, a));
}

inline MatElement mat_bar_transpose(const TorusSpec& spec, const MatElement& a) {
  MatElement out;
  out.size = a.size;
  for (const auto& [pos, v] : a.cells) out.cells.emplace(std::make_pair(pos.second, pos.first), bar(spec, v));
  return out;
}

// Inverse of a matrix with exactly one invertible monomial per row/column.
inline MatElement monomial_matrix_inverse(const TorusSpec& spec, const MatElement& g) {
  MatElement out;
  out.size = g.size;
  std::set<long> rows, cols;
  for (const auto& [pos, v] : g.cells) {
    if (!rows.insert(pos.first).second || !cols.insert(pos.second).second)
      throw std::invalid_argument("monomial_matrix_inverse: not a monomial matrix");
    out.set(pos.second, pos.first, monomial_inverse(spec, v));
  }
  if (static_cast<long>(rows.size()) != g.size)
    throw std::invalid_argument("monomial_matrix_inverse: missing rows");
  return out;
}

// Flatten a matrix into a sparse coefficient vector keyed by (i, j, degree).
inline SparseVec mat_to_sparse(const MatElement& a) {
  SparseVec out;
  for (const auto& [pos, v] : a.cells)
    for (const auto& [d, c] : v.terms) {
      SparseKey key{pos.first, pos.second};
      key.insert(key.end(), d.begin(), d.end());
      out.emplace(std::move(key), c);
    }
  return out;
}

// num == c * den for a scalar c?  Returns c if so (c = 0 for num = 0).
inline std::optional<Cyclotomic> scalar_ratio(const TorusSpec& spec, const MatElement& num,
                                              const MatElement& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return cyclo_zero(spec.cyclo_order);
  const auto& [pos, v] = *den.cells.begin();
  const auto& [d, c] = *v.terms.begin();
  const TorusElement* nv = num.get(pos.first, pos.second);
  if (!nv) return std::nullopt;
  auto it = nv->terms.find(d);
  if (it == nv->terms.end()) return std::nullopt;
  Cyclotomic ratio = mul(it->second, inverse(c));
  if (mat_sub(spec, num, mat_scale(den, ratio)).is_zero()) return ratio;
  return std::nullopt;
}

// ---- the model ---------------------------------------------------------------

struct ComponentKey {
  RootVec alpha;
  Degree lam;  // internal coordinates
  bool operator<(const ComponentKey& o) const {
    return std::tie(alpha, lam) < std::tie(o.alpha, o.lam);
  }
  bool operator==(const ComponentKey& o) const {
    return alpha == o.alpha && lam == o.lam;
  }
};

class LieTorusModel {
 public:
  ConstructionParams params;
  TorusSpec spec;
  long msize = 0;  // matrix size
  long amb = 0;    // ambient dimension of root vectors
  long scale = 1;  // 2 when internal degrees are doubled (SU)
  long n = 0;      // rank of the external grading group

  std::vector<RootVec> mu;   // weight vector per matrix index
  std::vector<Degree> tau;   // internal-degree shift per matrix index
  bool has_G = false;
  bool trace_cond = false;
  MatElement G, Ginv;

  Sublattice Lambda;          // external lattice, internal coordinates
  LatticeBasis lambda_basis;
  Sublattice centroid_gamma;  // centroid support, internal coordinates
  LatticeBasis center;        // centre of the torus, torus coordinates
  std::vector<MatElement> h;  // basis of the split toral subalgebra

  // internal degree of a monomial t^lt e_ij
  Degree internal_degree(long i, long j, const Degree& lt) const {
    Degree d(n);
    for (long c = 0; c < n; ++c) d[c] = scale * lt[c] + tau[i][c] - tau[j][c];
    return d;
  }

  // torus degree of the (i,j) entry of a component at internal degree lam,
  // if one exists
  std::optional<Degree> torus_degree(long i, long j, const Degree& lam) const {
    Degree lt(n);
    for (long c = 0; c < n; ++c) {
      long v = lam[c] - tau[i][c] + tau[j][c];
      if (v % scale != 0) return std::nullopt;
      lt[c] = v / scale;
    }
    return lt;
  }

  const std::vector<MatElement>& component_basis(const RootVec& alpha, const Degree& lam) const;
  // basis without inserting into the cache; avoids unbounded memory growth when
  // sweeping large truncation boxes
  std::shared_ptr<const std::vector<MatElement>> component_basis_ptr(const RootVec& alpha,
                                                                     const Degree& lam) const;
  long component_dim(const RootVec& alpha, const Degree& lam) const;

  // populated components with internal degree in the box |lam|_inf <= scale*B
  std::map<ComponentKey, long> populated_components(long B) const;

  // external degrees in the box, as a deterministic list
  std::vector<Degree> degrees_in_box(long B) const;

 private:
  std::shared_ptr<const std::vector<MatElement>> solve_component(const RootVec& alpha,
                                                                 const Degree& lam) const;
  // held via shared_ptr so the model stays copyable/movable
  std::shared_ptr<std::mutex> memo_mutex_ = std::make_shared<std::mutex>();
  mutable std::map<ComponentKey, std::shared_ptr<const std::vector<MatElement>>> memo_;
  mutable std::map<ComponentKey, long> dim_memo_;
};

namespace detail {

inline RootVec root_diff(const RootVec& a, const RootVec& b) {
  RootVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool all_zero(const std::vector<long>& v) {
  for (long x : v)
    if (x) return false;
  return true;
}

}  // namespace detail

inline std::shared_ptr<const std::vector<MatElement>> LieTorusModel::solve_component(
    const RootVec& alpha, const Degree& lam) const {
  std::vector<Integer> lam_z(lam.begin(), lam.end());
  if (!lambda_basis.contains(lam_z))
    throw std::domain_error("component_basis: degree outside the external lattice");

  struct Candidate {
    long i, j;
    Degree lt;
  };
  std::vector<Candidate> cands;
  for (long i = 0; i < msize; ++i)
    for (long j = 0; j < msize; ++j) {
      if (detail::root_diff(mu[i], mu[j]) != alpha) continue;
      auto lt = torus_degree(i, j, lam);
      if (lt) cands.push_back({i, j, std::move(*lt)});
    }

  std::vector<std::vector<Cyclotomic>> rows;
  std::map<SparseKey, size_t> row_of;
  auto row_for = [&](const SparseKey& k) -> std::vector<Cyclotomic>& {
    auto it = row_of.find(k);
    if (it == row_of.end()) {
      it = row_of.emplace(k, rows.size()).first;
      rows.emplace_back(cands.size(), cyclo_zero(spec.cyclo_order));
    }
    return rows[it->second];
  };

  if (has_G) {
    for (size_t c = 0; c < cands.size(); ++c) {
      MatElement m;
      m.size = msize;
      m.set(cands[c].i, cands[c].j, monomial(spec, cands[c].lt, cyclo_one(spec.cyclo_order)));
      MatElement t = mat_add(spec, mat_mul(spec, Ginv, mat_mul(spec, mat_bar_transpose(spec, m), G)), m);
      for (const auto& [kk, vv] : mat_to_sparse(t)) {
        auto& row = row_for(kk);
        row[c] = add(row[c], vv);
      }
    }
  }
  if (trace_cond) {
    // the trace of a component is concentrated in one torus degree; it must
    // vanish when that degree lies in the centre of the torus (elsewhere the
    // degree component of [A,A] is everything)
    std::optional<Degree> diag_lt;
    std::vector<size_t> diag_cands;
    for (size_t c = 0; c < cands.size(); ++c)
      if (cands[c].i == cands[c].j) {
        diag_lt = cands[c].lt;
        diag_cands.push_back(c);
      }
    if (diag_lt) {
      std::vector<Integer> ltz(diag_lt->begin(), diag_lt->end());
      if (center.contains(ltz)) {
        SparseKey key_trace{-1, -1};  // synthetic row key
        auto& row = row_for(key_trace);
        for (size_t c : diag_cands) row[c] = add(row[c], cyclo_one(spec.cyclo_order));
      }
    }
  }

  auto null_basis = nullspace(std::move(rows), static_cast<long>(cands.size()), spec.cyclo_order);
  auto result = std::make_shared<std::vector<MatElement>>();
  for (const auto& vec : null_basis) {
    MatElement m;
    m.size = msize;
    for (size_t c = 0; c < cands.size(); ++c) {
      if (vec[c].is_zero()) continue;
      TorusElement t = monomial(spec, cands[c].lt, vec[c]);
      auto it = m.cells.find({cands[c].i, cands[c].j});
      if (it == m.cells.end())
        m.cells.emplace(std::make_pair(cands[c].i, cands[c].j), std::move(t));
      else
        it->second = add(spec, it->second, t);
    }
    result->push_back(std::move(m));
  }
  return result;
}

inline const std::vector<MatElement>& LieTorusModel::component_basis(const RootVec& alpha,
                                                                     const Degree& lam) const {
  ComponentKey key{alpha, lam};
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto result = solve_component(alpha, lam);
  std::lock_guard<std::mutex> lock(*memo_mutex_);
  dim_memo_[key] = static_cast<long>(result->size());
  auto [it, inserted] = memo_.emplace(key, std::move(result));
  return *it->second;
}

inline std::shared_ptr<const std::vector<MatElement>> LieTorusModel::component_basis_ptr(
    const RootVec& alpha, const Degree& lam) const {
  ComponentKey key{alpha, lam};
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto result = solve_component(alpha, lam);
  std::lock_guard<std::mutex> lock(*memo_mutex_);
  dim_memo_[key] = static_cast<long>(result->size());
  return result;
}

inline long LieTorusModel::component_dim(const RootVec& alpha, const Degree& lam) const {
  ComponentKey key{alpha, lam};
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = dim_memo_.find(key);
    if (it != dim_memo_.end()) return it->second;
  }
  auto result = solve_component(alpha, lam);
  long d = static_cast<long>(result->size());
  std::lock_guard<std::mutex> lock(*memo_mutex_);
  dim_memo_.emplace(key, d);
  return d;
}

inline std::vector<Degree> LieTorusModel::degrees_in_box(long B) const {
  // all lattice points of Lambda with sup-norm <= scale*B
  std::vector<Degree> out;
  Degree cur(n, 0);
  const long R = scale * B;
  std::function<void(long)> rec = [&](long idx) {
    if (idx == n) {
      std::vector<Integer> z(cur.begin(), cur.end());
      if (lambda_basis.contains(z)) out.push_back(cur);
      return;
    }
    for (long v = -R; v <= R; ++v) {
      cur[idx] = v;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

inline std::map<ComponentKey, long> LieTorusModel::populated_components(long B) const {
  std::set<ComponentKey> keys;
  const long R = scale * B;
  for (long i = 0; i < msize; ++i)
    for (long j = 0; j < msize; ++j) {
      RootVec alpha = detail::root_diff(mu[i], mu[j]);
      // torus degrees lt with internal degree in the box
      std::vector<std::pair<long, long>> range(n);
      bool empty = false;
      for (long c = 0; c < n; ++c) {
        long shift = tau[i][c] - tau[j][c];
        long lo = -R - shift, hi = R - shift;
        // lt[c] in [ceil(lo/scale), floor(hi/scale)]
        long l = (lo >= 0) ? (lo + scale - 1) / scale : -((-lo) / scale);
        if (scale * l < lo) ++l;
        long hcap = (hi >= 0) ? hi / scale : -(((-hi) + scale - 1) / scale);
        if (l > hcap) empty = true;
        range[c] = {l, hcap};
      }
      if (empty) continue;
      Degree lt(n);
      std::function<void(long)> rec = [&](long idx) {
        if (idx == n) {
          keys.insert({alpha, internal_degree(i, j, lt)});
          return;
        }
        for (long v = range[idx].first; v <= range[idx].second; ++v) {
          lt[idx] = v;
          rec(idx + 1);
        }
      };
      rec(0);
    }
  std::map<ComponentKey, long> out;
  for (const auto& k : keys) {
    long d = component_dim(k.alpha, k.lam);
    if (d > 0) out.emplace(k, d);
  }
  return out;
}

// ---- construction -------------------------------------------------------------

inline LieTorusModel construct(const ConstructionParams& P) {
  LieTorusModel M;
  M.params = P;
  if (P.r < 1) throw std::invalid_argument("construct: rank must be >= 1");
  if (P.q < 0) throw std::invalid_argument("construct: q must be >= 0");

  auto add_laurents = [&](std::vector<BasicTorus>& f) {
    for (int i = 0; i < P.q; ++i) f.push_back(laurent_factor());
  };

  switch (P.family) {
    case Family::SL: {
      if (P.k || P.p || P.m || !P.delta.empty())
        throw std::invalid_argument("construct: k/p/m/delta are not sl parameters");
      std::vector<BasicTorus> f;
      for (const auto& qf : P.quantum) {
        if (qf.M < 2) throw std::invalid_argument("construct: quantum factor order must be >= 2");
        long eg = ((qf.e % qf.M) + qf.M) % qf.M;
        if (qf.M / std::gcd(eg, qf.M) < 2)
          throw std::invalid_argument("construct: quantum commutation scalar must have order >= 2");
        f.push_back(quantum_factor(qf.M, qf.e));
      }
      add_laurents(f);
      M.spec = make_torus(f, false);
      M.msize = P.r + 1;
      M.amb = P.r + 1;
      M.scale = 1;
      M.has_G = false;
      M.trace_cond = true;
      break;
    }
    case Family::SU:
    case Family::SP: {
      if (!P.quantum.empty())
        throw std::invalid_argument("construct: quantum factor list is an sl parameter");
      if (P.k < 0 || P.p < 0 || P.p > 2)
        throw std::invalid_argument("construct: need k >= 0 and p in {0,1,2}");
      std::vector<BasicTorus> f;
      for (int i = 0; i < P.k; ++i) f.push_back(quantum_standard_factor());
      if (P.p == 1) f.push_back(laurent_graded_factor());
      if (P.p == 2) f.push_back(quantum_reversal_factor());
      add_laurents(f);
      M.spec = make_torus(f, true);
      if (P.family == Family::SP) {
        if (P.m || !P.delta.empty())
          throw std::invalid_argument("construct: m/delta are not sp parameters");
        if (P.r <= 2 && ((P.k == 0 && P.p == 0) || (P.k == 0 && P.p == 1) || (P.k == 1 && P.p == 0)))
          throw std::invalid_argument(
              "construct: sp with r <= 2 excludes (k,p) in {(0,0),(0,1),(1,0)}");
        M.msize = 2 * P.r;
        M.amb = P.r;
        M.scale = 1;
        M.has_G = true;
        M.trace_cond = true;
      } else {
        if (P.m < 1 || static_cast<int>(P.delta.size()) != P.m)
          throw std::invalid_argument("construct: su needs m >= 1 degrees delta");
        if (P.r == 1 && P.k == 0 && P.p == 0 && P.m < 5)
          throw std::invalid_argument(
              "construct: su with r = 1 and trivial involution needs m >= 5");
        M.msize = 2 * P.r + P.m;
        M.amb = P.r;
        M.scale = 2;
        M.has_G = true;
        M.trace_cond = true;
      }
      break;
    }
    case Family::O: {
      if (P.k || P.p || P.m || !P.quantum.empty() || !P.delta.empty())
        throw std::invalid_argument("construct: only r and q are o parameters");
      if (P.r < 4) throw std::invalid_argument("construct: o needs r >= 4");
      std::vector<BasicTorus> f;
      add_laurents(f);
      M.spec = make_torus(f, true);  // trivial involution
      M.msize = 2 * P.r;
      M.amb = P.r;
      M.scale = 1;
      M.has_G = true;
      M.trace_cond = false;
      break;
    }
  }
  M.n = M.spec.rank;

  // weight vectors and degree shifts per matrix index
  M.mu.assign(M.msize, RootVec(M.amb, 0));
  M.tau.assign(M.msize, Degree(M.n, 0));
  if (P.family == Family::SL) {
    for (long i = 0; i < M.msize; ++i) M.mu[i][i] = 1;
  } else {
    const long r = P.r;
    for (long i = 0; i < 2 * r; ++i) {
      if (i < r)
        M.mu[i][i] = 1;
      else
        M.mu[i][2 * r - 1 - i] = -1;
    }
  }
  if (P.family == Family::SU) {
    for (int j = 0; j < P.m; ++j) {
      const Degree& dj = P.delta[j];
      if (static_cast<long>(dj.size()) != M.n)
        throw std::invalid_argument("construct: delta entry has wrong length");
      M.tau[2 * P.r + j] = dj;
    }
    if (!detail::all_zero(P.delta[0]))
      throw std::invalid_argument("construct: delta_1 must be zero");
    for (const auto& d : P.delta)
      if (involution_factor(M.spec, d) != 1)
        throw std::invalid_argument("construct: delta degrees must be hermitian");
    for (size_t a = 0; a < P.delta.size(); ++a)
      for (size_t b = a + 1; b < P.delta.size(); ++b) {
        bool same = true;
        for (long c = 0; c < M.n; ++c)
          if (((P.delta[a][c] - P.delta[b][c]) % 2 + 2) % 2 != 0) same = false;
        if (same)
          throw std::invalid_argument("construct: delta degrees must be distinct mod 2L");
      }
  }

  // structure matrix G and its inverse
  if (M.has_G) {
    M.G.size = M.msize;
    const long r = P.r;
    if (P.family == Family::SP) {
      for (long i = 0; i < 2 * r; ++i) {
        Rational sign(i < r ? 1 : -1);
        M.G.set(i, 2 * r - 1 - i,
                monomial(M.spec, Degree(M.n, 0), cyclo_from_rational(M.spec.cyclo_order, sign)));
      }
    } else {  // SU, O: diag(J_{2r}[, D])
      for (long i = 0; i < 2 * r; ++i)
        M.G.set(i, 2 * r - 1 - i, monomial(M.spec, Degree(M.n, 0), cyclo_one(M.spec.cyclo_order)));
      if (P.family == Family::SU)
        for (int j = 0; j < P.m; ++j)
          M.G.set(2 * r + j, 2 * r + j,
                  monomial(M.spec, P.delta[j], cyclo_one(M.spec.cyclo_order)));
    }
    M.Ginv = monomial_matrix_inverse(M.spec, M.G);
  }

  // external lattice
  if (P.family == Family::SU) {
    std::vector<std::vector<Integer>> cols;
    for (long c = 0; c < M.n; ++c) {
      std::vector<Integer> v(M.n, Integer(0));
      v[c] = 2;
      cols.push_back(std::move(v));
    }
    for (const auto& d : P.delta) cols.emplace_back(d.begin(), d.end());
    M.Lambda = lattice_from_columns(M.n, cols);
  } else {
    M.Lambda = identity_lattice(M.n);
  }
  M.lambda_basis = LatticeBasis(M.Lambda);
  M.center = LatticeBasis(center_support(M.spec));

  // centroid support
  switch (P.family) {
    case Family::SL:
      M.centroid_gamma = center_support(M.spec);
      break;
    case Family::SU: {
      Sublattice herm = hermitian_center_support(M.spec);
      for (auto& v : herm.generators.a) v *= 2;  // doubled internal coordinates
      M.centroid_gamma = herm;
      break;
    }
    case Family::SP:
    case Family::O:
      M.centroid_gamma = hermitian_center_support(M.spec);
      break;
  }

  // split toral subalgebra
  for (int l = 0; l < P.r; ++l) {
    MatElement e;
    e.size = M.msize;
    long mirror = (P.family == Family::SL) ? l + 1 : 2 * P.r - 1 - l;
    e.set(l, l, monomial(M.spec, Degree(M.n, 0), cyclo_one(M.spec.cyclo_order)));
    e.set(mirror, mirror,
          monomial(M.spec, Degree(M.n, 0), cyclo_from_rational(M.spec.cyclo_order, Rational(-1))));
    M.h.push_back(std::move(e));
  }
  return M;
}

// ---- axiom verification on a truncation ---------------------------------------

struct VerifyItem {
  std::string axiom;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_pass = true;
  void add(std::string axiom, bool pass, std::string witness = "") {
    if (!pass) all_pass = false;
    items.push_back({std::move(axiom), pass, std::move(witness)});
  }
};

namespace detail {

inline std::string fmt_vec(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string fmt_comp(const ComponentKey& k) {
  return "alpha=" + fmt_vec(k.alpha) + " lambda=" + fmt_vec(k.lam);
}

inline long sup_norm(const std::vector<long>& v) {
  long m = 0;
  for (long x : v) m = std::max(m, std::abs(x));
  return m;
}

inline void trace(const std::string& msg) {
  static const bool on = std::getenv("LIETORI_TRACE") != nullptr;
  if (on) std::cerr << "[trace] " << msg << "\n";
}

}  // namespace detail

inline VerifyReport verify_axioms(const LieTorusModel& model, long B) {
  using detail::fmt_comp;
  using detail::fmt_vec;
  VerifyReport rep;
  if (B < 1) throw std::invalid_argument("verify_axioms: box radius must be >= 1");
  const auto& spec = model.spec;
  auto P = model.populated_components(B);
  detail::trace("verify: " + std::to_string(P.size()) + " populated components");

  // --- root support and classification (LT1, support part) ---
  std::set<RootVec> support;
  for (const auto& [key, dim] : P)
    if (!detail::all_zero(key.alpha)) support.insert(key.alpha);
  std::optional<RootSystemInfo> info;
  {
    std::string witness;
    try {
      info = classify_root_system(std::vector<RootVec>(support.begin(), support.end()));
    } catch (const std::exception& ex) {
      witness = ex.what();
    }
    detail::trace("verify: LT1-support done");
  rep.add("LT1-support", info.has_value(), witness);
  }

  // --- LT1: dim <= 1 away from 0 ---
  {
    bool ok = true;
    std::string witness;
    for (const auto& [key, dim] : P)
      if (!detail::all_zero(key.alpha) && dim > 1) {
        ok = false;
        witness = fmt_comp(key) + " dim=" + std::to_string(dim);
        break;
      }
    rep.add("LT1-dims", ok, witness);
  }

  // --- LT2(i): (alpha, 0) populated for indivisible roots ---
  if (info) {
    bool ok = true;
    std::string witness;
    for (const auto& [alpha, len] : info->length_of) {
      if (len == RootLength::ExtraLong) continue;
      if (model.component_dim(alpha, Degree(model.n, 0)) != 1) {
        ok = false;
        witness = "alpha=" + fmt_vec(alpha);
        break;
      }
    }
    detail::trace("verify: LT2(i) done");
  rep.add("LT2(i)", ok, witness);
  } else {
    rep.add("LT2(i)", false, "no classified root system");
  }

  // --- LT2(ii): sl2 pairs acting by Cartan integers ---
  {
    bool ok = true;
    std::string witness;
    // sample components at small degree
    std::vector<ComponentKey> samples;
    for (const auto& [key, dim] : P)
      if (!detail::all_zero(key.alpha) && detail::sup_norm(key.lam) <= model.scale)
        samples.push_back(key);
    const bool big = P.size() > 5000;
    for (const auto& [key, dim] : P) {
      if (!ok) break;
      if (detail::all_zero(key.alpha)) continue;
      RootVec nalpha = key.alpha;
      for (auto& x : nalpha) x = -x;
      Degree nlam = key.lam;
      for (auto& x : nlam) x = -x;
      auto nit = P.find({nalpha, nlam});
      if (dim != 1 || nit == P.end() || nit->second != 1) {
        ok = false;
        witness = fmt_comp(key) + ": opposite component missing or dim != 1";
        break;
      }
      // on large truncations, run the bracket computations only near the
      // origin (the dim/opposite symmetry above is still checked everywhere)
      if (big && detail::sup_norm(key.lam) > model.scale) continue;
      auto e_ptr = model.component_basis_ptr(key.alpha, key.lam);
      auto f_ptr = model.component_basis_ptr(nalpha, nlam);
      const MatElement& e = (*e_ptr)[0];
      const MatElement& f = (*f_ptr)[0];
      MatElement hh = mat_commutator(spec, e, f);
      // [h, e] = 2c e fixes the normalization constant c, which must be nonzero
      auto s_e = scalar_ratio(spec, mat_commutator(spec, hh, e), e);
      if (!s_e || s_e->is_zero()) {
        ok = false;
        witness = fmt_comp(key) + ": [[e,f],e] is not a nonzero multiple of e";
        break;
      }
      Cyclotomic c = scale(*s_e, Rational(1, 2));
      long aa = detail::dot(key.alpha, key.alpha);
      long checked = 0;
      for (const auto& skey : samples) {
        if (big && checked >= 8) break;
        ++checked;
        long num = 2 * detail::dot(skey.alpha, key.alpha);
        if (num % aa != 0) {
          ok = false;
          witness = "non-integral Cartan pairing at " + fmt_comp(skey);
          break;
        }
        long cart = num / aa;
        const MatElement& x = model.component_basis(skey.alpha, skey.lam)[0];
        MatElement lhs = mat_commutator(spec, hh, x);
        MatElement rhs = mat_scale(x, scale(c, Rational(cart)));
        if (!mat_sub(spec, lhs, rhs).is_zero()) {
          ok = false;
          witness = fmt_comp(key) + " acting on " + fmt_comp(skey) + ": not Cartan-integral";
          break;
        }
      }
    }
    detail::trace("verify: LT2(ii) done");
  rep.add("LT2(ii)", ok, witness);
  }

  // --- LT3: zero-root components generated by root spaces ---
  {
    bool ok = true;
    std::string witness;
    // group populated root components by degree for the candidate scan
    std::vector<ComponentKey> root_comps;
    for (const auto& [key, dim] : P)
      if (!detail::all_zero(key.alpha)) root_comps.push_back(key);
    std::sort(root_comps.begin(), root_comps.end(),
              [](const ComponentKey& a, const ComponentKey& b) {
                long na = detail::sup_norm(a.lam), nb = detail::sup_norm(b.lam);
                return std::tie(na, a.alpha, a.lam) < std::tie(nb, b.alpha, b.lam);
              });
    for (const auto& [key, dim] : P) {
      if (!ok) break;
      if (!detail::all_zero(key.alpha)) continue;
      auto targets_ptr = model.component_basis_ptr(key.alpha, key.lam);
      const auto& targets = *targets_ptr;
      IncrementalSpan span;
      std::vector<size_t> missing(targets.size());
      for (size_t t = 0; t < targets.size(); ++t) missing[t] = t;
      auto prune = [&]() {
        std::vector<size_t> still;
        for (size_t t : missing)
          if (!span.contains(mat_to_sparse(targets[t]))) still.push_back(t);
        missing = std::move(still);
      };
      for (const auto& ck : root_comps) {
        if (missing.empty()) break;
        RootVec nalpha = ck.alpha;
        for (auto& x : nalpha) x = -x;
        Degree rest(model.n);
        for (long c = 0; c < model.n; ++c) rest[c] = key.lam[c] - ck.lam[c];
        std::vector<Integer> rz(rest.begin(), rest.end());
        if (!model.lambda_basis.contains(rz)) continue;
        auto left_ptr = model.component_basis_ptr(ck.alpha, ck.lam);
        auto right_ptr = model.component_basis_ptr(nalpha, rest);
        bool added = false;
        for (const auto& x : *left_ptr)
          for (const auto& y : *right_ptr)
            if (span.add(mat_to_sparse(mat_commutator(spec, x, y)))) added = true;
        if (added) prune();
      }
      if (!missing.empty()) {
        ok = false;
        witness = fmt_comp(key) + ": not spanned by brackets of root spaces";
      }
    }
    detail::trace("verify: LT3 done");
  rep.add("LT3", ok, witness);
  }

  // --- LT4: populated degrees generate the external lattice ---
  {
    std::set<Degree> degs;
    for (const auto& [key, dim] : P) degs.insert(key.lam);
    // keep only degrees that enlarge the generated lattice so the normal-form
    // computation below stays on a handful of columns
    std::vector<std::vector<Integer>> cols;
    std::optional<LatticeBasis> partial;
    for (const auto& d : degs) {
      std::vector<Integer> z(d.begin(), d.end());
      if (partial && partial->contains(z)) continue;
      cols.push_back(z);
      partial.emplace(lattice_from_columns(model.n, cols));
    }
    Sublattice gen = lattice_from_columns(model.n, cols);
    bool ok = false;
    std::string witness;
    try {
      ok = quotient_of(model.Lambda, gen).trivial();
      if (!ok) witness = "populated degrees generate a proper sublattice";
    } catch (const std::exception& ex) {
      witness = ex.what();
    }
    detail::trace("verify: LT4 done");
  rep.add("LT4", ok, witness);
  }

  // --- centrelessness spot check on the unit box ---
  {
    bool ok = true;
    std::string witness;
    std::vector<const MatElement*> gens;
    for (const auto& [key, dim] : P)
      if (detail::sup_norm(key.lam) <= model.scale)
        for (const auto& g : model.component_basis(key.alpha, key.lam)) gens.push_back(&g);
    for (const auto& [key, dim] : P) {
      if (!ok) break;
      if (detail::sup_norm(key.lam) > model.scale) continue;
      for (const auto& v : model.component_basis(key.alpha, key.lam)) {
        bool moved = false;
        for (const auto* g : gens)
          if (!mat_commutator(spec, v, *g).is_zero()) {
            moved = true;
            break;
          }
        if (!moved) {
          ok = false;
          witness = fmt_comp(key) + ": basis vector commutes with all boxed generators";
          break;
        }
      }
    }
    detail::trace("verify: centreless done");
  rep.add("centreless", ok, witness);
  }

  return rep;
}

}  // namespace lietori
