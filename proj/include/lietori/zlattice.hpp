#pragma once

// Integer lattice utilities: Smith normal form, quotient invariants,
// congruence kernels and coset enumeration.  All arithmetic is exact (GMP).

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"  // Integer

namespace lietori {

struct IntMatrix {
  long rows = 0, cols = 0;
  std::vector<Integer> a;

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), a(r * c, Integer(0)) {}

  Integer& at(long r, long c) { return a[r * cols + c]; }
  const Integer& at(long r, long c) const { return a[r * cols + c]; }

  static IntMatrix identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix C(A.rows, B.cols);
  for (long i = 0; i < A.rows; ++i)
    for (long k = 0; k < A.cols; ++k) {
      const Integer& v = A.at(i, k);
      if (v == 0) continue;
      for (long j = 0; j < B.cols; ++j) C.at(i, j) += v * B.at(k, j);
    }
  return C;
}

// U * input * V = S with U, V unimodular; S diagonal with d_1 | d_2 | ... >= 0.
// Uinv is maintained so that coset representatives can be pulled back.
struct SNFResult {
  IntMatrix S, U, V, Uinv;
  long rank = 0;  // number of nonzero diagonal entries
};

inline SNFResult smith_normal_form(IntMatrix m) {
  const long R = m.rows, C = m.cols;
  SNFResult res;
  res.U = IntMatrix::identity(R);
  res.Uinv = IntMatrix::identity(R);
  res.V = IntMatrix::identity(C);

  auto swap_rows = [&](long i, long j) {
    if (i == j) return;
    for (long c = 0; c < C; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (long c = 0; c < R; ++c) std::swap(res.U.at(i, c), res.U.at(j, c));
    for (long r = 0; r < R; ++r) std::swap(res.Uinv.at(r, i), res.Uinv.at(r, j));
  };
  auto swap_cols = [&](long i, long j) {
    if (i == j) return;
    for (long r = 0; r < R; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (long r = 0; r < C; ++r) std::swap(res.V.at(r, i), res.V.at(r, j));
  };
  auto negate_row = [&](long i) {
    for (long c = 0; c < C; ++c) m.at(i, c) = -m.at(i, c);
    for (long c = 0; c < R; ++c) res.U.at(i, c) = -res.U.at(i, c);
    for (long r = 0; r < R; ++r) res.Uinv.at(r, i) = -res.Uinv.at(r, i);
  };
  // row_i += t * row_j  (so Uinv: col_j -= t * col_i)
  auto add_row = [&](long i, long j, const Integer& t) {
    if (t == 0) return;
    for (long c = 0; c < C; ++c) m.at(i, c) += t * m.at(j, c);
    for (long c = 0; c < R; ++c) res.U.at(i, c) += t * res.U.at(j, c);
    for (long r = 0; r < R; ++r) res.Uinv.at(r, j) -= t * res.Uinv.at(r, i);
  };
  auto add_col = [&](long i, long j, const Integer& t) {
    if (t == 0) return;
    for (long r = 0; r < R; ++r) m.at(r, i) += t * m.at(r, j);
    for (long r = 0; r < C; ++r) res.V.at(r, i) += t * res.V.at(r, j);
  };

  long t = 0;
  const long n = std::min(R, C);
  while (t < n) {
    // locate nonzero entry of smallest absolute value in m[t.., t..]
    long pr = -1, pc = -1;
    Integer best;
    for (long i = t; i < R; ++i)
      for (long j = t; j < C; ++j) {
        const Integer& v = m.at(i, j);
        if (v == 0) continue;
        Integer av = abs(v);
        if (pr < 0 || av < best) {
          best = av;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // rest of matrix is zero
    swap_rows(t, pr);
    swap_cols(t, pc);
    if (m.at(t, t) < 0) negate_row(t);

    bool clean = true;
    for (long i = t + 1; i < R; ++i) {
      if (m.at(i, t) == 0) continue;
      Integer qq;
      mpz_fdiv_q(qq.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
      add_row(i, t, -qq);
      if (m.at(i, t) != 0) clean = false;
    }
    for (long j = t + 1; j < C; ++j) {
      if (m.at(t, j) == 0) continue;
      Integer qq;
      mpz_fdiv_q(qq.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
      add_col(j, t, -qq);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; re-pivot

    // pivot must divide every remaining entry for the divisibility chain
    bool divides_all = true;
    for (long i = t + 1; i < R && divides_all; ++i)
      for (long j = t + 1; j < C; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          add_row(t, i, Integer(1));  // drag the bad entry into the pivot row
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    ++t;
  }
  res.S = std::move(m);
  res.rank = t;
  return res;
}

// A sublattice of Z^n, given by a (possibly redundant) generating set stored
// as the columns of `generators`.
struct Sublattice {
  long ambient_rank = 0;
  IntMatrix generators;  // ambient_rank x (number of generators)
};

// Invariant factors of Z^n / (column lattice): torsion orders (each > 1,
// divisibility chain) plus the free rank.
struct QuotientInfo {
  std::vector<Integer> torsion;
  long free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  bool operator==(const QuotientInfo& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
};

inline QuotientInfo quotient_invariants(const Sublattice& L) {
  QuotientInfo out;
  if (L.generators.cols == 0) {
    out.free_rank = L.ambient_rank;
    return out;
  }
  SNFResult snf = smith_normal_form(L.generators);
  for (long i = 0; i < snf.rank; ++i) {
    const Integer& d = snf.S.at(i, i);
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = L.ambient_rank - snf.rank;
  return out;
}

// Kernel lattice of an integer matrix (columns span the kernel of v -> A v).
inline Sublattice integer_kernel(const IntMatrix& A) {
  SNFResult snf = smith_normal_form(A);
  long k = A.cols - snf.rank;
  Sublattice out;
  out.ambient_rank = A.cols;
  out.generators = IntMatrix(A.cols, k);
  for (long j = 0; j < k; ++j)
    for (long r = 0; r < A.cols; ++r)
      out.generators.at(r, j) = snf.V.at(r, snf.rank + j);
  return out;
}

// {lambda in Z^n : c * lambda == 0 (mod M)}, returned as a full-rank
// sublattice of Z^n.
inline Sublattice congruence_kernel(const IntMatrix& c, const Integer& M) {
  if (M <= 0) throw std::invalid_argument("congruence_kernel: modulus must be positive");
  const long rows = c.rows, n = c.cols;
  IntMatrix A(rows, n + rows);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < n; ++j) A.at(i, j) = c.at(i, j);
    A.at(i, n + i) = M;
  }
  Sublattice full = integer_kernel(A);
  Sublattice out;
  out.ambient_rank = n;
  out.generators = IntMatrix(n, full.generators.cols);
  for (long j = 0; j < full.generators.cols; ++j)
    for (long r = 0; r < n; ++r) out.generators.at(r, j) = full.generators.at(r, j);
  return out;
}

// Representatives of Z^n modulo a finite-index sublattice; the zero coset
// comes first.  Errors if the quotient is infinite.
inline std::vector<std::vector<Integer>> coset_representatives(const Sublattice& L) {
  const long n = L.ambient_rank;
  SNFResult snf = smith_normal_form(L.generators);
  if (snf.rank < n)
    throw std::domain_error("coset_representatives: quotient is infinite");
  std::vector<Integer> d(n);
  for (long i = 0; i < n; ++i) d[i] = snf.S.at(i, i);

  std::vector<std::vector<Integer>> reps;
  std::vector<Integer> digits(n, Integer(0));
  while (true) {
    // rep = Uinv * digits
    std::vector<Integer> rep(n, Integer(0));
    for (long i = 0; i < n; ++i)
      if (digits[i] != 0)
        for (long r = 0; r < n; ++r) rep[r] += snf.Uinv.at(r, i) * digits[i];
    reps.push_back(std::move(rep));
    long pos = n - 1;
    while (pos >= 0) {
      digits[pos] += 1;
      if (digits[pos] < d[pos]) break;
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return reps;
}

// A lattice in basis form, with fast membership and coordinate queries.
// basis holds a Z-basis as columns; membership of v is tested via the SNF
// data of the generating set.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  explicit LatticeBasis(const Sublattice& L) : n_(L.ambient_rank) {
    snf_ = smith_normal_form(L.generators);
    basis_ = IntMatrix(n_, snf_.rank);
    for (long j = 0; j < snf_.rank; ++j)
      for (long r = 0; r < n_; ++r)
        basis_.at(r, j) = snf_.Uinv.at(r, j) * snf_.S.at(j, j);
  }

  long ambient_rank() const { return n_; }
  long rank() const { return snf_.rank; }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Integer>& v) const {
    if (static_cast<long>(v.size()) != n_)
      throw std::invalid_argument("LatticeBasis::contains: dimension mismatch");
    for (long i = 0; i < n_; ++i) {
      Integer y(0);
      for (long j = 0; j < n_; ++j) y += snf_.U.at(i, j) * v[j];
      if (i < snf_.rank) {
        if (y % snf_.S.at(i, i) != 0) return false;
      } else if (y != 0) {
        return false;
      }
    }
    return true;
  }

  // Coordinates of v in the stored basis; v must belong to the lattice.
  std::vector<Integer> coordinates(const std::vector<Integer>& v) const {
    std::vector<Integer> y(rank());
    for (long i = 0; i < n_; ++i) {
      Integer s(0);
      for (long j = 0; j < n_; ++j) s += snf_.U.at(i, j) * v[j];
      if (i < snf_.rank) {
        if (s % snf_.S.at(i, i) != 0)
          throw std::domain_error("LatticeBasis::coordinates: vector not in lattice");
        y[i] = s / snf_.S.at(i, i);
      } else if (s != 0) {
        throw std::domain_error("LatticeBasis::coordinates: vector not in lattice");
      }
    }
    return y;
  }

 private:
  long n_ = 0;
  SNFResult snf_;
  IntMatrix basis_;
};

// Quotient Lambda / Gamma for Gamma <= Lambda <= Z^n: express the Gamma
// generators in a basis of Lambda and read off the invariant factors there.
inline QuotientInfo quotient_of(const Sublattice& Lambda, const Sublattice& Gamma) {
  LatticeBasis LB(Lambda);
  Sublattice inner;
  inner.ambient_rank = LB.rank();
  inner.generators = IntMatrix(LB.rank(), Gamma.generators.cols);
  for (long j = 0; j < Gamma.generators.cols; ++j) {
    std::vector<Integer> g(Lambda.ambient_rank);
    for (long r = 0; r < Lambda.ambient_rank; ++r) g[r] = Gamma.generators.at(r, j);
    std::vector<Integer> y = LB.coordinates(g);
    for (long r = 0; r < LB.rank(); ++r) inner.generators.at(r, j) = y[r];
  }
  return quotient_invariants(inner);
}

// Representatives of Lambda / Gamma, expressed in ambient coordinates; the
// zero coset first.  Errors if the index is infinite.
inline std::vector<std::vector<Integer>> coset_representatives_in(
    const Sublattice& Lambda, const Sublattice& Gamma) {
  LatticeBasis LB(Lambda);
  Sublattice inner;
  inner.ambient_rank = LB.rank();
  inner.generators = IntMatrix(LB.rank(), Gamma.generators.cols);
  for (long j = 0; j < Gamma.generators.cols; ++j) {
    std::vector<Integer> g(Lambda.ambient_rank);
    for (long r = 0; r < Lambda.ambient_rank; ++r) g[r] = Gamma.generators.at(r, j);
    std::vector<Integer> y = LB.coordinates(g);
    for (long r = 0; r < LB.rank(); ++r) inner.generators.at(r, j) = y[r];
  }
  auto inner_reps = coset_representatives(inner);
  std::vector<std::vector<Integer>> out;
  out.reserve(inner_reps.size());
  for (const auto& y : inner_reps) {
    std::vector<Integer> v(Lambda.ambient_rank, Integer(0));
    for (long j = 0; j < LB.rank(); ++j)
      if (y[j] != 0)
        for (long r = 0; r < Lambda.ambient_rank; ++r)
          v[r] += LB.basis().at(r, j) * y[j];
    out.push_back(std::move(v));
  }
  return out;
}

inline Sublattice identity_lattice(long n) {
  Sublattice L;
  L.ambient_rank = n;
  L.generators = IntMatrix::identity(n);
  return L;
}

inline Sublattice lattice_from_columns(long n, const std::vector<std::vector<Integer>>& cols) {
  Sublattice L;
  L.ambient_rank = n;
  L.generators = IntMatrix(n, static_cast<long>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<long>(cols[j].size()) != n)
      throw std::invalid_argument("lattice_from_columns: bad column length");
    for (long r = 0; r < n; ++r) L.generators.at(r, j) = cols[j][r];
  }
  return L;
}

}  // namespace lietori
