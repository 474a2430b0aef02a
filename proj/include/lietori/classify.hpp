#pragma once

// Closed-form invariant tuples for the four matrix families, the static table
// of exceptional algebras, the rank function f(k,p) and its injectivity, the
// isomorphism decision procedure, and the desk-scale disjointness scan.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"

namespace lietori {

// ---- closed forms --------------------------------------------------------------

namespace detail {

// rank over F2 of a list of 0/1 vectors
inline long f2_rank(std::vector<std::vector<int>> rows) {
  long rank = 0;
  const long cols = rows.empty() ? 0 : static_cast<long>(rows[0].size());
  for (long c = 0; c < cols; ++c) {
    long pr = -1;
    for (long r = rank; r < static_cast<long>(rows.size()); ++r)
      if (rows[r][c]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    for (long r = 0; r < static_cast<long>(rows.size()); ++r)
      if (r != rank && rows[r][c])
        for (long j = 0; j < cols; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

inline long quantum_order(const QuantumParam& f) {
  long eg = ((f.e % f.M) + f.M) % f.M;
  return f.M / std::gcd(eg, f.M);
}

// invariant factors of a direct sum of cyclic groups given by their orders
inline std::vector<Integer> invariant_factors(std::vector<long> orders) {
  orders.erase(std::remove(orders.begin(), orders.end(), 1L), orders.end());
  if (orders.empty()) return {};
  Sublattice L;
  L.ambient_rank = static_cast<long>(orders.size());
  L.generators = IntMatrix(L.ambient_rank, L.ambient_rank);
  for (long i = 0; i < L.ambient_rank; ++i) L.generators.at(i, i) = orders[i];
  return quotient_invariants(L).torsion;
}

}  // namespace detail

// SU quotient exponents: a = F2-dimension of the span of the delta parities,
// b = the same after dropping the trailing q coordinates.
inline std::pair<long, long> su_delta_ab(const ConstructionParams& P) {
  const long n = 2 * P.k + P.p + P.q;
  std::vector<std::vector<int>> full, head;
  for (const auto& d : P.delta) {
    std::vector<int> row(n), row2(n - P.q);
    for (long c = 0; c < n; ++c) row[c] = static_cast<int>(((d[c] % 2) + 2) % 2);
    for (long c = 0; c < n - P.q; ++c) row2[c] = row[c];
    full.push_back(std::move(row));
    head.push_back(std::move(row2));
  }
  return {detail::f2_rank(full), detail::f2_rank(head)};
}

// Closed-form invariant tuple of an admissible parameter set, evaluated from
// the tabulated formulas without constructing the algebra.
inline InvariantTuple closed_form_tuple(const ConstructionParams& P) {
  (void)construct(P);  // reuse the constructive validation
  InvariantTuple T;
  switch (P.family) {
    case Family::SL: {
      long d = 1;
      std::vector<long> orders;
      for (const auto& f : P.quantum) {
        long o = detail::quantum_order(f);
        d *= o;
        orders.push_back(o);
        orders.push_back(o);
      }
      const long s = (P.r + 1) * d;
      T.type = "A" + std::to_string(P.r);
      T.nullity = 2 * static_cast<long>(P.quantum.size()) + P.q;
      T.crk = s * s - 1;
      T.rkv = {d * d};
      T.quotient.torsion = detail::invariant_factors(orders);
      break;
    }
    case Family::SU: {
      const long d = 1L << (P.k + P.p / 2);
      const long s = (2 * P.r + P.m) * d;
      const long sgn = (P.k % 2 == 0) ? 1 : -1;
      T.type = (P.k == 0 && P.p == 0)
                   ? (P.r == 1 ? std::string("A1") : "B" + std::to_string(P.r))
                   : "BC" + std::to_string(P.r);
      T.nullity = 2 * P.k + P.p + P.q;
      T.crk = (P.p == 1) ? s * s - 1 : s * (s - sgn) / 2;
      const long dbl = (P.p == 1) ? 2 : 1;
      T.rkv.push_back(dbl * P.m * d * d);
      if (P.r > 1) T.rkv.push_back(dbl * d * d);
      const long last = (P.p == 1) ? d * d : d * (d - sgn) / 2;
      if (last > 0) T.rkv.push_back(last);
      auto [a, b] = su_delta_ab(P);
      std::vector<long> orders(2 * P.k + P.p + a - 2 * b, 2);
      orders.insert(orders.end(), b, 4);
      T.quotient.torsion = detail::invariant_factors(orders);
      break;
    }
    case Family::SP: {
      const long d = 1L << (P.k + P.p / 2);
      const long s = 2 * P.r * d;
      const long sgn = (P.k % 2 == 0) ? 1 : -1;
      T.type = (P.r == 1) ? std::string("A1")
                          : (P.r == 2 ? std::string("B2") : "C" + std::to_string(P.r));
      T.nullity = 2 * P.k + P.p + P.q;
      T.crk = (P.p == 1) ? s * s - 1 : s * (s + sgn) / 2;
      if (P.r > 1) T.rkv.push_back((P.p == 1 ? 2 : 1) * d * d);
      T.rkv.push_back((P.p == 1) ? d * d : d * (d + sgn) / 2);
      T.quotient.torsion = detail::invariant_factors(std::vector<long>(2 * P.k + P.p, 2));
      break;
    }
    case Family::O: {
      T.type = "D" + std::to_string(P.r);
      T.nullity = P.q;
      T.crk = P.r * (2 * P.r - 1);
      T.rkv = {1};
      break;
    }
  }
  return T;
}

// ---- the rank function f -------------------------------------------------------

inline long f_value(long k, long p) {
  if (k < 0 || p < 0 || p > 2) throw std::invalid_argument("f_value: need k >= 0, p in {0,1,2}");
  if (p == 1) return 1L << (2 * k);
  const long d = 1L << (k + p / 2);
  return d * (d + ((k % 2 == 0) ? 1 : -1)) / 2;
}

struct FScanReport {
  bool pass = false;
  long pairs_checked = 0;
  std::string witness;
};

// f takes the value 1 exactly at (0,0), (1,0), (0,1) and is injective away
// from those three pairs.
inline FScanReport f_injectivity_scan(long k_max) {
  if (k_max < 2) throw std::invalid_argument("f_injectivity_scan: need k_max >= 2");
  FScanReport rep;
  std::map<long, std::pair<long, long>> seen;
  auto unit = [](long k, long p) {
    return (k == 0 && p == 0) || (k == 1 && p == 0) || (k == 0 && p == 1);
  };
  for (long k = 0; k <= k_max; ++k)
    for (long p = 0; p <= 2; ++p) {
      ++rep.pairs_checked;
      long v = f_value(k, p);
      if ((v == 1) != unit(k, p)) {
        rep.witness = "f(" + std::to_string(k) + "," + std::to_string(p) + ") = " +
                      std::to_string(v);
        return rep;
      }
      if (unit(k, p)) continue;
      auto [it, fresh] = seen.emplace(v, std::make_pair(k, p));
      if (!fresh) {
        rep.witness = "f collision at " + std::to_string(v);
        return rep;
      }
    }
  rep.pass = true;
  return rep;
}

// ---- isomorphism decisions -----------------------------------------------------

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };

struct IsoDecision {
  IsoVerdict verdict = IsoVerdict::Undecided;
  std::string reason;
};

namespace detail {

// canonical form of a quantum factor list: (order, exponent) pairs with the
// exponent reduced modulo inversion (swapping the two variables of a factor
// inverts its commutation scalar), sorted
inline std::vector<std::pair<long, long>> canonical_quantum(const std::vector<QuantumParam>& qs) {
  std::vector<std::pair<long, long>> out;
  for (const auto& f : qs) {
    long o = quantum_order(f);
    long eg = ((f.e % f.M) + f.M) % f.M;
    long e = (eg / (f.M / o)) % o;  // zeta_M^eg is the primitive root zeta_o^e
    e = std::min(e, (o - e) % o);
    out.emplace_back(o, e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Degree> sorted_delta(const std::vector<Degree>& delta) {
  std::vector<Degree> out = delta;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline IsoDecision decide_isomorphic(const ConstructionParams& A, const ConstructionParams& B) {
  InvariantTuple ta = closed_form_tuple(A), tb = closed_form_tuple(B);
  IsoDecision out;
  if (A.family != B.family) {
    out.verdict = IsoVerdict::NotIsomorphic;
    out.reason = "the four construction classes are pairwise disjoint";
    return out;
  }
  auto four_equal = [&](bool with_rkv) {
    return ta.type == tb.type && ta.nullity == tb.nullity && (!with_rkv || ta.rkv == tb.rkv);
  };
  switch (A.family) {
    case Family::O: {
      bool same = (A.r == B.r && A.q == B.q);
      if (same != four_equal(false)) {
        out.reason = "parameter verdict disagrees with (type, nullity) comparison";
        return out;
      }
      out.verdict = same ? IsoVerdict::Isomorphic : IsoVerdict::NotIsomorphic;
      out.reason = same ? "identical parameters" : "(type, nullity) classify this family";
      return out;
    }
    case Family::SP: {
      bool same = (A.r == B.r && A.k == B.k && A.p == B.p && A.q == B.q);
      if (same != four_equal(true)) {
        out.reason = "parameter verdict disagrees with (type, nullity, rkv) comparison";
        return out;
      }
      out.verdict = same ? IsoVerdict::Isomorphic : IsoVerdict::NotIsomorphic;
      out.reason = same ? "identical parameters" : "(type, nullity, rkv) classify this family";
      return out;
    }
    case Family::SL: {
      if (A.r == B.r && A.q == B.q &&
          detail::canonical_quantum(A.quantum) == detail::canonical_quantum(B.quantum)) {
        out.verdict = IsoVerdict::Isomorphic;
        out.reason = "identical parameters up to factor inversion";
      } else if (ta != tb) {
        out.verdict = IsoVerdict::NotIsomorphic;
        out.reason = "invariant tuples differ";
      } else {
        out.verdict = IsoVerdict::Undecided;
        out.reason = "equal invariants; the general classification over quantum tori is open";
      }
      return out;
    }
    case Family::SU: {
      if (A.r == B.r && A.k == B.k && A.p == B.p && A.q == B.q &&
          detail::sorted_delta(A.delta) == detail::sorted_delta(B.delta)) {
        out.verdict = IsoVerdict::Isomorphic;
        out.reason = "identical parameters up to reordering the hermitian degrees";
      } else if (ta != tb) {
        out.verdict = IsoVerdict::NotIsomorphic;
        out.reason = "invariant tuples differ";
      } else {
        out.verdict = IsoVerdict::Undecided;
        out.reason = "equal invariants; the hermitian classification is open";
      }
      return out;
    }
  }
  return out;
}

// ---- exceptional rows ----------------------------------------------------------

struct ExceptionalRow {
  int id = 0;
  std::string root_type;
  long min_nullity = 0;
  long crk = 0;
  std::vector<long> rkv;
  std::vector<Integer> quotient_torsion;
  std::string index_string;
  std::string reference_string;
};

inline const std::vector<ExceptionalRow>& exceptional_rows() {
  auto t = [](std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
  };
  static const std::vector<ExceptionalRow> rows = {
      {1, "A1", 3, 133, {27}, t({3, 3, 3}), "E7,1^(78)", "Y1, Example 6.8(3)"},
      {2, "A2", 3, 78, {8}, t({2, 2, 2}), "1E6,2^(28)", "AF, Example 9.2"},
      {3, "C3", 3, 133, {8, 1}, t({2, 2, 2}), "E7,3^(28)", "AG, Thm. 4.87(ii)"},
      {4, "E6", 0, 78, {1}, t({}), "1E6,6^(0)", "untwisted"},
      {5, "E7", 0, 133, {1}, t({}), "E7,7^(0)", "untwisted"},
      {6, "E8", 0, 248, {1}, t({}), "E8,8^(0)", "untwisted"},
      {7, "G2", 0, 14, {1, 1}, t({}), "G2,2^(0)", "untwisted"},
      {8, "G2", 1, 28, {3, 1}, t({3}), "3D4,2^(2)", "AG, Thm. 5.63, p=1"},
      {9, "G2", 2, 78, {9, 1}, t({3, 3}), "1E6,2^(16)", "AG, Thm. 5.63, p=2"},
      {10, "G2", 3, 248, {27, 1}, t({3, 3, 3}), "E8,2^(78)", "AG, Thm. 5.63, p=3"},
      {11, "F4", 0, 52, {1, 1}, t({}), "F4,4^(0)", "untwisted"},
      {12, "F4", 1, 78, {2, 1}, t({2}), "2E6,4^(2)", "AG, Thm. 5.50, p=1"},
      {13, "F4", 2, 133, {4, 1}, t({2, 2}), "E7,4^(9)", "AG, Thm. 5.50, p=2"},
      {14, "F4", 3, 248, {8, 1}, t({2, 2, 2}), "E8,4^(28)", "AG, Thm. 5.50, p=3"},
      {15, "BC1", 3, 52, {8, 1}, t({2, 2, 2}), "F4,1^(21)", "AFY, Thm. 5.19(b), k=0"},
      {16, "BC1", 4, 78, {16, 8}, t({2, 2, 2, 2}), "2E6,1^(29)", "AFY, Thm. 5.19(b), k=1"},
      {17, "BC1", 5, 133, {32, 10}, t({2, 2, 2, 2, 2}), "E7,1^(48)", "AFY, Thm. 5.19(b), k=2"},
      {18, "BC1", 6, 248, {64, 14}, t({2, 2, 2, 2, 2, 2}), "E8,1^(91)",
       "AFY, Thm. 5.19(b), k=3"},
      {19, "BC1", 5, 78, {20, 1}, t({2, 2, 2, 2, 2}), "2E6,1^(35)",
       "AFY, Thm. 10.6(a), case 1"},
      {20, "BC1", 6, 133, {32, 1}, t({2, 2, 2, 2, 2, 2}), "E7,1^(66)",
       "AFY, Thm. 10.6(a), case 2"},
      {21, "BC1", 7, 248, {56, 1}, t({2, 2, 2, 2, 2, 2, 2}), "E8,1^(133)",
       "AFY, Thm. 10.6(a), case 3"},
      {22, "BC1", 5, 133, {32, 1}, t({2, 2, 2, 2, 2}), "E7,1^(66)", "AFY, Remark 10.6(a)"},
      {23, "BC1", 3, 133, {32, 1}, t({2, 4, 4}), "E7,1^(66)", "AFY, Thm. 13.3, case 1"},
      {24, "BC1", 3, 248, {56, 1}, t({4, 4, 4}), "E8,1^(133)", "AFY, Thm. 13.3, case 2"},
      {25, "BC2", 3, 78, {8, 12, 1}, t({2, 2, 2}), "2E6,2^(16')", "F, Lem. 7, n~=0"},
      {26, "BC2", 4, 133, {16, 16, 1}, t({2, 2, 2, 2}), "E7,2^(31)", "F, Lem. 7, n~=1"},
      {27, "BC2", 5, 248, {32, 24, 1}, t({2, 2, 2, 2, 2}), "E8,2^(66)", "F, Lem. 7, n~=2"},
  };
  return rows;
}

struct ExceptionalFilter {
  std::optional<int> id;
  std::optional<std::string> root_type;
  std::optional<long> crk;
};

inline std::vector<ExceptionalRow> exceptional_lookup(const ExceptionalFilter& f) {
  std::vector<ExceptionalRow> out;
  for (const auto& row : exceptional_rows()) {
    if (f.id && row.id != *f.id) continue;
    if (f.root_type && row.root_type != *f.root_type) continue;
    if (f.crk && row.crk != *f.crk) continue;
    out.push_back(row);
  }
  return out;
}

// ---- disjointness scan ---------------------------------------------------------

struct ScanBounds {
  int r_max = 4;
  int k_max = 2;
  int p_max = 2;
  int q_max = 2;
  int m_max = 5;
  long zeta_max = 6;
};

struct ScanEntry {
  std::string cls;  // "sl", "su", "sp", "o", "exceptional"
  ConstructionParams params;
  int row_id = 0;  // exceptional entries only
  InvariantTuple tuple;
};

struct Collision {
  ScanEntry a, b;
  bool allowed = false;  // the known four-invariant coincidence shape
};

struct DisjointnessReport {
  long entries = 0;
  std::vector<Collision> cross_class;       // collisions between distinct classes
  long forbidden_cross_class = 0;           // those outside the allowed shape
  bool arithmetic_check = false;            // s^2 - 1 avoids {78, 133}
  std::set<int> colliding_exceptional_ids;  // grouped by (type, crk, rkv)
  bool exceptional_groups_ok = false;       // exactly {20,22,23} and {21,24}
  bool quotients_separate_groups = false;
  bool pass = false;
};

namespace detail {

// hermitian parity classes of the torus with involution used by su/sp:
// k standard pairs force even coordinates; a p=1 coordinate must be even; a
// p=2 pair excludes odd-odd; the q Laurent coordinates are free
inline std::vector<Degree> hermitian_parity_classes(int k, int p, int q) {
  std::vector<Degree> out;
  std::vector<Degree> pblock;
  if (p == 2)
    pblock = {{0, 0}, {1, 0}, {0, 1}};
  else
    pblock = {Degree(p, 0)};
  const long n = 2 * k + p + q;
  for (const auto& pb : pblock)
    for (long mask = 0; mask < (1L << q); ++mask) {
      Degree d(n, 0);
      for (int c = 0; c < p; ++c) d[2 * k + c] = pb[c];
      for (int c = 0; c < q; ++c) d[2 * k + p + c] = (mask >> c) & 1;
      out.push_back(d);
    }
  return out;
}

inline std::vector<std::vector<Degree>> delta_configs(int k, int p, int q, int m) {
  auto classes = hermitian_parity_classes(k, p, q);
  // first degree is always zero, which is classes[0]
  std::vector<std::vector<Degree>> out;
  std::vector<int> idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(idx.size()) == m - 1) {
      std::vector<Degree> cfg{classes[0]};
      for (int i : idx) cfg.push_back(classes[i]);
      out.push_back(std::move(cfg));
      return;
    }
    for (size_t i = start; i < classes.size(); ++i) {
      idx.push_back(static_cast<int>(i));
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(1);
  return out;
}

inline bool four_invariants_equal(const InvariantTuple& a, const InvariantTuple& b) {
  return a.type == b.type && a.nullity == b.nullity && a.crk == b.crk && a.rkv == b.rkv;
}

// the one cross-class coincidence of all four invariants: rank-1 sl against
// rank-1 sp with p = 1 (the algebras are still non-isomorphic, by a separate
// argument that the invariants do not see)
inline bool allowed_collision(const ScanEntry& a, const ScanEntry& b) {
  auto shape = [](const ScanEntry& x, const ScanEntry& y) {
    return x.cls == "sl" && x.params.r == 1 && y.cls == "sp" && y.params.r == 1 &&
           y.params.p == 1;
  };
  return shape(a, b) || shape(b, a);
}

}  // namespace detail

inline DisjointnessReport disjointness_scan(const ScanBounds& bounds = {}) {
  DisjointnessReport rep;
  std::vector<ScanEntry> entries;
  auto push = [&](std::string cls, ConstructionParams P) {
    ScanEntry e;
    e.cls = std::move(cls);
    e.tuple = closed_form_tuple(P);
    e.params = std::move(P);
    entries.push_back(std::move(e));
  };

  // sl: multisets of commutation-scalar orders, then Laurent coordinates
  {
    std::vector<std::vector<long>> order_sets{{}};
    for (int count = 1; count <= bounds.k_max; ++count) {
      std::vector<long> cur(count, 2);
      std::function<void(int, long)> rec = [&](int pos, long lo) {
        if (pos == count) {
          order_sets.push_back(cur);
          return;
        }
        for (long o = lo; o <= bounds.zeta_max; ++o) {
          cur[pos] = o;
          rec(pos + 1, o);
        }
      };
      rec(0, 2);
    }
    for (int r = 1; r <= bounds.r_max; ++r)
      for (const auto& orders : order_sets)
        for (int q = 0; q <= bounds.q_max; ++q) {
          ConstructionParams P;
          P.family = Family::SL;
          P.r = r;
          for (long o : orders) P.quantum.push_back({o, 1});
          P.q = q;
          push("sl", std::move(P));
        }
  }

  // su: all parity-distinct hermitian degree configurations
  for (int r = 1; r <= bounds.r_max; ++r)
    for (int k = 0; k <= bounds.k_max; ++k)
      for (int p = 0; p <= bounds.p_max; ++p)
        for (int q = 0; q <= bounds.q_max; ++q)
          for (int m = 1; m <= bounds.m_max; ++m) {
            if (r == 1 && k == 0 && p == 0 && m < 5) continue;
            for (auto& delta : detail::delta_configs(k, p, q, m)) {
              ConstructionParams P;
              P.family = Family::SU;
              P.r = r;
              P.k = k;
              P.p = p;
              P.q = q;
              P.m = m;
              P.delta = std::move(delta);
              push("su", std::move(P));
            }
          }

  // sp
  for (int r = 1; r <= bounds.r_max; ++r)
    for (int k = 0; k <= bounds.k_max; ++k)
      for (int p = 0; p <= bounds.p_max; ++p)
        for (int q = 0; q <= bounds.q_max; ++q) {
          if (r <= 2 && ((k == 0 && p == 0) || (k == 0 && p == 1) || (k == 1 && p == 0)))
            continue;
          ConstructionParams P;
          P.family = Family::SP;
          P.r = r;
          P.k = k;
          P.p = p;
          P.q = q;
          push("sp", std::move(P));
        }

  // o
  for (int r = 4; r <= std::max(bounds.r_max, 4); ++r)
    for (int q = 0; q <= bounds.q_max; ++q) {
      ConstructionParams P;
      P.family = Family::O;
      P.r = r;
      P.q = q;
      push("o", std::move(P));
    }

  // exceptional rows, one entry per admissible nullity up to the scan maximum
  long max_nullity = 0;
  for (const auto& e : entries) max_nullity = std::max(max_nullity, e.tuple.nullity);
  for (const auto& row : exceptional_rows())
    for (long n = row.min_nullity; n <= std::max(max_nullity, row.min_nullity); ++n) {
      ScanEntry e;
      e.cls = "exceptional";
      e.row_id = row.id;
      e.tuple.type = row.root_type;
      e.tuple.nullity = n;
      e.tuple.crk = row.crk;
      e.tuple.rkv = row.rkv;
      e.tuple.quotient.torsion = row.quotient_torsion;
      entries.push_back(std::move(e));
    }
  rep.entries = static_cast<long>(entries.size());

  // cross-class collisions of the four invariants
  std::map<std::tuple<std::string, long, long, std::vector<long>>, std::vector<size_t>> buckets;
  for (size_t i = 0; i < entries.size(); ++i)
    buckets[{entries[i].tuple.type, entries[i].tuple.nullity, entries[i].tuple.crk,
             entries[i].tuple.rkv}]
        .push_back(i);
  for (const auto& [key, idxs] : buckets) {
    for (size_t x = 0; x < idxs.size(); ++x)
      for (size_t y = x + 1; y < idxs.size(); ++y) {
        const ScanEntry& a = entries[idxs[x]];
        const ScanEntry& b = entries[idxs[y]];
        if (a.cls == b.cls) continue;
        Collision c{a, b, detail::allowed_collision(a, b)};
        if (!c.allowed) ++rep.forbidden_cross_class;
        rep.cross_class.push_back(std::move(c));
      }
  }

  // arithmetic sub-check from the separation argument: s^2 - 1 never hits the
  // two exceptional centroid ranks that share a root-grading type
  rep.arithmetic_check = true;
  for (long v : {78L, 133L}) {
    long s = std::lround(std::sqrt(static_cast<double>(v + 1)));
    for (long c = std::max(0L, s - 2); c <= s + 2; ++c)
      if (c * c - 1 == v) rep.arithmetic_check = false;
  }

  // exceptional-internal collisions keyed by (type, crk, rkv)
  std::map<std::tuple<std::string, long, std::vector<long>>, std::set<int>> egroups;
  for (const auto& row : exceptional_rows())
    egroups[{row.root_type, row.crk, row.rkv}].insert(row.id);
  std::set<std::set<int>> nontrivial;
  for (const auto& [key, ids] : egroups)
    if (ids.size() > 1) {
      nontrivial.insert(ids);
      for (int id : ids) rep.colliding_exceptional_ids.insert(id);
    }
  rep.exceptional_groups_ok =
      nontrivial == std::set<std::set<int>>{{20, 22, 23}, {21, 24}};
  rep.quotients_separate_groups = true;
  for (const auto& ids : nontrivial) {
    std::set<std::vector<Integer>> quots;
    for (int id : ids) quots.insert(exceptional_rows()[id - 1].quotient_torsion);
    if (quots.size() != ids.size()) rep.quotients_separate_groups = false;
  }

  rep.pass = rep.forbidden_cross_class == 0 && rep.arithmetic_check &&
             rep.exceptional_groups_ok && rep.quotients_separate_groups;
  return rep;
}

}  // namespace lietori
