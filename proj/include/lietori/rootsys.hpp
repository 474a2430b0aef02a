#pragma once

// Recognition of finite (possibly non-reduced) irreducible root systems from
// an explicit set of integer vectors, using the standard Euclidean dot
// product on the ambient coordinates.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zlattice.hpp"

namespace lietori {

using RootVec = std::vector<long>;

enum class RootLength { Short, Long, ExtraLong };

struct RootSystemInfo {
  std::string family;  // "A","B","C","D","E","F","G","BC"
  int rank = 0;
  bool reduced = true;
  std::vector<RootVec> simple_roots;            // of the indivisible subsystem
  std::map<RootVec, RootLength> length_of;      // every root in the input
  std::string label() const { return family + std::to_string(rank); }
};

namespace detail {

inline long dot(const RootVec& a, const RootVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RootVec vneg(const RootVec& a) {
  RootVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// Cartan integer <b, a^vee> = 2(b,a)/(a,a); must be integral for valid input.
inline long cartan_int(const RootVec& b, const RootVec& a) {
  long num = 2 * dot(b, a), den = dot(a, a);
  if (den == 0 || num % den != 0)
    throw std::domain_error("root system: non-integral Cartan number");
  return num / den;
}

}  // namespace detail

// Classify a finite set of nonzero vectors as an irreducible crystallographic
// root system.  Throws std::domain_error with a descriptive message when the
// input is not one (not symmetric, not closed under reflections, reducible,
// unknown diagram, ...).
inline RootSystemInfo classify_root_system(const std::vector<RootVec>& input) {
  using namespace detail;
  if (input.empty()) throw std::domain_error("root system: empty root set");
  std::set<RootVec> X(input.begin(), input.end());
  const size_t amb = input[0].size();
  for (const auto& a : X) {
    if (a.size() != amb) throw std::domain_error("root system: mixed ambient dimensions");
    if (dot(a, a) == 0) throw std::domain_error("root system: zero vector among roots");
    if (!X.count(vneg(a))) throw std::domain_error("root system: not closed under negation");
  }

  // crystallographic + reflection closure
  for (const auto& a : X)
    for (const auto& b : X) {
      long n = cartan_int(b, a);
      RootVec r(b);
      for (size_t i = 0; i < amb; ++i) r[i] -= n * a[i];
      if (!X.count(r)) throw std::domain_error("root system: not closed under reflections");
    }

  // indivisible roots; detect the non-reduced case
  auto halved = [&](const RootVec& a) -> std::pair<bool, RootVec> {
    RootVec h(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] % 2 != 0) return {false, {}};
      h[i] = a[i] / 2;
    }
    return {true, h};
  };
  std::set<RootVec> ind;
  bool reduced = true;
  for (const auto& a : X) {
    auto [ok, h] = halved(a);
    if (ok && X.count(h)) {
      reduced = false;
    } else {
      ind.insert(a);
    }
  }

  // irreducibility of the indivisible subsystem (orthogonality graph)
  {
    std::vector<RootVec> v(ind.begin(), ind.end());
    std::vector<int> comp(v.size(), -1);
    std::vector<size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < v.size(); ++j)
        if (comp[j] < 0 && dot(v[i], v[j]) != 0) {
          comp[j] = 0;
          stack.push_back(j);
        }
    }
    for (int c : comp)
      if (c < 0) throw std::domain_error("root system: reducible");
  }

  // positive system via a deterministic generic functional
  long maxc = 1;
  for (const auto& a : X)
    for (long c : a) maxc = std::max(maxc, std::abs(c));
  long base = 2 * maxc + 1;
  auto functional = [&](const RootVec& a) {
    long f = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      f = f * base + a[a.size() - 1 - i];
    }
    return f;
  };
  std::vector<RootVec> pos;
  for (const auto& a : ind)
    if (functional(a) > 0) pos.push_back(a);

  // simple roots = indecomposable positives
  std::set<RootVec> pos_set(pos.begin(), pos.end());
  std::vector<RootVec> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      RootVec c(a.size());
      for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
      if (c != RootVec(a.size(), 0) && pos_set.count(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  std::sort(simple.begin(), simple.end());
  const int rank = static_cast<int>(simple.size());
  if (rank == 0) throw std::domain_error("root system: no simple roots found");

  // Dynkin diagram of the indivisible subsystem
  std::vector<std::vector<int>> edge(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      long w = cartan_int(simple[i], simple[j]) * cartan_int(simple[j], simple[i]);
      if (w < 0 || w > 3) throw std::domain_error("root system: bad Dynkin edge weight");
      edge[i][j] = static_cast<int>(w);
    }
  std::vector<int> deg(rank, 0);
  int n_single = 0, n_double = 0, n_triple = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      if (edge[i][j] == 0) continue;
      ++deg[i];
      ++deg[j];
      if (edge[i][j] == 1) ++n_single;
      if (edge[i][j] == 2) ++n_double;
      if (edge[i][j] == 3) ++n_triple;
    }
  // connectivity of the diagram (should follow from irreducibility)
  {
    std::vector<int> seen(rank, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < rank; ++j)
        if (!seen[j] && edge[i][j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
    }
    for (int s : seen)
      if (!s) throw std::domain_error("root system: disconnected Dynkin diagram");
  }

  std::string family;
  auto is_path = [&]() {
    int ends = 0;
    for (int d : deg) {
      if (d > 2) return false;
      if (d <= 1) ++ends;
    }
    return rank == 1 || ends == 2;
  };
  if (n_triple > 0) {
    if (rank != 2 || n_triple != 1 || n_single + n_double != 0)
      throw std::domain_error("root system: unknown diagram (triple edge)");
    family = "G";
  } else if (n_double > 1) {
    throw std::domain_error("root system: unknown diagram (multiple double edges)");
  } else if (n_double == 1) {
    if (!is_path()) throw std::domain_error("root system: unknown diagram");
    if (rank == 2) {
      family = "B";  // B2 = C2; reported as B
    } else {
      // locate the double edge along the path
      int di = -1, dj = -1;
      for (int i = 0; i < rank && di < 0; ++i)
        for (int j = i + 1; j < rank; ++j)
          if (edge[i][j] == 2) {
            di = i;
            dj = j;
            break;
          }
      bool interior = deg[di] == 2 && deg[dj] == 2;
      if (interior) {
        if (rank != 4) throw std::domain_error("root system: unknown diagram");
        family = "F";
      } else {
        // end node of the double edge: short end -> B, long end -> C
        int end_node = deg[di] <= 1 ? di : dj;
        int other = end_node == di ? dj : di;
        long len_end = dot(simple[end_node], simple[end_node]);
        long len_other = dot(simple[other], simple[other]);
        family = len_end < len_other ? "B" : "C";
      }
    }
  } else {
    // simply laced
    int n_branch = 0, branch_node = -1;
    for (int i = 0; i < rank; ++i)
      if (deg[i] >= 3) {
        ++n_branch;
        branch_node = i;
        if (deg[i] > 3) throw std::domain_error("root system: unknown diagram");
      }
    if (n_branch == 0) {
      family = "A";
    } else if (n_branch == 1) {
      // arm lengths from the branch node
      std::vector<int> arms;
      for (int j = 0; j < rank; ++j) {
        if (!edge[branch_node][j]) continue;
        int len = 1, prev = branch_node, cur = j;
        while (true) {
          int next = -1;
          for (int t = 0; t < rank; ++t)
            if (t != prev && edge[cur][t]) {
              next = t;
              break;
            }
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms.size() != 3) throw std::domain_error("root system: unknown diagram");
      if (arms[0] == 1 && arms[1] == 1) {
        family = "D";
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        family = "E";
      } else {
        throw std::domain_error("root system: unknown diagram");
      }
    } else {
      throw std::domain_error("root system: unknown diagram");
    }
  }

  if (!reduced) {
    // the indivisible part of a BC system must be of type B (or A1 at rank 1)
    if (!(family == "B" || (family == "A" && rank == 1)))
      throw std::domain_error("root system: non-reduced set is not of type BC");
    family = "BC";
  }
  if (family == "D" && rank < 4)
    throw std::domain_error("root system: D-type diagram below rank 4");
  if (family == "E" && (rank < 6 || rank > 8))
    throw std::domain_error("root system: E-type diagram with bad rank");
  if (family == "B" && rank == 1) family = "A";
  if (family == "C" && rank == 1) family = "A";
  if (family == "C" && rank == 2) family = "B";

  RootSystemInfo info;
  info.family = family;
  info.rank = rank;
  info.reduced = reduced;
  info.simple_roots = simple;

  // length classes over the full input set
  long min_norm = 0;
  for (const auto& a : X) {
    long nn = dot(a, a);
    if (min_norm == 0 || nn < min_norm) min_norm = nn;
  }
  for (const auto& a : X) {
    auto [ok, h] = halved(a);
    if (ok && X.count(h)) {
      info.length_of[a] = RootLength::ExtraLong;
    } else if (dot(a, a) == min_norm) {
      info.length_of[a] = RootLength::Short;
    } else {
      info.length_of[a] = RootLength::Long;
    }
  }
  return info;
}

// Coordinates of each root in the basis of simple roots (plus, for BC, the
// doubled roots): integral coordinates in the root lattice.
inline std::map<RootVec, std::vector<Rational>> root_lattice_coords(
    const RootSystemInfo& info) {
  using namespace detail;
  // solve simple^T * x = root via Gram matrices over Q
  const auto& S = info.simple_roots;
  const int r = static_cast<int>(S.size());
  // Gram matrix
  std::vector<std::vector<Rational>> G(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) G[i][j] = Rational(dot(S[i], S[j]));
  std::map<RootVec, std::vector<Rational>> out;
  for (const auto& [root, len] : info.length_of) {
    std::vector<Rational> rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = Rational(dot(S[i], root));
    // Gaussian elimination on a copy of G
    auto A = G;
    auto b = rhs;
    for (int c = 0; c < r; ++c) {
      int p = -1;
      for (int i = c; i < r; ++i)
        if (A[i][c] != 0) {
          p = i;
          break;
        }
      if (p < 0) throw std::logic_error("root_lattice_coords: singular Gram matrix");
      std::swap(A[c], A[p]);
      std::swap(b[c], b[p]);
      for (int i = 0; i < r; ++i) {
        if (i == c || A[i][c] == 0) continue;
        Rational f = A[i][c] / A[c][c];
        for (int j = c; j < r; ++j) A[i][j] -= f * A[c][j];
        b[i] -= f * b[c];
      }
    }
    std::vector<Rational> x(r);
    for (int c = 0; c < r; ++c) x[c] = b[c] / A[c][c];
    out[root] = x;
  }
  return out;
}

inline std::string to_string(RootLength l) {
  switch (l) {
    case RootLength::Short: return "short";
    case RootLength::Long: return "long";
    case RootLength::ExtraLong: return "extra";
  }
  return "?";
}

}  // namespace lietori
