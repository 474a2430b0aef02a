#pragma once

// Isomorphism invariants of a constructed model:
//   - type of the root-grading system
//   - nullity (rank of the external grading lattice)
//   - centroid rank (rank of the algebra as a module over its centroid)
//   - root-space rank vector, one entry per root length class
// together with the isotopy invariant Lambda/Gamma as an abelian group, and a
// degreewise oracle that checks the structural description of the centroid
// support lattice against the defining equations of centroid transformations.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lietorus.hpp"

namespace lietori {

struct InvariantTuple {
  std::string type;
  long nullity = 0;
  long crk = 0;
  std::vector<long> rkv;
  QuotientInfo quotient;  // Lambda / Gamma

  bool operator==(const InvariantTuple& o) const {
    return type == o.type && nullity == o.nullity && crk == o.crk && rkv == o.rkv &&
           quotient == o.quotient;
  }
  bool operator!=(const InvariantTuple& o) const { return !(*this == o); }
};

// Root support of the model, classified.
inline RootSystemInfo root_support(const LieTorusModel& M, long box = 2) {
  auto P = M.populated_components(box);
  std::set<RootVec> support;
  for (const auto& [key, dim] : P)
    if (!detail::all_zero(key.alpha)) support.insert(key.alpha);
  return classify_root_system({support.begin(), support.end()});
}

// Rank of the direct sum over all external degrees of the alpha-component, as
// a module over the centroid: the component dimensions are periodic under the
// centroid support lattice, so this is a finite sum over coset representatives.
inline long rank_of_rootspace(const LieTorusModel& M, const RootVec& alpha,
                              const std::vector<std::vector<Integer>>& reps) {
  long total = 0;
  for (const auto& rep : reps) {
    Degree lam(rep.size());
    for (size_t i = 0; i < rep.size(); ++i) lam[i] = rep[i].get_si();
    total += M.component_dim(alpha, lam);
  }
  return total;
}

inline InvariantTuple invariant_tuple(const LieTorusModel& M, long support_box = 2,
                                      long coset_budget = 4096) {
  InvariantTuple T;
  RootSystemInfo info = root_support(M, support_box);
  T.type = info.label();
  T.nullity = M.lambda_basis.rank();

  auto reps = coset_representatives_in(M.Lambda, M.centroid_gamma);
  if (static_cast<long>(reps.size()) > coset_budget)
    throw std::domain_error("invariant_tuple: coset budget exceeded");

  // one rank entry per root length class, in increasing length; every root in
  // a class must give the same rank
  for (RootLength len : {RootLength::Short, RootLength::Long, RootLength::ExtraLong}) {
    std::optional<long> value;
    long class_size = 0;
    for (const auto& [alpha, l] : info.length_of) {
      if (l != len) continue;
      ++class_size;
      long r = rank_of_rootspace(M, alpha, reps);
      if (!value)
        value = r;
      else if (*value != r)
        throw std::domain_error("invariant_tuple: rank not constant on a length class");
    }
    if (value) {
      T.rkv.push_back(*value);
      T.crk += class_size * *value;
    }
  }
  T.crk += rank_of_rootspace(M, RootVec(M.amb, 0), reps);

  T.quotient = quotient_of(M.Lambda, M.centroid_gamma);
  return T;
}

// ---- degreewise centroid oracle -----------------------------------------------

enum class CentroidVerdict { NotInSupport, InSupport, Inconclusive };

struct CentroidProbe {
  Degree gamma;
  CentroidVerdict verdict = CentroidVerdict::Inconclusive;
  bool structural = false;          // gamma in the structural support lattice
  bool matches = false;             // verdict agrees with the structural claim
};

namespace detail {

// coordinates of v in the span of basis, if any (all small dimensions)
inline std::optional<std::vector<Cyclotomic>> coordinates_in_span(
    long order, const std::vector<MatElement>& basis, const MatElement& v) {
  std::vector<SparseVec> bs;
  bs.reserve(basis.size());
  std::set<SparseKey> keys;
  for (const auto& b : basis) {
    bs.push_back(mat_to_sparse(b));
    for (const auto& [k, c] : bs.back()) keys.insert(k);
  }
  SparseVec vs = mat_to_sparse(v);
  for (const auto& [k, c] : vs) keys.insert(k);

  const long nb = static_cast<long>(basis.size());
  std::vector<std::vector<Cyclotomic>> m;  // rows: keys, cols: nb + rhs
  for (const auto& k : keys) {
    std::vector<Cyclotomic> row(nb + 1, cyclo_zero(order));
    for (long j = 0; j < nb; ++j) {
      auto it = bs[j].find(k);
      if (it != bs[j].end()) row[j] = it->second;
    }
    auto it = vs.find(k);
    if (it != vs.end()) row[nb] = it->second;
    m.push_back(std::move(row));
  }
  // eliminate
  long rank = 0;
  std::vector<long> pivot_col;
  for (long c = 0; c < nb && rank < static_cast<long>(m.size()); ++c) {
    long pr = -1;
    for (long r = rank; r < static_cast<long>(m.size()); ++r)
      if (!m[r][c].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    Cyclotomic inv = inverse(m[rank][c]);
    for (long j = 0; j <= nb; ++j) m[rank][j] = mul(m[rank][j], inv);
    for (long r = 0; r < static_cast<long>(m.size()); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Cyclotomic f = m[r][c];
      for (long j = 0; j <= nb; ++j) m[r][j] = sub(m[r][j], mul(f, m[rank][j]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (long r = rank; r < static_cast<long>(m.size()); ++r)
    if (!m[r][nb].is_zero()) return std::nullopt;  // inconsistent
  std::vector<Cyclotomic> out(nb, cyclo_zero(order));
  for (long r = 0; r < rank; ++r) out[pivot_col[r]] = m[r][nb];
  return out;
}

// left multiplication of every cell by the central monomial t^nu
inline MatElement monomial_times(const TorusSpec& spec, const Degree& nu, const MatElement& x) {
  MatElement out;
  out.size = x.size;
  TorusElement t = monomial(spec, nu, cyclo_one(spec.cyclo_order));
  for (const auto& [pos, v] : x.cells) out.cells.emplace(pos, mul(spec, t, v));
  return out;
}

}  // namespace detail

// Probe one candidate degree gamma: set up the linear system
//   [c(x), y] = [x, c(y)]   and   c([x, y]) = [c(x), y]
// for homogeneous x, y in a finite box, where the unknowns are the entries of
// the maps c : L^lam -> L^{lam+gamma} on boxed components, and compare the
// solution space with the structural claim.  A nonzero solution of the full
// (untruncated) system exists iff gamma supports a centroid transformation;
// the truncation decides this whenever the equation rank reaches U (no
// solution) or U-1 together with an explicit witness (unique solution line).
inline CentroidProbe centroid_probe(const LieTorusModel& M, const Degree& gamma,
                                    long unknown_box = 2) {
  const auto& spec = M.spec;
  const long order = spec.cyclo_order;
  CentroidProbe probe;
  probe.gamma = gamma;
  {
    std::vector<Integer> gz(gamma.begin(), gamma.end());
    probe.structural = LatticeBasis(M.centroid_gamma).contains(gz);
  }

  auto P = M.populated_components(unknown_box);
  struct Source {
    ComponentKey key;
    const std::vector<MatElement>* basis = nullptr;
    const std::vector<MatElement>* target = nullptr;  // basis at key.lam + gamma
    long unknown_base = 0;                            // first unknown index
  };
  std::vector<Source> sources;
  std::map<ComponentKey, size_t> source_index;
  long U = 0;
  for (const auto& [key, dim] : P) {
    Degree shifted(M.n);
    for (long c = 0; c < M.n; ++c) shifted[c] = key.lam[c] + gamma[c];
    Source s;
    s.key = key;
    s.basis = &M.component_basis(key.alpha, key.lam);
    s.target = &M.component_basis(key.alpha, shifted);
    s.unknown_base = U;
    U += static_cast<long>(s.basis->size() * s.target->size());
    source_index.emplace(key, sources.size());
    sources.push_back(s);
  }
  if (U == 0) {
    // no boxed component has a populated shift: only the zero map fits
    probe.verdict = CentroidVerdict::NotInSupport;
    probe.matches = !probe.structural;
    return probe;
  }

  // witness: multiplication by the central hermitian monomial t^(gamma/scale)
  std::vector<Cyclotomic> witness;
  bool witness_nonzero = false;
  if (probe.structural) {
    Degree nu(M.n);
    bool divisible = true;
    for (long c = 0; c < M.n; ++c) {
      if (gamma[c] % M.scale != 0) divisible = false;
      nu[c] = gamma[c] / M.scale;
    }
    if (!divisible) throw std::domain_error("centroid_probe: support degree not scalable");
    witness.assign(U, cyclo_zero(order));
    for (const auto& s : sources) {
      const long dt = static_cast<long>(s.target->size());
      for (size_t a = 0; a < s.basis->size(); ++a) {
        MatElement img = detail::monomial_times(spec, nu, (*s.basis)[a]);
        auto coords = detail::coordinates_in_span(order, *s.target, img);
        if (!coords)
          throw std::domain_error("centroid_probe: witness image leaves the component");
        for (long v = 0; v < dt; ++v) {
          witness[s.unknown_base + a * dt + v] = (*coords)[v];
          if (!(*coords)[v].is_zero()) witness_nonzero = true;
        }
      }
    }
  }

  IncrementalSpan span;
  long rank = 0;
  bool witness_violated = false;
  auto add_equation = [&](const std::map<long, MatElement>& terms) {
    // terms: unknown index -> coefficient matrix; one scalar equation per
    // ambient coordinate
    std::map<SparseKey, SparseVec> rows;
    for (const auto& [u, coeff] : terms)
      for (const auto& [k, c] : mat_to_sparse(coeff)) rows[k][SparseKey{u}] = c;
    for (auto& [k, row] : rows) {
      if (row.empty()) continue;
      if (!witness.empty()) {
        Cyclotomic dot = cyclo_zero(order);
        for (const auto& [uk, c] : row) dot = add(dot, mul(c, witness[uk[0]]));
        if (!dot.is_zero()) witness_violated = true;
      }
      if (span.add(row)) ++rank;
    }
  };

  const long small = M.scale;  // left factors from the unit box
  bool done = false;
  for (const auto& s1 : sources) {
    if (done) break;
    if (detail::sup_norm(s1.key.lam) > small) continue;
    const long dt1 = static_cast<long>(s1.target->size());
    for (const auto& s2 : sources) {
      if (done) break;
      const long dt2 = static_cast<long>(s2.target->size());
      RootVec ab(M.amb);
      Degree lm(M.n);
      for (long c = 0; c < M.amb; ++c) ab[c] = s1.key.alpha[c] + s2.key.alpha[c];
      for (long c = 0; c < M.n; ++c) lm[c] = s1.key.lam[c] + s2.key.lam[c];
      auto wit = source_index.find(ComponentKey{ab, lm});

      for (size_t a = 0; a < s1.basis->size(); ++a)
        for (size_t b = 0; b < s2.basis->size(); ++b) {
          const MatElement& x = (*s1.basis)[a];
          const MatElement& y = (*s2.basis)[b];
          // [c(x), y] - [x, c(y)] = 0
          std::map<long, MatElement> eq;
          for (long v = 0; v < dt1; ++v)
            eq[s1.unknown_base + a * dt1 + v] = mat_commutator(spec, (*s1.target)[v], y);
          for (long v = 0; v < dt2; ++v) {
            long u = s2.unknown_base + b * dt2 + v;
            MatElement t = mat_neg(mat_commutator(spec, x, (*s2.target)[v]));
            auto it = eq.find(u);
            if (it == eq.end())
              eq.emplace(u, std::move(t));
            else
              it->second = mat_add(spec, it->second, t);
          }
          add_equation(eq);
          // c([x, y]) = [c(x), y] when the bracket component is boxed
          if (wit != source_index.end()) {
            MatElement z = mat_commutator(spec, x, y);
            if (!z.is_zero()) {
              const Source& sw = sources[wit->second];
              auto coords = detail::coordinates_in_span(order, *sw.basis, z);
              if (coords) {
                const long dtw = static_cast<long>(sw.target->size());
                std::map<long, MatElement> eq2;
                for (size_t cidx = 0; cidx < coords->size(); ++cidx) {
                  if ((*coords)[cidx].is_zero()) continue;
                  for (long v = 0; v < dtw; ++v) {
                    long u = sw.unknown_base + static_cast<long>(cidx) * dtw + v;
                    MatElement t = mat_scale((*sw.target)[v], (*coords)[cidx]);
                    auto it = eq2.find(u);
                    if (it == eq2.end())
                      eq2.emplace(u, std::move(t));
                    else
                      it->second = mat_add(spec, it->second, t);
                  }
                }
                for (long v = 0; v < dt1; ++v) {
                  long u = s1.unknown_base + a * dt1 + v;
                  MatElement t = mat_neg(mat_commutator(spec, (*s1.target)[v], y));
                  auto it = eq2.find(u);
                  if (it == eq2.end())
                    eq2.emplace(u, std::move(t));
                  else
                    it->second = mat_add(spec, it->second, t);
                }
                add_equation(eq2);
              }
            }
          }
          if (rank >= U || (probe.structural && rank == U - 1)) {
            done = true;
            break;
          }
        }
    }
  }

  if (witness_violated) {
    // the structural claim produced a map that fails the defining equations
    probe.verdict = CentroidVerdict::Inconclusive;
    probe.matches = false;
    return probe;
  }
  if (rank >= U) {
    probe.verdict = CentroidVerdict::NotInSupport;
  } else if (rank == U - 1 && probe.structural && witness_nonzero) {
    probe.verdict = CentroidVerdict::InSupport;
  } else {
    probe.verdict = CentroidVerdict::Inconclusive;
  }
  probe.matches = (probe.verdict == CentroidVerdict::InSupport && probe.structural) ||
                  (probe.verdict == CentroidVerdict::NotInSupport && !probe.structural);
  return probe;
}

inline std::vector<CentroidProbe> centroid_oracle(const LieTorusModel& M, long gamma_box = 2,
                                                  long unknown_box = 2) {
  std::vector<CentroidProbe> out;
  for (const auto& gamma : M.degrees_in_box(gamma_box))
    out.push_back(centroid_probe(M, gamma, unknown_box));
  return out;
}

}  // namespace lietori
