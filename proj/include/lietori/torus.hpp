#pragma once

// Associative tori: twisted group algebras of Z^n over Q(zeta_M), with the
// standard graded involutions.  Multiplication uses the normalized cocycle
//   t^a * t^b = zeta_M^{sigma(a,b)} t^{a+b},  sigma(a,b) = sum_{i>j} c_ij a_i b_j,
// so that t_i t_j = zeta^{c_ij} t_j t_i for i > j.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "zlattice.hpp"

namespace lietori {

using Degree = std::vector<long>;

enum class FactorTag {
  Laurent,          // one Laurent variable, bar(t) = t
  QuantumPair,      // two variables t1 t2 = zeta^e t2 t1, no involution sign data
  QuantumStandard,  // (Q(-1), standard): bar(t_i) = -t_i
  QuantumReversal,  // (Q(-1), reversal): bar(t_i) = t_i
  LaurentGraded,    // (R_1, graded): bar(t) = -t
};

struct TorusSpec {
  long rank = 0;
  long cyclo_order = 1;
  // c[i][j] for i > j: exponent of zeta_{cyclo_order} in t_i t_j = zeta^c t_j t_i.
  std::vector<std::vector<long>> comm;
  bool has_involution = false;
  // Involution data: bar(t^a) = eps(a) t^a with
  //   eps(a) = prod_i sign[i]^{a_i} * zeta^{sum_{i>j} c_ij a_i a_j},
  // which is +-1 for the supported builds.
  std::vector<int> signs;  // +1 or -1 per variable
  std::vector<FactorTag> factors;
  std::vector<long> factor_offsets;  // starting variable index of each factor
};

struct TorusElement {
  std::map<Degree, Cyclotomic> terms;  // nonzero coefficients only

  bool is_zero() const { return terms.empty(); }
};

inline long cocycle_exponent(const TorusSpec& spec, const Degree& a, const Degree& b) {
  long e = 0;
  for (long i = 1; i < spec.rank; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < i; ++j) {
      if (b[j] == 0 || spec.comm[i][j] == 0) continue;
      e += spec.comm[i][j] * a[i] * b[j] % spec.cyclo_order;
      e %= spec.cyclo_order;
    }
  }
  return ((e % spec.cyclo_order) + spec.cyclo_order) % spec.cyclo_order;
}

// Sign of the involution on t^a; always returns +1 or -1 (validated at build).
inline int involution_factor(const TorusSpec& spec, const Degree& a) {
  if (!spec.has_involution)
    throw std::logic_error("involution_factor: torus has no involution");
  long parity = 0;
  for (long i = 0; i < spec.rank; ++i)
    if (spec.signs[i] < 0) parity += a[i];
  long e = cocycle_exponent(spec, a, a);
  int zval;
  if (e == 0) {
    zval = 1;
  } else if (2 * e == spec.cyclo_order) {
    zval = -1;
  } else {
    throw std::logic_error("involution_factor: involution not sign-valued on this torus");
  }
  return ((parity % 2 + 2) % 2 == 0 ? 1 : -1) * zval;
}

inline TorusElement torus_zero() { return TorusElement{}; }

inline TorusElement monomial(const TorusSpec& spec, const Degree& d, Cyclotomic c) {
  if (static_cast<long>(d.size()) != spec.rank)
    throw std::invalid_argument("monomial: degree length mismatch");
  if (c.order != spec.cyclo_order)
    throw std::invalid_argument("monomial: coefficient field mismatch");
  TorusElement x;
  if (!c.is_zero()) x.terms.emplace(d, std::move(c));
  return x;
}

inline TorusElement add(const TorusSpec&, const TorusElement& x, const TorusElement& y) {
  TorusElement out = x;
  for (const auto& [d, c] : y.terms) {
    auto it = out.terms.find(d);
    if (it == out.terms.end()) {
      out.terms.emplace(d, c);
    } else {
      it->second = add(it->second, c);
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

inline TorusElement neg(const TorusElement& x) {
  TorusElement out;
  for (const auto& [d, c] : x.terms) out.terms.emplace(d, neg(c));
  return out;
}

inline TorusElement sub(const TorusSpec& spec, const TorusElement& x, const TorusElement& y) {
  return add(spec, x, neg(y));
}

inline TorusElement mul(const TorusSpec& spec, const TorusElement& x, const TorusElement& y) {
  TorusElement out;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      Degree d(spec.rank);
      for (long i = 0; i < spec.rank; ++i) d[i] = a[i] + b[i];
      Cyclotomic c = mul(mul(ca, cb), root_of_unity(spec.cyclo_order, cocycle_exponent(spec, a, b)));
      auto it = out.terms.find(d);
      if (it == out.terms.end()) {
        if (!c.is_zero()) out.terms.emplace(std::move(d), std::move(c));
      } else {
        it->second = add(it->second, c);
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  return out;
}

inline TorusElement scale(const TorusElement& x, const Cyclotomic& c) {
  TorusElement out;
  if (c.is_zero()) return out;
  for (const auto& [d, v] : x.terms) {
    Cyclotomic w = mul(v, c);
    if (!w.is_zero()) out.terms.emplace(d, std::move(w));
  }
  return out;
}

// bar(sum c_a t^a) = sum c_a eps(a) t^a; coefficients are fixed (they lie in
// the fixed field of the builds supported here).
inline TorusElement bar(const TorusSpec& spec, const TorusElement& x) {
  TorusElement out;
  for (const auto& [d, c] : x.terms) {
    int s = involution_factor(spec, d);
    out.terms.emplace(d, s > 0 ? c : neg(c));
  }
  return out;
}

// Inverse of a monomial t^d (with invertible coefficient).
inline TorusElement monomial_inverse(const TorusSpec& spec, const TorusElement& x) {
  if (x.terms.size() != 1)
    throw std::invalid_argument("monomial_inverse: not a monomial");
  const auto& [d, c] = *x.terms.begin();
  Degree nd(spec.rank);
  for (long i = 0; i < spec.rank; ++i) nd[i] = -d[i];
  // t^d * t^{-d} = zeta^{sigma(d,-d)}, so (t^d)^{-1} = zeta^{-sigma(d,-d)} t^{-d}.
  long e = cocycle_exponent(spec, d, nd);
  Cyclotomic coeff = mul(inverse(c), root_of_unity(spec.cyclo_order, -e));
  return monomial(spec, nd, std::move(coeff));
}

// ---- basic builds and tensor products ------------------------------------

struct BasicTorus {
  FactorTag tag;
  long M = 1, e = 0;  // QuantumPair parameters (zeta = zeta_M^e)
};

inline BasicTorus laurent_factor() { return BasicTorus{FactorTag::Laurent}; }
inline BasicTorus laurent_graded_factor() { return BasicTorus{FactorTag::LaurentGraded}; }
inline BasicTorus quantum_factor(long M, long e) { return BasicTorus{FactorTag::QuantumPair, M, e}; }
inline BasicTorus quantum_standard_factor() { return BasicTorus{FactorTag::QuantumStandard}; }
inline BasicTorus quantum_reversal_factor() { return BasicTorus{FactorTag::QuantumReversal}; }

inline TorusSpec make_torus(const std::vector<BasicTorus>& factors, bool with_involution) {
  long M = 1;
  for (const auto& f : factors) {
    long fm = 1;
    switch (f.tag) {
      case FactorTag::Laurent:
      case FactorTag::LaurentGraded:
        fm = 1;
        break;
      case FactorTag::QuantumPair: {
        if (f.M < 1) throw std::invalid_argument("quantum factor: bad order");
        // multiplicative order of zeta_M^e
        fm = f.M / std::gcd(((f.e % f.M) + f.M) % f.M, f.M);
        break;
      }
      case FactorTag::QuantumStandard:
      case FactorTag::QuantumReversal:
        fm = 2;
        break;
    }
    M = std::lcm(M, std::max<long>(fm, 1));
  }
  if (M % 2 == 1) M *= 2;  // keep -1 available for involution signs / checks
  TorusSpec spec;
  spec.cyclo_order = M;
  spec.has_involution = with_involution;
  long idx = 0;
  for (const auto& f : factors) {
    spec.factors.push_back(f.tag);
    spec.factor_offsets.push_back(idx);
    switch (f.tag) {
      case FactorTag::Laurent:
        spec.signs.push_back(1);
        ++idx;
        break;
      case FactorTag::LaurentGraded:
        if (!with_involution)
          throw std::invalid_argument("graded Laurent factor requires an involution");
        spec.signs.push_back(-1);
        ++idx;
        break;
      case FactorTag::QuantumPair: {
        if (with_involution)
          throw std::invalid_argument("general quantum factor carries no involution");
        spec.signs.push_back(1);
        spec.signs.push_back(1);
        idx += 2;
        break;
      }
      case FactorTag::QuantumStandard:
        spec.signs.push_back(-1);
        spec.signs.push_back(-1);
        idx += 2;
        break;
      case FactorTag::QuantumReversal:
        spec.signs.push_back(1);
        spec.signs.push_back(1);
        idx += 2;
        break;
    }
  }
  spec.rank = idx;
  spec.comm.assign(spec.rank, std::vector<long>(spec.rank, 0));
  idx = 0;
  for (const auto& f : factors) {
    switch (f.tag) {
      case FactorTag::Laurent:
      case FactorTag::LaurentGraded:
        ++idx;
        break;
      case FactorTag::QuantumPair: {
        long eg = (f.e % f.M + f.M) % f.M;
        long scaled = eg * (M / f.M) % M;
        spec.comm[idx + 1][idx] = scaled;
        spec.comm[idx][idx + 1] = (M - scaled) % M;
        idx += 2;
        break;
      }
      case FactorTag::QuantumStandard:
      case FactorTag::QuantumReversal:
        spec.comm[idx + 1][idx] = M / 2;
        spec.comm[idx][idx + 1] = M / 2;
        idx += 2;
        break;
    }
  }
  if (with_involution) {
    // sanity: eps must be sign-valued on a sample of degrees
    Degree a(spec.rank, 0);
    for (long i = 0; i < spec.rank; ++i)
      for (long j = 0; j <= i; ++j) {
        a.assign(spec.rank, 0);
        a[i] += 1;
        a[j] += 1;
        (void)involution_factor(spec, a);
      }
  }
  return spec;
}

// ---- graded centres --------------------------------------------------------

// Support lattice of the centre: t^a is central iff sum_i c_ij a_i == 0 mod M
// for every j (equivalently zeta^{sigma(a,e_j)-sigma(e_j,a)} = 1 for all j).
inline Sublattice center_support(const TorusSpec& spec) {
  IntMatrix c(spec.rank, spec.rank);
  for (long j = 0; j < spec.rank; ++j)
    for (long i = 0; i < spec.rank; ++i) {
      long v = (i > j ? spec.comm[i][j] : (i < j ? -spec.comm[j][i] : 0));
      c.at(j, i) = ((v % spec.cyclo_order) + spec.cyclo_order) % spec.cyclo_order;
    }
  return congruence_kernel(c, Integer(spec.cyclo_order));
}

// Support of the hermitian part of the centre: central degrees with eps = +1.
// eps restricted to the central support is a homomorphism to {+-1}, so this
// is again a sublattice (index 1 or 2 in the central support).
inline Sublattice hermitian_center_support(const TorusSpec& spec) {
  Sublattice cs = center_support(spec);
  LatticeBasis basis(cs);
  const long k = basis.rank();
  // eps on the i-th basis vector, as an element of Z_2
  IntMatrix eps_row(1, k);
  for (long j = 0; j < k; ++j) {
    Degree d(spec.rank);
    for (long r = 0; r < spec.rank; ++r) d[r] = basis.basis().at(r, j).get_si();
    eps_row.at(0, j) = involution_factor(spec, d) > 0 ? 0 : 1;
  }
  Sublattice inner = congruence_kernel(eps_row, Integer(2));
  // map back to ambient coordinates
  Sublattice out;
  out.ambient_rank = spec.rank;
  out.generators = IntMatrix(spec.rank, inner.generators.cols);
  for (long j = 0; j < inner.generators.cols; ++j)
    for (long r = 0; r < spec.rank; ++r) {
      Integer v(0);
      for (long t = 0; t < k; ++t)
        v += basis.basis().at(r, t) * inner.generators.at(t, j);
      out.generators.at(r, j) = v;
    }
  return out;
}

// Whether the degree-d component of the commutator space [A, A] is all of
// A^d: true exactly when d is outside the central support (A = Z(A) + [A,A]
// with [A,A]^d = A^d off the centre and 0 on it).
inline bool bracket_space_contains(const TorusSpec& spec, const LatticeBasis& center,
                                   const Degree& d) {
  std::vector<Integer> v(spec.rank);
  for (long i = 0; i < spec.rank; ++i) v[i] = d[i];
  return !center.contains(v);
}

}  // namespace lietori
