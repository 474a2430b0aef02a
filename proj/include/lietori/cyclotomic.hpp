#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_M).
//
// Elements are stored fully reduced modulo the M-th cyclotomic polynomial
// Phi_M, so equality is a coefficient comparison.  All coefficients are
// exact rationals (GMP).

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietori {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense integer polynomial, coefficient of x^i at index i.
using ZPoly = std::vector<Integer>;

inline long euler_phi(long m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

// Exact division of integer polynomials; divisor must be monic up to sign
// and divide evenly.
inline ZPoly zpoly_divide_exact(ZPoly num, const ZPoly& den) {
  if (den.empty()) throw std::invalid_argument("zpoly_divide_exact: zero divisor");
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  if (dn < dd) throw std::invalid_argument("zpoly_divide_exact: degree underflow");
  ZPoly quot(dn - dd + 1, Integer(0));
  const Integer& lead = den.back();
  for (long i = dn - dd; i >= 0; --i) {
    Integer c = num[i + dd];
    if (c % lead != 0) throw std::logic_error("zpoly_divide_exact: not exact");
    c /= lead;
    quot[i] = c;
    if (c != 0)
      for (long j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::logic_error("zpoly_divide_exact: nonzero remainder");
  return quot;
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace detail

// Phi_M computed by exact division of x^M - 1 by the product of Phi_d over
// proper divisors d of M.  Results are cached.
inline const ZPoly& cyclotomic_polynomial(long M) {
  if (M < 1) throw std::invalid_argument("cyclotomic_polynomial: M must be >= 1");
  static std::map<long, ZPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;

  std::function<const ZPoly&(long)> get = [&](long m) -> const ZPoly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    ZPoly xm1(m + 1, Integer(0));
    xm1[0] = -1;
    xm1[m] = 1;
    ZPoly den{Integer(1)};
    for (long d = 1; d < m; ++d)
      if (m % d == 0) den = detail::zpoly_mul(den, get(d));
    ZPoly phi = detail::zpoly_divide_exact(std::move(xm1), den);
    return cache.emplace(m, std::move(phi)).first->second;
  };
  return get(M);
}

// An element of Q(zeta_M), reduced mod Phi_M.
struct Cyclotomic {
  long order = 1;
  std::vector<Rational> coeffs;  // length phi(order)

  Cyclotomic() : coeffs(1, Rational(0)) {}
  explicit Cyclotomic(long M) : order(M), coeffs(euler_phi(M), Rational(0)) {
    if (M < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
  }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return coeffs[0]; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order != b.order)
      throw std::invalid_argument("Cyclotomic equality: order mismatch");
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
};

namespace detail {

// Reduce a rational polynomial (arbitrary degree) mod Phi_M into phi(M) coeffs.
inline std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, long M) {
  const ZPoly& phi = cyclotomic_polynomial(M);
  long deg_phi = static_cast<long>(phi.size()) - 1;  // = euler_phi(M)
  for (long i = static_cast<long>(poly.size()) - 1; i >= deg_phi; --i) {
    Rational c = poly[i];
    if (c != 0) {
      // phi is monic
      for (long j = 0; j <= deg_phi; ++j) poly[i - deg_phi + j] -= c * Rational(phi[j]);
    }
  }
  poly.resize(deg_phi, Rational(0));
  for (auto& c : poly) c.canonicalize();
  return poly;
}

}  // namespace detail

inline Cyclotomic cyclo_from_rational(long M, const Rational& r) {
  Cyclotomic out(M);
  out.coeffs[0] = r;
  return out;
}
inline Cyclotomic cyclo_zero(long M) { return Cyclotomic(M); }
inline Cyclotomic cyclo_one(long M) { return cyclo_from_rational(M, Rational(1)); }

// zeta_M^e reduced mod Phi_M.
inline Cyclotomic root_of_unity(long M, long e) {
  if (M < 1) throw std::invalid_argument("root_of_unity: M must be >= 1");
  long ee = ((e % M) + M) % M;
  std::vector<Rational> poly(ee + 1, Rational(0));
  poly[ee] = 1;
  Cyclotomic out(M);
  out.coeffs = detail::reduce_mod_phi(std::move(poly), M);
  return out;
}

inline void check_same_order(const Cyclotomic& a, const Cyclotomic& b, const char* op) {
  if (a.order != b.order)
    throw std::invalid_argument(std::string("Cyclotomic ") + op +
                                ": order mismatch (embed into a common order first)");
}

inline Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_order(a, b, "add");
  Cyclotomic out(a.order);
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return out;
}
inline Cyclotomic sub(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_order(a, b, "sub");
  Cyclotomic out(a.order);
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
  return out;
}
inline Cyclotomic neg(const Cyclotomic& a) {
  Cyclotomic out(a.order);
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = -a.coeffs[i];
  return out;
}

inline Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_order(a, b, "mul");
  std::vector<Rational> conv(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0)
      for (size_t j = 0; j < b.coeffs.size(); ++j)
        if (b.coeffs[j] != 0) conv[i + j] += a.coeffs[i] * b.coeffs[j];
  Cyclotomic out(a.order);
  out.coeffs = detail::reduce_mod_phi(std::move(conv), a.order);
  return out;
}

inline Cyclotomic scale(const Cyclotomic& a, const Rational& r) {
  Cyclotomic out(a.order);
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] * r;
  return out;
}

// Multiplicative inverse via extended Euclid against Phi_M in Q[x].
inline Cyclotomic inverse(const Cyclotomic& a) {
  if (a.is_zero()) throw std::domain_error("Cyclotomic inverse: division by zero");
  if (a.is_rational()) {
    return cyclo_from_rational(a.order, Rational(1) / a.coeffs[0]);
  }
  using QPoly = std::vector<Rational>;
  auto deg = [](const QPoly& p) -> long {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  const ZPoly& phiZ = cyclotomic_polynomial(a.order);
  QPoly r0(phiZ.size());
  for (size_t i = 0; i < phiZ.size(); ++i) r0[i] = Rational(phiZ[i]);
  QPoly r1 = a.coeffs;
  QPoly s0{Rational(0)}, s1{Rational(1)};  // coefficients of `a` in the combination
  while (deg(r1) > 0) {
    // divide r0 by r1
    QPoly quot(deg(r0) - deg(r1) + 1, Rational(0));
    QPoly rem = r0;
    long d1 = deg(r1);
    Rational lead = r1[d1];
    for (long i = deg(rem); i >= d1; --i) {
      if (rem[i] == 0) continue;
      Rational c = rem[i] / lead;
      quot[i - d1] = c;
      for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
    }
    // s_next = s0 - quot * s1
    QPoly snext(std::max(s0.size(), quot.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
    for (size_t i = 0; i < quot.size(); ++i)
      if (quot[i] != 0)
        for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= quot[i] * s1[j];
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snext;
  }
  long d = deg(r1);
  if (d != 0) throw std::logic_error("Cyclotomic inverse: gcd not constant");
  Rational c = r1[0];
  Cyclotomic out(a.order);
  out.coeffs = detail::reduce_mod_phi(std::move(s1), a.order);
  for (auto& x : out.coeffs) x /= c;
  return out;
}

// Embed Q(zeta_M) into Q(zeta_M2) for M | M2, via zeta_M = zeta_M2^(M2/M).
inline Cyclotomic embed(const Cyclotomic& a, long M2) {
  if (M2 % a.order != 0)
    throw std::invalid_argument("Cyclotomic embed: target order not a multiple");
  if (M2 == a.order) return a;
  long k = M2 / a.order;
  std::vector<Rational> poly((a.coeffs.size() - 1) * k + 1, Rational(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) poly[i * k] = a.coeffs[i];
  Cyclotomic out(M2);
  out.coeffs = detail::reduce_mod_phi(std::move(poly), M2);
  return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Cyclotomic& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) s += ",";
    s += a.coeffs[i].get_str();
  }
  s += "]@" + std::to_string(a.order);
  return s;
}

}  // namespace lietori
