#include <catch2/catch_amalgamated.hpp>

#include "lietori/lietorus.hpp"

using namespace lietori;

namespace {

ConstructionParams sl_params(int r, std::vector<QuantumParam> qf = {}, int q = 0) {
  ConstructionParams P;
  P.family = Family::SL;
  P.r = r;
  P.quantum = std::move(qf);
  P.q = q;
  return P;
}

ConstructionParams su_params(int r, int k, int p, int q, std::vector<Degree> delta) {
  ConstructionParams P;
  P.family = Family::SU;
  P.r = r;
  P.k = k;
  P.p = p;
  P.q = q;
  P.m = static_cast<int>(delta.size());
  P.delta = std::move(delta);
  return P;
}

ConstructionParams sp_params(int r, int k, int p, int q) {
  ConstructionParams P;
  P.family = Family::SP;
  P.r = r;
  P.k = k;
  P.p = p;
  P.q = q;
  return P;
}

ConstructionParams o_params(int r, int q) {
  ConstructionParams P;
  P.family = Family::O;
  P.r = r;
  P.q = q;
  return P;
}

MatElement unit_matrix(const LieTorusModel& M, long i, long j, const Degree& lt) {
  MatElement e;
  e.size = M.msize;
  e.set(i, j, monomial(M.spec, lt, cyclo_one(M.spec.cyclo_order)));
  return e;
}

}  // namespace

TEST_CASE("split sl2 over the base field") {
  auto M = construct(sl_params(1));
  REQUIRE(M.n == 0);
  REQUIRE(M.msize == 2);
  Degree zero{};
  RootVec alpha{1, -1}, nalpha{-1, 1};

  REQUIRE(M.component_dim(alpha, zero) == 1);
  REQUIRE(M.component_dim(nalpha, zero) == 1);
  REQUIRE(M.component_dim(RootVec{0, 0}, zero) == 1);
  REQUIRE(M.component_dim(RootVec{2, -2}, zero) == 0);

  const auto& e = M.component_basis(alpha, zero)[0];
  const auto& f = M.component_basis(nalpha, zero)[0];
  MatElement h = mat_commutator(M.spec, e, f);
  auto c = scalar_ratio(M.spec, mat_commutator(M.spec, h, e), e);
  REQUIRE(c.has_value());
  REQUIRE(!c->is_zero());

  auto rep = verify_axioms(M, 2);
  for (const auto& item : rep.items) {
    INFO(item.axiom << ": " << item.witness);
    CHECK(item.pass);
  }
  REQUIRE(rep.all_pass);
}

TEST_CASE("sl2 over the quantum torus at -1") {
  auto M = construct(sl_params(1, {{2, 1}}));
  REQUIRE(M.n == 2);
  RootVec alpha{1, -1};
  RootVec zero_root{0, 0};

  // off-diagonal components have dimension 1 at every degree
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) REQUIRE(M.component_dim(alpha, Degree{a, b}) == 1);

  // diagonal components: dim 1 at nonzero central degrees (trace forced into
  // the commutator space), dim 2 elsewhere
  REQUIRE(M.component_dim(zero_root, Degree{0, 0}) == 1);
  REQUIRE(M.component_dim(zero_root, Degree{2, 0}) == 1);
  REQUIRE(M.component_dim(zero_root, Degree{2, 2}) == 1);
  REQUIRE(M.component_dim(zero_root, Degree{1, 0}) == 2);
  REQUIRE(M.component_dim(zero_root, Degree{1, 1}) == 2);

  SECTION("bracket respects both gradings") {
    for (long a = -1; a <= 1; ++a)
      for (long b = -1; b <= 1; ++b) {
        const auto& x = M.component_basis(alpha, Degree{a, b})[0];
        const auto& y = M.component_basis(RootVec{-1, 1}, Degree{1 - a, -b})[0];
        MatElement z = mat_commutator(M.spec, x, y);
        const auto& target = M.component_basis(zero_root, Degree{1, 0});
        IncrementalSpan span;
        for (const auto& t : target) span.add(mat_to_sparse(t));
        REQUIRE(span.contains(mat_to_sparse(z)));
      }
  }

  SECTION("axioms hold on the truncation") {
    auto rep = verify_axioms(M, 2);
    for (const auto& item : rep.items) {
      INFO(item.axiom << ": " << item.witness);
      CHECK(item.pass);
    }
    REQUIRE(rep.all_pass);
  }

  SECTION("gl2 fails centrelessness") {
    // the identity matrix is central in gl2(A); it commutes with every
    // homogeneous element of the sl2 model, so gl2 = sl2 + k*1 has centre
    MatElement id = mat_add(M.spec, unit_matrix(M, 0, 0, Degree{0, 0}),
                            unit_matrix(M, 1, 1, Degree{0, 0}));
    auto P = M.populated_components(1);
    bool commutes_with_all = true;
    for (const auto& [key, dim] : P)
      for (const auto& g : M.component_basis(key.alpha, key.lam))
        if (!mat_commutator(M.spec, id, g).is_zero()) commutes_with_all = false;
    REQUIRE(commutes_with_all);
    REQUIRE(!mat_commutator(M.spec, id, id).is_zero() == false);
  }
}

TEST_CASE("su over the sign-graded Laurent torus, one hermitian entry") {
  auto M = construct(su_params(1, 0, 1, 0, {Degree{0}}));
  REQUIRE(M.msize == 3);
  REQUIRE(M.scale == 2);
  REQUIRE(M.n == 1);

  // long root spaces populated exactly at internal degrees 2 mod 4
  REQUIRE(M.component_dim(RootVec{2}, Degree{2}) == 1);
  REQUIRE(M.component_dim(RootVec{2}, Degree{0}) == 0);
  REQUIRE(M.component_dim(RootVec{2}, Degree{4}) == 0);
  REQUIRE(M.component_dim(RootVec{2}, Degree{-2}) == 1);
  // short root spaces (through the 1x1 hermitian block)
  REQUIRE(M.component_dim(RootVec{1}, Degree{0}) == 1);
  REQUIRE(M.component_dim(RootVec{1}, Degree{2}) == 1);

  REQUIRE_THROWS_AS(M.component_basis(RootVec{1}, Degree{1}), std::domain_error);

  auto rep = verify_axioms(M, 2);
  for (const auto& item : rep.items) {
    INFO(item.axiom << ": " << item.witness);
    CHECK(item.pass);
  }
  REQUIRE(rep.all_pass);

  auto P = M.populated_components(2);
  std::set<RootVec> support;
  for (const auto& [key, dim] : P)
    if (key.alpha != RootVec{0}) support.insert(key.alpha);
  auto info = classify_root_system({support.begin(), support.end()});
  REQUIRE(info.label() == "BC1");
}

TEST_CASE("su with a half-shifted external degree") {
  auto M = construct(su_params(1, 0, 2, 0, {Degree{0, 0}, Degree{1, 0}}));
  REQUIRE(M.n == 2);
  // Lambda = 2Z^2 + (1,0)Z = Z x 2Z
  REQUIRE(M.lambda_basis.contains({Integer(1), Integer(0)}));
  REQUIRE(!M.lambda_basis.contains({Integer(0), Integer(1)}));
  // a short root space at an odd degree, through the shifted hermitian entry
  REQUIRE(M.component_dim(RootVec{1}, Degree{1, 0}) == 1);
  REQUIRE(M.component_dim(RootVec{1}, Degree{0, 0}) == 1);

  auto rep = verify_axioms(M, 1);
  for (const auto& item : rep.items) {
    INFO(item.axiom << ": " << item.witness);
    CHECK(item.pass);
  }
  REQUIRE(rep.all_pass);
}

TEST_CASE("split sp6") {
  auto M = construct(sp_params(3, 0, 0, 0));
  REQUIRE(M.msize == 6);
  Degree zero{};
  REQUIRE(M.component_dim(RootVec{2, 0, 0}, zero) == 1);
  REQUIRE(M.component_dim(RootVec{1, -1, 0}, zero) == 1);
  REQUIRE(M.component_dim(RootVec{1, 1, 0}, zero) == 1);
  REQUIRE(M.component_dim(RootVec{0, 0, 0}, zero) == 3);

  auto rep = verify_axioms(M, 2);
  for (const auto& item : rep.items) {
    INFO(item.axiom << ": " << item.witness);
    CHECK(item.pass);
  }
  REQUIRE(rep.all_pass);

  auto P = M.populated_components(2);
  std::set<RootVec> support;
  for (const auto& [key, dim] : P)
    if (key.alpha != RootVec{0, 0, 0}) support.insert(key.alpha);
  auto info = classify_root_system({support.begin(), support.end()});
  REQUIRE(info.label() == "C3");
}

TEST_CASE("split o8 and its Laurent extension") {
  auto M = construct(o_params(4, 0));
  REQUIRE(M.msize == 8);
  Degree zero{};
  REQUIRE(M.component_dim(RootVec{1, -1, 0, 0}, zero) == 1);
  REQUIRE(M.component_dim(RootVec{1, 1, 0, 0}, zero) == 1);
  REQUIRE(M.component_dim(RootVec{2, 0, 0, 0}, zero) == 0);
  REQUIRE(M.component_dim(RootVec{0, 0, 0, 0}, zero) == 4);

  auto P = M.populated_components(1);
  std::set<RootVec> support;
  for (const auto& [key, dim] : P)
    if (key.alpha != RootVec{0, 0, 0, 0}) support.insert(key.alpha);
  auto info = classify_root_system({support.begin(), support.end()});
  REQUIRE(info.label() == "D4");

  auto rep = verify_axioms(M, 2);
  for (const auto& item : rep.items) {
    INFO(item.axiom << ": " << item.witness);
    CHECK(item.pass);
  }
  REQUIRE(rep.all_pass);

  auto M1 = construct(o_params(4, 1));
  REQUIRE(M1.n == 1);
  REQUIRE(M1.component_dim(RootVec{1, -1, 0, 0}, Degree{1}) == 1);
  auto rep1 = verify_axioms(M1, 1);
  for (const auto& item : rep1.items) {
    INFO(item.axiom << ": " << item.witness);
    CHECK(item.pass);
  }
  REQUIRE(rep1.all_pass);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(construct(o_params(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(construct(sp_params(1, 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(construct(sp_params(2, 0, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(construct(sp_params(2, 1, 0, 0)), std::invalid_argument);
  CHECK_NOTHROW(construct(sp_params(3, 0, 1, 0)));
  CHECK_NOTHROW(construct(sp_params(2, 1, 1, 0)));

  // su with r = 1 and trivial involution on the torus needs m >= 5
  CHECK_THROWS_AS(construct(su_params(1, 0, 0, 1, {Degree{0}, Degree{1}})),
                  std::invalid_argument);
  // the first hermitian degree must be zero
  CHECK_THROWS_AS(construct(su_params(1, 0, 1, 0, {Degree{2}})), std::invalid_argument);
  // hermitian degrees must be distinct mod 2L
  CHECK_THROWS_AS(construct(su_params(1, 0, 2, 0, {Degree{0, 0}, Degree{2, 0}})),
                  std::invalid_argument);
  // degrees with eps = -1 are not hermitian: t1 is skew in the standard pair
  CHECK_THROWS_AS(construct(su_params(1, 1, 0, 1, {Degree{0, 0, 0}, Degree{1, 0, 0}})),
                  std::invalid_argument);
  // commutation scalar of order 1 is not a quantum torus
  CHECK_THROWS_AS(construct(sl_params(1, {{3, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(construct(sl_params(1, {{3, 0}})), std::invalid_argument);
  CHECK_NOTHROW(construct(sl_params(1, {{3, 1}})));
}
