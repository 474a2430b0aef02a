#include <catch2/catch_amalgamated.hpp>

#include "lietori/invariants.hpp"

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

void check_tuple(const InvariantTuple& t, const std::string& type, long nullity, long crk,
                 std::vector<long> rkv, std::vector<Integer> torsion) {
  CHECK(t.type == type);
  CHECK(t.nullity == nullity);
  CHECK(t.crk == crk);
  CHECK(t.rkv == rkv);
  CHECK(t.quotient.torsion == torsion);
  CHECK(t.quotient.free_rank == 0);
}

void check_oracle(const LieTorusModel& M, long gamma_box = 2, long unknown_box = 2) {
  auto probes = centroid_oracle(M, gamma_box, unknown_box);
  REQUIRE(!probes.empty());
  long in_support = 0;
  for (const auto& p : probes) {
    INFO("gamma = " << detail::fmt_vec(p.gamma)
                    << " structural = " << p.structural
                    << " verdict = " << static_cast<int>(p.verdict));
    CHECK(p.verdict != CentroidVerdict::Inconclusive);
    CHECK(p.matches);
    if (p.verdict == CentroidVerdict::InSupport) ++in_support;
  }
  CHECK(in_support >= 1);  // gamma = 0 at least
}

}  // namespace

TEST_CASE("invariant tuples of split models") {
  check_tuple(invariant_tuple(construct(sl_params(1))), "A1", 0, 3, {1}, {});
  check_tuple(invariant_tuple(construct(sl_params(2))), "A2", 0, 8, {1}, {});
  check_tuple(invariant_tuple(construct(sp_params(3, 0, 0, 0))), "C3", 0, 21, {1, 1}, {});
  check_tuple(invariant_tuple(construct(o_params(4, 0))), "D4", 0, 28, {1}, {});
  check_tuple(invariant_tuple(construct(o_params(4, 1))), "D4", 1, 28, {1}, {});
}

TEST_CASE("invariant tuples over quantum tori") {
  check_tuple(invariant_tuple(construct(sl_params(1, {{2, 1}}))), "A1", 2, 15, {4},
              {Integer(2), Integer(2)});
  check_tuple(invariant_tuple(construct(sl_params(2, {{2, 1}}))), "A2", 2, 35, {4},
              {Integer(2), Integer(2)});
  check_tuple(invariant_tuple(construct(sl_params(1, {{4, 1}}))), "A1", 2, 63, {16},
              {Integer(4), Integer(4)});
}

TEST_CASE("invariant tuples of hermitian models") {
  // sign-graded Laurent coordinates, one hermitian matrix entry
  check_tuple(invariant_tuple(construct(su_params(1, 0, 1, 0, {Degree{0}}))), "BC1", 1, 8,
              {2, 1}, {Integer(2)});
  // reversal pair with a shifted hermitian degree
  check_tuple(invariant_tuple(construct(su_params(1, 0, 2, 0, {Degree{0, 0}, Degree{1, 0}}))),
              "BC1", 2, 28, {8, 1}, {Integer(2), Integer(4)});
  // commutative coordinates with nontrivial hermitian shifts
  check_tuple(invariant_tuple(construct(su_params(2, 0, 0, 1, {Degree{0}, Degree{1}}))), "B2",
              1, 15, {2, 1}, {Integer(2)});
  // symplectic over the standard pair plus a sign-graded coordinate
  check_tuple(invariant_tuple(construct(sp_params(2, 1, 1, 0))), "B2", 3, 63, {8, 4},
              {Integer(2), Integer(2), Integer(2)});
}

TEST_CASE("degreewise centroid oracle agrees with the structural support") {
  SECTION("sl2 over the base field") { check_oracle(construct(sl_params(1))); }
  SECTION("sl2 over the quantum torus at -1") {
    check_oracle(construct(sl_params(1, {{2, 1}})));
  }
  SECTION("su with half-shifted degrees") {
    check_oracle(construct(su_params(1, 0, 2, 0, {Degree{0, 0}, Degree{1, 0}})));
  }
  SECTION("sp over the reversal pair") { check_oracle(construct(sp_params(2, 0, 2, 0))); }
  SECTION("o with one Laurent coordinate") { check_oracle(construct(o_params(4, 1)), 1, 1); }
}
