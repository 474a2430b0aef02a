#include <catch2/catch_amalgamated.hpp>

#include "lietori/rootsys.hpp"

using namespace lietori;

namespace {

// standard realizations in epsilon-coordinates
std::vector<RootVec> type_A(int r) {  // in Z^{r+1}
  std::vector<RootVec> out;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      if (i == j) continue;
      RootVec v(r + 1, 0);
      v[i] = 1;
      v[j] = -1;
      out.push_back(v);
    }
  return out;
}

std::vector<RootVec> type_BCD(int r, bool shorts, bool longs, bool doubles) {
  std::vector<RootVec> out;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          if (!longs) continue;
          RootVec v(r, 0);
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int i = 0; i < r; ++i)
    for (int s : {1, -1}) {
      if (shorts) {
        RootVec v(r, 0);
        v[i] = s;
        out.push_back(v);
      }
      if (doubles) {
        RootVec v(r, 0);
        v[i] = 2 * s;
        out.push_back(v);
      }
    }
  return out;
}

}  // namespace

TEST_CASE("classical types recognized") {
  for (int r : {1, 2, 3, 5}) {
    auto info = classify_root_system(type_A(r));
    CHECK(info.label() == "A" + std::to_string(r));
    CHECK(info.reduced);
  }
  for (int r : {2, 3, 4}) {
    auto info = classify_root_system(type_BCD(r, true, true, false));
    CHECK(info.label() == "B" + std::to_string(r));
  }
  {
    auto info = classify_root_system(type_BCD(3, false, true, true));
    CHECK(info.label() == "C3");
  }
  for (int r : {4, 5}) {
    auto info = classify_root_system(type_BCD(r, false, true, false));
    CHECK(info.label() == "D" + std::to_string(r));
  }
  for (int r : {1, 2, 3}) {
    auto info = classify_root_system(type_BCD(r, true, r > 1, true));
    CHECK(info.label() == "BC" + std::to_string(r));
    CHECK_FALSE(info.reduced);
  }
}

TEST_CASE("naming conventions at low rank") {
  // B1 and C1 are A1
  CHECK(classify_root_system(type_BCD(1, true, false, false)).label() == "A1");
  CHECK(classify_root_system(type_BCD(1, false, false, true)).label() == "A1");
  // C2 is reported as B2
  CHECK(classify_root_system(type_BCD(2, false, true, true)).label() == "B2");
}

TEST_CASE("exceptional diagrams: G2 and F4") {
  // G2 realized in the plane sum(coords)=0 of Z^3
  std::vector<RootVec> g2;
  for (auto v : std::vector<RootVec>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1},
                                     {2, -1, -1}, {1, 1, -2}, {-1, 2, -1}}) {
    g2.push_back(v);
    RootVec n(v.size());
    for (size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
    g2.push_back(n);
  }
  CHECK(classify_root_system(g2).label() == "G2");

  // F4 standard realization (coordinates doubled to stay integral)
  std::vector<RootVec> f4;
  for (int i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      RootVec v(4, 0);
      v[i] = s;
      f4.push_back(v);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          RootVec v(4, 0);
          v[i] = si;
          v[j] = sj;
          f4.push_back(v);
        }
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) f4.push_back({s0, s1, s2, s3});
  CHECK(classify_root_system(f4).label() == "F4");
}

TEST_CASE("rejections") {
  // reducible: D2 = A1 x A1
  CHECK_THROWS_AS(classify_root_system(type_BCD(2, false, true, false)),
                  std::domain_error);
  // not closed under negation
  CHECK_THROWS_AS(classify_root_system({{1, 0}, {0, 1}, {-1, 0}}), std::domain_error);
  // not crystallographic / not reflection-closed
  CHECK_THROWS_AS(classify_root_system({{1, 0}, {-1, 0}, {1, 1}, {-1, -1}}),
                  std::domain_error);
  // contains zero
  CHECK_THROWS_AS(classify_root_system({{0, 0}, {1, 0}, {-1, 0}}), std::domain_error);
}

TEST_CASE("length classes") {
  auto info = classify_root_system(type_BCD(2, true, true, true));  // BC2
  int n_short = 0, n_long = 0, n_extra = 0;
  for (const auto& [v, l] : info.length_of) {
    if (l == RootLength::Short) ++n_short;
    if (l == RootLength::Long) ++n_long;
    if (l == RootLength::ExtraLong) ++n_extra;
  }
  CHECK(n_short == 4);
  CHECK(n_long == 4);
  CHECK(n_extra == 4);

  auto d4 = classify_root_system(type_BCD(4, false, true, false));
  for (const auto& [v, l] : d4.length_of) CHECK(l == RootLength::Short);
}

TEST_CASE("root lattice coordinates are integral") {
  for (auto roots : {type_A(3), type_BCD(3, true, true, false), type_BCD(2, true, true, true)}) {
    auto info = classify_root_system(roots);
    auto coords = root_lattice_coords(info);
    for (const auto& [root, x] : coords) {
      RootVec rebuilt(root.size(), 0);
      for (size_t k = 0; k < x.size(); ++k) {
        CHECK(x[k].get_den() == 1);
        for (size_t i = 0; i < root.size(); ++i)
          rebuilt[i] += static_cast<long>(x[k].get_num().get_si()) * info.simple_roots[k][i];
      }
      CHECK(rebuilt == root);
    }
  }
}
