// Shared parameter grid for the reproduction harness: the CLI `tables`
// command and the acceptance suite enumerate exactly the same models.
#pragma once

#include <vector>

#include "lietori/classify.hpp"
#include "lietori/lietorus.hpp"

namespace lietori {

// The admissible parameter grid over which computed invariants are matched
// against the closed forms:
//   - special linear:    r in {1,2,3}, quantum part from
//                        {none, Q(-1), Q(zeta_3), Q(zeta_4), Q(-1) (x) Q(-1)},
//                        q <= 1
//   - symplectic-type:   r in {1,2,3}, k <= 1, p <= 2, q <= 1, minus the
//                        small-rank exclusions
//   - hermitian-type:    r in {1,2}, k <= 1, p <= 2, q <= 2, m <= 5, with a
//                        spread of shift-degree parity configurations
//   - orthogonal:        r = 4, q <= 2
inline std::vector<ConstructionParams> acceptance_grid() {
  std::vector<ConstructionParams> grid;

  // special linear
  const std::vector<std::vector<QuantumParam>> quantum_sets = {
      {}, {{2, 1}}, {{3, 1}}, {{4, 1}}, {{2, 1}, {2, 1}}};
  for (int r = 1; r <= 3; ++r)
    for (const auto& qs : quantum_sets)
      for (int q = 0; q <= 1; ++q) {
        ConstructionParams P;
        P.family = Family::SL;
        P.r = r;
        P.quantum = qs;
        P.q = q;
        grid.push_back(std::move(P));
      }

  // symplectic-type
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k <= 1; ++k)
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 1; ++q) {
          if (r <= 2 && ((k == 0 && p <= 1) || (k == 1 && p == 0))) continue;
          ConstructionParams P;
          P.family = Family::SP;
          P.r = r;
          P.k = k;
          P.p = p;
          P.q = q;
          grid.push_back(std::move(P));
        }

  // hermitian-type: for each admissible (r,k,p,q) take every block size m up
  // to 5, with the lexicographically first and last parity configurations of
  // the shift degrees (the configuration only matters through these parities)
  for (int r = 1; r <= 2; ++r)
    for (int k = 0; k <= 1; ++k)
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
          const long nclasses =
              static_cast<long>(detail::hermitian_parity_classes(k, p, q).size());
          for (int m = 1; m <= 5; ++m) {
            if (m > nclasses) break;
            if (r == 1 && k == 0 && p == 0 && m < 5) continue;
            auto cfgs = detail::delta_configs(k, p, q, m);
            std::vector<size_t> picks{0};
            if (cfgs.size() > 1) picks.push_back(cfgs.size() - 1);
            for (size_t c : picks) {
              ConstructionParams P;
              P.family = Family::SU;
              P.r = r;
              P.k = k;
              P.p = p;
              P.q = q;
              P.m = m;
              P.delta = cfgs[c];
              grid.push_back(std::move(P));
            }
          }
        }

  // orthogonal
  for (int q = 0; q <= 2; ++q) {
    ConstructionParams P;
    P.family = Family::O;
    P.r = 4;
    P.q = q;
    grid.push_back(std::move(P));
  }

  return grid;
}

}  // namespace lietori
