#pragma once

// Ray-decomposition fixtures transcribed from the source case analyses.
// P(u) is given as an affine combination of the generator curves (the curve
// coordinates the cases are printed in); the checker expands it through the
// curve classes and compares lattice vectors with the walker's chambers.

#include <string>
#include <utility>
#include <vector>

#include "wdp/rational.hpp"

namespace wdp::fixtures {

struct AffineEntry {
  std::string label;
  Rat c0, c1;
};

struct ChamberFixture {
  Rat lo, hi;
  std::vector<AffineEntry> pTuple;   // curve-coordinate expansion of P(u)
  std::vector<AffineEntry> nCoeffs;  // support label -> coefficient of N(u)
};

struct RayFixture {
  std::string surface;
  std::string ray;
  Rat tau;
  std::vector<ChamberFixture> chambers;
};

inline const std::vector<RayFixture>& ray_fixtures() {
  auto R = [](long n, long d = 1) { return rat(n, d); };
  static const std::vector<RayFixture> fx = {
      {"dp5-1", "F", R(2),
       {{R(0), R(1),
         {{"E4", R(1), R(0)}, {"E5", R(1), R(0)}, {"E6", R(1), R(0)}, {"E7", R(2), R(0)}, {"F", R(0), R(-1)}},
         {}},
        {R(1), R(2),
         {{"E1", R(1), R(-1)}, {"E2", R(1), R(-1)}, {"E3", R(1), R(-1)}, {"E4", R(1), R(0)},
          {"E5", R(1), R(0)}, {"E6", R(1), R(0)}, {"E7", R(2), R(0)}, {"F", R(0), R(-1)}},
         {{"E1", R(-1), R(1)}, {"E2", R(-1), R(1)}, {"E3", R(-1), R(1)}}}}},

      {"dp5-1", "E1", R(2),
       {{R(0), R(1),
         {{"E1", R(0), R(-1)}, {"E4", R(1), R(0)}, {"E5", R(1), R(0)}, {"E6", R(1), R(0)},
          {"E7", R(2), R(0)}, {"F", R(0), R(-1, 2)}},
         {{"F", R(0), R(1, 2)}}},
        {R(1), R(2),
         {{"E1", R(0), R(-1)}, {"E4", R(2), R(-1)}, {"E5", R(1), R(0)}, {"E6", R(1), R(0)},
          {"E7", R(2), R(0)}, {"F", R(0), R(-1, 2)}},
         {{"E4", R(-1), R(1)}, {"F", R(0), R(1, 2)}}}}},

      {"dp5-1", "E7", R(2),
       {{R(0), R(1),
         {{"E4", R(1), R(0)}, {"E5", R(1), R(0)}, {"E6", R(1), R(0)}, {"E7", R(2), R(-1)}},
         {}},
        {R(1), R(2),
         {{"E4", R(2), R(-1)}, {"E5", R(2), R(-1)}, {"E6", R(2), R(-1)}, {"E7", R(2), R(-1)}},
         {{"E4", R(-1), R(1)}, {"E5", R(-1), R(1)}, {"E6", R(-1), R(1)}}}}},

      {"dp5-2", "E1", R(3),
       {{R(0), R(2),
         {{"E1", R(1), R(-1)}, {"E2", R(1), R(0)}, {"E3", R(1), R(0)}, {"E4", R(1), R(0)},
          {"E5", R(1), R(0)}, {"F1", R(1), R(-1, 2)}, {"F2", R(1), R(-1, 2)}},
         {{"F1", R(0), R(1, 2)}, {"F2", R(0), R(1, 2)}}},
        {R(2), R(3),
         {{"E1", R(1), R(-1)}, {"E2", R(3), R(-1)}, {"E3", R(1), R(0)}, {"E4", R(1), R(0)},
          {"E5", R(3), R(-1)}, {"F1", R(2), R(-1)}, {"F2", R(2), R(-1)}},
         {{"E2", R(-2), R(1)}, {"E5", R(-2), R(1)}, {"F1", R(-1), R(1)}, {"F2", R(-1), R(1)}}}}},

      {"dp5-3", "E3", R(4),
       {{R(0), R(3),
         {{"E1", R(2), R(0)}, {"E2", R(3), R(0)}, {"E3", R(0), R(-1)}, {"F1", R(2), R(-1, 3)},
          {"F2", R(1), R(-2, 3)}, {"F3", R(0), R(-1, 2)}},
         {{"F1", R(0), R(1, 3)}, {"F2", R(0), R(2, 3)}, {"F3", R(0), R(1, 2)}}},
        {R(3), R(4),
         {{"E1", R(2), R(0)}, {"E2", R(6), R(-1)}, {"E3", R(0), R(-1)}, {"F1", R(4), R(-1)},
          {"F2", R(2), R(-1)}, {"F3", R(0), R(-1, 2)}},
         {{"E2", R(-3), R(1)}, {"F1", R(-2), R(1)}, {"F2", R(-1), R(1)}, {"F3", R(0), R(1, 2)}}}}},

      {"dp5-3", "F2", R(3),
       {{R(0), R(1),
         {{"E1", R(2), R(0)}, {"E2", R(3), R(0)}, {"F1", R(2), R(-1, 2)}, {"F2", R(1), R(-1)}},
         {{"F1", R(0), R(1, 2)}}},
        {R(1), R(2),
         {{"E1", R(2), R(0)}, {"E2", R(3), R(0)}, {"E3", R(2), R(-2)}, {"F1", R(2), R(-1, 2)},
          {"F2", R(1), R(-1)}, {"F3", R(1), R(-1)}},
         {{"E3", R(-2), R(2)}, {"F1", R(0), R(1, 2)}, {"F3", R(-1), R(1)}}},
        {R(2), R(3),
         {{"E1", R(2), R(0)}, {"E2", R(5), R(-1)}, {"E3", R(2), R(-2)}, {"F1", R(3), R(-1)},
          {"F2", R(1), R(-1)}, {"F3", R(1), R(-1)}},
         {{"E2", R(-2), R(1)}, {"E3", R(-2), R(2)}, {"F1", R(-1), R(1)}, {"F3", R(-1), R(1)}}}}},

      {"dp5-5", "F1", R(3),
       {{R(0), R(1),
         {{"E1", R(2), R(0)}, {"E2", R(3), R(0)}, {"F1", R(3), R(-1)}, {"F2", R(4), R(-2, 3)},
          {"F3", R(2), R(-1, 3)}},
         {{"F2", R(0), R(2, 3)}, {"F3", R(0), R(1, 3)}}},
        {R(1), R(3, 2),
         {{"E1", R(3), R(-1)}, {"E2", R(3), R(0)}, {"F1", R(3), R(-1)}, {"F2", R(4), R(-2, 3)},
          {"F3", R(2), R(-1, 3)}},
         {{"E1", R(-1), R(1)}, {"F2", R(0), R(2, 3)}, {"F3", R(0), R(1, 3)}}},
        {R(3, 2), R(3),
         {{"E1", R(3), R(-1)}, {"E2", R(6), R(-2)}, {"F1", R(3), R(-1)}, {"F2", R(6), R(-2)},
          {"F3", R(3), R(-1)}},
         {{"E1", R(-1), R(1)}, {"E2", R(-3), R(2)}, {"F2", R(-2), R(2)}, {"F3", R(-1), R(1)}}}}},

      {"dp5-6", "E1", R(5),
       {{R(0), R(5),
         {{"E1", R(5), R(-1)}, {"F1", R(2), R(-2, 5)}, {"F2", R(4), R(-4, 5)}, {"F3", R(6), R(-6, 5)},
          {"F4", R(3), R(-3, 5)}},
         {{"F1", R(0), R(2, 5)}, {"F2", R(0), R(4, 5)}, {"F3", R(0), R(6, 5)}, {"F4", R(0), R(3, 5)}}}}},

      {"dp5-7", "E1", R(2),
       {{R(0), R(1),
         {{"E1", R(2), R(-1)}, {"E2", R(1), R(0)}, {"E8", R(1), R(0)}, {"E9", R(1), R(0)}},
         {}},
        {R(1), R(2),
         {{"E1", R(2), R(-1)}, {"E2", R(2), R(-1)}, {"E8", R(2), R(-1)}, {"E9", R(2), R(-1)}},
         {{"E2", R(-1), R(1)}, {"E8", R(-1), R(1)}, {"E9", R(-1), R(1)}}}}},

      {"dp6-1", "F", R(3),
       {{R(0), R(1),
         {{"E1", R(2), R(0)}, {"E2", R(2), R(0)}, {"E3", R(2), R(0)}, {"F", R(3), R(-1)}},
         {}},
        {R(1), R(3),
         {{"E1", R(3), R(-1)}, {"E2", R(3), R(-1)}, {"E3", R(3), R(-1)}, {"F", R(3), R(-1)}},
         {{"E1", R(-1), R(1)}, {"E2", R(-1), R(1)}, {"E3", R(-1), R(1)}}}}},

      {"dp6-2", "F", R(2),
       {{R(0), R(1),
         {{"E1", R(2), R(0)}, {"E2", R(3), R(0)}, {"E3", R(1), R(0)}, {"F", R(2), R(-1)}},
         {}},
        {R(1), R(2),
         {{"E1", R(2), R(0)}, {"E2", R(4), R(-1)}, {"E3", R(2), R(-1)}, {"F", R(2), R(-1)}},
         {{"E2", R(-1), R(1)}, {"E3", R(-1), R(1)}}}}},

      {"dp6-5", "E", R(6),
       {{R(0), R(6),
         {{"E", R(6), R(-1)}, {"F1", R(2), R(-1, 3)}, {"F2", R(4), R(-2, 3)}, {"F3", R(3), R(-1, 2)}},
         {{"F1", R(0), R(1, 3)}, {"F2", R(0), R(2, 3)}, {"F3", R(0), R(1, 2)}}}}},

      {"dp7-1", "E2", R(4),
       {{R(0), R(1),
         {{"E1", R(3), R(0)}, {"E2", R(4), R(-1)}, {"F", R(2), R(-1, 2)}},
         {{"F", R(0), R(1, 2)}}},
        {R(1), R(4),
         {{"E1", R(4), R(-1)}, {"E2", R(4), R(-1)}, {"F", R(2), R(-1, 2)}},
         {{"E1", R(-1), R(1)}, {"F", R(0), R(1, 2)}}}}},

      {"dp8-sigma1", "Gamma", R(3),
       {{R(0), R(1), {{"C0", R(2), R(0)}, {"Gamma", R(3), R(-1)}}, {}},
        {R(1), R(3),
         {{"C0", R(3), R(-1)}, {"Gamma", R(3), R(-1)}},
         {{"C0", R(-1), R(1)}}}}},

      {"dp8-sigma2", "C0", R(2),
       {{R(0), R(2), {{"C0", R(2), R(-1)}, {"Gamma", R(4), R(0)}}, {}}}},

      {"dp8-sigma2", "Gamma", R(4),
       {{R(0), R(4),
         {{"C0", R(2), R(-1, 2)}, {"Gamma", R(4), R(-1)}},
         {{"C0", R(0), R(1, 2)}}}}},
  };
  return fx;
}

}  // namespace wdp::fixtures
