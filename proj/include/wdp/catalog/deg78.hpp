#pragma once

// Anti-canonical degrees 7 and 8. Degree 8 means a Hirzebruch surface; their
// rank-2 models declare the generators directly, including the 0-curve
// fiber class (and both rulings on Sigma_0).

#include "wdp/catalog.hpp"

namespace wdp::catalog_detail {

// q2 infinitely near q1: chain E1-E2-F.
inline CatalogEntry build_dp7_1() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp7-1", 3,
      {
          {"E1", cls({1, -1, -1})},
          {"E2", cls({0, 0, 1})},
          {"F", cls({0, 1, -1})},
      });
  // Printed with E2.E2 = -2 although E2 is a (-1)-curve (and -K^2 would come
  // out -9); corrected to -1.
  e.printedGram = RatMatrix({
      {-1, 1, 0},
      {1, -1, 1},
      {0, 1, -2},
  });
  e.printedAntiCanonical = {Rat(3), Rat(4), Rat(2)};
  e.model.namedClasses.emplace("L", cls({1, -1, 0}));

  e.plans = {
      plan("E1\\E2", "E1", {}, "E1"),
      plan("E2", "E2", {"E1"}, "E2"),
      plan("E2", "E2", {"F"}, "E2"),
      plan("E2", "E2", {}, "E2"),
      plan("F\\E2", "F", {}, "F"),
      movable_plan("off-curves", "L"),
  };
  expect(e, "E1\\E2", 21, 25);
  expect(e, "E2", 21, 31);
  expect(e, "F\\E2", 7, 9);
  expect(e, "off-curves", 21, 23);
  return e;
}

// Two distinct points: chain E1-E2-E3 of (-1)-curves.
inline CatalogEntry build_dp7_2() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp7-2", 3,
      {
          {"E1", cls({0, 1, 0})},
          {"E2", cls({1, -1, -1})},
          {"E3", cls({0, 0, 1})},
      });
  e.printedGram = RatMatrix({
      {-1, 1, 0},
      {1, -1, 1},
      {0, 1, -1},
  });
  e.printedAntiCanonical = {Rat(2), Rat(3), Rat(2)};
  e.model.namedClasses.emplace("L", cls({1, -1, 0}));

  e.plans = {
      plan("E1\\E2", "E1", {}, "E1"),
      plan("E1\\E2", "E3", {}, "E3"),
      plan("E2", "E2", {"E1"}, "E2"),
      plan("E2", "E2", {"E3"}, "E2"),
      plan("E2", "E2", {}, "E2"),
      movable_plan("off-curves", "L"),
  };
  // The printed off-curve value 21/22 uses P^2 = 7-2u on the first chamber
  // of the L-ray, discontinuous with its own second chamber (2-u)(4-u) at
  // u = 1; since -K.L = 2 and L^2 = 0, the volume is 7-4u and S(L) = 19/21.
  expect(e, "E1\\E2", 21, 23);
  expect(e, "E2", 21, 25);
  expect(e, "off-curves", 21, 19);
  return e;
}

// P^1 x P^1: both rulings are generators; every point lies on a member of
// each ruling pencil, so the section's strata collapse to the generic one.
inline CatalogEntry build_dp8_sigma0() {
  CatalogEntry e;
  e.lorentzian = false;
  e.model = hirzebruch_model("dp8-sigma0", 0);
  e.model.strataOverrides["C0"] = {make_stratum("C0", {})};
  e.model.strataOverrides["Gamma"] = {make_stratum("Gamma", {})};
  e.printedGram = RatMatrix({{0, 1}, {1, 0}});
  e.printedAntiCanonical = {Rat(2), Rat(2)};

  e.plans = {
      plan("S", "C0", {}, "C0"),
      plan("S", "Gamma", {}, "Gamma"),
  };
  expect(e, "S", 1, 1);
  return e;
}

inline CatalogEntry build_dp8_sigma1() {
  CatalogEntry e;
  e.lorentzian = false;
  e.model = hirzebruch_model("dp8-sigma1", 1);
  e.model.strataOverrides["C0"] = {make_stratum("C0", {})};
  e.printedGram = RatMatrix({{-1, 1}, {1, 0}});
  e.printedAntiCanonical = {Rat(2), Rat(3)};

  e.plans = {
      plan("C0", "C0", {}, "C0"),
      plan("S\\C0", "Gamma", {}, "Gamma"),
  };
  expect(e, "C0", 6, 7);
  expect(e, "S\\C0", 12, 13);
  return e;
}

inline CatalogEntry build_dp8_sigma2() {
  CatalogEntry e;
  e.lorentzian = false;
  e.model = hirzebruch_model("dp8-sigma2", 2);
  e.model.strataOverrides["C0"] = {make_stratum("C0", {})};
  e.printedGram = RatMatrix({{-2, 1}, {1, 0}});
  e.printedAntiCanonical = {Rat(2), Rat(4)};

  e.plans = {
      plan("S", "C0", {}, "C0"),
      plan("S", "Gamma", {}, "Gamma"),
  };
  expect(e, "S", 3, 4);
  return e;
}

}  // namespace wdp::catalog_detail
