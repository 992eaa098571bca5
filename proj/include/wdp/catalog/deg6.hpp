#pragma once

// Anti-canonical degree 6: the six negative-curve configurations.

#include "wdp/catalog.hpp"

namespace wdp::catalog_detail {

// Three colinear points; F is the line through them.
inline CatalogEntry build_dp6_1() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp6-1", 4,
      {
          {"E1", cls({0, 1, 0, 0})},
          {"E2", cls({0, 0, 1, 0})},
          {"E3", cls({0, 0, 0, 1})},
          {"F", cls({1, -1, -1, -1})},
      });
  // Printed with E2.E3 = 1, contradicting the star dual graph and the degree;
  // corrected to 0.
  e.printedGram = RatMatrix({
      {-1, 0, 0, 1},
      {0, -1, 0, 1},
      {0, 0, -1, 1},
      {1, 1, 1, -2},
  });
  e.printedAntiCanonical = {Rat(2), Rat(2), Rat(2), Rat(3)};

  e.auxModels.emplace("blowup", aux_blowup(e.model, {
                                               {"G1", cls({1, -1, 0, 0, -1})},
                                               {"G2", cls({1, 0, -1, 0, -1})},
                                               {"G3", cls({1, 0, 0, -1, -1})},
                                           }));

  e.plans = {
      plan("E1\\F", "E1", {}, "E1"),
      plan("E1\\F", "E2", {}, "E2"),
      plan("E1\\F", "E3", {}, "E3"),
      plan("F", "F", {"E1"}, "F"),
      plan("F", "F", {"E2"}, "F"),
      plan("F", "F", {"E3"}, "F"),
      plan("F", "F", {}, "F"),
      blowup_plan("off-curves", "blowup", blowup_extraction("E", "blowup")),
  };
  expect(e, "E1\\F", 9, 10);
  expect(e, "F", 3, 4);
  expect(e, "off-curves", 6, 5);
  return e;
}

// Chain E1-E2-F-E3-E4: q2 infinitely near q1; q3 a separate point.
inline CatalogEntry build_dp6_2() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp6-2", 4,
      {
          {"E1", cls({1, -1, -1, 0})},
          {"E2", cls({0, 0, 1, 0})},
          {"E3", cls({1, -1, 0, -1})},
          {"E4", cls({0, 0, 0, 1})},
          {"F", cls({0, 1, -1, 0})},
      });
  e.printedGram = RatMatrix({
      {-1, 1, 0, 0, 0},
      {1, -1, 0, 0, 1},
      {0, 0, -1, 1, 1},
      {0, 0, 1, -1, 0},
      {0, 1, 1, 0, -2},
  });
  e.printedAntiCanonical = {Rat(2), Rat(3), Rat(1), Rat(0), Rat(2)};
  e.model.namedClasses.emplace("L", cls({1, -1, 0, 0}));

  e.plans = {
      plan("E1\\E2", "E1", {}, "E1"),
      plan("E1\\E2", "E4", {}, "E4"),
      plan("E2", "E2", {"E1"}, "E2"),
      plan("E2", "E2", {"F"}, "E2"),
      plan("E2", "E2", {}, "E2"),
      plan("E2", "E3", {"E4"}, "E3"),
      plan("E2", "E3", {"F"}, "E3"),
      plan("E2", "E3", {}, "E3"),
      plan("F\\(E2+E3)", "F", {}, "F"),
      movable_plan("off-curves", "L"),
  };
  // The printed table's 9/10 for E1\E2 stems from a P^2 misprint (a "5-2u"
  // chamber on [2,3], beyond the stated tau = 2 and discontinuous with the
  // first chamber); the printed P(u), N(u) give P^2 = (2-u)(4-u), S(E1) = 1.
  expect(e, "E1\\E2", 1, 1);
  expect(e, "E2", 9, 11);
  expect(e, "F\\(E2+E3)", 9, 11);
  expect(e, "off-curves", 9, 8);
  return e;
}

// Chain F1-E1-F2-E2: q2 infinitely near q1 along the line F2, q3 an
// ordinary point of the twice-blown line.
inline CatalogEntry build_dp6_3() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp6-3", 4,
      {
          {"E1", cls({0, 0, 1, 0})},
          {"E2", cls({0, 0, 0, 1})},
          {"F1", cls({0, 1, -1, 0})},
          {"F2", cls({1, -1, -1, -1})},
      });
  e.printedGram = RatMatrix({
      {-1, 0, 1, 1},
      {0, -1, 0, 1},
      {1, 0, -2, 0},
      {1, 1, 0, -2},
  });
  e.printedAntiCanonical = {Rat(4), Rat(2), Rat(2), Rat(3)};
  e.model.namedClasses.emplace("L", cls({1, -1, 0, 0}));

  e.plans = {
      plan("F1\\E1", "F1", {}, "F1"),
      plan("E1", "E1", {"F1"}, "E1"),
      plan("E1", "E1", {"F2"}, "E1"),
      plan("E1", "E1", {}, "E1"),
      plan("F2\\E1", "F2", {}, "F2"),
      plan("F2\\E1", "E2", {"F2"}, "F2"),
      plan("E2\\F2", "E2", {}, "E2"),
      movable_plan("off-curves", "L"),
  };
  expect(e, "F1\\E1", 9, 11);
  expect(e, "E1", 9, 14);
  expect(e, "F2\\E1", 3, 4);
  expect(e, "E2\\F2", 9, 10);
  expect(e, "off-curves", 9, 8);
  return e;
}

// Tower q1 <- q2 <- q3 with generic directions: F1-F2 chain, E1 and E2 both
// meeting F2.
inline CatalogEntry build_dp6_4() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp6-4", 4,
      {
          {"E1", cls({0, 0, 0, 1})},
          {"E2", cls({1, -1, -1, 0})},
          {"F1", cls({0, 1, -1, 0})},
          {"F2", cls({0, 0, 1, -1})},
      });
  e.printedGram = RatMatrix({
      {-1, 0, 0, 1},
      {0, -1, 0, 1},
      {0, 0, -2, 1},
      {1, 1, 1, -2},
  });
  e.printedAntiCanonical = {Rat(3), Rat(3), Rat(2), Rat(4)};
  e.model.namedClasses.emplace("L", cls({1, -1, 0, 0}));

  e.plans = {
      plan("F1\\F2", "F1", {}, "F1"),
      plan("F2", "F2", {"F1"}, "F2"),
      plan("F2", "F2", {"E1"}, "F2"),
      plan("F2", "F2", {"E2"}, "F2"),
      plan("F2", "F2", {}, "F2"),
      plan("E1\\F2", "E1", {}, "E1"),
      plan("E1\\F2", "E2", {}, "E2"),
      movable_plan("off-curves", "L"),
  };
  expect(e, "F1\\F2", 3, 4);
  expect(e, "F2", 3, 5);
  expect(e, "E1\\F2", 4, 5);
  expect(e, "off-curves", 1, 1);
  return e;
}

// Tower q1 <- q2 <- q3 along a line: chain F1-F2-E with F3 (the line) also
// meeting E.
inline CatalogEntry build_dp6_5() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp6-5", 4,
      {
          {"E", cls({0, 0, 0, 1})},
          {"F1", cls({0, 1, -1, 0})},
          {"F2", cls({0, 0, 1, -1})},
          {"F3", cls({1, -1, -1, -1})},
      });
  e.printedGram = RatMatrix({
      {-1, 0, 1, 1},
      {0, -2, 1, 0},
      {1, 1, -2, 0},
      {1, 0, 0, -2},
  });
  e.printedAntiCanonical = {Rat(6), Rat(2), Rat(4), Rat(3)};
  e.model.namedClasses.emplace("L", cls({1, -1, 0, 0}));

  e.plans = {
      plan("F1\\F2", "F1", {}, "F1"),
      plan("F2\\E", "F2", {"F1"}, "F2"),
      plan("F2\\E", "F2", {}, "F2"),
      plan("E", "E", {"F2"}, "E"),
      plan("E", "E", {"F3"}, "E"),
      plan("E", "E", {}, "E"),
      plan("F3\\E", "F3", {}, "F3"),
      movable_plan("off-curves", "L"),
  };
  expect(e, "F1\\F2", 3, 4);
  expect(e, "F2\\E", 3, 5);
  expect(e, "E", 1, 2);
  expect(e, "F3\\E", 3, 4);
  expect(e, "off-curves", 1, 1);
  return e;
}

// The del Pezzo sextic: three non-colinear points, hexagon of (-1)-curves.
inline CatalogEntry build_dp6_6() {
  CatalogEntry e;
  e.model = lorentzian_model(
      "dp6-6", 4,
      {
          {"E1", cls({0, 1, 0, 0})},
          {"E2", cls({1, -1, -1, 0})},
          {"E3", cls({0, 0, 1, 0})},
          {"E4", cls({1, 0, -1, -1})},
          {"E5", cls({0, 0, 0, 1})},
          {"E6", cls({1, -1, 0, -1})},
      });
  e.printedGram = RatMatrix({
      {-1, 1, 0, 0, 0, 1},
      {1, -1, 1, 0, 0, 0},
      {0, 1, -1, 1, 0, 0},
      {0, 0, 1, -1, 1, 0},
      {0, 0, 0, 1, -1, 1},
      {1, 0, 0, 0, 1, -1},
  });
  e.printedAntiCanonical = {Rat(2), Rat(2), Rat(1), Rat(0), Rat(0), Rat(1)};

  e.auxModels.emplace("blowup", aux_blowup(e.model, {
                                               {"G1", cls({1, -1, 0, 0, -1})},
                                               {"G2", cls({1, 0, -1, 0, -1})},
                                               {"G3", cls({1, 0, 0, -1, -1})},
                                           }));

  const std::vector<std::pair<std::string, std::vector<std::string>>> hexagon = {
      {"E1", {"E2", "E6"}}, {"E2", {"E1", "E3"}}, {"E3", {"E2", "E4"}},
      {"E4", {"E3", "E5"}}, {"E5", {"E4", "E6"}}, {"E6", {"E5", "E1"}},
  };
  for (const auto& [curve, nbrs] : hexagon) {
    for (const auto& n : nbrs) e.plans.push_back(plan("Ei", curve, {n}, curve));
    e.plans.push_back(plan("Ei", curve, {}, curve));
  }
  e.plans.push_back(blowup_plan("off-curves", "blowup", blowup_extraction("E", "blowup")));

  expect(e, "Ei", 1, 1);
  expect(e, "off-curves", 6, 5);
  return e;
}

}  // namespace wdp::catalog_detail
