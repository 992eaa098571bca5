#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "wdp/catalog.hpp"
#include "wdp/evaluate.hpp"

using namespace wdp;

TEST_CASE("catalog inventory") {
  const auto& ids = list_surfaces();
  CHECK(ids.size() == 18);
  std::set<std::string> unique(ids.begin(), ids.end());
  CHECK(unique.size() == 18);
  Rat degrees(0);
  for (const auto& id : ids) degrees += get_surface(id).model.degree;
  CHECK(degrees == 109);
  CHECK_THROWS_AS(get_surface("dp4-1"), UnknownSurface);
}

TEST_CASE("catalog entries match their printed data") {
  const CatalogEntry& dp51 = get_surface("dp5-1");
  CHECK(dp51.model.generators.size() == 8);
  CHECK(dp51.model.degree == 5);

  const CatalogEntry& s2 = get_surface("dp8-sigma2");
  REQUIRE(s2.model.generators.size() == 2);
  CHECK(s2.model.generators[0].first == "C0");
  CHECK(s2.model.gram == RatMatrix({{-2, 1}, {1, 0}}));
  CHECK(s2.model.antiCanonical == DivisorClass{2, 4});

  const CatalogEntry& dp72 = get_surface("dp7-2");
  CHECK(dp72.model.generators.size() == 3);
  DivisorClass expanded;
  expanded.coeffs.assign(3, Rat(0));
  for (std::size_t i = 0; i < 3; ++i)
    expanded = expanded + dp72.model.generators[i].second.scaled(dp72.printedAntiCanonical[i]);
  CHECK(expanded == dp72.model.antiCanonical);

  for (const std::string& id : list_surfaces()) {
    const CatalogEntry& e = get_surface(id);
    const SurfaceModel& m = e.model;
    for (std::size_t i = 0; i < m.generators.size(); ++i)
      for (std::size_t j = 0; j < m.generators.size(); ++j)
        CHECK(pair_classes(m, m.generators[i].second, m.generators[j].second) == e.printedGram.at(i, j));
  }
}

TEST_CASE("expected tables carry the published rows") {
  DeltaTable t56 = expected_table("dp5-6");
  REQUIRE(t56.rows.size() == 6);
  CHECK(t56.rows[0] == std::pair<std::string, Rat>{"F1\\F2", rat(3, 4)});
  CHECK(t56.rows[1] == std::pair<std::string, Rat>{"F2\\F3", rat(6, 11)});
  CHECK(t56.rows[2] == std::pair<std::string, Rat>{"F3", rat(3, 7)});
  CHECK(t56.rows[3] == std::pair<std::string, Rat>{"F4\\F3", rat(9, 13)});
  CHECK(t56.rows[4] == std::pair<std::string, Rat>{"E1\\F3", rat(3, 5)});
  CHECK(t56.rows[5] == std::pair<std::string, Rat>{"off-curves", rat(6, 5)});
  CHECK(t56.global == rat(3, 7));

  DeltaTable t66 = expected_table("dp6-6");
  REQUIRE(t66.rows.size() == 2);
  CHECK(t66.rows[0].second == 1);
  CHECK(t66.rows[1].second == rat(6, 5));

  DeltaTable s0 = expected_table("dp8-sigma0");
  REQUIRE(s0.rows.size() == 1);
  CHECK(s0.rows[0].second == 1);

  for (const std::string& id : list_surfaces()) {
    DeltaTable t = expected_table(id);
    Rat g = t.rows.front().second;
    for (const auto& [label, v] : t.rows) g = rat_min(g, v);
    CHECK(t.global == g);
  }
}

TEST_CASE("plans resolve and cover every surface") {
  std::set<std::string> withAux = {"dp5-1", "dp5-2", "dp5-3", "dp5-7", "dp6-1", "dp6-6"};
  for (const std::string& id : list_surfaces()) {
    const CatalogEntry& e = get_surface(id);
    CHECK((e.auxModels.count("blowup") > 0) == (withAux.count(id) > 0));

    std::set<std::string> expectedRows;
    for (const auto& [label, v] : e.expected.rows) expectedRows.insert(label);
    std::set<std::string> planRows;

    std::set<std::pair<std::string, std::string>> covered;  // intersection points
    std::set<std::string> genericCovered;
    for (const Plan& p : e.plans) {
      planRows.insert(p.rowLabel);
      CHECK(expectedRows.count(p.rowLabel) == 1);
      const SurfaceModel& m = e.model_by_name(p.extraction.model);
      DivisorClass curve = m.class_by_label(p.extraction.curve);
      for (const auto& inc : p.stratum.incident) {
        DivisorClass other = m.class_by_label(inc);
        CHECK(pair_classes(m, curve, other) > 0);
        std::string a = p.extraction.curve, b = inc;
        if (b < a) std::swap(a, b);
        covered.emplace(a, b);
      }
      if (p.stratum.generic() && p.extraction.model == "main") genericCovered.insert(p.extraction.curve);
      // witness resolves
      const SurfaceModel& wm = e.model_by_name(p.witness.model);
      CHECK(wm.has_class(p.witness.curve));
    }
    CHECK(planRows == expectedRows);

    // every negative curve's generic locus and every pairwise intersection
    // point of negative curves on the main model is evaluated by some plan
    // (0-curves such as fibers vary in pencils and mark no special points)
    for (std::size_t i = 0; i < e.model.generators.size(); ++i) {
      const auto& [la, ca] = e.model.generators[i];
      if (self_intersection(e.model, ca) >= 0) continue;
      CHECK(genericCovered.count(la) == 1);
      for (std::size_t j = i + 1; j < e.model.generators.size(); ++j) {
        const auto& [lb, cb] = e.model.generators[j];
        if (self_intersection(e.model, cb) >= 0) continue;
        if (pair_classes(e.model, ca, cb) > 0) {
          std::string a = la, b = lb;
          if (b < a) std::swap(a, b);
          INFO(id << ": intersection " << la << " x " << lb);
          CHECK(covered.count({a, b}) > 0);
        }
      }
    }
  }
}

TEST_CASE("auxiliary models satisfy the quoted linear equivalences") {
  auto cls_of = [](const SurfaceModel& m, std::initializer_list<std::pair<const char*, Rat>> terms) {
    DivisorClass sum;
    sum.coeffs.assign(m.rank(), Rat(0));
    for (const auto& [label, c] : terms) sum = sum + m.class_by_label(label).scaled(c);
    return sum;
  };

  {
    const AuxModel& aux = get_surface("dp5-1").auxModels.at("blowup");
    // sigma*(-K) - uE ~ G0 + G2 + F + E2 + (2-u)E, i.e. at u = 0:
    DivisorClass rhs = cls_of(aux.model, {{"G0", rat(1)}, {"G2", rat(1)}, {"F", rat(1)},
                                          {"E2", rat(1)}, {"E", rat(2)}});
    CHECK(rhs == aux.pullbackAnchor);
  }
  {
    const AuxModel& aux = get_surface("dp5-2").auxModels.at("blowup");
    DivisorClass rhs = cls_of(aux.model, {{"F1", rat(1)}, {"E2", rat(1)}, {"G2", rat(1)},
                                          {"G3", rat(1)}, {"E", rat(2)}});
    CHECK(rhs == aux.pullbackAnchor);
  }
  {
    const AuxModel& aux = get_surface("dp5-3").auxModels.at("blowup");
    DivisorClass rhs = cls_of(aux.model, {{"E3", rat(1)}, {"F1", rat(1)}, {"F2", rat(1)}, {"F3", rat(1)},
                                          {"G1", rat(1)}, {"G2", rat(1)}, {"E", rat(2)}});
    CHECK(rhs == aux.pullbackAnchor);
  }
  {
    const AuxModel& aux = get_surface("dp5-7").auxModels.at("blowup");
    DivisorClass rhs = cls_of(aux.model, {{"C", rat(3, 2)}, {"E1", rat(1, 2)}, {"E3", rat(1, 2)},
                                          {"E5", rat(1, 2)}, {"E7", rat(1, 2)}, {"E", rat(3, 2)}});
    CHECK(rhs == aux.pullbackAnchor);
  }
  for (const char* id : {"dp6-1", "dp6-6"}) {
    const AuxModel& aux = get_surface(id).auxModels.at("blowup");
    DivisorClass rhs = cls_of(aux.model, {{"G1", rat(1)}, {"G2", rat(1)}, {"G3", rat(1)}, {"E", rat(3)}});
    CHECK(rhs == aux.pullbackAnchor);
  }
}

TEST_CASE("movable off-curve classes match their stated decompositions") {
  auto combo = [](const SurfaceModel& m, std::initializer_list<std::pair<const char*, long>> terms) {
    DivisorClass sum;
    sum.coeffs.assign(m.rank(), Rat(0));
    for (const auto& [label, c] : terms) sum = sum + m.class_by_label(label).scaled(rat(c));
    return sum;
  };
  auto L = [](const std::string& id) { return get_surface(id).model.namedClasses.at("L"); };

  CHECK(L("dp5-4") == combo(get_surface("dp5-4").model, {{"E1", 1}, {"E2", 1}}));
  CHECK(L("dp5-5") == combo(get_surface("dp5-5").model, {{"E1", 1}, {"E2", 1}, {"F1", 1}, {"F2", 1}}));
  CHECK(L("dp5-6") == combo(get_surface("dp5-6").model, {{"E1", 2}, {"F2", 1}, {"F3", 2}, {"F4", 1}}));
  CHECK(L("dp6-2") == combo(get_surface("dp6-2").model, {{"E1", 1}, {"E2", 1}}));
  CHECK(L("dp6-3") == combo(get_surface("dp6-3").model, {{"E1", 1}, {"E2", 1}, {"F2", 1}}));
  CHECK(L("dp6-4") == combo(get_surface("dp6-4").model, {{"E1", 1}, {"E2", 1}, {"F2", 1}}));
  CHECK(L("dp6-5") == combo(get_surface("dp6-5").model, {{"E", 2}, {"F2", 1}, {"F3", 1}}));
  CHECK(L("dp7-1") == combo(get_surface("dp7-1").model, {{"E1", 1}, {"E2", 1}}));
  CHECK(L("dp7-2") == combo(get_surface("dp7-2").model, {{"E2", 1}, {"E3", 1}}));
}

TEST_CASE("verification self-test catches a perturbed expected value") {
  const CatalogEntry& entry = get_surface("dp7-1");
  VerifyOutcome good = verify_surface(entry, entry.expected);
  CHECK(good.passed);

  DeltaTable perturbed = entry.expected;
  perturbed.rows[0].second += rat(1, 1000);
  VerifyOutcome bad = verify_surface(entry, perturbed);
  CHECK_FALSE(bad.passed);
  CHECK(bad.mismatches.size() >= 1);
}
