#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wdp/delta.hpp"
#include "wdp/errors.hpp"
#include "wdp/picard.hpp"

namespace wdp {

// Per-stratum computation plan: which divisor is extracted over the points of
// the stratum, and which divisor's A/S ratio witnesses the upper bound.
struct Plan {
  std::string rowLabel;  // summary-table row this stratum reports under
  StratumSpec stratum;   // stratum of the extraction curve (empty incident = generic)
  Extraction extraction;
  Extraction witness;
};

// Auxiliary blow-up model (blow-up of the main model at a generic point),
// together with the pullback of the main anti-canonical class, which anchors
// every ray on it.
struct AuxModel {
  SurfaceModel model;
  DivisorClass pullbackAnchor;
};

struct DeltaTable {
  std::vector<std::pair<std::string, Rat>> rows;
  Rat global;
};

struct CatalogEntry {
  SurfaceModel model;
  std::map<std::string, AuxModel> auxModels;
  std::vector<Plan> plans;
  DeltaTable expected;
  // Printed fixtures from the source tables (with documented corrections
  // where the printed data contradicts itself).
  RatMatrix printedGram;
  std::vector<Rat> printedAntiCanonical;  // expansion in the generator order; empty if not printed
  bool lorentzian = true;

  const SurfaceModel& model_by_name(const std::string& name) const {
    if (name == "main") return model;
    auto it = auxModels.find(name);
    if (it == auxModels.end()) throw UnknownLabel(model.id + ": no auxiliary model '" + name + "'");
    return it->second.model;
  }

  DivisorClass anchor_for(const std::string& name) const {
    if (name == "main") return model.antiCanonical;
    return auxModels.at(name).pullbackAnchor;
  }
};

namespace catalog_detail {

inline DivisorClass cls(std::initializer_list<long> c) { return DivisorClass(c); }

// Blow-up of P^2 in the Lorentzian basis (h; e_1..e_k), Gram diag(1,-1,..,-1).
inline SurfaceModel lorentzian_model(std::string id, int rank,
                                     std::vector<std::pair<std::string, DivisorClass>> gens) {
  SurfaceModel m;
  m.id = std::move(id);
  m.basis.push_back("h");
  for (int i = 1; i < rank; ++i) m.basis.push_back("e" + std::to_string(i));
  m.gram = RatMatrix(rank, rank);
  m.gram.at(0, 0) = 1;
  for (int i = 1; i < rank; ++i) m.gram.at(i, i) = -1;
  m.generators = std::move(gens);
  RatVector k(rank, Rat(-1));
  k[0] = 3;
  m.antiCanonical = DivisorClass(std::move(k));
  m.degree = Rat(9 - (rank - 1));
  validate_model(m);
  return m;
}

inline SurfaceModel hirzebruch_model(std::string id, int n) {
  SurfaceModel m;
  m.id = std::move(id);
  m.basis = {"C0", "Gamma"};
  m.gram = RatMatrix(2, 2);
  m.gram.at(0, 0) = -n;
  m.gram.at(0, 1) = 1;
  m.gram.at(1, 0) = 1;
  m.generators = {{"C0", DivisorClass{1, 0}}, {"Gamma", DivisorClass{0, 1}}};
  m.antiCanonical = DivisorClass{2, n + 2};
  m.degree = 8;
  validate_model(m);
  return m;
}

inline Plan plan(std::string row, std::string curve, std::vector<std::string> incident,
                 std::string witnessCurve) {
  Plan p;
  p.rowLabel = std::move(row);
  p.stratum = make_stratum(curve, std::move(incident));
  p.extraction = curve_extraction(curve);
  p.witness = curve_extraction(std::move(witnessCurve));
  return p;
}

// Off-curve region handled through the blow-up at a generic point.
inline Plan blowup_plan(std::string row, std::string aux, Extraction witness) {
  Plan p;
  p.rowLabel = std::move(row);
  p.stratum = make_stratum("E", {});
  p.stratum.label = "off-curve region";
  p.extraction = blowup_extraction("E", std::move(aux));
  p.witness = std::move(witness);
  return p;
}

// Off-curve region handled through a movable curve through the point.
inline Plan movable_plan(std::string row, std::string curve) {
  Plan p;
  p.rowLabel = std::move(row);
  p.stratum = make_stratum(curve, {});
  p.stratum.label = "off-curve region";
  p.extraction = curve_extraction(curve);
  p.witness = p.extraction;
  return p;
}

inline void expect(CatalogEntry& e, std::string row, long num, long den) {
  e.expected.rows.emplace_back(std::move(row), rat(num, den));
}

inline void finish_expected(CatalogEntry& e) {
  Rat g = e.expected.rows.front().second;
  for (const auto& [r, v] : e.expected.rows) g = rat_min(g, v);
  e.expected.global = g;
}

// Auxiliary model assembly: extend the Lorentzian basis by the exceptional
// direction and declare the full negative-curve list explicitly (the list is
// certified against enumerate_negative_curves by the test suite).
inline AuxModel aux_blowup(const SurfaceModel& main,
                           std::vector<std::pair<std::string, DivisorClass>> newCurves) {
  const int rank = static_cast<int>(main.rank());
  SurfaceModel m;
  m.id = main.id + "-blowup";
  m.basis = main.basis;
  m.basis.push_back("e" + std::to_string(rank));
  m.gram = RatMatrix(rank + 1, rank + 1);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m.gram.at(i, j) = main.gram.at(i, j);
  m.gram.at(rank, rank) = -1;

  auto lift = [&](const DivisorClass& c) {
    DivisorClass r(c);
    r.coeffs.emplace_back(0);
    return r;
  };
  for (const auto& [label, c] : main.generators) m.generators.emplace_back(label, lift(c));
  DivisorClass e;
  e.coeffs.assign(rank + 1, Rat(0));
  e.coeffs[rank] = 1;
  m.generators.emplace_back("E", e);
  for (auto& [label, c] : newCurves) m.generators.emplace_back(label, c);

  m.antiCanonical = lift(main.antiCanonical) - e;
  m.degree = main.degree - 1;
  validate_model(m);

  AuxModel aux;
  aux.pullbackAnchor = lift(main.antiCanonical);
  aux.model = std::move(m);
  return aux;
}

CatalogEntry build_dp5_1();
CatalogEntry build_dp5_2();
CatalogEntry build_dp5_3();
CatalogEntry build_dp5_4();
CatalogEntry build_dp5_5();
CatalogEntry build_dp5_6();
CatalogEntry build_dp5_7();
CatalogEntry build_dp6_1();
CatalogEntry build_dp6_2();
CatalogEntry build_dp6_3();
CatalogEntry build_dp6_4();
CatalogEntry build_dp6_5();
CatalogEntry build_dp6_6();
CatalogEntry build_dp7_1();
CatalogEntry build_dp7_2();
CatalogEntry build_dp8_sigma0();
CatalogEntry build_dp8_sigma1();
CatalogEntry build_dp8_sigma2();

}  // namespace catalog_detail

inline const std::vector<std::string>& list_surfaces() {
  static const std::vector<std::string> ids = {
      "dp5-1", "dp5-2", "dp5-3", "dp5-4", "dp5-5", "dp5-6", "dp5-7",
      "dp6-1", "dp6-2", "dp6-3", "dp6-4", "dp6-5", "dp6-6",
      "dp7-1", "dp7-2",
      "dp8-sigma0", "dp8-sigma1", "dp8-sigma2"};
  return ids;
}

const CatalogEntry& get_surface(const std::string& id);

inline DeltaTable expected_table(const std::string& id) { return get_surface(id).expected; }

}  // namespace wdp

#include "wdp/catalog/deg5.hpp"
#include "wdp/catalog/deg6.hpp"
#include "wdp/catalog/deg78.hpp"

namespace wdp {

inline const CatalogEntry& get_surface(const std::string& id) {
  using namespace catalog_detail;
  static const std::map<std::string, CatalogEntry> entries = [] {
    std::map<std::string, CatalogEntry> m;
    auto add = [&](CatalogEntry e) {
      // Load-time certification: the Gram matrix of the declared generators
      // must reproduce the printed intersection matrix entry for entry.
      const SurfaceModel& sm = e.model;
      const std::size_t n = sm.generators.size();
      if (e.printedGram.rows() != n) throw Error(sm.id + ": printed Gram size mismatch");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (pair_classes(sm, sm.generators[i].second, sm.generators[j].second) != e.printedGram.at(i, j))
            throw Error(sm.id + ": generator Gram differs from printed matrix at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      if (!e.printedAntiCanonical.empty()) {
        DivisorClass sum;
        sum.coeffs.assign(sm.rank(), Rat(0));
        for (std::size_t i = 0; i < n; ++i)
          sum = sum + sm.generators[i].second.scaled(e.printedAntiCanonical[i]);
        if (!(sum == sm.antiCanonical)) throw Error(sm.id + ": printed -K expansion does not hold");
      }
      finish_expected(e);
      m.emplace(sm.id, std::move(e));
    };
    add(build_dp5_1());
    add(build_dp5_2());
    add(build_dp5_3());
    add(build_dp5_4());
    add(build_dp5_5());
    add(build_dp5_6());
    add(build_dp5_7());
    add(build_dp6_1());
    add(build_dp6_2());
    add(build_dp6_3());
    add(build_dp6_4());
    add(build_dp6_5());
    add(build_dp6_6());
    add(build_dp7_1());
    add(build_dp7_2());
    add(build_dp8_sigma0());
    add(build_dp8_sigma1());
    add(build_dp8_sigma2());
    return m;
  }();
  auto it = entries.find(id);
  if (it == entries.end()) throw UnknownSurface(id);
  return it->second;
}

}  // namespace wdp
