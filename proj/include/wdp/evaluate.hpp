#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdp/catalog.hpp"
#include "wdp/delta.hpp"

namespace wdp {

// Evaluates a catalog entry's computation plans, caching one ray walk per
// (model, curve). Stratum evaluations are pure, so an Evaluator may be used
// from one thread while other threads evaluate other surfaces.
class Evaluator {
 public:
  explicit Evaluator(const CatalogEntry& entry) : entry_(entry) {}

  const ExtractionRay& ray_for(const Extraction& ex) {
    auto key = std::make_pair(ex.model, ex.curve);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const SurfaceModel& m = entry_.model_by_name(ex.model);
    ExtractionRay er = ExtractionRay::walk(m, entry_.anchor_for(ex.model), ex.curve);
    return cache_.emplace(std::move(key), std::move(er)).first->second;
  }

  StratumResult evaluate_plan(const Plan& plan) {
    const ExtractionRay& er = ray_for(plan.extraction);
    StratumResult r;
    r.rowLabel = plan.rowLabel;
    r.stratum = plan.stratum;
    r.extraction = plan.extraction;
    r.witness = plan.witness;
    r.S_E = s_divisor(er);

    std::vector<Rat> sWs;
    if (plan.extraction.kind == ExtractionKind::CurveOnModel) {
      r.S_W = s_filtration(er, plan.stratum);
      sWs.push_back(r.S_W);
    } else {
      // The Abban-Zhuang bound for an exceptional curve takes the infimum
      // over every point of E, i.e. over all of its strata.
      const SurfaceModel& m = entry_.model_by_name(plan.extraction.model);
      r.S_W = Rat(0);
      for (const StratumSpec& q : strata_of(m, plan.extraction.curve)) {
        Rat sw = s_filtration(er, q);
        sWs.push_back(sw);
        r.S_W = rat_max(r.S_W, sw);
      }
    }
    r.lowerBound = lower_bound(plan.extraction, r.S_E, sWs);

    const ExtractionRay& wr = ray_for(plan.witness);
    r.upperValue = plan.witness.logDiscrepancy / s_divisor(wr);

    if (r.lowerBound != r.upperValue)
      throw PlanMismatch(entry_.model.id + " / " + plan.stratum.label, rat_str(r.lowerBound),
                         rat_str(r.upperValue));
    r.delta = r.lowerBound;
    return r;
  }

  DeltaReport evaluate_surface() {
    DeltaReport rep;
    rep.surface = entry_.model.id;
    rep.degree = entry_.model.degree;
    for (const Plan& p : entry_.plans) rep.strata.push_back(evaluate_plan(p));
    rep.globalDelta = global_delta(rep);
    return rep;
  }

  const CatalogEntry& entry() const { return entry_; }

 private:
  const CatalogEntry& entry_;
  std::map<std::pair<std::string, std::string>, ExtractionRay> cache_;
};

// One surface's verification outcome: per-stratum diffs against the expected
// table plus the printed-matrix rederivation.
struct VerifyOutcome {
  std::string surface;
  std::vector<std::tuple<std::string, std::string, std::string>> mismatches;  // label, expected, computed
  bool passed = true;

  void add(const std::string& label, const std::string& expected, const std::string& computed) {
    mismatches.emplace_back(label, expected, computed);
    passed = false;
  }
};

inline VerifyOutcome verify_surface(const CatalogEntry& entry, const DeltaTable& expected) {
  VerifyOutcome out;
  out.surface = entry.model.id;

  auto expected_for = [&](const std::string& row) -> const Rat* {
    for (const auto& [label, v] : expected.rows)
      if (label == row) return &v;
    return nullptr;
  };

  // Re-derive the generator Gram matrix and diff against the printed one.
  const SurfaceModel& m = entry.model;
  for (std::size_t i = 0; i < m.generators.size(); ++i)
    for (std::size_t j = 0; j < m.generators.size(); ++j) {
      Rat g = pair_classes(m, m.generators[i].second, m.generators[j].second);
      if (g != entry.printedGram.at(i, j))
        out.add("gram(" + m.generators[i].first + "," + m.generators[j].first + ")",
                rat_str(entry.printedGram.at(i, j)), rat_str(g));
    }

  Evaluator ev(entry);
  Rat computedGlobal(0);
  bool haveGlobal = false;
  for (const Plan& p : entry.plans) {
    const Rat* want = expected_for(p.rowLabel);
    if (!want) {
      out.add(p.stratum.label, "(row " + p.rowLabel + " missing)", "-");
      continue;
    }
    try {
      StratumResult r = ev.evaluate_plan(p);
      if (r.delta != *want) out.add(p.stratum.label, rat_str(*want), rat_str(r.delta));
      computedGlobal = haveGlobal ? rat_min(computedGlobal, r.delta) : r.delta;
      haveGlobal = true;
    } catch (const PlanMismatch& pm) {
      out.add(p.stratum.label, rat_str(*want), "lower " + pm.lower + " != upper " + pm.upper);
    }
  }
  if (haveGlobal && computedGlobal != expected.global)
    out.add("global", rat_str(expected.global), rat_str(computedGlobal));
  return out;
}

inline VerifyOutcome verify_surface(const std::string& id) {
  const CatalogEntry& entry = get_surface(id);
  return verify_surface(entry, entry.expected);
}

}  // namespace wdp
