#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdp/errors.hpp"
#include "wdp/picard.hpp"
#include "wdp/poly.hpp"
#include "wdp/rational.hpp"
#include "wdp/zariski.hpp"

namespace wdp {

enum class ExtractionKind {
  CurveOnModel,        // prime divisor already on the surface, A = 1
  BlowupExceptional,   // exceptional curve of an ordinary point blow-up, A = 2
};

// A divisor over the surface whose expected vanishing order is integrated.
// `model` names the catalog model carrying the curve ("main" or an auxiliary
// blow-up model); `curve` is a generator or named class on it.
struct Extraction {
  ExtractionKind kind = ExtractionKind::CurveOnModel;
  std::string model = "main";
  std::string curve;
  Rat logDiscrepancy = Rat(1);
};

inline Extraction curve_extraction(std::string curve, std::string model = "main") {
  return Extraction{ExtractionKind::CurveOnModel, std::move(model), std::move(curve), Rat(1)};
}

inline Extraction blowup_extraction(std::string curve, std::string model) {
  return Extraction{ExtractionKind::BlowupExceptional, std::move(model), std::move(curve), Rat(2)};
}

// Everything a ray integral needs: the surface model, the nef anchor class
// (-K, or its pullback on a blow-up model), and the extraction class.
struct ExtractionRay {
  const SurfaceModel* model;
  DivisorClass anchor;
  DivisorClass curve;
  std::string curveLabel;
  RayDecomposition ray;
  Rat normalization;  // pair(anchor, anchor) = (-K_S)^2

  static ExtractionRay walk(const SurfaceModel& m, const DivisorClass& anchor, const std::string& curveLabel) {
    ExtractionRay r;
    r.model = &m;
    r.anchor = anchor;
    r.curve = m.class_by_label(curveLabel);
    r.curveLabel = curveLabel;
    r.ray = walk_ray(m, anchor, r.curve);
    r.normalization = pair_classes(m, anchor, anchor);
    return r;
  }
};

// S(E) = (1 / (-K)^2) * integral of vol(anchor - uE) over [0, tau].
inline Rat s_divisor(const ExtractionRay& er) {
  PiecewisePoly vol = er.ray.volume(*er.model);
  return vol.integral(Rat(0), er.ray.tau) / er.normalization;
}

namespace detail {

// ord_q(N(u)|_E) as a polynomial on one chamber: the incident support curves'
// coefficients weighted by their intersection multiplicity with E.
inline Poly ord_poly(const SurfaceModel& m, const Chamber& ch, const DivisorClass& e,
                     const std::vector<std::string>& incident) {
  Poly total;
  for (const auto& label : incident) {
    const AffineCoeff* nc = ch.coefficient(label);
    if (!nc) continue;
    Rat mult = pair_classes(m, m.class_by_label(label), e);
    total = total + nc->poly().scaled(mult);
  }
  return total;
}

}  // namespace detail

// S(W,q) = (2/(-K)^2) Int (P.E) ord_q(N|_E) du + (1/(-K)^2) Int (P.E)^2 du.
// The formula needs E itself outside every chamber's negative part.
inline Rat s_filtration(const ExtractionRay& er, const StratumSpec& stratum) {
  const SurfaceModel& m = *er.model;
  for (const auto& ch : er.ray.chambers)
    for (const auto& [label, nc] : ch.N)
      if (label == er.curveLabel && !(nc.c0 == 0 && nc.c1 == 0))
        throw NegativePartContainsExtraction(m.id + ": " + er.curveLabel + " lies in supp N(u)");

  Rat ordTerm(0), quadTerm(0);
  for (const auto& ch : er.ray.chambers) {
    Poly pDotE({pair_classes(m, ch.P.c0, er.curve), pair_classes(m, ch.P.c1, er.curve)});
    Poly ord = detail::ord_poly(m, ch, er.curve, stratum.incident);
    ordTerm += (pDotE * ord).integral(ch.lo, ch.hi);
    quadTerm += (pDotE * pDotE).integral(ch.lo, ch.hi);
  }
  return (2 * ordTerm + quadTerm) / er.normalization;
}

// Lower bound for delta_p:
//   curve through p:      min( 1/S(E), 1/S(W,p) )
//   blow-up exceptional:  min( 2/S(E), inf over all strata q of 1/S(W,q) )
inline Rat lower_bound(const Extraction& extraction, const Rat& sE, const std::vector<Rat>& sWs) {
  Rat bound = extraction.logDiscrepancy / sE;
  for (const Rat& sw : sWs)
    if (sw != 0) bound = rat_min(bound, Rat(1 / sw));
  return bound;
}

// One evaluated point stratum.
struct StratumResult {
  std::string rowLabel;    // summary-table row this stratum belongs to
  StratumSpec stratum;
  Extraction extraction;
  Extraction witness;
  Rat S_E;
  Rat S_W;                 // binding filtration value (max over strata for blow-ups)
  Rat lowerBound;
  Rat upperValue;
  Rat delta;
};

struct DeltaReport {
  std::string surface;
  Rat degree;
  std::vector<StratumResult> strata;
  Rat globalDelta;
};

inline Rat global_delta(const DeltaReport& report) {
  if (report.strata.empty()) throw Error("global_delta: no strata");
  Rat g = report.strata.front().delta;
  for (const auto& s : report.strata) g = rat_min(g, s.delta);
  return g;
}

}  // namespace wdp
