#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wdp/catalog.hpp"
#include "wdp/delta.hpp"
#include "wdp/evaluate.hpp"
#include "wdp/picard.hpp"
#include "wdp/zariski.hpp"

namespace wdp {

// Canonical JSON: insertion-ordered keys, every rational as a "num/den"
// string (integers as plain "n"), so emitted documents reparse and reprint
// byte-identically.
using Json = nlohmann::ordered_json;

inline Json json_rat(const Rat& q) { return rat_str(q); }

inline Json json_class(const DivisorClass& c) {
  Json a = Json::array();
  for (const Rat& x : c.coeffs) a.push_back(rat_str(x));
  return a;
}

inline DivisorClass class_from_json(const Json& j) {
  DivisorClass c;
  for (const auto& x : j) c.coeffs.push_back(rat_parse(x.get<std::string>()));
  return c;
}

inline Json model_to_json(const SurfaceModel& m, const std::vector<Plan>* plans = nullptr) {
  Json j;
  j["format_version"] = 1;
  j["id"] = m.id;
  j["basis"] = m.basis;
  Json gram = Json::array();
  for (std::size_t i = 0; i < m.gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.gram.cols(); ++k) row.push_back(m.gram.at(i, k).get_num().get_si());
    gram.push_back(row);
  }
  j["gram"] = gram;
  Json gens = Json::object();
  for (const auto& [label, c] : m.generators) gens[label] = json_class(c);
  j["generators"] = gens;
  j["antiCanonical"] = json_class(m.antiCanonical);
  j["degree"] = json_rat(m.degree);
  Json strata = Json::object();
  for (const auto& [curve, specs] : m.strataOverrides) {
    Json arr = Json::array();
    for (const auto& s : specs) arr.push_back(Json{{"incident", s.incident}, {"label", s.label}});
    strata[curve] = arr;
  }
  j["strata"] = strata;
  Json named = Json::object();
  for (const auto& [label, c] : m.namedClasses) named[label] = json_class(c);
  j["named"] = named;
  if (plans) {
    Json parr = Json::array();
    for (const Plan& p : *plans) {
      // the flat document carries no auxiliary blow-up models
      if (p.extraction.model != "main" || p.witness.model != "main") continue;
      Json pj;
      pj["row"] = p.rowLabel;
      pj["stratum"] = Json{{"curve", p.stratum.curve}, {"incident", p.stratum.incident}, {"label", p.stratum.label}};
      pj["extraction"] = Json{{"kind", p.extraction.kind == ExtractionKind::CurveOnModel ? "curve" : "blowup"},
                              {"model", p.extraction.model},
                              {"curve", p.extraction.curve}};
      pj["witness"] = Json{{"kind", p.witness.kind == ExtractionKind::CurveOnModel ? "curve" : "blowup"},
                           {"model", p.witness.model},
                           {"curve", p.witness.curve}};
      parr.push_back(pj);
    }
    j["plans"] = parr;
  }
  return j;
}

inline SurfaceModel model_from_json(const Json& j) {
  SurfaceModel m;
  m.id = j.at("id").get<std::string>();
  m.basis = j.at("basis").get<std::vector<std::string>>();
  const Json& gram = j.at("gram");
  m.gram = RatMatrix(gram.size(), gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != gram.size()) throw ParseError("model gram not square");
    for (std::size_t k = 0; k < gram.size(); ++k) m.gram.at(i, k) = Rat(gram[i][k].get<long>());
  }
  for (const auto& [label, c] : j.at("generators").items()) m.generators.emplace_back(label, class_from_json(c));
  m.antiCanonical = class_from_json(j.at("antiCanonical"));
  m.degree = rat_parse(j.at("degree").get<std::string>());
  if (j.contains("strata"))
    for (const auto& [curve, arr] : j.at("strata").items()) {
      std::vector<StratumSpec> specs;
      for (const auto& s : arr)
        specs.push_back(make_stratum(curve, s.at("incident").get<std::vector<std::string>>()));
      m.strataOverrides[curve] = std::move(specs);
    }
  if (j.contains("named"))
    for (const auto& [label, c] : j.at("named").items()) m.namedClasses.emplace(label, class_from_json(c));
  validate_model(m);
  return m;
}

inline std::vector<Plan> plans_from_json(const Json& j) {
  std::vector<Plan> out;
  if (!j.contains("plans")) return out;
  for (const auto& pj : j.at("plans")) {
    Plan p;
    p.rowLabel = pj.at("row").get<std::string>();
    const Json& st = pj.at("stratum");
    p.stratum = make_stratum(st.at("curve").get<std::string>(),
                             st.at("incident").get<std::vector<std::string>>());
    if (st.contains("label")) p.stratum.label = st.at("label").get<std::string>();
    auto parse_extraction = [](const Json& ej) {
      std::string kind = ej.at("kind").get<std::string>();
      std::string model = ej.value("model", std::string("main"));
      std::string curve = ej.at("curve").get<std::string>();
      return kind == "blowup" ? blowup_extraction(curve, model) : curve_extraction(curve, model);
    };
    p.extraction = parse_extraction(pj.at("extraction"));
    p.witness = pj.contains("witness") ? parse_extraction(pj.at("witness")) : p.extraction;
    out.push_back(std::move(p));
  }
  return out;
}

inline Json affine_json(const Rat& c0, const Rat& c1) {
  return Json{{"const", rat_str(c0)}, {"slope", rat_str(c1)}};
}

inline Json ray_to_json(const SurfaceModel& m, const RayDecomposition& ray) {
  Json j;
  j["surface"] = m.id;
  j["anchor"] = json_class(ray.A);
  j["ray"] = json_class(ray.B);
  j["tau"] = json_rat(ray.tau);
  Json chambers = Json::array();
  for (const Chamber& ch : ray.chambers) {
    Json cj;
    cj["lo"] = json_rat(ch.lo);
    cj["hi"] = json_rat(ch.hi);
    cj["support"] = ch.support;
    Json pc = Json::array(), ps = Json::array();
    for (const Rat& x : ch.P.c0.coeffs) pc.push_back(rat_str(x));
    for (const Rat& x : ch.P.c1.coeffs) ps.push_back(rat_str(x));
    cj["P"] = Json{{"const", pc}, {"slope", ps}};
    Json nj = Json::object();
    for (const auto& [label, nc] : ch.N) nj[label] = affine_json(nc.c0, nc.c1);
    cj["N"] = nj;
    chambers.push_back(cj);
  }
  j["chambers"] = chambers;
  return j;
}

inline std::string extraction_str(const Extraction& ex) {
  std::string s = ex.curve;
  if (ex.model != "main") s += "@" + ex.model;
  s += ex.kind == ExtractionKind::BlowupExceptional ? " (A=2)" : " (A=1)";
  return s;
}

inline Json report_to_json(const DeltaReport& rep) {
  Json j;
  j["surface"] = rep.surface;
  j["degree"] = json_rat(rep.degree);
  Json strata = Json::array();
  for (const StratumResult& s : rep.strata) {
    Json sj;
    sj["label"] = s.rowLabel;
    sj["stratum"] = s.stratum.label;
    sj["extraction"] = extraction_str(s.extraction);
    sj["S_E"] = json_rat(s.S_E);
    sj["S_W"] = json_rat(s.S_W);
    sj["lower"] = json_rat(s.lowerBound);
    sj["upper"] = json_rat(s.upperValue);
    sj["delta"] = json_rat(s.delta);
    strata.push_back(sj);
  }
  j["strata"] = strata;
  j["global_delta"] = json_rat(rep.globalDelta);
  return j;
}

// Fixed CSV columns: surface, stratum, S_E, S_W, lower, upper, delta.
inline std::string report_to_csv(const DeltaReport& rep) {
  std::string out = "surface,stratum,S_E,S_W,lower,upper,delta\n";
  for (const StratumResult& s : rep.strata) {
    out += rep.surface + "," + s.rowLabel + "," + rat_str(s.S_E) + "," + rat_str(s.S_W) + "," +
           rat_str(s.lowerBound) + "," + rat_str(s.upperValue) + "," + rat_str(s.delta) + "\n";
  }
  return out;
}

}  // namespace wdp
