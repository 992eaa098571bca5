// wdp-delta: local delta invariants of weak del Pezzo surfaces of
// anti-canonical degree >= 5, by exact Zariski-decomposition chamber walks.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "wdp/wdp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefusal = 3;

wdp::CatalogEntry user_entry_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wdp::ParseError("cannot open model file: " + path);
  wdp::Json j = wdp::Json::parse(in);
  wdp::CatalogEntry e;
  e.model = wdp::model_from_json(j);
  e.plans = wdp::plans_from_json(j);
  const std::size_t n = e.model.generators.size();
  e.printedGram = wdp::RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      e.printedGram.at(i, k) =
          wdp::pair_classes(e.model, e.model.generators[i].second, e.model.generators[k].second);
  e.lorentzian = !e.model.basis.empty() && e.model.basis.front() == "h";
  return e;
}

std::string affine_str(const wdp::Rat& c0, const wdp::Rat& c1) {
  using wdp::rat_str;
  if (c1 == 0) return rat_str(c0);
  wdp::Rat a = wdp::rat_abs(c1);
  std::string mag = a == 1 ? "u" : (wdp::is_integer(a) ? rat_str(a) + "u" : "(" + rat_str(a) + ")u");
  if (c0 == 0) return (c1 < 0 ? "-" : "") + mag;
  return rat_str(c0) + (c1 < 0 ? "-" : "+") + mag;
}

std::string class_str(const wdp::DivisorClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (i) s += ", ";
    s += wdp::rat_str(c.coeffs[i]);
  }
  return s + ")";
}

std::string affine_class_str(const wdp::AffineClass& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.c0.coeffs.size(); ++i) {
    if (i) s += ", ";
    s += affine_str(p.c0.coeffs[i], p.c1.coeffs[i]);
  }
  return s + ")";
}

wdp::DivisorClass parse_ray_class(const wdp::SurfaceModel& m, const std::string& spec) {
  if (m.has_class(spec)) return m.class_by_label(spec);
  if (spec.find(',') == std::string::npos) throw wdp::UnknownLabel(m.id + "/" + spec);
  wdp::DivisorClass c;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.coeffs.push_back(wdp::rat_parse(tok));
  if (c.dim() != m.rank())
    throw wdp::ParseError("class tuple has " + std::to_string(c.dim()) + " entries, lattice rank is " +
                          std::to_string(m.rank()));
  return c;
}

int cmd_list() {
  for (const std::string& id : wdp::list_surfaces()) {
    const wdp::CatalogEntry& e = wdp::get_surface(id);
    std::cout << id << " degree=" << wdp::rat_str(e.model.degree)
              << " curves=" << e.model.generators.size() << "\n";
  }
  return kExitOk;
}

void print_report_table(const wdp::DeltaReport& rep, const std::string& stratumFilter) {
  if (stratumFilter.empty()) {
    std::cout << "Local delta invariants of " << rep.surface << " (degree " << wdp::rat_str(rep.degree)
              << ")\n";
    std::vector<std::string> seen;
    for (const auto& s : rep.strata) {
      if (std::find(seen.begin(), seen.end(), s.rowLabel) != seen.end()) continue;
      seen.push_back(s.rowLabel);
      std::cout << "  " << s.rowLabel << " -> " << wdp::rat_str(s.delta) << "\n";
    }
    std::cout << "  global -> " << wdp::rat_str(rep.globalDelta) << "\n";
    return;
  }
  bool any = false;
  for (const auto& s : rep.strata) {
    if (s.rowLabel != stratumFilter && s.stratum.label != stratumFilter) continue;
    any = true;
    std::cout << rep.surface << "  " << s.rowLabel << "  [" << s.stratum.label << "]\n"
              << "  extraction " << wdp::extraction_str(s.extraction) << "  witness "
              << wdp::extraction_str(s.witness) << "\n"
              << "  S_E = " << wdp::rat_str(s.S_E) << "  S_W = " << wdp::rat_str(s.S_W)
              << "  lower = " << wdp::rat_str(s.lowerBound) << "  upper = " << wdp::rat_str(s.upperValue)
              << "  delta = " << wdp::rat_str(s.delta) << "\n";
  }
  if (!any) throw wdp::UnknownLabel("stratum " + stratumFilter);
}

int cmd_compute(const wdp::CatalogEntry& entry, const std::string& format, const std::string& stratum,
                bool exportModel) {
  if (exportModel) {
    std::cout << wdp::model_to_json(entry.model, &entry.plans).dump(2) << "\n";
    return kExitOk;
  }
  wdp::Evaluator ev(entry);
  wdp::DeltaReport rep = ev.evaluate_surface();
  if (format == "json") {
    wdp::Json j = wdp::report_to_json(rep);
    if (!stratum.empty()) {
      wdp::Json filtered = wdp::Json::array();
      for (const auto& s : j["strata"])
        if (s["label"] == stratum || s["stratum"] == stratum) filtered.push_back(s);
      j["strata"] = filtered;
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::string csv = wdp::report_to_csv(rep);
    if (!stratum.empty()) {
      std::stringstream ss(csv), out;
      std::string line;
      std::getline(ss, line);
      out << line << "\n";
      while (std::getline(ss, line))
        if (line.find("," + stratum + ",") != std::string::npos) out << line << "\n";
      csv = out.str();
    }
    std::cout << csv;
  } else {
    print_report_table(rep, stratum);
  }
  return kExitOk;
}

int cmd_decompose(const wdp::CatalogEntry& entry, const std::string& raySpec, const std::string& at,
                  bool asJson) {
  const wdp::SurfaceModel& m = entry.model;
  wdp::DivisorClass b = parse_ray_class(m, raySpec);
  if (!at.empty()) {
    wdp::Rat u = wdp::rat_parse(at);
    wdp::Decomposition d = wdp::decompose_at(m, m.antiCanonical - b.scaled(u));
    std::cout << m.id << ": -K - " << wdp::rat_str(u) << "*" << raySpec << "\n";
    std::cout << "  P = " << class_str(d.P) << "\n";
    if (d.N.empty()) {
      std::cout << "  N = 0\n";
    } else {
      std::cout << "  N =";
      for (const auto& [label, v] : d.N) std::cout << " " << wdp::rat_str(v) << "*" << label;
      std::cout << "\n";
    }
    return kExitOk;
  }
  wdp::RayDecomposition ray = wdp::walk_ray(m, b);
  if (asJson) {
    std::cout << wdp::ray_to_json(m, ray).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << m.id << ": Zariski chambers of -K - u*" << raySpec << ", tau = " << wdp::rat_str(ray.tau)
            << "\n";
  for (const auto& ch : ray.chambers) {
    std::cout << "  [" << wdp::rat_str(ch.lo) << ", " << wdp::rat_str(ch.hi) << "]  support {";
    for (std::size_t i = 0; i < ch.support.size(); ++i) std::cout << (i ? ", " : "") << ch.support[i];
    std::cout << "}\n    P(u) = " << affine_class_str(ch.P) << "\n    N(u) = ";
    if (ch.N.empty()) {
      std::cout << "0";
    } else {
      for (std::size_t i = 0; i < ch.N.size(); ++i) {
        const auto& [label, nc] = ch.N[i];
        std::cout << (i ? " + " : "") << "(" << affine_str(nc.c0, nc.c1) << ")*" << label;
      }
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& ids) {
  unsigned jobs = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("WDP_DELTA_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) jobs = static_cast<unsigned>(v);
  }
  jobs = std::max(1u, std::min<unsigned>(jobs, ids.size()));

  std::vector<std::string> outputs(ids.size());
  std::vector<bool> passed(ids.size(), false);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < ids.size(); i = next.fetch_add(1)) {
      std::stringstream out;
      wdp::VerifyOutcome v = wdp::verify_surface(ids[i]);
      if (v.passed) {
        out << ids[i] << ": PASS\n";
      } else {
        out << ids[i] << ": FAIL\n";
        for (const auto& [label, want, got] : v.mismatches)
          out << "  " << label << ": expected " << want << ", computed " << got << "\n";
      }
      outputs[i] = out.str();
      passed[i] = v.passed;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t ok = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::cout << outputs[i];
    if (passed[i]) ++ok;
  }
  std::cout << ok << "/" << ids.size() << " surfaces verified\n";
  return ok == ids.size() ? kExitOk : kExitMismatch;
}

int cmd_curves(const wdp::CatalogEntry& entry, const std::string& rootsArg) {
  const wdp::SurfaceModel& m = entry.model;
  if (!entry.lorentzian)
    throw wdp::ParseError(m.id + " is not modeled on a Lorentzian lattice; curve enumeration needs one");
  std::vector<wdp::DivisorClass> roots;
  if (rootsArg.empty()) {
    for (const auto& [label, c] : m.generators)
      if (wdp::self_intersection(m, c) == -2) roots.push_back(c);
  } else {
    std::stringstream ss(rootsArg);
    std::string tok;
    while (std::getline(ss, tok, ',')) roots.push_back(m.class_by_label(tok));
  }
  auto curves = wdp::enumerate_negative_curves(static_cast<int>(m.rank()), roots);
  std::cout << m.id << ": " << curves.size() << " negative curves (" << roots.size() << " roots)\n";
  for (const auto& c : curves) {
    std::string label = "-";
    for (const auto& [l, g] : m.generators)
      if (g == c) label = l;
    std::cout << "  " << class_str(c) << "  C^2=" << wdp::rat_str(wdp::self_intersection(m, c))
              << "  " << label << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local delta invariants of weak del Pezzo surfaces (degree >= 5)"};
  app.require_subcommand(0, 1);

  auto* listCmd = app.add_subcommand("list", "list the catalog surfaces");

  std::string id, format = "table", stratum, modelFile, raySpec, atValue, rootsArg;
  bool verifyAll = false, rayJson = false, exportModel = false;

  auto* computeCmd = app.add_subcommand("compute", "compute a surface's delta report");
  computeCmd->add_option("id", id, "surface id (see `list`)");
  computeCmd->add_option("--format", format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  computeCmd->add_option("--stratum", stratum, "only this row, with intermediate S-values");
  computeCmd->add_option("--model", modelFile, "user-supplied SurfaceModel JSON file");
  computeCmd->add_flag("--export-model", exportModel, "emit the SurfaceModel JSON instead of computing");

  auto* decomposeCmd = app.add_subcommand("decompose", "Zariski chambers of -K - u*B");
  decomposeCmd->add_option("id", id, "surface id");
  decomposeCmd->add_option("--ray", raySpec, "generator label or coefficient tuple")->required();
  decomposeCmd->add_option("--at", atValue, "exact decomposition at this rational u");
  decomposeCmd->add_flag("--json", rayJson, "emit the decomposition as JSON");
  decomposeCmd->add_option("--model", modelFile, "user-supplied SurfaceModel JSON file");

  auto* verifyCmd = app.add_subcommand("verify", "recompute and diff against the expected tables");
  verifyCmd->add_option("id", id, "surface id");
  verifyCmd->add_flag("--all", verifyAll, "verify the whole catalog");

  auto* curvesCmd = app.add_subcommand("curves", "enumerate negative curves of the configuration");
  curvesCmd->add_option("id", id, "surface id");
  curvesCmd->add_option("--roots", rootsArg, "comma-separated (-2)-generator labels");
  curvesCmd->add_option("--model", modelFile, "user-supplied SurfaceModel JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (listCmd->parsed()) return cmd_list();

    auto entry_for = [&]() -> wdp::CatalogEntry {
      if (!modelFile.empty()) return user_entry_from_file(modelFile);
      if (id.empty()) throw wdp::ParseError("missing surface id");
      return wdp::get_surface(id);
    };

    if (computeCmd->parsed()) return cmd_compute(entry_for(), format, stratum, exportModel);
    if (decomposeCmd->parsed()) return cmd_decompose(entry_for(), raySpec, atValue, rayJson);
    if (verifyCmd->parsed()) {
      if (verifyAll) return cmd_verify(wdp::list_surfaces());
      if (id.empty()) throw wdp::ParseError("verify needs a surface id or --all");
      wdp::get_surface(id);  // surfaces UnknownSurface before threading
      return cmd_verify({id});
    }
    if (curvesCmd->parsed()) return cmd_curves(entry_for(), rootsArg);

    std::cerr << app.help();
    return kExitUsage;
  } catch (const wdp::UnknownSurface& e) {
    std::cerr << "error: UnknownSurface: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wdp::UnknownLabel& e) {
    std::cerr << "error: UnknownLabel: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wdp::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wdp::NotPseudoEffective& e) {
    std::cerr << "error: NotPseudoEffective: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const wdp::IrrationalBreakpoint& e) {
    std::cerr << "error: IrrationalBreakpoint: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const wdp::PlanMismatch& e) {
    std::cerr << "error: PlanMismatch: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const wdp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefusal;
  }
}
