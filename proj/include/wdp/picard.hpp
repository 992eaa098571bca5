#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wdp/errors.hpp"
#include "wdp/linalg.hpp"
#include "wdp/rational.hpp"

namespace wdp {

// Exact-rational coefficient vector in a fixed Picard-lattice basis.
struct DivisorClass {
  RatVector coeffs;

  DivisorClass() = default;
  explicit DivisorClass(RatVector c) : coeffs(std::move(c)) {}
  DivisorClass(std::initializer_list<long> c) {
    coeffs.reserve(c.size());
    for (long v : c) coeffs.emplace_back(v);
  }

  std::size_t dim() const { return coeffs.size(); }
  bool operator==(const DivisorClass& o) const { return coeffs == o.coeffs; }
  bool operator<(const DivisorClass& o) const { return coeffs < o.coeffs; }

  DivisorClass operator+(const DivisorClass& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("class addition");
    DivisorClass r(*this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
  }
  DivisorClass operator-(const DivisorClass& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("class subtraction");
    DivisorClass r(*this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
  }
  DivisorClass scaled(const Rat& s) const {
    DivisorClass r(*this);
    for (Rat& x : r.coeffs) x *= s;
    return r;
  }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& x) { return x == 0; });
  }
};

// A point stratum on a curve E: the set of generator curves meeting E at the
// point (empty = generic point of E).
struct StratumSpec {
  std::string curve;
  std::vector<std::string> incident;  // sorted, unique
  std::string label;

  bool generic() const { return incident.empty(); }
  bool operator==(const StratumSpec& o) const { return curve == o.curve && incident == o.incident; }
};

inline StratumSpec make_stratum(std::string curve, std::vector<std::string> incident) {
  std::sort(incident.begin(), incident.end());
  incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
  std::string label = curve;
  if (incident.empty()) {
    label += " generic";
  } else {
    for (const auto& c : incident) label += " ∩ " + c;
  }
  return StratumSpec{std::move(curve), std::move(incident), std::move(label)};
}

// Picard-lattice surface model: basis with integer Gram matrix, declared
// effective-cone generators, anti-canonical class, stratum annotations.
// Generators are data, not derived geometry; the catalog cross-checks them
// against enumerate_negative_curves.
struct SurfaceModel {
  std::string id;
  std::vector<std::string> basis;
  RatMatrix gram;
  std::vector<std::pair<std::string, DivisorClass>> generators;
  DivisorClass antiCanonical;
  Rat degree;
  std::map<std::string, std::vector<StratumSpec>> strataOverrides;
  std::map<std::string, DivisorClass> namedClasses;  // e.g. movable curves |E1+E2|

  std::size_t rank() const { return basis.size(); }

  const DivisorClass* find_generator(const std::string& label) const {
    for (const auto& [l, c] : generators)
      if (l == label) return &c;
    return nullptr;
  }

  bool has_class(const std::string& label) const {
    return find_generator(label) != nullptr || namedClasses.count(label) > 0;
  }

  DivisorClass class_by_label(const std::string& label) const {
    if (const DivisorClass* g = find_generator(label)) return *g;
    auto it = namedClasses.find(label);
    if (it != namedClasses.end()) return it->second;
    throw UnknownLabel(id + "/" + label);
  }
};

inline Rat pair_classes(const SurfaceModel& m, const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.dim() != m.rank() || d2.dim() != m.rank())
    throw DimensionMismatch("pair: class dimension does not match lattice rank of " + m.id);
  return bilinear(d1.coeffs, m.gram, d2.coeffs);
}

inline Rat self_intersection(const SurfaceModel& m, const DivisorClass& d) { return pair_classes(m, d, d); }

// Nef against the declared Mori-cone generators.
inline bool is_nef(const SurfaceModel& m, const DivisorClass& d) {
  for (const auto& [label, c] : m.generators)
    if (pair_classes(m, d, c) < 0) return false;
  return true;
}

// Weak del Pezzo model sanity: symmetric integer Gram, positive degree,
// -K nef, and every negative generator a (-1)- or (-2)-curve.
inline void validate_model(const SurfaceModel& m) {
  if (!m.gram.is_symmetric()) throw Error(m.id + ": Gram matrix not symmetric");
  for (std::size_t i = 0; i < m.gram.rows(); ++i)
    for (std::size_t j = 0; j < m.gram.cols(); ++j)
      if (!is_integer(m.gram.at(i, j))) throw Error(m.id + ": Gram matrix entry not an integer");
  Rat deg = pair_classes(m, m.antiCanonical, m.antiCanonical);
  if (deg != m.degree || deg <= 0) throw Error(m.id + ": degree mismatch");
  if (!is_nef(m, m.antiCanonical)) throw Error(m.id + ": anti-canonical class not nef");
  for (const auto& [label, c] : m.generators) {
    Rat sq = self_intersection(m, c);
    if (sq < 0) {
      Rat kc = pair_classes(m, m.antiCanonical, c);
      if (kc != 0 && kc != 1)
        throw Error(m.id + ": negative curve " + label + " pairs " + rat_str(kc) + " with -K");
    }
  }
}

// Blow-up at a point lying on the generators listed in `incidence`.
// New basis label `excLabel` spans the exceptional direction: pullbacks keep
// their pairing, pair(e,e) = -1, proper transforms of curves through the
// point drop by e, and -K becomes sigma*(-K) - e.
inline SurfaceModel blowup(const SurfaceModel& m, const std::set<std::string>& incidence,
                           const std::string& excLabel = "E") {
  SurfaceModel out;
  out.id = m.id + "+" + excLabel;
  out.basis = m.basis;
  out.basis.push_back(excLabel);
  const std::size_t n = m.rank();
  out.gram = RatMatrix(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.gram.at(i, j) = m.gram.at(i, j);
  out.gram.at(n, n) = Rat(-1);

  auto pullback = [](const DivisorClass& c) {
    DivisorClass r(c);
    r.coeffs.emplace_back(0);
    return r;
  };
  DivisorClass e;
  e.coeffs.assign(n + 1, Rat(0));
  e.coeffs[n] = 1;

  for (const auto& [label, c] : m.generators) {
    DivisorClass t = pullback(c);
    if (incidence.count(label)) t = t - e;
    out.generators.emplace_back(label, t);
  }
  out.generators.emplace_back(excLabel, e);

  out.antiCanonical = pullback(m.antiCanonical) - e;
  out.degree = m.degree - 1;
  return out;
}

// Negative curves of a configuration on the standard Lorentzian lattice
// (h; e_1..e_k), Gram diag(1,-1,...,-1): the declared (-2)-roots plus every
// class C with C^2 = -1, C.(-K) = 1 pairing >= 0 with each root.
inline std::vector<DivisorClass> enumerate_negative_curves(int lorentzianRank,
                                                           const std::vector<DivisorClass>& effectiveRoots) {
  if (lorentzianRank < 2) throw Error("enumerate_negative_curves: rank below 2");
  const int k = lorentzianRank - 1;

  auto lpair = [k](const DivisorClass& a, const DivisorClass& b) {
    Rat s = a.coeffs[0] * b.coeffs[0];
    for (int i = 1; i <= k; ++i) s -= a.coeffs[i] * b.coeffs[i];
    return s;
  };
  DivisorClass antik;
  antik.coeffs.assign(k + 1, Rat(-1));
  antik.coeffs[0] = 3;

  for (const auto& r : effectiveRoots) {
    if (r.dim() != static_cast<std::size_t>(k + 1)) throw DimensionMismatch("root dimension");
    if (lpair(r, r) != -2 || lpair(r, antik) != 0)
      throw InvalidRoot();
  }

  // C = d*h - sum m_i e_i with 3d - sum m_i = 1 and d^2 - sum m_i^2 = -1.
  // Cauchy-Schwarz bounds d: (3d-1)^2 <= k (d^2 + 1).
  std::vector<DivisorClass> out = effectiveRoots;
  std::vector<DivisorClass> found;
  for (long d = -3 * k; d <= 3 * k; ++d) {
    if ((3 * d - 1) * (3 * d - 1) > k * (d * d + 1)) continue;
    long sumM = 3 * d - 1;
    long sumSq = d * d + 1;
    std::vector<long> m(k, 0);
    // enumerate m lexicographically with partial-sum pruning
    auto rec = [&](auto&& self, int idx, long remSum, long remSq) -> void {
      if (idx == k) {
        if (remSum == 0 && remSq == 0) {
          DivisorClass c;
          c.coeffs.reserve(k + 1);
          c.coeffs.emplace_back(d);
          for (long mi : m) c.coeffs.emplace_back(-mi);
          found.push_back(std::move(c));
        }
        return;
      }
      long rest = k - idx - 1;
      long bound = 0;
      while ((bound + 1) * (bound + 1) <= remSq) ++bound;
      for (long mi = -bound; mi <= bound; ++mi) {
        long rs = remSum - mi;
        // remaining entries must reach sum rs with squares remSq - mi^2
        if (rs * rs > rest * (remSq - mi * mi)) continue;
        m[idx] = mi;
        self(self, idx + 1, rs, remSq - mi * mi);
      }
      m[idx] = 0;
    };
    rec(rec, 0, sumM, sumSq);
  }
  std::sort(found.begin(), found.end());
  for (const auto& c : found) {
    bool keep = true;
    for (const auto& r : effectiveRoots)
      if (lpair(c, r) < 0) {
        keep = false;
        break;
      }
    if (keep) out.push_back(c);
  }
  return out;
}

// One stratum per generator meeting E, plus the generic stratum; catalog
// overrides replace the default (e.g. pencils of fibers on Hirzebruch
// surfaces, where no point of the section is distinguished).
inline std::vector<StratumSpec> strata_of(const SurfaceModel& m, const std::string& curve) {
  auto it = m.strataOverrides.find(curve);
  if (it != m.strataOverrides.end()) return it->second;
  const DivisorClass* e = m.find_generator(curve);
  if (!e) throw UnknownLabel(m.id + "/" + curve);
  std::vector<StratumSpec> out;
  for (const auto& [label, c] : m.generators) {
    if (label == curve) continue;
    if (pair_classes(m, *e, c) > 0) out.push_back(make_stratum(curve, {label}));
  }
  out.push_back(make_stratum(curve, {}));
  return out;
}

}  // namespace wdp
