#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdp/errors.hpp"
#include "wdp/picard.hpp"
#include "wdp/poly.hpp"

namespace wdp {

// Zariski decomposition D = P + N at a fixed parameter value: P nef,
// P orthogonal to every support curve, support Gram negative definite,
// N coefficients strictly positive exactly on the support.
struct Decomposition {
  DivisorClass P;
  std::vector<std::pair<std::string, Rat>> N;  // generator order, nonzero coefficients
  std::vector<std::string> support;

  Rat coefficient(const std::string& label) const {
    for (const auto& [l, v] : N)
      if (l == label) return v;
    return Rat(0);
  }
};

// Class-valued affine map u -> c0 + u * c1.
struct AffineClass {
  DivisorClass c0, c1;
  DivisorClass at(const Rat& u) const { return c0 + c1.scaled(u); }
};

struct AffineCoeff {
  Rat c0, c1;
  Rat at(const Rat& u) const { return c0 + c1 * u; }
  Poly poly() const { return Poly({c0, c1}); }
};

// Interval of the ray on which the Zariski support set is constant and the
// decomposition is affine in u.
struct Chamber {
  Rat lo, hi;
  std::vector<std::string> support;
  AffineClass P;
  std::vector<std::pair<std::string, AffineCoeff>> N;  // one entry per support curve

  const AffineCoeff* coefficient(const std::string& label) const {
    for (const auto& [l, v] : N)
      if (l == label) return &v;
    return nullptr;
  }
};

// The full piecewise decomposition of A - uB over [0, tau].
struct RayDecomposition {
  DivisorClass A, B;
  std::vector<Chamber> chambers;
  Rat tau;
  // Set when a pseudo-effective segment of vanishing volume was walked
  // through rather than ending the ray. Never happens on the catalog.
  bool zeroVolumeSegment = false;

  Decomposition at(const SurfaceModel& m, const Rat& u) const;
  PiecewisePoly volume(const SurfaceModel& m) const;
  PiecewisePoly p_dot(const SurfaceModel& m, const DivisorClass& e) const;
};

namespace detail {

inline RatMatrix support_gram(const SurfaceModel& m, const std::vector<const DivisorClass*>& supp) {
  RatMatrix g(supp.size(), supp.size());
  for (std::size_t i = 0; i < supp.size(); ++i)
    for (std::size_t j = 0; j < supp.size(); ++j) g.at(i, j) = pair_classes(m, *supp[i], *supp[j]);
  return g;
}

}  // namespace detail

// Zariski decomposition by support growth: starting from the empty support,
// solve the orthogonality system Gram(T) n = (D.C)_{C in T}, subtract, and
// add every generator still pairing negatively with the candidate positive
// part. Validation failure (indefinite support Gram, negative coefficient,
// singular system) means D is not pseudo-effective.
inline Decomposition decompose_at(const SurfaceModel& m, const DivisorClass& d) {
  if (d.dim() != m.rank()) throw DimensionMismatch("decompose_at: class dimension");
  std::vector<std::size_t> supp;  // indices into m.generators
  std::vector<bool> inSupp(m.generators.size(), false);

  RatVector n;
  DivisorClass p;
  for (std::size_t round = 0; round <= m.generators.size(); ++round) {
    std::vector<const DivisorClass*> suppClasses;
    suppClasses.reserve(supp.size());
    for (std::size_t idx : supp) suppClasses.push_back(&m.generators[idx].second);
    RatMatrix gram = detail::support_gram(m, suppClasses);
    RatVector rhs;
    rhs.reserve(supp.size());
    for (std::size_t idx : supp) rhs.push_back(pair_classes(m, d, m.generators[idx].second));
    try {
      n = solve_linear(gram, rhs);
    } catch (const SingularMatrix&) {
      throw NotPseudoEffective(m.id + ": support system singular");
    }
    p = d;
    for (std::size_t i = 0; i < supp.size(); ++i) p = p - suppClasses[i]->scaled(n[i]);

    bool grew = false;
    for (std::size_t g = 0; g < m.generators.size(); ++g) {
      if (inSupp[g]) continue;
      if (pair_classes(m, p, m.generators[g].second) < 0) {
        supp.push_back(g);
        inSupp[g] = true;
        grew = true;
      }
    }
    if (!grew) {
      for (const Rat& c : n)
        if (c < 0) throw NotPseudoEffective(m.id + ": negative part coefficient below zero");
      // Validity concerns the strict support only; curves that joined the
      // system transiently and solved to zero are not part of N.
      std::vector<std::pair<std::size_t, Rat>> entries;
      for (std::size_t i = 0; i < supp.size(); ++i)
        if (n[i] != 0) entries.emplace_back(supp[i], n[i]);
      std::sort(entries.begin(), entries.end());
      std::vector<const DivisorClass*> strict;
      for (const auto& [idx, v] : entries) strict.push_back(&m.generators[idx].second);
      if (!is_negative_definite(detail::support_gram(m, strict)))
        throw NotPseudoEffective(m.id + ": support Gram not negative definite");
      Decomposition out;
      out.P = p;
      for (const auto& [idx, v] : entries) {
        out.N.emplace_back(m.generators[idx].first, v);
        out.support.push_back(m.generators[idx].first);
      }
      return out;
    }
  }
  throw Error(m.id + ": decompose_at did not converge");  // unreachable: support grows each round
}

namespace detail {

// Affine-in-u chamber data for a fixed support: N(u) solves the parametric
// orthogonality system, P(u) = A - uB - sum n_C(u) C.
struct ChamberData {
  std::vector<std::size_t> support;
  std::vector<AffineCoeff> n;
  AffineClass p;
};

inline ChamberData solve_chamber(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b,
                                 const std::vector<std::size_t>& support) {
  std::vector<const DivisorClass*> suppClasses;
  for (std::size_t idx : support) suppClasses.push_back(&m.generators[idx].second);
  RatMatrix gram = support_gram(m, suppClasses);
  RatVector rhs0, rhs1;
  for (std::size_t idx : support) {
    rhs0.push_back(pair_classes(m, a, m.generators[idx].second));
    rhs1.push_back(pair_classes(m, b.scaled(-1), m.generators[idx].second));
  }
  RatVector n0 = solve_linear(gram, rhs0);
  RatVector n1 = solve_linear(gram, rhs1);

  ChamberData cd;
  cd.support = support;
  DivisorClass p0 = a, p1 = b.scaled(-1);
  for (std::size_t i = 0; i < support.size(); ++i) {
    cd.n.push_back(AffineCoeff{n0[i], n1[i]});
    p0 = p0 - suppClasses[i]->scaled(n0[i]);
    p1 = p1 - suppClasses[i]->scaled(n1[i]);
  }
  cd.p = AffineClass{p0, p1};
  return cd;
}

inline Poly volume_poly(const SurfaceModel& m, const AffineClass& p) {
  Rat q00 = pair_classes(m, p.c0, p.c0);
  Rat q01 = pair_classes(m, p.c0, p.c1);
  Rat q11 = pair_classes(m, p.c1, p.c1);
  return Poly({q00, 2 * q01, q11});
}

}  // namespace detail

// Chamber walk of the ray A - uB. Within a chamber the support is fixed;
// the chamber ends at the smallest u where some validity function (a support
// coefficient from above, or the pairing with an outside generator) crosses
// zero, or where the volume P(u)^2 vanishes. The next support is recomputed
// from scratch at a probe point; walking stops at tau, the failure point of
// decompose_at, which the final chamber certifies as the vanishing point of
// the volume.
inline RayDecomposition walk_ray(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b) {
  if (!is_nef(m, a)) throw Error(m.id + ": walk_ray anchor is not nef");
  RayDecomposition ray;
  ray.A = a;
  ray.B = b;

  auto class_at = [&](const Rat& u) { return a - b.scaled(u); };

  // Probe strictly beyond `lo` for the support valid on the next chamber.
  // D(lo) big (volume > 0) guarantees pseudo-effectivity on a neighborhood,
  // so the bisection terminates; a vanishing volume at `lo` gets a bounded
  // number of attempts to rule out a zero-volume pseudo-effective segment.
  auto probe_support = [&](const Rat& lo, const Rat& nextHint, bool volPositive,
                           std::optional<std::vector<std::size_t>>& out) {
    Rat gap = nextHint > lo ? Rat((nextHint - lo) / 2) : Rat(1, 2);
    const int maxTries = volPositive ? 128 : 10;
    for (int tries = 0; tries < maxTries; ++tries, gap /= 2) {
      Rat u = lo + gap;
      Decomposition dec;
      try {
        dec = decompose_at(m, class_at(u));
      } catch (const NotPseudoEffective&) {
        continue;  // overshoot; retry closer to lo
      }
      std::vector<std::size_t> supp;
      for (const auto& lbl : dec.support)
        for (std::size_t g = 0; g < m.generators.size(); ++g)
          if (m.generators[g].first == lbl) supp.push_back(g);
      // Chamber functions are affine; nonnegative at both lo and the probe
      // means the support is valid on the whole gap, so the probe did not
      // overshoot a breakpoint.
      detail::ChamberData cd = detail::solve_chamber(m, a, b, supp);
      bool ok = true;
      for (const auto& nc : cd.n)
        if (nc.at(lo) < 0 || nc.at(u) < 0) ok = false;
      for (std::size_t g = 0; g < m.generators.size() && ok; ++g) {
        Rat plo = pair_classes(m, cd.p.at(lo), m.generators[g].second);
        Rat pu = pair_classes(m, cd.p.at(u), m.generators[g].second);
        if (plo < 0 || pu < 0) ok = false;
      }
      if (!ok) continue;
      out = std::move(supp);
      return;
    }
    // Positive volume at `lo` certifies bigness, hence pseudo-effectivity on
    // an open neighborhood; failing to find it would be a walker defect.
    if (volPositive) throw Error(m.id + ": probe could not re-enter a big segment");
    out = std::nullopt;
  };

  Rat lo(0);
  std::optional<std::vector<std::size_t>> support;
  probe_support(lo, Rat(0), true, support);
  if (!support) throw Error(m.id + ": ray has no pseudo-effective segment");

  for (int guard = 0; guard < 4096; ++guard) {
    detail::ChamberData cd = detail::solve_chamber(m, a, b, *support);

    // Candidate chamber ends: decreasing affine validity functions, plus the
    // vanishing point of the (quadratic) volume.
    std::optional<Rat> end;
    auto consider = [&](const Rat& r) {
      if (r > lo && (!end || r < *end)) end = r;
    };
    for (const auto& nc : cd.n)
      if (nc.c1 < 0) consider(-nc.c0 / nc.c1);
    for (std::size_t g = 0; g < m.generators.size(); ++g) {
      Rat f0 = pair_classes(m, cd.p.c0, m.generators[g].second);
      Rat f1 = pair_classes(m, cd.p.c1, m.generators[g].second);
      if (f1 < 0) consider(-f0 / f1);
    }

    Poly vol = detail::volume_poly(m, cd.p);
    if (!vol.is_zero()) {
      Rat horizon;
      if (end) {
        horizon = *end;
      } else {
        // No validity event ahead: the chamber must end where the volume
        // vanishes. Grow the horizon until the volume is nonpositive there.
        horizon = lo + 1;
        bool bounded = false;
        for (int i = 0; i < 80; ++i) {
          if (vol.eval(horizon) <= 0) {
            bounded = true;
            break;
          }
          horizon = horizon * 2 + 1;
        }
        if (!bounded) throw Error(m.id + ": ray volume never vanishes");
      }
      RootResult vr = smallest_root_in(vol, lo, horizon);
      if (std::holds_alternative<Rat>(vr)) {
        Rat r = std::get<Rat>(vr);
        if (r > lo) consider(r);
      } else if (std::holds_alternative<IrrationalRoot>(vr)) {
        const auto& iso = std::get<IrrationalRoot>(vr);
        throw IrrationalBreakpoint(m.id + ": volume vanishes at an irrational parameter in (" +
                                   rat_str(iso.lo) + ", " + rat_str(iso.hi) + ")");
      }
    }
    if (!end) throw Error(m.id + ": ray walk found no chamber end");

    Chamber ch;
    ch.lo = lo;
    ch.hi = *end;
    ch.P = cd.p;
    for (std::size_t i = 0; i < cd.support.size(); ++i) {
      ch.support.push_back(m.generators[cd.support[i]].first);
      ch.N.emplace_back(m.generators[cd.support[i]].first, cd.n[i]);
    }
    ray.chambers.push_back(ch);

    bool volPositive = vol.eval(*end) > 0;
    lo = *end;
    probe_support(lo, Rat(lo + 1), volPositive, support);
    if (!support) {
      ray.tau = lo;
      return ray;
    }
    if (!volPositive) ray.zeroVolumeSegment = true;
  }
  throw Error(m.id + ": ray walk did not terminate");
}

inline RayDecomposition walk_ray(const SurfaceModel& m, const DivisorClass& b) {
  return walk_ray(m, m.antiCanonical, b);
}

inline Decomposition RayDecomposition::at(const SurfaceModel& m, const Rat& u) const {
  if (u < 0 || u > tau) return decompose_at(m, A - B.scaled(u));  // surfaces the refusal
  for (const auto& ch : chambers) {
    if (u > ch.hi) continue;
    Decomposition d;
    d.P = ch.P.at(u);
    for (const auto& [label, nc] : ch.N) {
      Rat v = nc.at(u);
      if (v != 0) {
        d.N.emplace_back(label, v);
        d.support.push_back(label);
      }
    }
    return d;
  }
  throw Error(m.id + ": parameter outside walked chambers");
}

inline PiecewisePoly RayDecomposition::volume(const SurfaceModel& m) const {
  std::vector<Rat> breaks;
  std::vector<Poly> pieces;
  breaks.push_back(chambers.front().lo);
  for (const auto& ch : chambers) {
    breaks.push_back(ch.hi);
    pieces.push_back(detail::volume_poly(m, ch.P));
  }
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

inline PiecewisePoly RayDecomposition::p_dot(const SurfaceModel& m, const DivisorClass& e) const {
  std::vector<Rat> breaks;
  std::vector<Poly> pieces;
  breaks.push_back(chambers.front().lo);
  for (const auto& ch : chambers) {
    breaks.push_back(ch.hi);
    pieces.push_back(Poly({pair_classes(m, ch.P.c0, e), pair_classes(m, ch.P.c1, e)}));
  }
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

}  // namespace wdp
