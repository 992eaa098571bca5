#pragma once

#include <variant>
#include <vector>

#include "wdp/errors.hpp"
#include "wdp/rational.hpp"

namespace wdp {

// Univariate polynomial with exact rational coefficients, ascending degree.
// Volumes of surface divisor rays are piecewise quadratic, so the constructor
// rejects degree > 2 as a safety net.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
    if (degree() > 2) throw Error("Poly: degree above 2 is out of contract");
  }
  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly affine(const Rat& c0, const Rat& c1) { return Poly({c0, c1}); }
  static Poly quadratic(const Rat& c0, const Rat& c1, const Rat& c2) { return Poly({c0, c1, c2}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

  Rat eval(const Rat& u) const {
    Rat v(0);
    for (std::size_t k = c_.size(); k-- > 0;) v = v * u + c_[k];
    return v;
  }

  Poly operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return Poly(std::move(c));
  }
  Poly operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return Poly(std::move(c));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
  }
  Poly scaled(const Rat& s) const {
    if (s == 0) return Poly();
    std::vector<Rat> c(c_);
    for (Rat& x : c) x *= s;
    return Poly(std::move(c));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Exact definite integral over [a, b] via the power rule; the degree-3
  // antiderivative is never materialized as a Poly.
  Rat integral(const Rat& a, const Rat& b) const {
    Rat s(0);
    Rat pa = a, pb = b;  // a^{k+1}, b^{k+1} at the top of pass k
    for (std::size_t k = 0; k < c_.size(); ++k) {
      s += c_[k] * (pb - pa) / Rat(static_cast<long>(k) + 1);
      pa *= a;
      pb *= b;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

struct NoRoot {};
// Refusal carrying a rational isolating interval around the irrational root.
struct IrrationalRoot {
  Rat lo, hi;
};
using RootResult = std::variant<Rat, NoRoot, IrrationalRoot>;

namespace detail {

// Smallest rational r in [a,b] with f(r) = 0 for affine f; assumes deg f = 1.
inline RootResult affine_root_in(const Poly& f, const Rat& a, const Rat& b) {
  Rat r = -f.coeff(0) / f.coeff(1);
  if (r >= a && r <= b) return r;
  return NoRoot{};
}

}  // namespace detail

// Smallest root of f (deg <= 2) in [a, b]. Rational roots are returned
// exactly; an irrational root inside the range is refused with an isolating
// interval rather than approximated.
inline RootResult smallest_root_in(const Poly& f, const Rat& a, const Rat& b) {
  if (a > b) throw Error("smallest_root_in: empty interval");
  if (f.is_zero()) return a;
  switch (f.degree()) {
    case 0:
      return NoRoot{};
    case 1:
      return detail::affine_root_in(f, a, b);
    default:
      break;
  }
  const Rat c2 = f.coeff(2), c1 = f.coeff(1), c0 = f.coeff(0);
  Rat disc = c1 * c1 - 4 * c2 * c0;
  if (disc < 0) return NoRoot{};
  if (auto sq = exact_sqrt(disc)) {
    Rat r1 = (-c1 - *sq) / (2 * c2);
    Rat r2 = (-c1 + *sq) / (2 * c2);
    if (r1 > r2) std::swap(r1, r2);
    if (r1 >= a && r1 <= b) return r1;
    if (r2 >= a && r2 <= b) return r2;
    return NoRoot{};
  }

  // Two distinct irrational roots r1 < r2 around the vertex v. Locate the
  // smallest one lying in [a, b] by exact sign tests, then bisect until the
  // bracket provably contains one root (width^2 < (r2 - r1)^2 = disc/c2^2).
  Rat v = -c1 / (2 * c2);
  auto bracket_down = [&](Rat lo, Rat hi) -> RootResult {
    Rat gap2 = disc / (c2 * c2);
    while ((hi - lo) * (hi - lo) >= gap2 || sign(f.eval(lo)) == sign(f.eval(hi))) {
      Rat mid = (lo + hi) / 2;
      int sm = sign(f.eval(mid));
      if (sm == 0) throw Error("smallest_root_in: rational root escaped discriminant test");
      // keep the subinterval containing the smaller root
      if (sign(f.eval(lo)) != sm)
        hi = mid;
      else
        lo = mid;
    }
    return IrrationalRoot{lo, hi};
  };

  int sa = sign(f.eval(a)), sb = sign(f.eval(b));
  bool vertex_inside = (v > a && v < b);
  if (!vertex_inside) {
    if (sa == sb || sa == 0 || sb == 0) return NoRoot{};  // monotone, no sign change
    return bracket_down(a, b);
  }
  int sv = sign(f.eval(v));
  if (sv == 0) throw Error("smallest_root_in: rational root escaped discriminant test");
  if (sa != sv) return bracket_down(a, v);  // smaller root in (a, v)
  if (sv != sb) return bracket_down(v, b);  // only the larger root is inside
  return NoRoot{};
}

// Piecewise polynomial over consecutive intervals [b_i, b_{i+1}] with value
// continuity at interior breakpoints, enforced on construction.
class PiecewisePoly {
 public:
  PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces)
      : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.size() != pieces_.size() + 1 || pieces_.empty())
      throw Error("PiecewisePoly: need k breakpoints bounding k-1 pieces");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
      if (!(breaks_[i] < breaks_[i + 1])) throw Error("PiecewisePoly: breakpoints not increasing");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
      if (pieces_[i].eval(breaks_[i + 1]) != pieces_[i + 1].eval(breaks_[i + 1]))
        throw Error("PiecewisePoly: discontinuous at breakpoint " + rat_str(breaks_[i + 1]));
  }

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  Rat domain_lo() const { return breaks_.front(); }
  Rat domain_hi() const { return breaks_.back(); }

  Rat eval(const Rat& u) const {
    if (u < domain_lo() || u > domain_hi()) throw DomainExceeded("eval at " + rat_str(u));
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      if (u <= breaks_[i + 1]) return pieces_[i].eval(u);
    return pieces_.back().eval(u);
  }

  Rat integral(const Rat& a, const Rat& b) const {
    if (a > b) throw Error("integral: reversed bounds");
    if (a < domain_lo() || b > domain_hi())
      throw DomainExceeded("[" + rat_str(a) + ", " + rat_str(b) + "] outside domain");
    Rat s(0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      Rat lo = rat_max(a, breaks_[i]);
      Rat hi = rat_min(b, breaks_[i + 1]);
      if (lo < hi) s += pieces_[i].integral(lo, hi);
    }
    return s;
  }

 private:
  std::vector<Rat> breaks_;
  std::vector<Poly> pieces_;
};

inline Rat integrate(const PiecewisePoly& f, const Rat& a, const Rat& b) { return f.integral(a, b); }

}  // namespace wdp
