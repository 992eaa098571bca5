#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "wdp/poly.hpp"

using namespace wdp;

namespace {
// The two-piece volume of the F-ray on the first degree-5 configuration.
PiecewisePoly f_ray_volume() {
  return PiecewisePoly({rat(0), rat(1), rat(2)},
                       {Poly::quadratic(rat(5), rat(0), rat(-2)),        // 5 - 2u^2
                        Poly::quadratic(rat(8), rat(-6), rat(1))});      // (4-u)(2-u)
}
}  // namespace

TEST_CASE("piecewise integration matches the frozen oracle values") {
  PiecewisePoly f = f_ray_volume();
  // Simpson (exact through cubics) computed these expected values first:
  CHECK(oracle::simpson(f, rat(0), rat(2)) == rat(17, 3));
  CHECK(f.integral(rat(0), rat(2)) == rat(17, 3));
  CHECK(f.integral(rat(0), rat(2)) / 5 == rat(17, 15));

  PiecewisePoly zero({rat(0), rat(2)}, {Poly()});
  CHECK(zero.integral(rat(0), rat(2)) == 0);

  PiecewisePoly sq({rat(0), rat(2)}, {Poly::quadratic(rat(0), rat(0), rat(1))});
  CHECK(sq.integral(rat(0), rat(2)) == rat(8, 3));

  CHECK_THROWS_AS(f.integral(rat(-1), rat(1)), DomainExceeded);
  CHECK_THROWS_AS(f.integral(rat(1), rat(3)), DomainExceeded);
}

TEST_CASE("integration is additive over arbitrary rational splits") {
  PiecewisePoly f = f_ray_volume();
  oracle::RatSampler sampler(4242);
  for (int i = 0; i < 50; ++i) {
    Rat c = 2 * sampler.in_unit_interval();
    Rat whole = f.integral(rat(0), rat(2));
    CHECK(f.integral(rat(0), c) + f.integral(c, rat(2)) == whole);
    CHECK(f.integral(rat(0), c) == oracle::simpson(f, rat(0), c));
  }
}

TEST_CASE("piecewise continuity is enforced on construction") {
  CHECK_THROWS_AS(PiecewisePoly({rat(0), rat(1), rat(2)},
                                {Poly::constant(rat(1)), Poly::constant(rat(2))}),
                  Error);
  CHECK_THROWS_AS(PiecewisePoly({rat(1), rat(1)}, {Poly::constant(rat(1))}), Error);
  CHECK_THROWS_AS(Poly({rat(1), rat(1), rat(1), rat(1)}), Error);  // degree cap
}

TEST_CASE("smallest rational roots") {
  // (4-u)(2-u) on [1,3]: the volume vanishing point of the F-ray
  Poly f = Poly::quadratic(rat(8), rat(-6), rat(1));
  auto r = smallest_root_in(f, rat(1), rat(3));
  REQUIRE(std::holds_alternative<Rat>(r));
  CHECK(std::get<Rat>(r) == 2);

  CHECK(std::holds_alternative<NoRoot>(smallest_root_in(Poly::constant(rat(1)), rat(0), rat(5))));

  // affine
  auto a = smallest_root_in(Poly::affine(rat(-1), rat(2)), rat(0), rat(1));
  REQUIRE(std::holds_alternative<Rat>(a));
  CHECK(std::get<Rat>(a) == rat(1, 2));

  // two rational roots: return the smaller one inside the range
  Poly g = Poly::quadratic(rat(2), rat(-3), rat(1));  // (u-1)(u-2)
  CHECK(std::get<Rat>(smallest_root_in(g, rat(0), rat(3))) == 1);
  CHECK(std::get<Rat>(smallest_root_in(g, rat(3, 2), rat(3))) == 2);
  CHECK(std::holds_alternative<NoRoot>(smallest_root_in(g, rat(5), rat(9))));
}

TEST_CASE("irrational roots are refused with an isolating interval") {
  Poly f = Poly::quadratic(rat(5), rat(0), rat(-2));  // 5 - 2u^2, root sqrt(5/2)
  auto r = smallest_root_in(f, rat(0), rat(2));
  REQUIRE(std::holds_alternative<IrrationalRoot>(r));
  auto iso = std::get<IrrationalRoot>(r);
  CHECK(iso.lo >= 0);
  CHECK(iso.hi <= 2);
  CHECK(iso.lo < iso.hi);
  // correct isolation: sign change across the bracket and 2*lo^2<5<2*hi^2
  CHECK(sign(f.eval(iso.lo)) != sign(f.eval(iso.hi)));
  CHECK(2 * iso.lo * iso.lo < 5);
  CHECK(2 * iso.hi * iso.hi > 5);
}

TEST_CASE("reported rational roots are exact and minimal") {
  oracle::RatSampler sampler(9001);
  for (int i = 0; i < 200; ++i) {
    Poly f({sampler.small(), sampler.small(), sampler.small()});
    Rat a = sampler.small(-4, 0), b = sampler.small(1, 5);
    if (f.is_zero()) continue;
    auto r = smallest_root_in(f, a, b);
    if (std::holds_alternative<Rat>(r)) {
      Rat root = std::get<Rat>(r);
      CHECK(f.eval(root) == 0);
      // no rational root of f lies in [a, root): check both quadratic roots
      if (f.degree() == 2) {
        Rat disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(2) * f.coeff(0);
        auto sq = exact_sqrt(disc);
        REQUIRE(sq.has_value());
        Rat other = (-f.coeff(1) - *sq) / (2 * f.coeff(2));
        if (other != root) CHECK((other < a || other > b || other > root));
        other = (-f.coeff(1) + *sq) / (2 * f.coeff(2));
        if (other != root) CHECK((other < a || other > b || other > root));
      }
    }
  }
}
