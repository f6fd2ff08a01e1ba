#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dlag/entire.hpp"
#include "dlag/harness.hpp"

using namespace dlag;

TEST_CASE("partial sums", "[entire]") {
  SECTION("four-term case by hand") {
    const double c = 2 * std::log(2.0);
    const double expect = (1.0 / 3 + 1.0 / 4 + 1.0 / 5 + 1.0 / 6) / c;
    CHECK(sumlem_partial(2, 0.0) == Catch::Approx(expect).epsilon(1e-14));
  }
  SECTION("sandwiched by the integral bounds") {
    for (int n = 2; n <= 8; ++n) {
      for (double a : {-3.0, 0.0, 5.0}) {
        const double s = sumlem_partial(n, a);
        const auto [lo, hi] = sumlem_bounds(n, a);
        INFO("n=" << n << " a=" << a << " lo=" << lo << " s=" << s << " hi=" << hi);
        CHECK(lo <= s);
        CHECK(s <= hi);
      }
    }
  }
  SECTION("approach to one from n = 3 on") {
    double prev = sumlem_partial(3, 0.0);
    for (int n = 4; n <= 8; ++n) {
      const double s = sumlem_partial(n, 0.0);
      CHECK(s > prev);
      CHECK(s < 1.0);
      prev = s;
    }
    // the n = 2 value sits above the n = 3 value; the trend is monotone
    // only from n = 3 (recorded, not asserted as monotone from 2)
    CHECK(sumlem_partial(2, 0.0) > sumlem_partial(3, 0.0));
  }
  SECTION("bounds approach one and are within 0.25 at n = 8") {
    for (double a : {-3.0, 0.0, 5.0}) {
      const auto [lo, hi] = sumlem_bounds(8, a);
      CHECK(std::abs(1.0 - lo) < 0.25);
      CHECK(std::abs(1.0 - hi) < 0.25);
    }
    double prev_lo = sumlem_bounds(2, 0.0).first;
    for (int n = 3; n <= 8; ++n) {
      const auto [lo, hi] = sumlem_bounds(n, 0.0);
      CHECK(lo > prev_lo);
      CHECK(hi < 1.0 + 1e-12);
      prev_lo = lo;
    }
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(sumlem_partial(1, 0.0), PreconditionError);
    CHECK_THROWS_AS(sumlem_partial(9, 0.0), PreconditionError);
    CHECK_THROWS_AS(sumlem_partial(2, -5.0), PreconditionError);  // first term blows up
  }
}

TEST_CASE("qn evaluation", "[entire]") {
  SECTION("value one at the origin, exactly") {
    for (int n = 2; n <= 8; ++n) CHECK(qn_eval(n, 0.0) == 1.0);
  }
  SECTION("q_6(1) against the sandwich-calibrated window around e") {
    const double v = qn_eval(6, 1.0);
    // log q_6(1) is sandwiched in [0.815, 0.834] by the integral bounds,
    // so the value sits in [2.25, 2.31] and within 0.46 of e.
    CHECK(v > 2.25);
    CHECK(v < 2.31);
    CHECK(std::abs(v - std::exp(1.0)) < 0.46);
  }
  SECTION("q_6(-1) approaches 1/e the same way") {
    const double v = qn_eval(6, -1.0);
    CHECK(std::abs(v - std::exp(-1.0)) < 0.46);
    CHECK(v > 0.42);
    CHECK(v < 0.45);
  }
  SECTION("max error on [-1,1] strictly decreasing for n = 3..6") {
    auto rep = qn_convergence_report({3, 4, 5, 6}, -1.0, 1.0, 101);
    REQUIRE(rep.entries.size() == 4);
    CHECK(rep.strictly_decreasing);
  }
  SECTION("degenerate interval gives zero error") {
    auto rep = qn_convergence_report({3, 4}, 0.0, 0.0, 1);
    for (const auto& e : rep.entries) CHECK(e.max_error == 0.0);
  }
  SECTION("wider interval still improves with n") {
    auto rep = qn_convergence_report({3, 6}, -2.0, 2.0, 51);
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[1].max_error < rep.entries[0].max_error);
    CHECK(std::isfinite(rep.entries[1].max_error));
  }
}

TEST_CASE("unit-weight functional of entire functions", "[entire]") {
  SECTION("e^{x^2} fails at the origin by exactly 8(e-1)") {
    const double v = f_infinity(EntireFunc(ExpOfSquare{}), 0.0, 1.0);
    const double expect = -8.0 * (std::exp(1.0) - 1.0);
    CHECK(std::abs(v - expect) <= 1e-12 * std::abs(expect));
  }
  SECTION("pure polynomial case agrees with the exact expansion") {
    const Poly<Exact> cubic = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)}).expand();
    PolyTimesExp phi(cubic, Rat(0));
    CHECK(f_infinity(EntireFunc(phi), 4.0, 1.0) == 1188.0);
    CHECK(f_infinity_exact(cubic, Rat(4), Rat(1)) == 1188);
    const Poly<Exact> expanded = unit_weight_fn(cubic, Rat(1));
    for (const Rat x : {Rat(-3, 2), Rat(0), Rat(1, 3), Rat(4)})
      CHECK(f_infinity_exact(cubic, x, Rat(1)) == expanded(x));
  }
  SECTION("flat triple forces zero") {
    ClosedForm flat{[](double) { return 2.5; }, "no zeros"};
    CHECK(f_infinity(EntireFunc(flat), 0.3, 1.0) == 0.0);
  }
  SECTION("quadratic homogeneity under constant scaling, exactly") {
    const Poly<Exact> p = RootedPoly<Exact>::from_list({Rat(0), Rat(3, 2)}).expand();
    for (const Rat c : {Rat(2), Rat(-3), Rat(5, 7)}) {
      const Rat lhs = f_infinity_exact(scale(p, c), Rat(1, 3), Rat(1));
      const Rat rhs = c * c * f_infinity_exact(p, Rat(1, 3), Rat(1));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("window verification for p e^{bx}", "[entire]") {
  const Poly<Exact> cubic = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)}).expand();
  SECTION("growth factor one") {
    PolyTimesExp phi(cubic, Rat(1));
    auto rep = check_theorem34(phi, -5.0, 5.0, 1001, 1.0);
    CHECK(rep.all_nonnegative);
    CHECK(rep.confirmed == 0);
  }
  SECTION("growth factor zero reduces to the exact polynomial check") {
    PolyTimesExp phi(cubic, Rat(0));
    auto rep = check_theorem34(phi, -5.0, 5.0, 1001, 1.0);
    CHECK(rep.all_nonnegative);
  }
  SECTION("mesh below h is rejected") {
    PolyTimesExp phi(RootedPoly<Exact>::from_list({Rat(0), Rat(-3, 4)}).expand(), Rat(1));
    CHECK_THROWS_AS(check_theorem34(phi, -3.0, 3.0, 101, 1.0), PreconditionError);
  }
  SECTION("non-real factor is rejected") {
    const Poly<Exact> p = Poly<Exact>({Rat(1), Rat(0), Rat(1)}) * Poly<Exact>({Rat(1), Rat(1)});
    PolyTimesExp phi(p, Rat(1));
    CHECK_THROWS_AS(check_theorem34(phi, -3.0, 3.0, 101, 1.0), PreconditionError);
  }
}

TEST_CASE("gaussian probe runs and asserts nothing", "[entire]") {
  auto rep = gaussian_probe(1.0, 4.0, 401);
  CHECK(std::isfinite(rep.grid_min));
}
