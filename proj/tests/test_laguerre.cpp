#include <catch2/catch_amalgamated.hpp>

#include "dlag/harness.hpp"
#include "dlag/laguerre.hpp"
#include "dlag/rng.hpp"

using namespace dlag;

namespace {
const Poly<Exact> kCubic = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)}).expand();
}

TEST_CASE("classical functional", "[laguerre]") {
  CHECK(classical_laguerre(Poly<Exact>({Rat(0), Rat(0), Rat(1)})) ==
        Poly<Exact>({Rat(0), Rat(0), Rat(2)}));
  CHECK(classical_laguerre(Poly<Exact>({Rat(0), Rat(1)})) == Poly<Exact>::constant(Rat(1)));
  // Non-real roots: negative somewhere (at 0 here), the necessity direction.
  const Poly<Exact> c = classical_laguerre(Poly<Exact>({Rat(1), Rat(0), Rat(1)}));
  CHECK(c == Poly<Exact>({Rat(-2), Rat(0), Rat(2)}));
  CHECK(c(Rat(0)) < 0);
}

TEST_CASE("sharpened functional", "[laguerre]") {
  CHECK(sharpened_laguerre(Poly<Exact>({Rat(0), Rat(1)}), 1).is_zero());
  CHECK(sharpened_laguerre(Poly<Exact>({Rat(0), Rat(0), Rat(1)}), 2).is_zero());
  CHECK(certify_nonnegative(sharpened_laguerre(kCubic, 3)).verdict ==
        Nonneg::NonnegativeEverywhere);
  CHECK_THROWS_AS(sharpened_laguerre(kCubic, 0), PreconditionError);
}

TEST_CASE("discrete functional expansions", "[laguerre]") {
  const Poly<Exact> sq = Poly<Exact>({Rat(-1), Rat(1)}) * Poly<Exact>({Rat(-1), Rat(1)});
  CHECK(discrete_fn(kCubic, 3, Rat(1)) == scale(sq, Rat(72)));
  const Poly<Exact> f2 = scale(Poly<Exact>({Rat(-3), Rat(1)}) * sq * Poly<Exact>({Rat(1), Rat(1)}),
                               Rat(-12));
  CHECK(discrete_fn(kCubic, 2, Rat(1)) == f2);
  CHECK(discrete_fn(Poly<Exact>({Rat(1), Rat(0), Rat(1)}) * Poly<Exact>({Rat(1), Rat(1)}), 3,
                    Rat(1)) == Poly<Exact>({Rat(8), Rat(-32), Rat(32)}));
  CHECK_THROWS_AS(discrete_fn(kCubic, 3, Rat(0)), PreconditionError);
}

TEST_CASE("pointwise evaluation matches expansion", "[laguerre]") {
  CHECK(eval_fn(kCubic, 2, Rat(1), Rat(4)) == -540);
  CHECK(eval_fn(kCubic, 3, Rat(1), Rat(1)) == 0);
  Rng rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rat> c;
    const int deg = static_cast<int>(rng.uniform_int(1, 7));
    for (int i = 0; i <= deg; ++i)
      c.emplace_back(Int(rng.uniform_int(-9, 9)), Int(rng.uniform_int(1, 3)));
    const Poly<Exact> p(std::move(c));
    if (p.is_zero()) continue;
    const int n = static_cast<int>(rng.uniform_int(1, 9));
    const Rat h(Int(rng.uniform_int(1, 5)), Int(rng.uniform_int(1, 3)));
    const Rat x(Int(rng.uniform_int(-12, 12)), Int(rng.uniform_int(1, 4)));
    CHECK(eval_fn(p, n, h, x) == discrete_fn(p, n, h)(x));
  }
}

TEST_CASE("functional degree bound", "[laguerre][property]") {
  Rng rng(808);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> c;
    const int deg = static_cast<int>(rng.uniform_int(1, 8));
    for (int i = 0; i <= deg; ++i) c.emplace_back(Int(rng.uniform_int(-9, 9)), Int(1));
    const Poly<Exact> p(std::move(c));
    if (p.degree() < 1) continue;
    const int n = static_cast<int>(rng.uniform_int(1, 9));
    CHECK(discrete_fn(p, n, Rat(1)).degree() <= 2 * p.degree() - 2);
  }
}

TEST_CASE("rescaling the argument rescales the step", "[laguerre][property]") {
  Rng rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rat> c;
    const int deg = static_cast<int>(rng.uniform_int(1, 6));
    for (int i = 0; i <= deg; ++i)
      c.emplace_back(Int(rng.uniform_int(-9, 9)), Int(rng.uniform_int(1, 3)));
    const Poly<Exact> p(std::move(c));
    if (p.is_zero()) continue;
    const Rat s(Int(rng.uniform_int(1, 6)), Int(rng.uniform_int(1, 3)));
    const Rat h(Int(rng.uniform_int(1, 4)), Int(rng.uniform_int(1, 3)));
    const Rat x(Int(rng.uniform_int(-8, 8)), Int(rng.uniform_int(1, 3)));
    const int n = static_cast<int>(rng.uniform_int(1, 7));
    const Poly<Exact> q = compose_scale(p, s);
    CHECK(eval_fn(q, n, h, x) == eval_fn(p, n, Rat(s * h), Rat(s * x)));
  }
}

TEST_CASE("certify_main_theorem", "[laguerre]") {
  SECTION("unit-spaced cubic certifies at the boundary") {
    auto cert = certify_main_theorem(kCubic, Rat(1));
    CHECK(cert.verdict == Verdict::Certified);
    CHECK(cert.n_used == 3);
  }
  SECTION("rescaled cubic certifies at h = 2") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(2), Rat(4)});
    CHECK(certify_main_theorem(rp, Rat(2)).verdict == Verdict::Certified);
  }
  SECTION("mesh below h is a precondition error, not a violation") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(-3, 4)});
    CHECK_THROWS_AS(certify_main_theorem(rp, Rat(1)), PreconditionError);
  }
  SECTION("non-real roots are a precondition error") {
    const Poly<Exact> p = Poly<Exact>({Rat(1), Rat(0), Rat(1)}) * Poly<Exact>({Rat(1), Rat(1)});
    CHECK_THROWS_AS(certify_main_theorem(p, Rat(1)), PreconditionError);
  }
  SECTION("degree one is certified with infinite mesh") {
    CHECK(certify_main_theorem(Poly<Exact>({Rat(-7), Rat(2)}), Rat(1)).verdict ==
          Verdict::Certified);
  }
}

TEST_CASE("limit of the normalized functional", "[laguerre]") {
  SECTION("cubic at x = 1/3: frozen exact deviations, fourfold decay") {
    const std::vector<Rat> hs = {Rat(1, 2), Rat(1, 4), Rat(1, 8)};
    const auto devs = limit_check(kCubic, 3, Rat(1, 3), hs);
    REQUIRE(devs.size() == 3);
    // For a cubic the normalized functional exceeds the sharpened form by
    // exactly 4 h^2 p'(x) + 2 h^4; at x = 1/3, p'(x) = 1/3.
    CHECK(devs[0] == Rat(11, 24));
    CHECK(devs[1] == Rat(35, 384));
    CHECK(devs[2] == Rat(131, 6144));
    const double r1 = to_double(devs[0]) / to_double(devs[1]);
    const double r2 = to_double(devs[1]) / to_double(devs[2]);
    CHECK(r1 > 3.5);
    CHECK(r2 > 3.5);
    CHECK(std::abs(r2 - 4.0) < std::abs(r1 - 4.0));  // second-order approach
  }
  SECTION("degree-one and pure-square cases are identically zero") {
    const std::vector<Rat> hs = {Rat(1, 2), Rat(1, 4)};
    for (const Rat& d : limit_check(Poly<Exact>({Rat(0), Rat(1)}), 1, Rat(5), hs)) CHECK(d == 0);
    for (const Rat& d : limit_check(Poly<Exact>({Rat(0), Rat(0), Rat(1)}), 2, Rat(-3), hs))
      CHECK(d == 0);
  }
}

TEST_CASE("certified instances stay certified for larger weights", "[laguerre][property]") {
  GeneratorSpec spec;
  spec.degree_min = 2;
  spec.degree_max = 5;
  spec.min_gap = 1;
  spec.seed = 2718;
  for (int trial = 0; trial < 25; ++trial) {
    auto rp = generate_one(spec, trial);
    const Poly<Exact> p = rp.expand();
    const int n = p.degree();
    REQUIRE(certify_main_theorem(rp, Rat(1)).verdict == Verdict::Certified);
    for (int m : {n + 1, n + 3}) {
      CHECK(certify_nonnegative(discrete_fn(p, m, Rat(1))).verdict !=
            Nonneg::Negative);
    }
  }
}

TEST_CASE("main certification fuzz", "[laguerre][property]") {
  GeneratorSpec spec;
  spec.degree_min = 2;
  spec.degree_max = 8;
  spec.min_gap = 1;
  spec.seed = 161803;
  for (int trial = 0; trial < 80; ++trial) {
    auto rp = generate_one(spec, trial);
    CHECK(certify_main_theorem(rp, Rat(1)).verdict == Verdict::Certified);
  }
}
