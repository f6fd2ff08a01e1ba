#include <catch2/catch_amalgamated.hpp>

#include "dlag/harness.hpp"
#include "dlag/logderiv.hpp"
#include "dlag/rng.hpp"

using namespace dlag;

TEST_CASE("build_F reduces", "[logderiv]") {
  // x(x-1): the difference quotient collapses to 2/(x-1)
  const Poly<Exact> p({Rat(0), Rat(-1), Rat(1)});
  auto F = build_F(p);
  CHECK(F.num == Poly<Exact>::constant(Rat(2)));
  CHECK(F.den == Poly<Exact>({Rat(-1), Rat(1)}));

  auto Fx = build_F(Poly<Exact>({Rat(0), Rat(1)}));
  CHECK(Fx.num == Poly<Exact>::constant(Rat(1)));
  CHECK(Fx.den == Poly<Exact>({Rat(0), Rat(1)}));

  auto Fx2 = build_F(Poly<Exact>({Rat(0), Rat(0), Rat(1)}));
  CHECK(Fx2.num == Poly<Exact>({Rat(1), Rat(2)}));
  CHECK(Fx2.den == Poly<Exact>({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("build_R mirrors with the backward difference", "[logderiv]") {
  auto Rx = build_R(Poly<Exact>({Rat(0), Rat(1)}));
  CHECK(Rx.num == Poly<Exact>::constant(Rat(1)));
  CHECK(Rx.den == Poly<Exact>({Rat(0), Rat(1)}));

  const Poly<Exact> p({Rat(0), Rat(-1), Rat(1)});
  auto Rp = build_R(p);
  CHECK(Rp.num == Poly<Exact>::constant(Rat(2)));
  CHECK(Rp.den == Poly<Exact>({Rat(0), Rat(1)}));

  auto Rx2 = build_R(Poly<Exact>({Rat(0), Rat(0), Rat(1)}));
  CHECK(Rx2.num == Poly<Exact>({Rat(-1), Rat(2)}));
  CHECK(Rx2.den == Poly<Exact>({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("residue closed forms", "[logderiv]") {
  SECTION("cubic chain: zero residues where the shifted value vanishes") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)});
    auto pf = residues(rp, Direction::Forward);
    REQUIRE(pf.residues.size() == 3);
    CHECK(pf.residues[0] == 0);
    CHECK(pf.residues[1] == 0);
    CHECK(pf.residues[2] == 3);
  }
  SECTION("spacing below one admits a negative residue") {
    for (const Rat eps : {Rat(1, 4), Rat(1, 2)}) {
      auto rp = RootedPoly<Exact>::from_list({Rat(0), eps - 1});
      auto pf = residues(rp, Direction::Forward);
      CHECK(pf.residues[1] == (2 - eps) / (1 - eps));
      CHECK(pf.residues[0] == -eps / (1 - eps));
    }
  }
  SECTION("repeated roots are rejected") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(0), Rat(1)});
    CHECK_THROWS_AS(residues(rp, Direction::Forward), PreconditionError);
  }
}

TEST_CASE("partial fractions reconstruct F", "[logderiv][property]") {
  GeneratorSpec spec;
  spec.degree_min = 1;
  spec.degree_max = 10;
  spec.min_gap = Rat(1, 4);
  spec.gaps.kind = GapDistribution::Kind::UniformExtra;
  spec.gaps.param = 2.0;
  spec.seed = 40490;
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto rp = generate_one(spec, trial);
    const Poly<Exact> p = rp.expand();
    auto pf = residues(rp, Direction::Forward);
    auto F = build_F(p);
    for (int s = 0; s < 20; ++s) {
      const Rat x(Int(rng.uniform_int(-4000, 4000)), Int(64));
      if (p(x) == 0 || F.den(x) == 0) continue;
      CHECK(pf(x) == F(x));
    }
  }
}

TEST_CASE("residue sums equal the degree even below unit spacing", "[logderiv][property]") {
  GeneratorSpec spec;
  spec.degree_min = 1;
  spec.degree_max = 9;
  spec.min_gap = Rat(1, 8);
  spec.gaps.kind = GapDistribution::Kind::UniformExtra;
  spec.gaps.param = 1.5;
  spec.seed = 505;
  for (int trial = 0; trial < 60; ++trial) {
    auto rp = generate_one(spec, trial);
    auto rep = check_residue_lemmas(rp);
    CHECK(rep.sums_equal_degree);
    if (rep.mesh_ge_one) CHECK(rep.nonneg_ok);
  }
}

TEST_CASE("cauchy-schwarz margins", "[logderiv]") {
  SECTION("unit-spaced cubic: margins nonpositive at branch midpoints") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)});
    auto rep = check_cauchy_schwarz(rp.expand(), default_cs_samples(rp));
    CHECK(rep.all_ok);
  }
  SECTION("single pole: exact equality") {
    auto rep = check_cauchy_schwarz(Poly<Exact>({Rat(0), Rat(1)}), {Rat(5)});
    REQUIRE(rep.forward_margins.size() == 1);
    CHECK(rep.forward_margins[0] == 0);
    CHECK(rep.reverse_margins[0] == 0);
  }
  SECTION("sharpness: the margin at x = 1 shrinks like eps") {
    std::vector<Rat> margins;
    for (const Rat eps : {Rat(1, 2), Rat(1, 4), Rat(1, 8)}) {
      const Poly<Exact> p = RootedPoly<Exact>::from_list({Rat(0), eps - 1}).expand();
      auto rep = check_cauchy_schwarz(p, {Rat(1)});
      margins.push_back(rep.forward_margins[0]);
    }
    // Below unit spacing the bound fails by exactly eps/(2-eps) at x = 1.
    CHECK(margins[0] == Rat(1, 3));
    CHECK(margins[1] == Rat(1, 7));
    CHECK(margins[2] == Rat(1, 15));
  }
  SECTION("sampling at a root is rejected") {
    CHECK_THROWS_AS(check_cauchy_schwarz(Poly<Exact>({Rat(0), Rat(1)}), {Rat(0)}),
                    PreconditionError);
  }
}

TEST_CASE("product identity holds for arbitrary polynomials", "[logderiv][property]") {
  Rng rng(90210);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rat> c;
    const int deg = static_cast<int>(rng.uniform_int(1, 8));
    for (int i = 0; i <= deg; ++i)
      c.emplace_back(Int(rng.uniform_int(-9, 9)), Int(rng.uniform_int(1, 3)));
    const Poly<Exact> p(std::move(c));
    if (p.degree() < 1) continue;
    std::vector<Rat> samples;
    while (samples.size() < 5) {
      const Rat x(Int(rng.uniform_int(-400, 400)), Int(16));
      if (p(x) != 0) samples.push_back(x);
    }
    CHECK(check_product_identity(p, samples).all_ok);
  }
  // Includes non-real-rooted instances explicitly.
  const Poly<Exact> nr = Poly<Exact>({Rat(1), Rat(0), Rat(1)}) * Poly<Exact>({Rat(1), Rat(1)});
  CHECK(check_product_identity(nr, {Rat(2), Rat(3), Rat(-5, 2)}).all_ok);
}

TEST_CASE("forward difference preserves unit spacing", "[logderiv]") {
  SECTION("unit-spaced cubic") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)});
    auto rep = check_spacing_preservation(rp, Rat(1));
    CHECK(rep.g == Poly<Exact>({Rat(0), Rat(-3), Rat(3)}));
    CHECK(rep.g_real_rooted);
    CHECK(rep.g_simple);
    CHECK(rep.g_mesh_ge_one);
    CHECK(rep.g_mesh_ge_d);
  }
  SECTION("doubly spaced cubic: d = 2 evidence recorded") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(2), Rat(4)});
    auto rep = check_spacing_preservation(rp, Rat(2));
    CHECK(rep.g_real_rooted);
    CHECK(rep.g_mesh_ge_one);
    // whether the full gap carries over is evidence, not an assertion
  }
  SECTION("degree two: single difference root, infinite mesh") {
    auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(1)});
    auto rep = check_spacing_preservation(rp, Rat(1));
    CHECK(rep.g.degree() == 1);
    CHECK_FALSE(rep.g_mesh.finite);
    CHECK(rep.g_mesh_ge_one);
    CHECK(rep.g_mesh_ge_d);
  }
  SECTION("difference stays simply real-rooted under unit spacing") {
    GeneratorSpec spec;
    spec.degree_min = 2;
    spec.degree_max = 8;
    spec.min_gap = 1;
    spec.seed = 321;
    for (int trial = 0; trial < 30; ++trial) {
      auto rep = check_spacing_preservation(generate_one(spec, trial), Rat(1));
      CHECK(rep.g_real_rooted);
      CHECK(rep.g_simple);
      CHECK(rep.g_mesh_ge_one);
    }
  }
}

TEST_CASE("F is strictly decreasing between poles under unit spacing", "[logderiv][property]") {
  GeneratorSpec spec;
  spec.degree_min = 2;
  spec.degree_max = 7;
  spec.min_gap = 1;
  spec.seed = 1999;
  for (int trial = 0; trial < 25; ++trial) {
    auto rp = generate_one(spec, trial);
    const Poly<Exact> p = rp.expand();
    auto F = build_F(p);
    auto dF = derivative(F);
    for (const Rat& x : default_cs_samples(rp)) {
      if (F.den(x) == 0) continue;
      CHECK(dF(x) < 0);
    }
  }
}

TEST_CASE("superlevel measure, exact pairing", "[logderiv]") {
  SECTION("log derivative of x(x-2) at lambda = 1") {
    auto m = superlevel_measure_exact(RootedPoly<Exact>::from_list({Rat(0), Rat(2)}),
                                      LogKind::LogDerivative, Rat(1));
    REQUIRE(m.pairing_ok);
    CHECK(m.total_exact == 2);
    CHECK(m.vieta_total_exact == 2);
    CHECK(*m.n_over_lambda == 2);
  }
  SECTION("forward difference of x(x-1) at lambda = 1: the set is (1, 3]") {
    auto m = superlevel_measure_exact(RootedPoly<Exact>::from_list({Rat(0), Rat(1)}),
                                      LogKind::ForwardDiff, Rat(1));
    REQUIRE(m.pairing_ok);
    CHECK(m.total_exact == 2);
    REQUIRE(m.intervals.size() == 1);
    CHECK(m.intervals[0].first == Catch::Approx(1.0));
    CHECK(m.intervals[0].second == Catch::Approx(3.0).margin(1e-8));
  }
  SECTION("forward difference of the cubic at lambda = 2") {
    auto m = superlevel_measure_exact(RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)}),
                                      LogKind::ForwardDiff, Rat(2));
    REQUIRE(m.pairing_ok);
    CHECK(m.total_exact == Rat(3, 2));
    CHECK(m.vieta_total_exact == Rat(3, 2));
  }
  SECTION("repeated roots reduce away for the log derivative") {
    auto m = superlevel_measure_exact(RootedPoly<Exact>::from_list({Rat(0), Rat(0), Rat(-1)}),
                                      LogKind::LogDerivative, Rat(1));
    REQUIRE(m.pairing_ok);
    CHECK(m.total_exact == 3);
  }
  SECTION("lambda must be positive") {
    CHECK_THROWS_AS(superlevel_measure_exact(RootedPoly<Exact>::from_list({Rat(0), Rat(2)}),
                                             LogKind::LogDerivative, Rat(0)),
                    PreconditionError);
  }
}

TEST_CASE("superlevel measure identities over the generator", "[logderiv][property]") {
  GeneratorSpec spec;
  spec.degree_min = 2;
  spec.degree_max = 6;
  spec.min_gap = 1;
  spec.seed = 31415;
  const std::vector<Rat> lambdas = {Rat(1, 2), Rat(1), Rat(2), Rat(5)};
  for (int trial = 0; trial < 15; ++trial) {
    auto rp = generate_one(spec, trial);
    const int n = rp.degree();
    for (const Rat& lambda : lambdas) {
      auto md = superlevel_measure_exact(rp, LogKind::LogDerivative, lambda);
      REQUIRE(md.pairing_ok);
      CHECK(md.total_exact == Rat(n) / lambda);
      CHECK(md.vieta_total_exact == md.total_exact);
      auto mf = superlevel_measure_exact(rp, LogKind::ForwardDiff, lambda);
      REQUIRE(mf.pairing_ok);
      CHECK(mf.total_exact == mf.vieta_total_exact);
      CHECK(mf.total_exact == Rat(n) / lambda);
    }
  }
}

TEST_CASE("numeric scan agrees with exact pairing on hypothesis instances", "[logderiv]") {
  auto rp = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)});
  const Poly<Exact> p = rp.expand();
  for (const Rat lambda : {Rat(1, 2), Rat(1), Rat(2)}) {
    auto exact = superlevel_measure_exact(rp, LogKind::ForwardDiff, lambda);
    auto scan = superlevel_measure_scan(build_F(p), lambda);
    REQUIRE(exact.pairing_ok);
    CHECK(scan.total == Catch::Approx(to_double(exact.total_exact)).margin(1e-7));
    CHECK(scan.scan_error_bound < 1e-7);
  }
}

TEST_CASE("numeric scan off the hypothesis class deviates from n/lambda", "[logderiv]") {
  // Non-real roots: (x^2+1)(x+1), degree 3.
  const Poly<Exact> p = Poly<Exact>({Rat(1), Rat(0), Rat(1)}) * Poly<Exact>({Rat(1), Rat(1)});
  auto m = superlevel_measure_scan(build_F(p), Rat(1));
  CHECK(std::abs(m.total - 3.0) > 1e-3);  // evidence for the converse direction
}
