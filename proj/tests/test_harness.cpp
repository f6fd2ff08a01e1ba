#include <catch2/catch_amalgamated.hpp>

#include "dlag/harness.hpp"

using namespace dlag;

TEST_CASE("generator respects its spec", "[harness]") {
  GeneratorSpec spec;
  spec.degree_min = 3;
  spec.degree_max = 3;
  spec.min_gap = 1;
  spec.seed = 42;
  SECTION("degree and mesh") {
    for (auto& rp : generate(spec, 25)) {
      CHECK(rp.degree() == 3);
      REQUIRE(rp.min_gap());
      CHECK(*rp.min_gap() >= 1);
    }
  }
  SECTION("zero extra gives an arithmetic progression, mesh exactly one") {
    GeneratorSpec s = spec;
    s.degree_min = s.degree_max = 4;
    s.gaps.param = 0.0;
    for (auto& rp : generate(s, 10)) {
      REQUIRE(rp.min_gap());
      CHECK(*rp.min_gap() == 1);
    }
  }
  SECTION("fractional minimum gap") {
    GeneratorSpec s = spec;
    s.degree_min = s.degree_max = 5;
    s.min_gap = Rat(3, 2);
    for (auto& rp : generate(s, 10)) CHECK(*rp.min_gap() >= Rat(3, 2));
  }
  SECTION("same seed, same stream") {
    auto a = generate(spec, 10);
    auto b = generate(spec, 10);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].expand() == b[i].expand());
  }
}

TEST_CASE("parametric family", "[harness]") {
  SECTION("discriminant closed form on the grid") {
    for (int n : {3, 4, 5}) {
      for (int a : {-1, 0, 1, 2}) {
        auto r = parametric_family_C(n, Rat(a));
        INFO("n=" << n << " a=" << a);
        CHECK(r.quotient_exact);
        CHECK(r.discriminant_matches);
      }
    }
  }
  SECTION("n = 4, a = 1 explicit value") {
    CHECK(parametric_family_C(4, Rat(1)).discriminant == -41472);
  }
  SECTION("a = 0 collapses the discriminant") {
    CHECK(parametric_family_C(3, Rat(0)).discriminant == 0);
  }
  SECTION("the quadratic never changes sign") {
    for (int n : {3, 4, 5, 6}) {
      for (const Rat a : {Rat(-5, 2), Rat(-1), Rat(1, 3), Rat(2), Rat(7)}) {
        auto r = parametric_family_C(n, a);
        CHECK(r.discriminant <= 0);
        CHECK(r.quadratic.coeff(2) > 0);
        for (const Rat x : {Rat(-10), Rat(0), Rat(10)}) CHECK(r.quadratic(x) > 0);
        CHECK(certify_nonnegative(r.fn).verdict != Nonneg::Negative);
      }
    }
  }
}

TEST_CASE("campaign accounting and determinism", "[harness]") {
  GeneratorSpec spec;
  spec.degree_min = 2;
  spec.degree_max = 6;
  spec.min_gap = 1;
  spec.seed = 99;
  CampaignParams params;

  SECTION("main inequality regression: everything certifies") {
    auto r = run_campaign(CampaignId::MainInequality, spec, 40, params, 1);
    CHECK(r.trials == 40);
    CHECK(r.confirmed == 40);
    CHECK(r.violations.empty());
    CHECK(r.confirmed + r.violations.size() + r.precondition_skips == r.trials);
    CHECK(r.near_misses.size() == 10);
    for (const auto& nm : r.near_misses) CHECK(nm.margin >= 0.0);
  }
  SECTION("serial and parallel tallies are identical") {
    for (CampaignId id : {CampaignId::MainInequality, CampaignId::DiffSpacing,
                          CampaignId::MeasureConverse}) {
      GeneratorSpec s = spec;
      if (id == CampaignId::DiffSpacing) s.min_gap = Rat(3, 2);
      CampaignParams p2 = params;
      p2.d = Rat(3, 2);
      auto serial = run_campaign(id, s, 24, p2, 1);
      auto parallel = run_campaign(id, s, 24, p2, 4);
      CHECK(serial.confirmed == parallel.confirmed);
      CHECK(serial.violations.size() == parallel.violations.size());
      CHECK(serial.precondition_skips == parallel.precondition_skips);
      CHECK(serial.tallies == parallel.tallies);
      REQUIRE(serial.near_misses.size() == parallel.near_misses.size());
      for (std::size_t i = 0; i < serial.near_misses.size(); ++i) {
        CHECK(serial.near_misses[i].trial == parallel.near_misses[i].trial);
        CHECK(serial.near_misses[i].margin == parallel.near_misses[i].margin);
      }
    }
  }
  SECTION("spacing campaign at d = 2") {
    GeneratorSpec s = spec;
    s.min_gap = 2;
    CampaignParams p2;
    p2.d = 2;
    auto r = run_campaign(CampaignId::DiffSpacing, s, 30, p2, 2);
    CHECK(r.confirmed + r.violations.size() + r.precondition_skips == r.trials);
    CHECK(r.tallies.count("internal_errors") == 0);
  }
  SECTION("measure-forward campaign is exact across the lambda grid") {
    auto r = run_campaign(CampaignId::MeasureForward, spec, 10, params, 2);
    CHECK(r.confirmed == 10);
    CHECK(r.violations.empty());
    CHECK(r.tallies.count("pairing_failures") == 0);
  }
  SECTION("measure-converse campaign tallies its subfamilies") {
    auto r = run_campaign(CampaignId::MeasureConverse, spec, 16, params, 2);
    CHECK(r.confirmed == 16);
    CHECK(r.tallies.at("nonreal_instances") == 8);
    CHECK(r.tallies.at("smallmesh_instances") == 8);
    // deviations recorded as near-miss margins (smallest are most interesting)
    CHECK_FALSE(r.near_misses.empty());
  }
  SECTION("entire campaign confirms on the hypothesis class") {
    GeneratorSpec s = spec;
    s.degree_max = 5;
    CampaignParams p2;
    p2.grid = 301;
    auto r = run_campaign(CampaignId::EntireNonneg, s, 12, p2, 2);
    CHECK(r.confirmed == 12);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("reproduction suite", "[harness]") {
  auto rep = reproduce_paper_examples();
  for (const auto& item : rep.items) {
    INFO(item.name << ": " << item.detail);
    CHECK(item.pass);
  }
  CHECK(rep.all_pass);
  CHECK(rep.items.size() == 8);
  CHECK(rep.runtime_seconds < 10.0);
}
