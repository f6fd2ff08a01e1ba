#ifndef DLAG_HARNESS_HPP
#define DLAG_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dlag/entire.hpp"
#include "dlag/laguerre.hpp"
#include "dlag/logderiv.hpp"
#include "dlag/poly.hpp"
#include "dlag/realroots.hpp"
#include "dlag/rng.hpp"
#include "dlag/scalar.hpp"

namespace dlag {

enum class LeadingSign { Plus, Minus, Random };

struct GapDistribution {
  enum class Kind { FixedPlusExponential, UniformExtra };
  Kind kind = Kind::FixedPlusExponential;
  double param = 1.0;  // exponential scale, or the uniform maximum
};

/// Deterministic generator of real-rooted polynomials with a guaranteed
/// minimum root gap. Gaps are min_gap plus a nonnegative extra snapped to
/// a dyadic grid, so the mesh bound holds exactly and the boundary case
/// (extra == 0) occurs with positive probability.
struct GeneratorSpec {
  int degree_min = 2;
  int degree_max = 8;
  Rat min_gap = 1;
  GapDistribution gaps;
  Rat offset_min = -8;
  Rat offset_max = 8;
  LeadingSign leading = LeadingSign::Random;
  std::uint64_t seed = 0;
  long grid = 64;  // dyadic denominator for rationalized draws

  void validate() const {
    if (degree_min < 1 || degree_max < degree_min)
      throw PreconditionError("generator: bad degree range");
    if (min_gap <= 0) throw PreconditionError("generator: min_gap must be positive");
    if (!(offset_min <= offset_max)) throw PreconditionError("generator: bad offset range");
    if (grid < 1) throw PreconditionError("generator: bad grid");
    if (gaps.param < 0) throw PreconditionError("generator: bad gap parameter");
  }
};

namespace detail {

inline Rat snap_to_grid(double value, long grid) {
  if (value < 0) value = 0;
  const double scaled = std::floor(value * static_cast<double>(grid));
  return Rat(Int(static_cast<long long>(scaled)), Int(grid));
}

}  // namespace detail

inline RootedPoly<Exact> generate_one(const GeneratorSpec& spec, std::uint64_t index) {
  spec.validate();
  Rng rng = trial_rng(spec.seed, index);
  const int degree = static_cast<int>(rng.uniform_int(spec.degree_min, spec.degree_max));
  const Rat span = spec.offset_max - spec.offset_min;
  Rat root = spec.offset_min + detail::snap_to_grid(rng.uniform01() * to_double(span), spec.grid);
  std::vector<RootedPoly<Exact>::Root> roots;
  roots.push_back({root, 1});
  for (int k = 1; k < degree; ++k) {
    double extra = 0.0;
    switch (spec.gaps.kind) {
      case GapDistribution::Kind::FixedPlusExponential:
        extra = (spec.gaps.param > 0) ? rng.exponential(spec.gaps.param) : 0.0;
        break;
      case GapDistribution::Kind::UniformExtra:
        extra = rng.uniform01() * spec.gaps.param;
        break;
    }
    root += spec.min_gap + detail::snap_to_grid(extra, spec.grid);
    roots.push_back({root, 1});
  }
  Rat leading(1);
  switch (spec.leading) {
    case LeadingSign::Plus:
      break;
    case LeadingSign::Minus:
      leading = -1;
      break;
    case LeadingSign::Random:
      if (rng.coin()) leading = -1;
      break;
  }
  return RootedPoly<Exact>(std::move(roots), leading);
}

inline std::vector<RootedPoly<Exact>> generate(const GeneratorSpec& spec, int count) {
  std::vector<RootedPoly<Exact>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(generate_one(spec, static_cast<std::uint64_t>(i)));
  return out;
}

/// The parametric family p(x) = (x+n+a) prod_{k=1..n-1} (x+k): its discrete
/// functional factors as a quadratic C(x) times prod_{k=2..n-2} (x+k)^2,
/// and the quadratic's discriminant has the closed form
/// -16 n a^2 (n-1)^2 (n-2)^3 (a-n)^2 <= 0, so the functional never changes
/// sign even though the family's mesh is arbitrary.
struct ParametricFamilyResult {
  int n = 0;
  Rat a;
  Poly<Exact> p;
  Poly<Exact> fn;
  Poly<Exact> quadratic;
  bool quotient_exact = false;
  Rat discriminant;
  Rat expected_discriminant;
  bool discriminant_matches = false;
};

inline ParametricFamilyResult parametric_family_C(int n, const Rat& a) {
  if (n < 3) throw PreconditionError("parametric family requires n >= 3");
  ParametricFamilyResult out;
  out.n = n;
  out.a = a;
  // The moving root sits at a - n: this parametrization is the one the
  // quadratic's printed coefficients and discriminant closed form satisfy
  // (the a = 0 member is the unit-spaced chain -1..-n in either reading).
  std::vector<Rat> roots;
  roots.push_back(a - Rat(n));
  for (int k = 1; k <= n - 1; ++k) roots.push_back(Rat(-k));
  out.p = RootedPoly<Exact>::from_list(std::move(roots)).expand();
  out.fn = discrete_fn(out.p, n, Rat(1));
  Poly<Exact> divisor = Poly<Exact>::constant(Rat(1));
  for (int k = 2; k <= n - 2; ++k) {
    Poly<Exact> lin({Rat(k), Rat(1)});
    divisor = divisor * lin * lin;
  }
  auto [q, r] = divrem(out.fn, divisor);
  out.quotient_exact = r.is_zero() && q.degree() == 2;
  if (!out.quotient_exact)
    throw PreconditionError("parametric family: quotient is not an exact quadratic");
  out.quadratic = q;
  const Rat qa = q.coeff(2), qb = q.coeff(1), qc = q.coeff(0);
  out.discriminant = qb * qb - 4 * qa * qc;
  out.expected_discriminant = Rat(-16) * n * a * a * rat_pow(Rat(n - 1), 2) *
                              rat_pow(Rat(n - 2), 3) * (a - n) * (a - n);
  out.discriminant_matches = (out.discriminant == out.expected_discriminant);
  return out;
}

enum class CampaignId {
  MainInequality,   // proved result used as a regression: zero violations expected
  DiffSpacing,      // forward-difference spacing >= d: open, evidence only
  MeasureForward,   // superlevel measure identities, exact
  MeasureConverse,  // deviations off the hypothesis class, evidence only
  EntireNonneg      // p e^{bx} fuzz of the unit-weight functional
};

inline const char* campaign_name(CampaignId id) {
  switch (id) {
    case CampaignId::MainInequality: return "main-inequality";
    case CampaignId::DiffSpacing: return "spacing";
    case CampaignId::MeasureForward: return "measure-forward";
    case CampaignId::MeasureConverse: return "measure-converse";
    case CampaignId::EntireNonneg: return "entire";
  }
  return "?";
}

struct CampaignParams {
  Rat d = 1;                                            // DiffSpacing threshold
  std::vector<Rat> lambdas = {Rat(1, 2), Rat(1), Rat(2), Rat(5)};
  double b_max = 3.0;                                   // EntireNonneg growth range
  int grid = 1001;                                      // EntireNonneg window grid
  double window_pad = 3.0;                              // window beyond extreme roots
  double interesting_deviation = 1e-6;                  // MeasureConverse flag threshold
};

struct ViolationWitness {
  std::uint64_t trial = 0;
  std::string description;
  bool exact_reverified = false;
};

struct NearMiss {
  double margin = 0.0;
  std::uint64_t trial = 0;
  std::string what;
};

struct CampaignResult {
  CampaignId id = CampaignId::MainInequality;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t confirmed = 0;
  std::uint64_t precondition_skips = 0;
  std::vector<ViolationWitness> violations;
  std::vector<NearMiss> near_misses;  // the 10 smallest margins
  std::map<std::string, long long> tallies;
  double runtime_seconds = 0.0;
};

namespace detail {

struct TrialRecord {
  enum class Outcome { Confirmed, Violation, Skip };
  Outcome outcome = Outcome::Confirmed;
  std::optional<NearMiss> near_miss;
  std::optional<ViolationWitness> witness;
  std::vector<std::pair<std::string, long long>> tallies;
};

/// Minimum of a nonnegative certified polynomial over the line, float
/// precision, via its critical points: near-miss gradient information.
inline double poly_min_float(const Poly<Exact>& f) {
  if (f.degree() <= 0) return f.is_zero() ? 0.0 : to_double(f.coeff(0));
  const Poly<Exact> df = derivative(f);
  if (df.degree() < 1) return to_double(f.coeff(0));
  RootIsolation iso = isolate_roots(df);
  const Poly<Approx> ff = to_float(f);
  double best = std::numeric_limits<double>::infinity();
  IntPoly ds = ip_derivative(iso.squarefree_int);
  const Rat tol(1, Int(1) << 24);
  for (auto iv : iso.intervals) {
    refine_interval_newton(iso.squarefree_int, ds, iv, tol);
    best = std::min(best, ff(to_double((iv.lo + iv.hi) / 2)));
  }
  if (iso.intervals.empty()) best = to_double(f.coeff(0));
  return best;
}

/// Builds a polynomial outside the hypothesis class: odd trials multiply a
/// real-rooted base by an irreducible quadratic; even trials shrink the
/// spacing below one.
inline std::pair<Poly<Exact>, int> converse_instance(const GeneratorSpec& base,
                                                     std::uint64_t trial, bool& nonreal) {
  GeneratorSpec spec = base;
  Rng rng = trial_rng(base.seed ^ 0xC0FFEEull, trial);
  nonreal = (trial % 2 == 1);
  if (nonreal) {
    spec.degree_min = std::max(1, base.degree_min - 2);
    spec.degree_max = std::max(spec.degree_min, base.degree_max - 2);
    RootedPoly<Exact> rp = generate_one(spec, trial);
    // (x - u)^2 + v with v > 0: conjugate complex pair.
    const Rat u = detail::snap_to_grid(rng.uniform01() * 8.0, spec.grid) - 4;
    const Rat v = detail::snap_to_grid(rng.uniform01() * 4.0, spec.grid) + Rat(1, 4);
    Poly<Exact> quad({u * u + v, -2 * u, Rat(1)});
    return {rp.expand() * quad, rp.degree() + 2};
  }
  spec.min_gap = Rat(1, 4);
  spec.gaps.kind = GapDistribution::Kind::UniformExtra;
  spec.gaps.param = 0.5;  // gaps in [1/4, 3/4]: mesh < 1 guaranteed
  RootedPoly<Exact> rp = generate_one(spec, trial);
  return {rp.expand(), rp.degree()};
}

inline TrialRecord run_trial(CampaignId id, const GeneratorSpec& spec,
                             const CampaignParams& params, std::uint64_t trial) {
  TrialRecord rec;
  switch (id) {
    case CampaignId::MainInequality: {
      RootedPoly<Exact> rp = generate_one(spec, trial);
      LaguerreCertificate cert = certify_main_theorem(rp, spec.min_gap);
      if (cert.verdict == Verdict::Certified) {
        rec.outcome = TrialRecord::Outcome::Confirmed;
        rec.near_miss = NearMiss{poly_min_float(cert.fn_poly), trial, "min of functional"};
      } else {
        rec.outcome = TrialRecord::Outcome::Violation;
        rec.witness = ViolationWitness{
            trial,
            "functional negative at x=" + rat_to_string(*cert.witness) +
                " value=" + rat_to_string(*cert.witness_value) + " for p=" + to_string(cert.subject),
            true};  // the certificate itself is exact arithmetic
      }
      break;
    }
    case CampaignId::DiffSpacing: {
      GeneratorSpec s = spec;
      s.min_gap = params.d;
      RootedPoly<Exact> rp = generate_one(s, trial);
      if (rp.degree() < 2) {
        rec.outcome = TrialRecord::Outcome::Skip;
        break;
      }
      SpacingReport rep = check_spacing_preservation(rp, params.d);
      if (!rep.g_real_rooted || !rep.g_mesh_ge_one)
        throw PreconditionError("proved spacing fact failed; implementation bug");
      if (rep.g_mesh_ge_d) {
        rec.outcome = TrialRecord::Outcome::Confirmed;
        double margin = rep.g_mesh.finite
                            ? to_double(rep.g_mesh.mesh_lo) - to_double(params.d)
                            : std::numeric_limits<double>::infinity();
        rec.near_miss = NearMiss{margin, trial, "mesh(diff) - d"};
      } else {
        // Exact re-verification: mesh_ge is already an exact decision.
        rec.outcome = TrialRecord::Outcome::Violation;
        rec.witness = ViolationWitness{
            trial, "mesh(p(x+1)-p(x)) < d for p=" + to_string(rp.expand()), true};
      }
      break;
    }
    case CampaignId::MeasureForward: {
      RootedPoly<Exact> rp = generate_one(spec, trial);
      const int n = rp.degree();
      bool ok = true;
      std::string note;
      for (const Rat& lambda : params.lambdas) {
        MeasureResult md = superlevel_measure_exact(rp, LogKind::LogDerivative, lambda);
        if (!md.pairing_ok || md.total_exact != Rat(n) / lambda ||
            md.vieta_total_exact != md.total_exact) {
          ok = false;
          note = "log-derivative measure mismatch at lambda=" + rat_to_string(lambda) +
                 (md.structural_note.empty() ? "" : "; " + md.structural_note);
          break;
        }
        MeasureResult mf = superlevel_measure_exact(rp, LogKind::ForwardDiff, lambda);
        if (!mf.pairing_ok) {
          rec.tallies.emplace_back("pairing_failures", 1);
          // The pairing can only fail if strict decrease between poles
          // breaks, i.e. some residue is negative, which is impossible
          // under unit spacing; re-verify exactly.
          ResidueLemmaReport rl = check_residue_lemmas(rp);
          if (rl.nonneg_ok)
            throw PreconditionError("pairing failed with nonnegative residues; bug");
          ok = false;
          note = "forward measure pairing failure at lambda=" + rat_to_string(lambda);
          break;
        }
        if (mf.total_exact != mf.vieta_total_exact || mf.total_exact != Rat(n) / lambda) {
          ok = false;
          note = "forward measure mismatch at lambda=" + rat_to_string(lambda);
          break;
        }
      }
      if (ok) {
        rec.outcome = TrialRecord::Outcome::Confirmed;
      } else {
        rec.outcome = TrialRecord::Outcome::Violation;
        rec.witness = ViolationWitness{trial, note + " p=" + to_string(rp.expand()), true};
      }
      break;
    }
    case CampaignId::MeasureConverse: {
      bool nonreal = false;
      auto [p, n] = converse_instance(spec, trial, nonreal);
      rec.tallies.emplace_back(nonreal ? "nonreal_instances" : "smallmesh_instances", 1);
      RationalFunc<Exact> F = build_F(p);
      double max_dev = 0.0;
      double min_dev = std::numeric_limits<double>::infinity();
      for (const Rat& lambda : params.lambdas) {
        MeasureResult m = superlevel_measure_scan(F, lambda);
        const double dev = std::abs(m.total - to_double(Rat(n) / lambda));
        max_dev = std::max(max_dev, dev);
        min_dev = std::min(min_dev, dev);
      }
      // Evidence campaign: every instance "confirms" by completing; an
      // instance matching n/lambda across the whole grid is the
      // interesting case for the converse question.
      rec.outcome = TrialRecord::Outcome::Confirmed;
      if (max_dev < params.interesting_deviation)
        rec.tallies.emplace_back("interesting_all_match", 1);
      rec.near_miss = NearMiss{max_dev, trial, "max |measure - n/lambda| over lambda grid"};
      break;
    }
    case CampaignId::EntireNonneg: {
      Rng rng = trial_rng(spec.seed ^ 0xABCDEFull, trial);
      RootedPoly<Exact> rp = generate_one(spec, trial);
      const Rat b = detail::snap_to_grid(rng.uniform01() * 2.0 * params.b_max, spec.grid) -
                    detail::snap_to_grid(params.b_max, 1);
      PolyTimesExp phi(rp.expand(), b);
      const double lo = to_double(rp.roots().front().location) - params.window_pad;
      const double hi = to_double(rp.roots().back().location) + params.window_pad;
      Theorem34Report rep = check_theorem34(phi, lo, hi, params.grid, to_double(spec.min_gap));
      if (rep.all_nonnegative) {
        rec.outcome = TrialRecord::Outcome::Confirmed;
        rec.near_miss = NearMiss{rep.grid_min, trial, "grid min of functional"};
      } else {
        rec.outcome = TrialRecord::Outcome::Violation;
        bool reverified = (b == 0);  // only the polynomial case re-checks exactly
        rec.witness = ViolationWitness{trial, rep.notes.empty() ? "violation" : rep.notes.front(),
                                       reverified};
      }
      break;
    }
  }
  return rec;
}

}  // namespace detail

/// Runs a campaign of independent trials. Trials are deterministic
/// functions of (seed, trial index); workers partition the index range and
/// results merge in index order, so parallel and serial runs tally
/// identically.
inline CampaignResult run_campaign(CampaignId id, const GeneratorSpec& spec, std::uint64_t trials,
                                   const CampaignParams& params, int workers = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  spec.validate();
  if (workers < 1) workers = 1;
  std::vector<detail::TrialRecord> records(trials);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      try {
        records[t] = detail::run_trial(id, spec, params, t);
      } catch (const std::exception& e) {
        // A generated instance can never violate its own hypothesis class,
        // so an exception here is an implementation fault; surface it as a
        // violation witness rather than crashing the worker.
        detail::TrialRecord rec;
        rec.outcome = detail::TrialRecord::Outcome::Violation;
        rec.witness = ViolationWitness{t, std::string("internal error: ") + e.what(), false};
        rec.tallies.emplace_back("internal_errors", 1);
        records[t] = std::move(rec);
      }
    }
  };
  if (workers == 1 || trials < 2) {
    work(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  CampaignResult out;
  out.id = id;
  out.seed = spec.seed;
  out.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto& rec = records[t];
    switch (rec.outcome) {
      case detail::TrialRecord::Outcome::Confirmed:
        ++out.confirmed;
        break;
      case detail::TrialRecord::Outcome::Violation:
        out.violations.push_back(*rec.witness);
        break;
      case detail::TrialRecord::Outcome::Skip:
        ++out.precondition_skips;
        break;
    }
    if (rec.near_miss) out.near_misses.push_back(*rec.near_miss);
    for (const auto& [k, v] : rec.tallies) out.tallies[k] += v;
  }
  std::stable_sort(out.near_misses.begin(), out.near_misses.end(),
                   [](const NearMiss& a, const NearMiss& b) { return a.margin < b.margin; });
  if (out.near_misses.size() > 10) out.near_misses.resize(10);
  out.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// One-shot exact reproduction of the worked examples: the cubic's
/// functional identities, the residue closed forms, the parametric-family
/// discriminant grid, and the e^{x^2} counterexample value. Any mismatch is
/// reported as a named failure.
struct ReproduceItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproduceReport {
  std::vector<ReproduceItem> items;
  bool all_pass = true;
  double runtime_seconds = 0.0;

  void add(std::string name, bool pass, std::string detail = "") {
    if (!pass) all_pass = false;
    items.push_back({std::move(name), pass, std::move(detail)});
  }
};

inline ReproduceReport reproduce_paper_examples() {
  const auto t0 = std::chrono::steady_clock::now();
  ReproduceReport rep;

  const Poly<Exact> cubic = RootedPoly<Exact>::from_list({Rat(0), Rat(1), Rat(2)}).expand();

  {  // functional at full degree: 72 (x-1)^2
    const Poly<Exact> expect = scale(Poly<Exact>({Rat(-1), Rat(1)}) * Poly<Exact>({Rat(-1), Rat(1)}), Rat(72));
    const Poly<Exact> got = discrete_fn(cubic, 3, Rat(1));
    rep.add("f3_cubic_72_square", got == expect,
            got == expect ? "" : "got " + to_string(got));
  }
  {  // functional one degree low: -12 (x-3)(x-1)^2 (x+1)
    const Poly<Exact> expect =
        scale(Poly<Exact>({Rat(-3), Rat(1)}) * Poly<Exact>({Rat(-1), Rat(1)}) *
                  Poly<Exact>({Rat(-1), Rat(1)}) * Poly<Exact>({Rat(1), Rat(1)}),
              Rat(-12));
    const Poly<Exact> got = discrete_fn(cubic, 2, Rat(1));
    rep.add("f2_cubic_factored", got == expect, got == expect ? "" : "got " + to_string(got));
  }
  {  // pointwise value of the low-degree functional at 4
    const Rat got = eval_fn(cubic, 2, Rat(1), Rat(4));
    rep.add("f2_cubic_at_4", got == -540, got == -540 ? "" : "got " + rat_to_string(got));
  }
  {  // residue closed forms for x(x+1-eps)
    bool ok = true;
    std::string note;
    for (const Rat eps : {Rat(1, 4), Rat(1, 2)}) {
      RootedPoly<Exact> rp =
          RootedPoly<Exact>::from_list({Rat(0), eps - 1});
      PartialFractions<Exact> pf = residues(rp, Direction::Forward);
      // pole order ascending: eps-1 carries -eps/(1-eps), 0 carries (2-eps)/(1-eps)
      const Rat a_at_zero = pf.residues[1];
      const Rat a_at_shift = pf.residues[0];
      if (a_at_zero != (2 - eps) / (1 - eps) || a_at_shift != -eps / (1 - eps)) {
        ok = false;
        note = "eps=" + rat_to_string(eps) + ": got " + rat_to_string(a_at_zero) + ", " +
               rat_to_string(a_at_shift);
        break;
      }
    }
    rep.add("residues_near_unit_spacing", ok, note);
  }
  {  // repeated root: functional still nonnegative, 56x^2+32x+8
    const Poly<Exact> p = RootedPoly<Exact>::from_list({Rat(0), Rat(0), Rat(-1)}).expand();
    const Poly<Exact> expect({Rat(8), Rat(32), Rat(56)});
    const Poly<Exact> got = discrete_fn(p, 3, Rat(1));
    rep.add("f3_double_root", got == expect, got == expect ? "" : "got " + to_string(got));
  }
  {  // complex roots: functional still nonnegative, 32x^2-32x+8
    const Poly<Exact> p = Poly<Exact>({Rat(1), Rat(0), Rat(1)}) * Poly<Exact>({Rat(1), Rat(1)});
    const Poly<Exact> expect({Rat(8), Rat(-32), Rat(32)});
    const Poly<Exact> got = discrete_fn(p, 3, Rat(1));
    rep.add("f3_complex_roots", got == expect, got == expect ? "" : "got " + to_string(got));
  }
  {  // parametric family discriminant grid
    bool ok = true;
    std::string note;
    for (int n : {3, 4, 5}) {
      for (int ai : {-1, 0, 1, 2}) {
        ParametricFamilyResult r = parametric_family_C(n, Rat(ai));
        if (!r.quotient_exact || !r.discriminant_matches) {
          ok = false;
          note = "n=" + std::to_string(n) + " a=" + std::to_string(ai) + ": got " +
                 rat_to_string(r.discriminant) + " expected " +
                 rat_to_string(r.expected_discriminant);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("parametric_family_discriminant", ok, note);
  }
  {  // e^{x^2} counterexample: f_inf(0,1) = -8(e-1)
    const double got = f_infinity(EntireFunc(ExpOfSquare{}), 0.0, 1.0);
    const double expect = -8.0 * (std::exp(1.0) - 1.0);
    const bool ok = std::abs(got - expect) <= 1e-12 * std::abs(expect);
    rep.add("exp_square_counterexample", ok,
            ok ? "" : "got " + std::to_string(got) + " expected " + std::to_string(expect));
  }

  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Open-question probe: a Gaussian-weighted polynomial (order-2, non-minimal
/// type) evaluated through the generic closed-form path. Nothing is
/// asserted; the report is evidence only.
struct GaussianProbeReport {
  double grid_min = 0.0;
  double grid_argmin = 0.0;
};

inline GaussianProbeReport gaussian_probe(double a, double window, int grid) {
  if (!(a > 0)) throw PreconditionError("gaussian probe requires a > 0");
  ClosedForm phi{[a](double x) { return (x * x - 1.0) * std::exp(-a * x * x); },
                 "roots of x^2-1; Gaussian factor exp(-a x^2)"};
  const EntireFunc f = phi;
  GaussianProbeReport rep;
  bool first = true;
  for (int i = 0; i < grid; ++i) {
    const double x = -window + 2 * window * i / (grid - 1);
    const double v = f_infinity(f, x, 1.0);
    if (first || v < rep.grid_min) {
      rep.grid_min = v;
      rep.grid_argmin = x;
      first = false;
    }
  }
  return rep;
}

}  // namespace dlag

#endif  // DLAG_HARNESS_HPP
