// Command-line surface for the discrete Laguerre toolkit.
//
// Exit codes: 0 = success / certified / all confirmed;
//             1 = a mathematical finding (violation, negative verdict,
//                 pairing failure) — the finding is the output, not an error;
//             2 = malformed input or a precondition failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dlag/io.hpp"

namespace {

using namespace dlag;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitError = 2;

struct OutputCtx {
  bool as_json = false;
  std::string command;
  json inputs = json::object();
  json provenance = json::object();
};

void emit(const OutputCtx& ctx, const json& result, const std::string& human) {
  if (ctx.as_json) {
    json out{{"command", ctx.command},
             {"inputs", ctx.inputs},
             {"result", result},
             {"provenance", ctx.provenance}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << human << "\n";
  }
}

/// Inline JSON, @file, or "-" for stdin.
std::string read_poly_source(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open polynomial file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

Rat parse_scalar_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("");
      return Rat(v);
    } catch (...) {
      throw std::invalid_argument("cannot parse scalar '" + text + "'");
    }
  }
}

std::string factored_string(const RootedPoly<Exact>& rp) {
  std::ostringstream os;
  if (rp.leading() != 1) os << rat_to_string(rp.leading()) << " ";
  for (const auto& r : rp.roots()) {
    os << "(x";
    if (r.location > 0)
      os << " - " << rat_to_string(r.location);
    else if (r.location < 0)
      os << " + " << rat_to_string(Rat(-r.location));
    os << ")";
    if (r.multiplicity > 1) os << "^" << r.multiplicity;
  }
  return os.str();
}

ParsedPoly load_poly(const std::string& arg, const std::string& backend_override) {
  ParsedPoly p = parse_poly_text(read_poly_source(arg));
  if (backend_override == "exact") {
    p.exact = true;  // decimals reinterpreted as their exact dyadic values
  } else if (backend_override == "float") {
    p.exact = false;
    p.rooted.reset();
  }
  return p;
}

int default_workers() {
  if (const char* env = std::getenv("DLAG_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

int run(int argc, char** argv) {
  CLI::App app{"discrete Laguerre inequality toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of human-readable output");
  std::string backend_override = "auto";
  app.add_option("--backend", backend_override, "numeric backend override: auto|exact|float")
      ->check(CLI::IsMember({"auto", "exact", "float"}));

  std::string poly_arg, h_arg = "1", at_arg, lambda_arg, a_arg = "0", x_arg = "0";
  int n_arg = 0;

  auto* cmd_mesh = app.add_subcommand("mesh", "root mesh (minimum zero gap) report");
  cmd_mesh->add_option("--poly", poly_arg, "polynomial JSON, @file, or -")->required();

  auto* cmd_fn = app.add_subcommand("fn", "discrete Laguerre functional");
  cmd_fn->add_option("--poly", poly_arg)->required();
  cmd_fn->add_option("--n", n_arg, "weight parameter")->required();
  cmd_fn->add_option("--h", h_arg, "finite-difference step (default 1)");
  bool do_expand = false;
  cmd_fn->add_flag("--expand", do_expand, "print expanded coefficients");
  cmd_fn->add_option("--at", at_arg, "evaluate at a point");

  auto* cmd_certify = app.add_subcommand("certify", "certify the main inequality");
  cmd_certify->add_option("--poly", poly_arg)->required();
  cmd_certify->add_option("--h", h_arg, "spacing hypothesis (default 1)");

  auto* cmd_logderiv = app.add_subcommand("logderiv", "discrete logarithmic derivatives");
  cmd_logderiv->add_option("--poly", poly_arg)->required();
  cmd_logderiv->add_option("--h", h_arg);
  bool do_reverse = false, do_residues = false, do_checks = false;
  cmd_logderiv->add_flag("--reverse", do_reverse, "backward instead of forward difference");
  cmd_logderiv->add_flag("--residues", do_residues, "pole/residue expansion (needs roots input)");
  cmd_logderiv->add_flag("--check", do_checks, "run the residue/spacing/identity checks");

  auto* cmd_measure = app.add_subcommand("measure", "superlevel-set Lebesgue measure");
  cmd_measure->add_option("--poly", poly_arg)->required();
  cmd_measure->add_option("--lambda", lambda_arg, "level (must be > 0)")->required();
  std::string kind_arg = "F", mode_arg = "auto";
  cmd_measure->add_option("--kind", kind_arg, "F (forward difference) or logderiv")
      ->check(CLI::IsMember({"F", "logderiv"}));
  cmd_measure->add_option("--mode", mode_arg, "exact|scan|auto")
      ->check(CLI::IsMember({"exact", "scan", "auto"}));
  double scan_tol = 1e-9;
  cmd_measure->add_option("--scan-tol", scan_tol, "boundary refinement tolerance for scan mode");

  auto* cmd_entire = app.add_subcommand("entire", "entire-function functional");
  cmd_entire->add_option("--poly", poly_arg, "polynomial factor (needed unless --exp-square)");
  std::string b_arg = "0";
  cmd_entire->add_option("--b", b_arg, "exponential growth rate");
  bool exp_square = false;
  cmd_entire->add_flag("--exp-square", exp_square, "use e^{x^2} instead of p e^{bx}");
  double gaussian_a = 0.0;
  cmd_entire->add_option("--gaussian-probe", gaussian_a,
                         "open-question probe: (x^2-1) e^{-a x^2} with this a");
  cmd_entire->add_option("--x", x_arg, "evaluation point");
  cmd_entire->add_option("--h", h_arg);
  bool do_check34 = false;
  double win_lo = 0, win_hi = 0;
  int grid = 1001;
  cmd_entire->add_flag("--check", do_check34, "grid-verify nonnegativity over the window");
  cmd_entire->add_option("--window-lo", win_lo);
  cmd_entire->add_option("--window-hi", win_hi);
  cmd_entire->add_option("--grid", grid);

  auto* cmd_sumlem = app.add_subcommand("sumlem", "partial sum and its integral sandwich");
  cmd_sumlem->add_option("--n", n_arg)->required();
  cmd_sumlem->add_option("--a", a_arg);

  auto* cmd_qn = app.add_subcommand("qn", "exponential-approximant family");
  cmd_qn->add_option("--n", n_arg)->required();
  cmd_qn->add_option("--x", x_arg, "evaluate q_n at x");
  bool qn_report = false;
  double qn_lo = -1, qn_hi = 1;
  std::vector<int> qn_list;
  cmd_qn->add_flag("--report", qn_report, "max-error report over an interval");
  cmd_qn->add_option("--lo", qn_lo);
  cmd_qn->add_option("--hi", qn_hi);
  cmd_qn->add_option("--grid", grid);
  cmd_qn->add_option("--n-list", qn_list, "n values for the report");

  auto* cmd_campaign = app.add_subcommand("campaign", "randomized conjecture-evidence campaign");
  std::string campaign_id;
  cmd_campaign
      ->add_option("--id", campaign_id,
                   "main-inequality|spacing|measure-forward|measure-converse|entire")
      ->required()
      ->check(CLI::IsMember(
          {"main-inequality", "spacing", "measure-forward", "measure-converse", "entire"}));
  std::uint64_t trials = 100, seed = 0;
  cmd_campaign->add_option("--trials", trials)->required();
  cmd_campaign->add_option("--seed", seed, "campaign seed (no implicit time seeds)")->required();
  int deg_min = 2, deg_max = 8, workers = default_workers();
  std::string min_gap_arg = "1", d_arg = "1";
  cmd_campaign->add_option("--degree-min", deg_min);
  cmd_campaign->add_option("--degree-max", deg_max);
  cmd_campaign->add_option("--min-gap", min_gap_arg);
  cmd_campaign->add_option("--d", d_arg, "spacing threshold for the spacing campaign");
  cmd_campaign->add_option("--workers", workers, "worker threads (env DLAG_WORKERS)");

  auto* cmd_reproduce = app.add_subcommand("reproduce", "exactly reproduce the worked examples");
  (void)cmd_reproduce;

  CLI11_PARSE(app, argc, argv);

  OutputCtx ctx;
  ctx.as_json = as_json;
  ctx.provenance["tolerances"] = json::object();

  auto provenance_backend = [&](bool exact) {
    ctx.provenance["backend"] = exact ? "exact" : "float";
  };

  if (app.got_subcommand(cmd_mesh)) {
    ctx.command = "mesh";
    ParsedPoly p = load_poly(poly_arg, backend_override);
    ctx.inputs["poly"] = p.source;
    provenance_backend(p.exact);
    if (!p.exact)
      throw PreconditionError("mesh reports are certified; use the exact backend");
    MeshReport<Exact> rep = p.rooted ? mesh_size(*p.rooted) : mesh_size(p.poly_exact);
    std::ostringstream human;
    if (p.rooted) human << "p = " << factored_string(*p.rooted) << "\n";
    human << "mesh: "
          << (!rep.finite ? std::string("infinite")
                          : (rep.exact ? rat_to_string(rep.mesh_lo)
                                       : "in [" + rat_to_string(rep.mesh_lo) + ", " +
                                             rat_to_string(rep.mesh_hi) + "]"))
          << "  all_real: " << (rep.all_real ? "yes" : "no")
          << "  simple: " << (rep.simple ? "yes" : "no");
    emit(ctx, mesh_json(rep), human.str());
    return kExitOk;
  }

  if (app.got_subcommand(cmd_fn)) {
    ctx.command = "fn";
    ParsedPoly p = load_poly(poly_arg, backend_override);
    const Rat h = parse_scalar_arg(h_arg);
    ctx.inputs = {{"poly", p.source}, {"n", n_arg}, {"h", rat_json(h)}};
    provenance_backend(p.exact);
    json result;
    std::ostringstream human;
    if (!at_arg.empty()) {
      const Rat x = parse_scalar_arg(at_arg);
      ctx.inputs["at"] = rat_json(x);
      if (p.exact) {
        const Rat v = eval_fn(p.poly_exact, n_arg, h, x);
        result["value"] = rat_json(v);
        human << "f_" << n_arg << "(" << rat_to_string(x) << ", " << rat_to_string(h)
              << ") = " << rat_to_string(v);
      } else {
        const double v = eval_fn(p.poly_float, n_arg, to_double(h), to_double(x));
        result["value"] = v;
        human << "f_" << n_arg << " = " << v;
      }
    } else {
      // default to expansion when no point is given
      if (p.exact) {
        const Poly<Exact> fn = discrete_fn(p.poly_exact, n_arg, h);
        result["functional"] = poly_json(fn);
        human << "f_" << n_arg << "(x, " << rat_to_string(h) << ") = " << to_string(fn);
      } else {
        const Poly<Approx> fn = discrete_fn(p.poly_float, n_arg, to_double(h));
        result["functional"] = poly_json(fn);
        human << "f_" << n_arg << " = " << to_string(fn);
      }
    }
    (void)do_expand;
    emit(ctx, result, human.str());
    return kExitOk;
  }

  if (app.got_subcommand(cmd_certify)) {
    ctx.command = "certify";
    ParsedPoly p = load_poly(poly_arg, backend_override);
    const Rat h = parse_scalar_arg(h_arg);
    ctx.inputs = {{"poly", p.source}, {"h", rat_json(h)}};
    provenance_backend(true);
    if (!p.exact)
      throw PreconditionError("certification requires the exact backend");
    LaguerreCertificate cert = p.rooted ? certify_main_theorem(*p.rooted, h)
                                        : certify_main_theorem(p.poly_exact, h);
    std::ostringstream human;
    if (cert.verdict == Verdict::Certified) {
      human << "Certified: functional is nonnegative on the whole line (n=" << cert.n_used
            << ", h=" << rat_to_string(h) << ")";
    } else {
      human << "Violated at x = " << rat_to_string(*cert.witness)
            << " with value " << rat_to_string(*cert.witness_value);
    }
    emit(ctx, certificate_json(cert), human.str());
    return cert.verdict == Verdict::Certified ? kExitOk : kExitFinding;
  }

  if (app.got_subcommand(cmd_logderiv)) {
    ctx.command = "logderiv";
    ParsedPoly p = load_poly(poly_arg, backend_override);
    const Rat h = parse_scalar_arg(h_arg);
    ctx.inputs = {{"poly", p.source}, {"h", rat_json(h)}, {"reverse", do_reverse}};
    provenance_backend(p.exact);
    json result;
    std::ostringstream human;
    int exit_code = kExitOk;
    if (p.exact) {
      RationalFunc<Exact> rf =
          do_reverse ? build_R(p.poly_exact, h) : build_F(p.poly_exact, h);
      result["numerator"] = poly_json(rf.num);
      result["denominator"] = poly_json(rf.den);
      human << (do_reverse ? "R" : "F") << "(x) = (" << to_string(rf.num) << ") / ("
            << to_string(rf.den) << ")";
      if (do_residues) {
        if (!p.rooted)
          throw PreconditionError("exact residues need a roots-form polynomial input");
        PartialFractions<Exact> pf =
            residues(*p.rooted, do_reverse ? Direction::Reverse : Direction::Forward, h);
        json poles = json::array(), res = json::array();
        for (const Rat& a : pf.poles) poles.push_back(rat_json(a));
        for (const Rat& a : pf.residues) res.push_back(rat_json(a));
        result["poles"] = poles;
        result["residues"] = res;
        human << "\npoles:    ";
        for (const Rat& a : pf.poles) human << rat_to_string(a) << " ";
        human << "\nresidues: ";
        for (const Rat& a : pf.residues) human << rat_to_string(a) << " ";
      }
      if (do_checks) {
        if (!p.rooted)
          throw PreconditionError("checks need a roots-form polynomial input");
        ResidueLemmaReport rl = check_residue_lemmas(*p.rooted, h);
        CauchySchwarzReport cs =
            check_cauchy_schwarz(p.poly_exact, default_cs_samples(*p.rooted));
        ProductIdentityReport pi =
            check_product_identity(p.poly_exact, default_cs_samples(*p.rooted));
        result["residue_sums"] = {{"forward", rat_json(rl.sum_forward)},
                                  {"reverse", rat_json(rl.sum_reverse)},
                                  {"equal_degree", rl.sums_equal_degree}};
        result["residue_minima"] = {{"forward", rat_json(rl.min_forward)},
                                    {"reverse", rat_json(rl.min_reverse)},
                                    {"nonnegative", rl.nonneg_ok},
                                    {"mesh_ge_h", rl.mesh_ge_one}};
        result["cauchy_schwarz_ok"] = cs.all_ok;
        result["product_identity_ok"] = pi.all_ok;
        const bool finding =
            !rl.sums_equal_degree || (rl.mesh_ge_one && !rl.nonneg_ok) || !pi.all_ok ||
            (rl.mesh_ge_one && !cs.all_ok);
        human << "\nresidue sums = " << rat_to_string(rl.sum_forward) << ", "
              << rat_to_string(rl.sum_reverse) << " (degree " << rl.n << ")"
              << "\nresidue minima = " << rat_to_string(rl.min_forward) << ", "
              << rat_to_string(rl.min_reverse)
              << "\ncauchy-schwarz ok: " << cs.all_ok
              << "  product identity ok: " << pi.all_ok;
        if (finding) exit_code = kExitFinding;
      }
    } else {
      RationalFunc<Approx> rf =
          do_reverse ? build_R(p.poly_float, to_double(h)) : build_F(p.poly_float, to_double(h));
      result["numerator"] = poly_json(rf.num);
      result["denominator"] = poly_json(rf.den);
      human << (do_reverse ? "R" : "F") << "(x) = (" << to_string(rf.num) << ") / ("
            << to_string(rf.den) << ")";
      if (do_residues) {
        PartialFractions<Approx> pf = residues(
            p.poly_float, do_reverse ? Direction::Reverse : Direction::Forward, to_double(h));
        result["poles"] = pf.poles;
        result["residues"] = pf.residues;
      }
    }
    emit(ctx, result, human.str());
    return exit_code;
  }

  if (app.got_subcommand(cmd_measure)) {
    ctx.command = "measure";
    ParsedPoly p = load_poly(poly_arg, backend_override);
    const Rat lambda = parse_scalar_arg(lambda_arg);
    ctx.inputs = {{"poly", p.source}, {"lambda", rat_json(lambda)}, {"kind", kind_arg}};
    ctx.provenance["tolerances"]["scan"] = scan_tol;
    const LogKind kind = (kind_arg == "F") ? LogKind::ForwardDiff : LogKind::LogDerivative;
    const bool want_exact = (mode_arg == "exact") || (mode_arg == "auto" && p.exact && p.rooted);
    provenance_backend(want_exact);
    MeasureResult m;
    if (want_exact) {
      if (!p.exact || !p.rooted)
        throw PreconditionError("exact measure needs a roots-form exact polynomial");
      m = superlevel_measure_exact(*p.rooted, kind, lambda);
    } else {
      RationalFunc<Exact> rf = (kind == LogKind::ForwardDiff)
                                   ? build_F(p.poly_exact)
                                   : make_rational(derivative(p.poly_exact), p.poly_exact);
      m = superlevel_measure_scan(rf, lambda, Rat(scan_tol));
    }
    std::ostringstream human;
    if (m.method == MeasureMode::ExactRootPairing) {
      if (m.pairing_ok) {
        human << "measure = " << rat_to_string(m.total_exact) << " (exactly "
              << to_double(m.total_exact) << "); vieta cross-check "
              << (m.total_exact == m.vieta_total_exact ? "agrees" : "DISAGREES")
              << "; n/lambda = " << rat_to_string(*m.n_over_lambda);
      } else {
        human << "pairing failure: " << m.structural_note;
      }
    } else {
      human << "measure ~= " << m.total << " (scan, error bound " << m.scan_error_bound
            << ")";
    }
    emit(ctx, measure_json(m), human.str());
    return (m.method == MeasureMode::ExactRootPairing && !m.pairing_ok) ? kExitFinding : kExitOk;
  }

  if (app.got_subcommand(cmd_entire)) {
    ctx.command = "entire";
    const double h = to_double(parse_scalar_arg(h_arg));
    const double x = to_double(parse_scalar_arg(x_arg));
    provenance_backend(false);
    json result;
    std::ostringstream human;
    int code = kExitOk;
    if (gaussian_a > 0.0) {
      GaussianProbeReport rep = gaussian_probe(gaussian_a, 6.0, std::max(grid, 3));
      result = {{"grid_min", rep.grid_min}, {"grid_argmin", rep.grid_argmin}};
      ctx.inputs = {{"gaussian_a", gaussian_a}};
      human << "gaussian probe: grid min " << rep.grid_min << " at x = " << rep.grid_argmin
            << " (evidence only; nothing asserted)";
    } else if (exp_square) {
      ctx.inputs = {{"phi", "exp(x^2)"}, {"x", x}, {"h", h}};
      const double v = f_infinity(EntireFunc(ExpOfSquare{}), x, h);
      result["value"] = v;
      human << "f_inf(" << x << ", " << h << ", e^{x^2}) = " << v;
    } else {
      if (poly_arg.empty()) throw std::invalid_argument("entire: --poly or --exp-square required");
      ParsedPoly p = load_poly(poly_arg, backend_override);
      const Rat b = parse_scalar_arg(b_arg);
      ctx.inputs = {{"poly", p.source}, {"b", rat_json(b)}, {"h", h}};
      PolyTimesExp phi(p.poly_exact, b);
      if (do_check34) {
        ctx.inputs["window"] = json::array({win_lo, win_hi});
        ctx.inputs["grid"] = grid;
        ctx.provenance["tolerances"]["relative"] = 1e-9;
        Theorem34Report rep = check_theorem34(phi, win_lo, win_hi, grid, h);
        result = {{"grid_min", rep.grid_min},
                  {"grid_argmin", rep.grid_argmin},
                  {"candidates", rep.candidates},
                  {"confirmed_violations", rep.confirmed},
                  {"all_nonnegative", rep.all_nonnegative}};
        human << "grid min " << rep.grid_min << " at x = " << rep.grid_argmin << "; "
              << rep.confirmed << " confirmed violations";
        if (!rep.all_nonnegative) code = kExitFinding;
      } else {
        ctx.inputs["x"] = x;
        const double v = f_infinity(EntireFunc(phi), x, h);
        result["value"] = v;
        human << "f_inf(" << x << ", " << h << ") = " << v;
      }
    }
    emit(ctx, result, human.str());
    return code;
  }

  if (app.got_subcommand(cmd_sumlem)) {
    ctx.command = "sumlem";
    const double a = to_double(parse_scalar_arg(a_arg));
    ctx.inputs = {{"n", n_arg}, {"a", a}};
    provenance_backend(false);
    const double partial = sumlem_partial(n_arg, a);
    const auto [lo, hi] = sumlem_bounds(n_arg, a);
    json result{{"partial_sum", partial},
                {"lower_bound", lo},
                {"upper_bound", hi},
                {"bracket_holds", lo <= partial && partial <= hi}};
    std::ostringstream human;
    human << "sum = " << partial << " in [" << lo << ", " << hi << "]"
          << (lo <= partial && partial <= hi ? "" : "  BRACKET FAILS");
    emit(ctx, result, human.str());
    return kExitOk;
  }

  if (app.got_subcommand(cmd_qn)) {
    ctx.command = "qn";
    provenance_backend(false);
    if (qn_report) {
      if (qn_list.empty()) qn_list = {3, 4, 5, 6};
      ctx.inputs = {{"n_list", qn_list}, {"lo", qn_lo}, {"hi", qn_hi}, {"grid", grid}};
      QnReport rep = qn_convergence_report(qn_list, qn_lo, qn_hi, grid);
      json entries = json::array();
      std::ostringstream human;
      for (const auto& e : rep.entries) {
        entries.push_back(json{{"n", e.n}, {"max_error", e.max_error}, {"argmax", e.argmax}});
        human << "n=" << e.n << "  max|q_n - e^x| = " << e.max_error << "\n";
      }
      human << "strictly decreasing: " << (rep.strictly_decreasing ? "yes" : "no");
      emit(ctx, json{{"entries", entries}, {"strictly_decreasing", rep.strictly_decreasing}},
           human.str());
      return kExitOk;
    }
    const double x = to_double(parse_scalar_arg(x_arg));
    ctx.inputs = {{"n", n_arg}, {"x", x}};
    const double v = qn_eval(n_arg, x);
    std::ostringstream human;
    human << "q_" << n_arg << "(" << x << ") = " << v << "   (e^x = " << std::exp(x) << ")";
    emit(ctx, json{{"value", v}, {"exp_x", std::exp(x)}}, human.str());
    return kExitOk;
  }

  if (app.got_subcommand(cmd_campaign)) {
    ctx.command = "campaign";
    GeneratorSpec spec;
    spec.degree_min = deg_min;
    spec.degree_max = deg_max;
    spec.min_gap = parse_scalar_arg(min_gap_arg);
    spec.seed = seed;
    CampaignParams params;
    params.d = parse_scalar_arg(d_arg);
    CampaignId id = CampaignId::MainInequality;
    if (campaign_id == "spacing") {
      id = CampaignId::DiffSpacing;
      if (spec.min_gap < params.d) spec.min_gap = params.d;
    } else if (campaign_id == "measure-forward") {
      id = CampaignId::MeasureForward;
    } else if (campaign_id == "measure-converse") {
      id = CampaignId::MeasureConverse;
    } else if (campaign_id == "entire") {
      id = CampaignId::EntireNonneg;
    }
    ctx.inputs = {{"id", campaign_id},   {"trials", trials},
                  {"seed", seed},        {"degree_min", deg_min},
                  {"degree_max", deg_max}, {"min_gap", rat_json(spec.min_gap)},
                  {"d", rat_json(params.d)}, {"workers", workers}};
    ctx.provenance["backend"] = "exact";
    ctx.provenance["seed"] = seed;
    CampaignResult res = run_campaign(id, spec, trials, params, workers);
    std::ostringstream human;
    human << campaign_name(id) << ": " << res.confirmed << "/" << res.trials << " confirmed, "
          << res.violations.size() << " violations, " << res.precondition_skips
          << " skips in " << res.runtime_seconds << " s";
    for (const auto& [k, v] : res.tallies) human << "\n  " << k << " = " << v;
    if (!res.near_misses.empty()) {
      human << "\n  smallest margins:";
      for (const auto& nm : res.near_misses) human << " " << nm.margin;
    }
    for (const auto& v : res.violations)
      human << "\n  VIOLATION trial " << v.trial << ": " << v.description;
    emit(ctx, campaign_json(res), human.str());
    return res.violations.empty() ? kExitOk : kExitFinding;
  }

  if (app.got_subcommand(cmd_reproduce)) {
    ctx.command = "reproduce";
    ctx.provenance["backend"] = "exact";
    ReproduceReport rep = reproduce_paper_examples();
    std::ostringstream human;
    for (const auto& item : rep.items) {
      human << (item.pass ? "PASS " : "FAIL ") << item.name;
      if (!item.detail.empty()) human << "  (" << item.detail << ")";
      human << "\n";
    }
    human << (rep.all_pass ? "all examples reproduced exactly" : "MISMATCH — see failures")
          << " in " << rep.runtime_seconds << " s";
    emit(ctx, reproduce_json(rep), human.str());
    return rep.all_pass ? kExitOk : kExitFinding;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dlag::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
