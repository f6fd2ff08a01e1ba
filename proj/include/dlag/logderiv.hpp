#ifndef DLAG_LOGDERIV_HPP
#define DLAG_LOGDERIV_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlag/laguerre.hpp"
#include "dlag/poly.hpp"
#include "dlag/realroots.hpp"
#include "dlag/scalar.hpp"

namespace dlag {

/// Quotient of two polynomials. On the exact backend it is kept reduced
/// (numerator and denominator coprime, denominator with positive leading
/// coefficient), so its poles are exactly the real roots of the denominator.
template <class B>
struct RationalFunc {
  Poly<B> num;
  Poly<B> den = Poly<B>::constant(typename B::Scalar(1));

  typename B::Scalar operator()(const typename B::Scalar& x) const {
    const auto d = den(x);
    if (d == typename B::Scalar(0)) throw PreconditionError("evaluation at a pole");
    return num(x) / d;
  }
};

inline RationalFunc<Exact> make_rational(Poly<Exact> num, Poly<Exact> den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (num.is_zero()) return {Poly<Exact>(), Poly<Exact>::constant(Rat(1))};
  Poly<Exact> g = gcd(num, den);
  if (g.degree() > 0 || g.coeff(0) != 1) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  if (den.leading() < 0) {
    num = scale(num, Rat(-1));
    den = scale(den, Rat(-1));
  }
  return {std::move(num), std::move(den)};
}

inline RationalFunc<Approx> make_rational(Poly<Approx> num, Poly<Approx> den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  return {std::move(num), std::move(den)};
}

/// Formal quotient-rule derivative, re-reduced on the exact backend.
inline RationalFunc<Exact> derivative(const RationalFunc<Exact>& rf) {
  return make_rational(derivative(rf.num) * rf.den - rf.num * derivative(rf.den),
                       rf.den * rf.den);
}

/// Forward discrete logarithmic derivative (p(x+h) - p(x)) / (h p(x)).
template <class B>
RationalFunc<B> build_F(const Poly<B>& p, const typename B::Scalar& h = typename B::Scalar(1)) {
  using S = typename B::Scalar;
  if (p.degree() < 1) throw PreconditionError("discrete log derivative of a constant");
  if (h == S(0)) throw PreconditionError("discrete log derivative requires h != 0");
  return make_rational(shift(p, h) - p, scale(p, h));
}

/// Reverse discrete logarithmic derivative (p(x) - p(x-h)) / (h p(x)).
template <class B>
RationalFunc<B> build_R(const Poly<B>& p, const typename B::Scalar& h = typename B::Scalar(1)) {
  using S = typename B::Scalar;
  if (p.degree() < 1) throw PreconditionError("discrete log derivative of a constant");
  if (h == S(0)) throw PreconditionError("discrete log derivative requires h != 0");
  return make_rational(p - shift(p, -h), scale(p, h));
}

enum class Direction { Forward, Reverse };

/// Pole/residue expansion sum_k residues[k] / (x - poles[k]) + polynomial
/// part (identically zero for the discrete log derivatives, whose numerator
/// degree is strictly below the denominator degree).
template <class B>
struct PartialFractions {
  using Scalar = typename B::Scalar;
  std::vector<Scalar> poles;     // ascending
  std::vector<Scalar> residues;  // matching order
  Poly<B> polynomial_part;

  Scalar operator()(const Scalar& x) const {
    Scalar acc = polynomial_part.is_zero() ? Scalar(0) : polynomial_part(x);
    for (std::size_t k = 0; k < poles.size(); ++k) acc += residues[k] / (x - poles[k]);
    return acc;
  }
};

/// Residues of the unreduced discrete log derivative at each (simple) root:
///   forward  A_k =  p(a_k + h) / (h p'(a_k)),
///   reverse  B_k = -p(a_k - h) / (h p'(a_k)).
/// Requires simple roots (the closed form divides by p'(a_k)).
inline PartialFractions<Exact> residues(const RootedPoly<Exact>& rp, Direction dir,
                                        const Rat& h = Rat(1)) {
  if (h == 0) throw PreconditionError("residues require h != 0");
  if (rp.degree() < 1) throw PreconditionError("residues of a constant");
  if (!rp.simple()) throw PreconditionError("residues require simple roots");
  const Poly<Exact> p = rp.expand();
  const Poly<Exact> dp = derivative(p);
  PartialFractions<Exact> out;
  for (const auto& r : rp.roots()) {
    const Rat slope = dp(r.location);
    Rat value = (dir == Direction::Forward) ? p(r.location + h) / (h * slope)
                                            : -p(r.location - h) / (h * slope);
    out.poles.push_back(r.location);
    out.residues.push_back(std::move(value));
  }
  return out;
}

/// Float fallback for coefficient input: roots are Sturm-isolated and
/// refined to 1e-12, then the closed form is evaluated in double.
inline PartialFractions<Approx> residues(const Poly<Approx>& p, Direction dir, double h = 1.0) {
  if (h == 0.0) throw PreconditionError("residues require h != 0");
  const Poly<Exact> pe = to_exact(p);
  RootIsolation iso = isolate_roots(pe);
  if (iso.max_multiplicity_exceeds_one()) throw PreconditionError("residues require simple roots");
  if (iso.real_count_with_multiplicity() != pe.degree())
    throw PreconditionError("residues require all roots real");
  const Rat tol(1, Int(1) << 40);
  detail::IntPoly ds = detail::ip_derivative(iso.squarefree_int);
  PartialFractions<Approx> out;
  const Poly<Approx> dp = derivative(p);
  for (auto iv : iso.intervals) {
    detail::refine_interval_newton(iso.squarefree_int, ds, iv, tol);
    const double root = to_double((iv.lo + iv.hi) / 2);
    const double slope = dp(root);
    const double value = (dir == Direction::Forward) ? p(root + h) / (h * slope)
                                                     : -p(root - h) / (h * slope);
    out.poles.push_back(root);
    out.residues.push_back(value);
  }
  return out;
}

/// Exact residue facts: the sums always equal deg p; the minima are
/// nonnegative whenever the mesh is at least one.
struct ResidueLemmaReport {
  int n = 0;
  Rat sum_forward, sum_reverse;
  Rat min_forward, min_reverse;
  bool sums_equal_degree = false;
  bool mesh_ge_one = false;
  bool nonneg_ok = false;  // min >= 0; only guaranteed when mesh_ge_one
};

inline ResidueLemmaReport check_residue_lemmas(const RootedPoly<Exact>& rp, const Rat& h = Rat(1)) {
  ResidueLemmaReport rep;
  rep.n = rp.degree();
  PartialFractions<Exact> fwd = residues(rp, Direction::Forward, h);
  PartialFractions<Exact> rev = residues(rp, Direction::Reverse, h);
  rep.sum_forward = 0;
  rep.sum_reverse = 0;
  for (const Rat& a : fwd.residues) rep.sum_forward += a;
  for (const Rat& b : rev.residues) rep.sum_reverse += b;
  rep.min_forward = *std::min_element(fwd.residues.begin(), fwd.residues.end());
  rep.min_reverse = *std::min_element(rev.residues.begin(), rev.residues.end());
  rep.sums_equal_degree = (rep.sum_forward == rep.n) && (rep.sum_reverse == rep.n);
  auto gap = rp.min_gap();
  rep.mesh_ge_one = !gap || *gap >= h;
  rep.nonneg_ok = rep.min_forward >= 0 && rep.min_reverse >= 0;
  return rep;
}

/// Margins of the Cauchy-Schwarz-type bound at sample points:
/// F(x)^2 + n F'(x) and R(x)^2 + n R'(x), both <= 0 under unit spacing.
struct CauchySchwarzReport {
  int n = 0;
  std::vector<Rat> samples;
  std::vector<Rat> forward_margins;
  std::vector<Rat> reverse_margins;
  bool all_ok = true;
};

inline CauchySchwarzReport check_cauchy_schwarz(const Poly<Exact>& p,
                                                const std::vector<Rat>& samples) {
  CauchySchwarzReport rep;
  rep.n = p.degree();
  const RationalFunc<Exact> F = build_F(p);
  const RationalFunc<Exact> R = build_R(p);
  const RationalFunc<Exact> dF = derivative(F);
  const RationalFunc<Exact> dR = derivative(R);
  for (const Rat& x : samples) {
    if (p(x) == 0) throw PreconditionError("cauchy-schwarz sample at a root of p");
    const Rat f = F(x), r = R(x);
    Rat mf = f * f + rep.n * dF(x);
    Rat mr = r * r + rep.n * dR(x);
    if (mf > 0 || mr > 0) rep.all_ok = false;
    rep.samples.push_back(x);
    rep.forward_margins.push_back(std::move(mf));
    rep.reverse_margins.push_back(std::move(mr));
  }
  return rep;
}

/// Midpoints between consecutive roots plus one unit beyond each extreme:
/// one sample on every branch of F between poles.
inline std::vector<Rat> default_cs_samples(const RootedPoly<Exact>& rp) {
  std::vector<Rat> samples;
  const auto& roots = rp.roots();
  if (roots.empty()) return samples;
  samples.push_back(roots.front().location - 1);
  for (std::size_t i = 1; i < roots.size(); ++i)
    samples.push_back((roots[i - 1].location + roots[i].location) / 2);
  samples.push_back(roots.back().location + 1);
  return samples;
}

/// Algebraic product identity, valid for any p (real-rooted or not):
/// F(x) R(x) - (F(x) - R(x)) - [p(x)^2 - p(x+1) p(x-1)] / p(x)^2 == 0.
struct ProductIdentityReport {
  std::vector<Rat> samples;
  std::vector<Rat> residuals;  // all exactly zero when the identity holds
  bool all_ok = true;
};

inline ProductIdentityReport check_product_identity(const Poly<Exact>& p,
                                                    const std::vector<Rat>& samples) {
  if (p.degree() < 1) throw PreconditionError("product identity requires nonconstant p");
  ProductIdentityReport rep;
  for (const Rat& x : samples) {
    const Rat px = p(x);
    if (px == 0) throw PreconditionError("product identity sample at a root of p");
    const Rat up = p(x + 1), dn = p(x - 1);
    const Rat F = (up - px) / px;
    const Rat R = (px - dn) / px;
    Rat residual = F * R - (F - R) - (px * px - up * dn) / (px * px);
    if (residual != 0) rep.all_ok = false;
    rep.samples.push_back(x);
    rep.residuals.push_back(std::move(residual));
  }
  return rep;
}

/// Forward-difference spacing report: g = p(x+1) - p(x) stays real-rooted
/// with unit spacing whenever p has unit spacing (proved); whether the
/// full spacing d carries over is open-conjecture evidence.
struct SpacingReport {
  Poly<Exact> g;
  bool g_real_rooted = false;
  bool g_simple = false;
  bool g_mesh_ge_one = false;  // proved under the preconditions; false flags a bug
  bool g_mesh_ge_d = false;    // recorded, not asserted
  MeshReport<Exact> g_mesh;
  Rat d;
};

inline SpacingReport check_spacing_preservation(const RootedPoly<Exact>& rp, const Rat& d) {
  if (d < 1) throw PreconditionError("spacing check requires d >= 1");
  if (rp.degree() < 2) throw PreconditionError("spacing check requires deg >= 2");
  if (!mesh_ge(rp, d)) throw PreconditionError("spacing check requires mesh >= d");
  SpacingReport rep;
  rep.d = d;
  rep.g = forward_difference(rp.expand(), Rat(1));
  RootIsolation iso = isolate_roots(rep.g);
  rep.g_real_rooted = (iso.real_count_with_multiplicity() == rep.g.degree());
  rep.g_simple = !iso.max_multiplicity_exceeds_one();
  rep.g_mesh = mesh_size(rep.g);
  rep.g_mesh_ge_one = mesh_ge(rep.g, Rat(1));
  rep.g_mesh_ge_d = (d == 1) ? rep.g_mesh_ge_one : mesh_ge(rep.g, d);
  return rep;
}

enum class MeasureMode { ExactRootPairing, NumericScan };
enum class LogKind { ForwardDiff, LogDerivative };

/// Lebesgue measure of a superlevel set {x : rf(x) >= lambda}, lambda > 0.
///
/// ExactRootPairing certifies the structure exactly: the level polynomial
/// num - lambda*den has one simple real root in the gap to the right of
/// each pole and no others, making the set a union of (pole, root]
/// intervals whose total length telescopes to an exact rational.
/// NumericScan makes no structural assumption: it isolates every boundary
/// point (roots of the level polynomial and poles), decides the sign of
/// rf - lambda exactly between consecutive boundary points, and sums
/// refined interval lengths in double.
struct MeasureResult {
  MeasureMode method = MeasureMode::ExactRootPairing;
  Rat lambda;
  bool pairing_ok = false;           // exact mode only
  std::string structural_note;       // set when pairing fails
  std::vector<std::pair<double, double>> intervals;
  Rat total_exact;                   // exact mode
  Rat vieta_total_exact;             // exact mode
  double total = 0.0;
  double vieta_total = 0.0;
  double scan_error_bound = 0.0;     // scan mode: boundary refinement slack
  std::optional<Rat> n_over_lambda;  // when the source degree is known
};

inline MeasureResult superlevel_measure_exact(const RootedPoly<Exact>& rp, LogKind kind,
                                              const Rat& lambda, const Rat& h = Rat(1)) {
  if (lambda <= 0) throw PreconditionError("superlevel measure requires lambda > 0");
  if (rp.degree() < 1) throw PreconditionError("superlevel measure requires nonconstant p");
  const Poly<Exact> p = rp.expand();
  const int n = p.degree();
  RationalFunc<Exact> rf;
  if (kind == LogKind::ForwardDiff) {
    if (!rp.simple()) throw PreconditionError("forward-diff measure requires simple roots");
    rf = build_F(p, h);
  } else {
    rf = make_rational(derivative(p), p);
  }

  MeasureResult out;
  out.method = MeasureMode::ExactRootPairing;
  out.lambda = lambda;
  out.n_over_lambda = Rat(n) / lambda;

  // Poles of the reduced function: the roots of p that survive reduction.
  std::vector<Rat> poles;
  for (const auto& r : rp.roots())
    if (rf.den(r.location) == 0) poles.push_back(r.location);
  const int m = static_cast<int>(poles.size());
  if (m != rf.den.degree()) {
    out.structural_note = "reduced denominator has roots outside the root list";
    return out;
  }

  const Poly<Exact> level = rf.num - scale(rf.den, lambda);
  // vieta_total: sum of all level-polynomial roots minus sum of denominator
  // roots, straight from coefficient ratios.
  out.vieta_total_exact = (-level.coeff(level.degree() - 1) / level.leading()) -
                          (-rf.den.coeff(rf.den.degree() - 1) / rf.den.leading());
  out.vieta_total = to_double(out.vieta_total_exact);
  if (level.degree() != m) {
    out.structural_note = "level polynomial degree mismatch";
    return out;
  }

  RootIsolation iso = isolate_roots(level);
  if (iso.real_count_with_multiplicity() != m || iso.max_multiplicity_exceeds_one()) {
    out.structural_note = "level polynomial is not simply real-rooted";
    return out;
  }

  // Refine each level-root interval until it sits strictly inside one pole
  // gap. Level roots never coincide with poles (numerator and denominator
  // are coprime), so this terminates.
  detail::IntPoly ds = detail::ip_derivative(iso.squarefree_int);
  auto gap_of = [&](const IsolationInterval<Exact>& iv) -> int {
    // Gap g means (poles[g-1], poles[g]) for g in 1..m-1, and g == m means
    // (poles[m-1], +inf); g == 0 means (-inf, poles[0]).
    int g = 0;
    while (g < m && poles[static_cast<std::size_t>(g)] < iv.lo) ++g;
    // check containment: iv.hi below next pole
    if (g < m && !(iv.hi < poles[static_cast<std::size_t>(g)])) return -1;  // straddles
    return g;
  };
  std::vector<int> assignment;
  for (auto& iv : iso.intervals) {
    int g = gap_of(iv);
    int guard = 0;
    while (g < 0 && guard < 512) {
      detail::refine_interval_newton(iso.squarefree_int, ds, iv, (iv.hi - iv.lo) / 16);
      g = gap_of(iv);
      ++guard;
    }
    if (g < 0) {
      out.structural_note = "level root could not be separated from a pole";
      return out;
    }
    assignment.push_back(g);
  }
  // Expect exactly one root in each right-gap 1..m and none left of the
  // first pole.
  std::vector<int> per_gap(static_cast<std::size_t>(m) + 1, 0);
  for (int g : assignment) ++per_gap[static_cast<std::size_t>(g)];
  bool ok = (per_gap[0] == 0);
  for (int g = 1; g <= m; ++g) ok = ok && per_gap[static_cast<std::size_t>(g)] == 1;
  out.pairing_ok = ok;
  if (!ok) {
    out.structural_note = "pairing failure: level roots are not one-per-gap";
    return out;
  }

  // Certified pairing: total = sum over pairs (x_k - pole_k); the root sum
  // telescopes to the level polynomial's Vieta sum because every root is
  // paired.
  Rat pole_sum = 0;
  for (const Rat& a : poles) pole_sum += a;
  const Rat root_sum = -level.coeff(level.degree() - 1) / level.leading();
  out.total_exact = root_sum - pole_sum;
  out.total = to_double(out.total_exact);

  // Display intervals with refined right endpoints.
  const Rat display_tol(1, Int(1) << 34);
  for (std::size_t k = 0; k < iso.intervals.size(); ++k) {
    auto iv = iso.intervals[k];
    detail::refine_interval_newton(iso.squarefree_int, ds, iv, display_tol);
    const double x = to_double((iv.lo + iv.hi) / 2);
    out.intervals.emplace_back(to_double(poles[static_cast<std::size_t>(assignment[k]) - 1]), x);
  }
  std::sort(out.intervals.begin(), out.intervals.end());
  return out;
}

/// Sign-scan measure for rational functions outside the monotone
/// hypothesis class. All boundary points live inside the Cauchy bounds of
/// the level polynomial and the denominator, so the set is compactly
/// contained and the tail contribution is exactly zero.
inline MeasureResult superlevel_measure_scan(const RationalFunc<Exact>& rf, const Rat& lambda,
                                             const Rat& tol = Rat(1, Int(1000000000))) {
  if (lambda <= 0) throw PreconditionError("superlevel measure requires lambda > 0");
  MeasureResult out;
  out.method = MeasureMode::NumericScan;
  out.lambda = lambda;

  const Poly<Exact> level = rf.num - scale(rf.den, lambda);
  if (level.is_zero()) throw PreconditionError("rf is identically lambda");
  if (level.degree() == rf.den.degree() && rf.den.degree() >= 1) {
    out.vieta_total_exact = (-level.coeff(level.degree() - 1) / level.leading()) -
                            (-rf.den.coeff(rf.den.degree() - 1) / rf.den.leading());
    out.vieta_total = to_double(out.vieta_total_exact);
  }

  // The set is bounded iff rf - lambda is negative near both infinities.
  {
    const int lead = sign_of(level.leading()) * sign_of(rf.den.leading());
    const int parity = (level.degree() - rf.den.degree()) % 2 == 0 ? 1 : -1;
    if (lead > 0 || lead * parity > 0)
      throw PreconditionError("superlevel set is unbounded; its measure is infinite");
  }

  // Boundary points: real roots of the level polynomial and the poles.
  struct Boundary {
    Rat lo, hi;
  };
  std::vector<Boundary> boundaries;
  auto add_roots = [&](const Poly<Exact>& q) {
    if (q.degree() < 1) return;
    RootIsolation iso = isolate_roots(q);
    detail::IntPoly ds = detail::ip_derivative(iso.squarefree_int);
    for (auto iv : iso.intervals) {
      detail::refine_interval_newton(iso.squarefree_int, ds, iv, tol);
      boundaries.push_back({iv.lo, iv.hi});
    }
  };
  add_roots(level);
  add_roots(rf.den);
  std::sort(boundaries.begin(), boundaries.end(),
            [](const Boundary& a, const Boundary& b) { return a.lo + a.hi < b.lo + b.hi; });

  if (boundaries.empty()) {
    // No boundary: the sign of rf - lambda is constant; at infinity it is
    // the sign of the leading behavior. The set is empty or the whole
    // line; the whole line has infinite measure and cannot occur for
    // lambda > 0 unless rf is constant >= lambda.
    const Rat at0 = rf.den(Rat(0)) != 0 ? rf(Rat(0)) : Rat(0);
    if (at0 >= lambda) throw PreconditionError("superlevel set has infinite measure");
    out.total = 0.0;
    return out;
  }

  // Decide the sign of rf - lambda between consecutive boundary midpoints
  // exactly: sign(level * den) at a rational sample.
  auto in_set = [&](const Rat& x) {
    return sign_of(level(x)) * sign_of(rf.den(x)) > 0;
  };
  out.scan_error_bound = 0.0;
  for (const auto& b : boundaries) out.scan_error_bound += to_double(b.hi - b.lo);
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    const Rat left = (boundaries[i].lo + boundaries[i].hi) / 2;
    const Rat right = (boundaries[i + 1].lo + boundaries[i + 1].hi) / 2;
    if (!(left < right)) continue;
    const Rat mid = (left + right) / 2;
    if (in_set(mid)) {
      out.total += to_double(right - left);
      out.intervals.emplace_back(to_double(left), to_double(right));
    }
  }
  return out;
}

}  // namespace dlag

#endif  // DLAG_LOGDERIV_HPP
