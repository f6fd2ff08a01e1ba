#ifndef DLAG_ENTIRE_HPP
#define DLAG_ENTIRE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dlag/laguerre.hpp"
#include "dlag/poly.hpp"
#include "dlag/realroots.hpp"
#include "dlag/scalar.hpp"

namespace dlag {

/// phi(x) = p(x) * e^(b x). Real zeros are exactly the roots of p, so the
/// entire-function mesh equals the polynomial mesh. Keeps both the exact
/// polynomial (for b == 0 re-verification) and a float copy for scans.
struct PolyTimesExp {
  Poly<Exact> p;
  Rat b = 0;
  Poly<Approx> p_float;

  PolyTimesExp() = default;
  PolyTimesExp(Poly<Exact> poly, Rat growth)
      : p(std::move(poly)), b(std::move(growth)), p_float(to_float(p)) {}

  double operator()(double x) const { return p_float(x) * std::exp(to_double(b) * x); }
};

/// phi(x) = e^(x^2): zero-free, order-2 maximal type; the standard example
/// outside the hypothesis class.
struct ExpOfSquare {
  double operator()(double x) const { return std::exp(x * x); }
};

/// Arbitrary evaluator with a note describing its zero set.
struct ClosedForm {
  std::function<double(double)> f;
  std::string zero_set_description;

  double operator()(double x) const { return f(x); }
};

using EntireFunc = std::variant<PolyTimesExp, ExpOfSquare, ClosedForm>;

inline double eval_entire(const EntireFunc& phi, double x) {
  return std::visit([&](const auto& f) { return f(x); }, phi);
}

/// Unit-weight discrete functional for entire functions:
///   [phi(x+h) - phi(x-h)]^2 - 4 phi(x) [phi(x+h) - 2 phi(x) + phi(x-h)].
inline double f_infinity(const EntireFunc& phi, double x, double h) {
  if (h == 0.0) throw PreconditionError("f_infinity requires h != 0");
  const double up = eval_entire(phi, x + h);
  const double mid = eval_entire(phi, x);
  const double dn = eval_entire(phi, x - h);
  const double sym = up - dn;
  return sym * sym - 4.0 * mid * (up - 2.0 * mid + dn);
}

/// Exact value of the same functional for the b == 0 polynomial case.
inline Rat f_infinity_exact(const Poly<Exact>& p, const Rat& x, const Rat& h) {
  const Rat up = p(x + h);
  const Rat mid = p(x);
  const Rat dn = p(x - h);
  const Rat sym = up - dn;
  return sym * sym - 4 * mid * (up - 2 * mid + dn);
}

namespace detail {

inline std::uint64_t n_to_n(int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::uint64_t>(n);
  return r;
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

inline void check_sum_preconditions(int n, double a) {
  if (n < 2 || n > 8) throw PreconditionError("n must be between 2 and 8 (desk scale)");
  const double c = n * std::log(static_cast<double>(n));
  if (c * (1 + n) + a <= 0.0) throw PreconditionError("first denominator is not positive");
}

}  // namespace detail

/// Partial sum sum_{k=1..n^n} 1 / (n ln(n) (k+n) + a), compensated
/// summation, smallest terms first. The full sequence tends to 1.
inline double sumlem_partial(int n, double a) {
  detail::check_sum_preconditions(n, a);
  const double c = n * std::log(static_cast<double>(n));
  const std::uint64_t terms = detail::n_to_n(n);
  detail::KahanSum acc;
  for (std::uint64_t k = terms; k >= 1; --k) {
    acc.add(1.0 / (c * (static_cast<double>(k) + n) + a));
  }
  return acc.sum;
}

/// Integral sandwich around the partial sum: the terms decrease in k, so
///   integral_1^{N+1} f <= sum_{k=1..N} f(k) <= f(1) + integral_1^N f,
/// with f(t) = 1/(c (t+n) + a) and antiderivative ln(c (t+n) + a)/c.
/// Both bounds tend to 1.
inline std::pair<double, double> sumlem_bounds(int n, double a) {
  detail::check_sum_preconditions(n, a);
  const double c = n * std::log(static_cast<double>(n));
  const double N = static_cast<double>(detail::n_to_n(n));
  auto integral = [&](double t0, double t1) {
    return (std::log(c * (t1 + n) + a) - std::log(c * (t0 + n) + a)) / c;
  };
  const double lo = integral(1.0, N + 1.0);
  const double hi = 1.0 / (c * (1.0 + n) + a) + integral(1.0, N);
  return {lo, hi};
}

/// q_n(x) = prod_{k=1..n^n} (1 + x / (n ln(n) (k+n))), evaluated in the
/// log domain with sign tracking; the n^n coefficients never materialize.
/// q_n(0) = 1 exactly; the family approaches e^x on compact sets.
inline double qn_eval(int n, double x) {
  if (n < 2 || n > 8) throw PreconditionError("n must be between 2 and 8 (desk scale)");
  if (x == 0.0) return 1.0;
  const double c = n * std::log(static_cast<double>(n));
  const std::uint64_t terms = detail::n_to_n(n);
  detail::KahanSum acc;
  std::uint64_t negatives = 0;
  for (std::uint64_t k = terms; k >= 1; --k) {
    const double t = x / (c * (static_cast<double>(k) + n));
    const double factor = 1.0 + t;
    if (factor == 0.0) return 0.0;
    if (factor < 0.0) {
      ++negatives;
      acc.add(std::log(-factor));
    } else {
      acc.add(std::log1p(t));
    }
  }
  const double magnitude = std::exp(acc.sum);
  return (negatives % 2 == 0) ? magnitude : -magnitude;
}

struct QnReportEntry {
  int n = 0;
  double max_error = 0.0;
  double argmax = 0.0;
};

struct QnReport {
  std::vector<QnReportEntry> entries;
  bool strictly_decreasing = true;  // recorded evidence, not a guarantee
};

/// Max of |q_n(x) - e^x| over an evaluation grid, per n.
inline QnReport qn_convergence_report(const std::vector<int>& n_list, double lo, double hi,
                                      int grid) {
  if (!(lo <= hi)) throw PreconditionError("qn report requires lo <= hi");
  if (grid < 1) throw PreconditionError("qn report requires a positive grid");
  QnReport rep;
  for (int n : n_list) {
    QnReportEntry e;
    e.n = n;
    for (int i = 0; i < grid; ++i) {
      const double x = (grid == 1) ? lo : lo + (hi - lo) * i / (grid - 1);
      const double err = std::abs(qn_eval(n, x) - std::exp(x));
      if (err > e.max_error) {
        e.max_error = err;
        e.argmax = x;
      }
    }
    rep.entries.push_back(e);
  }
  for (std::size_t i = 1; i < rep.entries.size(); ++i)
    if (!(rep.entries[i].max_error < rep.entries[i - 1].max_error))
      rep.strictly_decreasing = false;
  return rep;
}

struct Theorem34Report {
  double grid_min = 0.0;
  double grid_argmin = 0.0;
  long candidates = 0;          // grid points below -tolerance before refinement
  long confirmed = 0;           // violations surviving refinement (and exact recheck when b == 0)
  bool all_nonnegative = true;  // no confirmed violations
  std::vector<std::string> notes;
};

/// Grid verification that the unit-weight functional of p(x) e^(bx) stays
/// nonnegative on the window, with a shrinking-grid re-check ladder and an
/// exact rational re-evaluation when b == 0. This is refinement-backed
/// sampling with an explicit tolerance, not a certification: tolerance is
/// 1e-9 times the local squared magnitude scale.
inline Theorem34Report check_theorem34(const PolyTimesExp& phi, double window_lo,
                                       double window_hi, int grid, double h) {
  if (!(window_lo < window_hi)) throw PreconditionError("empty window");
  if (grid < 2) throw PreconditionError("grid must have at least 2 points");
  if (!(h > 0.0)) throw PreconditionError("h must be positive");
  {
    // Hypothesis check, exact: all roots real and spaced at least h.
    if (phi.p.degree() < 1) throw PreconditionError("requires nonconstant p");
    RootIsolation iso = isolate_roots(phi.p);
    if (iso.real_count_with_multiplicity() != phi.p.degree())
      throw PreconditionError("requires all roots of p real");
    if (!mesh_ge(phi.p, Rat(h))) throw PreconditionError("requires mesh >= h");
  }
  Theorem34Report rep;
  const EntireFunc as_entire = phi;
  auto tolerance_at = [&](double x) {
    const double m = std::max(
        {1.0, std::abs(eval_entire(as_entire, x - h)), std::abs(eval_entire(as_entire, x)),
         std::abs(eval_entire(as_entire, x + h))});
    return 1e-9 * m * m;
  };
  const double step = (window_hi - window_lo) / (grid - 1);
  std::vector<std::pair<double, double>> candidates;
  bool first = true;
  for (int i = 0; i < grid; ++i) {
    const double x = window_lo + step * i;
    const double v = f_infinity(as_entire, x, h);
    if (first || v < rep.grid_min) {
      rep.grid_min = v;
      rep.grid_argmin = x;
      first = false;
    }
    if (v < -tolerance_at(x)) candidates.emplace_back(x, v);
  }
  rep.candidates = static_cast<long>(candidates.size());
  for (const auto& [x0, v0] : candidates) {
    // Refinement ladder: re-scan two shrinking neighborhoods.
    double worst = v0;
    double worst_x = x0;
    double radius = step;
    for (int level = 0; level < 2; ++level) {
      for (int i = 0; i <= 64; ++i) {
        const double x = worst_x - radius + (2 * radius) * i / 64.0;
        const double v = f_infinity(as_entire, x, h);
        if (v < worst) {
          worst = v;
          worst_x = x;
        }
      }
      radius /= 8.0;
    }
    if (worst >= -tolerance_at(worst_x)) continue;  // numerical artifact
    if (phi.b == 0) {
      // Exact re-evaluation at the (dyadic) candidate point.
      const Rat exact = f_infinity_exact(phi.p, Rat(worst_x), Rat(h));
      if (exact >= 0) {
        rep.notes.push_back("float candidate at x=" + std::to_string(worst_x) +
                            " refuted by exact re-evaluation");
        continue;
      }
    }
    ++rep.confirmed;
    rep.notes.push_back("violation near x=" + std::to_string(worst_x) +
                        " value=" + std::to_string(worst));
  }
  rep.all_nonnegative = (rep.confirmed == 0);
  return rep;
}

}  // namespace dlag

#endif  // DLAG_ENTIRE_HPP
