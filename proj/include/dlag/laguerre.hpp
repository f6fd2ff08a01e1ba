#ifndef DLAG_LAGUERRE_HPP
#define DLAG_LAGUERRE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dlag/poly.hpp"
#include "dlag/realroots.hpp"
#include "dlag/scalar.hpp"

namespace dlag {

/// (p')^2 - p'' p. Nonnegative on the line for every real-rooted p.
template <class B>
Poly<B> classical_laguerre(const Poly<B>& p) {
  Poly<B> d1 = derivative(p);
  Poly<B> d2 = derivative(d1);
  return d1 * d1 - d2 * p;
}

/// (n-1)(p')^2 - n p'' p, the degree-aware sharpening.
template <class B>
Poly<B> sharpened_laguerre(const Poly<B>& p, int n) {
  using S = typename B::Scalar;
  if (n < 1) throw PreconditionError("sharpened_laguerre requires n >= 1");
  Poly<B> d1 = derivative(p);
  Poly<B> d2 = derivative(d1);
  return scale(d1 * d1, S(n - 1)) - scale(d2 * p, S(n));
}

/// The discrete Laguerre functional, fully expanded:
///   (n-1)[p(x+h) - p(x-h)]^2 - 4n p(x)[p(x+h) - 2p(x) + p(x-h)].
template <class B>
Poly<B> discrete_fn(const Poly<B>& p, int n, const typename B::Scalar& h) {
  using S = typename B::Scalar;
  if (n < 1) throw PreconditionError("discrete_fn requires n >= 1");
  if (h == S(0)) throw PreconditionError("discrete_fn requires h != 0");
  Poly<B> up = shift(p, h);
  Poly<B> dn = shift(p, -h);
  Poly<B> sym = up - dn;
  Poly<B> second = up - scale(p, S(2)) + dn;
  return scale(sym * sym, S(n - 1)) - scale(p * second, S(4) * S(n));
}

/// Same functional evaluated pointwise from three evaluations of p, without
/// expanding the polynomial. Agrees exactly with eval(discrete_fn(...), x).
template <class B>
typename B::Scalar eval_fn(const Poly<B>& p, int n, const typename B::Scalar& h,
                           const typename B::Scalar& x) {
  using S = typename B::Scalar;
  if (n < 1) throw PreconditionError("eval_fn requires n >= 1");
  if (h == S(0)) throw PreconditionError("eval_fn requires h != 0");
  const S up = p(x + h);
  const S mid = p(x);
  const S dn = p(x - h);
  const S sym = up - dn;
  const S second = up - S(2) * mid + dn;
  return S(n - 1) * sym * sym - S(4) * S(n) * mid * second;
}

/// Unit-weight variant [p(x+h)-p(x-h)]^2 - 4 p(x)[p(x+h)-2p(x)+p(x-h)],
/// the polynomial case of the entire-function functional.
template <class B>
Poly<B> unit_weight_fn(const Poly<B>& p, const typename B::Scalar& h) {
  using S = typename B::Scalar;
  Poly<B> up = shift(p, h);
  Poly<B> dn = shift(p, -h);
  Poly<B> sym = up - dn;
  Poly<B> second = up - scale(p, S(2)) + dn;
  return sym * sym - scale(p * second, S(4));
}

enum class Verdict { Certified, Violated };

/// Certificate for the main inequality: subject polynomial, the expanded
/// functional, the mesh report checked against h, and the verdict. Under
/// the preconditions (all roots real, mesh >= h) a Violated verdict would
/// falsify a proved theorem, i.e. flag an implementation bug; the witness
/// is carried for diagnosis.
struct LaguerreCertificate {
  Poly<Exact> subject;
  int n_used = 0;
  Rat h;
  Poly<Exact> fn_poly;
  Verdict verdict = Verdict::Certified;
  std::optional<Rat> witness;
  std::optional<Rat> witness_value;
  MeshReport<Exact> mesh_checked;
};

namespace detail {

inline LaguerreCertificate certify_main_impl(const Poly<Exact>& p, const Rat& h,
                                             MeshReport<Exact> mesh, bool mesh_ok) {
  if (!mesh.all_real)
    throw PreconditionError("main inequality requires all roots real");
  if (!mesh_ok)
    throw PreconditionError("main inequality requires mesh >= h");
  LaguerreCertificate cert;
  cert.subject = p;
  cert.n_used = p.degree();
  cert.h = h;
  cert.mesh_checked = mesh;
  cert.fn_poly = discrete_fn(p, cert.n_used, h);
  NonnegCertificate nn = certify_nonnegative(cert.fn_poly);
  if (nn.verdict == Nonneg::Negative) {
    cert.verdict = Verdict::Violated;
    cert.witness = nn.witness;
    cert.witness_value = nn.witness_value;
  } else {
    cert.verdict = Verdict::Certified;
  }
  return cert;
}

}  // namespace detail

/// Certifies the main inequality for p with spacing h: builds the
/// functional with n = deg p and certifies nonnegativity on the whole
/// line in exact arithmetic. Precondition failures (non-real roots,
/// mesh < h) throw PreconditionError; they are never reported as Violated.
inline LaguerreCertificate certify_main_theorem(const Poly<Exact>& p, const Rat& h) {
  if (h <= 0) throw PreconditionError("main inequality requires h > 0");
  if (p.degree() < 1) throw PreconditionError("main inequality requires nonconstant p");
  MeshReport<Exact> mesh = mesh_size(p);
  const bool mesh_ok = !mesh.finite || mesh_ge(p, h);
  return detail::certify_main_impl(p, h, mesh, mesh_ok);
}

/// Root-representation fast path: the mesh test is an exact comparison.
inline LaguerreCertificate certify_main_theorem(const RootedPoly<Exact>& rp, const Rat& h) {
  if (h <= 0) throw PreconditionError("main inequality requires h > 0");
  if (rp.degree() < 1) throw PreconditionError("main inequality requires nonconstant p");
  MeshReport<Exact> mesh = mesh_size(rp);
  const bool mesh_ok = mesh_ge(rp, h);
  return detail::certify_main_impl(rp.expand(), h, mesh, mesh_ok);
}

/// Deviations |f_n(x,h,p)/(4h^2) - ((n-1)p'(x)^2 - n p''(x) p(x))| for each
/// h in the list. The finite-difference functional converges to the
/// sharpened expression at second order, so with h halving each step the
/// deviations shrink roughly fourfold.
template <class B>
std::vector<typename B::Scalar> limit_check(const Poly<B>& p, int n,
                                            const typename B::Scalar& x,
                                            const std::vector<typename B::Scalar>& h_sequence) {
  using S = typename B::Scalar;
  const Poly<B> sharp = sharpened_laguerre(p, n);
  const S target = sharp(x);
  std::vector<S> deviations;
  deviations.reserve(h_sequence.size());
  for (const S& h : h_sequence) {
    if (h == S(0)) throw PreconditionError("limit_check requires nonzero h values");
    S v = eval_fn(p, n, h, x) / (S(4) * h * h) - target;
    if (v < S(0)) v = -v;
    deviations.push_back(v);
  }
  return deviations;
}

}  // namespace dlag

#endif  // DLAG_LAGUERRE_HPP
