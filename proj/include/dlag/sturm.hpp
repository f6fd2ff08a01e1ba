#ifndef DLAG_STURM_HPP
#define DLAG_STURM_HPP

#include <utility>
#include <vector>

#include "dlag/poly.hpp"
#include "dlag/scalar.hpp"

namespace dlag {
namespace detail {

/// Integer-coefficient polynomial, ascending degree, trailing zeros stripped.
/// All root-counting machinery runs on these: a rational-coefficient input is
/// scaled once to a primitive integer polynomial (same roots), and every
/// sign evaluation stays in integer arithmetic.
using IntPoly = std::vector<Int>;

inline void ip_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int ip_degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline IntPoly to_int_poly(const Poly<Exact>& p) {
  IntPoly out;
  if (p.is_zero()) return out;
  Int den_lcm(1);
  for (const Rat& c : p.coeffs()) {
    if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
  }
  Int num_gcd(0);
  std::vector<Int> scaled;
  scaled.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    Int v = numerator(c) * (den_lcm / denominator(c));
    num_gcd = gcd(num_gcd, v);
    scaled.push_back(std::move(v));
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  for (auto& v : scaled) v /= num_gcd;
  out = std::move(scaled);
  ip_trim(out);
  return out;
}

inline Poly<Exact> from_int_poly(const IntPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.size());
  for (const Int& c : p) v.emplace_back(c);
  return Poly<Exact>(std::move(v));
}

inline IntPoly ip_derivative(const IntPoly& p) {
  IntPoly out;
  if (ip_degree(p) < 1) return out;
  out.resize(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * Int(static_cast<long>(k));
  return out;
}

/// Divides by the positive gcd of the coefficients (sign preserved).
inline void ip_make_primitive(IntPoly& p) {
  ip_trim(p);
  if (p.empty()) return;
  Int g(0);
  for (const Int& c : p) g = gcd(g, c);
  if (g < 0) g = -g;
  if (g > 1)
    for (Int& c : p) c /= g;
}

/// Sign of p at the rational point u/v (v > 0), by homogeneous integer
/// Horner: sign(sum c_k u^k v^(n-k)).
inline int ip_sign_at(const IntPoly& p, const Rat& x) {
  if (p.empty()) return 0;
  const Int u = numerator(x);
  const Int v = denominator(x);  // > 0 by cpp_rational normalization
  Int acc = p.back();
  Int vp(1);
  for (int k = ip_degree(p) - 1; k >= 0; --k) {
    vp *= v;
    acc = acc * u + p[static_cast<std::size_t>(k)] * vp;
  }
  return acc.sign();
}

inline int ip_sign_at_pos_inf(const IntPoly& p) { return p.empty() ? 0 : p.back().sign(); }

inline int ip_sign_at_neg_inf(const IntPoly& p) {
  if (p.empty()) return 0;
  const int s = p.back().sign();
  return (ip_degree(p) % 2 == 0) ? s : -s;
}

/// Sturm chain of p: s0 = p, s1 = p', s_{i+1} = -rem(s_{i-1}, s_i), each
/// member reduced to primitive form (positive scalings do not change sign
/// variation counts). Pseudo-remainders keep everything in integers; the
/// sign of the implied multiplier lc(g)^steps is corrected explicitly.
inline std::vector<IntPoly> sturm_chain(IntPoly p) {
  std::vector<IntPoly> chain;
  ip_make_primitive(p);
  if (p.empty()) return chain;
  chain.push_back(p);
  IntPoly d = ip_derivative(p);
  ip_make_primitive(d);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPoly& f = chain[chain.size() - 2];
    const IntPoly& g = chain.back();
    // r = pseudo-remainder of f by g; multiplier is lc(g)^steps.
    IntPoly r = f;
    const Int glc = g.back();
    const int dg = ip_degree(g);
    long steps = 0;
    while (ip_degree(r) >= dg) {
      const Int rlc = r.back();
      const int shiftk = ip_degree(r) - dg;
      for (auto& c : r) c *= glc;
      for (int j = 0; j <= dg; ++j)
        r[static_cast<std::size_t>(shiftk + j)] -= rlc * g[static_cast<std::size_t>(j)];
      ip_trim(r);
      ++steps;
    }
    if (r.empty()) break;
    // True remainder = r / glc^steps; the Sturm successor is its negative,
    // so flip once more when the multiplier is negative.
    const bool mult_negative = (glc < 0) && (steps % 2 == 1);
    for (auto& c : r) c = mult_negative ? c : -c;
    ip_make_primitive(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

inline int variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& s : chain) signs.push_back(ip_sign_at(s, x));
  return variations(signs);
}

inline int variations_at_neg_inf(const std::vector<IntPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& s : chain) signs.push_back(ip_sign_at_neg_inf(s));
  return variations(signs);
}

inline int variations_at_pos_inf(const std::vector<IntPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& s : chain) signs.push_back(ip_sign_at_pos_inf(s));
  return variations(signs);
}

/// Number of distinct real roots in (lo, hi]; endpoints must not be roots
/// of the chain's head for the classical (lo, hi) reading to coincide.
inline int count_roots(const std::vector<IntPoly>& chain, const Rat& lo, const Rat& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

inline int count_roots_all(const std::vector<IntPoly>& chain) {
  return variations_at_neg_inf(chain) - variations_at_pos_inf(chain);
}

/// Strict bound on the magnitude of every real root: 1 + max |a_k/a_n|,
/// rounded up to a power of two so bisection endpoints stay dyadic.
inline Rat cauchy_bound_pow2(const IntPoly& p) {
  Rat best(0);
  const Int& an = p.back();
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    Rat r(p[k] < 0 ? Int(-p[k]) : p[k], an < 0 ? Int(-an) : an);
    if (r > best) best = r;
  }
  Rat bound = best + 1;
  Rat pow2(1);
  while (pow2 < bound) pow2 *= 2;
  return pow2;
}

}  // namespace detail
}  // namespace dlag

#endif  // DLAG_STURM_HPP
