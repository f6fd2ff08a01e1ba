#ifndef DLAG_POLY_HPP
#define DLAG_POLY_HPP

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dlag/scalar.hpp"

namespace dlag {

/// Dense univariate polynomial over one numeric backend, kept in canonical
/// form (no trailing zero coefficients, so degree queries are O(1)).
/// Values are immutable in spirit: every operation returns a new Poly.
/// Backends never mix; a Poly<Exact> and a Poly<Approx> are unrelated types.
template <class B>
class Poly {
 public:
  using Backend = B;
  using Scalar = typename B::Scalar;

  Poly() = default;  // the zero polynomial

  explicit Poly(std::vector<Scalar> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    trim();
  }

  Poly(std::initializer_list<Scalar> ascending_coeffs)
      : c_(ascending_coeffs.begin(), ascending_coeffs.end()) {
    trim();
  }

  static Poly constant(const Scalar& value) { return Poly(std::vector<Scalar>{value}); }

  /// c * x^k
  static Poly monomial(int k, const Scalar& c = Scalar(1)) {
    if (c == Scalar(0)) return Poly();
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  static Poly variable() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const std::vector<Scalar>& coeffs() const { return c_; }

  /// Coefficient of x^k (0 beyond the degree).
  Scalar coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[static_cast<std::size_t>(k)];
  }

  const Scalar& leading() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Horner evaluation. Exact on the exact backend.
  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& a) {
    std::vector<Scalar> v = a.c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }

 private:
  std::vector<Scalar> c_;  // ascending degree

  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
};

template <class B>
Poly<B> scale(const Poly<B>& p, const typename B::Scalar& c) {
  if (c == typename B::Scalar(0)) return Poly<B>();
  std::vector<typename B::Scalar> v = p.coeffs();
  for (auto& x : v) x *= c;
  return Poly<B>(std::move(v));
}

template <class B>
typename B::Scalar eval(const Poly<B>& p, const typename B::Scalar& x) {
  return p(x);
}

/// Formal derivative; degree drops by exactly one for nonconstant input.
template <class B>
Poly<B> derivative(const Poly<B>& p) {
  using S = typename B::Scalar;
  if (p.degree() < 1) return Poly<B>();
  std::vector<S> v(static_cast<std::size_t>(p.degree()), S(0));
  for (int k = 1; k <= p.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = p.coeff(k) * S(k);
  return Poly<B>(std::move(v));
}

/// q with q(x) = p(x+h), via iterated synthetic (Ruffini-Horner) division.
/// Exact on the exact backend.
template <class B>
Poly<B> shift(const Poly<B>& p, const typename B::Scalar& h) {
  using S = typename B::Scalar;
  if (p.degree() < 1 || h == S(0)) return p;
  std::vector<S> c = p.coeffs();
  const int n = p.degree();
  for (int k = 0; k < n; ++k)
    for (int j = n - 1; j >= k; --j)
      c[static_cast<std::size_t>(j)] += h * c[static_cast<std::size_t>(j) + 1];
  return Poly<B>(std::move(c));
}

/// g(x) = p(x+h) - p(x). For nonconstant p the leading terms cancel, so
/// deg g = deg p - 1.
template <class B>
Poly<B> forward_difference(const Poly<B>& p, const typename B::Scalar& h) {
  if (h == typename B::Scalar(0)) throw PreconditionError("forward_difference requires h != 0");
  return shift(p, h) - p;
}

/// q with q(x) = p(s*x); coefficient k picks up s^k.
template <class B>
Poly<B> compose_scale(const Poly<B>& p, const typename B::Scalar& s) {
  using S = typename B::Scalar;
  std::vector<S> v = p.coeffs();
  S sk(1);
  for (std::size_t k = 1; k < v.size(); ++k) {
    sk *= s;
    v[k] *= sk;
  }
  return Poly<B>(std::move(v));
}

/// Quotient and remainder over the coefficient field.
template <class B>
std::pair<Poly<B>, Poly<B>> divrem(const Poly<B>& a, const Poly<B>& b) {
  using S = typename B::Scalar;
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly<B>(), a};
  std::vector<S> r = a.coeffs();
  const int db = b.degree();
  const S blc = b.leading();
  std::vector<S> q(static_cast<std::size_t>(a.degree() - db) + 1, S(0));
  for (int k = a.degree(); k >= db; --k) {
    const S& rk = r[static_cast<std::size_t>(k)];
    if (rk == S(0)) continue;
    const S f = rk / blc;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
  }
  return {Poly<B>(std::move(q)), Poly<B>(std::move(r))};
}

/// Exact quotient; throws if the division leaves a remainder.
template <class B>
Poly<B> divide_exact(const Poly<B>& a, const Poly<B>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
  return q;
}

namespace detail {

/// Positive gcd of all numerators over lcm of all denominators; the content
/// of a rational-coefficient polynomial. Zero polynomial has content 0.
inline Rat content(const Poly<Exact>& p) {
  if (p.is_zero()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const Rat& c : p.coeffs()) {
    if (c == 0) continue;
    num_gcd = gcd(num_gcd, numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  return Rat(num_gcd, den_lcm);
}

/// p divided by its content, with positive leading coefficient. The result
/// has coprime integer coefficients.
inline Poly<Exact> primitive_part(const Poly<Exact>& p) {
  if (p.is_zero()) return p;
  Rat c = content(p);
  if (p.leading() < 0) c = -c;
  return scale(p, Rat(1) / c);
}

}  // namespace detail

/// Polynomial gcd over the rationals, normalized primitive with positive
/// leading coefficient. gcd(0, 0) = 0.
inline Poly<Exact> gcd(const Poly<Exact>& a, const Poly<Exact>& b) {
  Poly<Exact> f = detail::primitive_part(a);
  Poly<Exact> g = detail::primitive_part(b);
  while (!g.is_zero()) {
    auto [q, r] = divrem(f, g);
    (void)q;
    f = std::move(g);
    g = detail::primitive_part(r);
  }
  return f;
}

/// One squarefree factor together with its exponent in p.
struct SquarefreeFactor {
  Poly<Exact> factor;  // primitive, positive leading, squarefree
  int exponent = 1;
};

/// p = constant * prod factor_i ^ exponent_i with the factors pairwise
/// coprime and squarefree (Yun's algorithm). Exact backend only: the gcd
/// chain is meaningless in floating point.
struct SquarefreeDecomposition {
  Rat constant = 1;
  std::vector<SquarefreeFactor> factors;

  Poly<Exact> squarefree_part() const {
    Poly<Exact> s = Poly<Exact>::constant(Rat(1));
    for (const auto& f : factors) s = s * f.factor;
    return s;
  }

  Poly<Exact> odd_part() const {
    Poly<Exact> s = Poly<Exact>::constant(Rat(1));
    for (const auto& f : factors)
      if (f.exponent % 2 == 1) s = s * f.factor;
    return s;
  }

  Poly<Exact> reassemble() const {
    Poly<Exact> s = Poly<Exact>::constant(constant);
    for (const auto& f : factors) {
      for (int e = 0; e < f.exponent; ++e) s = s * f.factor;
    }
    return s;
  }
};

inline SquarefreeDecomposition squarefree_decompose(const Poly<Exact>& p) {
  SquarefreeDecomposition out;
  if (p.is_zero()) {
    out.constant = 0;
    return out;
  }
  if (p.degree() == 0) {
    out.constant = p.coeff(0);
    return out;
  }
  // Work with the primitive part; the constant soaks up content and sign.
  Poly<Exact> f = detail::primitive_part(p);

  Poly<Exact> d = derivative(f);
  Poly<Exact> g = gcd(f, d);
  Poly<Exact> c = divide_exact(f, g);                    // product of distinct factors
  Poly<Exact> w = divide_exact(d, g) - derivative(c);
  int exponent = 1;
  while (c.degree() > 0) {
    Poly<Exact> fac = gcd(c, w);
    if (fac.degree() > 0) out.factors.push_back({fac, exponent});
    c = divide_exact(c, fac);
    w = divide_exact(w, fac) - derivative(c);
    ++exponent;
  }
  // p is proportional to the product of the primitive factor powers; match
  // leading coefficients to recover the constant.
  Rat prod_leading = 1;
  for (const auto& fac : out.factors)
    prod_leading *= rat_pow(fac.factor.leading(), static_cast<unsigned>(fac.exponent));
  out.constant = p.leading() / prod_leading;
  return out;
}

/// A polynomial represented by its real roots (strictly increasing, with
/// multiplicities) and a nonzero leading coefficient.
template <class B>
class RootedPoly {
 public:
  using Scalar = typename B::Scalar;

  struct Root {
    Scalar location;
    int multiplicity = 1;
  };

  RootedPoly() = default;

  RootedPoly(std::vector<Root> roots, Scalar leading) : roots_(std::move(roots)), leading_(std::move(leading)) {
    if (leading_ == Scalar(0)) throw PreconditionError("RootedPoly leading coefficient must be nonzero");
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (roots_[i].multiplicity < 1)
        throw PreconditionError("RootedPoly multiplicities must be positive");
      if (i > 0 && !(roots_[i - 1].location < roots_[i].location))
        throw PreconditionError("RootedPoly roots must be strictly increasing");
    }
  }

  /// Builds from an unsorted list with repeats; repeats merge into
  /// multiplicities.
  static RootedPoly from_list(std::vector<Scalar> locations, Scalar leading = Scalar(1)) {
    std::sort(locations.begin(), locations.end());
    std::vector<Root> rs;
    for (const auto& x : locations) {
      if (!rs.empty() && rs.back().location == x)
        ++rs.back().multiplicity;
      else
        rs.push_back({x, 1});
    }
    return RootedPoly(std::move(rs), std::move(leading));
  }

  const std::vector<Root>& roots() const { return roots_; }
  const Scalar& leading() const { return leading_; }

  int degree() const {
    int d = 0;
    for (const auto& r : roots_) d += r.multiplicity;
    return d;
  }

  bool simple() const {
    for (const auto& r : roots_)
      if (r.multiplicity > 1) return false;
    return true;
  }

  /// Roots repeated by multiplicity, ascending.
  std::vector<Scalar> roots_with_multiplicity() const {
    std::vector<Scalar> v;
    for (const auto& r : roots_)
      for (int i = 0; i < r.multiplicity; ++i) v.push_back(r.location);
    return v;
  }

  /// Minimum gap between consecutive roots counted with multiplicity:
  /// 0 if any root repeats, nullopt (infinite) when there are fewer than
  /// two roots with multiplicity.
  std::optional<Scalar> min_gap() const {
    if (degree() < 2) return std::nullopt;
    if (!simple()) return Scalar(0);
    std::optional<Scalar> best;
    for (std::size_t i = 1; i < roots_.size(); ++i) {
      Scalar g = roots_[i].location - roots_[i - 1].location;
      if (!best || g < *best) best = g;
    }
    return best;
  }

  Poly<B> expand() const {
    Poly<B> p = Poly<B>::constant(leading_);
    for (const auto& r : roots_) {
      Poly<B> lin({-r.location, Scalar(1)});
      for (int i = 0; i < r.multiplicity; ++i) p = p * lin;
    }
    return p;
  }

 private:
  std::vector<Root> roots_;
  Scalar leading_ = Scalar(1);
};

template <class B>
Poly<B> expand(const RootedPoly<B>& rp) {
  return rp.expand();
}

inline Poly<Approx> to_float(const Poly<Exact>& p) {
  std::vector<double> v;
  v.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) v.push_back(to_double(c));
  return Poly<Approx>(std::move(v));
}

inline Poly<Exact> to_exact(const Poly<Approx>& p) {
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (double c : p.coeffs()) v.push_back(Rat(c));
  return Poly<Exact>(std::move(v));
}

/// "3 - 2 x + x^2" style display, ascending.
template <class B>
std::string to_string(const Poly<B>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    auto c = p.coeff(k);
    if (c == typename B::Scalar(0)) continue;
    std::string mag;
    if constexpr (B::is_exact) {
      mag = rat_to_string(c < 0 ? Rat(-c) : c);
    } else {
      std::ostringstream tmp;
      tmp << (c < 0 ? -c : c);
      mag = tmp.str();
    }
    if (first) {
      os << (sign_of(c) < 0 ? "-" : "");
      first = false;
    } else {
      os << (sign_of(c) < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << mag;
    } else {
      if (mag != "1") os << mag << " ";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace dlag

#endif  // DLAG_POLY_HPP
