#ifndef DLAG_SCALAR_HPP
#define DLAG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dlag {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a mathematical precondition fails. Distinct from
/// std::invalid_argument (malformed input) so callers can map the two
/// to different exit codes.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact backend: arbitrary-precision rationals. Arithmetic never rounds,
/// so certification results are unconditional.
struct Exact {
  using Scalar = Rat;
  static constexpr bool is_exact = true;
  static constexpr const char* name = "exact";
};

/// Float backend: IEEE double, for fuzzing throughput. Any finding produced
/// on this backend must be re-verified on the exact backend before it is
/// reported as a violation.
struct Approx {
  using Scalar = double;
  static constexpr bool is_exact = false;
  static constexpr const char* name = "float";
};

inline int sign_of(const Rat& x) { return x.sign(); }
inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Exact value of the double (every finite double is a dyadic rational).
inline Rat to_rat(double x) { return Rat(x); }
inline const Rat& to_rat(const Rat& x) { return x; }

inline Rat rat_pow(const Rat& base, unsigned exp) {
  Rat result(1);
  Rat b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

inline Int int_pow(const Int& base, unsigned exp) {
  Int result(1);
  Int b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on anything else.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

inline std::string rat_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace dlag

#endif  // DLAG_SCALAR_HPP
