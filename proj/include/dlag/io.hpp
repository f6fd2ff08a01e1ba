#ifndef DLAG_IO_HPP
#define DLAG_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dlag/harness.hpp"
#include "dlag/laguerre.hpp"
#include "dlag/logderiv.hpp"
#include "dlag/poly.hpp"
#include "dlag/realroots.hpp"
#include "dlag/scalar.hpp"

namespace dlag {

using nlohmann::json;

/// A parsed polynomial input. The backend is decided by the literal forms:
/// rational strings ("3/4") force the exact backend, decimal numbers force
/// the float backend, bare integers are exact by default. Mixing rational
/// strings and decimals in one polynomial is an input error.
struct ParsedPoly {
  bool exact = true;
  bool from_roots = false;
  std::optional<RootedPoly<Exact>> rooted;  // set when exact and from_roots
  Poly<Exact> poly_exact;                   // set when exact
  Poly<Approx> poly_float;                  // always usable
  json source;

  int degree() const { return exact ? poly_exact.degree() : poly_float.degree(); }
};

namespace detail {

struct ScalarLiteral {
  bool is_rational_string = false;
  bool is_decimal = false;
  Rat exact;
  double approx = 0.0;
};

inline ScalarLiteral parse_scalar_literal(const json& v, const std::string& where) {
  ScalarLiteral out;
  if (v.is_number_integer()) {
    out.exact = Rat(Int(v.get<long long>()));
    out.approx = static_cast<double>(v.get<long long>());
  } else if (v.is_number_float()) {
    out.is_decimal = true;
    out.approx = v.get<double>();
    out.exact = Rat(out.approx);  // exact dyadic value of the double
  } else if (v.is_string()) {
    out.is_rational_string = true;
    out.exact = parse_rational(v.get<std::string>());
    out.approx = to_double(out.exact);
  } else {
    throw std::invalid_argument(where + ": expected integer, decimal, or \"num/den\" string");
  }
  return out;
}

}  // namespace detail

inline ParsedPoly parse_poly_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial: expected a JSON object");
  const bool has_coeffs = j.contains("coeffs");
  const bool has_roots = j.contains("roots");
  if (has_coeffs == has_roots)
    throw std::invalid_argument("polynomial: exactly one of \"coeffs\" or \"roots\" required");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "coeffs" && key != "roots" && key != "leading")
      throw std::invalid_argument("polynomial: unknown key \"" + key + "\"");
  }

  std::vector<detail::ScalarLiteral> entries;
  const json& list = has_coeffs ? j.at("coeffs") : j.at("roots");
  if (!list.is_array()) throw std::invalid_argument("polynomial: coeffs/roots must be an array");
  for (std::size_t i = 0; i < list.size(); ++i)
    entries.push_back(detail::parse_scalar_literal(
        list[i], (has_coeffs ? "coeffs[" : "roots[") + std::to_string(i) + "]"));

  detail::ScalarLiteral leading;
  leading.exact = 1;
  leading.approx = 1.0;
  if (j.contains("leading")) leading = detail::parse_scalar_literal(j.at("leading"), "leading");
  entries.push_back(leading);

  bool any_rational = false, any_decimal = false;
  for (const auto& e : entries) {
    any_rational = any_rational || e.is_rational_string;
    any_decimal = any_decimal || e.is_decimal;
  }
  if (any_rational && any_decimal)
    throw std::invalid_argument(
        "polynomial: rational strings (exact) and decimals (float) cannot mix");
  entries.pop_back();

  ParsedPoly out;
  out.exact = !any_decimal;
  out.from_roots = has_roots;
  out.source = j;
  if (leading.exact == 0) throw std::invalid_argument("polynomial: leading must be nonzero");

  if (has_coeffs) {
    std::vector<Rat> ce;
    std::vector<double> cf;
    for (const auto& e : entries) {
      ce.push_back(e.exact);
      cf.push_back(e.approx);
    }
    out.poly_exact = Poly<Exact>(std::move(ce));
    out.poly_float = Poly<Approx>(std::move(cf));
    if (!out.exact) out.poly_exact = to_exact(out.poly_float);
    return out;
  }
  std::vector<Rat> roots;
  for (const auto& e : entries) roots.push_back(e.exact);
  RootedPoly<Exact> rp = RootedPoly<Exact>::from_list(std::move(roots), leading.exact);
  out.rooted = rp;
  out.poly_exact = rp.expand();
  out.poly_float = to_float(out.poly_exact);
  return out;
}

inline ParsedPoly parse_poly_text(const std::string& text) {
  try {
    return parse_poly_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("polynomial: ") + e.what());
  }
}

// ---- serialization -------------------------------------------------------

inline json rat_json(const Rat& x) {
  if (denominator(x) == 1) {
    // Small integers stay numeric; big ones become strings to avoid
    // silent precision loss in consumers.
    const Int n = numerator(x);
    if (n >= -((Int(1) << 53)) && n <= (Int(1) << 53)) return json(n.convert_to<long long>());
  }
  return json(rat_to_string(x));
}

template <class B>
json poly_json(const Poly<B>& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    if constexpr (B::is_exact) {
      arr.push_back(rat_json(p.coeff(k)));
    } else {
      arr.push_back(p.coeff(k));
    }
  }
  return json{{"coeffs", arr}, {"degree", p.degree()}};
}

template <class B>
json mesh_json(const MeshReport<B>& m) {
  json out{{"all_real", m.all_real}, {"simple", m.simple}, {"finite", m.finite}};
  if (m.finite) {
    out["exact"] = m.exact;
    if constexpr (B::is_exact) {
      out["mesh"] = rat_json(m.mesh_lo);
      if (!m.exact) {
        out["mesh_lo"] = rat_json(m.mesh_lo);
        out["mesh_hi"] = rat_json(m.mesh_hi);
        out["mesh"] = to_double((m.mesh_lo + m.mesh_hi) / 2);
      }
    } else {
      out["mesh"] = m.mesh_lo;
    }
    out["gap_argmin"] = json::array({m.gap_argmin.first, m.gap_argmin.second});
  } else {
    out["mesh"] = "infinite";
  }
  return out;
}

inline json certificate_json(const LaguerreCertificate& c) {
  json out{{"n", c.n_used},
           {"h", rat_json(c.h)},
           {"verdict", c.verdict == Verdict::Certified ? "certified" : "violated"},
           {"functional", poly_json(c.fn_poly)},
           {"mesh", mesh_json(c.mesh_checked)}};
  if (c.witness) {
    out["witness"] = rat_json(*c.witness);
    out["witness_value"] = rat_json(*c.witness_value);
  }
  return out;
}

inline json nonneg_json(const NonnegCertificate& c) {
  json out;
  switch (c.verdict) {
    case Nonneg::NonnegativeEverywhere:
      out["verdict"] = "nonnegative-everywhere";
      break;
    case Nonneg::Negative:
      out["verdict"] = "negative";
      out["witness"] = rat_json(*c.witness);
      out["witness_value"] = rat_json(*c.witness_value);
      break;
    case Nonneg::IdenticallyZero:
      out["verdict"] = "identically-zero";
      break;
  }
  return out;
}

inline json measure_json(const MeasureResult& m) {
  json out{{"lambda", rat_json(m.lambda)},
           {"method", m.method == MeasureMode::ExactRootPairing ? "exact-root-pairing"
                                                                : "numeric-scan"}};
  json ivs = json::array();
  for (const auto& [lo, hi] : m.intervals) ivs.push_back(json::array({lo, hi}));
  out["intervals"] = ivs;
  if (m.method == MeasureMode::ExactRootPairing) {
    out["pairing_ok"] = m.pairing_ok;
    if (!m.structural_note.empty()) out["structural_note"] = m.structural_note;
    if (m.pairing_ok) {
      out["total"] = rat_json(m.total_exact);
      out["vieta_total"] = rat_json(m.vieta_total_exact);
      out["total_float"] = to_double(m.total_exact);
    } else {
      out["vieta_total"] = rat_json(m.vieta_total_exact);
    }
  } else {
    out["total"] = m.total;
    out["vieta_total"] = m.vieta_total;
    out["tail_contribution"] = 0.0;  // the scan window provably contains the set
    out["error_bound"] = m.scan_error_bound;
  }
  if (m.n_over_lambda) out["n_over_lambda"] = rat_json(*m.n_over_lambda);
  return out;
}

inline json campaign_json(const CampaignResult& r) {
  json out{{"campaign", campaign_name(r.id)},
           {"seed", r.seed},
           {"trials", r.trials},
           {"confirmed", r.confirmed},
           {"precondition_skips", r.precondition_skips},
           {"runtime_seconds", r.runtime_seconds}};
  json viols = json::array();
  for (const auto& v : r.violations)
    viols.push_back(json{{"trial", v.trial},
                         {"description", v.description},
                         {"exact_reverified", v.exact_reverified}});
  out["violations"] = viols;
  json nears = json::array();
  for (const auto& nm : r.near_misses)
    nears.push_back(json{{"margin", nm.margin}, {"trial", nm.trial}, {"what", nm.what}});
  out["near_misses"] = nears;
  json tallies = json::object();
  for (const auto& [k, v] : r.tallies) tallies[k] = v;
  out["tallies"] = tallies;
  return out;
}

inline json reproduce_json(const ReproduceReport& r) {
  json items = json::array();
  for (const auto& item : r.items) {
    json o{{"name", item.name}, {"pass", item.pass}};
    if (!item.detail.empty()) o["detail"] = item.detail;
    items.push_back(o);
  }
  return json{{"items", items}, {"all_pass", r.all_pass}, {"runtime_seconds", r.runtime_seconds}};
}

}  // namespace dlag

#endif  // DLAG_IO_HPP
