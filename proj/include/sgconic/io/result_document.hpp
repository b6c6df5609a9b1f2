#pragma once

/**
 * @file result_document.hpp
 * @brief JSON result documents. Every number is written as a string
 * ("12", "-3", "42/13") so documents diff exactly; key order is fixed.
 */

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgconic/finder.hpp"
#include "sgconic/incidence.hpp"
#include "sgconic/oracle.hpp"
#include "sgconic/point_config.hpp"

namespace sgconic::io {

using Json = nlohmann::ordered_json;

template <class K>
std::string field_name(const PointConfig<K>& cfg) {
  if constexpr (field_traits<K>::is_rational) {
    (void)cfg;
    return "rational";
  } else {
    return "fp " + std::to_string(one_like(cfg.points()[0]).modulus());
  }
}

template <class K>
std::string scalar_string(const K& v) {
  return field_traits<K>::to_string(v);
}

template <class K, std::size_t N, class Tag>
Json coords_json(const Homogeneous<K, N, Tag>& h) {
  Json a = Json::array();
  for (const auto& v : h.coords()) a.push_back(scalar_string(v));
  return a;
}

template <class K>
Json conic_json(const Conic<K>& c) {
  Json a = Json::array();
  for (const auto& v : c.coeffs()) a.push_back(scalar_string(v));
  return a;
}

inline Json trace_json(const CaseTrace& trace) {
  Json a = Json::array();
  for (auto c : trace) a.push_back(to_string(c));
  return a;
}

inline std::string count_string(std::size_t n) { return std::to_string(n); }

inline Json report_json(const InequalityReport& r) {
  return Json{{"status", r.holds ? "holds" : "violated"},
              {"lhs", std::to_string(r.lhs)},
              {"rhs", std::to_string(r.rhs)},
              {"equality", r.lhs == r.rhs}};
}

inline Json unmet_json(const std::string& reason) { return Json{{"status", "precondition-unmet"}, {"reason", reason}}; }

template <class F>
Json guarded_report(F&& check) {
  try {
    return report_json(check());
  } catch (const PreconditionViolated& e) {
    return unmet_json(e.what());
  }
}

template <class K>
Json header_json(const char* command, const PointConfig<K>& cfg) {
  return Json{{"command", command}, {"field", field_name(cfg)}, {"s", count_string(cfg.size())}};
}

/// t_k spectrum, ordinary lines and inequality reports. The Hirzebruch
/// inequality is evaluated on the dual arrangement (each point read as a
/// line), through its own meet-based spectrum.
template <class K>
Json stats_document(const PointConfig<K>& cfg) {
  Json doc = header_json("stats", cfg);
  if (cfg.size() < 2) {
    doc["statistics"] = unmet_json("incidence statistics need at least 2 points");
    return doc;
  }
  const auto prof = incidence_profile(cfg);
  Json tk = Json::object();
  for (auto [k, t] : prof.tk) tk[std::to_string(k)] = count_string(t);
  Json ordinary = Json::array();
  for (const auto& ol : ordinary_lines(prof))
    ordinary.push_back(Json{{"line", coords_json(ol.line)},
                            {"points", Json::array({coords_json(ol.points.first), coords_json(ol.points.second)})}});
  doc["statistics"] = Json{{"lines", count_string(prof.lines.size())},
                           {"t_k", tk},
                           {"ordinary_line_count", count_string(prof.t(2))},
                           {"ordinary_lines", ordinary},
                           {"pair_count_identity", pair_count_identity_holds(prof)}};

  Json ineq;
  ineq["melchior"] = guarded_report([&] { return melchior_check(prof); });
  ineq["dual_hirzebruch"] = guarded_report([&] { return dual_hirzebruch_check(prof); });
  ineq["hirzebruch"] = guarded_report([&] {
    std::vector<ProjLine<K>> dual;
    for (const auto& p : cfg) dual.emplace_back(p.coords());
    return primal_hirzebruch_check(std::span<const ProjLine<K>>(dual));
  });
  try {
    const auto b = ordinary_line_bound_check(prof);
    ineq["ordinary_line_bound"] = Json{{"status", b.holds ? "holds" : "violated"},
                                       {"count", count_string(b.count)},
                                       {"bound", b.bound.get_str()},
                                       {"equality", Rational(static_cast<long>(b.count)) == b.bound}};
  } catch (const PreconditionViolated& e) {
    ineq["ordinary_line_bound"] = unmet_json(e.what());
  }
  doc["inequalities"] = ineq;
  return doc;
}

template <class K>
Json result_json(const SGConicResult<K>& r) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        Json out;
        if constexpr (std::is_same_v<T, AllOnConic<K>>) {
          out["kind"] = "AllOnConic";
          out["conic"] = conic_json(v.conic);
          out["singular"] = v.conic.is_singular();
          out["trace"] = trace_json(v.trace);
        } else {
          out["kind"] = "OrdinaryConic";
          out["conic"] = conic_json(v.conic);
          out["singular"] = v.conic.is_singular();
          Json w = Json::array();
          for (const auto& p : v.witness) w.push_back(coords_json(p));
          out["witness"] = w;
          out["trace"] = trace_json(v.trace);
        }
        return out;
      },
      r);
}

template <class K>
Json find_conic_document(const PointConfig<K>& cfg, const SGConicResult<K>& r) {
  Json doc = header_json("find-conic", cfg);
  doc["result"] = result_json(r);
  return doc;
}

/// Whether the oracle confirms a finder verdict: an ordinary conic must be
/// among the certificates, an all-on conic needs the rank oracle's consent.
template <class K>
bool finder_agrees(const PointConfig<K>& cfg, const SGConicResult<K>& r,
                   const std::vector<oracle::CurveCertificate<K>>& degree2) {
  if (const auto* o = std::get_if<OrdinaryConic<K>>(&r)) {
    for (const auto& c : degree2) {
      if (!std::equal(c.subset.begin(), c.subset.end(), o->witness.begin(), o->witness.end())) continue;
      std::array<K, 6> coeffs;
      std::copy(c.coeffs.begin(), c.coeffs.end(), coeffs.begin());
      if (Conic<K>(coeffs) == o->conic) return true;
    }
    return false;
  }
  return oracle::exists_conic_through_all_bruteforce(cfg.points()).has_value();
}

template <class K>
Json oracle_document(const PointConfig<K>& cfg, int degree, const std::vector<oracle::CurveCertificate<K>>& certs) {
  Json doc = header_json("oracle", cfg);
  doc["degree"] = std::to_string(degree);
  doc["subset_size"] = count_string(oracle::monomial_count(degree) - 1);
  doc["subsets"] = std::to_string(oracle::detail::binomial(cfg.size(), oracle::monomial_count(degree) - 1));
  doc["certificate_count"] = count_string(certs.size());
  Json list = Json::array();
  for (const auto& c : certs) {
    Json subset = Json::array();
    for (const auto& p : c.subset) subset.push_back(coords_json(p));
    Json coeffs = Json::array();
    for (const auto& v : c.coeffs) coeffs.push_back(scalar_string(v));
    Json entry{{"subset", subset}, {"curve", coeffs}};
    if (degree == 2) {
      std::array<K, 6> a;
      std::copy(c.coeffs.begin(), c.coeffs.end(), a.begin());
      entry["singular"] = Conic<K>(a).is_singular();
    }
    list.push_back(entry);
  }
  doc["certificates"] = list;
  return doc;
}

/// The conic recorded in a result document, if any.
inline std::optional<Conic<Rational>> conic_from_document(const Json& doc) {
  if (!doc.contains("result") || !doc["result"].contains("conic")) return std::nullopt;
  const auto& a = doc["result"]["conic"];
  if (!a.is_array() || a.size() != 6) throw DegenerateInput("result conic must have 6 coefficients");
  std::array<Rational, 6> c;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!a[i].is_string()) throw DegenerateInput("result conic coefficients must be strings");
    try {
      c[i] = Rational(a[i].get<std::string>());
    } catch (const std::invalid_argument&) {
      throw DegenerateInput("bad coefficient '" + a[i].get<std::string>() + "'");
    }
    c[i].canonicalize();
  }
  return Conic<Rational>(c);
}

/// Two-space indented, trailing newline.
inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sgconic::io
