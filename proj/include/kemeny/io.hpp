#pragma once

// JSON, CSV and plain-table renderings of reports and censuses.

#include <iomanip>
#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "kemeny/braess.hpp"
#include "kemeny/exact_oracle.hpp"
#include "kemeny/numeric.hpp"

namespace kemeny {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// "num/den", or fixed-point with `decimals` digits when given.
inline std::string format_rational(const Rational& q, std::optional<unsigned> decimals = std::nullopt) {
  return decimals ? to_decimal(q, *decimals) : to_string(q);
}

inline Json rational_json(const Rational& q) {
  return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline Rational rational_from_json(const Json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

inline Json kemeny_json(const KemenyReport& r, const std::string& input = {}) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  if (!input.empty()) j["input"] = input;
  j["n"] = r.order;
  j["m"] = r.edge_count;
  j["tau"] = r.tree_count.str();
  j["kemeny"] = rational_json(r.kemeny);
  j["moments"] = Json::array();
  for (const auto& m : r.moments) j["moments"].push_back(rational_json(m));
  return j;
}

inline void write_kemeny_csv(std::ostream& out, const KemenyReport& r, std::optional<unsigned> decimals = {}) {
  out << "quantity,vertex,value\n";
  out << "n,," << r.order << '\n';
  out << "m,," << r.edge_count << '\n';
  out << "tau,," << r.tree_count << '\n';
  out << "kemeny,," << format_rational(r.kemeny, decimals) << '\n';
  for (std::size_t v = 0; v < r.moments.size(); ++v) {
    out << "moment," << v + 1 << ',' << format_rational(r.moments[v], decimals) << '\n';
  }
}

inline void write_kemeny_table(std::ostream& out, const KemenyReport& r, std::optional<unsigned> decimals = {}) {
  out << "n       " << r.order << '\n';
  out << "m       " << r.edge_count << '\n';
  out << "tau     " << r.tree_count << '\n';
  out << "kemeny  " << format_rational(r.kemeny, decimals) << '\n';
  out << "vertex  moment\n";
  for (std::size_t v = 0; v < r.moments.size(); ++v) {
    out << std::left << std::setw(8) << v + 1 << format_rational(r.moments[v], decimals) << '\n';
  }
}

inline Json census_json(const BraessCensus& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  if (c.spec) j["family"] = to_string(*c.spec);
  j["n"] = c.order;
  j["braess_count"] = c.braess_count();
  Json totals = Json::object();
  for (const auto& [cat, n] : c.totals) totals[to_string(cat)] = n;
  j["totals"] = totals;
  j["entries"] = Json::array();
  for (const auto& e : c.entries) {
    j["entries"].push_back(Json{{"u", e.edge.u},
                                {"v", e.edge.v},
                                {"delta", rational_json(e.delta)},
                                {"braess", e.braess},
                                {"category", to_string(e.category)}});
  }
  return j;
}

inline void write_census_csv(std::ostream& out, const BraessCensus& c, bool braess_only = false) {
  out << "u,v,num,den,braess,category\n";
  for (const auto& e : c.entries) {
    if (braess_only && !e.braess) continue;
    out << e.edge.u << ',' << e.edge.v << ',' << numerator(e.delta) << ',' << denominator(e.delta) << ','
        << (e.braess ? "true" : "false") << ',' << to_string(e.category) << '\n';
  }
}

inline void write_census_table(std::ostream& out, const BraessCensus& c, std::optional<unsigned> decimals = {},
                               bool braess_only = false) {
  out << std::left << std::setw(12) << "edge" << std::setw(8) << "braess" << std::setw(10) << "category"
      << "delta\n";
  for (const auto& e : c.entries) {
    if (braess_only && !e.braess) continue;
    const std::string edge = "{" + std::to_string(e.edge.u) + "," + std::to_string(e.edge.v) + "}";
    out << std::left << std::setw(12) << edge << std::setw(8) << (e.braess ? "yes" : "no") << std::setw(10)
        << to_string(e.category) << format_rational(e.delta, decimals) << '\n';
  }
  out << "braess edges: " << c.braess_count();
  for (const auto& [cat, n] : c.totals) {
    if (cat != Category::None) out << "  " << to_string(cat) << '=' << n;
  }
  out << '\n';
}

}  // namespace kemeny
