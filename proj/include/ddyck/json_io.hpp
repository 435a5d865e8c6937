#pragma once

/// JSON serialization for the library's exchange formats. Exact integers
/// and rationals travel as decimal strings so nothing is squeezed through
/// double precision; a rational is a ["numerator", "denominator"] pair.

#include <string>
#include <vector>

#include <json.hpp>

#include "ddyck/bijection.hpp"
#include "ddyck/numeric.hpp"
#include "ddyck/power_series.hpp"

namespace ddyck {

using json = nlohmann::json;

inline json rat_to_json(const Rat& v) {
  return json::array({boost::multiprecision::numerator(v).str(),
                      boost::multiprecision::denominator(v).str()});
}

inline json poly_to_json(const MarkerPoly& p) {
  json coeffs = json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(rat_to_json(p[static_cast<std::size_t>(k)]));
  return coeffs;
}

/// {"order": N, "coeffs": [[num, den], ...]} with coeffs[n] the x^n entry.
inline json series_to_json(const Series& s) {
  json coeffs = json::array();
  for (std::size_t n = 0; n <= s.order(); ++n) coeffs.push_back(rat_to_json(s[n]));
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

/// {"order": N, "marker": "y", "coeffs": [[[num, den], ...], ...]} with
/// coeffs[n][k] the coefficient of x^n marker^k.
inline json series_to_json(const BivariateSeries& s, const std::string& marker) {
  json coeffs = json::array();
  for (std::size_t n = 0; n <= s.order(); ++n) coeffs.push_back(poly_to_json(s[n]));
  return json{{"order", s.order()}, {"marker", marker}, {"coeffs", coeffs}};
}

/// {"name": ..., "start": n0, "values": ["v", ...]}
inline json sequence_to_json(const std::string& name, long long start,
                             const std::vector<Int>& values) {
  json vals = json::array();
  for (const Int& v : values) vals.push_back(v.str());
  return json{{"name", name}, {"start", start}, {"values", vals}};
}

/// {"components": ["UD", "", ...], "exponents": [1, 1, ...]} with "" for
/// the empty path.
inline json encoding_to_json(const Encoding& enc) {
  json comps = json::array();
  for (const Path& p : enc.components) comps.push_back(p.to_string());
  return json{{"components", comps}, {"exponents", enc.exponents}};
}

inline Encoding encoding_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("exponents"))
    throw MalformedEncoding("encoding JSON needs 'components' and 'exponents'");
  Encoding enc;
  for (const auto& c : j.at("components")) enc.components.push_back(Path::parse(c.get<std::string>()));
  for (const auto& e : j.at("exponents")) enc.exponents.push_back(e.get<long long>());
  return enc;
}

}  // namespace ddyck
