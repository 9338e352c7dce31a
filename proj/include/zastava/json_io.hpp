#pragma once

// Canonical JSON round-trips for every wire type.  nlohmann::json keeps keys
// in sorted order, so dump() of any value built here is byte-canonical; exact
// rationals always travel as "p/q" strings.

#include <string>

#include "json.hpp"
#include "zastava/point.hpp"
#include "zastava/superpotential.hpp"
#include "zastava/whittaker.hpp"

namespace zastava {

using Json = nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& message);
const Json& require_field(const Json& j, const char* key, const std::string& path);
std::string canonical_dump(const Json& j);

// --- scalars ---------------------------------------------------------------

inline Json scalar_to_json(const Rational& x) { return rational_to_string(x); }
inline Json scalar_to_json(const GaussianRational& x) {
  return Json{{"re", rational_to_string(x.re)}, {"im", rational_to_string(x.im)}};
}
inline Json scalar_to_json(const Complex& x) { return Json{{"re", x.real()}, {"im", x.imag()}}; }

Rational rational_from_json(const Json& j, const std::string& path);
GaussianRational gaussian_from_json(const Json& j, const std::string& path);
Complex complex_from_json(const Json& j, const std::string& path);

template <class K>
K scalar_from_json(const Json& j, const std::string& path) {
  if constexpr (std::is_same_v<K, Rational>) return rational_from_json(j, path);
  else if constexpr (std::is_same_v<K, GaussianRational>) return gaussian_from_json(j, path);
  else return complex_from_json(j, path);
}

// --- polynomials -----------------------------------------------------------

template <class K>
Json poly_to_json(const Poly<K>& p) {
  Json coeffs = Json::array();
  for (const K& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
  return Json{{"domain", scalar_traits<K>::domain_name}, {"coeffs", coeffs}};
}

template <class K>
Poly<K> poly_from_json(const Json& j, const std::string& path) {
  const Json* coeffs = &j;
  if (j.is_object()) {
    coeffs = &require_field(j, "coeffs", path);
    if (j.contains("domain") && j["domain"].get<std::string>() != scalar_traits<K>::domain_name)
      schema_fail(path + "/domain", "expected domain " +
                                        std::string(scalar_traits<K>::domain_name));
  }
  if (!coeffs->is_array()) schema_fail(path, "polynomial coefficients must be an array");
  std::vector<K> cs;
  for (std::size_t k = 0; k < coeffs->size(); ++k)
    cs.push_back(scalar_from_json<K>((*coeffs)[k], path + "/" + std::to_string(k)));
  return Poly<K>(std::move(cs));
}

// --- root data ---------------------------------------------------------------

Json root_system_to_json(const RootSystem& rs);
std::shared_ptr<const RootSystem> root_system_from_json(const Json& j, const std::string& path);
Json coweight_to_json(const Coweight& lam);
Coweight coweight_from_json(const Json& j, int rank, const std::string& path);

template <class K>
Json divisor_to_json(const ColoredDivisor<K>& d) {
  Json out = Json::array();
  for (const auto& [pt, color] : d.entries)
    out.push_back(Json{{"point", scalar_to_json(pt)}, {"color", color}});
  return out;
}

template <class K>
ColoredDivisor<K> divisor_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "colored divisor must be an array");
  ColoredDivisor<K> d;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    const Json& e = j[k];
    if (!e.is_object()) schema_fail(p, "divisor entry must be an object");
    int color = require_field(e, "color", p).get<int>();
    d.entries.emplace_back(scalar_from_json<K>(require_field(e, "point", p), p + "/point"), color);
  }
  d.canonicalize();
  return d;
}

// --- zastava points ------------------------------------------------------------

template <class K>
Json point_to_json(const ZastavaPoint<K>& p) {
  Json points = Json::object();
  for (int i = 0; i < p.rank(); ++i) {
    Json node = Json::array();
    for (const auto& wy : p.node(i))
      node.push_back(Json{{"w", scalar_to_json(wy.w)}, {"y", scalar_to_json(wy.y)}});
    points[std::to_string(i)] = std::move(node);
  }
  return Json{{"root_system", root_system_to_json(*p.rs())},
              {"domain", scalar_traits<K>::domain_name},
              {"points", points}};
}

template <class K>
ZastavaPoint<K> point_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "point must be an object");
  auto rs = root_system_from_json(require_field(j, "root_system", path), path + "/root_system");
  const Json& pts = require_field(j, "points", path);
  if (!pts.is_object()) schema_fail(path + "/points", "points must map node index to arrays");
  std::vector<std::vector<WY<K>>> nodes(rs->rank());
  for (auto it = pts.begin(); it != pts.end(); ++it) {
    const std::string p = path + "/points/" + it.key();
    int i = -1;
    try {
      i = std::stoi(it.key());
    } catch (...) {
      schema_fail(p, "node keys must be integer indices");
    }
    if (i < 0 || i >= rs->rank()) schema_fail(p, "node index out of range");
    if (!it.value().is_array()) schema_fail(p, "node entries must be arrays");
    for (std::size_t k = 0; k < it.value().size(); ++k) {
      const std::string pk = p + "/" + std::to_string(k);
      const Json& e = it.value()[k];
      if (!e.is_object()) schema_fail(pk, "point entry must be an object");
      nodes[i].push_back(WY<K>{scalar_from_json<K>(require_field(e, "w", pk), pk + "/w"),
                               scalar_from_json<K>(require_field(e, "y", pk), pk + "/y")});
    }
  }
  return ZastavaPoint<K>(std::move(rs), std::move(nodes));
}

// --- A1 maps (the `convert` wire form) ----------------------------------------

template <class K>
Json map_to_json(const SL2Map<K>& m) {
  Json q = Json::array(), r = Json::array();
  for (const K& c : m.q.coeffs()) q.push_back(scalar_to_json(c));
  for (const K& c : m.r.coeffs()) r.push_back(scalar_to_json(c));
  return Json{{"Q", q}, {"R", r}};
}

template <class K>
SL2Map<K> map_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "map must be an object");
  return SL2Map<K>{poly_from_json<K>(require_field(j, "Q", path), path + "/Q"),
                   poly_from_json<K>(require_field(j, "R", path), path + "/R")};
}

// --- ext classes ------------------------------------------------------------------

template <class K>
Json ext_class_to_json(const ExtClass<K>& e) {
  Json c = Json::array();
  for (const K& x : e.c) c.push_back(scalar_to_json(x));
  return Json{{"a", e.a}, {"c", c}};
}

template <class K>
ExtClass<K> ext_class_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "ext class must be an object");
  ExtClass<K> e;
  e.a = require_field(j, "a", path).get<long>();
  const Json& c = require_field(j, "c", path);
  if (!c.is_array()) schema_fail(path + "/c", "c must be an array");
  for (std::size_t k = 0; k < c.size(); ++k)
    e.c.push_back(scalar_from_json<K>(c[k], path + "/c/" + std::to_string(k)));
  return e;
}

// --- superpotential data ---------------------------------------------------------

Json super_params_to_json(const SuperParams& sp);
SuperParams super_params_from_json(const Json& j, const std::string& path);
Json config_to_json(const Config<Complex>& cfg);
Config<Complex> config_from_json(const Json& j, const std::string& path);

inline Json complex_grid_to_json(const std::vector<std::vector<Complex>>& g) {
  Json out = Json::array();
  for (const auto& row : g) {
    Json r = Json::array();
    for (const Complex& x : row) r.push_back(scalar_to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

inline Json complex_list_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& x : v) out.push_back(scalar_to_json(x));
  return out;
}

}  // namespace zastava
