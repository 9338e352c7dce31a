#include "zastava/json_io.hpp"

namespace zastava {

void schema_fail(const std::string& path, const std::string& message) {
  throw SchemaError((path.empty() ? std::string("/") : path) + ": " + message);
}

const Json& require_field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    schema_fail(path + "/" + key, "missing required field");
  return j[key];
}

std::string canonical_dump(const Json& j) { return j.dump(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    schema_fail(path, "rational must be a \"p/q\" string");
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
}

GaussianRational gaussian_from_json(const Json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer())  // plain rationals embed
    return GaussianRational{rational_from_json(j, path), Rational(0)};
  if (!j.is_object()) schema_fail(path, "exact-complex scalar must be {\"re\",\"im\"}");
  return GaussianRational{rational_from_json(require_field(j, "re", path), path + "/re"),
                          rational_from_json(require_field(j, "im", path), path + "/im")};
}

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (j.is_string())  // allow exact-looking inputs in the numeric domain
    return Complex{rational_from_json(j, path).get_d(), 0.0};
  if (!j.is_object()) schema_fail(path, "complex scalar must be {\"re\",\"im\"} or a number");
  const Json& re = require_field(j, "re", path);
  const Json& im = require_field(j, "im", path);
  auto part = [&](const Json& v, const std::string& p) -> double {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return rational_from_json(v, p).get_d();
    schema_fail(p, "expected a number");
  };
  return Complex{part(re, path + "/re"), part(im, path + "/im")};
}

Json root_system_to_json(const RootSystem& rs) {
  if (!rs.name().empty()) return Json{{"type", rs.name()}};
  Json rows = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"cartan", rows}};
}

std::shared_ptr<const RootSystem> root_system_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return RootSystem::named(j.get<std::string>());
  if (!j.is_object()) schema_fail(path, "root system must be {\"type\":...} or {\"cartan\":...}");
  if (j.contains("type")) {
    const Json& t = j["type"];
    if (!t.is_string()) schema_fail(path + "/type", "type must be a string");
    try {
      return RootSystem::named(t.get<std::string>());
    } catch (const Error& e) {
      schema_fail(path + "/type", e.what());
    }
  }
  if (j.contains("cartan")) {
    const Json& c = j["cartan"];
    if (!c.is_array()) schema_fail(path + "/cartan", "cartan must be an array of rows");
    std::vector<std::vector<long>> a;
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (!c[r].is_array())
        schema_fail(path + "/cartan/" + std::to_string(r), "row must be an array");
      std::vector<long> row;
      for (const Json& x : c[r]) {
        if (!x.is_number_integer())
          schema_fail(path + "/cartan/" + std::to_string(r), "entries must be integers");
        row.push_back(x.get<long>());
      }
      a.push_back(std::move(row));
    }
    try {
      return RootSystem::from_cartan(a);
    } catch (const Error& e) {
      schema_fail(path + "/cartan", e.what());
    }
  }
  schema_fail(path, "root system needs \"type\" or \"cartan\"");
}

Json coweight_to_json(const Coweight& lam) {
  Json out = Json::array();
  for (long p : lam.pairings) out.push_back(p);
  return out;
}

Coweight coweight_from_json(const Json& j, int rank, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "coweight must be an integer array");
  Coweight lam;
  for (const Json& x : j) {
    if (!x.is_number_integer()) schema_fail(path, "coweight entries must be integers");
    lam.pairings.push_back(x.get<long>());
  }
  if (int(lam.pairings.size()) != rank) schema_fail(path, "coweight rank mismatch");
  return lam;
}

Json super_params_to_json(const SuperParams& sp) {
  Json coweights = Json::array();
  for (const auto& lam : sp.coweights) coweights.push_back(coweight_to_json(lam));
  Json alpha = Json::array();
  for (long a : sp.alpha) alpha.push_back(a);
  return Json{{"root_system", root_system_to_json(*sp.rs)},
              {"alpha", alpha},
              {"coweights", coweights},
              {"z", complex_list_to_json(sp.z)},
              {"h_alpha", complex_list_to_json(sp.h_alpha)},
              {"h_lambda", complex_list_to_json(sp.h_lambda)},
              {"kappa", scalar_to_json(sp.kappa)},
              {"variant", sp.variant.name()}};
}

SuperParams super_params_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "superpotential params must be an object");
  SuperParams sp;
  sp.rs = root_system_from_json(require_field(j, "root_system", path), path + "/root_system");
  const Json& alpha = require_field(j, "alpha", path);
  if (!alpha.is_array()) schema_fail(path + "/alpha", "alpha must be an integer array");
  for (const Json& a : alpha) {
    if (!a.is_number_integer() || a.get<long>() < 0)
      schema_fail(path + "/alpha", "alpha entries must be non-negative integers");
    sp.alpha.push_back(a.get<long>());
  }
  if (j.contains("coweights")) {
    const Json& cw = j["coweights"];
    if (!cw.is_array()) schema_fail(path + "/coweights", "coweights must be an array");
    for (std::size_t n = 0; n < cw.size(); ++n)
      sp.coweights.push_back(
          coweight_from_json(cw[n], sp.rs->rank(), path + "/coweights/" + std::to_string(n)));
  }
  if (j.contains("z")) {
    const Json& z = j["z"];
    if (!z.is_array()) schema_fail(path + "/z", "z must be an array");
    for (std::size_t n = 0; n < z.size(); ++n)
      sp.z.push_back(complex_from_json(z[n], path + "/z/" + std::to_string(n)));
  }
  const Json& ha = require_field(j, "h_alpha", path);
  if (!ha.is_array()) schema_fail(path + "/h_alpha", "h_alpha must be an array");
  for (std::size_t i = 0; i < ha.size(); ++i)
    sp.h_alpha.push_back(complex_from_json(ha[i], path + "/h_alpha/" + std::to_string(i)));
  if (j.contains("h_lambda")) {
    const Json& hl = j["h_lambda"];
    if (!hl.is_array()) schema_fail(path + "/h_lambda", "h_lambda must be an array");
    for (std::size_t n = 0; n < hl.size(); ++n)
      sp.h_lambda.push_back(complex_from_json(hl[n], path + "/h_lambda/" + std::to_string(n)));
  }
  if (j.contains("kappa")) sp.kappa = complex_from_json(j["kappa"], path + "/kappa");
  if (j.contains("variant")) {
    const Json& v = j["variant"];
    if (!v.is_string()) schema_fail(path + "/variant", "variant must be a string");
    try {
      sp.variant = Variant::parse(v.get<std::string>());
    } catch (const Error& e) {
      schema_fail(path + "/variant", e.what());
    }
  }
  try {
    sp.validate();
  } catch (const SchemaError& e) {
    schema_fail(path, e.what());
  }
  return sp;
}

Json config_to_json(const Config<Complex>& cfg) {
  Json w = Json::object();
  for (std::size_t i = 0; i < cfg.w.size(); ++i)
    w[std::to_string(i)] = complex_list_to_json(cfg.w[i]);
  return Json{{"w", w}};
}

Config<Complex> config_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "config must be an object");
  const Json& w = require_field(j, "w", path);
  Config<Complex> cfg;
  if (w.is_array()) {  // per-node arrays in order
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<Complex> node;
      const std::string p = path + "/w/" + std::to_string(i);
      if (!w[i].is_array()) schema_fail(p, "node must be an array");
      for (std::size_t r = 0; r < w[i].size(); ++r)
        node.push_back(complex_from_json(w[i][r], p + "/" + std::to_string(r)));
      cfg.w.push_back(std::move(node));
    }
    return cfg;
  }
  if (!w.is_object()) schema_fail(path + "/w", "w must be an object or array of node arrays");
  std::size_t count = w.size();
  cfg.w.resize(count);
  for (auto it = w.begin(); it != w.end(); ++it) {
    const std::string p = path + "/w/" + it.key();
    std::size_t i = 0;
    try {
      i = std::stoul(it.key());
    } catch (...) {
      schema_fail(p, "node keys must be integer indices");
    }
    if (i >= count) schema_fail(p, "node index out of range");
    if (!it.value().is_array()) schema_fail(p, "node must be an array");
    for (std::size_t r = 0; r < it.value().size(); ++r)
      cfg.w[i].push_back(complex_from_json(it.value()[r], p + "/" + std::to_string(r)));
  }
  return cfg;
}

}  // namespace zastava
