#include "zastava/cli_driver.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zastava/checks.hpp"
#include "zastava/expr_parse.hpp"
#include "zastava/json_io.hpp"
#include "zastava/poisson.hpp"

namespace zastava {

namespace {

struct Common {
  std::string input;
  std::uint64_t seed = 42;
  double tol = 1e-12;
  std::string format = "json";
  std::string variant;
  std::string rs;
  long order = -1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "input file path, inline JSON, or '-' for stdin");
  cmd->add_option("--seed", c.seed, "master seed for randomized checks");
  cmd->add_option("--tol", c.tol, "numeric tolerance override");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--variant", c.variant, "superpotential sign variant (++, +-, -+, --)");
  cmd->add_option("--rs", c.rs, "root system name (overrides the input's root_system)");
  cmd->add_option("--order", c.order, "order override (hankel block size)");
}

bool log_enabled() {
  const char* v = std::getenv("ZASTAVA_LOG");
  return v && *v && std::string(v) != "0";
}

Json load_input(const std::string& input, std::istream& in) {
  std::string text;
  std::size_t pos = input.find_first_not_of(" \t\r\n");
  if (input.empty() || input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (pos != std::string::npos && (input[pos] == '{' || input[pos] == '[')) {
    text = input;
  } else {
    std::ifstream f(input);
    if (!f) throw SchemaError("cannot open input file: " + input);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("/: invalid JSON: ") + e.what());
  }
}

std::string input_domain(const Json& j) {
  if (j.is_object() && j.contains("domain")) {
    if (!j["domain"].is_string()) schema_fail("/domain", "domain must be a string");
    return j["domain"].get<std::string>();
  }
  return "rational";
}

template <class F>
Json with_domain(const std::string& dom, F&& f) {
  if (dom == "rational") return f(Rational{});
  if (dom == "exact-complex") return f(GaussianRational{});
  if (dom == "numeric-complex") return f(Complex{});
  schema_fail("/domain", "unknown domain \"" + dom + "\"");
}

template <class F>
Json with_exact_domain(const std::string& dom, F&& f) {
  if (dom == "rational") return f(Rational{});
  if (dom == "exact-complex") return f(GaussianRational{});
  schema_fail("/domain", "this subcommand needs an exact domain, got \"" + dom + "\"");
}

void emit(std::ostream& out, const Json& j) { out << canonical_dump(j) << "\n"; }

// --- subcommand bodies -------------------------------------------------------------

int cmd_convert(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  if (j.is_object() && j.contains("points")) {
    Json result = with_domain(input_domain(j), [&](auto tag) {
      using K = decltype(tag);
      return map_to_json(to_map(point_from_json<K>(j, "")));
    });
    emit(out, result);
    return 0;
  }
  if (j.is_object() && j.contains("Q")) {
    const std::string dom = input_domain(j);
    if (dom == "numeric-complex") {
      auto m = map_from_json<Complex>(j, "");
      emit(out, point_to_json(from_map_numeric(m, RootOptions{c.tol, 400})));
      return 0;
    }
    Json result = with_exact_domain(dom, [&](auto tag) {
      using K = decltype(tag);
      auto m = map_from_json<K>(j, "");
      try {
        return point_to_json(from_map(m));
      } catch (const NonSplitting&) {
        // roots leave the exact domain; fall back to the numeric chart
        return point_to_json(from_map_numeric(m, RootOptions{c.tol, 400}));
      }
    });
    emit(out, result);
    return 0;
  }
  schema_fail("", "convert expects a point (\"points\") or an A1 map (\"Q\", \"R\")");
}

int cmd_glue(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  const Json& a = require_field(j, "a", "");
  const Json& b = require_field(j, "b", "");
  if (input_domain(a) != input_domain(b))
    schema_fail("/b/domain", "glue operands must share a domain");
  Json result = with_domain(input_domain(a), [&](auto tag) {
    using K = decltype(tag);
    return point_to_json(glue(point_from_json<K>(a, "/a"), point_from_json<K>(b, "/b")));
  });
  emit(out, result);
  return 0;
}

int cmd_involute(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  Json result = with_domain(input_domain(j), [&](auto tag) {
    using K = decltype(tag);
    return point_to_json(involution(point_from_json<K>(j, "")));
  });
  emit(out, result);
  return 0;
}

int cmd_boundary(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  const std::string dom = input_domain(j);
  if (dom == "numeric-complex") {
    auto p = point_from_json<Complex>(j, "");
    emit(out, Json{{"f_squared", scalar_to_json(boundary_sq(p))},
                   {"f_principal", scalar_to_json(boundary_numeric(p))}});
    return 0;
  }
  Json result = with_exact_domain(dom, [&](auto tag) {
    using K = decltype(tag);
    return Json{{"f_squared", scalar_to_json(boundary_sq(point_from_json<K>(j, "")))}};
  });
  emit(out, result);
  return 0;
}

int cmd_pi(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  Json result = with_domain(input_domain(j), [&](auto tag) {
    using K = decltype(tag);
    return divisor_to_json(pi_alpha(point_from_json<K>(j, "")));
  });
  emit(out, result);
  return 0;
}

int cmd_project(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  const Json& pt = require_field(j, "point", "");
  const Json& node = require_field(j, "node", "");
  if (!node.is_number_integer()) schema_fail("/node", "node must be an integer index");
  Json result = with_domain(input_domain(pt), [&](auto tag) {
    using K = decltype(tag);
    return point_to_json(sl2_projection(point_from_json<K>(pt, "/point"), node.get<int>()));
  });
  emit(out, result);
  return 0;
}

int cmd_extpair(const Common& c, std::istream& in, std::ostream& out, std::ostream& err) {
  Json j = load_input(c.input, in);
  bool agree = true;
  Json result = with_exact_domain(input_domain(j), [&](auto tag) {
    using K = decltype(tag);
    auto p = point_from_json<K>(j, "");
    auto closed = ext_class(p, ExtRoute::closed_form);
    agree = (closed == ext_class(p, ExtRoute::bezout_oracle));
    return ext_class_to_json(closed);
  });
  emit(out, result);
  if (!agree) {
    err << "zastava: ext_class routes disagree (identity failure)\n";
    return 1;
  }
  return 0;
}

int cmd_hankel(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  if (j.is_object() && j.contains("points")) {
    Json result = with_exact_domain(input_domain(j), [&](auto tag) {
      using K = decltype(tag);
      auto rep = kronecker_check(point_from_json<K>(j, ""));
      Json c_tilde = Json::array(), cc = Json::array();
      for (const K& x : rep.c_tilde.c) c_tilde.push_back(scalar_to_json(x));
      for (const K& x : rep.c.c) cc.push_back(scalar_to_json(x));
      return Json{{"a", rep.a},
                  {"c", cc},
                  {"c_tilde", c_tilde},
                  {"det_l", scalar_to_json(rep.det_l)},
                  {"det_tilde", scalar_to_json(rep.det_tilde)},
                  {"resultant", scalar_to_json(rep.resultant_value)},
                  {"sigma", scalar_to_json(rep.sigma)},
                  {"sigma_expected", rep.sigma_expected},
                  {"unit_product", scalar_to_json(rep.unit_product)},
                  {"tail_routes_agree", rep.tail_routes_agree},
                  {"resultant_routes_agree", rep.resultant_routes_agree}};
    });
    emit(out, result);
    return 0;
  }
  Json result = with_exact_domain(input_domain(j), [&](auto tag) {
    using K = decltype(tag);
    auto e = ext_class_from_json<K>(j, "");
    int size = c.order >= 0 ? int(c.order) : e.a;
    LaurentTail<K> tail{e.c};
    return Json{{"a", e.a}, {"order", size}, {"det", scalar_to_json(hankel_det(tail, size))}};
  });
  emit(out, result);
  return 0;
}

SessionPtr session_from_input(const Json& j, const Common& c) {
  std::shared_ptr<const RootSystem> rs;
  if (!c.rs.empty())
    rs = RootSystem::named(c.rs);
  else
    rs = root_system_from_json(require_field(j, "root_system", ""), "/root_system");
  const Json& alpha = require_field(j, "alpha", "");
  if (!alpha.is_array()) schema_fail("/alpha", "alpha must be an integer array");
  std::vector<long> a;
  for (const Json& x : alpha) {
    if (!x.is_number_integer() || x.get<long>() < 0)
      schema_fail("/alpha", "alpha entries must be non-negative integers");
    a.push_back(x.get<long>());
  }
  BracketTable table = BracketTable::standard;
  if (j.contains("table")) {
    std::string t = j["table"].get<std::string>();
    if (t == "corrupted")
      table = BracketTable::corrupted_test_fixture;
    else if (t != "standard")
      schema_fail("/table", "table must be \"standard\" or \"corrupted\"");
  }
  return std::make_shared<ChartSession>(std::move(rs), std::move(a), table);
}

int cmd_bracket(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  auto session = session_from_input(j, c);
  const Json& f = require_field(j, "f", "");
  const Json& g = require_field(j, "g", "");
  if (!f.is_string() || !g.is_string())
    schema_fail("/f", "f and g must be expression strings");
  ChartExpr fe = parse_chart_expr(f.get<std::string>(), session);
  ChartExpr ge = parse_chart_expr(g.get<std::string>(), session);
  emit(out, Json{{"f", fe.to_string()},
                 {"g", ge.to_string()},
                 {"bracket", bracket(fe, ge).to_string()}});
  return 0;
}

Json identity_reports_to_json(const std::vector<IdentityReport>& reports, bool& all_hold) {
  Json items = Json::array();
  all_hold = true;
  for (const auto& r : reports) {
    all_hold = all_hold && r.holds;
    items.push_back(Json{{"identity", r.identity},
                         {"status", r.holds ? "holds" : "fails"},
                         {"residue", r.residue}});
  }
  return items;
}

int cmd_jacobi(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  auto session = session_from_input(j, c);
  bool all_hold = true;
  Json items = identity_reports_to_json(jacobi_check(session), all_hold);
  emit(out, Json{{"all_hold", all_hold}, {"identities", items}});
  return all_hold ? 0 : 1;
}

struct SuperInput {
  SuperParams params;
  Config<Complex> config;
  Json raw;
};

SuperInput load_super(const Common& c, std::istream& in) {
  Json j = load_input(c.input, in);
  SuperInput si{super_params_from_json(require_field(j, "params", ""), "/params"),
                config_from_json(require_field(j, "config", ""), "/config"), j};
  if (!c.variant.empty()) si.params.variant = Variant::parse(c.variant);
  return si;
}

std::vector<std::vector<Complex>> s_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "s must be an array of per-node arrays");
  std::vector<std::vector<Complex>> s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!j[i].is_array()) schema_fail(p, "node entry must be an array");
    std::vector<Complex> node;
    for (std::size_t r = 0; r < j[i].size(); ++r)
      node.push_back(complex_from_json(j[i][r], p + "/" + std::to_string(r)));
    s.push_back(std::move(node));
  }
  return s;
}

int cmd_super_eval(const Common& c, std::istream& in, std::ostream& out) {
  SuperInput si = load_super(c, in);
  auto s = s_from_json(require_field(si.raw, "s", ""), "/s");
  WEval we = superpotential_w(si.params, si.config, s);
  emit(out, Json{{"variant", si.params.variant.name()},
                 {"value", scalar_to_json(we.value)},
                 {"gradient", Json{{"s", complex_grid_to_json(we.grad_s)},
                                   {"w", complex_grid_to_json(we.grad_w)},
                                   {"z", complex_list_to_json(we.grad_z)},
                                   {"h_alpha", complex_list_to_json(we.grad_h_alpha)},
                                   {"h_lambda", complex_list_to_json(we.grad_h_lambda)}}}});
  return 0;
}

int cmd_super_critical(const Common& c, std::istream& in, std::ostream& out) {
  SuperInput si = load_super(c, in);
  CriticalSection sect = critical_section(si.params, si.config);
  emit(out, Json{{"variant", si.params.variant.name()},
                 {"s_star", complex_grid_to_json(sect.s_star)},
                 {"t", complex_grid_to_json(sect.t)},
                 {"hessian_diag", complex_grid_to_json(sect.hessian_diag)}});
  return 0;
}

int cmd_super_defect(const Common& c, std::istream& in, std::ostream& out) {
  SuperInput si = load_super(c, in);
  DefectReport rep = lagrangian_defect(si.params, si.config, 1e-5, c.tol > 0 ? c.tol : 1e-9);
  emit(out, Json{{"variant", si.params.variant.name()},
                 {"g", complex_grid_to_json(rep.g)},
                 {"defect", complex_grid_to_json(rep.defect)},
                 {"defect_norm", rep.max_abs_defect},
                 {"fd_max_error", rep.fd_max_error},
                 {"tolerance", rep.tolerance},
                 {"vanishes", rep.vanishes}});
  return 0;
}

int cmd_super_compare(const Common& c, std::istream& in, std::ostream& out) {
  SuperInput si = load_super(c, in);
  RestrictedGradientReport rep = restricted_gradient(si.params, si.config);
  emit(out,
       Json{{"variant", si.params.variant.name()},
            {"value", scalar_to_json(rep.at_section.value)},
            {"stationarity_residual", rep.stationarity_residual},
            {"phi_gradient_mismatch", rep.max_mismatch},
            {"max_w_mismatch", rep.max_w_mismatch},
            {"max_z_mismatch", rep.max_z_mismatch},
            {"h_components_equal", rep.h_components_equal},
            {"gradient", Json{{"w", complex_grid_to_json(rep.at_section.grad_w)},
                              {"z", complex_list_to_json(rep.at_section.grad_z)}}},
            {"phi_gradient", Json{{"w", complex_grid_to_json(rep.phi.dw)},
                                  {"z", complex_list_to_json(rep.phi.dz)}}}});
  return 0;
}

int cmd_super_exponents(const Common& c, std::istream& in, std::ostream& out) {
  Json j = load_input(c.input, in);
  SuperParams params = super_params_from_json(require_field(j, "params", ""), "/params");
  if (!c.variant.empty()) params.variant = Variant::parse(c.variant);
  Json entries = Json::array();
  for (const auto& e : exponent_table(params))
    entries.push_back(Json{{"kind", e.kind},
                           {"factor", e.factor},
                           {"exponent", scalar_to_json(e.exponent)}});
  emit(out, Json{{"variant", params.variant.name()},
                 {"kappa", scalar_to_json(params.kappa)},
                 {"entries", entries}});
  return 0;
}

int cmd_check(const Common& c, std::ostream& out) {
  CheckSuiteReport rep = run_check_suite(c.seed, 1);
  if (c.format == "csv") {
    out << "id,trials,failures\n";
    for (const auto& r : rep.results)
      out << r.id << "," << r.trials << "," << r.failures << "\n";
  } else {
    Json results = Json::array();
    for (const auto& r : rep.results) {
      Json notes = Json::array();
      for (const auto& n : r.notes) notes.push_back(n);
      results.push_back(Json{{"id", r.id},
                             {"trials", r.trials},
                             {"failures", r.failures},
                             {"notes", notes}});
    }
    emit(out, Json{{"seed", rep.seed},
                   {"scale", rep.scale},
                   {"status", rep.all_passed() ? "pass" : "fail"},
                   {"total_trials", rep.total_trials()},
                   {"total_failures", rep.total_failures()},
                   {"results", results}});
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for zastava charts"};
  app.require_subcommand(1);
  Common c;

  std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;
  auto add = [&](const char* name, const char* desc, std::function<int()> fn,
                 CLI::App* parent = nullptr) {
    CLI::App* cmd = (parent ? parent : &app)->add_subcommand(name, desc);
    add_common(cmd, c);
    handlers.emplace_back(cmd, std::move(fn));
    return cmd;
  };

  add("convert", "A1 chart coordinates <-> (Q, R) map",
      [&] { return cmd_convert(c, in, out); });
  add("glue", "factorization gluing of two disjoint points",
      [&] { return cmd_glue(c, in, out); });
  add("involute", "the chart involution", [&] { return cmd_involute(c, in, out); });
  add("boundary", "boundary function F^2 (and principal F on numeric points)",
      [&] { return cmd_boundary(c, in, out); });
  add("pi", "colored divisor of a point", [&] { return cmd_pi(c, in, out); });
  add("project", "SL2 projection to one node",
      [&] { return cmd_project(c, in, out); });
  add("extpair", "ext pairing class of an A1 point",
      [&] { return cmd_extpair(c, in, out, err); });
  add("hankel", "Hankel determinants / Kronecker report",
      [&] { return cmd_hankel(c, in, out); });
  add("bracket", "Poisson bracket of two chart expressions",
      [&] { return cmd_bracket(c, in, out); });
  add("jacobi", "Jacobi identity sweep over chart generators",
      [&] { return cmd_jacobi(c, in, out); });

  CLI::App* sup = app.add_subcommand("superpotential", "superpotential computations");
  sup->require_subcommand(1);
  add("eval", "value and gradients at given s", [&] { return cmd_super_eval(c, in, out); }, sup);
  add("critical", "closed-form critical section",
      [&] { return cmd_super_critical(c, in, out); }, sup);
  add("defect", "Lagrangian defect of the critical section",
      [&] { return cmd_super_defect(c, in, out); }, sup);
  add("compare", "restricted gradient vs master-function gradient",
      [&] { return cmd_super_compare(c, in, out); }, sup);
  add("exponents", "exponent table of the open-stratum generator",
      [&] { return cmd_super_exponents(c, in, out); }, sup);

  add("check", "seeded identity-check suite", [&] { return cmd_check(c, out); });

  try {
    // CLI11's vector overload consumes arguments in reverse order
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "zastava: " << e.what() << "\n";
    return 2;
  }

  for (auto& [cmd, fn] : handlers) {
    if (!cmd->parsed()) continue;
    if (log_enabled()) err << "[zastava] running " << cmd->get_name() << "\n";
    try {
      return fn();
    } catch (const Error& e) {
      emit(out, Json{{"error", Json{{"name", e.name()}, {"message", e.what()}}}});
      if (log_enabled()) err << "[zastava] error " << e.name() << ": " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      err << "zastava: " << e.what() << "\n";
      return 2;
    }
  }
  err << "zastava: no subcommand selected\n";
  return 2;
}

}  // namespace zastava
