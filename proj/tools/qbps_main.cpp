// Command-line front end: exact Kac polynomials, refined/Hodge BPS
// invariants of deformed tripled quivers, graded cohomology series, and the
// noncommutative potential toolbox.
//
// Exit codes: 0 success, 2 input error, 3 capacity error, 4 internal
// invariant violation (including failed symbolic checks).

#include "qbps/bps.hpp"
#include "qbps/kac.hpp"
#include "qbps/kac_hua.hpp"
#include "qbps/potential.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

namespace {

constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;
using namespace qbps;

struct CommonOpts {
  std::string quiver_path;
  std::string mu_text;
  std::string dim_text;
  int cutoff = 6;
  int prime = 2;
  std::string format = "text";
  std::string cache_path;
  bool no_cache = false;
  std::string backend = "oracle";
  unsigned long long max_reps = OracleCaps{}.max_reps;
  unsigned long long max_group = OracleCaps{}.max_group_order;
  unsigned long long max_end = OracleCaps{}.max_end_algebra;
};

void add_caps_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--max-reps", o.max_reps, "enumeration cap on representation counts");
  cmd->add_option("--max-group-order", o.max_group, "cap on the change-of-basis group order");
  cmd->add_option("--max-end-algebra", o.max_end, "cap on endomorphism algebra size");
}

void add_format_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_cache_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--cache", o.cache_path, "Kac cache file (default: user cache directory)");
  cmd->add_flag("--no-cache", o.no_cache, "bypass the Kac cache");
}

void add_backend_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--kac-backend", o.backend,
                  "Kac backend: oracle (counting), hua (generating function), hybrid")
      ->check(CLI::IsMember({"oracle", "hua", "hybrid"}));
}

OracleCaps caps_of(const CommonOpts& o) {
  OracleCaps caps;
  caps.max_reps = o.max_reps;
  caps.max_group_order = o.max_group;
  caps.max_end_algebra = o.max_end;
  return caps;
}

std::string default_cache_path(const Quiver& q) {
  const char* xdg = std::getenv("XDG_CACHE_HOME");
  std::filesystem::path dir;
  if (xdg && *xdg) {
    dir = std::filesystem::path(xdg) / "qbps";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    dir = std::filesystem::path(home) / ".cache" / "qbps";
  } else {
    dir = std::filesystem::path(".") / ".qbps-cache";
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  return (dir / ("kac-" + hex64(q.hash()) + ".json")).string();
}

KacProvider provider_of(const CommonOpts& o, const Quiver& q) {
  KacOptions opts;
  opts.caps = caps_of(o);
  if (!o.no_cache && o.backend != "hua") {
    std::string path = o.cache_path.empty() ? default_cache_path(q) : o.cache_path;
    opts.cache = std::make_shared<KacCache>(path, q);
  }
  if (o.backend == "hua") return make_hua_provider();
  if (o.backend == "hybrid") return make_hybrid_provider(opts);
  return make_oracle_provider(opts);
}

MuVector mu_of(const CommonOpts& o, const Quiver& q) {
  if (o.mu_text.empty()) return MuVector(q.num_vertices(), Rational(0));
  MuVector mu = parse_mu(o.mu_text);
  check_mu(q, mu);
  return mu;
}

void emit(const CommonOpts& o, const json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

json result_header(const std::string& command) {
  return {{"tool_version", kToolVersion}, {"command", command}};
}

int run_kac(const CommonOpts& o) {
  Quiver q = Quiver::load_file(o.quiver_path);
  DimVector d = parse_dim(o.dim_text);
  check_dim(q, d);
  IntPoly poly = provider_of(o, q)(q, d);
  json j = result_header("kac");
  j["quiver_hash"] = hex64(q.hash());
  j["dim"] = d;
  j["kac"] = intpoly_to_json(poly);
  emit(o, j, intpoly_str(poly));
  return 0;
}

int run_dt(const CommonOpts& o) {
  Quiver q = Quiver::load_file(o.quiver_path);
  DimVector d = parse_dim(o.dim_text);
  check_dim(q, d);
  MuVector mu = mu_of(o, q);
  KacProvider kac = provider_of(o, q);
  TatePoly refined = dt_refined(q, mu, d, kac);
  HodgeMultiset hodge = dt_hodge(q, mu, d, kac);
  json j = result_header("dt");
  j["dim"] = d;
  j["refined"] = refined.to_json();
  j["hodge"] = hodge_to_json(hodge);
  emit(o, j, "refined: " + refined.str() + "\nhodge:   " + hodge_str(hodge));
  return 0;
}

int run_series(const CommonOpts& o, const std::string& kind) {
  Quiver q = Quiver::load_file(o.quiver_path);
  MuVector mu = mu_of(o, q);
  GradedSeries series(q.num_vertices(), o.cutoff);
  if (kind == "free") {
    series = free_coha_series(q, o.cutoff);
  } else if (kind == "coha") {
    series = coha_pbw_series(q, mu, o.cutoff, provider_of(o, q));
  } else if (kind == "stack") {
    series = stack_series_deformed(q, mu, o.cutoff, provider_of(o, q));
  } else {
    throw input_error("unknown series kind '" + kind + "'");
  }
  json j = result_header("series");
  j["kind"] = kind;
  j["cutoff"] = o.cutoff;
  j["series"] = series.to_json();
  std::string text;
  for (const auto& [d, c] : series.coeffs()) {
    text += "x^[" + dim_str(d) + "]: " + c.str() + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, j, text);
  return 0;
}

int run_count(const CommonOpts& o) {
  Quiver q = Quiver::load_file(o.quiver_path);
  DimVector d = parse_dim(o.dim_text);
  check_dim(q, d);
  OrbitReport report = count_orbits(q, d, o.prime, caps_of(o));
  json j = result_header("count");
  j["dim"] = d;
  j["prime"] = o.prime;
  j.update(report.to_json());
  std::string text = "total_reps:            " + std::to_string(report.total_reps) +
                     "\norbit_count_all:       " + std::to_string(report.orbit_count_all) +
                     "\nabs_indec_orbit_count: " + std::to_string(report.abs_indec_orbit_count) +
                     "\ngroup_order:           " + report.group_order.get_str();
  emit(o, j, text);
  return 0;
}

struct PotentialOpts {
  std::string action;
  std::string potential_text;
  std::string arrow;
  std::vector<std::string> substitutions;
  int power = 2;
  bool on_triple = false;
};

int run_potential(const CommonOpts& o, const PotentialOpts& po) {
  json j = result_header("potential");
  j["action"] = po.action;

  if (po.action == "check-conifold") {
    ConifoldReport rep = check_conifold();
    j["pass"] = rep.pass;
    j["computed"] = potential_str(rep.computed);
    j["residual"] = potential_str(rep.residual);
    emit(o, j,
         rep.pass ? "PASS"
                  : "FAIL\nresidual: " + potential_str(rep.residual));
    return rep.pass ? 0 : 4;
  }

  Quiver loaded = Quiver::load_file(o.quiver_path);

  if (po.action == "check-gkw") {
    MuVector mu = mu_of(o, loaded);
    GkwReport rep = check_gkw(loaded, mu);
    j["pass"] = rep.pass;
    j["detail"] = rep.detail;
    emit(o, j, rep.pass ? "PASS" : "FAIL\n" + rep.detail);
    return rep.pass ? 0 : 4;
  }

  if (po.action == "tripled") {
    MuVector mu = mu_of(o, loaded);
    Potential w = o.mu_text.empty() ? tripled_potential(loaded)
                                    : mu_potential(loaded, mu, po.power);
    j["potential"] = potential_str(w);
    emit(o, j, potential_str(w));
    return 0;
  }

  Quiver q = po.on_triple ? triple_quiver(loaded) : loaded;
  if (po.potential_text.empty())
    throw input_error("--potential is required for action '" + po.action + "'");
  Potential w = parse_potential(q, po.potential_text);

  if (po.action == "derive") {
    if (po.arrow.empty()) throw input_error("--arrow is required for action 'derive'");
    NCPoly d = cyclic_derivative(q, w, po.arrow);
    j["arrow"] = po.arrow;
    j["derivative"] = ncpoly_str(d);
    emit(o, j, ncpoly_str(d));
    return 0;
  }
  if (po.action == "jacobi") {
    auto rels = jacobi_relations(q, w);
    j["relations"] = json::array();
    std::string text;
    for (const auto& [id, rel] : rels) {
      j["relations"].push_back({{"arrow", id}, {"relation", ncpoly_str(rel)}});
      text += id + ": " + ncpoly_str(rel) + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit(o, j, text);
    return 0;
  }
  if (po.action == "substitute") {
    std::map<std::string, NCPoly> sigma;
    for (const std::string& s : po.substitutions) {
      std::size_t eq = s.find('=');
      if (eq == std::string::npos)
        throw input_error("substitution must look like 'arrow = expression'");
      std::string id = s.substr(0, eq);
      while (!id.empty() && std::isspace(static_cast<unsigned char>(id.back()))) id.pop_back();
      sigma[id] = parse_ncpoly(q, s.substr(eq + 1));
    }
    Potential out = substitute(q, w, sigma);
    j["potential"] = potential_str(out);
    emit(o, j, potential_str(out));
    return 0;
  }
  throw input_error("unknown potential action '" + po.action + "'");
}

json error_json(const std::string& kind, const std::string& detail) {
  return {{"error", {{"kind", kind}, {"detail", detail}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kac polynomials and BPS invariants of deformed tripled quivers"};
  app.require_subcommand(1);

  CommonOpts o;
  PotentialOpts po;
  std::string series_kind = "free";

  CLI::App* kac = app.add_subcommand("kac", "Kac polynomial a_{Q,d}(q)");
  kac->add_option("--quiver", o.quiver_path, "quiver JSON file")->required();
  kac->add_option("--dim", o.dim_text, "dimension vector, e.g. 1,1")->required();
  add_format_flag(kac, o);
  add_cache_flags(kac, o);
  add_caps_flags(kac, o);
  add_backend_flag(kac, o);

  CLI::App* dt = app.add_subcommand("dt", "refined and Hodge BPS invariants");
  dt->add_option("--quiver", o.quiver_path, "quiver JSON file")->required();
  dt->add_option("--dim", o.dim_text, "dimension vector")->required();
  dt->add_option("--mu", o.mu_text, "deformation parameter, e.g. 1,-1 or 1/2,0");
  add_format_flag(dt, o);
  add_cache_flags(dt, o);
  add_caps_flags(dt, o);
  add_backend_flag(dt, o);

  CLI::App* series = app.add_subcommand("series", "graded cohomology series");
  series->add_option("--kind", series_kind, "free | coha | stack")
      ->check(CLI::IsMember({"free", "coha", "stack"}));
  series->add_option("--quiver", o.quiver_path, "quiver JSON file")->required();
  series->add_option("--mu", o.mu_text, "deformation parameter");
  series->add_option("--cutoff", o.cutoff, "total-degree cutoff (default 6)");
  add_format_flag(series, o);
  add_cache_flags(series, o);
  add_caps_flags(series, o);
  add_backend_flag(series, o);

  CLI::App* pot = app.add_subcommand("potential", "noncommutative potential toolbox");
  pot->add_option("--action", po.action,
                  "derive | jacobi | substitute | tripled | check-gkw | check-conifold")
      ->required();
  pot->add_option("--quiver", o.quiver_path, "quiver JSON file");
  pot->add_option("--mu", o.mu_text, "deformation parameter");
  pot->add_option("--power", po.power, "power n in the deformation term (default 2)");
  pot->add_option("--potential", po.potential_text, "potential in text form");
  pot->add_option("--arrow", po.arrow, "arrow id for derive");
  pot->add_option("--sub", po.substitutions, "substitution 'arrow = expression' (repeatable)");
  pot->add_flag("--triple", po.on_triple, "operate on the tripled quiver");
  add_format_flag(pot, o);

  CLI::App* count = app.add_subcommand("count", "brute-force orbit counting over F_p");
  count->add_option("--quiver", o.quiver_path, "quiver JSON file")->required();
  count->add_option("--dim", o.dim_text, "dimension vector")->required();
  count->add_option("--prime", o.prime, "field size (prime)")->required();
  add_format_flag(count, o);
  add_caps_flags(count, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << error_json("input", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    if (kac->parsed()) return run_kac(o);
    if (dt->parsed()) return run_dt(o);
    if (series->parsed()) return run_series(o, series_kind);
    if (pot->parsed()) return run_potential(o, po);
    if (count->parsed()) return run_count(o);
    return 2;
  } catch (const capacity_error& e) {
    json j = error_json("capacity", e.what());
    j["error"]["required"] = e.required_size;
    std::cout << j.dump(2) << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cout << error_json("input", e.what()).dump(2) << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cout << error_json("internal", e.what()).dump(2) << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cout << error_json("internal", e.what()).dump(2) << "\n";
    return 4;
  }
}
