#include "veccomp/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "veccomp/asymptotics.hpp"
#include "veccomp/congruence.hpp"
#include "veccomp/counting.hpp"
#include "veccomp/enumeration.hpp"
#include "veccomp/faadibruno.hpp"
#include "veccomp/weight_function.hpp"

namespace veccomp::cli {

namespace {

using nlohmann::ordered_json;

RunConfig with_base_dir(const RunConfig& config, const std::string& dir) {
  RunConfig c = config;
  c.base_dir = dir;
  return c;
}

ordered_json field(const ordered_json& j, const char* key) {
  return j.contains(key) ? j[key] : ordered_json();
}

MultiIndex parse_target(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw CliError("bad-param", std::string(what) + " must be a nonempty array");
  std::vector<int> coords;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw CliError("bad-param", std::string(what) + " needs integers >= 0");
    coords.push_back(v.get<int>());
  }
  return MultiIndex(std::move(coords));
}

long require_long(const ordered_json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer())
    throw CliError("bad-param", std::string("missing integer parameter \"") + key + "\"");
  return params[key].get<long>();
}

long optional_long(const ordered_json& params, const char* key, long fallback) {
  if (!params.contains(key) || params[key].is_null()) return fallback;
  if (!params[key].is_number_integer())
    throw CliError("bad-param", std::string("parameter \"") + key + "\" must be an integer");
  return params[key].get<long>();
}

WeightFunction load_weights(const ordered_json& params, const RunConfig& config) {
  if (!params.contains("weights"))
    throw CliError("bad-param", "missing \"weights\" (path or inline spec)");
  const auto& w = params["weights"];
  nlohmann::json spec;
  if (w.is_string()) {
    std::string path = w.get<std::string>();
    if (!path.empty() && path[0] != '/') path = config.base_dir + "/" + path;
    std::ifstream in(path);
    if (!in) throw CliError("bad-weights", "cannot read weight spec " + path);
    try {
      in >> spec;
    } catch (const std::exception& e) {
      throw CliError("bad-weights", std::string("malformed weight spec: ") + e.what());
    }
  } else if (w.is_object()) {
    spec = w;
  } else {
    throw CliError("bad-param", "\"weights\" must be a path or an object");
  }
  try {
    return WeightFunction::parse(spec);
  } catch (const std::exception& e) {
    throw CliError("bad-weights", e.what());
  }
}

void require_cells(const MultiIndex& box, const RunConfig& config) {
  long long cells = 1;
  for (int i = 0; i < box.dim(); ++i) {
    cells *= box[i] + 1;
    if (cells > config.max_cells) {
      CliError err("cap-exceeded",
                   "requested box needs more than the configured cell cap");
      err.detail["estimated_cells"] = cells;
      err.detail["max_cells"] = config.max_cells;
      throw err;
    }
  }
}

void require_limits(long k, int dim, const RunConfig& config) {
  if (k > config.max_k) throw CliError("cap-exceeded", "k exceeds the configured cap");
  if (dim > config.max_dim)
    throw CliError("cap-exceeded", "dimension exceeds the configured cap");
}

std::optional<Modulus> parse_mod(const ordered_json& params) {
  if (!params.contains("mod") || params["mod"].is_null()) return std::nullopt;
  if (params["mod"].is_number_integer() && params["mod"].get<long long>() >= 2)
    return Modulus(BigInt(params["mod"].get<long>()));
  if (params["mod"].is_string()) return Modulus(BigInt(params["mod"].get<std::string>()));
  throw CliError("bad-param", "\"mod\" must be an integer >= 2");
}

ordered_json composition_to_json(const ColoredComposition& comp) {
  ordered_json j;
  auto parts = ordered_json::array();
  for (const auto& p : comp.parts) parts.push_back(p.coords());
  j["parts"] = std::move(parts);
  j["colors"] = comp.colors;
  return j;
}

ordered_json run_count(const ordered_json& params, const RunConfig& config) {
  long k = require_long(params, "k");
  MultiIndex target = parse_target(field(params, "target"), "target");
  WeightFunction f = load_weights(params, config);
  require_limits(k, target.dim(), config);
  require_cells(target, config);
  auto mod = parse_mod(params);
  ordered_json out;
  out["value"] = to_dec(binom(k, target, f, mod ? &*mod : nullptr));
  return out;
}

ordered_json run_cf(const ordered_json& params, const RunConfig& config) {
  MultiIndex target = parse_target(field(params, "target"), "target");
  WeightFunction f = load_weights(params, config);
  require_limits(0, target.dim(), config);
  require_cells(target, config);
  auto mod = parse_mod(params);
  ordered_json out;
  out["value"] = to_dec(composition_count(target, f, mod ? &*mod : nullptr));
  return out;
}

ordered_json run_enumerate(const ordered_json& params, const RunConfig& config) {
  MultiIndex target = parse_target(field(params, "target"), "target");
  WeightFunction f = load_weights(params, config);
  require_cells(target, config);
  std::optional<int> k;
  if (params.contains("k") && !params["k"].is_null())
    k = static_cast<int>(require_long(params, "k"));
  const long limit = optional_long(params, "limit", 100000);

  ordered_json out;
  auto comps = ordered_json::array();
  long emitted = 0;
  for_each_composition(target, k, f, [&](const ColoredComposition& comp) {
    comps.push_back(composition_to_json(comp));
    return ++emitted < limit;
  });
  out["count"] = emitted;
  out["compositions"] = std::move(comps);
  return out;
}

ordered_json run_sequence(const ordered_json& params, const RunConfig& config) {
  if (!params.contains("family") || !params["family"].is_string())
    throw CliError("bad-param", "missing \"family\"");
  const std::string family = params["family"].get<std::string>();
  const long max = require_long(params, "max");
  if (max < 0) throw CliError("bad-param", "\"max\" must be >= 0");
  const int dim = static_cast<int>(optional_long(params, "dim", 2));
  require_limits(0, dim, config);

  auto values = ordered_json::array();
  if (family == "delannoy") {
    for (long l = 0; l <= max; ++l) values.push_back(to_dec(delannoy(l, l)));
  } else if (family == "whitney") {
    for (long l = 0; l <= max; ++l) values.push_back(to_dec(whitney(l, l)));
  } else if (family == "andrews") {
    for (long l = 0; l <= max; ++l)
      values.push_back(to_dec(andrews_cf(MultiIndex::uniform(dim, static_cast<int>(l)))));
  } else if (family == "unitcube") {
    for (long l = 0; l <= max; ++l)
      values.push_back(to_dec(unit_cube_cf(MultiIndex::uniform(dim, static_cast<int>(l)))));
  } else if (family == "scolor") {
    WeightFunction f = WeightFunction::product(dim);
    for (long l = 1; l <= max; ++l) {
      MultiIndex target = MultiIndex::uniform(dim, static_cast<int>(l));
      require_cells(target, config);
      values.push_back(to_dec(composition_count(target, f)));
    }
  } else {
    throw CliError("bad-param", "unknown sequence family \"" + family + "\"");
  }
  return values;
}

ordered_json run_check(const ordered_json& params, const RunConfig& config) {
  if (!params.contains("theorem") || !params["theorem"].is_string())
    throw CliError("bad-param", "missing \"theorem\"");
  const std::string theorem = params["theorem"].get<std::string>();
  ordered_json args = params.contains("params") ? params["params"] : ordered_json::object();
  if (!args.is_object()) throw CliError("bad-param", "\"params\" must be an object");

  auto target_of = [&](const char* key) { return parse_target(field(args, key), key); };

  try {
    CongruenceReport report;
    if (theorem == "parity") {
      report = check_parity(require_long(args, "k"), target_of("target"),
                            load_weights(params, config));
    } else if (theorem == "prime-row") {
      report = check_prime_row(require_long(args, "p"), target_of("target"),
                               load_weights(params, config));
    } else if (theorem == "babbage") {
      report = check_babbage(require_long(args, "n"), require_long(args, "p"),
                             target_of("m"), load_weights(params, config));
    } else if (theorem == "modp") {
      report = check_mod_p_reduction(require_long(args, "n"), require_long(args, "p"),
                                     target_of("m"), load_weights(params, config));
    } else if (theorem == "prime-power") {
      report = check_prime_power_row(require_long(args, "p"),
                                     static_cast<int>(require_long(args, "e")),
                                     target_of("target"), load_weights(params, config));
    } else if (theorem == "non-multiple") {
      report = check_non_multiple_row(require_long(args, "n"), require_long(args, "p"),
                                      target_of("target"), load_weights(params, config));
    } else if (theorem == "divisibility") {
      report = check_divisibility(require_long(args, "k"), target_of("target"),
                                  load_weights(params, config));
    } else if (theorem == "pn-row") {
      report = check_pn_row(require_long(args, "p"), require_long(args, "n"),
                            load_weights(params, config));
    } else if (theorem == "lucas") {
      report = check_lucas(require_long(args, "k"), target_of("target"),
                           require_long(args, "p"), load_weights(params, config));
    } else if (theorem == "fast-modp") {
      report = check_fast_mod_p(require_long(args, "k"), target_of("target"),
                                require_long(args, "p"), load_weights(params, config));
    } else if (theorem == "glaisher") {
      report = check_glaisher(require_long(args, "k"), target_of("r"), target_of("m"),
                              require_long(args, "p"), load_weights(params, config));
    } else if (theorem == "recurrence") {
      report = check_linear_recurrence(require_long(args, "n"), require_long(args, "p"),
                                       static_cast<int>(require_long(args, "b")),
                                       load_weights(params, config));
    } else if (theorem == "razpet") {
      if (!args.contains("digits") || !args["digits"].is_array())
        throw CliError("bad-param", "razpet needs \"digits\" [[a,b],...]");
      std::vector<std::pair<int, int>> digits;
      for (const auto& d : args["digits"]) {
        if (!d.is_array() || d.size() != 2)
          throw CliError("bad-param", "each razpet digit is a pair");
        digits.emplace_back(d[0].get<int>(), d[1].get<int>());
      }
      report = check_razpet(require_long(args, "a"), require_long(args, "b"),
                            require_long(args, "c"), digits, require_long(args, "p"));
    } else {
      throw CliError("bad-param", "unknown theorem \"" + theorem + "\"");
    }
    return report.to_json();
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError("bad-param", e.what());
  }
}

ordered_json run_prime_criterion(const ordered_json& params, const RunConfig& config) {
  long q = require_long(params, "q");
  int dim = static_cast<int>(optional_long(params, "dim", 1));
  int cap = static_cast<int>(optional_long(params, "max_dim", config.mann_shanks_max_dim));
  if (q >= 2) require_cells(MultiIndex::uniform(std::max(dim, 1), static_cast<int>(q)), config);
  try {
    MannShanksResult result = mann_shanks(q, dim, cap);
    ordered_json out;
    out["verdict"] = result.prime_consistent ? "prime-consistent" : "composite";
    out["witnesses"] = result.witnesses;
    return out;
  } catch (const std::exception& e) {
    throw CliError("bad-param", e.what());
  }
}

ordered_json run_approx(const ordered_json& params, const RunConfig& config) {
  if (!params.contains("method") || !params["method"].is_string())
    throw CliError("bad-param", "missing \"method\"");
  const std::string method = params["method"].get<std::string>();
  ordered_json args = params.contains("params") ? params["params"] : ordered_json::object();

  ordered_json out;
  try {
    std::optional<BigInt> exact;
    double approx = 0;
    if (method == "clt") {
      long k = require_long(args, "k");
      MultiIndex target = parse_target(field(args, "target"), "target");
      if (!args.contains("steps") || !args["steps"].is_array())
        throw CliError("bad-param", "clt needs \"steps\" [[..],..]");
      std::vector<MultiIndex> steps;
      for (const auto& s : args["steps"]) steps.push_back(parse_target(s, "step"));
      approx = clt_approx(k, target, steps);
      if (BoxTable::volume_of(target) <= config.max_cells)
        exact = binom(k, target, WeightFunction::indicator(target.dim(), steps));
    } else if (method == "delannoy") {
      long l = require_long(args, "l");
      approx = delannoy_diag_asymp(l);
      exact = delannoy(l, l);
    } else if (method == "unitcube") {
      long l = require_long(args, "l");
      int dim = static_cast<int>(optional_long(args, "dim", 2));
      approx = unit_cube_diag_asymp(l, dim);
      exact = unit_cube_cf(MultiIndex::uniform(dim, static_cast<int>(l)));
    } else if (method == "onetwo") {
      long l = require_long(args, "l");
      int dim = static_cast<int>(optional_long(args, "dim", 2));
      approx = one_two_cube_diag_asymp(l, dim);
      MultiIndex target = MultiIndex::uniform(dim, static_cast<int>(l));
      if (BoxTable::volume_of(target) <= config.max_cells) {
        std::vector<MultiIndex> steps;
        std::vector<int> cur(static_cast<size_t>(dim), 1);
        for (long mask = 0; mask < (1L << dim); ++mask) {
          std::vector<int> c(static_cast<size_t>(dim));
          for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] = 1 + ((mask >> i) & 1);
          steps.emplace_back(std::move(c));
        }
        exact = composition_count(target, WeightFunction::indicator(dim, steps));
      }
    } else {
      throw CliError("bad-param", "unknown approx method \"" + method + "\"");
    }
    out["approx"] = approx;
    if (exact) {
      out["exact"] = to_dec(*exact);
      double e = exact->get_d();
      if (e != 0) out["rel_err"] = std::abs(approx - e) / std::abs(e);
    }
    return out;
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError("bad-param", e.what());
  }
}

ordered_json run_faa(const ordered_json& params, const RunConfig&) {
  MultiIndex target = parse_target(field(params, "target"), "target");
  auto terms = ordered_json::array();
  try {
    for (const auto& term : expand_partition_form(target)) {
      ordered_json t;
      t["coeff"] = to_dec(term.integer_coefficient());
      t["g_order"] = term.g_order;
      auto factors = ordered_json::array();
      for (const auto& [part, mult] : term.factors) {
        ordered_json fj;
        fj["part"] = part.coords();
        fj["mult"] = mult;
        factors.push_back(std::move(fj));
      }
      t["factors"] = std::move(factors);
      terms.push_back(std::move(t));
    }
  } catch (const std::exception& e) {
    throw CliError("bad-param", e.what());
  }
  return terms;
}

ordered_json run_batch(const ordered_json& params, const RunConfig& config);

ordered_json execute_impl(const std::string& subcommand, const ordered_json& params,
                          const RunConfig& config) {
  if (subcommand == "count") return run_count(params, config);
  if (subcommand == "cf") return run_cf(params, config);
  if (subcommand == "enumerate") return run_enumerate(params, config);
  if (subcommand == "sequence") return run_sequence(params, config);
  if (subcommand == "check") return run_check(params, config);
  if (subcommand == "prime-criterion") return run_prime_criterion(params, config);
  if (subcommand == "approx") return run_approx(params, config);
  if (subcommand == "faa") return run_faa(params, config);
  if (subcommand == "batch") return run_batch(params, config);
  throw CliError("bad-subcommand", "unknown subcommand \"" + subcommand + "\"");
}

ordered_json run_batch(const ordered_json& params, const RunConfig& config) {
  if (!params.contains("fixture") || !params["fixture"].is_string())
    throw CliError("bad-param", "batch needs a \"fixture\" path");
  std::string path = params["fixture"].get<std::string>();
  if (!path.empty() && path[0] != '/') path = config.base_dir + "/" + path;
  std::ifstream in(path);
  if (!in) throw CliError("bad-fixture", "cannot read fixture " + path);
  ordered_json fixture;
  try {
    in >> fixture;
  } catch (const std::exception& e) {
    throw CliError("bad-fixture", std::string("malformed fixture: ") + e.what());
  }
  if (!fixture.is_array()) throw CliError("bad-fixture", "fixture must be an array");

  std::string fixture_dir = ".";
  if (auto slash = path.find_last_of('/'); slash != std::string::npos)
    fixture_dir = path.substr(0, slash);
  const RunConfig item_config = with_base_dir(config, fixture_dir);

  const long n = static_cast<long>(fixture.size());
  std::vector<ordered_json> checks(static_cast<size_t>(n));
  // Independent pure checks; output order follows the fixture regardless of
  // completion order.
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto& item = fixture[static_cast<size_t>(i)];
    ordered_json entry;
    entry["name"] = item.contains("name") ? item["name"] : ordered_json("check-" + std::to_string(i));
    try {
      if (!item.contains("subcommand") || !item.contains("params"))
        throw CliError("bad-fixture", "fixture item needs subcommand and params");
      ordered_json result = execute_impl(item["subcommand"].get<std::string>(),
                                         item["params"], item_config);
      bool ok = true;
      auto mismatches = ordered_json::array();
      if (item.contains("expect")) {
        if (item["expect"].is_object()) {
          for (const auto& [key, want] : item["expect"].items()) {
            const bool has = result.contains(key);
            // order-insensitive comparison
            if (!has || nlohmann::json(result[key]) != nlohmann::json(want)) {
              ok = false;
              ordered_json mm;
              mm["key"] = key;
              mm["want"] = want;
              mm["got"] = has ? result[key] : ordered_json(nullptr);
              mismatches.push_back(std::move(mm));
            }
          }
        } else if (nlohmann::json(result) != nlohmann::json(item["expect"])) {
          ok = false;
          ordered_json mm;
          mm["want"] = item["expect"];
          mm["got"] = result;
          mismatches.push_back(std::move(mm));
        }
      }
      entry["status"] = ok ? "pass" : "fail";
      if (!ok) entry["mismatches"] = std::move(mismatches);
    } catch (const std::exception& e) {
      entry["status"] = "error";
      entry["message"] = e.what();
    }
    checks[static_cast<size_t>(i)] = std::move(entry);
  }

  long passed = 0;
  for (const auto& c : checks)
    if (c["status"] == "pass") ++passed;
  ordered_json out;
  out["total"] = n;
  out["passed"] = passed;
  out["failed"] = n - passed;
  out["checks"] = checks;
  return out;
}

ordered_json error_json(const CliError& e) {
  ordered_json out;
  out["error"] = ordered_json::object();
  out["error"]["code"] = e.code;
  out["error"]["message"] = e.what();
  if (!e.detail.is_null()) out["error"]["detail"] = e.detail;
  return out;
}

}  // namespace

RunConfig config_from_env() {
  RunConfig config;
  if (const char* cap = std::getenv("VECCOMP_MAX_CELLS")) {
    char* end = nullptr;
    long long v = std::strtoll(cap, &end, 10);
    if (end && *end == '\0' && v > 0) config.max_cells = v;
  }
  return config;
}

ordered_json execute(const std::string& subcommand, const ordered_json& params,
                     const RunConfig& config) {
  ordered_json result = execute_impl(subcommand, params, config);
  if (result.is_object() && !result.contains("params")) result["params"] = params;
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunConfig& config) {
  CLI::App app{"exact counting, enumeration, congruence checking and asymptotics "
               "for weighted vector compositions"};
  app.require_subcommand(1);

  struct {
    long k = 0;
    std::string target, weights, mod, family, theorem, params, method, fixture;
    long max = 0, q = 0, limit = 100000;
    int dim = 2, prime_dim = 1, max_dim = 3;
    bool has_k = false;
  } opt;

  auto parse_target_string = [](const std::string& s) {
    ordered_json arr = ordered_json::array();
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        arr.push_back(std::stol(tok));
      } catch (...) {
        throw CliError("bad-param", "target must be comma-separated integers");
      }
    }
    return arr;
  };
  auto parse_json_string = [](const std::string& s) {
    try {
      return ordered_json::parse(s);
    } catch (const std::exception& e) {
      throw CliError("bad-param", std::string("malformed JSON parameter: ") + e.what());
    }
  };

  auto* count = app.add_subcommand("count", "k-parts coefficient at a target");
  count->add_option("--k", opt.k)->required();
  count->add_option("--target", opt.target)->required();
  count->add_option("--weights", opt.weights)->required();
  count->add_option("--mod", opt.mod);

  auto* cf = app.add_subcommand("cf", "compositions with any number of parts");
  cf->add_option("--target", opt.target)->required();
  cf->add_option("--weights", opt.weights)->required();
  cf->add_option("--mod", opt.mod);

  auto* enumerate = app.add_subcommand("enumerate", "stream colored compositions");
  enumerate->add_option("--target", opt.target)->required();
  enumerate->add_option("--weights", opt.weights)->required();
  enumerate->add_option("--k", opt.k)->each([&](const std::string&) { opt.has_k = true; });
  enumerate->add_option("--limit", opt.limit);

  auto* sequence = app.add_subcommand("sequence", "closed-form family diagonals");
  sequence->add_option("--family", opt.family)->required();
  sequence->add_option("--max", opt.max)->required();
  sequence->add_option("--dim", opt.dim);

  auto* check = app.add_subcommand("check", "theorem checker");
  check->add_option("--theorem", opt.theorem)->required();
  check->add_option("--params", opt.params)->required();
  check->add_option("--weights", opt.weights);

  auto* prime = app.add_subcommand("prime-criterion", "Mann-Shanks style explorer");
  prime->add_option("--q", opt.q)->required();
  prime->add_option("--dim", opt.prime_dim);
  prime->add_option("--max-dim", opt.max_dim);

  auto* approx = app.add_subcommand("approx", "asymptotic approximations");
  approx->add_option("--method", opt.method)->required();
  approx->add_option("--params", opt.params)->required();

  auto* faa = app.add_subcommand("faa", "composite-derivative expansion");
  faa->add_option("--target", opt.target)->required();

  auto* batch = app.add_subcommand("batch", "run a fixture of named checks");
  batch->add_option("fixture", opt.fixture)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    CliError ce("bad-usage", e.what());
    out << error_json(ce).dump() << "\n";
    return 2;
  }

  try {
    ordered_json params;
    std::string subcommand;
    if (count->parsed()) {
      subcommand = "count";
      params["k"] = opt.k;
      params["target"] = parse_target_string(opt.target);
      params["weights"] = opt.weights;
      if (!opt.mod.empty()) params["mod"] = std::stoll(opt.mod);
    } else if (cf->parsed()) {
      subcommand = "cf";
      params["target"] = parse_target_string(opt.target);
      params["weights"] = opt.weights;
      if (!opt.mod.empty()) params["mod"] = std::stoll(opt.mod);
    } else if (enumerate->parsed()) {
      subcommand = "enumerate";
      params["target"] = parse_target_string(opt.target);
      params["weights"] = opt.weights;
      if (opt.has_k) params["k"] = opt.k;
      params["limit"] = opt.limit;
    } else if (sequence->parsed()) {
      subcommand = "sequence";
      params["family"] = opt.family;
      params["max"] = opt.max;
      params["dim"] = opt.dim;
    } else if (check->parsed()) {
      subcommand = "check";
      params["theorem"] = opt.theorem;
      params["params"] = parse_json_string(opt.params);
      if (!opt.weights.empty()) params["weights"] = opt.weights;
    } else if (prime->parsed()) {
      subcommand = "prime-criterion";
      params["q"] = opt.q;
      params["dim"] = opt.prime_dim;
      params["max_dim"] = opt.max_dim;
    } else if (approx->parsed()) {
      subcommand = "approx";
      params["method"] = opt.method;
      params["params"] = parse_json_string(opt.params);
    } else if (faa->parsed()) {
      subcommand = "faa";
      params["target"] = parse_target_string(opt.target);
    } else if (batch->parsed()) {
      subcommand = "batch";
      params["fixture"] = opt.fixture;
    }

    ordered_json result = execute(subcommand, params, config);
    if (subcommand == "enumerate") {
      for (const auto& comp : result["compositions"]) out << comp.dump() << "\n";
      return 0;
    }
    out << result.dump() << "\n";
    if (subcommand == "check" && result.contains("holds") && !result["holds"].get<bool>())
      return 1;
    if (subcommand == "batch" && result["failed"].get<long>() > 0) return 1;
    return 0;
  } catch (const CliError& e) {
    out << error_json(e).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    CliError ce("error", e.what());
    out << error_json(ce).dump() << "\n";
    return 2;
  }
}

DispatchResult dispatch(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  DispatchResult r;
  r.exit_code = run(args, out, err, config_from_env());
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace veccomp::cli
