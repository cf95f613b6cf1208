// Command-line front end wiring every module behind one binary.
//
// Grammar is git-style: the subcommand comes first, flags after it.
// Flag precedence, highest to lowest: command line, URLLC_* environment
// variable, --config JSON file, built-in default. SNR-like quantities are
// dB everywhere at this surface; linear SNR exists only inside the channel.
//
// Exit codes: 0 success, 2 infeasible design problem (not a crash),
// 1 anything else (bad flags, bad files, runtime failures).

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "urllc/channel.hpp"
#include "urllc/code.hpp"
#include "urllc/complexity.hpp"
#include "urllc/fb_limits.hpp"
#include "urllc/io_json.hpp"
#include "urllc/optimize.hpp"
#include "urllc/osd.hpp"
#include "urllc/sim.hpp"
#include "urllc/tradeoff.hpp"

extern char** environ;

namespace {

using nlohmann::json;
using namespace urllc;

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// flag plumbing: config file + environment injection

std::string normalize_key(std::string s) {
  for (char& c : s) {
    if (c == '_') c = '-';
    c = char(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

// json scalar -> the string CLI11 would have seen on the command line
std::string scalar_to_token(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// --config may appear anywhere after the subcommand; the last one wins
std::string find_config_path(const std::vector<std::string>& raw) {
  std::string path;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& t = raw[i];
    if (t.rfind("--config=", 0) == 0)
      path = t.substr(9);
    else if (t == "--config" && i + 1 < raw.size())
      path = raw[i + 1];
  }
  if (path.empty())
    if (const char* env = std::getenv("URLLC_CONFIG")) path = env;
  return path;
}

// tokens to splice in right after the subcommand, config first so that the
// environment (and then the command line, via take-last) overrides it
std::vector<std::string> build_injection(CLI::App* leaf, const std::string& config_path) {
  std::map<std::string, CLI::Option*> known;
  for (CLI::Option* o : leaf->get_options())
    for (const std::string& ln : o->get_lnames()) known[ln] = o;

  std::vector<std::string> out;
  auto add = [&](const std::string& key, const std::string& val) {
    auto it = known.find(key);
    if (it == known.end() || key == "config") return;  // not a flag of this subcommand
    if (it->second->get_expected_min() == 0) {         // boolean flag
      if (val != "0" && val != "false" && !val.empty()) out.push_back("--" + key);
    } else {
      out.push_back("--" + key);
      out.push_back(val);
    }
  };

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("--config: cannot open " + config_path);
    json cfg;
    try {
      in >> cfg;
    } catch (const json::exception& e) {
      throw std::runtime_error("--config: " + config_path + " is not valid JSON: " + e.what());
    }
    if (!cfg.is_object()) throw std::runtime_error("--config: top level must be an object");
    for (auto it = cfg.begin(); it != cfg.end(); ++it)
      add(normalize_key(it.key()), scalar_to_token(it.value()));
  }

  for (char** e = environ; *e; ++e) {
    std::string kv = *e;
    if (kv.rfind("URLLC_", 0) != 0) continue;
    std::size_t eq = kv.find('=');
    if (eq == std::string::npos) continue;
    std::string key = normalize_key(kv.substr(6, eq - 6));
    if (key == "config" || key == "cli-path") continue;
    add(key, kv.substr(eq + 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// shared option bundles

struct Common {
  bool json_out = false;
  std::string format;  // resolved per subcommand
  std::string config;  // handled before parsing; registered for help + validation
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_flag("--json", c.json_out, "emit machine-readable JSON on stdout");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--config", c.config, "JSON file with defaults for any flag of this subcommand");
}

std::string resolved_format(const Common& c) { return c.json_out ? "json" : c.format; }

// either a code file or an on-the-fly extended BCH construction
struct CodeArgs {
  std::string path;
  std::size_t n = 0, k = 0;
};

void add_code_args(CLI::App* sub, CodeArgs& a) {
  sub->add_option("--code", a.path, "code JSON file (from `codes gen`)")
      ->check(CLI::ExistingFile);
  sub->add_option("--n", a.n, "blocklength of an eBCH code built on the fly");
  sub->add_option("--k", a.k, "dimension of an eBCH code built on the fly");
}

LinearCode resolve_code(const CodeArgs& a) {
  if (!a.path.empty()) return load_code(a.path);
  if (a.n && a.k) return build_ebch(a.n, a.k);
  throw CLI::ValidationError("--code", "give --code FILE, or both --n and --k");
}

struct DecoderArgs {
  std::string s = "0";
  std::size_t q = 8;
  std::string tie_break = "first-found";
  bool early_exit = false;
};

void add_decoder_args(CLI::App* sub, DecoderArgs& d, bool order_required) {
  CLI::Option* s = sub->add_option("--s", d.s, "reprocessing order (integer or fractional, e.g. 2.5)");
  if (order_required) s->required();
  sub->add_option("--q", d.q, "quantizer bits for complexity accounting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--tie-break", d.tie_break, "equal-distance candidate rule")
      ->check(CLI::IsMember({"first-found", "lowest-index-pattern"}))
      ->capture_default_str();
  sub->add_flag("--early-exit", d.early_exit,
                "stop a decode once no remaining pattern can win (skews complexity counts)");
}

DecoderConfig resolve_decoder(const DecoderArgs& d) {
  DecoderConfig cfg;
  try {
    cfg.s = Order::parse(d.s);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--s", e.what());
  }
  cfg.q_bits = d.q;
  cfg.tie_break =
      d.tie_break == "lowest-index-pattern" ? TieBreak::lowest_index_pattern : TieBreak::first_found;
  cfg.early_exit = d.early_exit;
  return cfg;
}

struct StopArgs {
  std::uint64_t target_errors = 100;
  std::uint64_t max_trials = 10000000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

void add_stop_args(CLI::App* sub, StopArgs& s) {
  sub->add_option("--target-errors", s.target_errors, "stop after this many codeword errors")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-trials", s.max_trials, "hard trial cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", s.seed, "RNG seed; results are bit-reproducible per seed")
      ->capture_default_str();
  sub->add_option("--workers", s.workers, "simulation threads; output independent of this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// validators
const CLI::Validator OpenUnit(
    [](std::string& s) {
      double v = 0;
      try {
        v = std::stod(s);
      } catch (...) {
        return std::string("not a number");
      }
      if (!(v > 0 && v < 1)) return std::string("must lie strictly inside (0,1)");
      return std::string();
    },
    "FLOAT in (0,1)");

std::ostream& out_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  return file;
}

json cep_json(const CepEstimate& e) {
  return json{{"cep", e.cep},
              {"errors", e.errors},
              {"trials", e.trials},
              {"ci_lo", e.ci.lo},
              {"ci_hi", e.ci.hi}};
}

// ---------------------------------------------------------------------------
// subcommand bodies (each returns the process exit code)

struct CodesGenArgs {
  Common common;
  std::size_t n = 0, k = 0;
  std::string label, out;
};

int run_codes_gen(const CodesGenArgs& a) {
  LinearCode c = build_ebch(a.n, a.k);
  if (!a.label.empty()) c.label = a.label;
  if (!a.out.empty()) save_code(c, a.out);
  if (resolved_format(a.common) == "json") {
    std::cout << code_to_json(c) << "\n";
  } else {
    std::cout << c.label << ": n=" << c.n << " k=" << c.k << " d_min=" << c.d_min << "\n";
    if (!a.out.empty()) std::cout << "wrote " << a.out << "\n";
  }
  return 0;
}

struct CodesInfoArgs {
  Common common;
  std::string in;
  bool exhaustive = false;
};

int run_codes_info(const CodesInfoArgs& a) {
  LinearCode c = load_code(a.in);
  std::size_t d_exact = 0;
  if (a.exhaustive) {
    if (c.k > 20)
      throw CLI::ValidationError("--exhaustive-dmin", "exhaustive check supports k <= 20");
    d_exact = min_distance_exhaustive(c);
  }
  Order s_ml = required_order(c);
  if (resolved_format(a.common) == "json") {
    json j{{"label", c.label}, {"n", c.n},     {"k", c.k},
           {"d_min", c.d_min}, {"rate", double(c.k) / double(c.n)},
           {"required_order", s_ml.value()}};
    if (a.exhaustive) j["d_min_exhaustive"] = d_exact;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c.label << ": n=" << c.n << " k=" << c.k << " d_min=" << c.d_min
              << " rate=" << double(c.k) / double(c.n)
              << " required_order=" << s_ml.to_string() << "\n";
    if (a.exhaustive) std::cout << "exhaustive d_min: " << d_exact << "\n";
  }
  return 0;
}

struct BoundsArgs {
  Common common;
  std::size_t n = 0;
  double eps = 0;
  double lo = -2, hi = 14;
  std::size_t points = 49;
  std::string out;
};

int run_bounds(const BoundsArgs& a) {
  if (a.points > 1 && a.hi < a.lo)
    throw CLI::ValidationError("--snr-db-max", "must be >= --snr-db-min");
  FbCache cache;
  std::vector<std::array<double, 4>> rows;
  rows.reserve(a.points);
  for (std::size_t i = 0; i < a.points; ++i) {
    double snr = a.points == 1 ? a.lo : a.lo + (a.hi - a.lo) * double(i) / double(a.points - 1);
    double rho = db_to_linear(snr);
    CapacityDispersion cd = capacity_dispersion(rho);
    double r = normal_approx_rate(a.n, rho, a.eps, &cache);
    rows.push_back({snr, cd.c, cd.v, r});
  }
  std::ofstream file;
  std::ostream& os = out_stream(a.out, file);
  if (resolved_format(a.common) == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back(json{{"snr_db", r[0]}, {"C", r[1]}, {"V", r[2]}, {"R", r[3]}});
    os << j.dump(2) << "\n";
  } else {
    write_bounds_csv(os, rows);
  }
  return 0;
}

struct ComplexityArgs {
  Common common;
  std::size_t n = 0, k = 0, q = 8;
  std::string s;
  double l_max = kInf, ts = 1e-6, tb = 1e-9, alpha = 1.0;
  unsigned procs = 1;
};

int run_complexity(const ComplexityArgs& a) {
  if (a.k >= a.n) throw CLI::ValidationError("--k", "requires k < n");
  Order s;
  try {
    s = Order::parse(a.s);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--s", e.what());
  }
  BigInt l = tep_count(a.k, s);
  BigRat kx = per_bit_complexity_exact(a.n, a.k, a.q, s);
  double kd = per_bit_complexity(a.n, a.k, a.q, s);
  ComplexityOrder ord = complexity_order(a.n, a.k, s);
  double tb_eff = effective_tb(a.tb, a.alpha, a.procs);
  LatencyBreakdown lat = aggregate_latency(a.n, a.k, kd, a.ts, tb_eff);

  bool budgeted = std::isfinite(a.l_max);
  double budget = 0;
  OrderBound bound;
  if (budgeted) {
    budget = complexity_budget(a.l_max, a.n, a.k, a.ts, tb_eff);
    bound = max_order(a.n, a.k, a.q, budget);
  }

  if (resolved_format(a.common) == "json") {
    json j{{"n", a.n},
           {"k", a.k},
           {"q", a.q},
           {"s", s.value()},
           {"tep_count", l.str()},
           {"per_bit_ops", kd},
           {"per_bit_ops_exact", kx.str()},
           {"order_class", ord.text},
           {"log2_per_bit_ops", std::log2(kd)},
           {"latency", {{"airtime", lat.airtime}, {"decoding", lat.decoding}, {"total", lat.total}}}};
    if (budgeted) {
      j["budget"] = budget;
      j["s_max_exact"] = bound.s_max_exact.value();
      j["s_max_approx"] = bound.s_max_approx;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "TEPs |L|      : " << l.str() << "\n"
              << "K per info bit: " << kd << "  (exact " << kx.str() << ")\n"
              << "class         : " << ord.text << "\n"
              << "latency       : air " << lat.airtime << " s + decode " << lat.decoding
              << " s = " << lat.total << " s\n";
    if (budgeted)
      std::cout << "budget        : " << budget << " ops/bit -> s_max " << bound.s_max_exact.to_string()
                << " (approx " << bound.s_max_approx << ")\n";
  }
  return 0;
}

struct FitArgs {
  Common common;
  std::string in, out;
  std::string interpolation = "nearest";
};

int run_fit(const FitArgs& a) {
  std::ifstream is(a.in);
  if (!is) throw std::runtime_error("cannot open " + a.in);
  std::vector<TradeoffPoint> pts = read_tradeoff_csv(is);
  std::map<std::size_t, std::vector<TradeoffPoint>> by_n;
  for (const auto& p : pts) by_n[p.n].push_back(p);
  if (by_n.empty()) throw std::runtime_error(a.in + ": no data rows");

  ModelTable table;
  table.interpolation = a.interpolation;
  for (const auto& [n, group] : by_n) {
    try {
      table.upsert(n, fit_tradeoff_model(group));
    } catch (const std::exception& e) {
      throw std::runtime_error("fit for n=" + std::to_string(n) + ": " + e.what());
    }
  }
  if (!a.out.empty()) save_model_table(table, a.out);
  if (resolved_format(a.common) == "json") {
    std::cout << model_table_to_json(table) << "\n";
  } else {
    for (const auto& e : table.entries)
      std::cout << "n=" << e.n << "  a=" << e.model.a << "  b=" << e.model.b
                << "  rmse=" << e.model.fit_rmse << "\n";
    if (!a.out.empty()) std::cout << "wrote " << a.out << "\n";
  }
  return 0;
}

struct SimCepArgs {
  Common common;
  CodeArgs code;
  DecoderArgs dec;
  StopArgs stop;
  double rho_db = 0;
  bool all_zero = false;
};

int run_sim_cep(const SimCepArgs& a) {
  LinearCode code = resolve_code(a.code);
  DecoderContext ctx(code);
  DecoderConfig cfg = resolve_decoder(a.dec);
  SimOptions opt;
  opt.workers = a.stop.workers;
  opt.all_zero_message = a.all_zero;
  CepEstimate e = estimate_cep(ctx, cfg, a.rho_db, {a.stop.target_errors, a.stop.max_trials},
                               a.stop.seed, opt);
  if (resolved_format(a.common) == "json") {
    json j = cep_json(e);
    j["n"] = code.n;
    j["k"] = code.k;
    j["s"] = cfg.s.value();
    j["rho_db"] = a.rho_db;
    j["seed"] = a.stop.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << code.label << " s=" << cfg.s.to_string() << " @ " << a.rho_db << " dB: cep=" << e.cep
              << " (" << e.errors << "/" << e.trials << ", 95% CI [" << e.ci.lo << ", " << e.ci.hi
              << "])\n";
  }
  return 0;
}

struct SimSnrArgs {
  Common common;
  CodeArgs code;
  DecoderArgs dec;
  StopArgs stop;
  double eps_target = 0;
  double lo_db = -2, hi_db = 14, tol_db = 0.05;
};

int run_sim_snr(const SimSnrArgs& a) {
  LinearCode code = resolve_code(a.code);
  DecoderContext ctx(code);
  DecoderConfig cfg = resolve_decoder(a.dec);
  SimOptions opt;
  opt.workers = a.stop.workers;
  SnrSearchResult r =
      required_snr_for_cep(ctx, cfg, a.eps_target, {a.lo_db, a.hi_db, a.tol_db},
                           {a.stop.target_errors, a.stop.max_trials}, a.stop.seed, opt);
  if (resolved_format(a.common) == "json") {
    json j{{"n", code.n},
           {"k", code.k},
           {"s", cfg.s.value()},
           {"eps_target", a.eps_target},
           {"seed", a.stop.seed},
           {"rho_db", r.rho_db},
           {"at_rho", cep_json(r.at_rho)},
           {"probes_db", r.probes_db}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << code.label << " s=" << cfg.s.to_string() << ": rho(" << a.eps_target
              << ") = " << r.rho_db << " dB  (cep " << r.at_rho.cep << ", " << r.probes_db.size()
              << " probes)\n";
  }
  return 0;
}

struct SimTradeoffArgs {
  Common common;
  CodeArgs code;
  StopArgs stop;
  std::string orders = "0,1,2,3";
  double eps_target = 0;
  std::size_t q = 8;
  std::string out;
};

int run_sim_tradeoff(const SimTradeoffArgs& a) {
  LinearCode code = resolve_code(a.code);
  std::vector<Order> orders;
  std::stringstream ss(a.orders);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      orders.push_back(Order::parse(item));
    } catch (const std::exception& e) {
      throw CLI::ValidationError("--orders", e.what());
    }
  }
  if (orders.empty()) throw CLI::ValidationError("--orders", "at least one order required");
  SimOptions opt;
  opt.workers = a.stop.workers;
  std::vector<TradeoffPoint> pts =
      build_tradeoff_dataset(code, orders, a.eps_target, a.q,
                             {a.stop.target_errors, a.stop.max_trials}, a.stop.seed, opt);
  std::ofstream file;
  std::ostream& os = out_stream(a.out, file);
  if (resolved_format(a.common) == "json") {
    json j = json::array();
    for (const auto& p : pts)
      j.push_back(json{{"n", p.n},
                       {"k", p.k},
                       {"s", p.s},
                       {"delta_rho_db", p.delta_rho_db},
                       {"log2_K", p.log2_k_ops},
                       {"source", p.source}});
    os << j.dump(2) << "\n";
  } else {
    write_tradeoff_csv(os, pts);
  }
  return 0;
}

struct OptimizeArgs {
  Common common;
  std::string models;
  std::size_t k = 0;
  double eps = 1e-5;
  double rho_max_db = kInf;
  double l_max = kInf;
  double ts = 1e-6, tb = 1e-9, alpha = 1.0;
  unsigned procs = 1;
  std::size_t q = 8;
  std::size_t n_min = 0, n_max = 0;
  std::string curve;
};

int run_optimize(const std::string& kind, const OptimizeArgs& a) {
  ModelTable table = load_model_table(a.models);
  Constraints c{a.eps, a.rho_max_db, a.l_max};
  Hardware hw{a.ts, a.tb, a.alpha, a.procs, a.q};
  NRange range{a.n_min, a.n_max};
  std::vector<DesignPoint> curve;
  std::vector<DesignPoint>* curvep = a.curve.empty() ? nullptr : &curve;

  DesignPoint p;
  std::size_t n_inf = 0, k_inf = 0;
  if (kind == "latency") {
    p = minimize_latency(a.k, c, hw, table, range, curvep);
  } else if (kind == "energy") {
    p = minimize_energy(a.k, c, hw, table, range, curvep);
  } else {
    InfoBitsResult r = maximize_info_bits(c, hw, table, range, curvep);
    p = r.best;
    n_inf = r.n_inf;
    k_inf = r.k_inf;
  }

  if (!a.curve.empty()) {
    std::ofstream f(a.curve);
    if (!f) throw std::runtime_error("cannot open output file " + a.curve);
    write_design_curve_csv(f, curve);
  }

  if (resolved_format(a.common) == "table") {
    if (p.feasible)
      std::cout << kind << ": n=" << p.n << " k=" << p.k << " rho_total=" << p.rho_total_db
                << " dB latency=" << p.latency << " s objective=" << p.objective << "\n";
    else
      std::cout << kind << ": infeasible (" << p.infeasible_reason << ")\n";
  } else {
    json j = json::parse(design_point_to_json(p, kind));
    if (kind == "info-bits") {
      j["n_inf"] = n_inf;
      j["k_inf"] = k_inf;
    }
    std::cout << j.dump(2) << "\n";
  }
  return p.feasible ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-statistic decoding workbench: codes, limits, complexity, link design"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  std::map<std::string, CLI::App*> leaves;
  int rc = 0;

  // codes ------------------------------------------------------------------
  CLI::App* codes = app.add_subcommand("codes", "construct and inspect linear block codes");
  codes->require_subcommand(1);

  CodesGenArgs cg;
  CLI::App* codes_gen = codes->add_subcommand("gen", "build an extended BCH code");
  leaves["codes gen"] = codes_gen;
  codes_gen->add_option("--n", cg.n, "blocklength (power of two)")->required()->check(CLI::PositiveNumber);
  codes_gen->add_option("--k", cg.k, "dimension")->required()->check(CLI::PositiveNumber);
  codes_gen->add_option("--label", cg.label, "override the generated label");
  codes_gen->add_option("--out", cg.out, "write the code JSON here");
  add_common(codes_gen, cg.common, "table");
  codes_gen->callback([&] { rc = run_codes_gen(cg); });

  CodesInfoArgs ci;
  CLI::App* codes_info = codes->add_subcommand("info", "summarize a stored code");
  leaves["codes info"] = codes_info;
  codes_info->add_option("--in", ci.in, "code JSON file")->required()->check(CLI::ExistingFile);
  codes_info->add_flag("--exhaustive-dmin", ci.exhaustive, "verify d_min exhaustively (k <= 20)");
  add_common(codes_info, ci.common, "table");
  codes_info->callback([&] { rc = run_codes_info(ci); });

  // bounds -----------------------------------------------------------------
  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand("bounds", "finite-blocklength limits over an SNR grid");
  leaves["bounds"] = bounds;
  bounds->add_option("--n", ba.n, "blocklength")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--eps", ba.eps, "target codeword error probability")->required()->check(OpenUnit);
  bounds->add_option("--snr-db-min", ba.lo, "grid start, dB")->capture_default_str();
  bounds->add_option("--snr-db-max", ba.hi, "grid end, dB")->capture_default_str();
  bounds->add_option("--points", ba.points, "grid size")->check(CLI::PositiveNumber)->capture_default_str();
  bounds->add_option("--out", ba.out, "write CSV here instead of stdout");
  add_common(bounds, ba.common, "csv");
  bounds->callback([&] { rc = run_bounds(ba); });

  // complexity -------------------------------------------------------------
  ComplexityArgs ca;
  CLI::App* cplx = app.add_subcommand("complexity", "decoding cost, latency, and order budgets");
  leaves["complexity"] = cplx;
  cplx->add_option("--n", ca.n, "blocklength")->required()->check(CLI::PositiveNumber);
  cplx->add_option("--k", ca.k, "dimension")->required()->check(CLI::PositiveNumber);
  cplx->add_option("--q", ca.q, "quantizer bits")->check(CLI::PositiveNumber)->capture_default_str();
  cplx->add_option("--s", ca.s, "reprocessing order")->required();
  cplx->add_option("--l-max", ca.l_max, "latency cap in seconds; enables the order budget");
  cplx->add_option("--ts", ca.ts, "symbol time, seconds")->check(CLI::PositiveNumber)->capture_default_str();
  cplx->add_option("--tb", ca.tb, "per-operation back-end time, seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cplx->add_option("--alpha", ca.alpha, "parallelizable fraction")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cplx->add_option("--procs", ca.procs, "processor count")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(cplx, ca.common, "table");
  cplx->callback([&] { rc = run_complexity(ca); });

  // fit ----------------------------------------------------------------
  FitArgs fa;
  CLI::App* fit = app.add_subcommand("fit", "fit the complexity-vs-penalty law to a dataset");
  leaves["fit"] = fit;
  fit->add_option("--in", fa.in, "tradeoff dataset CSV")->required()->check(CLI::ExistingFile);
  fit->add_option("--out", fa.out, "write the model table JSON here");
  fit->add_option("--interpolation", fa.interpolation, "table lookup between blocklengths")
      ->check(CLI::IsMember({"nearest", "linear"}))
      ->capture_default_str();
  add_common(fit, fa.common, "table");
  fit->callback([&] { rc = run_fit(fa); });

  // simulate -----------------------------------------------------------
  CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo error-rate measurements");
  sim->require_subcommand(1);

  SimCepArgs sc;
  CLI::App* sim_cep = sim->add_subcommand("cep", "codeword error probability at one SNR");
  leaves["simulate cep"] = sim_cep;
  add_code_args(sim_cep, sc.code);
  add_decoder_args(sim_cep, sc.dec, true);
  add_stop_args(sim_cep, sc.stop);
  sim_cep->add_option("--rho-db", sc.rho_db, "operating SNR, dB")->required();
  sim_cep->add_flag("--all-zero", sc.all_zero, "send the all-zero message (linearity checks)");
  add_common(sim_cep, sc.common, "table");
  sim_cep->callback([&] { rc = run_sim_cep(sc); });

  SimSnrArgs sn;
  CLI::App* sim_snr = sim->add_subcommand("snr-for-cep", "SNR needed to hit a target error rate");
  leaves["simulate snr-for-cep"] = sim_snr;
  add_code_args(sim_snr, sn.code);
  add_decoder_args(sim_snr, sn.dec, true);
  add_stop_args(sim_snr, sn.stop);
  sim_snr->add_option("--eps-target", sn.eps_target, "target codeword error probability")
      ->required()
      ->check(OpenUnit);
  sim_snr->add_option("--lo-db", sn.lo_db, "initial bracket low edge, dB")->capture_default_str();
  sim_snr->add_option("--hi-db", sn.hi_db, "initial bracket high edge, dB")->capture_default_str();
  sim_snr->add_option("--tol-db", sn.tol_db, "bisection tolerance, dB")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(sim_snr, sn.common, "table");
  sim_snr->callback([&] { rc = run_sim_snr(sn); });

  SimTradeoffArgs st;
  CLI::App* sim_to = sim->add_subcommand("tradeoff", "penalty-vs-complexity dataset over orders");
  leaves["simulate tradeoff"] = sim_to;
  add_code_args(sim_to, st.code);
  add_stop_args(sim_to, st.stop);
  sim_to->add_option("--orders", st.orders, "comma-separated reprocessing orders")->capture_default_str();
  sim_to->add_option("--eps-target", st.eps_target, "target codeword error probability")
      ->required()
      ->check(OpenUnit);
  sim_to->add_option("--q", st.q, "quantizer bits")->check(CLI::PositiveNumber)->capture_default_str();
  sim_to->add_option("--out", st.out, "write CSV here instead of stdout");
  add_common(sim_to, st.common, "csv");
  sim_to->callback([&] { rc = run_sim_tradeoff(st); });

  // optimize -----------------------------------------------------------
  CLI::App* opt = app.add_subcommand("optimize", "link design under latency and power caps");
  opt->require_subcommand(1);

  OptimizeArgs oa[3];
  const char* kinds[3] = {"latency", "energy", "info-bits"};
  const char* blurbs[3] = {"minimize end-to-end latency at fixed payload",
                           "minimize energy per information bit at fixed payload",
                           "maximize the payload under both caps"};
  for (int i = 0; i < 3; ++i) {
    OptimizeArgs& a = oa[i];
    std::string kind = kinds[i];
    CLI::App* sub = opt->add_subcommand(kind, blurbs[i]);
    leaves["optimize " + kind] = sub;
    sub->add_option("--models", a.models, "model table JSON (from `fit`)")
        ->required()
        ->check(CLI::ExistingFile);
    if (kind != "info-bits")
      sub->add_option("--k", a.k, "information bits per block")->required()->check(CLI::PositiveNumber);
    sub->add_option("--eps", a.eps, "target codeword error probability")
        ->check(OpenUnit)
        ->capture_default_str();
    sub->add_option("--rho-max-db", a.rho_max_db, "SNR cap, dB (default unbounded)");
    sub->add_option("--l-max", a.l_max, "latency cap, seconds (default unbounded)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--ts", a.ts, "symbol time, seconds")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--tb", a.tb, "per-operation back-end time, seconds")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--alpha", a.alpha, "parallelizable fraction")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--procs", a.procs, "processor count")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--q", a.q, "quantizer bits")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--n-min", a.n_min, "blocklength range start (0 = derive)");
    sub->add_option("--n-max", a.n_max, "blocklength range end (0 = derive)");
    sub->add_option("--curve", a.curve, "write the per-n design curve CSV here");
    add_common(sub, a.common, "json");
    sub->callback([&rc, &a, kind] { rc = run_optimize(kind, a); });
  }

  // config + environment injection ------------------------------------
  std::vector<std::string> raw(argv + 1, argv + argc);
  std::vector<std::string> tokens;
  try {
    std::size_t sub_len = 0;
    std::string leaf_name;
    if (!raw.empty() && raw[0].rfind("-", 0) != 0) {
      leaf_name = raw[0];
      sub_len = 1;
      bool nested = raw[0] == "codes" || raw[0] == "simulate" || raw[0] == "optimize";
      if (nested && raw.size() > 1 && raw[1].rfind("-", 0) != 0) {
        leaf_name += " " + raw[1];
        sub_len = 2;
      }
    }
    tokens.assign(raw.begin(), raw.begin() + sub_len);
    auto it = leaves.find(leaf_name);
    if (it != leaves.end()) {
      std::vector<std::string> injected = build_injection(it->second, find_config_path(raw));
      tokens.insert(tokens.end(), injected.begin(), injected.end());
    }
    tokens.insert(tokens.end(), raw.begin() + sub_len, raw.end());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::reverse(tokens.begin(), tokens.end());  // parse(vector) consumes back to front
    app.parse(tokens);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message naming the offending flag
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
