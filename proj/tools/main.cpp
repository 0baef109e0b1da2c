// mdisc -- measurement-discrimination workbench.
//
// Subcommands: reproduce, validate, witness, compute-d, compute-b, export.
// Exit codes: 0 success / all rows pass, 1 a check or reproduction row
// failed, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdisc/constructions.hpp"
#include "mdisc/entangled.hpp"
#include "mdisc/json_io.hpp"
#include "mdisc/linalg.hpp"
#include "mdisc/povm.hpp"
#include "mdisc/single_system.hpp"

using json = nlohmann::json;
using namespace mdisc;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240517;

std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("MDISC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable MDISC_SEED\n";
    }
  }
  return kDefaultSeed;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

MeasurementEnsemble ensemble_from_spec(const std::string& spec) {
  // A tag from the catalog, or a path to an ensemble JSON document.
  if (spec.find(".json") != std::string::npos) {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open ensemble file: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return ensemble_from_json(ss.str());
  }
  return ensemble_from_tag(spec);
}

BipartiteDensity state_from_spec(const std::string& spec) {
  if (spec.find(".json") != std::string::npos) {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open state file: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return bipartite_from_json(ss.str());
  }
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "maxent") return max_entangled(std::stoul(arg));
  if (kind == "werner") return werner_state(std::stod(arg));
  if (kind == "pure2q") return two_qubit_pure(std::stod(arg));
  throw std::invalid_argument("unknown state spec: " + spec +
                              " (use maxent:d, werner:p, pure2q:alpha, or a .json file)");
}

// ---------------------------------------------------------------- reproduce

struct ReproductionRow {
  std::string label;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long long runtime_ms = 0;
};

struct ReproduceSettings {
  std::uint64_t seed = kDefaultSeed;
};

ReproductionRow make_row(const std::string& label, double expected, double tol,
                         const std::function<double()>& compute) {
  const auto t0 = std::chrono::steady_clock::now();
  const double value = compute();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  ReproductionRow row;
  row.label = label;
  row.expected = expected;
  row.computed = value;
  row.tolerance = tol;
  row.pass = std::abs(value - expected) <= tol;
  row.runtime_ms = ms;
  return row;
}

void append_d_rows(std::vector<ReproductionRow>& rows, const ReproduceSettings& s) {
  struct Target {
    const char* tag;
    double expected;
    double tol;
    std::size_t restarts;
  };
  const Target targets[] = {
      {"table1", 0.7752, 1e-3, 150},   {"ic:2", 0.7887, 1e-3, 50},
      {"ic:3", 0.6436, 1e-3, 100},     {"ic:4", 0.622, 2e-3, 300},
      {"dplus1:2", 5.0 / 6.0, 1e-6, 50}, {"dplus1:3", 0.698, 1e-3, 100},
      {"dplus1:4", 0.706, 1e-3, 300},
  };
  for (const auto& target : targets) {
    rows.push_back(make_row(std::string("D ") + target.tag, target.expected, target.tol, [&] {
      OptimizerConfig cfg;
      cfg.restarts = target.restarts;
      cfg.seed = s.seed;
      return optimize_d(ensemble_from_tag(target.tag), cfg).value;
    }));
  }
}

void append_b_rows(std::vector<ReproductionRow>& rows, const ReproduceSettings&) {
  for (const char* tag : {"table1", "ic:2", "ic:3", "dplus1:2", "dplus1:3", "dplus1:4"}) {
    rows.push_back(make_row(std::string("B ") + tag + " maxent proof", 1.0, 1e-10, [tag] {
      const auto ens = ensemble_from_tag(tag);
      return b_value_with_bob(max_entangled(ens.dim), ens, proof_bob_from_tag(tag)).value;
    }));
  }
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.8, 1.0}) {
    rows.push_back(
        make_row("B trine werner p=" + fmt6(p), (1.0 + p) / 2.0, 1e-6, [p] {
          return b_value_optimal(werner_state(p), trine_pair_ensemble()).value;
        }));
  }
  for (double alpha : {std::numbers::pi / 16.0, std::numbers::pi / 8.0,
                       3.0 * std::numbers::pi / 16.0, std::numbers::pi / 4.0}) {
    rows.push_back(make_row("B trine pure2q alpha=" + fmt6(alpha), two_qubit_b_closed(alpha),
                            1e-6, [alpha] {
                              return b_value_optimal(two_qubit_pure(alpha), trine_pair_ensemble())
                                  .value;
                            }));
  }
}

void append_closed_form_rows(std::vector<ReproductionRow>& rows, const ReproduceSettings&) {
  rows.push_back(make_row("trine-D delta=0", 5.0 / 6.0, 1e-12,
                          [] { return trine_d_closed_form(0.0); }));
  rows.push_back(make_row("trine-D delta=pi/6", 5.0 / 6.0, 1e-12,
                          [] { return trine_d_closed_form(std::numbers::pi / 6.0); }));
  rows.push_back(make_row("trine-D delta=pi/12", (3.0 + std::sqrt(3.0)) / 6.0, 1e-12,
                          [] { return trine_d_closed_form(std::numbers::pi / 12.0); }));
  rows.push_back(make_row("B2q alpha=pi/4", 1.0, 1e-12,
                          [] { return two_qubit_b_closed(std::numbers::pi / 4.0); }));
  rows.push_back(make_row("B2q alpha=pi/8", (4.0 + std::sqrt(2.5)) / 6.0, 1e-12,
                          [] { return two_qubit_b_closed(std::numbers::pi / 8.0); }));
}

int cmd_reproduce(const std::string& table, const ReproduceSettings& settings, bool as_json,
                  bool as_csv) {
  std::vector<ReproductionRow> rows;
  if (table == "all" || table == "d-values") append_d_rows(rows, settings);
  if (table == "all" || table == "b-values") append_b_rows(rows, settings);
  if (table == "all" || table == "closed-forms") append_closed_form_rows(rows, settings);
  if (rows.empty()) {
    std::cerr << "unknown table: " << table
              << " (expected all | d-values | b-values | closed-forms)\n";
    return 2;
  }
  std::sort(rows.begin(), rows.end(),
            [](const ReproductionRow& a, const ReproductionRow& b) { return a.label < b.label; });

  const bool all_pass =
      std::all_of(rows.begin(), rows.end(), [](const ReproductionRow& r) { return r.pass; });

  if (as_json) {
    // runtime_ms is deliberately left out: the JSON document is byte-stable
    // for a fixed seed.
    json doc;
    doc["seed"] = settings.seed;
    doc["table"] = table;
    json jrows = json::array();
    for (const auto& r : rows)
      jrows.push_back({{"label", r.label},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    doc["rows"] = std::move(jrows);
    doc["all_pass"] = all_pass;
    std::cout << doc.dump(2) << "\n";
  } else if (as_csv) {
    std::cout << "label,expected,computed,tolerance,pass,runtime_ms\n";
    for (const auto& r : rows) {
      char buf[256];
      std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.3g,%d,%lld\n", r.label.c_str(),
                    r.expected, r.computed, r.tolerance, r.pass ? 1 : 0, r.runtime_ms);
      std::cout << buf;
    }
  } else {
    std::printf("%-32s %12s %12s %9s %6s %9s\n", "label", "expected", "computed", "tol", "pass",
                "ms");
    for (const auto& r : rows)
      std::printf("%-32s %12s %12s %9s %6s %9lld\n", r.label.c_str(), fmt6(r.expected).c_str(),
                  fmt6(r.computed).c_str(), fmt6(r.tolerance).c_str(), r.pass ? "yes" : "NO",
                  r.runtime_ms);
    std::printf("%zu rows, %s\n", rows.size(), all_pass ? "all pass" : "FAILURES present");
  }
  return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------ validate

int cmd_validate(const std::string& tag, bool as_json) {
  const auto ens = ensemble_from_spec(tag);
  const auto cert = validate(ens);
  ConditionReport cond;
  bool have_cond = false;
  try {
    cond = condition_report_from_tag(tag);
    have_cond = true;
  } catch (const std::invalid_argument&) {
    // file-based ensembles have no associated construction condition
  }

  if (as_json) {
    json doc;
    doc["tag"] = tag;
    doc["povm_valid"] = cert.povm_valid;
    doc["projective"] = cert.projective;
    doc["max_completeness_residual"] = cert.max_completeness_residual;
    doc["max_negative_eigenvalue"] = cert.max_negative_eigenvalue;
    if (have_cond) {
      doc["condition_satisfied"] = cond.satisfied;
      if (cond.witness)
        doc["condition_witness"] = {{"indices", cond.witness->indices},
                                    {"overlap", cond.witness->overlap}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("ensemble %s: dim=%zu settings=%zu outcomes=%zu\n", tag.c_str(), ens.dim,
                ens.settings(), ens.outcomes);
    for (std::size_t x = 0; x < ens.settings(); ++x)
      std::printf("  x=%zu: valid=%s projective=%s\n", x, cert.povm_valid[x] ? "yes" : "NO",
                  cert.projective[x] ? "yes" : "no");
    std::printf("  max completeness residual: %s\n", fmt6(cert.max_completeness_residual).c_str());
    std::printf("  max negative eigenvalue:   %s\n", fmt6(cert.max_negative_eigenvalue).c_str());
    if (have_cond) {
      std::printf("  construction condition: %s\n", cond.satisfied ? "satisfied" : "NOT satisfied");
      if (cond.witness)
        std::printf("  witness: (%zu,%zu,%zu,%zu) overlap %s\n", cond.witness->indices[0],
                    cond.witness->indices[1], cond.witness->indices[2], cond.witness->indices[3],
                    fmt6(cond.witness->overlap).c_str());
    }
  }
  const bool ok = cert.all_valid() && (!have_cond || cond.satisfied);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------- witness

json b_report_to_json(const BValueReport& report) {
  json j;
  j["method"] = to_string(report.method);
  j["value"] = report.value;
  j["gap"] = report.dual_gap;
  j["iterations"] = report.convergence.iterations;
  j["converged"] = report.convergence.converged;
  return j;
}

int cmd_witness(const std::string& state_spec, const std::string& tag, double margin,
                std::uint64_t seed, std::size_t restarts, bool as_json) {
  const auto ens = ensemble_from_spec(tag);
  const auto rho = state_from_spec(state_spec);

  OptimizerConfig dcfg;
  dcfg.seed = seed;
  if (restarts > 0) dcfg.restarts = restarts;
  const auto dreport = optimize_d(ens, dcfg);

  WitnessConfig wcfg;
  wcfg.margin = margin;
  const auto verdict = steering_witness(rho, ens, dreport.value, wcfg);

  json doc;
  doc["state"] = state_spec;
  doc["ensemble"] = tag;
  doc["b_value"] = verdict.b_value;
  doc["d_value"] = verdict.d_value;
  doc["gap"] = verdict.gap;
  doc["margin"] = verdict.margin;
  doc["verdict"] = verdict.steerable_witnessed ? "steerable-witnessed" : "inconclusive";
  doc["b_report"] = b_report_to_json(verdict.b_report);
  doc["d_spread"] = dreport.spread;
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("state %s vs ensemble %s\n", state_spec.c_str(), tag.c_str());
    std::printf("  B = %s (%s), D = %s, gap = %s, margin = %s\n", fmt6(verdict.b_value).c_str(),
                to_string(verdict.b_report.method).c_str(), fmt6(verdict.d_value).c_str(),
                fmt6(verdict.gap).c_str(), fmt6(verdict.margin).c_str());
    std::printf("  verdict: %s\n", doc["verdict"].get<std::string>().c_str());
  }
  return 0;
}

// ----------------------------------------------------------------- compute-*

int cmd_compute_d(const std::string& tag, const OptimizerConfig& cfg, bool as_json) {
  const auto ens = ensemble_from_spec(tag);
  const auto report = optimize_d(ens, cfg);
  if (as_json) {
    json doc;
    doc["ensemble"] = tag;
    doc["value"] = report.value;
    doc["restarts"] = report.restarts_used;
    doc["converged"] = report.converged;
    doc["spread"] = report.spread;
    json state = json::array();
    for (const auto& amp : report.best_state) state.push_back({amp.real(), amp.imag()});
    doc["best_state"] = std::move(state);
    doc["argmax_map"] = report.argmax_map;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("D(%s) = %s  (restarts=%zu, spread=%s, converged=%s)\n", tag.c_str(),
                fmt6(report.value).c_str(), report.restarts_used, fmt6(report.spread).c_str(),
                report.converged ? "yes" : "no");
  }
  return 0;
}

int cmd_compute_b(const std::string& tag, const std::string& state_spec, const std::string& bob,
                  bool as_json) {
  const auto ens = ensemble_from_spec(tag);
  const auto rho = state_from_spec(state_spec);
  BValueReport report;
  if (bob == "proof")
    report = b_value_with_bob(rho, ens, proof_bob_from_tag(tag));
  else if (bob == "optimal")
    report = b_value_optimal(rho, ens);
  else {
    std::cerr << "unknown --bob mode: " << bob << " (expected proof | optimal)\n";
    return 2;
  }
  if (as_json) {
    json doc = b_report_to_json(report);
    doc["ensemble"] = tag;
    doc["state"] = state_spec;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("B(%s, %s | %s bob) = %s", tag.c_str(), state_spec.c_str(), bob.c_str(),
                fmt6(report.value).c_str());
    if (report.method == BMethod::iterative)
      std::printf("  (gap=%s, iterations=%zu)", fmt6(report.dual_gap).c_str(),
                  report.convergence.iterations);
    std::printf("\n");
  }
  return 0;
}

int cmd_export(const std::string& tag, const std::string& output) {
  const auto ens = ensemble_from_spec(tag);
  const std::string text = ensemble_to_json(ens, 1);
  if (output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 1;
    }
    out << text << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum measurement discrimination workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = seed_from_env();
  bool as_json = false;
  bool as_csv = false;
  app.add_option("--seed", seed, "64-bit seed for all randomized computations");
  app.add_flag("--json", as_json, "emit JSON instead of a human table");
  app.add_flag("--csv", as_csv, "emit CSV instead of a human table");

  auto* reproduce = app.add_subcommand("reproduce", "recompute the published values");
  std::string table = "all";
  reproduce->add_option("table", table, "all | d-values | b-values | closed-forms");

  auto* validate_cmd = app.add_subcommand("validate", "POVM and condition certificates");
  std::string validate_tag;
  validate_cmd->add_option("tag", validate_tag, "ensemble tag or .json file")->required();

  auto* witness = app.add_subcommand("witness", "steering witness from a discrimination gap");
  std::string witness_state, witness_tag;
  double margin = 1e-4;
  std::size_t witness_restarts = 0;
  witness->add_option("--state", witness_state, "maxent:d | werner:p | pure2q:alpha | file.json")
      ->required();
  witness->add_option("tag", witness_tag, "ensemble tag or .json file")->required();
  witness->add_option("--margin", margin, "gap required before declaring steerability");
  witness->add_option("--restarts", witness_restarts, "restarts for the D optimization");

  auto* compute_d = app.add_subcommand("compute-d", "single-system distinguishing probability");
  std::string compute_d_tag;
  OptimizerConfig dcfg;
  compute_d->add_option("tag", compute_d_tag, "ensemble tag or .json file")->required();
  compute_d->add_option("--restarts", dcfg.restarts, "number of multistart restarts (0 = auto)");
  compute_d->add_option("--max-evals", dcfg.max_evals, "evaluation budget per restart");
  compute_d->add_option("--tol", dcfg.tol, "simplex diameter convergence tolerance");

  auto* compute_b = app.add_subcommand("compute-b", "entanglement-assisted probability");
  std::string compute_b_tag, compute_b_state = "maxent:2", compute_b_bob = "optimal";
  compute_b->add_option("tag", compute_b_tag, "ensemble tag or .json file")->required();
  compute_b->add_option("--state", compute_b_state,
                        "maxent:d | werner:p | pure2q:alpha | file.json");
  compute_b->add_option("--bob", compute_b_bob, "proof | optimal");

  auto* export_cmd = app.add_subcommand("export", "write an ensemble as JSON");
  std::string export_tag, export_output;
  export_cmd->add_option("tag", export_tag, "ensemble tag")->required();
  export_cmd->add_option("-o,--output", export_output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (reproduce->parsed()) return cmd_reproduce(table, {seed}, as_json, as_csv);
    if (validate_cmd->parsed()) return cmd_validate(validate_tag, as_json);
    if (witness->parsed())
      return cmd_witness(witness_state, witness_tag, margin, seed, witness_restarts, as_json);
    if (compute_d->parsed()) {
      dcfg.seed = seed;
      return cmd_compute_d(compute_d_tag, dcfg, as_json);
    }
    if (compute_b->parsed())
      return cmd_compute_b(compute_b_tag, compute_b_state, compute_b_bob, as_json);
    if (export_cmd->parsed()) return cmd_export(export_tag, export_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (std::string(e.what()).find("unknown ensemble tag") != std::string::npos) {
      std::cerr << "known tags:";
      for (const auto& t : known_tags()) std::cerr << " " << t;
      std::cerr << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
