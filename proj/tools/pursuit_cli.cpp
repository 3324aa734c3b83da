/*
Copyright 2026 the pursuit authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Batch experiment runner. Builds or loads a dictionary, generates or loads
// a sparse signal, runs the greedy algorithms and emits traces, check
// reports and a summary CSV. Everything numerical goes through the C API of
// libpursuit; this file only does configuration, orchestration and I/O.
//
// Exit status: 0 success, 1 usage/config/data error, 2 success with at
// least one hypothesis warning (a requested check whose coherence
// hypothesis the dictionary fails is reported as skipped).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pursuit.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

void check_api(pursuit_status status, const std::string& where) {
  if (status != PURSUIT_OK)
    die(1, where + ": " + pursuit_status_name(status) + " (" +
               pursuit_last_error() + ")");
}

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct DictDeleter {
  void operator()(pursuit_dictionary* p) const { pursuit_dictionary_free(p); }
};
struct RepDeleter {
  void operator()(pursuit_rep* p) const { pursuit_rep_free(p); }
};
struct TraceDeleter {
  void operator()(pursuit_trace* p) const { pursuit_trace_free(p); }
};
using DictPtr = std::unique_ptr<pursuit_dictionary, DictDeleter>;
using RepPtr = std::unique_ptr<pursuit_rep, RepDeleter>;
using TracePtr = std::unique_ptr<pursuit_trace, TraceDeleter>;

std::string trace_csv(const pursuit_trace* trace) {
  char* s = nullptr;
  check_api(pursuit_trace_csv(trace, &s), "trace csv");
  std::string out(s);
  pursuit_string_free(s);
  return out;
}

std::string report_kv(const pursuit_theorem_report& report) {
  char* s = nullptr;
  check_api(pursuit_theorem_report_kv(&report, &s), "report kv");
  std::string out(s);
  pursuit_string_free(s);
  return out;
}

std::string report_csv_row(const pursuit_theorem_report& report) {
  char* s = nullptr;
  check_api(pursuit_theorem_report_csv_row(&report, &s), "report csv row");
  std::string out(s);
  pursuit_string_free(s);
  return out;
}

// ---------------- configuration ----------------

struct Options {
  std::string config_path;
  std::string out_override;
  std::optional<std::uint64_t> seed_override;
  bool quiet = false;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(1, "cannot open config '" + path + "'");
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    die(1, "config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) die(1, "config root must be a JSON object");
  return cfg;
}

fs::path config_dir(const Options& opt) {
  return fs::path(opt.config_path).parent_path();
}

const json& need(const json& cfg, const char* key) {
  auto it = cfg.find(key);
  if (it == cfg.end()) die(1, std::string("config is missing '") + key + "'");
  return *it;
}

DictPtr build_dictionary(const json& cfg, const Options& opt) {
  const json& source = need(cfg, "dictionary");
  const std::string type = need(source, "type").get<std::string>();
  pursuit_dictionary* dict = nullptr;
  if (type == "orthonormal") {
    check_api(pursuit_dictionary_orthonormal(need(source, "dim").get<int>(), &dict),
              "dictionary orthonormal");
  } else if (type == "incoherent") {
    const std::uint64_t seed = opt.seed_override
                                   ? *opt.seed_override
                                   : need(source, "seed").get<std::uint64_t>();
    check_api(pursuit_dictionary_incoherent(
                  need(source, "dim").get<int>(), need(source, "count").get<int>(),
                  need(source, "target_mu1").get<double>(), seed,
                  source.value("max_attempts", 64),
                  source.value("orthonormalize", false) ? 1 : 0, &dict),
              "dictionary incoherent");
  } else if (type == "file") {
    const fs::path path = config_dir(opt) / need(source, "path").get<std::string>();
    check_api(pursuit_dictionary_load(path.string().c_str(), &dict),
              "dictionary load");
  } else {
    die(1, "dictionary.type must be orthonormal, incoherent or file");
  }
  return DictPtr(dict);
}

RepPtr build_signal(const json& cfg, const Options& opt,
                    const pursuit_dictionary* dict) {
  const json& source = need(cfg, "signal");
  const std::string type = need(source, "type").get<std::string>();
  pursuit_rep* rep = nullptr;
  if (type == "sparse") {
    const std::uint64_t seed = opt.seed_override
                                   ? *opt.seed_override
                                   : need(source, "seed").get<std::uint64_t>();
    check_api(pursuit_gen_sparse_signal(dict, need(source, "sparsity").get<int>(),
                                        need(source, "amp_low").get<double>(),
                                        need(source, "amp_high").get<double>(),
                                        seed, &rep),
              "signal sparse");
  } else if (type == "file") {
    const fs::path path = config_dir(opt) / need(source, "path").get<std::string>();
    check_api(pursuit_rep_load(path.string().c_str(),
                               pursuit_dictionary_label(dict), &rep),
              "signal load");
  } else {
    die(1, "signal.type must be sparse or file");
  }
  return RepPtr(rep);
}

pursuit_stop_rule stop_rule(const json& cfg) {
  pursuit_stop_rule stop{1000, -1.0, -1.0};
  if (cfg.contains("stop")) {
    const json& s = cfg.at("stop");
    stop.max_iterations = s.value("max_iterations", 1000);
    stop.residual_tol = s.value("residual_tol", -1.0);
    stop.inner_product_tol = s.value("inner_product_tol", -1.0);
  }
  return stop;
}

// ---------------- helpers over the C API ----------------

std::vector<double> synthesized(const pursuit_dictionary* dict,
                                const pursuit_rep* rep) {
  std::vector<double> f(static_cast<std::size_t>(pursuit_dictionary_dim(dict)));
  check_api(pursuit_synthesize(dict, rep, f.data()), "synthesize");
  return f;
}

double vector_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double quasi_norm(const pursuit_rep* rep, double p) {
  double out = 0.0;
  check_api(pursuit_rep_quasi_norm(rep, p, &out), "rep quasi norm");
  return out;
}

double residual_at(const pursuit_trace* trace, int m) {
  const int64_t steps = pursuit_trace_steps(trace);
  if (steps == 0) return pursuit_trace_initial_norm(trace);
  const int64_t i = std::min<int64_t>(m, steps) - 1;
  int32_t selected = 0;
  double ip = 0.0, rn = 0.0;
  check_api(pursuit_trace_step(trace, i, &selected, &ip, &rn), "trace step");
  return rn;
}

std::vector<int32_t> rep_support(const pursuit_rep* rep) {
  const int32_t n = pursuit_rep_size(rep);
  std::vector<int32_t> support(static_cast<std::size_t>(n));
  for (int32_t i = 0; i < n; ++i) {
    double value = 0.0;
    check_api(pursuit_rep_entry(rep, i, &support[i], &value), "rep entry");
  }
  return support;
}

// contents are assembled fully in memory and flushed at the very end, so a
// failing run leaves no partial files behind
struct OutputSet {
  fs::path dir;
  std::vector<std::pair<std::string, std::string>> files;

  void add(const std::string& name, const std::string& contents) {
    files.emplace_back(name, contents);
  }

  void flush() const {
    fs::create_directories(dir);
    for (const auto& [name, contents] : files) {
      const fs::path path = dir / name;
      const fs::path tmp = path.string() + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) die(1, "cannot write '" + tmp.string() + "'");
        out << contents;
      }
      fs::rename(tmp, path);
    }
  }
};

// ---------------- subcommands ----------------

int cmd_coherence(const Options& opt) {
  const json cfg = load_config(opt.config_path);
  DictPtr dict = build_dictionary(cfg, opt);
  pursuit_coherence_report report;
  check_api(pursuit_dictionary_coherence(dict.get(), &report), "coherence");

  std::printf("label=%s\n", pursuit_dictionary_label(dict.get()));
  std::printf("dim=%d\n", pursuit_dictionary_dim(dict.get()));
  std::printf("count=%d\n", pursuit_dictionary_count(dict.get()));
  std::printf("mu1=%s\n", format17(report.mu1).c_str());
  std::printf("mu=%s\n", format17(report.mu).c_str());
  std::printf("lower_frame=%s\n", format17(report.lower_frame).c_str());
  std::printf("upper_frame=%s\n", format17(report.upper_frame).c_str());
  std::printf("worst_atom=%d\n", report.worst_atom);
  if (report.mu1 >= 0.5) {
    std::fprintf(stderr,
                 "warning: mu1 = %s >= 1/2; exact-recovery and exponential "
                 "decay guarantees do not apply\n",
                 format17(report.mu1).c_str());
    return 2;
  }
  return 0;
}

const std::vector<std::string> kKnownChecks = {
    "theorem1",         "theorem2", "theoremA_recovery", "theoremA_exponential",
    "energy_recursion", "lemma1",   "lemma2",            "lemma3",
    "oracle"};

bool needs_pga(const std::string& check) {
  return check == "theorem1" || check == "theorem2" ||
         check == "theoremA_exponential" || check == "energy_recursion" ||
         check == "lemma2" || check == "lemma3";
}

bool needs_oga(const std::string& check) {
  return check == "theoremA_recovery" || check == "oracle";
}

// aggregates per-step lemma reports into one kv block + summary row
struct LemmaAggregate {
  bool holds = true;
  long steps_checked = 0;
  double worst_margin = 0.0;
  long worst_step = 0;
  std::string worst_detail;
  bool first = true;

  void absorb(const pursuit_lemma_report& r, long step) {
    ++steps_checked;
    const double margin = r.rhs + r.slack_used - r.lhs;
    if (!r.holds) holds = false;
    if (first || margin < worst_margin) {
      worst_margin = margin;
      worst_step = step;
      worst_detail = r.detail;
      first = false;
    }
  }

  std::string to_kv(const std::string& name) const {
    std::string out;
    out += "check=" + name + "\n";
    out += std::string("holds=") + (holds ? "true" : "false") + "\n";
    out += "steps_checked=" + std::to_string(steps_checked) + "\n";
    out += "worst_margin=" + format17(worst_margin) + "\n";
    out += "worst_step=" + std::to_string(worst_step) + "\n";
    out += "detail=" + worst_detail + "\n";
    return out;
  }

  std::string csv_row(const std::string& name) const {
    return name + "," + (holds ? "true" : "false") + "," +
           format17(worst_margin) + "," + std::to_string(worst_step);
  }
};

int cmd_run(const Options& opt) {
  const json cfg = load_config(opt.config_path);

  const std::string algorithm = cfg.value("algorithm", "both");
  if (algorithm != "pga" && algorithm != "oga" && algorithm != "both")
    die(1, "algorithm must be pga, oga or both");

  std::vector<std::string> checks;
  for (const auto& c : cfg.value("checks", json::array())) {
    const std::string name = c.get<std::string>();
    if (std::find(kKnownChecks.begin(), kKnownChecks.end(), name) ==
        kKnownChecks.end())
      die(1, "unknown check '" + name + "'");
    checks.push_back(name);
  }
  auto wants = [&](const std::string& name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  if (wants("theorem2") && !cfg.contains("p"))
    die(1, "check theorem2 requires 'p' in the config");
  const double p = cfg.value("p", 1.0);
  for (const auto& check : checks) {
    if (needs_pga(check) && algorithm == "oga")
      die(1, "check " + check + " needs a PGA run (algorithm pga or both)");
    if (needs_oga(check) && algorithm == "pga")
      die(1, "check " + check + " needs an OGA run (algorithm oga or both)");
    if (check == "oracle" && algorithm != "both")
      die(1, "check oracle compares both algorithms (algorithm both)");
  }

  OutputSet outputs;
  outputs.dir = opt.out_override.empty()
                    ? config_dir(opt) / cfg.value("output_dir", "out")
                    : fs::path(opt.out_override);

  DictPtr dict = build_dictionary(cfg, opt);
  RepPtr signal = build_signal(cfg, opt, dict.get());
  const std::vector<double> f = synthesized(dict.get(), signal.get());
  const double f_norm = vector_norm(f);

  pursuit_coherence_report coherence;
  check_api(pursuit_dictionary_coherence(dict.get(), &coherence), "coherence");
  const double mu1 = coherence.mu1;

  // coherence hypotheses per check; a failing one downgrades to a warning
  bool warned = false;
  std::set<std::string> skipped;
  auto hypothesis_gate = [&](const std::string& check, double limit,
                             const char* limit_text) {
    if (!wants(check) || mu1 < limit) return;
    std::fprintf(stderr,
                 "warning: %s requires mu1 < %s but mu1 = %s; check skipped\n",
                 check.c_str(), limit_text, format17(mu1).c_str());
    skipped.insert(check);
    warned = true;
  };
  hypothesis_gate("theorem1", 1.0 / 3.0, "1/3");
  hypothesis_gate("theorem2", 1.0 / 3.0, "1/3");
  hypothesis_gate("lemma3", 1.0 / 3.0, "1/3");
  hypothesis_gate("theoremA_recovery", 0.5, "1/2");
  hypothesis_gate("theoremA_exponential", 0.5, "1/2");

  const pursuit_stop_rule stop = stop_rule(cfg);
  TracePtr pga, oga;
  if (algorithm != "oga") {
    pursuit_trace* t = nullptr;
    check_api(pursuit_run_pga(dict.get(), f.data(), &stop, signal.get(), &t),
              "run pga");
    pga.reset(t);
    outputs.add("trace_pga.csv", trace_csv(t));
  }
  if (algorithm != "pga") {
    pursuit_trace* t = nullptr;
    check_api(pursuit_run_oga(dict.get(), f.data(), &stop, &t), "run oga");
    oga.reset(t);
    outputs.add("trace_oga.csv", trace_csv(t));
  }

  if (cfg.value("export_coefficients", false) && pga) {
    // snapshots bypass the in-memory buffer; they are per-step files
    fs::create_directories(outputs.dir);
    check_api(pursuit_trace_export_coefficients(
                  pga.get(), (outputs.dir / "coeffs_pga").string().c_str()),
              "export coefficients");
  }

  std::string summary = "theorem,holds,worst_margin,worst_step\n";
  auto add_report = [&](const std::string& name,
                        const pursuit_theorem_report& report) {
    outputs.add("report_" + name + ".txt", report_kv(report));
    summary += report_csv_row(report) + "\n";
  };
  auto add_skipped = [&](const std::string& name) {
    outputs.add("report_" + name + ".txt",
                "check=" + name + "\nholds=skipped\ndetail=mu1=" +
                    format17(mu1) + " fails the coherence hypothesis\n");
    summary += name + ",skipped,0,0\n";
  };

  for (const std::string& check : checks) {
    if (skipped.count(check)) {
      add_skipped(check);
      continue;
    }
    if (check == "theorem1") {
      pursuit_theorem_report report;
      check_api(pursuit_check_theorem1(pga.get(), quasi_norm(signal.get(), 1.0),
                                       &report),
                "theorem1");
      add_report(check, report);
    } else if (check == "theorem2") {
      pursuit_theorem_report report;
      check_api(pursuit_check_theorem2(pga.get(), p,
                                       quasi_norm(signal.get(), p), mu1,
                                       &report),
                "theorem2");
      add_report(check, report);
    } else if (check == "theoremA_recovery") {
      const std::vector<int32_t> support = rep_support(signal.get());
      pursuit_theorem_report report;
      check_api(pursuit_check_exact_recovery(
                    oga.get(), support.data(),
                    static_cast<int32_t>(support.size()),
                    cfg.value("recovery_tol", 1e-9), &report),
                "theoremA_recovery");
      add_report(check, report);
    } else if (check == "theoremA_exponential") {
      pursuit_theorem_report report;
      check_api(pursuit_check_exponential_decay(pga.get(), &report),
                "theoremA_exponential");
      add_report(check, report);
    } else if (check == "energy_recursion") {
      const double n1 = quasi_norm(signal.get(), 1.0);
      pursuit_theorem_report report;
      check_api(pursuit_check_energy_recursion(pga.get(), n1 * n1, &report),
                "energy_recursion");
      add_report(check, report);
    } else if (check == "lemma1") {
      double lhs = 0.0, mid = 0.0, rhs = 0.0;
      int32_t holds = 0;
      check_api(pursuit_frame_bounds_check(dict.get(), signal.get(), &lhs, &mid,
                                           &rhs, &holds),
                "lemma1");
      std::string kv = "check=lemma1\n";
      kv += std::string("holds=") + (holds ? "true" : "false") + "\n";
      kv += "lhs=" + format17(lhs) + "\n";
      kv += "mid=" + format17(mid) + "\n";
      kv += "rhs=" + format17(rhs) + "\n";
      outputs.add("report_lemma1.txt", kv);
      summary += std::string("lemma1,") + (holds ? "true" : "false") + "," +
                 format17(std::min(mid - lhs, rhs - mid)) + ",0\n";
    } else if (check == "lemma2") {
      LemmaAggregate agg;
      RepPtr before;
      {
        pursuit_rep* r = nullptr;
        check_api(pursuit_trace_initial_coefficients(pga.get(), &r), "lemma2");
        before.reset(r);
      }
      const int64_t steps = pursuit_trace_steps(pga.get());
      for (int64_t i = 0; i < steps && pursuit_rep_size(before.get()) > 0; ++i) {
        int32_t selected = 0;
        double ip = 0.0, rn = 0.0;
        check_api(pursuit_trace_step(pga.get(), i, &selected, &ip, &rn),
                  "lemma2");
        pursuit_lemma_report r;
        check_api(pursuit_check_lemma2(dict.get(), before.get(), selected, 0.0,
                                       &r),
                  "lemma2");
        agg.absorb(r, i + 1);
        pursuit_rep* next = nullptr;
        check_api(pursuit_trace_step_coefficients(pga.get(), i, &next), "lemma2");
        before.reset(next);
      }
      outputs.add("report_lemma2.txt", agg.to_kv("lemma2"));
      summary += agg.csv_row("lemma2") + "\n";
    } else if (check == "lemma3") {
      LemmaAggregate agg;
      RepPtr before;
      {
        pursuit_rep* r = nullptr;
        check_api(pursuit_trace_initial_coefficients(pga.get(), &r), "lemma3");
        before.reset(r);
      }
      const int64_t steps = pursuit_trace_steps(pga.get());
      for (int64_t i = 0; i < steps && pursuit_rep_size(before.get()) > 0; ++i) {
        pursuit_rep* after = nullptr;
        check_api(pursuit_trace_step_coefficients(pga.get(), i, &after), "lemma3");
        RepPtr after_ptr(after);
        pursuit_lemma_report r;
        check_api(pursuit_check_lemma3_descent(before.get(), after, p, mu1, &r),
                  "lemma3");
        agg.absorb(r, i + 1);
        before = std::move(after_ptr);
      }
      outputs.add("report_lemma3.txt", agg.to_kv("lemma3"));
      summary += agg.csv_row("lemma3") + "\n";
    } else if (check == "oracle") {
      const int m = cfg.value("oracle_m", pursuit_rep_size(signal.get()));
      std::vector<int32_t> support(static_cast<std::size_t>(m));
      double error = 0.0;
      check_api(
          pursuit_best_mterm_oracle(dict.get(), f.data(), m, &error,
                                    support.data()),
          "oracle");
      const double oga_rn = residual_at(oga.get(), m);
      const double pga_rn = residual_at(pga.get(), m);
      const bool dominance = oga_rn >= error - 1e-9 * f_norm;
      std::string kv = "check=oracle\n";
      kv += "m=" + std::to_string(m) + "\n";
      kv += "oracle_error=" + format17(error) + "\n";
      kv += "oracle_support=";
      for (std::size_t i = 0; i < support.size(); ++i)
        kv += (i ? " " : "") + std::to_string(support[i]);
      kv += "\n";
      kv += "pga_residual_at_m=" + format17(pga_rn) + "\n";
      kv += "oga_residual_at_m=" + format17(oga_rn) + "\n";
      kv += std::string("holds=") + (dominance ? "true" : "false") + "\n";
      outputs.add("report_oracle.txt", kv);
      summary += std::string("oracle,") + (dominance ? "true" : "false") + "," +
                 format17(oga_rn - error) + "," + std::to_string(m) + "\n";
    }
  }

  outputs.add("summary.csv", summary);
  outputs.flush();

  if (!opt.quiet) {
    std::printf("dictionary: %s (dim=%d count=%d mu1=%s)\n",
                pursuit_dictionary_label(dict.get()),
                pursuit_dictionary_dim(dict.get()),
                pursuit_dictionary_count(dict.get()), format17(mu1).c_str());
    std::printf("signal: %d nonzero coefficients, |f| = %s\n",
                pursuit_rep_size(signal.get()), format17(f_norm).c_str());
    if (pga)
      std::printf("pga: %lld steps, stop %s\n",
                  static_cast<long long>(pursuit_trace_steps(pga.get())),
                  pursuit_stop_reason_name(static_cast<pursuit_stop_reason>(
                      pursuit_trace_stop_reason(pga.get()))));
    if (oga)
      std::printf("oga: %lld steps, stop %s\n",
                  static_cast<long long>(pursuit_trace_steps(oga.get())),
                  pursuit_stop_reason_name(static_cast<pursuit_stop_reason>(
                      pursuit_trace_stop_reason(oga.get()))));
    std::printf("wrote %zu files to %s\n", outputs.files.size(),
                outputs.dir.string().c_str());
  }
  return warned ? 2 : 0;
}

int cmd_oracle(const Options& opt) {
  const json cfg = load_config(opt.config_path);
  DictPtr dict = build_dictionary(cfg, opt);
  RepPtr signal = build_signal(cfg, opt, dict.get());
  const std::vector<double> f = synthesized(dict.get(), signal.get());

  const int m = cfg.contains("oracle_m") ? cfg.at("oracle_m").get<int>()
                                         : pursuit_rep_size(signal.get());
  if (m < 1) die(1, "oracle_m must be >= 1");

  std::vector<int32_t> support(static_cast<std::size_t>(m));
  double error = 0.0;
  check_api(pursuit_best_mterm_oracle(dict.get(), f.data(), m, &error,
                                      support.data()),
            "oracle");

  const pursuit_stop_rule stop = stop_rule(cfg);
  TracePtr pga, oga;
  {
    pursuit_trace* t = nullptr;
    check_api(pursuit_run_pga(dict.get(), f.data(), &stop, nullptr, &t),
              "run pga");
    pga.reset(t);
    t = nullptr;
    check_api(pursuit_run_oga(dict.get(), f.data(), &stop, &t), "run oga");
    oga.reset(t);
  }

  std::printf("m=%d\n", m);
  std::printf("oracle_error=%s\n", format17(error).c_str());
  std::printf("oracle_support=");
  for (std::size_t i = 0; i < support.size(); ++i)
    std::printf("%s%d", i ? " " : "", support[i]);
  std::printf("\n");
  std::printf("pga_residual_at_m=%s\n", format17(residual_at(pga.get(), m)).c_str());
  std::printf("oga_residual_at_m=%s\n", format17(residual_at(oga.get(), m)).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("greedy sparse approximation experiments, libpursuit ") +
               pursuit_version()};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON experiment config")
        ->required();
    sub->add_option("--out", opt.out_override,
                    "output directory (overrides config output_dir)");
    sub->add_option_function<std::uint64_t>(
        "--seed",
        [&](const std::uint64_t& seed) { opt.seed_override = seed; },
        "override every seed in the config");
    sub->add_flag("--quiet", opt.quiet, "suppress informational output");
  };

  CLI::App* coherence =
      app.add_subcommand("coherence", "measure dictionary coherence");
  CLI::App* run = app.add_subcommand("run", "run algorithms and checks");
  CLI::App* oracle =
      app.add_subcommand("oracle", "exhaustive best m-term comparison");
  add_common(coherence);
  add_common(run);
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (coherence->parsed()) return cmd_coherence(opt);
    if (run->parsed()) return cmd_run(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
