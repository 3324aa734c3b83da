// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Criteria 1 and 2 are parameterized over
// build_incoherent(dim=64, count=70, target_mu1 <= 0.45); any dictionary
// with more atoms than dimensions has a rank-deficient Gram matrix, so by
// Gershgorin some absolute off-diagonal row sum reaches 1 and mu1 >= 1
// always: the builder correctly refuses, those two criteria cannot pass as
// stated, and the suite says so. Supplementary INFO lines rerun the same
// protocol at the nearest feasible sizes (dimension and atom count
// transposed) to show the properties themselves hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "dictionary.hpp"
#include "errors.hpp"
#include "greedy.hpp"
#include "rng.hpp"
#include "signals.hpp"

using namespace pursuit;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& text) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              text.c_str());
  if (!pass) ++g_failures;
}

void info(const std::string& text) { std::printf("INFO %s\n", text.c_str()); }

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

struct RecoveryTally {
  int recovered = 0;
  int ran = 0;
  std::string first_error;
};

// OGA exact-recovery protocol shared by criterion 1 and its supplementary
// rerun: 5-sparse signals, amplitudes in [1, 2], exact support match and
// residual <= 1e-9 |f| in exactly 5 steps.
RecoveryTally recovery_protocol(int dim, int count, double target_mu1,
                                int instances) {
  RecoveryTally tally;
  for (int i = 1; i <= instances; ++i) {
    try {
      Dictionary dict = Dictionary::incoherent(dim, count, target_mu1,
                                               static_cast<std::uint64_t>(i), 64);
      ++tally.ran;
      SparseRepresentation rep = gen_sparse_signal(
          dict, 5, 1.0, 2.0, static_cast<std::uint64_t>(1000 + i));
      Eigen::VectorXd f = synthesize(dict, rep);
      GreedyTrace trace = run_oga(dict, f, StopRule{});
      TheoremReport check = check_exact_recovery(trace, rep.support(), 1e-9);
      if (check.holds && trace.steps.size() == 5) ++tally.recovered;
    } catch (const Error& e) {
      if (tally.first_error.empty())
        tally.first_error =
            std::string(error_code_name(e.code())) + ": " + e.what();
    }
  }
  return tally;
}

struct DecayTally {
  int held = 0;
  int ran = 0;
  std::string first_error;
};

// PGA exponential-decay protocol for criterion 2: sparsity-8 exact signals,
// check_exponential_decay (negative semi-log slope with r^2 >= 0.9, or
// finite termination).
DecayTally decay_protocol(int dim, int count, double target_mu1,
                          int instances) {
  DecayTally tally;
  for (int i = 1; i <= instances; ++i) {
    try {
      Dictionary dict = Dictionary::incoherent(dim, count, target_mu1,
                                               static_cast<std::uint64_t>(i), 64);
      ++tally.ran;
      SparseRepresentation rep = gen_sparse_signal(
          dict, 8, 1.0, 2.0, static_cast<std::uint64_t>(2000 + i));
      Eigen::VectorXd f = synthesize(dict, rep);
      GreedyTrace trace = run_pga(dict, f, StopRule{400, -1.0, -1.0});
      if (check_exponential_decay(trace).holds) ++tally.held;
    } catch (const Error& e) {
      if (tally.first_error.empty())
        tally.first_error =
            std::string(error_code_name(e.code())) + ": " + e.what();
    }
  }
  return tally;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  RecoveryTally tally = recovery_protocol(64, 70, 0.45, 20);
  char line[512];
  std::snprintf(line, sizeof(line),
                "Theorem A exact recovery at dim=64, count=70, target_mu1=0.45: "
                "%d/20 recovered in %.2f s%s%s",
                tally.recovered, elapsed_s(start),
                tally.first_error.empty() ? "" : " — ",
                tally.first_error.c_str());
  report(1, tally.recovered == 20, line);
  if (tally.recovered < 20) {
    const auto t2 = std::chrono::steady_clock::now();
    RecoveryTally feasible = recovery_protocol(70, 64, 0.45, 20);
    std::snprintf(line, sizeof(line),
                  "supplementary (criterion 1): same protocol at the feasible "
                  "transposed sizes dim=70, count=64: %d/20 recovered in %.2f s",
                  feasible.recovered, elapsed_s(t2));
    info(line);
  }
}

void criterion_2() {
  DecayTally tally = decay_protocol(64, 70, 0.45, 20);
  char line[512];
  std::snprintf(line, sizeof(line),
                "Theorem A exponential decay at dim=64, count=70: %d/20 held "
                "(need >= 19)%s%s",
                tally.held, tally.first_error.empty() ? "" : " — ",
                tally.first_error.c_str());
  report(2, tally.held >= 19, line);
  if (tally.held < 19) {
    DecayTally feasible = decay_protocol(70, 64, 0.45, 20);
    std::snprintf(line, sizeof(line),
                  "supplementary (criterion 2): feasible transposed sizes "
                  "dim=70, count=64: %d/20 held",
                  feasible.held);
    info(line);
  }
}

struct Instance {
  Dictionary dict;
  SparseRepresentation rep;
  GreedyTrace trace;
  double n1;
};

// 50 tracked PGA trajectories on certified mu1 <= 0.33 dictionaries,
// shared by criteria 3, 6 and 7
std::vector<Instance> criterion3_instances() {
  std::vector<Instance> instances;
  for (int i = 1; i <= 50; ++i) {
    Dictionary dict =
        Dictionary::incoherent(64, 64, 0.33, static_cast<std::uint64_t>(i), 64);
    SparseRepresentation rep = gen_sparse_signal(
        dict, 5, 1.0, 2.0, static_cast<std::uint64_t>(3000 + i));
    Eigen::VectorXd f = synthesize(dict, rep);
    GreedyTrace trace = run_pga(dict, f, StopRule{200, -1.0, -1.0}, &rep);
    const double n1 = rep.one_norm();
    instances.push_back(
        Instance{std::move(dict), std::move(rep), std::move(trace), n1});
  }
  return instances;
}

void criterion_3(const std::vector<Instance>& instances) {
  int held = 0;
  int certified = 0;
  for (const Instance& inst : instances) {
    if (inst.dict.coherence().mu1 <= 0.33) ++certified;
    if (check_theorem1(inst.trace, inst.n1).holds) ++held;
  }
  char line[256];
  std::snprintf(line, sizeof(line),
                "Theorem 1 bound |f_m| <= n1 m^-1/2 + 1e-12 n1 over all steps: "
                "%d/50 held, %d/50 dictionaries certified mu1 <= 0.33",
                held, certified);
  report(3, held == 50 && certified == 50, line);
}

void criterion_4() {
  const double ps[3] = {1.2, 1.5, 1.8};
  int exponent_ok = 0;
  int coeff_ok = 0;
  int consistent = 0;
  for (int pi = 0; pi < 3; ++pi) {
    const double p = ps[pi];
    const double threshold = -(1.0 / p - 0.5) + 0.1;
    for (int i = 1; i <= 10; ++i) {
      Dictionary dict = Dictionary::incoherent(
          64, 64, 0.33, static_cast<std::uint64_t>(100 * pi + i + 1), 64);
      const double mu1 = dict.coherence().mu1;

      // seeded sign/support shuffle of coefficients k^(-1.01/p), quasi-norm 1
      SeededRng rng(static_cast<std::uint64_t>(7000 + 100 * pi + i));
      std::vector<int> order(static_cast<std::size_t>(dict.size()));
      for (int k = 0; k < dict.size(); ++k) order[k] = k;
      for (int k = 0; k < dict.size() - 1; ++k)
        std::swap(order[k], order[k + rng.next_below(static_cast<std::uint64_t>(
                                         dict.size() - k))]);
      SparseRepresentation rep(dict.label());
      for (int k = 0; k < dict.size(); ++k) {
        const double sign = (rng.next_u64() & 1u) ? -1.0 : 1.0;
        rep.set_coeff(order[k], sign * std::pow(k + 1.0, -1.01 / p));
      }
      rep = rep_scale(rep, 1.0 / rep_quasi_norm(rep, p));
      const double np = rep_quasi_norm(rep, p);

      Eigen::VectorXd f = synthesize(dict, rep);
      GreedyTrace trace = run_pga(dict, f, StopRule{300, -1.0, -1.0}, &rep);

      // tail window fit, as in the packaged check
      long usable = 0;
      for (const auto& s : trace.steps) {
        if (s.residual_norm <= 1e-13 * trace.initial_norm) break;
        ++usable;
      }
      bool exp_pass = false;
      if (usable >= 16) {
        RateFit fit =
            fit_decay_exponent(trace, std::max<long>(1, usable / 4), usable);
        exp_pass = fit.exponent <= threshold;
      }
      if (exp_pass) ++exponent_ok;

      // explicit proof bound max|c_m| <= 2 (1-3mu1)^-1 m^(-1/p) np
      bool coeff_pass = true;
      const double factor = 2.0 / (1.0 - 3.0 * mu1);
      for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const double bound =
            factor * std::pow(static_cast<double>(s + 1), -1.0 / p) * np;
        if (trace.steps[s].coefficients->max_abs_coeff() > bound + 1e-12 * np)
          coeff_pass = false;
      }
      if (coeff_pass) ++coeff_ok;

      // the packaged check must agree with the two parts computed here
      TheoremReport packaged = check_theorem2(trace, p, np, mu1);
      if (packaged.holds == (exp_pass && coeff_pass)) ++consistent;
    }
  }
  char line[256];
  std::snprintf(line, sizeof(line),
                "Theorem 2: tail exponent ok %d/30 (need >= 27), coefficient "
                "bound ok %d/30 (need 30), packaged check consistent %d/30",
                exponent_ok, coeff_ok, consistent);
  report(4, exponent_ok >= 27 && coeff_ok == 30 && consistent == 30, line);
}

void criterion_5() {
  std::mt19937_64 gen(20260505);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> amp(-3.0, 3.0);
  int held = 0;
  int pairs = 0;
  double mu1_min = 1e300, mu1_max = 0.0;
  while (pairs < 1000) {
    const int dim = 4 + static_cast<int>(gen() % 13);
    const int count = 1 + static_cast<int>(gen() % 6);
    Eigen::MatrixXd atoms(dim, count);
    for (int j = 0; j < count; ++j) {
      do {
        for (int i = 0; i < dim; ++i) atoms(i, j) = normal(gen);
      } while (atoms.col(j).norm() == 0.0);
      atoms.col(j).normalize();
    }
    Dictionary dict(std::move(atoms), "battery");
    if (dict.coherence().mu1 > 1.5) continue;  // stay in the stated range
    mu1_min = std::min(mu1_min, dict.coherence().mu1);
    mu1_max = std::max(mu1_max, dict.coherence().mu1);
    for (int rep_trial = 0; rep_trial < 5 && pairs < 1000; ++rep_trial) {
      SparseRepresentation coeffs;
      const int support = 1 + static_cast<int>(gen() % count);
      for (int k = 0; k < support; ++k) {
        double v = amp(gen);
        if (v == 0.0) v = 1.0;
        coeffs.set_coeff(static_cast<int>(gen() % count), v);
      }
      if (coeffs.empty()) coeffs.set_coeff(0, 1.0);
      ++pairs;
      if (frame_bounds_check(dict, coeffs).holds) ++held;
    }
  }
  char line[256];
  std::snprintf(line, sizeof(line),
                "Lemma 1 frame bounds: %d/1000 held, mu1 range [%.3g, %.3g]",
                held, mu1_min, mu1_max);
  report(5, held == 1000, line);
}

void criterion_6(const std::vector<Instance>& instances) {
  long lemma2_checked = 0, lemma2_failed = 0;
  long lemma3_checked = 0, lemma3_failed = 0;
  for (const Instance& inst : instances) {
    const double mu1 = inst.dict.coherence().mu1;
    SparseRepresentation before = *inst.trace.initial_coefficients;
    for (std::size_t i = 0; i < inst.trace.steps.size() && !before.empty();
         ++i) {
      // the deviation bound is quantified over every atom index
      for (int lambda0 = 0; lambda0 < inst.dict.size(); ++lambda0) {
        ++lemma2_checked;
        if (!check_lemma2(inst.dict, before, lambda0, 0.0).holds)
          ++lemma2_failed;
      }
      const SparseRepresentation& after = *inst.trace.steps[i].coefficients;
      ++lemma3_checked;
      if (!check_lemma3_descent(before, after, 1.0, mu1).holds)
        ++lemma3_failed;
      before = after;
    }
  }
  char line[256];
  std::snprintf(line, sizeof(line),
                "Lemmas 2 and 3 along all criterion-3 trajectories: lemma2 "
                "%ld/%ld, lemma3 %ld/%ld",
                lemma2_checked - lemma2_failed, lemma2_checked,
                lemma3_checked - lemma3_failed, lemma3_checked);
  report(6, lemma2_failed == 0 && lemma3_failed == 0 && lemma2_checked > 0,
         line);
}

void criterion_7(const std::vector<Instance>& instances) {
  int held = 0;
  for (const Instance& inst : instances)
    if (check_energy_recursion(inst.trace, inst.n1 * inst.n1).holds) ++held;
  char line[256];
  std::snprintf(line, sizeof(line),
                "energy recursion a_m+1 <= a_m (1 - a_m/n1^2) and a_m <= "
                "n1^2/m: %d/50 held",
                held);
  report(7, held == 50, line);
}

void criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 gen(20260808);
  std::normal_distribution<double> normal(0.0, 1.0);
  int instances = 0;
  long dominance_checked = 0, dominance_failed = 0;
  long agree_checked = 0, agree_failed = 0;
  for (int dim = 3; dim <= 8; ++dim) {
    for (int count : {dim, std::min(dim + 2, 10)}) {
      for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXd atoms(dim, count);
        for (int j = 0; j < count; ++j) {
          do {
            for (int i = 0; i < dim; ++i) atoms(i, j) = normal(gen);
          } while (atoms.col(j).norm() == 0.0);
          atoms.col(j).normalize();
        }
        Dictionary dict(std::move(atoms), "battery");
        Eigen::VectorXd f(dim);
        for (int i = 0; i < dim; ++i) f(i) = normal(gen);
        ++instances;
        GreedyTrace trace = run_oga(dict, f, StopRule{3, -1.0, -1.0});
        for (int m = 1; m <= 3 && m <= count; ++m) {
          OracleResult oracle = best_mterm_oracle(dict, f, m);
          const double oga_residual =
              m <= static_cast<int>(trace.steps.size())
                  ? trace.steps[m - 1].residual_norm
                  : trace.final_residual_norm();
          ++dominance_checked;
          if (oga_residual < oracle.error - 1e-9 * f.norm()) ++dominance_failed;
          if (m == 1) {
            Eigen::VectorXd dots = (dict.atoms().transpose() * f).cwiseAbs();
            std::vector<double> sorted(dots.data(), dots.data() + dots.size());
            std::sort(sorted.rbegin(), sorted.rend());
            if (sorted.size() > 1 && sorted[0] - sorted[1] > 1e-10) {
              ++agree_checked;
              if (oracle.support !=
                  std::vector<int>{select_atom(dict, f).index})
                ++agree_failed;
            }
          }
        }
      }
    }
  }
  char line[320];
  std::snprintf(line, sizeof(line),
                "oracle battery (%d instances): dominance %ld/%ld, m=1 "
                "selection agreement %ld/%ld, %.2f s",
                instances, dominance_checked - dominance_failed,
                dominance_checked, agree_checked - agree_failed, agree_checked,
                elapsed_s(start));
  report(8, instances >= 200 && dominance_failed == 0 && agree_failed == 0,
         line);
}

std::map<std::string, std::string> dir_bytes(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out[fs::relative(entry.path(), dir).string()] = ss.str();
  }
  return out;
}

void criterion_9() {
  const fs::path dir = fs::temp_directory_path() / "pursuit_acceptance";
  fs::create_directories(dir);
  const char* configs[2] = {
      R"({
  "dictionary": {"type": "incoherent", "dim": 32, "count": 32,
                 "target_mu1": 0.33, "seed": 3, "max_attempts": 64},
  "signal": {"type": "sparse", "sparsity": 4, "amp_low": 1.0,
             "amp_high": 2.0, "seed": 4},
  "algorithm": "both",
  "stop": {"max_iterations": 200},
  "checks": ["theorem1", "theoremA_recovery", "energy_recursion", "lemma3"]
})",
      R"({
  "dictionary": {"type": "orthonormal", "dim": 16},
  "signal": {"type": "sparse", "sparsity": 4, "amp_low": 1.0,
             "amp_high": 2.0, "seed": 9},
  "algorithm": "both",
  "stop": {"max_iterations": 100},
  "checks": ["theorem1", "theoremA_recovery", "lemma2", "oracle"]
})"};

  bool all_identical = true;
  std::string note;
  for (int c = 0; c < 2 && all_identical; ++c) {
    const fs::path cfg = dir / ("config" + std::to_string(c) + ".json");
    {
      std::ofstream out(cfg, std::ios::trunc);
      out << configs[c];
    }
    const fs::path out_a = dir / ("out" + std::to_string(c) + "_a");
    const fs::path out_b = dir / ("out" + std::to_string(c) + "_b");
    fs::remove_all(out_a);
    fs::remove_all(out_b);
    for (const fs::path& out : {out_a, out_b}) {
      const std::string cmd = std::string(PURSUIT_CLI_BIN) + " run --config " +
                              cfg.string() + " --out " + out.string() +
                              " --quiet >/dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) {
        all_identical = false;
        note = "cli run failed for config " + std::to_string(c);
      }
    }
    if (!all_identical) break;
    const auto a = dir_bytes(out_a);
    const auto b = dir_bytes(out_b);
    if (a.empty() || a != b) {
      all_identical = false;
      note = "outputs differ for config " + std::to_string(c);
    }
  }
  report(9, all_identical,
         all_identical
             ? "two runs of each fixed CLI config produced byte-identical "
               "traces and reports (2 configs)"
             : "CLI determinism violated: " + note);
}

void criterion_10() {
  GreedyTrace half;
  half.algorithm = Algorithm::pga;
  half.initial_norm = 1.0;
  GreedyTrace cubic;
  cubic.algorithm = Algorithm::pga;
  cubic.initial_norm = 3.0;
  for (int m = 1; m <= 128; ++m) {
    StepRecord a;
    a.selected = 0;
    a.residual_norm = std::pow(m, -0.5);
    half.steps.push_back(a);
    StepRecord b;
    b.selected = 0;
    b.residual_norm = 3.0 * std::pow(m, -2.0);
    cubic.steps.push_back(b);
  }
  const RateFit fit_half = fit_decay_exponent(half, 1, 128);
  const RateFit fit_cubic = fit_decay_exponent(cubic, 1, 128);
  const bool ok = std::abs(fit_half.exponent + 0.5) <= 1e-9 &&
                  std::abs(fit_half.r_squared - 1.0) <= 1e-9 &&
                  std::abs(fit_cubic.exponent + 2.0) <= 1e-9 &&
                  std::abs(fit_cubic.intercept - std::log(3.0)) <= 1e-9;
  char line[320];
  std::snprintf(line, sizeof(line),
                "decay-exponent probe self-tests (stands in for the "
                "out-of-scope lower-bound construction): m^-0.5 -> %.12f, "
                "3 m^-2 -> %.12f, intercept %.12f",
                fit_half.exponent, fit_cubic.exponent, fit_cubic.intercept);
  report(10, ok, line);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  const std::vector<Instance> instances = criterion3_instances();
  criterion_3(instances);
  criterion_4();
  criterion_5();
  criterion_6(instances);
  criterion_7(instances);
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d/10 criteria passed in %.2f s\n", 10 - g_failures,
              elapsed_s(start));
  return g_failures == 0 ? 0 : 1;
}
