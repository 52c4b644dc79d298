/*************************************************************************************
 * zenotomo command line: probabilities, bounds, irradiation ratios, reconstructions
 *
 * Copyright 2026 The zenotomo authors
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not use
 * this file except in compliance with the License.  You may obtain a copy of the
 * License at
 *     https://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software distributed
 * under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
 * CONDITIONS OF ANY KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations under the License.
 *************************************************************************************/

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <zenotomo/zenotomo.h>

namespace {

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

[[noreturn]] void die(const std::string& context, int32_t code) {
  std::cerr << "zenotomo: " << context << ": " << zt_strerror(code) << ": "
            << zt_last_error_message() << "\n";
  std::exit(1);
}

void check(int32_t code, const std::string& context) {
  if (code != ZT_OK) die(context, code);
}

// CSV sink: stdout by default, --out file otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) {
        std::cerr << "zenotomo: cannot open " << path << " for writing\n";
        std::exit(1);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct ModelHandle {
  zt_model* ptr = nullptr;
  ~ModelHandle() { zt_model_free(ptr); }
};

struct ImageHandle {
  zt_image* ptr = nullptr;
  ~ImageHandle() { zt_image_free(ptr); }
};

struct ClassifierHandle {
  zt_classifier* ptr = nullptr;
  ~ClassifierHandle() { zt_classifier_free(ptr); }
};

struct ReportHandle {
  zt_report* ptr = nullptr;
  ~ReportHandle() { zt_report_free(ptr); }
};

/* ---- probs ---- */

int run_probs(const std::vector<std::int64_t>& loops, const std::vector<double>& taus,
              const std::string& out_path) {
  Output out(out_path);
  out.stream() << "L,tau,p_z,p_o,p_a,p_z_asym,p_a_asym,tau_eff,tau_threshold,in_zeno_regime\n";
  for (std::int64_t L : loops) {
    double threshold = 0.0;
    check(zt_zeno_threshold(L, &threshold), "zeno threshold");
    for (double tau : taus) {
      double p_z = 0, p_o = 0, p_a = 0;
      check(zt_zeno_probabilities(L, tau, &p_z, &p_o, &p_a), "zeno probabilities");
      double tau_eff = 0.0;
      check(zt_effective_transmission(L, tau, &tau_eff), "effective transmission");

      std::string asym_z, asym_a;
      const bool in_regime = tau < threshold;
      if (in_regime) {
        double az = 0, ao = 0, aa = 0;
        check(zt_zeno_probabilities_asymptotic(L, tau, &az, &ao, &aa),
              "asymptotic probabilities");
        asym_z = fmt(az);
        asym_a = fmt(aa);
      }
      out.stream() << L << ',' << fmt(tau) << ',' << fmt(p_z) << ',' << fmt(p_o) << ','
                   << fmt(p_a) << ',' << asym_z << ',' << asym_a << ',' << fmt(tau_eff) << ','
                   << fmt(threshold) << ',' << (in_regime ? 1 : 0) << '\n';
    }
  }
  return 0;
}

/* ---- ratio ---- */

int run_ratio(const std::vector<double>& taus, double d_tau, std::int64_t loops,
              double target_pe, std::vector<double> alphas, const std::string& out_path) {
  if (alphas.empty()) {
    for (int i = 1; i <= 97; ++i) alphas.push_back(0.01 * i);
  }
  Output out(out_path);
  out.stream() << "tau,alpha,n_standard,n_zeno,absorbed_standard,absorbed_zeno,ratio\n";
  int failures = 0;
  for (double tau : taus) {
    for (double alpha : alphas) {
      double ratio = 0, na_std = 0, na_ze = 0;
      std::int64_t n_std = 0, n_ze = 0;
      const int32_t rc = zt_irradiation_ratio(tau, d_tau, loops, target_pe, alpha, &ratio,
                                              &n_std, &n_ze, &na_std, &na_ze);
      if (rc != ZT_OK) {
        std::cerr << "ratio: tau=" << fmt(tau) << " alpha=" << fmt(alpha) << ": "
                  << zt_strerror(rc) << ": " << zt_last_error_message() << "\n";
        ++failures;
        continue;
      }
      out.stream() << fmt(tau) << ',' << fmt(alpha) << ',' << n_std << ',' << n_ze << ','
                   << fmt(na_std) << ',' << fmt(na_ze) << ',' << fmt(ratio) << '\n';
    }
  }
  return failures == 0 ? 0 : 1;
}

/* ---- crlb ---- */

int run_crlb(const std::vector<double>& taus, std::int64_t n_particles, std::int64_t loops,
             const std::string& out_path) {
  Output out(out_path);
  out.stream() << "tau,n_particles,loops,variance_bound_standard,variance_bound_zeno,"
                  "n_absorbed_standard,n_absorbed_zeno,bound_per_absorbed,"
                  "residual_asymptotic,residual_exact\n";
  for (double tau : taus) {
    double var_std = 0, var_zeno = 0;
    check(zt_crlb_standard(tau, n_particles, &var_std), "standard bound");
    check(zt_crlb_zeno(tau, n_particles, loops, &var_zeno), "zeno bound");

    double p_detect = 0, p_absorb_std = 0;
    check(zt_standard_probabilities(tau, &p_detect, &p_absorb_std), "standard probabilities");
    double p_z = 0, p_o = 0, p_a_exact = 0;
    check(zt_zeno_probabilities(loops, tau, &p_z, &p_o, &p_a_exact), "zeno probabilities");
    double az = 0, ao = 0, p_a_asym = 0;
    check(zt_zeno_probabilities_asymptotic(loops, tau, &az, &ao, &p_a_asym),
          "asymptotic probabilities");

    const double n = static_cast<double>(n_particles);
    const double na_std = n * p_absorb_std;
    const double na_zeno = n * p_a_exact;
    double bound_pa = 0;
    check(zt_crlb_per_absorbed(tau, na_std, &bound_pa), "per-absorbed bound");

    // Both setups expressed per absorbed particle with a shared absorbed
    // budget of one particle: the standard route substitutes N = 1/p'_a, the
    // Zeno route N = 1/p_a (asymptotic or exact); bounds scale exactly as 1/N.
    double var_std_unit = 0, var_zeno_unit = 0;
    check(zt_crlb_standard(tau, 1, &var_std_unit), "standard bound");
    check(zt_crlb_zeno(tau, 1, loops, &var_zeno_unit), "zeno bound");
    const double b_std = std::sqrt(var_std_unit * p_absorb_std);
    const double b_zeno_asym = std::sqrt(var_zeno_unit * p_a_asym);
    const double b_zeno_exact = std::sqrt(var_zeno_unit * p_a_exact);
    const double residual_asym = std::fabs(b_zeno_asym - b_std) / b_std;
    const double residual_exact = std::fabs(b_zeno_exact - b_std) / b_std;

    out.stream() << fmt(tau) << ',' << n_particles << ',' << loops << ',' << fmt(var_std)
                 << ',' << fmt(var_zeno) << ',' << fmt(na_std) << ',' << fmt(na_zeno) << ','
                 << fmt(bound_pa) << ',' << fmt(residual_asym) << ',' << fmt(residual_exact)
                 << '\n';
  }
  return 0;
}

/* ---- simulate ---- */

struct SetupRun {
  int32_t setup;
  std::int64_t loops;
  std::string tag;
};

const char* rule_kind_name(int32_t kind) {
  switch (kind) {
    case ZT_RULE_THRESHOLD: return "threshold";
    case ZT_RULE_ALWAYS_H1: return "always_h1";
    case ZT_RULE_ALWAYS_H2: return "always_h2";
    default: return "unknown";
  }
}

void write_rules_report(const std::string& path, const SetupRun& run, const zt_model* model,
                        const zt_classifier* classifier, std::int64_t n_particles) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    std::cerr << "zenotomo: cannot open " << path << " for writing\n";
    std::exit(1);
  }
  out << "# decision rules: " << run.tag << "\n";
  out << "setup " << (run.setup == ZT_SETUP_STANDARD ? "standard" : "zeno") << "\n";
  if (run.setup != ZT_SETUP_STANDARD) out << "loops " << run.loops << "\n";
  out << "particles " << n_particles << "\n";

  int32_t level_count = 0;
  check(zt_model_level_count(model, &level_count), "level count");
  out << "levels " << level_count << "\n";
  for (int32_t i = 0; i < level_count; ++i) {
    double tau = 0, alpha = 0;
    check(zt_model_level(model, i, &tau, &alpha, nullptr, nullptr, nullptr), "model level");
    double p_z = 0, p_o = 0, p_a = 0;
    check(zt_classifier_channel_probabilities(classifier, i, &p_z, &p_o, &p_a),
          "channel probabilities");
    out << "level " << i << " tau " << fmt(tau) << " alpha " << fmt(alpha) << " p_z "
        << fmt(p_z) << " p_o " << fmt(p_o) << " p_a " << fmt(p_a) << "\n";
  }

  int32_t pairs = 0;
  check(zt_classifier_pair_count(classifier, &pairs), "pair count");
  for (int32_t p = 0; p < pairs; ++p) {
    zt_pair_rule rule;
    check(zt_classifier_pair_rule(classifier, p, &rule), "pair rule");
    out << "pair " << rule.lower_level << "-" << rule.lower_level + 1 << "\n";
    if (rule.has_binomial) {
      out << "  binomial_h1_level " << rule.binomial_h1_level << "\n";
      out << "  binomial_alpha " << fmt(rule.binomial_alpha) << "\n";
      out << "  binomial_threshold_raw " << fmt(rule.binomial_threshold_raw) << "\n";
      out << "  binomial_threshold " << rule.binomial_threshold << "\n";
      out << "  binomial_kind " << rule_kind_name(rule.binomial_kind) << "\n";
    } else {
      out << "  binomial absent\n";
    }
    if (rule.has_trinomial) {
      out << "  trinomial_slope " << fmt(rule.trinomial_slope) << "\n";
      out << "  trinomial_intercept " << fmt(rule.trinomial_intercept) << "\n";
      out << "  trinomial_h1_side " << rule.trinomial_h1_side << "\n";
    } else {
      out << "  trinomial absent\n";
    }
    if (run.setup != ZT_SETUP_STANDARD) {
      out << "  zeno_regime lower=" << rule.lower_in_zeno_regime
          << " upper=" << rule.upper_in_zeno_regime << "\n";
    }
  }
}

// Largest per-pair particle requirement under the single-channel protocol.
std::int64_t particles_for_target_pe(const zt_model* model, const SetupRun& run,
                                     double target_pe) {
  int32_t level_count = 0;
  check(zt_model_level_count(model, &level_count), "level count");
  std::vector<double> p_absorb(static_cast<std::size_t>(level_count));
  std::vector<double> alphas(static_cast<std::size_t>(level_count));
  for (int32_t i = 0; i < level_count; ++i) {
    double tau = 0, alpha = 0;
    check(zt_model_level(model, i, &tau, &alpha, nullptr, nullptr, nullptr), "model level");
    alphas[static_cast<std::size_t>(i)] = alpha;
    double pa = 0;
    if (run.setup == ZT_SETUP_STANDARD) {
      double pd = 0;
      check(zt_standard_probabilities(tau, &pd, &pa), "standard probabilities");
    } else if (run.setup == ZT_SETUP_ZENO) {
      double pz = 0, po = 0;
      check(zt_zeno_probabilities(run.loops, tau, &pz, &po, &pa), "zeno probabilities");
    } else {
      double pz = 0, po = 0;
      check(zt_zeno_probabilities_asymptotic(run.loops, tau, &pz, &po, &pa),
            "asymptotic probabilities");
    }
    p_absorb[static_cast<std::size_t>(i)] = pa;
  }

  std::int64_t needed = 1;
  for (int32_t i = 0; i + 1 < level_count; ++i) {
    double pa_lo = p_absorb[static_cast<std::size_t>(i)];
    double pa_hi = p_absorb[static_cast<std::size_t>(i + 1)];
    double alpha_lo = alphas[static_cast<std::size_t>(i)];
    double alpha_hi = alphas[static_cast<std::size_t>(i + 1)];
    double alpha = alpha_lo / (alpha_lo + alpha_hi);
    if (pa_lo > pa_hi) {
      std::swap(pa_lo, pa_hi);
      alpha = 1.0 - alpha;
    }
    std::int64_t n = 0;
    check(zt_required_particles(pa_lo, pa_hi, alpha, target_pe, &n), "required particles");
    needed = std::max(needed, n);
  }
  return needed;
}

int run_simulate(const std::string& input, const std::string& model_path,
                 const std::string& outdir, std::vector<std::string> setups,
                 std::vector<std::int64_t> zeno_loops, std::int64_t n_particles,
                 double na_target, double target_pe, std::uint64_t seed, bool measured_alpha,
                 bool asymptotic) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec) {
    std::cerr << "zenotomo: cannot create output directory " << outdir << "\n";
    return 1;
  }

  ModelHandle model;
  check(zt_model_load(model_path.c_str(), &model.ptr), "load model " + model_path);
  ImageHandle sample;
  check(zt_image_read_pgm(input.c_str(), model.ptr, &sample.ptr), "read image " + input);
  if (measured_alpha) {
    check(zt_model_measure_alpha(model.ptr, sample.ptr), "measure frequencies");
  }

  if (setups.empty()) setups = {"standard", "zeno"};
  if (zeno_loops.empty()) zeno_loops = {10, 165};

  std::vector<SetupRun> runs;
  for (const std::string& s : setups) {
    if (s == "standard") {
      runs.push_back({ZT_SETUP_STANDARD, 1, "standard"});
    } else if (s == "zeno") {
      for (std::int64_t L : zeno_loops) {
        const int32_t setup = asymptotic ? ZT_SETUP_ZENO_ASYMPTOTIC : ZT_SETUP_ZENO;
        std::string tag = "zeno_L" + std::to_string(L);
        if (asymptotic) tag += "_asym";
        runs.push_back({setup, L, tag});
      }
    } else {
      std::cerr << "zenotomo: unknown setup \"" << s << "\" (expected standard or zeno)\n";
      return 1;
    }
  }

  std::ofstream summary(fs::path(outdir) / "summary.csv", std::ios::trunc);
  summary << "setup,loops,n_particles,na_target,na_mean,error_count,total_particles,"
             "energy_scale\n";

  for (const SetupRun& run : runs) {
    std::int64_t n = n_particles;
    if (na_target > 0.0) {
      check(zt_particles_for_absorbed(model.ptr, run.setup, run.loops, na_target, &n),
            "particles for absorbed budget");
    } else if (target_pe > 0.0) {
      n = particles_for_target_pe(model.ptr, run, target_pe);
    }

    ReportHandle report;
    check(zt_reconstruct(sample.ptr, model.ptr, run.setup, run.loops, n, seed, &report.ptr),
          "reconstruct " + run.tag);

    const zt_image* recon = nullptr;
    check(zt_report_reconstruction(report.ptr, &recon), "reconstruction image");
    const fs::path recon_path = fs::path(outdir) / ("recon_" + run.tag + ".pgm");
    check(zt_image_write_pgm(recon, model.ptr, recon_path.string().c_str()),
          "write " + recon_path.string());
    const fs::path mask_path = fs::path(outdir) / ("mask_" + run.tag + ".pgm");
    check(zt_report_write_mask_pgm(report.ptr, mask_path.string().c_str()),
          "write " + mask_path.string());

    ClassifierHandle classifier;
    check(zt_classifier_create(model.ptr, run.setup, run.loops, n, &classifier.ptr),
          "classifier " + run.tag);
    const fs::path rules_path = fs::path(outdir) / ("rules_" + run.tag + ".txt");
    write_rules_report(rules_path.string(), run, model.ptr, classifier.ptr, n);

    std::int64_t errors = 0, total = 0;
    double na_mean = 0;
    check(zt_report_error_count(report.ptr, &errors), "error count");
    check(zt_report_total_particles(report.ptr, &total), "total particles");
    check(zt_report_mean_absorbed(report.ptr, &na_mean), "mean absorbed");

    summary << run.tag << ',' << (run.setup == ZT_SETUP_STANDARD ? 0 : run.loops) << ',' << n
            << ',' << (na_target > 0.0 ? fmt(na_target) : "") << ',' << fmt(na_mean) << ','
            << errors << ',' << total << ','
            << (na_mean > 0.0 ? fmt(static_cast<double>(n) / na_mean) : "") << '\n';

    std::cout << run.tag << ": N=" << n << " errors=" << errors
              << " mean_absorbed=" << fmt(na_mean) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Zeno absorption tomography simulator"};
  app.require_subcommand(1);
  {
    int32_t major = 0, minor = 0, patch = 0;
    zt_version(&major, &minor, &patch);
    app.set_version_flag("--version", std::to_string(major) + "." + std::to_string(minor) +
                                          "." + std::to_string(patch));
  }

  // probs
  auto* probs = app.add_subcommand("probs", "channel probabilities per (L, tau)");
  std::vector<std::int64_t> probs_loops{165};
  std::vector<double> probs_taus;
  std::string probs_out;
  probs->add_option("--loops", probs_loops, "loop counts")->delimiter(',');
  probs->add_option("--tau", probs_taus, "transmission amplitudes")
      ->delimiter(',')
      ->required();
  probs->add_option("--out", probs_out, "output CSV path (default stdout)");

  // ratio
  auto* ratio = app.add_subcommand("ratio", "absorbed-particle ratio Zeno/standard");
  std::vector<double> ratio_taus{0.8, 0.9, 0.95, 0.97};
  double ratio_dtau = 0.02;
  std::int64_t ratio_loops = 2000;
  double ratio_pe = 0.005;
  std::vector<double> ratio_alphas;
  std::string ratio_out;
  ratio->add_option("--tau", ratio_taus, "lower gray levels")->delimiter(',');
  ratio->add_option("--dtau", ratio_dtau, "gray level separation");
  ratio->add_option("--loops", ratio_loops, "loop count of the Zeno setup");
  ratio->add_option("--target-pe", ratio_pe, "target error probability");
  ratio->add_option("--alpha", ratio_alphas, "prior grid (default 0.01..0.97 step 0.01)")
      ->delimiter(',');
  ratio->add_option("--out", ratio_out, "output CSV path (default stdout)");

  // crlb
  auto* crlb = app.add_subcommand("crlb", "Cramer-Rao bounds for both setups");
  std::vector<double> crlb_taus{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::int64_t crlb_n = 1000;
  std::int64_t crlb_loops = 10000;
  std::string crlb_out;
  crlb->add_option("--tau", crlb_taus, "transmission amplitudes")->delimiter(',');
  crlb->add_option("--particles", crlb_n, "input particle count N");
  crlb->add_option("--loops", crlb_loops, "loop count of the Zeno setup");
  crlb->add_option("--out", crlb_out, "output CSV path (default stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo image reconstruction");
  std::string sim_input, sim_model, sim_outdir;
  std::vector<std::string> sim_setups;
  std::vector<std::int64_t> sim_loops;
  std::int64_t sim_n = 0;
  double sim_na = 0.0;
  double sim_pe = 0.0;
  std::uint64_t sim_seed = 1;
  bool sim_measured = false;
  bool sim_asym = false;
  simulate->add_option("--input", sim_input, "sample graymap (P5)")->required();
  simulate->add_option("--model", sim_model, "gray model file")->required();
  simulate->add_option("--outdir", sim_outdir, "output directory")->required();
  simulate->add_option("--setup", sim_setups, "setups to run: standard, zeno")
      ->delimiter(',');
  simulate->add_option("--loops", sim_loops, "loop counts for the zeno setup")
      ->delimiter(',');
  auto* opt_n = simulate->add_option("--particles", sim_n, "particles per pixel");
  auto* opt_na =
      simulate->add_option("--absorbed", sim_na, "absorbed-particle budget per pixel");
  auto* opt_pe =
      simulate->add_option("--target-pe", sim_pe, "per-pair error target driving the budget");
  opt_n->excludes(opt_na)->excludes(opt_pe);
  opt_na->excludes(opt_pe);
  simulate->add_option("--seed", sim_seed, "master seed");
  simulate->add_flag("--measured-alpha", sim_measured,
                     "use frequencies measured from the input image");
  simulate->add_flag("--asymptotic", sim_asym,
                     "use the asymptotic Zeno law instead of the exact matrix power");

  CLI11_PARSE(app, argc, argv);

  if (probs->parsed()) return run_probs(probs_loops, probs_taus, probs_out);
  if (ratio->parsed())
    return run_ratio(ratio_taus, ratio_dtau, ratio_loops, ratio_pe, ratio_alphas, ratio_out);
  if (crlb->parsed()) return run_crlb(crlb_taus, crlb_n, crlb_loops, crlb_out);
  if (simulate->parsed()) {
    if (sim_n <= 0 && sim_na <= 0.0 && sim_pe <= 0.0) {
      std::cerr << "zenotomo: simulate needs one of --particles, --absorbed, --target-pe\n";
      return 1;
    }
    return run_simulate(sim_input, sim_model, sim_outdir, sim_setups, sim_loops, sim_n,
                        sim_na, sim_pe, sim_seed, sim_measured, sim_asym);
  }
  return 0;
}
