// equibound: estimates MI / equivocation / MPE for discrete-input Gaussian
// channels and reports the full catalog of Bayesian-error bounds.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equibound/config.hpp"
#include "equibound/oracle.hpp"
#include "equibound/serialize.hpp"

namespace {

using namespace equibound;

struct CommonFlags {
  std::string config_path;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> depth;
  std::optional<double> lambda;
  std::optional<std::string> format;
  std::optional<std::string> units;
  std::string psbr_list;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* opt = cmd->add_option("--config", flags.config_path, "JSON configuration file");
  if (config_required) opt->required();
  cmd->add_option("--samples", flags.samples, "Monte Carlo draws");
  cmd->add_option("--seed", flags.seed, "Master RNG seed");
  cmd->add_option("--depth", flags.depth, "Ordered-stats depth");
  cmd->add_option("--lambda", flags.lambda, "Order for the MPE-lambda/Bn bounds");
  cmd->add_option("--format", flags.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--units", flags.units, "bits|nats")
      ->check(CLI::IsMember({"bits", "nats"}));
  cmd->add_option("--psbr", flags.psbr_list, "Comma-separated PSBR values");
  cmd->add_option("--out", flags.out_path, "Output path (default: stdout)");
}

std::vector<double> parse_psbr_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) values.push_back(std::stod(item));
  return values;
}

RunConfig load_config(const CommonFlags& flags) {
  RunConfig cfg;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw std::runtime_error("cannot open config: " + flags.config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    cfg = parse_config(buffer.str());
  }
  if (flags.samples) cfg.samples = *flags.samples;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.depth) cfg.depth = *flags.depth;
  if (flags.lambda) cfg.lambda = *flags.lambda;
  if (flags.format) cfg.format = *flags.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (flags.units) cfg.units = *flags.units == "nats" ? Units::Nats : Units::Bits;
  if (!flags.psbr_list.empty()) cfg.psbr = parse_psbr_list(flags.psbr_list);
  return cfg;
}

// Single atomic write: temp file in the target directory, then rename.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, target);
}

bool report_has_failures(const Report& report) {
  for (const auto& row : report.rows)
    if (row.failed) return true;
  return false;
}

int cmd_run(const CommonFlags& flags) {
  const RunConfig cfg = load_config(flags);
  const SampleBatch batch = make_batch(cfg);
  const Report report = assemble_report(batch, report_config(cfg, batch.hypothesis_count()));
  const std::string text = cfg.format == OutputFormat::Json
                               ? render_report_json(report, cfg)
                               : render_report_csv(report, cfg.units);
  write_output(flags.out_path, text);
  if (report_has_failures(report)) {
    std::cerr << "equibound: one or more bound rows failed (see flags column)\n";
    return 2;
  }
  return 0;
}

int cmd_sweep(const CommonFlags& flags) {
  RunConfig cfg = load_config(flags);
  if (cfg.kind != ModelKind::Flem)
    throw std::runtime_error("sweep: requires a flem model");
  if (cfg.psbr.empty()) throw std::runtime_error("sweep: empty PSBR list");
  const auto points = psbr_sweep(cfg.flem, cfg.psbr, cfg.samples, cfg.seed,
                                 report_config(cfg, cfg.flem.hypothesis_count()));
  write_output(flags.out_path, render_sweep_csv(points, cfg.units));
  for (const auto& point : points)
    if (report_has_failures(point.report)) {
      std::cerr << "equibound: failed rows at psbr=" << point.psbr << "\n";
      return 2;
    }
  return 0;
}

int cmd_demo(const CommonFlags& flags) {
  CommonFlags demo_flags = flags;
  RunConfig cfg = load_config(flags);
  cfg.kind = ModelKind::Flem;
  if (cfg.psbr.empty()) cfg.psbr = {0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  const auto points = psbr_sweep(cfg.flem, cfg.psbr, cfg.samples, cfg.seed,
                                 report_config(cfg, cfg.flem.hypothesis_count()));
  write_output(demo_flags.out_path, render_sweep_csv(points, cfg.units));
  return 0;
}

int cmd_oracle(std::size_t models, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> m_dist(2, 8);
  std::uniform_real_distribution<double> mean_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> var_dist(0.3, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::size_t agree = 0;
  for (std::size_t i = 0; i < models; ++i) {
    const int M = m_dist(gen);
    std::vector<double> means(static_cast<std::size_t>(M));
    for (double& mu : means) mu = mean_dist(gen);
    const double variance = var_dist(gen);
    std::vector<double> prior(static_cast<std::size_t>(M), 1.0 / M);
    if (unit(gen) < 0.5) {
      double sum = 0.0;
      for (double& p : prior) sum += (p = -std::log(unit(gen)));
      for (double& p : prior) p /= sum;
    }

    const OracleValues oracle = scalar_gaussian_oracle(prior, means, variance);
    const SampleBatch batch =
        sample_joint(make_scalar_gaussian(prior, means, variance), samples, seed + i);
    const MCEstimate ee = estimate_equivocation(batch);
    const MCEstimate mpe = estimate_mpe(batch);
    const OrderedStats stats = estimate_ordered_stats(batch, M - 1);

    auto ok = [](const MCEstimate& est, double ref) {
      return std::abs(est.mean - ref) <= 3.0 * std::max(est.std_error, 1e-12);
    };
    const bool pass = ok(ee, oracle.equivocation) && ok(mpe, oracle.mpe) &&
                      ok(stats.u, oracle.e_p_star) && ok(stats.v, oracle.e_p_star2) &&
                      ok(stats.sum_sq, oracle.sum_sq);
    agree += pass ? 1 : 0;
    std::printf("model %3zu  M=%d  EE(mc)=%.5f EE(quad)=%.5f  MPE(mc)=%.5f MPE(quad)=%.5f  %s\n",
                i, M, ee.mean, oracle.equivocation, mpe.mean, oracle.mpe,
                pass ? "ok" : "MISMATCH");
  }
  std::printf("oracle agreement: %zu / %zu models within 3 SE\n", agree, models);
  return agree * 100 >= models * 99 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual-information and Bayesian-error bound estimator"};
  app.require_subcommand(1);

  CommonFlags run_flags, sweep_flags, demo_flags;
  auto* run = app.add_subcommand("run", "One report for a configured model");
  add_common(run, run_flags, true);

  auto* sweep = app.add_subcommand("sweep", "PSBR sweep for a flem model");
  add_common(sweep, sweep_flags, true);

  auto* demo = app.add_subcommand("demo", "Built-in demo scenarios");
  std::string scenario;
  demo->add_option("scenario", scenario, "Scenario name (flem-flash)")->required();
  add_common(demo, demo_flags, false);

  auto* oracle = app.add_subcommand("oracle", "Quadrature-vs-MC self test (N=1 Gaussian)");
  std::size_t oracle_models = 100, oracle_samples = 100000;
  std::uint64_t oracle_seed = 0;
  oracle->add_option("--models", oracle_models, "Number of random models");
  oracle->add_option("--samples", oracle_samples, "Monte Carlo draws per model");
  oracle->add_option("--seed", oracle_seed, "Master RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (sweep->parsed()) return cmd_sweep(sweep_flags);
    if (demo->parsed()) {
      if (scenario != "flem-flash") {
        std::cerr << "equibound: unknown demo scenario: " << scenario << "\n";
        return 1;
      }
      return cmd_demo(demo_flags);
    }
    if (oracle->parsed()) return cmd_oracle(oracle_models, oracle_samples, oracle_seed);
  } catch (const std::exception& e) {
    std::cerr << "equibound: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
