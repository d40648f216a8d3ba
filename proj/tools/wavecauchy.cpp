// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

// wavecauchy: synthesize Cauchy data, reconstruct u(x*, y*, t*) over an
// h-sweep, and run the built-in invariant checks.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wavecauchy/config.hpp"
#include "wavecauchy/errors.hpp"
#include "wavecauchy/experiment.hpp"
#include "wavecauchy/parallel.hpp"
#include "wavecauchy/selftest.hpp"

namespace
{

using namespace wavecauchy;

struct Options
{
  std::string config;
  std::string out;
  std::string dataset;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  bool quiet = false;
};

ExperimentConfig Load(const Options &opt)
{
  ExperimentConfig config = LoadConfig(opt.config);
  if (opt.seed)
  {
    config.noise.seed = *opt.seed;
    config.source["noise"]["seed"] = *opt.seed;
  }
  if (!opt.out.empty())
  {
    config.output_dir = opt.out;
  }
  return config;
}

int Synthesize(const Options &opt)
{
  const ExperimentConfig config = Load(opt);
  const SynthesizeOutcome outcome = RunSynthesize(config, config.output_dir);
  if (!opt.quiet)
  {
    std::cout << "wrote " << outcome.dataset_csv.string() << " (" << outcome.data.SampleCount()
              << " samples) and " << outcome.metadata.string() << '\n';
  }
  return 0;
}

int Reconstruct(const Options &opt)
{
  const ExperimentConfig config = Load(opt);
  const ReconstructOutcome outcome = RunReconstruct(config, opt.dataset, config.output_dir);
  if (!opt.quiet)
  {
    std::cout << outcome.report;
  }
  return 0;
}

int Sweep(const Options &opt)
{
  const ExperimentConfig config = Load(opt);
  const ReconstructOutcome outcome = RunSweep(config, config.output_dir);
  if (!opt.quiet)
  {
    std::cout << outcome.report;
  }
  return 0;
}

int Selftest(const Options &opt)
{
  KernelSettings settings;
  if (!opt.config.empty())
  {
    settings = Load(opt).kernel;
  }
  const SelftestReport report = RunSelftest(settings);
  if (!opt.quiet || !report.Passed())
  {
    std::cout << report.Format(opt.quiet);
  }
  return report.Passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Reconstruction of wave fields from Cauchy data on a boundary patch"};
  app.set_version_flag("--version", std::string(WAVECAUCHY_VERSION));
  app.require_subcommand(1);

  Options opt;
  auto common = [&](CLI::App *cmd, bool config_required) {
    CLI::Option *c = cmd->add_option("--config", opt.config, "experiment configuration (JSON)");
    if (config_required)
    {
      c->required();
    }
    cmd->add_option("--out", opt.out, "output directory (overrides the configuration)");
    cmd->add_option("--seed", opt.seed, "noise seed (overrides the configuration)");
    cmd->add_option("--threads", opt.threads, "OpenMP threads (0: runtime default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--quiet", opt.quiet, "print nothing on success");
  };

  CLI::App *synth = app.add_subcommand("synthesize", "sample Cauchy data of the configured field");
  common(synth, true);
  CLI::App *recon =
      app.add_subcommand("reconstruct", "reconstruct from a dataset over the h-sweep");
  common(recon, true);
  recon->add_option("--dataset", opt.dataset, "dataset CSV written by synthesize")
      ->required();
  CLI::App *sweep = app.add_subcommand("sweep", "synthesize and reconstruct in one step");
  common(sweep, true);
  CLI::App *self = app.add_subcommand("selftest", "run kernel, geometry and forward invariants");
  common(self, false);

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try
  {
    if (opt.threads > 0)
    {
      parallel::SetNumThreads(opt.threads);
    }
    if (synth->parsed())
    {
      return Synthesize(opt);
    }
    if (recon->parsed())
    {
      return Reconstruct(opt);
    }
    if (sweep->parsed())
    {
      return Sweep(opt);
    }
    return Selftest(opt);
  }
  catch (const Error &e)
  {
    std::cerr << "wavecauchy: " << e.what() << '\n';
    return ExitCode(e.Category());
  }
  catch (const std::exception &e)
  {
    std::cerr << "wavecauchy: unexpected failure: " << e.what() << '\n';
    return 2;
  }
}
