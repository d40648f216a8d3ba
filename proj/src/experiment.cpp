// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/version.hpp>

#include "wavecauchy/dataset_io.hpp"
#include "wavecauchy/errors.hpp"
#include "wavecauchy/parallel.hpp"

namespace wavecauchy
{

using nlohmann::json;
namespace fs = std::filesystem;

namespace
{

class Stopwatch
{
public:
  double Seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json DatasetMetadata(const ExperimentConfig &config, const CauchyDataSet &data)
{
  json meta = GeometryFingerprint(config);
  meta["noise"] = {{"level", config.noise.level}, {"seed", config.noise.seed}};
  meta["dataset"] = {{"nodes_x", data.nodes_x},
                     {"nodes_t", data.nodes_t},
                     {"rows", data.SampleCount()},
                     {"csv", kDatasetCsv}};
  return meta;
}

// manifest.json: config echo, versions and timings of the last command run in out_dir.
void WriteManifest(const ExperimentConfig &config, const fs::path &out_dir, const std::string &command,
                   const json &timings, const std::vector<fs::path> &outputs)
{
  json files = json::array();
  for (const fs::path &p : outputs)
  {
    files.push_back(p.filename().string());
  }
  json doc = {{"tool", "wavecauchy"},
              {"command", command},
              {"config", config.source},
              {"seed", config.noise.seed},
              {"versions",
               {{"wavecauchy", WAVECAUCHY_VERSION},
                {"compiler", __VERSION__},
                {"boost", BOOST_LIB_VERSION},
                {"openmp", _OPENMP},
                {"cxx_standard", __cplusplus}}},
              {"threads", parallel::GetMaxThreads()},
              {"timings_s", timings},
              {"outputs", files}};
  WriteJson(doc, out_dir / kManifestJson);
}

// Node positions and times of the file must reproduce the chart.
void CheckAgainstChart(const CauchyDataSet &data, const ApertureChart &chart,
                       const fs::path &path)
{
  if (data.nodes_x != chart.NodeCount() ||
      data.nodes_t != static_cast<std::size_t>(chart.counts.nodes_t))
  {
    throw DataError(path.string() + ": dataset grid " + std::to_string(data.nodes_x) + "x" +
                    std::to_string(data.nodes_t) + " does not match the configured chart " +
                    std::to_string(chart.NodeCount()) + "x" +
                    std::to_string(chart.counts.nodes_t));
  }
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)); };
  for (std::size_t i = 0; i < data.nodes_x; ++i)
  {
    const ChartNode &node = chart.nodes[i];
    const SpacePoint &p = data.points[i];
    if (!close(p.x[0], node.x[0]) || !close(p.x[1], node.x[1]) || !close(p.y, node.y))
    {
      throw DataError(path.string() + ": node " + std::to_string(i) +
                      " is not at the configured chart position");
    }
    for (std::size_t j = 0; j < data.nodes_t; ++j)
    {
      if (!close(data.t[data.Index(i, j)], chart.Time(i, j)))
      {
        throw DataError(path.string() + ": sample (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") is not at the configured chart time");
      }
    }
  }
}

std::string Report(const ExperimentConfig &config, const SweepResult &sweep)
{
  std::ostringstream out;
  out << std::setprecision(6);
  out << "target (x*, y*, t*) = (" << config.target.x[0];
  if (config.dim_n == 3)
  {
    out << ", " << config.target.x[1];
  }
  out << ", " << config.target.y << ", " << config.target.t << ")\n";
  out << "        h               R       rel_err\n";
  for (const SweepEntry &e : sweep.entries)
  {
    out << std::setw(9) << e.h << "  " << std::setw(14) << e.estimate << "  " << std::setw(12);
    if (e.rel_err)
    {
      out << *e.rel_err;
    }
    else
    {
      out << "-";
    }
    out << '\n';
  }
  if (sweep.truncated)
  {
    out << "schedule truncated: " << sweep.truncation_reason << '\n';
  }
  if (sweep.selection)
  {
    const LimitSelection &s = *sweep.selection;
    out << "selected h* = " << s.h_star << ", estimate " << std::setprecision(10) << s.estimate;
    if (sweep.truth)
    {
      out << " (truth " << *sweep.truth << ", rel_err " << std::setprecision(4)
          << std::abs(s.estimate - *sweep.truth) / sweep.scale << ")";
    }
    out << '\n';
    if (s.no_plateau)
    {
      out << "warning: no plateau, successive differences grow monotonically\n";
    }
  }
  else
  {
    out << "no estimate selected: fewer than 3 sweep entries\n";
  }
  return out.str();
}

SynthesizeOutcome Synthesize(const ExperimentConfig &config, const fs::path &out_dir)
{
  if (!config.field)
  {
    throw ValidationError({"field: synthesize needs a field model"});
  }
  const ApertureChart chart = config.BuildChart();
  SynthesizeOutcome outcome;
  outcome.data = SampleCauchyData(*config.field, chart);
  if (config.noise.level > 0.0)
  {
    outcome.data = AddNoise(outcome.data, config.noise.level, config.noise.seed);
  }
  outcome.data.noise = config.noise;
  outcome.dataset_csv = out_dir / kDatasetCsv;
  outcome.metadata = MetadataPath(outcome.dataset_csv);
  WriteDatasetCsv(outcome.data, outcome.dataset_csv);
  WriteJson(DatasetMetadata(config, outcome.data), outcome.metadata);
  return outcome;
}

ReconstructOutcome Reconstruct(const ExperimentConfig &config, const fs::path &dataset_csv,
                               const fs::path &out_dir)
{
  const fs::path meta_path = MetadataPath(dataset_csv);
  if (!fs::exists(meta_path))
  {
    throw IoError("dataset metadata " + meta_path.string() + " not found");
  }
  const json meta = ReadJson(meta_path);
  const json expected = GeometryFingerprint(config);
  for (const auto &[key, value] : expected.items())
  {
    if (!meta.contains(key) || meta.at(key) != value)
    {
      throw DataError("dataset metadata '" + key + "' in " + meta_path.string() +
                      " does not match the configuration");
    }
  }
  const ApertureChart chart = config.BuildChart();
  CauchyDataSet data = ReadDatasetCsv(dataset_csv, config.dim_n);
  CheckAgainstChart(data, chart, dataset_csv);
  data.target = config.target;
  if (meta.contains("noise") && meta.at("noise").is_object())
  {
    data.noise = NoiseDescriptor{meta["noise"].value("level", 0.0),
                                 meta["noise"].value("seed", std::uint64_t{0})};
  }

  ReconstructOutcome outcome;
  outcome.sweep = HSweep(data, chart, config.sweep, config.kernel, config.Truth());
  outcome.sweep_csv = out_dir / kSweepCsv;
  outcome.summary = out_dir / kSummaryJson;
  WriteSweepCsv(outcome.sweep, outcome.sweep_csv);
  json summary = SweepSummaryJson(outcome.sweep);
  summary["dataset"] = dataset_csv.string();
  WriteJson(summary, outcome.summary);
  outcome.report = Report(config, outcome.sweep);
  std::ofstream text(out_dir / kSummaryText, std::ios::binary | std::ios::trunc);
  text << outcome.report;
  if (!text)
  {
    throw IoError("cannot write " + (out_dir / kSummaryText).string());
  }
  return outcome;
}

}  // namespace

fs::path MetadataPath(const fs::path &dataset_csv)
{
  fs::path meta = dataset_csv;
  meta.replace_extension(".meta.json");
  return meta;
}

SynthesizeOutcome RunSynthesize(const ExperimentConfig &config, const fs::path &out_dir)
{
  Stopwatch clock;
  SynthesizeOutcome outcome = Synthesize(config, out_dir);
  WriteManifest(config, out_dir, "synthesize", {{"synthesize", clock.Seconds()}},
                {outcome.dataset_csv, outcome.metadata});
  return outcome;
}

ReconstructOutcome RunReconstruct(const ExperimentConfig &config, const fs::path &dataset_csv,
                                  const fs::path &out_dir)
{
  Stopwatch clock;
  ReconstructOutcome outcome = Reconstruct(config, dataset_csv, out_dir);
  WriteManifest(config, out_dir, "reconstruct", {{"reconstruct", clock.Seconds()}},
                {outcome.sweep_csv, outcome.summary, out_dir / kSummaryText});
  if (!outcome.sweep.selection)
  {
    throw NumericalError("sweep kept " + std::to_string(outcome.sweep.entries.size()) +
                         " entries, at least 3 are needed to select a limit (" +
                         outcome.sweep.truncation_reason + ")");
  }
  return outcome;
}

ReconstructOutcome RunSweep(const ExperimentConfig &config, const fs::path &out_dir)
{
  Stopwatch clock;
  const SynthesizeOutcome synth = Synthesize(config, out_dir);
  const double t_synth = clock.Seconds();
  ReconstructOutcome outcome = Reconstruct(config, synth.dataset_csv, out_dir);
  WriteManifest(config, out_dir, "sweep",
                {{"synthesize", t_synth}, {"reconstruct", clock.Seconds() - t_synth}},
                {synth.dataset_csv, synth.metadata, outcome.sweep_csv, outcome.summary,
                 out_dir / kSummaryText});
  if (!outcome.sweep.selection)
  {
    throw NumericalError("sweep kept " + std::to_string(outcome.sweep.entries.size()) +
                         " entries, at least 3 are needed to select a limit (" +
                         outcome.sweep.truncation_reason + ")");
  }
  return outcome;
}

}  // namespace wavecauchy
