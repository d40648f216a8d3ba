// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_EXPERIMENT_HPP
#define WAVECAUCHY_EXPERIMENT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "wavecauchy/config.hpp"

namespace wavecauchy
{

// Output file names inside an experiment directory.
inline constexpr const char *kDatasetCsv = "dataset.csv";
inline constexpr const char *kSweepCsv = "sweep.csv";
inline constexpr const char *kSummaryJson = "summary.json";
inline constexpr const char *kSummaryText = "summary.txt";
inline constexpr const char *kManifestJson = "manifest.json";

// dataset.csv -> dataset.meta.json
std::filesystem::path MetadataPath(const std::filesystem::path &dataset_csv);

struct SynthesizeOutcome
{
  CauchyDataSet data;
  std::filesystem::path dataset_csv;
  std::filesystem::path metadata;
};

struct ReconstructOutcome
{
  SweepResult sweep;
  std::filesystem::path sweep_csv;
  std::filesystem::path summary;
  std::string report;  // human-readable summary
};

// Samples the configured field on the aperture chart, adds noise, and writes
// dataset.csv + dataset.meta.json + manifest.json into out_dir.
SynthesizeOutcome RunSynthesize(const ExperimentConfig &config, const std::filesystem::path &out_dir);

// Reads a dataset, checks it against the configuration's geometry (DataError
// on mismatch), runs the h-sweep and writes sweep.csv, summary.json,
// summary.txt and manifest.json. Throws NumericalError after writing the
// outputs when the sweep kept fewer than 3 entries.
ReconstructOutcome RunReconstruct(const ExperimentConfig &config,
                                  const std::filesystem::path &dataset_csv,
                                  const std::filesystem::path &out_dir);

// Synthesize followed by reconstruct in one directory.
ReconstructOutcome RunSweep(const ExperimentConfig &config, const std::filesystem::path &out_dir);

}  // namespace wavecauchy

#endif  // WAVECAUCHY_EXPERIMENT_HPP
