// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_CONFIG_HPP
#define WAVECAUCHY_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "wavecauchy/forward.hpp"
#include "wavecauchy/geometry.hpp"
#include "wavecauchy/reconstruct.hpp"

namespace wavecauchy
{

// One experiment, parsed from a JSON document (schema in README.md).
struct ExperimentConfig
{
  int dim_n = 2;
  DomainProfile profile;
  ReconstructionTarget target;
  double margin = 0.5;
  NodeCounts counts;
  std::optional<WaveFieldModel> field;
  NoiseDescriptor noise;
  KernelSettings kernel;
  SweepOptions sweep;
  std::filesystem::path output_dir = "out";
  nlohmann::json source;  // normalized document, echoed into manifests

  ApertureChart BuildChart() const { return BuildAperture(profile, target, margin, counts); }
  // Ground truth u(x*, y*, t*) when the field is defined there.
  std::optional<double> Truth() const;
};

// Parses and validates; every problem found is reported in one ValidationError.
ExperimentConfig ParseConfig(const nlohmann::json &doc);
ExperimentConfig LoadConfig(const std::filesystem::path &path);

// Canonical JSON of the geometry-defining parts (dimension, profile, target,
// aperture), used to match datasets against configurations.
nlohmann::json GeometryFingerprint(const ExperimentConfig &config);

}  // namespace wavecauchy

#endif  // WAVECAUCHY_CONFIG_HPP
