// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_DATASET_IO_HPP
#define WAVECAUCHY_DATASET_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wavecauchy/forward.hpp"
#include "wavecauchy/reconstruct.hpp"

namespace wavecauchy
{

// Dataset CSV: header `ix,it,x1[,x2],y,t,u,dnu`, one row per node sample in
// (ix, it) order, then the two trace rows (ix = -1, it = 0 for T-, 1 for T+,
// dnu = nan). Numbers carry 17 significant digits.
std::string DatasetCsvHeader(int dim_n);
void WriteDatasetCsv(const CauchyDataSet &data, const std::filesystem::path &path);
// Target and noise are not stored in the CSV; the caller fills them in from
// the sidecar metadata.
CauchyDataSet ReadDatasetCsv(const std::filesystem::path &path, int dim_n);

// Sweep CSV `h,B,I,R,abs_err,rel_err`; errors are nan without ground truth.
void WriteSweepCsv(const SweepResult &sweep, const std::filesystem::path &path);

nlohmann::json SweepSummaryJson(const SweepResult &sweep);

void WriteJson(const nlohmann::json &doc, const std::filesystem::path &path);
nlohmann::json ReadJson(const std::filesystem::path &path);

// "%.17g"; nan and inf spelled as strtod reads them back.
std::string FormatNumber(double value);

}  // namespace wavecauchy

#endif  // WAVECAUCHY_DATASET_IO_HPP
