// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_SELFTEST_HPP
#define WAVECAUCHY_SELFTEST_HPP

#include <string>
#include <vector>

#include "wavecauchy/reconstruct.hpp"

namespace wavecauchy
{

struct SelftestCheck
{
  std::string module;
  std::string invariant;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;  // bound or reference value, see `relation`
  std::string relation;   // "<=", ">", "=="
};

struct SelftestReport
{
  std::vector<SelftestCheck> checks;

  std::size_t Failures() const;
  bool Passed() const { return Failures() == 0; }
  // One line per check: PASS/FAIL module: invariant (observed rel expected).
  std::string Format(bool failures_only = false) const;
};

// Kernel, geometry and forward invariants at reduced sizes. The kernel checks
// run with `settings`, so a misconfigured kernel shows up here.
SelftestReport RunSelftest(const KernelSettings &settings = {});

}  // namespace wavecauchy

#endif  // WAVECAUCHY_SELFTEST_HPP
