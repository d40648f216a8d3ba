// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "wavecauchy/selftest.hpp"

using namespace wavecauchy;

TEST_CASE("clean settings pass every check")
{
  const SelftestReport r = RunSelftest();
  CHECK(r.Passed());
  CHECK(r.checks.size() >= 20);
  CHECK(r.Format().find("FAIL") == std::string::npos);
}

TEST_CASE("sigma_min = 10 is caught by the characteristic checks only")
{
  KernelSettings s;
  s.sigma_min = 10.0;
  const SelftestReport r = RunSelftest(s);
  CHECK_FALSE(r.Passed());
  for (const SelftestCheck &c : r.checks)
  {
    if (!c.passed)
    {
      CHECK(c.module == "kernel");
      CHECK(c.invariant.find("characteristic") != std::string::npos);
    }
  }
  CHECK(r.Format(true).find("FAIL kernel: characteristic") != std::string::npos);
}
