// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/parallel.hpp"

#include <omp.h>

namespace wavecauchy::parallel
{

void SetNumThreads(int n)
{
  if (n > 0)
  {
    omp_set_num_threads(n);
  }
}

int GetMaxThreads() { return omp_get_max_threads(); }

}  // namespace wavecauchy::parallel
