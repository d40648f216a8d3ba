// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_PARALLEL_HPP
#define WAVECAUCHY_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <vector>

namespace wavecauchy::parallel
{

void SetNumThreads(int n);
int GetMaxThreads();

// Runs body(i) for i in [0, n) on the OpenMP team. Exceptions cannot leave an
// OpenMP region, so they are captured per index and the one with the lowest
// index is rethrown afterwards; the reported failure is independent of the
// thread count.
template <class Body>
void For(std::size_t n, Body &&body)
{
  std::vector<std::exception_ptr> errors(n);
  bool failed = false;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(|| : failed)
  for (long long i = 0; i < count; ++i)
  {
    try
    {
      body(static_cast<std::size_t>(i));
    }
    catch (...)
    {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
      failed = true;
    }
  }
  if (failed)
  {
    for (const std::exception_ptr &e : errors)
    {
      if (e)
      {
        std::rethrow_exception(e);
      }
    }
  }
}

}  // namespace wavecauchy::parallel

#endif  // WAVECAUCHY_PARALLEL_HPP
