/* Copyright 2026 The dgflow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Deterministic reductions: a fixed pairwise summation tree that does not
// depend on the number of threads, plus a data-parallel loop that rethrows the
// exception raised at the lowest index.

#include <cstddef>
#include <exception>
#include <vector>

namespace dgflow::lattice {

/// Pairwise sum of x[0], x[stride], ..., x[(count-1)*stride].
double pairwise_sum(const double* x, std::size_t count, std::size_t stride = 1);

inline double pairwise_sum(const std::vector<double>& x) { return pairwise_sum(x.data(), x.size()); }

/// Runs body(i) for i in [0, count), in parallel when OpenMP is enabled.
template <class Body>
void parallel_for(std::size_t count, Body&& body)
{
  std::exception_ptr error;
  std::size_t error_index = count;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(dgflow_parallel_for)
      {
        if (static_cast<std::size_t>(i) < error_index) {
          error_index = static_cast<std::size_t>(i);
          error = std::current_exception();
        }
      }
    }
  }
  if (error)
    std::rethrow_exception(error);
}

/// Pairwise sum of f(i) over i in [0, count).
template <class F>
double sum_over(std::size_t count, F&& f)
{
  std::vector<double> terms(count);
  parallel_for(count, [&](std::size_t i) { terms[i] = f(i); });
  return pairwise_sum(terms);
}

} // namespace dgflow::lattice
