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

#include "dgflow/lattice/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace dgflow::lattice {

namespace {

struct PlanPair
{
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// Plans live for the lifetime of the process.
PlanPair plans_for(int n, std::size_t ncomp)
{
  static std::mutex mutex;
  static std::map<std::pair<int, std::size_t>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, ncomp});
  if (it != cache.end())
    return it->second;

  const int dims[4] = {n, n, n, n};
  const std::size_t total = static_cast<std::size_t>(n) * n * n * n * ncomp;
  auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
  const int howmany = static_cast<int>(ncomp);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.forward = fftw_plan_many_dft(4, dims, howmany, buf, nullptr, howmany, 1, buf, nullptr, howmany, 1,
                                 FFTW_FORWARD, flags);
  p.backward = fftw_plan_many_dft(4, dims, howmany, buf, nullptr, howmany, 1, buf, nullptr, howmany, 1,
                                  FFTW_BACKWARD, flags);
  fftw_free(buf);
  cache.emplace(std::make_pair(n, ncomp), p);
  return p;
}

fftw_complex* as_fftw(Complex* z) { return reinterpret_cast<fftw_complex*>(z); }

} // namespace

Spectrum fft_forward(const Grid& grid, const double* data, std::size_t ncomp)
{
  const std::size_t total = grid.sites() * ncomp;
  Spectrum spec(total);
  for (std::size_t i = 0; i < total; ++i)
    spec[i] = Complex(data[i], 0.0);
  const auto plan = plans_for(grid.n(), ncomp);
  fftw_execute_dft(plan.forward, as_fftw(spec.data()), as_fftw(spec.data()));
  return spec;
}

void fft_backward(const Grid& grid, Spectrum& spec, double* out, std::size_t ncomp)
{
  const auto plan = plans_for(grid.n(), ncomp);
  fftw_execute_dft(plan.backward, as_fftw(spec.data()), as_fftw(spec.data()));
  const double scale = 1.0 / static_cast<double>(grid.sites());
  const std::size_t total = grid.sites() * ncomp;
  for (std::size_t i = 0; i < total; ++i)
    out[i] = spec[i].real() * scale;
}

} // namespace dgflow::lattice
