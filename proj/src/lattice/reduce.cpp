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

#include "dgflow/lattice/reduce.hpp"

namespace dgflow::lattice {

double pairwise_sum(const double* x, std::size_t count, std::size_t stride)
{
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i)
      s += x[i * stride];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(x, half, stride) + pairwise_sum(x + half * stride, count - half, stride);
}

} // namespace dgflow::lattice
