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

// Counter-based generator: value i of stream s under seed k is
// splitmix64(k, s, i). Streams are independent of evaluation order, so initial
// data can be reproduced from (seed, stream, counter) in any language.

#include <cstdint>

namespace dgflow::flow {

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class CounterRng
{
public:
  explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
    : key_(splitmix64(splitmix64(seed) ^ stream))
  {
  }

  /// Independent generator for a sub-stream.
  constexpr CounterRng split(std::uint64_t stream) const { return CounterRng(key_, stream + 1); }

  /// The i-th 64-bit value.
  constexpr std::uint64_t at(std::uint64_t i) const { return splitmix64(key_ + 0x632be59bd9b4e019ull * i); }

  std::uint64_t next() { return at(counter_++); }

  /// Uniform in [lo, hi) with 53 random bits.
  double uniform(double lo = -1.0, double hi = 1.0)
  {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::uint64_t counter() const { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace dgflow::flow
