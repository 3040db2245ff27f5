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

// Uniform periodic grid on the unit four-torus R^4/Z^4.
//
// Sites are stored lexicographically with x0 slowest:
//   site = ((i0 * n + i1) * n + i2) * n + i3,   x_a = i_a / n.
// Field components are interleaved per site (component index fastest).

#include "dgflow/exterior/forms.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace dgflow::lattice {

enum class Scheme
{
  spectral, // Fourier multipliers i 2 pi m, Nyquist mode dropped
  fd2,      // second-order central differences
};

std::string_view to_string(Scheme s);
/// Throws ConfigError for unknown names.
Scheme scheme_from_string(std::string_view name);

class Grid
{
public:
  /// n >= 4 and even, else ConfigError.
  explicit Grid(int n, Scheme scheme = Scheme::spectral);

  int n() const { return n_; }
  double h() const { return 1.0 / n_; }
  Scheme scheme() const { return scheme_; }
  std::size_t sites() const { return sites_; }

  std::size_t site(int i0, int i1, int i2, int i3) const;
  std::array<int, 4> coords(std::size_t site) const;
  exterior::Vector4 point(std::size_t site) const;

  /// Signed wavenumber of FFT index k: 0..n/2 then -n/2+1..-1.
  int wavenumber(int k) const { return k <= n_ / 2 ? k : k - n_; }

  /// Real symbol s(k) with d/dx -> i s(k) on mode index k for this scheme.
  /// Zero at the Nyquist index in both schemes.
  double symbol(int k) const { return symbols_[static_cast<std::size_t>(k)]; }

  /// Largest s(k)^2 over k; the derivative operators have norm 4 * this.
  double max_symbol_sq() const;

  friend bool operator==(const Grid& a, const Grid& b)
  {
    return a.n_ == b.n_ && a.scheme_ == b.scheme_;
  }

private:
  int n_;
  Scheme scheme_;
  std::size_t sites_;
  std::vector<double> symbols_;
};

} // namespace dgflow::lattice
