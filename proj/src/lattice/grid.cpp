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

#include "dgflow/lattice/grid.hpp"

#include "dgflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dgflow::lattice {

std::string_view to_string(Scheme s)
{
  return s == Scheme::spectral ? "spectral" : "fd2";
}

Scheme scheme_from_string(std::string_view name)
{
  if (name == "spectral")
    return Scheme::spectral;
  if (name == "fd2")
    return Scheme::fd2;
  throw ConfigError("unknown derivative scheme '" + std::string(name) + "'");
}

Grid::Grid(int n, Scheme scheme) : n_(n), scheme_(scheme)
{
  if (n < 4 || n % 2 != 0)
    throw ConfigError("grid size n must be even and >= 4, got " + std::to_string(n));
  sites_ = static_cast<std::size_t>(n) * n * n * n;
  symbols_.resize(static_cast<std::size_t>(n));
  const double two_pi = 2.0 * std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    const int m = wavenumber(k);
    double s = 0.0;
    if (k != n / 2)
      s = scheme == Scheme::spectral ? two_pi * m : std::sin(two_pi * m * h()) / h();
    symbols_[static_cast<std::size_t>(k)] = s;
  }
}

std::size_t Grid::site(int i0, int i1, int i2, int i3) const
{
  auto wrap = [this](int i) { return static_cast<std::size_t>(((i % n_) + n_) % n_); };
  const auto n = static_cast<std::size_t>(n_);
  return ((wrap(i0) * n + wrap(i1)) * n + wrap(i2)) * n + wrap(i3);
}

std::array<int, 4> Grid::coords(std::size_t site) const
{
  std::array<int, 4> c{};
  const auto n = static_cast<std::size_t>(n_);
  for (int a = 3; a >= 0; --a) {
    c[static_cast<std::size_t>(a)] = static_cast<int>(site % n);
    site /= n;
  }
  return c;
}

exterior::Vector4 Grid::point(std::size_t site) const
{
  const auto c = coords(site);
  exterior::Vector4 x;
  for (std::size_t a = 0; a < 4; ++a)
    x[a] = c[a] * h();
  return x;
}

double Grid::max_symbol_sq() const
{
  double m = 0.0;
  for (double s : symbols_)
    m = std::max(m, s * s);
  return m;
}

} // namespace dgflow::lattice
