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

#include "dgflow/exterior/forms.hpp"
#include "dgflow/lattice/grid.hpp"
#include "dgflow/lattice/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace dgflow::lattice {

/// A k-form field on the torus: one exterior::Form<K> per grid site.
template <int K>
class Field
{
public:
  using Value = exterior::Form<K>;
  static constexpr std::size_t ncomp = Value::size;

  explicit Field(const Grid& grid) : grid_(grid), v_(grid.sites() * ncomp, 0.0) {}

  static Field constant(const Grid& grid, const Value& value)
  {
    Field f(grid);
    for (std::size_t s = 0; s < grid.sites(); ++s)
      f.set(s, value);
    return f;
  }

  /// f(x) evaluated at the grid points x.
  template <class F>
  static Field sample(const Grid& grid, F&& fn)
  {
    Field f(grid);
    parallel_for(grid.sites(), [&](std::size_t s) { f.set(s, fn(grid.point(s))); });
    return f;
  }

  const Grid& grid() const { return grid_; }
  std::size_t sites() const { return grid_.sites(); }

  Value at(std::size_t site) const
  {
    Value out;
    std::copy_n(v_.data() + site * ncomp, ncomp, out.c.begin());
    return out;
  }
  void set(std::size_t site, const Value& value)
  {
    std::copy_n(value.c.begin(), ncomp, v_.data() + site * ncomp);
  }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  std::size_t size() const { return v_.size(); }
  std::vector<double>& values() { return v_; }
  const std::vector<double>& values() const { return v_; }

  Field& operator+=(const Field& o)
  {
    for (std::size_t i = 0; i < v_.size(); ++i)
      v_[i] += o.v_[i];
    return *this;
  }
  Field& operator-=(const Field& o)
  {
    for (std::size_t i = 0; i < v_.size(); ++i)
      v_[i] -= o.v_[i];
    return *this;
  }
  Field& operator*=(double a)
  {
    for (auto& x : v_)
      x *= a;
    return *this;
  }
  /// this += a * o
  Field& axpy(double a, const Field& o)
  {
    for (std::size_t i = 0; i < v_.size(); ++i)
      v_[i] += a * o.v_[i];
    return *this;
  }

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(double s, Field a) { return a *= s; }
  friend Field operator*(Field a, double s) { return a *= s; }
  friend Field operator-(Field a) { return a *= -1.0; }

private:
  Grid grid_;
  std::vector<double> v_;
};

using ScalarField = Field<0>;
using Field1 = Field<1>;
using Field2 = Field<2>;
using Field3 = Field<3>;
using Field4 = Field<4>;

/// Pointwise map f -> op(f(x)).
template <int L, int K, class Op>
Field<L> map(const Field<K>& f, Op&& op)
{
  Field<L> out(f.grid());
  parallel_for(f.sites(), [&](std::size_t s) { out.set(s, op(f.at(s))); });
  return out;
}

/// Pointwise map (f, g) -> op(f(x), g(x)).
template <int L, int K1, int K2, class Op>
Field<L> map(const Field<K1>& f, const Field<K2>& g, Op&& op)
{
  Field<L> out(f.grid());
  parallel_for(f.sites(), [&](std::size_t s) { out.set(s, op(f.at(s), g.at(s))); });
  return out;
}

/// Pointwise map indexed by site, for operations that need other per-site data.
template <int L, class Op>
Field<L> generate(const Grid& grid, Op&& op)
{
  Field<L> out(grid);
  parallel_for(grid.sites(), [&](std::size_t s) { out.set(s, op(s)); });
  return out;
}

inline ScalarField scalar_field(const Grid& grid, const std::vector<double>& values)
{
  ScalarField f(grid);
  f.values() = values;
  return f;
}

template <int K>
double max_abs(const Field<K>& f)
{
  double m = 0.0;
  for (double x : f.values())
    m = std::max(m, std::fabs(x));
  return m;
}

template <int K>
bool all_finite(const Field<K>& f)
{
  return std::all_of(f.values().begin(), f.values().end(), [](double x) { return std::isfinite(x); });
}

} // namespace dgflow::lattice
