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

#include "dgflow/exterior/basis.hpp"
#include "dgflow/exterior/forms.hpp"

namespace dgflow::exterior {

namespace detail {

template <int K>
constexpr const auto& ext_table()
{
  if constexpr (K == 0)
    return basis::ext0;
  else if constexpr (K == 1)
    return basis::ext1;
  else if constexpr (K == 2)
    return basis::ext2;
  else
    return basis::ext3;
}

} // namespace detail

/// e_a ^ xi.
template <int K>
constexpr Form<K + 1> wedge_basis(std::size_t a, const Form<K>& xi)
{
  static_assert(K <= 3);
  Form<K + 1> out;
  const auto& row = detail::ext_table<K>()[a];
  for (std::size_t i = 0; i < Form<K>::size; ++i)
    if (row[i].sign != 0)
      out.c[static_cast<std::size_t>(row[i].index)] += row[i].sign * xi.c[i];
  return out;
}

/// lambda ^ xi for a 1-form lambda.
template <int K>
constexpr Form<K + 1> wedge(const Form1& lambda, const Form<K>& xi)
{
  Form<K + 1> out;
  for (std::size_t a = 0; a < 4; ++a)
    if (lambda.c[a] != 0.0)
      out += lambda.c[a] * wedge_basis<K>(a, xi);
  return out;
}

/// Coefficient of alpha ^ beta on e0123.
constexpr double wedge22(const Form2& a, const Form2& b)
{
  return a[0] * b[3] + a[1] * b[4] + a[2] * b[5] + a[3] * b[0] + a[4] * b[1] + a[5] * b[2];
}

constexpr Form4 wedge22_form(const Form2& a, const Form2& b) { return Form4{{wedge22(a, b)}}; }

constexpr Form3 wedge12(const Form1& l, const Form2& w) { return wedge<2>(l, w); }
constexpr Form3 wedge21(const Form2& w, const Form1& l) { return wedge<2>(l, w); }
constexpr Form4 wedge13(const Form1& l, const Form3& g) { return wedge<3>(l, g); }
constexpr Form4 wedge31(const Form3& g, const Form1& l) { return -wedge<3>(l, g); }
constexpr Form2 wedge11(const Form1& l, const Form1& m) { return wedge<1>(l, m); }

/// iota(v) xi: contraction in the first slot. Adjoint of e_a ^ in the flat
/// coordinate inner product, so it reuses the same table.
template <int K>
constexpr Form<K - 1> interior(const Vector4& v, const Form<K>& xi)
{
  static_assert(K >= 1 && K <= 4);
  Form<K - 1> out;
  const auto& table = detail::ext_table<K - 1>();
  for (std::size_t a = 0; a < 4; ++a) {
    if (v.c[a] == 0.0)
      continue;
    for (std::size_t i = 0; i < Form<K - 1>::size; ++i) {
      const auto& e = table[a][i];
      if (e.sign != 0)
        out.c[i] += v.c[a] * e.sign * xi.c[static_cast<std::size_t>(e.index)];
    }
  }
  return out;
}

/// Value of a 1-form on a vector.
constexpr double apply(const Form1& l, const Vector4& v)
{
  return l[0] * v[0] + l[1] * v[1] + l[2] * v[2] + l[3] * v[3];
}

/// omega(v, w).
constexpr double evaluate(const Form2& w, const Vector4& v, const Vector4& x)
{
  return apply(interior(v, w), x);
}

} // namespace dgflow::exterior
