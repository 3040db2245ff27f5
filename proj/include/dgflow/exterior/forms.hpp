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

// Pointwise exterior algebra on an oriented 4D vector space with coordinate
// coframe e0..e3 and orientation e0^e1^e2^e3.
//
// Component orders (frozen; snapshot files depend on the Form2 order):
//   Form0 : (1)
//   Form1 : (e0, e1, e2, e3)
//   Form2 : (e01, e02, e03, e23, e31, e12)      e31 = e3^e1 = -e1^e3
//   Form3 : (e123, e023, e013, e012)
//   Form4 : (e0123)
// With this Form2 order rho^rho = 2 (c01 c23 + c02 c31 + c03 c12) e0123.
// Every sign used by wedge/interior lives in basis.hpp.

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace dgflow::exterior {

constexpr std::size_t form_size(int k)
{
  constexpr std::array<std::size_t, 5> sizes{1, 4, 6, 4, 1};
  return sizes[static_cast<std::size_t>(k)];
}

template <int K>
struct Form
{
  static_assert(K >= 0 && K <= 4);
  static constexpr int degree = K;
  static constexpr std::size_t size = form_size(K);

  std::array<double, size> c{};

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  constexpr Form& operator+=(const Form& o)
  {
    for (std::size_t i = 0; i < size; ++i)
      c[i] += o.c[i];
    return *this;
  }
  constexpr Form& operator-=(const Form& o)
  {
    for (std::size_t i = 0; i < size; ++i)
      c[i] -= o.c[i];
    return *this;
  }
  constexpr Form& operator*=(double s)
  {
    for (auto& x : c)
      x *= s;
    return *this;
  }

  friend constexpr Form operator+(Form a, const Form& b) { return a += b; }
  friend constexpr Form operator-(Form a, const Form& b) { return a -= b; }
  friend constexpr Form operator*(double s, Form a) { return a *= s; }
  friend constexpr Form operator*(Form a, double s) { return a *= s; }
  friend constexpr Form operator/(Form a, double s) { return a *= (1.0 / s); }
  friend constexpr Form operator-(Form a) { return a *= -1.0; }
  friend constexpr bool operator==(const Form&, const Form&) = default;
};

using Form0 = Form<0>;
using Form1 = Form<1>;
using Form2 = Form<2>;
using Form3 = Form<3>;
using Form4 = Form<4>;

// A tangent vector in the coordinate basis d0..d3. Kept distinct from Form1.
struct Vector4
{
  std::array<double, 4> c{};

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  friend constexpr Vector4 operator+(Vector4 a, const Vector4& b)
  {
    for (std::size_t i = 0; i < 4; ++i)
      a.c[i] += b.c[i];
    return a;
  }
  friend constexpr Vector4 operator-(Vector4 a, const Vector4& b)
  {
    for (std::size_t i = 0; i < 4; ++i)
      a.c[i] -= b.c[i];
    return a;
  }
  friend constexpr Vector4 operator*(double s, Vector4 a)
  {
    for (auto& x : a.c)
      x *= s;
    return a;
  }
  friend constexpr bool operator==(const Vector4&, const Vector4&) = default;
};

/// Unit coordinate vector d_a.
constexpr Vector4 basis_vector(std::size_t a)
{
  Vector4 v;
  v.c[a] = 1.0;
  return v;
}

/// Coordinate covector e_a.
constexpr Form1 basis_covector(std::size_t a)
{
  Form1 f;
  f.c[a] = 1.0;
  return f;
}

constexpr Form4 volume_form(double coefficient = 1.0) { return Form4{{coefficient}}; }

/// Largest absolute component; used for relative tolerances.
template <int K>
double max_abs(const Form<K>& f)
{
  double m = 0.0;
  for (double x : f.c)
    m = std::fmax(m, std::fabs(x));
  return m;
}

inline double max_abs(const Vector4& v)
{
  double m = 0.0;
  for (double x : v.c)
    m = std::fmax(m, std::fabs(x));
  return m;
}

/// Sum of squared coefficients, i.e. the squared norm for the Euclidean metric.
template <int K>
constexpr double flat_norm_sq(const Form<K>& f)
{
  double s = 0.0;
  for (double x : f.c)
    s += x * x;
  return s;
}

template <int K>
std::ostream& operator<<(std::ostream& os, const Form<K>& f)
{
  os << '(';
  for (std::size_t i = 0; i < Form<K>::size; ++i)
    os << (i ? ", " : "") << f.c[i];
  return os << ')';
}

// Standard hyperKahler triple on R^4 = H (x = x0 + i x1 + j x2 + k x3):
// omega_i = e0^e_i + e_j^e_k for (i, j, k) cyclic.
inline constexpr Form2 omega1{{1, 0, 0, 1, 0, 0}};
inline constexpr Form2 omega2{{0, 1, 0, 0, 1, 0}};
inline constexpr Form2 omega3{{0, 0, 1, 0, 0, 1}};

inline constexpr std::array<Form2, 3> standard_omegas{omega1, omega2, omega3};

} // namespace dgflow::exterior
