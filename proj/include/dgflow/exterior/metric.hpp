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

#include <Eigen/Dense>

namespace dgflow::exterior {

using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Inner product on the tangent space; G(a, b) = g(d_a, d_b). Orientation is
/// always e0^e1^e2^e3 > 0. Positive definiteness is checked on construction.
class Metric4
{
public:
  Metric4() : g_(Mat4::Identity()) {}

  /// Symmetrizes `g` and throws NonPositiveMetric unless every leading minor
  /// is positive.
  explicit Metric4(const Mat4& g);

  static Metric4 euclidean() { return Metric4(); }
  static Metric4 diagonal(double g0, double g1, double g2, double g3);

  const Mat4& matrix() const { return g_; }
  double operator()(std::size_t a, std::size_t b) const
  {
    return g_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }

  double det() const { return g_.determinant(); }
  /// Coefficient of dvol_g on e0123.
  double volume() const { return std::sqrt(det()); }
  bool is_euclidean() const { return g_ == Mat4::Identity(); }

  double inner(const Vector4& v, const Vector4& w) const;
  /// g(v, .) as a 1-form.
  Form1 flat(const Vector4& v) const;
  /// Inverse of flat.
  Vector4 sharp(const Form1& l) const;

private:
  Mat4 g_;
};

/// Linear endomorphism of the tangent space in the coordinate basis.
struct LinMap4
{
  Mat4 m = Mat4::Identity();

  static LinMap4 identity() { return {}; }

  Vector4 operator()(const Vector4& v) const;
  friend LinMap4 operator*(const LinMap4& a, const LinMap4& b) { return {a.m * b.m}; }
  friend LinMap4 operator-(const LinMap4& a) { return {-a.m}; }
  friend LinMap4 operator+(const LinMap4& a, const LinMap4& b) { return {a.m + b.m}; }
  friend LinMap4 operator-(const LinMap4& a, const LinMap4& b) { return {a.m - b.m}; }
  double det() const { return m.determinant(); }
};

/// Pullback lambda o J as a 1-form: (lambda o J)(v) = lambda(J v).
Form1 compose(const Form1& l, const LinMap4& j);

/// P(a, b) = omega(d_a, d_b), antisymmetric.
Mat4 to_matrix(const Form2& w);
/// Inverse of to_matrix; reads the upper triangle.
Form2 from_matrix(const Mat4& p);

Eigen::Vector4d to_eigen(const Vector4& v);
Eigen::Vector4d to_eigen(const Form1& l);
Vector4 to_vector(const Eigen::Vector4d& v);
Form1 to_form1(const Eigen::Vector4d& v);

} // namespace dgflow::exterior
