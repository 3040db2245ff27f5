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

#include "dgflow/exterior/metric.hpp"

#include "dgflow/errors.hpp"

#include <sstream>

namespace dgflow::exterior {

Metric4::Metric4(const Mat4& g) : g_(0.5 * (g + g.transpose()))
{
  if (!g_.allFinite())
    throw NonPositiveMetric("metric has non-finite entries");
  for (Eigen::Index k = 1; k <= 4; ++k) {
    const double minor = g_.topLeftCorner(k, k).determinant();
    if (!(minor > 0.0)) {
      std::ostringstream msg;
      msg << "metric is not positive definite (leading minor " << k << " = " << minor << ")";
      throw NonPositiveMetric(msg.str());
    }
  }
}

Metric4 Metric4::diagonal(double g0, double g1, double g2, double g3)
{
  Mat4 g = Mat4::Zero();
  g.diagonal() << g0, g1, g2, g3;
  return Metric4(g);
}

double Metric4::inner(const Vector4& v, const Vector4& w) const
{
  return to_eigen(v).dot(g_ * to_eigen(w));
}

Form1 Metric4::flat(const Vector4& v) const { return to_form1(g_ * to_eigen(v)); }

Vector4 Metric4::sharp(const Form1& l) const { return to_vector(g_.ldlt().solve(to_eigen(l))); }

Vector4 LinMap4::operator()(const Vector4& v) const { return to_vector(m * to_eigen(v)); }

Form1 compose(const Form1& l, const LinMap4& j) { return to_form1(j.m.transpose() * to_eigen(l)); }

Mat4 to_matrix(const Form2& w)
{
  Mat4 p = Mat4::Zero();
  p(0, 1) = w[0];
  p(0, 2) = w[1];
  p(0, 3) = w[2];
  p(2, 3) = w[3];
  p(3, 1) = w[4];
  p(1, 2) = w[5];
  p(1, 0) = -p(0, 1);
  p(2, 0) = -p(0, 2);
  p(3, 0) = -p(0, 3);
  p(3, 2) = -p(2, 3);
  p(1, 3) = -p(3, 1);
  p(2, 1) = -p(1, 2);
  return p;
}

Form2 from_matrix(const Mat4& p)
{
  return Form2{{p(0, 1), p(0, 2), p(0, 3), p(2, 3), p(3, 1), p(1, 2)}};
}

Eigen::Vector4d to_eigen(const Vector4& v) { return {v[0], v[1], v[2], v[3]}; }
Eigen::Vector4d to_eigen(const Form1& l) { return {l[0], l[1], l[2], l[3]}; }
Vector4 to_vector(const Eigen::Vector4d& v) { return Vector4{{v[0], v[1], v[2], v[3]}}; }
Form1 to_form1(const Eigen::Vector4d& v) { return Form1{{v[0], v[1], v[2], v[3]}}; }

} // namespace dgflow::exterior
