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
#include "dgflow/exterior/metric.hpp"

namespace dgflow::exterior {

/// Hodge star of an arbitrary metric, built from its defining identity
/// alpha ^ *beta = <alpha, beta>_g dvol_g. The induced inner products on
/// k-forms are the k x k minors of G^{-1}; the star on each degree is then
/// (wedge pairing)^{-1} * (Gram matrix) * vol_g.
class HodgeStar
{
public:
  explicit HodgeStar(const Metric4& g);

  Form4 operator()(const Form0& xi) const;
  Form3 operator()(const Form1& xi) const;
  Form2 operator()(const Form2& xi) const;
  Form1 operator()(const Form3& xi) const;
  Form0 operator()(const Form4& xi) const;

  /// <alpha, beta>_g for k-forms.
  double inner(const Form0& a, const Form0& b) const;
  double inner(const Form1& a, const Form1& b) const;
  double inner(const Form2& a, const Form2& b) const;
  double inner(const Form3& a, const Form3& b) const;
  double inner(const Form4& a, const Form4& b) const;

  const Mat4& star1() const { return s1_; }
  const Mat6& star2() const { return s2_; }
  const Mat4& star3() const { return s3_; }
  double volume() const { return vol_; }

private:
  double vol_;
  Mat4 gram1_, gram3_;
  Mat6 gram2_;
  Mat4 s1_, s3_;
  Mat6 s2_;
};

template <int K>
Form<4 - K> hodge(const Metric4& g, const Form<K>& xi)
{
  return HodgeStar(g)(xi);
}

/// Euclidean star on 2-forms: swaps the (c01, c02, c03) and (c23, c31, c12) triples.
constexpr Form2 hodge_flat(const Form2& w) { return Form2{{w[3], w[4], w[5], w[0], w[1], w[2]}}; }
/// Euclidean star on 1-forms and 3-forms.
constexpr Form3 hodge_flat(const Form1& l) { return Form3{{l[0], -l[1], l[2], -l[3]}}; }
constexpr Form1 hodge_flat(const Form3& g) { return Form1{{-g[0], g[1], -g[2], g[3]}}; }

/// Star on 3-forms for a metric of any volume: *gamma = -(*_1)^{-1} gamma.
/// Cheaper than the Gram-minor construction; used on lattices.
Form1 hodge3_fast(const Mat4& g, double vol, const Form3& gamma);

/// Self-dual and anti-self-dual parts.
struct SelfDualSplit
{
  Form2 plus;
  Form2 minus;
};

SelfDualSplit sd_split(const Form2& w, const Metric4& g);

constexpr SelfDualSplit sd_split_flat(const Form2& w)
{
  const Form2 s = hodge_flat(w);
  return {0.5 * (w + s), 0.5 * (w - s)};
}

} // namespace dgflow::exterior
