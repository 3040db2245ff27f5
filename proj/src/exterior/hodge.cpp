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

#include "dgflow/exterior/hodge.hpp"

#include "dgflow/exterior/basis.hpp"

namespace dgflow::exterior {

namespace {

template <std::size_t N, std::size_t K>
Eigen::Matrix<double, N, N> gram(const Mat4& ginv, const std::array<basis::Monomial, N>& monos)
{
  Eigen::Matrix<double, N, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      Eigen::Matrix<double, K, K> minor;
      for (std::size_t r = 0; r < K; ++r)
        for (std::size_t c = 0; c < K; ++c)
          minor(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            ginv(monos[i].idx[r], monos[j].idx[c]);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
        monos[i].sign * monos[j].sign * minor.determinant();
    }
  }
  return out;
}

template <int K, typename M>
Form<4 - K> apply_matrix(const M& s, const Form<K>& xi)
{
  Form<4 - K> out;
  for (std::size_t i = 0; i < Form<4 - K>::size; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < Form<K>::size; ++j)
      acc += s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * xi.c[j];
    out.c[i] = acc;
  }
  return out;
}

template <int K, typename M>
double apply_gram(const M& gr, const Form<K>& a, const Form<K>& b)
{
  double acc = 0.0;
  for (std::size_t i = 0; i < Form<K>::size; ++i)
    for (std::size_t j = 0; j < Form<K>::size; ++j)
      acc += a.c[i] * gr(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * b.c[j];
  return acc;
}

} // namespace

HodgeStar::HodgeStar(const Metric4& g) : vol_(g.volume())
{
  const Mat4 ginv = g.matrix().inverse();
  gram1_ = gram<4, 1>(ginv, basis::form1_monomials);
  gram2_ = gram<6, 2>(ginv, basis::form2_monomials);
  gram3_ = gram<4, 3>(ginv, basis::form3_monomials);

  Mat6 w2 = Mat6::Zero();
  for (int i = 0; i < 6; ++i)
    w2(i, basis::pair22_partner[static_cast<std::size_t>(i)]) = 1.0;
  Mat4 w1 = Mat4::Zero();
  Mat4 w3 = Mat4::Zero();
  for (int i = 0; i < 4; ++i) {
    w1(i, i) = basis::pair13_sign[static_cast<std::size_t>(i)];
    w3(i, i) = basis::pair31_sign[static_cast<std::size_t>(i)];
  }
  s1_ = w1.inverse() * gram1_ * vol_;
  s2_ = w2.inverse() * gram2_ * vol_;
  s3_ = w3.inverse() * gram3_ * vol_;
}

Form4 HodgeStar::operator()(const Form0& xi) const
{
  return Form4{{xi[0] * vol_}};
}
Form3 HodgeStar::operator()(const Form1& xi) const
{
  return apply_matrix<1>(s1_, xi);
}
Form2 HodgeStar::operator()(const Form2& xi) const
{
  return apply_matrix<2>(s2_, xi);
}
Form1 HodgeStar::operator()(const Form3& xi) const
{
  return apply_matrix<3>(s3_, xi);
}
Form0 HodgeStar::operator()(const Form4& xi) const
{
  return Form0{{xi[0] / vol_}};
}

double HodgeStar::inner(const Form0& a, const Form0& b) const
{
  return a[0] * b[0];
}
double HodgeStar::inner(const Form1& a, const Form1& b) const
{
  return apply_gram<1>(gram1_, a, b);
}
double HodgeStar::inner(const Form2& a, const Form2& b) const
{
  return apply_gram<2>(gram2_, a, b);
}
double HodgeStar::inner(const Form3& a, const Form3& b) const
{
  return apply_gram<3>(gram3_, a, b);
}
double HodgeStar::inner(const Form4& a, const Form4& b) const
{
  return a[0] * b[0] / (vol_ * vol_);
}

Form1 hodge3_fast(const Mat4& g, double vol, const Form3& gamma)
{
  // *_1 = W13 G^{-1} vol, so -(*_1)^{-1} = -G W13 / vol.
  Form1 out;
  for (int i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j)
      acc += g(i, j) * basis::pair13_sign[static_cast<std::size_t>(j)] * gamma.c[static_cast<std::size_t>(j)];
    out.c[static_cast<std::size_t>(i)] = -acc / vol;
  }
  return out;
}

SelfDualSplit sd_split(const Form2& w, const Metric4& g)
{
  const Form2 s = hodge(g, w);
  return {0.5 * (w + s), 0.5 * (w - s)};
}

} // namespace dgflow::exterior
