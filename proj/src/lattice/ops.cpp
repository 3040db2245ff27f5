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

#include "dgflow/lattice/ops.hpp"

#include <cmath>
#include <cstdlib>

namespace dgflow::lattice {

namespace {

template <int K>
Field<K + 1> d_spectral(const Field<K>& f)
{
  const Grid& grid = f.grid();
  constexpr std::size_t nin = Field<K>::ncomp;
  constexpr std::size_t nout = Field<K + 1>::ncomp;
  const Spectrum in = fft_forward(f);
  Spectrum out(grid.sites() * nout);
  parallel_for(grid.sites(), [&](std::size_t m) {
    d_symbol<K>(mode_symbols(grid, m), in.data() + m * nin, out.data() + m * nout);
  });
  return fft_backward<K + 1>(grid, out);
}

template <int K>
Field<K + 1> d_fd2(const Field<K>& f)
{
  const Grid& grid = f.grid();
  const double inv2h = 0.5 / grid.h();
  return generate<K + 1>(grid, [&](std::size_t s) {
    const auto c = grid.coords(s);
    exterior::Form<K + 1> out;
    for (std::size_t a = 0; a < 4; ++a) {
      auto up = c;
      auto down = c;
      ++up[a];
      --down[a];
      const auto diff = (f.at(grid.site(up[0], up[1], up[2], up[3])) -
                         f.at(grid.site(down[0], down[1], down[2], down[3]))) *
                        inv2h;
      out += exterior::wedge_basis<K>(a, diff);
    }
    return out;
  });
}

} // namespace

template <int K>
Field<K + 1> d(const Field<K>& f)
{
  static_assert(K >= 0 && K <= 3);
  return f.grid().scheme() == Scheme::spectral ? d_spectral(f) : d_fd2(f);
}

template <int K>
Field<K> partial(const Field<K>& f, int a)
{
  const Grid& grid = f.grid();
  constexpr std::size_t nc = Field<K>::ncomp;
  const auto ua = static_cast<std::size_t>(a);
  if (grid.scheme() == Scheme::spectral) {
    Spectrum spec = fft_forward(f);
    parallel_for(grid.sites(), [&](std::size_t m) {
      const Complex is(0.0, mode_symbols(grid, m)[ua]);
      for (std::size_t i = 0; i < nc; ++i)
        spec[m * nc + i] *= is;
    });
    return fft_backward<K>(grid, spec);
  }
  const double inv2h = 0.5 / grid.h();
  return generate<K>(grid, [&](std::size_t s) {
    auto up = grid.coords(s);
    auto down = up;
    ++up[ua];
    --down[ua];
    return (f.at(grid.site(up[0], up[1], up[2], up[3])) - f.at(grid.site(down[0], down[1], down[2], down[3]))) *
           inv2h;
  });
}

double integrate(const Field4& f)
{
  return pairwise_sum(f.values()) / static_cast<double>(f.sites());
}

double integrate(const ScalarField& f)
{
  return pairwise_sum(f.values()) / static_cast<double>(f.sites());
}

template <int K>
std::array<double, Field<K>::ncomp> means(const Field<K>& f)
{
  std::array<double, Field<K>::ncomp> m{};
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = pairwise_sum(f.data() + i, f.sites(), Field<K>::ncomp) / static_cast<double>(f.sites());
  return m;
}

CohomologyClass2 cohomology(const Field2& rho) { return means(rho); }

template <int K>
double inner_l2(const Field<K>& a, const Field<K>& b)
{
  return sum_over(a.size(), [&](std::size_t i) { return a.data()[i] * b.data()[i]; }) /
         static_cast<double>(a.sites());
}

template <int K>
double norm_l2(const Field<K>& f)
{
  return std::sqrt(inner_l2(f, f));
}

template <int K>
Field<K> dealias(const Field<K>& f)
{
  const Grid& grid = f.grid();
  constexpr std::size_t nc = Field<K>::ncomp;
  Spectrum spec = fft_forward(f);
  parallel_for(grid.sites(), [&](std::size_t m) {
    for (int w : mode_wavenumbers(grid, m))
      if (3 * std::abs(w) >= grid.n()) {
        for (std::size_t i = 0; i < nc; ++i)
          spec[m * nc + i] = 0.0;
        return;
      }
  });
  return fft_backward<K>(grid, spec);
}

Field4 wedge(const Field2& a, const Field2& b)
{
  return map<4>(a, b, [](const exterior::Form2& x, const exterior::Form2& y) { return exterior::wedge22_form(x, y); });
}

Field3 wedge(const Field1& a, const Field2& b)
{
  return map<3>(a, b, [](const exterior::Form1& x, const exterior::Form2& y) { return exterior::wedge12(x, y); });
}

Field4 wedge(const Field1& a, const Field3& b)
{
  return map<4>(a, b, [](const exterior::Form1& x, const exterior::Form3& y) { return exterior::wedge13(x, y); });
}

template Field1 d<0>(const ScalarField&);
template Field2 d<1>(const Field1&);
template Field3 d<2>(const Field2&);
template Field4 d<3>(const Field3&);

template ScalarField partial<0>(const ScalarField&, int);
template Field1 partial<1>(const Field1&, int);
template Field2 partial<2>(const Field2&, int);

template std::array<double, 1> means<0>(const ScalarField&);
template std::array<double, 4> means<1>(const Field1&);
template std::array<double, 6> means<2>(const Field2&);
template std::array<double, 4> means<3>(const Field3&);
template std::array<double, 1> means<4>(const Field4&);

template double inner_l2<0>(const ScalarField&, const ScalarField&);
template double inner_l2<1>(const Field1&, const Field1&);
template double inner_l2<2>(const Field2&, const Field2&);
template double inner_l2<3>(const Field3&, const Field3&);
template double norm_l2<0>(const ScalarField&);
template double norm_l2<1>(const Field1&);
template double norm_l2<2>(const Field2&);
template double norm_l2<3>(const Field3&);

template ScalarField dealias<0>(const ScalarField&);
template Field1 dealias<1>(const Field1&);
template Field2 dealias<2>(const Field2&);

} // namespace dgflow::lattice
