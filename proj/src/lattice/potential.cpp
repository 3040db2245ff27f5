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

#include "dgflow/lattice/potential.hpp"

#include "dgflow/errors.hpp"
#include "dgflow/lattice/ops.hpp"
#include "dgflow/lattice/spectral.hpp"

#include <cmath>
#include <sstream>

namespace dgflow::lattice {

using exterior::Mat4;

namespace {

// Cometric scaled by the volume: lambda ^ *_g mu = lambda^T M mu dvol.
std::vector<Mat4> cometric(const MetricField& metric)
{
  std::vector<Mat4> m(metric.size());
  parallel_for(metric.size(), [&](std::size_t s) {
    m[s] = metric[s].inverse() * std::sqrt(metric[s].determinant());
  });
  return m;
}

Field1 apply_cometric(const std::vector<Mat4>& m, const Field1& x)
{
  Field1 out(x.grid());
  parallel_for(x.sites(), [&](std::size_t s) {
    const Eigen::Map<const Eigen::Vector4d> in(x.data() + 4 * s);
    Eigen::Map<Eigen::Vector4d>(out.data() + 4 * s) = m[s] * in;
  });
  return out;
}

double dot(const Field1& a, const Field1& b)
{
  return sum_over(a.size(), [&](std::size_t i) { return a.data()[i] * b.data()[i]; });
}

} // namespace

MetricField euclidean_metric_field(const Grid& grid) { return MetricField(grid.sites(), Mat4::Identity()); }

Field1 coexact_potential(const Field2& rho_hat, double exact_tol)
{
  const Grid& grid = rho_hat.grid();
  const Spectrum r = fft_forward(rho_hat);
  Spectrum l(grid.sites() * 4);
  parallel_for(grid.sites(), [&](std::size_t m) {
    const auto s = mode_symbols(grid, m);
    const double s2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3];
    if (s2 == 0.0)
      return;
    // rho = i s ^ lambda with iota(s) lambda = 0 gives lambda = -i iota(s) rho / |s|^2.
    const auto& table = exterior::basis::ext1;
    Complex out[4] = {};
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        const auto& e = table[a][b]; // e_a ^ e_b = sign * basis2[index]
        if (e.sign != 0)
          out[b] += static_cast<double>(e.sign) * s[a] * r[m * 6 + static_cast<std::size_t>(e.index)];
      }
    for (std::size_t b = 0; b < 4; ++b)
      l[m * 4 + b] = Complex(0.0, -1.0) * out[b] / s2;
  });
  Field1 lambda0 = fft_backward<1>(grid, l);

  const double scale = std::fmax(1.0, max_abs(rho_hat));
  const double residual = max_abs(d(lambda0) - rho_hat);
  if (!(residual <= exact_tol * scale)) {
    std::ostringstream msg;
    msg << "2-form is not exact: residual " << residual << " after projection onto im d";
    throw NotExact(msg.str());
  }
  return lambda0;
}

Field1 project_closed(const Field1& kappa)
{
  const Grid& grid = kappa.grid();
  Spectrum k = fft_forward(kappa);
  parallel_for(grid.sites(), [&](std::size_t m) {
    const auto s = mode_symbols(grid, m);
    const double s2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3];
    if (s2 == 0.0)
      return;
    Complex sk = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
      sk += s[a] * k[m * 4 + a];
    for (std::size_t a = 0; a < 4; ++a)
      k[m * 4 + a] = s[a] * sk / s2;
  });
  return fft_backward<1>(grid, k);
}

Field1 least_norm_potential(const Field2& rho_hat, const MetricField& metric, const CgOptions& options,
                            CgStats* stats)
{
  const Grid& grid = rho_hat.grid();
  const Field1 lambda0 = coexact_potential(rho_hat, options.exact_tol);
  const auto m = cometric(metric);
  auto op = [&](const Field1& x) { return project_closed(apply_cometric(m, project_closed(x))); };

  Field1 x(grid);
  Field1 r = -project_closed(apply_cometric(m, lambda0));
  const double b_norm = std::sqrt(dot(r, r));
  const int max_iter = options.max_iter > 0 ? options.max_iter : 50 * grid.n();
  CgStats st;
  if (b_norm == 0.0) {
    if (stats)
      *stats = st;
    return lambda0;
  }
  Field1 p = r;
  double rr = dot(r, r);
  for (;;) {
    st.relative_residual = std::sqrt(rr) / b_norm;
    if (st.relative_residual <= options.tol)
      break;
    if (st.iterations >= max_iter) {
      std::ostringstream msg;
      msg << "conjugate gradients did not converge in " << max_iter << " iterations (relative residual "
          << st.relative_residual << ")";
      throw NoConvergence(msg.str());
    }
    const Field1 ap = op(p);
    const double alpha = rr / dot(p, ap);
    x.axpy(alpha, p);
    r.axpy(-alpha, ap);
    const double rr_new = dot(r, r);
    p = r + (rr_new / rr) * p;
    rr = rr_new;
    ++st.iterations;
  }
  if (stats)
    *stats = st;
  return lambda0 + project_closed(x);
}

double metric_inner(const Field1& a, const Field1& b, const MetricField& metric)
{
  const auto m = cometric(metric);
  return sum_over(a.sites(), [&](std::size_t s) {
           const Eigen::Map<const Eigen::Vector4d> x(a.data() + 4 * s);
           const Eigen::Map<const Eigen::Vector4d> y(b.data() + 4 * s);
           return x.dot(m[s] * y);
         }) /
         static_cast<double>(a.sites());
}

} // namespace dgflow::lattice
