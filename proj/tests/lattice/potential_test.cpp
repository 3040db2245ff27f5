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

#include "dgflow/errors.hpp"
#include "dgflow/exterior/rho.hpp"
#include "dgflow/lattice/ops.hpp"
#include "dgflow/lattice/potential.hpp"
#include "dgflow/lattice/snapshot.hpp"
#include "support/random_forms.hpp"
#include "support/trig.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>

namespace {

using namespace dgflow::lattice;
using namespace dgflow::exterior;
using dgflow::testing::TrigForm;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A smooth non-Euclidean metric field: g^rho of a perturbed omega1.
MetricField bumpy_metric(const Grid& g, std::mt19937_64& gen)
{
  const auto l = TrigForm<1>::random(gen, 1, 2).sample(g);
  const auto dl = d(l);
  const auto rho = Field2::constant(g, omega1) + (0.3 / max_abs(dl)) * dl;
  MetricField m(g.sites());
  for (std::size_t s = 0; s < g.sites(); ++s) {
    EXPECT_GT(u_of(rho.at(s)), 0.3);
    m[s] = g_rho_matrix(rho.at(s));
  }
  return m;
}

Field1 sin_e1(const Grid& g)
{
  return Field1::sample(g, [](const Vector4& x) { return std::sin(kTwoPi * x[0]) * basis_covector(1); });
}

TEST(LeastNorm, ZeroInput)
{
  const Grid g(8);
  const auto l = least_norm_potential(Field2(g), euclidean_metric_field(g));
  EXPECT_EQ(max_abs(l), 0.0);
}

TEST(LeastNorm, EuclideanCoexactExample)
{
  const Grid g(8);
  const auto lam = sin_e1(g);
  CgStats stats;
  const auto l = least_norm_potential(d(lam), euclidean_metric_field(g), {}, &stats);
  EXPECT_LT(max_abs(l - lam), 1e-13);
  EXPECT_NEAR(metric_inner(l, l, euclidean_metric_field(g)), 0.5, 1e-14);
  EXPECT_LE(stats.iterations, 1);
}

TEST(LeastNorm, EuclideanRemovesGauge)
{
  std::mt19937_64 gen(61);
  for (auto scheme : {Scheme::spectral, Scheme::fd2}) {
    const Grid g(8, scheme);
    const auto l0 = TrigForm<1>::random(gen, 2, 3).sample(g);
    const auto phi = TrigForm<0>::random(gen, 2, 3).sample(g);
    const auto shifted = l0 + d(phi) + Field1::constant(g, Form1{{0.3, -0.2, 0.1, 0.5}});
    const auto rho_hat = d(shifted);
    const auto l = least_norm_potential(rho_hat, euclidean_metric_field(g));
    EXPECT_LT(max_abs(d(l) - rho_hat), 1e-9);
    // flat gauge: d*l = 0, i.e. the divergence vanishes, and zero means
    ScalarField div(g);
    for (int a = 0; a < 4; ++a) {
      ScalarField comp(g);
      for (std::size_t s = 0; s < g.sites(); ++s)
        comp.values()[s] = l.at(s)[static_cast<std::size_t>(a)];
      div += partial(comp, a);
    }
    EXPECT_LT(max_abs(div), 1e-8);
    for (double m : means(l))
      EXPECT_NEAR(m, 0.0, 1e-14);
  }
}

TEST(LeastNorm, OrthogonalToClosedFormsForCurvedMetric)
{
  std::mt19937_64 gen(62);
  for (auto scheme : {Scheme::spectral, Scheme::fd2}) {
    const Grid g(8, scheme);
    const auto metric = bumpy_metric(g, gen);
    const auto rho_hat = d(TrigForm<1>::random(gen, 2, 3).sample(g));
    CgStats stats;
    const auto l = least_norm_potential(rho_hat, metric, {}, &stats);
    EXPECT_LT(max_abs(d(l) - rho_hat), 1e-9);
    EXPECT_LE(stats.relative_residual, 1e-10);
    const double norm = std::sqrt(metric_inner(l, l, metric));
    for (int s = 0; s < 5; ++s) {
      // closed test forms: exact plus constant (harmonic)
      const auto phi = TrigForm<0>::random(gen, 3, 2).sample(g);
      const auto mu = d(phi) + Field1::constant(g, Form1{{0.1 * s, 1.0, -0.5, 0.2}});
      const double mu_norm = std::sqrt(metric_inner(mu, mu, metric));
      EXPECT_LT(std::fabs(metric_inner(l, mu, metric)), 1e-9 * norm * mu_norm);
      // and moving along a closed direction only increases the norm
      EXPECT_GT(metric_inner(l + 0.01 * mu, l + 0.01 * mu, metric), metric_inner(l, l, metric));
    }
  }
}

TEST(LeastNorm, DonaldsonInnerProductIsSymmetric)
{
  std::mt19937_64 gen(63);
  const Grid g(8);
  const auto metric = bumpy_metric(g, gen);
  for (int s = 0; s < 3; ++s) {
    const auto r1 = d(TrigForm<1>::random(gen, 2, 3).sample(g));
    const auto r2 = d(TrigForm<1>::random(gen, 2, 3).sample(g));
    const auto l1 = least_norm_potential(r1, metric);
    const auto l2 = least_norm_potential(r2, metric);
    const double a = metric_inner(l1, l2, metric);
    const double b = metric_inner(l2, l1, metric);
    EXPECT_NEAR(a, b, 1e-12 * std::fabs(a));
    // the pairing does not depend on which potential of r2 is used when the
    // first one is gauge fixed
    const auto other = l2 + d(TrigForm<0>::random(gen, 2, 2).sample(g));
    EXPECT_NEAR(metric_inner(l1, other, metric), a, 1e-8 * std::fabs(a));
  }
}

TEST(LeastNorm, Errors)
{
  const Grid g(8);
  EXPECT_THROW(least_norm_potential(Field2::constant(g, omega1), euclidean_metric_field(g)), dgflow::NotExact);
  // closed but not exact would need harmonic content; a non-closed form fails too
  const auto bad = Field2::sample(g, [](const Vector4& x) {
    Form2 w;
    w[0] = std::sin(kTwoPi * x[2]);
    return w;
  });
  EXPECT_THROW(least_norm_potential(bad, euclidean_metric_field(g)), dgflow::NotExact);

  std::mt19937_64 gen(64);
  const auto metric = bumpy_metric(g, gen);
  CgOptions opts;
  opts.max_iter = 1;
  EXPECT_THROW(least_norm_potential(d(TrigForm<1>::random(gen, 2, 3).sample(g)), metric, opts),
               dgflow::NoConvergence);
}

TEST(Snapshot, BitExactRoundTrip)
{
  std::mt19937_64 gen(65);
  const Grid g(4, Scheme::fd2);
  auto rho = TrigForm<2>::random(gen, 2, 2).sample(g);
  rho.values()[7] = 1.0 / 3.0;
  rho.values()[8] = -0.0;
  const auto dir = std::filesystem::temp_directory_path() / "dgflow_snapshot_test";
  std::filesystem::create_directories(dir);
  const auto header = dir / "snap.json";
  write_snapshot(header, rho, 0.125, {{"energy", 2.5}});
  const auto snap = read_snapshot(header);
  EXPECT_EQ(snap.rho.grid(), g);
  EXPECT_EQ(snap.time, 0.125);
  EXPECT_EQ(snap.monitors.at("energy").get<double>(), 2.5);
  EXPECT_EQ(std::memcmp(snap.rho.data(), rho.data(), rho.size() * sizeof(double)), 0);
  EXPECT_EQ(std::filesystem::file_size(dir / "snap.bin"), g.sites() * 6 * sizeof(double));

  // first payload word is little-endian
  std::ifstream bin(dir / "snap.bin", std::ios::binary);
  unsigned char bytes[8];
  bin.read(reinterpret_cast<char*>(bytes), 8);
  std::uint64_t word = 0;
  for (int i = 7; i >= 0; --i)
    word = (word << 8) | bytes[i];
  double first;
  std::memcpy(&first, &word, 8);
  EXPECT_EQ(first, rho.values()[0]);

  std::filesystem::resize_file(dir / "snap.bin", 100);
  EXPECT_THROW(read_snapshot(header), dgflow::Error);
  std::filesystem::remove_all(dir);
}

} // namespace
