#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hankel.hpp"
#include "slabshift/asymptotics.hpp"
#include "slabshift/electrostatics.hpp"
#include "slabshift/errors.hpp"

using namespace slabshift;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(ImageBeta, Values) {
  EXPECT_EQ(image_beta(1.0), 0.0);
  EXPECT_DOUBLE_EQ(image_beta(2.0), 0.6);
}

TEST(PhiH, VacuumZero) { EXPECT_EQ(phi_h(0.5, 1.0, 1.0, Slab(1.0, 1.0)), 0.0); }

TEST(PhiH, ThickSlabIsSingleImage) {
  // z, z' measured from the slab centre; with L huge only the m = 0 image survives.
  const double big = 1e7;
  const double z = 0.5 * big + 0.7;
  const double zp = 0.5 * big + 1.1;
  const double beta = image_beta(2.0);
  const double expected = -beta / (4.0 * kPi * std::sqrt(0.3 * 0.3 + 1.8 * 1.8));
  EXPECT_NEAR(phi_h(0.3, z, zp, Slab(2.0, big)) / expected, 1.0, 1e-6);
}

TEST(PhiH, HankelOracle) {
  const double v = phi_h(0.5, 1.0, 1.0, Slab(2.0, 1.0));
  const double o = oracle::hankel_phi_h(0.5, 1.0, 1.0, 1.0, 2.0);
  EXPECT_NEAR(v, o, 1e-8);
  EXPECT_NEAR(v / o, 1.0, 1e-8);
}

TEST(PhiH, HankelOracleRandom) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::uniform_real_distribution<double> un(1.05, 4.0);
  for (int i = 0; i < 10; ++i) {
    const double len = u(rng);
    const double z = 0.5 * len + u(rng);
    const double zp = 0.5 * len + u(rng);
    const double rho = u(rng);
    const double n = un(rng);
    EXPECT_NEAR(phi_h(rho, z, zp, Slab(n, len)), oracle::hankel_phi_h(rho, z, zp, len, n), 1e-8);
  }
}

TEST(PhiH, DomainChecks) {
  EXPECT_THROW(phi_h(0.5, 0.4, 1.0, Slab(2.0, 1.0)), DomainError);
  EXPECT_THROW(phi_h(-0.5, 1.0, 1.0, Slab(2.0, 1.0)), DomainError);
  EXPECT_THROW(phi_h(0.5, 1.0, 1.0, Slab(2.0, kInf)), DomainError);
}

TEST(Kernel, Limits) {
  EXPECT_EQ(image_series_kernel(1.0, 0.0, 0.6), 0.0);
  EXPECT_DOUBLE_EQ(image_series_kernel(2.0, kInf, 0.6), 1.0 / 32.0);
  // beta = 0: only m = 0 term
  EXPECT_NEAR(image_series_kernel(1.0, 1.0, 0.0), 0.25 * (1.0 - 1.0 / 8.0), 1e-16);
}

TEST(Kernel, PartialSumsIncreaseMonotonically) {
  const double full = nonretarded_kernel_quadrature(1.0, 0.3, 0.9).value;
  double prev = 0.0;
  for (std::size_t terms = 1; terms <= 400; ++terms) {
    const double p = image_series_partial(1.0, 0.3, 0.9, terms);
    // strictly increasing while the new term is resolvable in double precision
    const double m = static_cast<double>(terms - 1);
    const double term = std::pow(0.81, m) * 0.25 *
                        (1.0 / std::pow(1.0 + 0.3 * m, 3) - 1.0 / std::pow(1.0 + 0.3 * (m + 1.0), 3));
    if (term > 4e-16 * p) {
      EXPECT_GT(p, prev) << terms;
    } else {
      EXPECT_GE(p, prev) << terms;
    }
    EXPECT_LT(p, full * (1.0 + 1e-12));
    prev = p;
  }
  EXPECT_NEAR(image_series_kernel(1.0, 0.3, 0.9) / full, 1.0, 1e-10);
}

TEST(Kernel, MaxTermsExceeded) {
  ImageSeriesSpec spec;
  spec.max_terms = 10;
  EXPECT_THROW(image_series_kernel(1.0, 1e-3, 0.999, spec), ConvergenceError);
  spec = {};
  spec.tail_tol = 0.0;
  EXPECT_THROW(spec.validate(), DomainError);
}

TEST(Kernel, DomainChecks) {
  EXPECT_THROW(image_series_kernel(0.0, 1.0, 0.5), DomainError);
  EXPECT_THROW(image_series_kernel(1.0, 1.0, 1.0), DomainError);
}

TEST(ImageShift, VacuumZero) {
  EXPECT_EQ(image_series_shift(AtomSpec({Transition(1.0, 1.0, 1.0)}), Slab(1.0, 1.0), 1.0).value, 0.0);
}

TEST(ImageShift, HalfSpace) {
  const AtomSpec atom({Transition(1.0, 0.5, 1.5)});
  const double z = 0.8;
  const double expected = -0.6 * (2.0 * 1.5 + 0.5) / (64.0 * kPi * z * z * z);
  EXPECT_NEAR(image_series_shift(atom, Slab(2.0, kInf), z).value / expected, 1.0, 1e-14);
}

TEST(ImageShift, StrictlyNegative) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int i = 0; i < 30; ++i) {
    const AtomSpec atom({Transition(u(rng), u(rng), u(rng))});
    EXPECT_LT(image_series_shift(atom, Slab(1.0 + u(rng), u(rng)), u(rng)).value, 0.0);
  }
}

TEST(ImageShift, FiniteDifferenceOfPotential) {
  const double len = 1.0;
  const double z_gap = 1.0;
  const Slab slab(2.0, len);
  const double mu_par = 0.8;
  const double mu_perp = 1.3;
  const AtomSpec atom({Transition(1.0, mu_par, mu_perp)});
  const double z0 = 0.5 * len + z_gap;
  auto phi = [&](double rho, double z, double zp) { return phi_h(rho, z, zp, slab); };
  const double fd = oracle::finite_difference_energy(phi, z0, mu_par, mu_perp, 1e-4 * z_gap);
  const double series = image_series_shift(atom, slab, z_gap).value;
  EXPECT_NEAR(fd / series, 1.0, 1e-6);
}
