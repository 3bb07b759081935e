#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "slabshift/errors.hpp"
#include "slabshift/modes.hpp"
#include "slabshift/reflection.hpp"
#include "transfer_matrix.hpp"

using namespace slabshift;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(Snell, VacuumIsIdentity) {
  EXPECT_EQ(snell_kzd(0.7, 1.3, 1.0), Complex(1.3));
  EXPECT_EQ(snell_kz(0.7, 1.3, 1.0), Complex(1.3));
}

TEST(Snell, NormalIncidence) { EXPECT_NEAR(std::abs(snell_kzd(0.0, 1.5, 2.0) - 3.0), 0.0, 1e-15); }

TEST(Snell, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  std::uniform_real_distribution<double> nn(1.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double kp = u(rng);
    const double kz = u(rng);
    const double n = nn(rng);
    EXPECT_LT(rel(snell_kz(kp, snell_kzd(kp, kz, n), n), kz), 1e-12);
    const WaveVectors w = WaveVectors::from_kz(kp, kz, n);
    const Complex lhs = w.k_zd * w.k_zd;
    const Complex rhs = (n * n - 1.0) * kp * kp + n * n * w.k_z * w.k_z;
    EXPECT_LT(rel(lhs, rhs), 1e-12);
  }
}

TEST(Snell, PositiveForRealInputsAndDecayingForEvanescent) {
  const Complex kzd = snell_kzd(1.0, 0.5, 2.0);
  EXPECT_GT(kzd.real(), 0.0);
  EXPECT_EQ(kzd.imag(), 0.0);
  // k_zd below sqrt(n^2-1) k_par gives an evanescent vacuum wave k_z = i kappa.
  const Complex kz = snell_kz(1.0, 1.0, 2.0);
  EXPECT_NEAR(kz.real(), 0.0, 1e-15);
  EXPECT_NEAR(kz.imag(), std::sqrt(2.0) / 2.0, 1e-15);
}

TEST(Fresnel, VacuumVanishes) {
  EXPECT_EQ(fresnel_r(Polarization::te, 0.8, 0.8, 1.0), Complex(0.0));
  EXPECT_EQ(fresnel_r(Polarization::tm, 0.8, 0.8, 1.0), Complex(0.0));
}

TEST(Fresnel, NormalIncidence) {
  const double kz = 1.7;
  const Complex kzd = snell_kzd(0.0, kz, 2.0);
  EXPECT_NEAR(std::abs(fresnel_r(Polarization::te, kz, kzd, 2.0) - (-1.0 / 3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fresnel_r(Polarization::tm, kz, kzd, 2.0) - (1.0 / 3.0)), 0.0, 1e-15);
}

TEST(Fresnel, VanishingDenominatorIsPoleError) {
  EXPECT_THROW(fresnel_r(Polarization::te, 1.0, -1.0, 2.0), PoleError);
  EXPECT_THROW(fresnel_r(Polarization::tm, 1.0, -4.0, 2.0), PoleError);
}

TEST(SlabRT, ZeroThickness) {
  for (Polarization pol : {Polarization::te, Polarization::tm}) {
    EXPECT_LT(std::abs(slab_R(pol, 0.9, 0.4, 0.0, 2.0)), 1e-15);
    EXPECT_LT(std::abs(slab_T(pol, 0.9, 0.4, 0.0, 2.0) - 1.0), 1e-15);
  }
}

TEST(SlabRT, Transparent) {
  for (Polarization pol : {Polarization::te, Polarization::tm}) {
    EXPECT_LT(std::abs(slab_R(pol, 0.9, 0.4, 1.3, 1.0)), 1e-15);
    EXPECT_LT(std::abs(slab_T(pol, 0.9, 0.4, 1.3, 1.0) - 1.0), 1e-15);
  }
}

TEST(SlabRT, EnergyConservationAndTransferMatrix) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  std::uniform_real_distribution<double> nn(1.0, 5.0);
  for (int i = 0; i < 300; ++i) {
    const double kp = u(rng);
    const double kz = u(rng);
    const double len = u(rng);
    const double n = nn(rng);
    for (Polarization pol : {Polarization::te, Polarization::tm}) {
      const Complex r = slab_R(pol, kz, kp, len, n);
      const Complex t = slab_T(pol, kz, kp, len, n);
      EXPECT_NEAR(std::norm(r) + std::norm(t), 1.0, 1e-12);
      const oracle::SlabRT o = oracle::characteristic_matrix_rt(pol == Polarization::tm, kp, kz, len, n);
      EXPECT_LT(std::abs(r - o.r), 1e-11) << "R pol=" << to_string(pol);
      EXPECT_LT(std::abs(t - o.t), 1e-11) << "T pol=" << to_string(pol);
    }
  }
}

TEST(SlabRT, PoleErrorCarriesWaveVector) {
  const Slab slab(2.0, 1.0);
  const auto modes = find_trapped_modes(Polarization::te, Parity::symmetric, 3.0, slab);
  ASSERT_FALSE(modes.empty());
  const Complex kz(0.0, modes[0].kappa);
  try {
    slab_R(Polarization::te, kz, 3.0, 1.0, 2.0);
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.k_z(), kz);
    EXPECT_EQ(e.k_par(), 3.0);
  }
}

TEST(SlabRT, DomainChecks) {
  EXPECT_THROW(slab_R(Polarization::te, 1.0, 1.0, -1.0, 2.0), DomainError);
  EXPECT_THROW(slab_T(Polarization::te, 1.0, 1.0, 1.0, 0.5), DomainError);
}

TEST(RTilde, VacuumIsZero) {
  for (double s : {0.0, 0.1, 3.0})
    for (double t : {0.0, 0.5, 1.0})
      for (double lam : {0.0, 1.0, kInf}) {
        EXPECT_EQ(rtilde(Polarization::te, s, t, lam, 1.0), 0.0);
        EXPECT_EQ(rtilde(Polarization::tm, s, t, lam, 1.0), 0.0);
      }
}

TEST(RTilde, HalfSpaceNormalTm) { EXPECT_NEAR(rtilde(Polarization::tm, 2.0, 0.0, kInf, 2.0), 0.6, 1e-15); }

TEST(RTilde, TeVanishesAtTZero) {
  for (double lam : {0.01, 1.0, 100.0, kInf}) EXPECT_EQ(rtilde(Polarization::te, 1.5, 0.0, lam, 3.0), 0.0);
}

TEST(RTilde, ExactZeroAtZeroLambda) {
  EXPECT_EQ(rtilde(Polarization::tm, 0.0, 0.3, 1.0, 2.0), 0.0);
  EXPECT_EQ(rtilde(Polarization::tm, 1.0, 0.3, 0.0, 2.0), 0.0);
  EXPECT_EQ(rtilde(Polarization::te, 0.0, 0.3, 1.0, 2.0), 0.0);
}

TEST(RTilde, MatchesPlainCothAcrossRegimes) {
  // Direct evaluation where coth is well conditioned, including the series and
  // exponential switch-over points of x coth x.
  for (double big : {2e-4, 0.5, 5.0, 19.0, 21.0, 40.0}) {
    const double n = 2.0;
    const double t = 0.4;
    const double root = std::sqrt(1.0 + (n * n - 1.0) * t * t);
    const double s = 1.0;
    const double lam = big / (s * root);
    const double coth = 1.0 / std::tanh(big);
    const double a = n * n - 1.0;
    const double te = -a * t * t / (2.0 + a * t * t + 2.0 * root * coth);
    const double tm = (n * n * n * n - 1.0 - a * t * t) / (n * n * n * n + 1.0 + a * t * t + 2.0 * n * n * root * coth);
    const RTildePair r = rtilde_pair(s, t, lam, n);
    EXPECT_NEAR(r.te, te, 1e-14);
    EXPECT_NEAR(r.tm, tm, 1e-14);
  }
}

TEST(RTilde, SmallLambdaLimit) {
  // coth L ~ 1/L: R_TM ~ (n^4-1-(n^2-1)t^2) L / (2 n^2 root)
  const double n = 3.0;
  const double t = 0.7;
  const double s = 1e-7;
  const double root = std::sqrt(1.0 + (n * n - 1.0) * t * t);
  const double big = s * root;
  const double expected = (n * n * n * n - 1.0 - (n * n - 1.0) * t * t) * big / (2.0 * n * n * root);
  EXPECT_NEAR(rtilde(Polarization::tm, s, t, 1.0, n) / expected, 1.0, 1e-6);
}

TEST(RTilde, NoOverflowAtHugeLambda) {
  const RTildePair r = rtilde_pair(1e6, 0.5, 1e300, 2.0);
  const RTildePair h = rtilde_pair(1e6, 0.5, kInf, 2.0);
  EXPECT_TRUE(std::isfinite(r.te));
  EXPECT_NEAR(r.tm, h.tm, 1e-15);
}

TEST(RTilde, BoundsAndMonotoneInLambda) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> us(1e-3, 30.0);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  std::uniform_real_distribution<double> ul(1e-3, 50.0);
  std::uniform_real_distribution<double> un(1.0001, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double s = us(rng);
    const double t = ut(rng);
    const double n = un(rng);
    const double l1 = ul(rng);
    const double l2 = l1 * 1.5;
    const RTildePair a = rtilde_pair(s, t, l1, n);
    const RTildePair b = rtilde_pair(s, t, l2, n);
    const RTildePair h = rtilde_pair(s, t, kInf, n);
    EXPECT_GE(a.tm, 0.0);
    EXPECT_LT(a.tm, 1.0);
    EXPECT_LE(a.te, 0.0);
    EXPECT_GT(a.te, -1.0);
    EXPECT_LE(std::abs(a.tm), std::abs(b.tm) * (1.0 + 1e-14));
    EXPECT_LE(std::abs(a.te), std::abs(b.te) * (1.0 + 1e-14));
    EXPECT_LE(std::abs(b.tm), std::abs(h.tm) * (1.0 + 1e-14));
    EXPECT_LE(std::abs(b.te), std::abs(h.te) * (1.0 + 1e-14));
  }
}

TEST(XCothX, Continuity) {
  EXPECT_EQ(x_coth_x(0.0), 1.0);
  for (double x : {1e-4, 20.0}) {
    EXPECT_NEAR(x_coth_x(std::nextafter(x, 0.0)), x_coth_x(std::nextafter(x, 100.0)), 1e-14 * x_coth_x(x));
  }
  EXPECT_TRUE(std::isfinite(x_coth_x(1e308)));
  EXPECT_EQ(x_coth_x(-2.0), x_coth_x(2.0));
}
