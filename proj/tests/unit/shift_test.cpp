#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "slabshift/asymptotics.hpp"
#include "slabshift/errors.hpp"
#include "slabshift/shift.hpp"
#include "tensor_product.hpp"

using namespace slabshift;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST(SIntegrals, VacuumIsExactlyZero) {
  const SIntegrals s = s_integrals(ReducedParams(1.0, 1.0, 1.0));
  EXPECT_EQ(s.par.value, 0.0);
  EXPECT_EQ(s.perp.value, 0.0);
  EXPECT_EQ(s.par.err_est, 0.0);
}

TEST(SIntegrals, ZeroThicknessIsExactlyZero) {
  EXPECT_EQ(s_parallel(ReducedParams(1.0, 0.0, 2.0)).value, 0.0);
  EXPECT_EQ(s_perp(ReducedParams(1.0, 0.0, 2.0)).value, 0.0);
}

TEST(SIntegrals, MatchTensorProductOracle) {
  const ReducedParams p(1.0, 1.0, 2.0);
  const SIntegrals s = s_integrals(p);
  const oracle::SPairOracle o = oracle::tensor_product_s(1.0, 1.0, 2.0);
  EXPECT_NEAR(s.par.value / o.par, 1.0, 1e-7);
  EXPECT_NEAR(s.perp.value / o.perp, 1.0, 1e-7);
  EXPECT_LE(s.par.err_est, 1e-8 * s.par.value);
  EXPECT_LE(s.perp.err_est, 1e-8 * s.perp.value);
  // the reported bound holds against the oracle
  EXPECT_LE(std::abs(s.par.value - o.par), 10.0 * s.par.err_est + 1e-13 * o.par);
}

TEST(SIntegrals, OracleSelfConsistent) {
  const oracle::SPairOracle a = oracle::tensor_product_s(0.5, 10.0, 5.0, 1);
  const oracle::SPairOracle b = oracle::tensor_product_s(0.5, 10.0, 5.0, 2);
  EXPECT_NEAR(a.par / b.par, 1.0, 1e-11);
  EXPECT_NEAR(a.perp / b.perp, 1.0, 1e-11);
}

TEST(SIntegrals, WrappersAgree) {
  const ReducedParams p(2.0, 0.3, 1.7);
  const SIntegrals s = s_integrals(p);
  EXPECT_EQ(s_parallel(p).value, s.par.value);
  EXPECT_EQ(s_perp(p).value, s.perp.value);
}

TEST(SIntegrals, BudgetExhaustionIsConvergenceError) {
  QuadratureSpec q;
  q.rel_tol = 1e-15;
  q.max_subdivisions = 3;
  try {
    s_integrals(ReducedParams(1.0, 1.0, 2.0), q);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.best_estimate(), 0.0);
    EXPECT_GT(e.error_bound(), 0.0);
  }
}

TEST(QuadratureSpecTest, Validation) {
  QuadratureSpec q;
  q.rel_tol = 0.0;
  EXPECT_THROW(s_integrals(ReducedParams(1.0, 1.0, 2.0), q), DomainError);
  q = {};
  q.s_cutoff_decades = -1.0;
  EXPECT_THROW(q.validate(), DomainError);
  q = {};
  q.max_subdivisions = 1;
  EXPECT_THROW(q.validate(), DomainError);
}

TEST(WPairTest, VacuumZero) {
  const WPair w = w_pair(ReducedParams(3.0, 2.0, 1.0));
  EXPECT_EQ(w.w_par, 0.0);
  EXPECT_EQ(w.w_z, 0.0);
}

TEST(WPairTest, PerfectMirrorRetardedLimit) {
  const WPair w = w_pair(ReducedParams(50.0, kInf, 1e4));
  EXPECT_NEAR(w.w_par, 1.0, 0.02);
  EXPECT_NEAR(w.w_z, 1.0, 0.02);
}

TEST(WPairTest, FiniteSlabBelowHalfSpace) {
  const WPair w = w_pair(ReducedParams(8.0, 1.0, 2.0));
  const WPair h = halfspace_w(8.0, 2.0);
  EXPECT_GT(w.w_par, 0.0);
  EXPECT_LT(w.w_par, 1.0);
  EXPECT_GT(w.w_z, 0.0);
  EXPECT_LT(w.w_z, 1.0);
  EXPECT_GT(h.w_par, w.w_par);
  EXPECT_GT(h.w_z, w.w_z);
  EXPECT_GE(w.err_est, 0.0);
  EXPECT_TRUE(w.warning.empty());
}

TEST(WPairTest, ScaleIsEightZetaToTheFourth) {
  const ReducedParams p(1.5, 0.7, 2.5);
  const SIntegrals s = s_integrals(p);
  const WPair w = w_pair(p);
  const double z4 = 1.5 * 1.5 * 1.5 * 1.5;
  EXPECT_DOUBLE_EQ(w.w_par, 8.0 * z4 * s.par.value);
  EXPECT_DOUBLE_EQ(w.w_z, 8.0 * z4 * s.perp.value);
}

TEST(WPairTest, SmallZetaWarning) {
  const WPair w = w_pair(ReducedParams(5e-7, 1e-6, 2.0));
  EXPECT_FALSE(w.warning.empty());
  EXPECT_GT(w.w_z, 0.0);
}

TEST(WPairTest, PositiveAndMonotoneInLambda) {
  for (double zeta : {0.3, 3.0}) {
    double prev_par = 0.0;
    double prev_z = 0.0;
    for (double lam : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0, kInf}) {
      const WPair w = w_pair(ReducedParams(zeta, lam, 2.0));
      EXPECT_GT(w.w_par, prev_par) << "zeta=" << zeta << " lambda=" << lam;
      EXPECT_GT(w.w_z, prev_z) << "zeta=" << zeta << " lambda=" << lam;
      prev_par = w.w_par;
      prev_z = w.w_z;
    }
  }
}

TEST(WPairTest, MonotoneInN) {
  for (double zeta : {0.5, 5.0}) {
    double prev_par = 0.0;
    double prev_z = 0.0;
    for (double n : {1.1, 1.5, 2.0, 3.0, 5.0, 10.0}) {
      const WPair w = w_pair(ReducedParams(zeta, 1.0, n));
      EXPECT_GE(w.w_par, prev_par);
      EXPECT_GE(w.w_z, prev_z);
      prev_par = w.w_par;
      prev_z = w.w_z;
    }
  }
}

TEST(WPairTest, LinearForSmallZeta) {
  const double a = w_pair(ReducedParams(1e-3, 1.0, 2.0)).w_z / 1e-3;
  const double b = w_pair(ReducedParams(1e-4, 1.0, 2.0)).w_z / 1e-4;
  EXPECT_NEAR(a / b, 1.0, 0.02);
}

TEST(EnergyShiftTest, VacuumSlabZero) {
  const AtomSpec atom({Transition(1.0, 2.0, 1.0)});
  EXPECT_EQ(energy_shift(atom, Slab(1.0, 1.0), 1.0).value, 0.0);
}

TEST(EnergyShiftTest, MonotoneTowardZeroWithDistance) {
  const AtomSpec atom({Transition(1.0, 2.0, 1.0), Transition(2.5, 0.5, 0.5)});
  const Slab slab(2.0, 0.8);
  double prev = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const double z = std::pow(10.0, -2.0 + 4.0 * i / 19.0);
    const double v = energy_shift(atom, slab, z).value;
    EXPECT_LT(v, 0.0);
    EXPECT_GT(v, prev) << "Z=" << z;
    prev = v;
  }
}

TEST(EnergyShiftTest, ThickSlabMatchesHalfSpace) {
  const AtomSpec atom({Transition(1.0, 2.0, 1.0)});
  const double full = energy_shift(atom, Slab(2.0, 200.0), 1.0).value;
  const double half = halfspace_shift(atom, 2.0, 1.0).value;
  EXPECT_NEAR(full / half, 1.0, 1e-6);
}

TEST(EnergyShiftTest, AgreesWithSIntegralForm) {
  // -(1/2 pi^2) sum E^3 (S_par mu_par^2 + S_perp mu_perp^2)
  const AtomSpec atom({Transition(1.2, 0.7, 0.3), Transition(0.4, 1.0, 2.0)});
  const Slab slab(2.2, 0.9);
  const double z = 1.7;
  double direct = 0.0;
  for (const Transition& tr : atom.transitions()) {
    const SIntegrals s = s_integrals(reduce(slab, tr, z));
    const double e3 = tr.energy() * tr.energy() * tr.energy();
    direct += -e3 * (s.par.value * tr.mu_par_sq() + s.perp.value * tr.mu_perp_sq()) / (2.0 * std::numbers::pi * std::numbers::pi);
  }
  EXPECT_NEAR(energy_shift(atom, slab, z).value / direct, 1.0, 1e-13);
}

TEST(EnergyShiftTest, ReportCarriesW) {
  const AtomSpec atom({Transition(1.0, 2.0, 1.0), Transition(2.0, 1.0, 1.0)});
  const ShiftReport r = energy_shift_report(atom, Slab(2.0, 1.0), 1.0);
  ASSERT_EQ(r.w.size(), 2u);
  EXPECT_EQ(r.w[1].w_z, w_pair(ReducedParams(2.0, 2.0, 2.0)).w_z);
}

TEST(EnergyShiftTest, RejectsBadDistance) {
  const AtomSpec atom({Transition(1.0, 2.0, 1.0)});
  EXPECT_THROW(energy_shift(atom, Slab(2.0, 1.0), 0.0), DomainError);
}
