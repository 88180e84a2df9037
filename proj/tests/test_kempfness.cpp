#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "charvar/kempfness.hpp"
#include "charvar/tracecoords.hpp"
#include "support/generators.hpp"

using namespace charvar;
using charvar::testing::Gen;

namespace {

const GroupSpec& sl2() {
  static const GroupSpec spec = GroupSpec::parse("SL_R(2)");
  return spec;
}

CMat real2(double a, double b, double c, double d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

Representation single(const CMat& m) { return Representation({GroupElement(sl2(), m)}); }

/// Random element of p for spec: Hermitian part of a random algebra element.
CMat random_p(const GroupSpec& spec, Gen& gen) {
  CMat raw(spec.n(), spec.n());
  for (Eigen::Index i = 0; i < raw.size(); ++i) raw(i) = gen.cnormal();
  return project_to_p(spec, raw);
}

double orbit_norm_along(const Representation& rho, const CMat& A, double s) {
  const CMat h = (s * A).exp();
  const CMat h_inv = (-s * A).exp();
  double total = 0.0;
  for (const auto& g : rho.gens()) total += 0.5 * (h * g.mat() * h_inv).squaredNorm();
  return total;
}

}  // namespace

TEST(KnResidual, Examples) {
  const Representation so2 = sample_representation(GroupSpec::parse("SO(2)"), 3, 1, 1.0);
  EXPECT_LT(kn_residual(so2).norm(), 1e-14);

  const CMat mu = kn_residual(single(real2(1, 1, 0, 1)));
  EXPECT_LT((mu - real2(1, 0, 0, -1)).norm(), 1e-15);

  for (double lambda : {0.1, 2.0, -3.0, 17.0}) {
    EXPECT_LT(kn_residual(single(real2(lambda, 0, 0, 1.0 / lambda))).norm(), 1e-14);
  }
}

TEST(KnResidual, HermitianTracelessReal) {
  for (const char* text : {"SL_R(2)", "SL_R(3)", "U_pq(2,1)", "Sp_R(4)", "SL_C(2)", "SO_pq(2,1)"}) {
    const GroupSpec spec = GroupSpec::parse(text);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Representation rho = sample_representation(spec, 3, seed, 1.0);
      const CMat mu = kn_residual(rho);
      const double scale = 1.0 + mu.norm();
      EXPECT_LT((mu - mu.adjoint()).norm(), 1e-14 * scale) << text;
      EXPECT_LT(std::abs(mu.trace()), 1e-12 * scale) << text;
      if (spec.is_real()) {
        EXPECT_EQ(mu.imag().norm(), 0.0) << text;
      }
    }
  }
}

TEST(KnMembership, Examples) {
  const Representation k = sample_representation(GroupSpec::parse("SU(2)"), 4, 2, 1.0);
  EXPECT_TRUE(kn_membership(k, 1e-10));
  EXPECT_FALSE(kn_membership(single(real2(1, 1, 0, 1)), 1e-10));
  EXPECT_NEAR(kn_residual(single(real2(1, 1, 0, 1))).norm(), std::sqrt(2.0), 1e-15);

  // symmetric [[a,c],[c,b]] with ab - c^2 = 1
  EXPECT_TRUE(kn_membership(single(real2(2, 1, 1, 1)), 1e-12));
}

TEST(KnMembership, RankOneMatchesNormality) {
  Gen gen(31);
  for (int i = 0; i < 10000; ++i) {
    Eigen::Matrix2d m = gen.sl2r();
    if (i % 3 == 0) m = Gen::rotation(gen.angle());
    if (i % 3 == 1) {
      const Eigen::Matrix2d r = Gen::rotation(gen.angle());
      const double l = std::exp(gen.normal());
      m = r * Eigen::Vector2d(l, 1.0 / l).asDiagonal() * r.transpose();
    }
    const Representation rho = single(m.cast<Complex>());
    const double tol = 1e-9;
    const double scale = 1.0 + m.squaredNorm();
    const bool normal = (m * m.transpose() - m.transpose() * m).norm() < tol * scale;
    EXPECT_EQ(kn_membership(rho, tol), normal);
  }
}

TEST(OrbitNorm, Examples) {
  const Representation id({GroupElement::identity(sl2()), GroupElement::identity(sl2()),
                           GroupElement::identity(sl2())});
  EXPECT_DOUBLE_EQ(orbit_norm(id), 3.0);
  EXPECT_DOUBLE_EQ(orbit_norm(single(real2(1, 1, 0, 1))), 1.5);

  const GroupSpec spec = GroupSpec::parse("SL_R(3)");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Representation rho = sample_representation(spec, 2, seed, 1.0);
    const GroupElement k = sample_compact_element(spec, seed);
    EXPECT_NEAR(orbit_norm(rho.conjugated(k.mat())), orbit_norm(rho), 1e-12 * orbit_norm(rho));
  }
}

TEST(DirectionalDerivative, Examples) {
  const LieVector h(sl2(), real2(1, 0, 0, -1), Part::p_part);
  EXPECT_DOUBLE_EQ(directional_derivative(single(real2(1, 1, 0, 1)), h), 2.0);

  Gen gen(3);
  const Representation k = sample_representation(GroupSpec::parse("SO(2)"), 2, 3, 1.0);
  const Representation k_as_sl2({GroupElement(sl2(), k[0].mat()), GroupElement(sl2(), k[1].mat())});
  for (int i = 0; i < 20; ++i) {
    const LieVector a(sl2(), random_p(sl2(), gen), Part::p_part);
    EXPECT_LT(std::abs(directional_derivative(k_as_sl2, a)), 1e-14);
  }

  const LieVector skew(sl2(), real2(0, -1, 1, 0), Part::k_part);
  EXPECT_THROW(directional_derivative(single(real2(1, 1, 0, 1)), skew), ValidationError);
  const LieVector other(GroupSpec::parse("SL_R(3)"), CMat::Zero(3, 3), Part::p_part);
  EXPECT_THROW(directional_derivative(single(real2(1, 1, 0, 1)), other), ValidationError);
}

TEST(DirectionalDerivative, MatchesFiniteDifferences) {
  Gen gen(77);
  for (const char* text : {"SL_R(2)", "SL_R(3)", "Sp_R(4)", "U_pq(2,1)", "SL_C(2)"}) {
    const GroupSpec spec = GroupSpec::parse(text);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Representation rho = sample_representation(spec, 2, seed, 0.8);
      const CMat A = random_p(spec, gen);
      const double value = directional_derivative(rho, LieVector(spec, A, Part::p_part));
      const double h = 1e-5;
      const double fd = (orbit_norm_along(rho, A, h) - orbit_norm_along(rho, A, -h)) / (2 * h);
      EXPECT_LT(std::abs(value - fd), 1e-7 * (1.0 + std::abs(value))) << text << " seed " << seed;
    }
  }
}

TEST(KnFlowParams, Validation) {
  KNFlowParams p;
  EXPECT_NO_THROW(p.validate());
  p.residual_tol = 0.0;
  EXPECT_THROW(p.validate(), ValidationError);
  p = {};
  p.step = -1.0;
  EXPECT_THROW(p.validate(), ValidationError);
  p = {};
  p.backtrack_factor = 1.0;
  EXPECT_THROW(p.validate(), ValidationError);
  p = {};
  p.max_iters = 0;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(KnFlow, CompactTupleStopsImmediately) {
  const Representation k = sample_representation(GroupSpec::parse("SU(2)"), 3, 5, 1.0);
  const KNFlowResult r = kn_flow(k);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.verdict, FlowVerdict::kn_point);
}

TEST(KnFlow, UnipotentApproachesIdentity) {
  KNFlowParams params;
  params.max_iters = 2000;
  const KNFlowResult r = kn_flow(single(real2(1, 1, 0, 1)), params);
  EXPECT_NE(r.verdict, FlowVerdict::max_iters);
  const Eigen::Matrix2d last = r.final[0].mat().real();
  const TraceCoordsR1 tp = trace_pfaffian(last);
  // mu([[1,x],[0,1]]) = diag(x^2, -x^2), so |mu| < tol leaves x below sqrt(tol).
  const double x_bound = std::sqrt(params.residual_tol);
  EXPECT_NEAR(tp.t, 1.0, 1e-12);
  EXPECT_NEAR(tp.p, 0.0, x_bound);
  EXPECT_LT((last - Eigen::Matrix2d::Identity()).norm(), x_bound);
  EXPECT_LT(std::abs(last(0, 1)), 1e-4);
  if (!r.converged) {
    EXPECT_EQ(r.verdict, FlowVerdict::norm_plateau_orbit_not_closed);
  }
}

TEST(KnFlow, RandomPairsConvergeAndPreserveInvariants) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Representation rho = sample_representation(sl2(), 2, seed, 1.0);
    KNFlowParams params;
    params.trace_every = 1;
    const KNFlowResult r = kn_flow(rho, params);
    ASSERT_TRUE(r.converged) << "seed " << seed;
    EXPECT_EQ(r.verdict, FlowVerdict::kn_point);
    EXPECT_LT(kn_residual(r.final).norm(), 1e-8);

    const auto before = trace_words(rho);
    const auto after = trace_words(r.final);
    for (std::size_t i = 0; i < before.size(); ++i) EXPECT_LT(std::abs(before[i] - after[i]), 1e-7);

    const auto& diags = r.trace.diagnostics();
    for (std::size_t i = 1; i < diags.size(); ++i) {
      EXPECT_LE(diags[i].orbit_norm, diags[i - 1].orbit_norm + 1e-12);
    }
  }
}

TEST(KnFlow, KEquivariant) {
  const GroupSpec spec = GroupSpec::parse("SL_R(3)");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Representation rho = sample_representation(spec, 2, seed, 0.8);
    const GroupElement k = sample_compact_element(spec, seed);
    const KNFlowResult a = kn_flow(rho);
    ASSERT_TRUE(a.converged);
    KNFlowParams same_schedule;
    same_schedule.schedule = a.steps;
    const KNFlowResult b = kn_flow(rho.conjugated(k.mat(), k.mat().adjoint()), same_schedule);
    EXPECT_EQ(b.iterations, a.iterations);
    for (int i = 0; i < 2; ++i) {
      const CMat expected = k.mat() * a.final[i].mat() * k.mat().adjoint();
      EXPECT_LT((b.final[i].mat() - expected).norm(), 1e-7) << "seed " << seed;
    }
  }
}

TEST(KnFlow, ScheduleReplayReproducesRun) {
  const Representation rho = sample_representation(sl2(), 3, 8, 1.0);
  const KNFlowResult a = kn_flow(rho);
  ASSERT_TRUE(a.converged);
  EXPECT_EQ(a.steps.size(), static_cast<std::size_t>(a.iterations));
  KNFlowParams replay;
  replay.schedule = a.steps;
  const KNFlowResult b = kn_flow(rho, replay);
  EXPECT_TRUE(b.converged);
  EXPECT_EQ(b.steps, a.steps);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(b.final[i].mat(), a.final[i].mat());

  replay.schedule.resize(2);
  const KNFlowResult short_run = kn_flow(rho, replay);
  EXPECT_EQ(short_run.iterations, 2);
  EXPECT_EQ(short_run.verdict, FlowVerdict::max_iters);
  replay.schedule = {0.1, -1.0};
  EXPECT_THROW(kn_flow(rho, replay), ValidationError);
}

TEST(KnFlow, OtherFamiliesConverge) {
  for (const char* text : {"SL_R(3)", "Sp_R(4)", "U_pq(2,1)", "SL_C(2)", "SO_pq(2,1)"}) {
    const GroupSpec spec = GroupSpec::parse(text);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Representation rho = sample_representation(spec, 3, seed, 0.8);
      const KNFlowResult r = kn_flow(rho);
      EXPECT_TRUE(r.converged) << text << " seed " << seed;
      EXPECT_LT(membership_defect(r.final), 1e-8) << text;
    }
  }
}

TEST(FlowTrace, TimesStrictlyIncreasing) {
  FlowTrace trace;
  const Representation rho = single(real2(1, 0, 0, 1));
  trace.record(0.0, rho);
  EXPECT_THROW(trace.record(0.0, rho), ValidationError);
  trace.record(0.5, rho);
  EXPECT_EQ(trace.size(), 2u);
}

TEST(FlowTrace, CsvFormat) {
  FlowTrace trace;
  trace.record(0.0, single(real2(1, 1, 0, 1)));
  trace.record(1.0, single(real2(1, 0, 0, 1)));
  std::ostringstream os;
  write_trace_csv(os, trace);
  const std::string csv = os.str();
  EXPECT_EQ(csv.rfind("step,t,gen_index,row,col,re,im\n", 0), 0u);
  EXPECT_NE(csv.find("0,0,0,0,1,1,0\n"), std::string::npos);
  EXPECT_NE(csv.find("1,1,0,1,1,1,0\n"), std::string::npos);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 1u + 2u * 4u);

  std::ostringstream diag;
  write_diagnostics_json(diag, trace);
  EXPECT_NE(diag.str().find("orbit_norm"), std::string::npos);
  EXPECT_NE(diag.str().find("kn_residual_norm"), std::string::npos);
}
