#include "support.hpp"

#include <gtest/gtest.h>

using namespace polystab;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix a(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) a(i, j++) = v;
    ++i;
  }
  return a;
}

// a0 = (q1 - 2 q2)^2 vanishes only at (2/3, 1/3), which the subdivision never hits.
MatrixPolytope double_root_polytope() { return MatrixPolytope({mat({{0, 1}, {-1, -1}}), mat({{0, -2}, {2, -1}})}); }

GeneratorConfig gen(std::size_t n, std::size_t m, std::uint64_t seed) {
  GeneratorConfig g;
  g.n = n;
  g.m = m;
  g.seed = seed;
  return g;
}

}  // namespace

TEST(StabilityForms, ThreeVertex) {
  StabilityForms f = stability_forms(test::three_vertex_polytope());
  EXPECT_EQ(f.a0, parse_form(test::kThreeVertexA0));
  ASSERT_TRUE(f.delta.has_value());
  EXPECT_EQ(*f.delta, parse_form(test::kThreeVertexDelta2));
  EXPECT_FALSE(stability_forms(MatrixPolytope({mat({{-1}})})).delta.has_value());
}

TEST(CheckPolytope, ThreeVertex) {
  MatrixPolytope p = test::three_vertex_polytope();
  StabilityVerdict v = check_polytope(p);
  EXPECT_EQ(v.status, StabilityStatus::NotStable);
  EXPECT_FALSE(v.unstable_vertex.has_value());
  ASSERT_EQ(v.vertices.size(), 3u);
  for (const auto& vc : v.vertices) EXPECT_TRUE(vc.report.stable());
  ASSERT_TRUE(v.a0.has_value());
  EXPECT_EQ(v.a0->status, PositivityStatus::NotPositive);
  EXPECT_LE(v.a0->depth_reached, 3u);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->form, StabilityForm::A0);
  EXPECT_LE(v.witness->form_value, 0);
  EXPECT_FALSE(routh_hurwitz_stable(p.at(v.witness->point)));
  EXPECT_TRUE(verify_certificate(p, v));
}

TEST(CheckPolytope, SingleStableVertex) {
  MatrixPolytope p({mat({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}})});
  StabilityVerdict v = check_polytope(p);
  EXPECT_EQ(v.status, StabilityStatus::RobustlyStable);
  EXPECT_TRUE(verify_certificate(p, v));
}

TEST(CheckPolytope, UnstableVertexShortCircuits) {
  MatrixPolytope p({mat({{-1}}), mat({{1}})});
  StabilityVerdict v = check_polytope(p);
  EXPECT_EQ(v.status, StabilityStatus::NotStable);
  EXPECT_EQ(v.unstable_vertex, 1u);
  EXPECT_FALSE(v.a0.has_value());
  EXPECT_TRUE(verify_certificate(p, v));
}

TEST(CheckPolytope, OrderOneHasNoDelta) {
  MatrixPolytope p({mat({{-1}}), mat({{-2}})});
  StabilityVerdict v = check_polytope(p);
  EXPECT_EQ(v.status, StabilityStatus::RobustlyStable);
  EXPECT_FALSE(v.delta.has_value());
  EXPECT_TRUE(verify_certificate(p, v));
}

TEST(CheckPolytope, RefutedByBound) {
  MatrixPolytope p = double_root_polytope();
  ASSERT_TRUE(routh_hurwitz_stable(p.vertex(0)));
  ASSERT_TRUE(routh_hurwitz_stable(p.vertex(1)));
  EXPECT_EQ(stability_forms(p).a0, parse_form("x1^2 - 4*x1*x2 + 4*x2^2"));

  EXPECT_EQ(check_polytope(p).status, StabilityStatus::Unresolved);
  CheckOptions o;
  o.positivity.full_bound = true;
  StabilityVerdict v = check_polytope(p, o);
  EXPECT_EQ(v.status, StabilityStatus::NotStable);
  EXPECT_EQ(v.a0->status, PositivityStatus::NotPositiveByBound);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_TRUE(verify_certificate(p, v));
}

TEST(CheckPolytope, ConcurrentFormsAgree) {
  MatrixPolytope p = test::three_vertex_polytope();
  CheckOptions o;
  o.positivity.jobs = 4;
  o.positivity.deterministic = false;
  StabilityVerdict v = check_polytope(p, o);
  EXPECT_EQ(v.status, StabilityStatus::NotStable);
  EXPECT_TRUE(verify_certificate(p, v));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    MatrixPolytope q = generate_polytope(gen(3, 3, seed));
    StabilityVerdict serial = check_polytope(q);
    StabilityVerdict par = check_polytope(q, o);
    EXPECT_EQ(par.status, serial.status) << seed;
    EXPECT_TRUE(verify_certificate(q, par)) << seed;
  }
}

TEST(CheckPolytope, VertexOrderDoesNotMatter) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    MatrixPolytope p = generate_polytope(gen(2 + seed % 2, 3, seed));
    std::vector<RationalMatrix> rev(p.vertices().rbegin(), p.vertices().rend());
    EXPECT_EQ(check_polytope(MatrixPolytope(rev)).status, check_polytope(p).status) << seed;
  }
}

TEST(CheckPolytope, StableVerdictsAreConsistent) {
  int stable = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    MatrixPolytope p = generate_polytope(gen(2, 2 + seed % 2, 100 + seed));
    StabilityVerdict v = check_polytope(p);
    EXPECT_TRUE(verify_certificate(p, v)) << seed;
    if (v.status == StabilityStatus::RobustlyStable) {
      ++stable;
      EXPECT_TRUE(stable_verdict_consistent(p, seed)) << seed;
    }
  }
  EXPECT_GT(stable, 0);
}

TEST(VerifyCertificate, TamperedWitness) {
  MatrixPolytope p = test::three_vertex_polytope();
  StabilityVerdict v = check_polytope(p);
  StabilityVerdict off = v;
  off.witness->point[0] += make_rational(1, 10);
  EXPECT_FALSE(verify_certificate(p, off));
  StabilityVerdict value = v;
  value.witness->form_value = make_rational(1, 10);
  EXPECT_FALSE(verify_certificate(p, value));
  StabilityVerdict status = v;
  status.status = StabilityStatus::RobustlyStable;
  EXPECT_FALSE(verify_certificate(p, status));
}

TEST(VerifyCertificate, TamperedLeaf) {
  MatrixPolytope p({mat({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), mat({{-2, 1, 0}, {0, -2, 1}, {0, 0, -2}})});
  StabilityVerdict v = check_polytope(p);
  ASSERT_EQ(v.status, StabilityStatus::RobustlyStable);
  ASSERT_TRUE(verify_certificate(p, v));
  StabilityVerdict digest = v;
  digest.a0->certificate.leaves.front().digest[0] ^= 1;
  EXPECT_FALSE(verify_certificate(p, digest));

  // Same evidence, but one vertex entry negated: the recomputed leaf changes.
  RationalMatrix other = p.vertex(1);
  other(0, 0) = -other(0, 0);
  EXPECT_FALSE(verify_certificate(MatrixPolytope({p.vertex(0), other}), v));

  StabilityVerdict missing = v;
  missing.delta.reset();
  EXPECT_FALSE(verify_certificate(p, missing));
}
