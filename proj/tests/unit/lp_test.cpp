#include <gtest/gtest.h>

#include "farkas/lp/linear_program.hpp"
#include "support/brute_force.hpp"
#include "support/random.hpp"

namespace farkas::lp {
namespace {

using testing::BruteStatus;
using testing::Gen;

LinearProgram random_lp(Gen& gen, std::size_t max_vars, std::size_t max_rows, bool with_objective) {
  const std::size_t n = gen.integer(1, static_cast<int>(max_vars));
  const std::size_t rows = gen.integer(1, static_cast<int>(max_rows));
  LpBuilder b(n);
  for (std::size_t r = 0; r < rows; ++r) {
    const int s = gen.integer(0, 5);
    const RowSense sense = s < 3 ? RowSense::kLessEqual : (s < 5 ? RowSense::kGreaterEqual : RowSense::kEqual);
    RatVector row(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!gen.coin(0.3)) row[j] = gen.rational(4, 3);
    }
    b.add_row(std::move(row), sense, gen.rational(4, 3));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (gen.coin(0.3)) b.nonnegative(j);
  }
  if (with_objective) {
    b.set_objective(gen.vector(n, 3, 2), gen.coin() ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize);
  }
  return b.build();
}

TEST(Feasible, OneDimensionalContradiction) {
  LpBuilder b(1);
  b.add_row(RatVector{1}, RowSense::kGreaterEqual, 1);
  b.add_row(RatVector{-1}, RowSense::kGreaterEqual, 0);
  const LinearProgram lp = b.build();
  const LpOutcome out = feasible(lp);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(out));
  const RatVector& y = std::get<Infeasible>(out).farkas;
  EXPECT_EQ(y, (RatVector{1, 1}));
  EXPECT_TRUE(verify_farkas_certificate(lp, y));
  EXPECT_FALSE(verify_farkas_certificate(lp, RatVector{0, 0}));
}

TEST(Feasible, TrivialPoint) {
  LpBuilder b(1);
  b.add_row(RatVector{1}, RowSense::kLessEqual, 0);
  const LpOutcome out = feasible(b.build());
  ASSERT_TRUE(std::holds_alternative<Feasible>(out));
  EXPECT_EQ(std::get<Feasible>(out).x, RatVector{0});
}

TEST(Feasible, DimensionMismatch) {
  LinearProgram lp;
  lp.a = RatMatrix::identity(2);
  lp.b = RatVector{1};
  lp.senses = {RowSense::kLessEqual, RowSense::kLessEqual};
  EXPECT_THROW(feasible(lp), std::invalid_argument);
}

TEST(Feasible, AgreesWithEnumerationOracle) {
  Gen gen(21);
  int infeasible = 0;
  for (int i = 0; i < 400; ++i) {
    const LinearProgram lp = random_lp(gen, 5, 8, false);
    const LpOutcome out = feasible(lp);
    const bool oracle = testing::brute_feasible_point(lp).has_value();
    if (const auto* f = std::get_if<Feasible>(&out)) {
      EXPECT_TRUE(oracle);
      EXPECT_TRUE(satisfies(lp, f->x));
    } else {
      ++infeasible;
      EXPECT_FALSE(oracle);
      EXPECT_TRUE(verify_farkas_certificate(lp, std::get<Infeasible>(out).farkas));
    }
  }
  EXPECT_GT(infeasible, 20);  // the generator must exercise both branches
}

TEST(Optimize, Examples) {
  LpBuilder bounded(1);
  bounded.add_row(RatVector{1}, RowSense::kLessEqual, 3).set_objective(RatVector{1}, ObjectiveSense::kMaximize);
  const LpOutcome a = optimize(bounded.build());
  ASSERT_TRUE(std::holds_alternative<Optimal>(a));
  EXPECT_EQ(std::get<Optimal>(a).x, RatVector{3});
  EXPECT_EQ(std::get<Optimal>(a).value, 3);

  LpBuilder open(1);
  open.add_row(RatVector{1}, RowSense::kGreaterEqual, 0).set_objective(RatVector{1}, ObjectiveSense::kMaximize);
  const LpOutcome b = optimize(open.build());
  ASSERT_TRUE(std::holds_alternative<Unbounded>(b));
  EXPECT_EQ(std::get<Unbounded>(b).ray, RatVector{1});
}

TEST(Optimize, AgreesWithVertexEnumeration) {
  Gen gen(22);
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 400; ++i) {
    const LinearProgram lp = random_lp(gen, 4, 7, true);
    const LpOutcome out = optimize(lp);
    const auto oracle = testing::brute_optimize(lp);
    if (const auto* opt = std::get_if<Optimal>(&out)) {
      ++counts[0];
      ASSERT_EQ(oracle.status, BruteStatus::kOptimal);
      EXPECT_EQ(opt->value, oracle.value);
      EXPECT_TRUE(satisfies(lp, opt->x));
      // Dual multipliers reproduce the value and carry the right signs.
      EXPECT_EQ(dot(opt->duals, lp.b), opt->value);
      const int want = lp.objective_sense == ObjectiveSense::kMaximize ? 1 : -1;
      const RatVector reduced = lp.a.transpose() * opt->duals;
      for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.is_nonnegative(j)) {
          EXPECT_GE(want * (reduced[j] - (*lp.objective)[j]).sign(), 0);
        } else {
          EXPECT_EQ(reduced[j], (*lp.objective)[j]);
        }
      }
      for (std::size_t r = 0; r < lp.num_rows(); ++r) {
        if (lp.senses[r] == RowSense::kLessEqual) EXPECT_GE(want * opt->duals[r].sign(), 0);
        if (lp.senses[r] == RowSense::kGreaterEqual) EXPECT_LE(want * opt->duals[r].sign(), 0);
      }
    } else if (const auto* unb = std::get_if<Unbounded>(&out)) {
      ++counts[1];
      EXPECT_EQ(oracle.status, BruteStatus::kUnbounded);
      EXPECT_TRUE(satisfies(lp, unb->x));
      EXPECT_TRUE(satisfies(lp, unb->x + Rational(1000) * unb->ray));
      const Rational gain = dot(*lp.objective, unb->ray);
      EXPECT_EQ(gain.sign(), lp.objective_sense == ObjectiveSense::kMaximize ? 1 : -1);
    } else {
      ++counts[2];
      EXPECT_EQ(oracle.status, BruteStatus::kInfeasible);
      EXPECT_TRUE(verify_farkas_certificate(lp, std::get<Infeasible>(out).farkas));
    }
  }
  EXPECT_GT(counts[0], 20);
  EXPECT_GT(counts[1], 20);
  EXPECT_GT(counts[2], 20);
}

TEST(Optimize, NonnegativeVariablesNeedNoRows) {
  // max -x1 - x2 with x >= 0 and x1 + x2 >= 1: value -1.
  LpBuilder b(2);
  b.nonnegative(0, 2).add_row(RatVector{1, 1}, RowSense::kGreaterEqual, 1);
  b.set_objective(RatVector{-1, -1}, ObjectiveSense::kMaximize);
  const LinearProgram lp = b.build();
  EXPECT_EQ(lp.num_rows(), 1u);
  const LpOutcome out = optimize(lp);
  ASSERT_TRUE(std::holds_alternative<Optimal>(out));
  EXPECT_EQ(std::get<Optimal>(out).value, -1);

  // x >= 0 and x <= -1 is infeasible; the certificate uses the sign of x.
  LpBuilder c(1);
  c.nonnegative(0).add_row(RatVector{1}, RowSense::kLessEqual, -1);
  const LinearProgram bad = c.build();
  const LpOutcome inf = feasible(bad);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(inf));
  EXPECT_TRUE(verify_farkas_certificate(bad, std::get<Infeasible>(inf).farkas));
}

TEST(Optimize, NoRows) {
  LpBuilder b(2);
  b.nonnegative(1).set_objective(RatVector{0, -1}, ObjectiveSense::kMaximize);
  const LpOutcome out = optimize(b.build());
  ASSERT_TRUE(std::holds_alternative<Optimal>(out));
  EXPECT_EQ(std::get<Optimal>(out).value, 0);

  LpBuilder u(1);
  u.set_objective(RatVector{1}, ObjectiveSense::kMinimize);
  const LpOutcome unb = optimize(u.build());
  ASSERT_TRUE(std::holds_alternative<Unbounded>(unb));
  EXPECT_EQ(std::get<Unbounded>(unb).ray, RatVector{-1});
  EXPECT_TRUE(std::holds_alternative<Feasible>(feasible(LpBuilder(3).build())));
}

TEST(Optimize, RequiresObjective) {
  LpBuilder b(1);
  b.add_row(RatVector{1}, RowSense::kLessEqual, 1);
  EXPECT_THROW(optimize(b.build()), std::invalid_argument);
}

TEST(Optimize, DegenerateCyclingExample) {
  // Beale's classic cycling instance; Bland's rule must terminate.
  LpBuilder b(4);
  b.add_row(RatVector{Rational(1, 4), -8, -1, 9}, RowSense::kLessEqual, 0);
  b.add_row(RatVector{Rational(1, 2), -12, Rational(-1, 2), 3}, RowSense::kLessEqual, 0);
  b.add_row(RatVector{0, 0, 1, 0}, RowSense::kLessEqual, 1);
  for (std::size_t j = 0; j < 4; ++j) b.add_sparse({{j, 1}}, RowSense::kGreaterEqual, 0);
  b.set_objective(RatVector{Rational(3, 4), -20, Rational(1, 2), -6}, ObjectiveSense::kMaximize);
  const LpOutcome out = optimize(b.build());
  ASSERT_TRUE(std::holds_alternative<Optimal>(out));
  EXPECT_EQ(std::get<Optimal>(out).value, Rational(5, 4));
}

TEST(StrictHomogeneous, Examples) {
  const auto a = strict_homogeneous_feasible(RatMatrix{{1}}, RatVector{-1});
  ASSERT_TRUE(std::holds_alternative<StrictFeasible>(a));
  EXPECT_EQ(std::get<StrictFeasible>(a).x, RatVector{-1});

  const auto b = strict_homogeneous_feasible(RatMatrix{{1}}, RatVector{1});
  ASSERT_TRUE(std::holds_alternative<StrictInfeasible>(b));
  EXPECT_EQ(std::get<StrictInfeasible>(b).multipliers, RatVector{1});

  EXPECT_THROW(strict_homogeneous_feasible(RatMatrix{{1, 2}}, RatVector{1}), std::invalid_argument);
}

TEST(StrictHomogeneous, ExactlyOneBranchCrossCheckedByDuality) {
  Gen gen(23);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = gen.integer(1, 4);
    const RatMatrix rows = gen.sparse_matrix(gen.integer(1, 4), n, 0.3);
    const RatVector target = gen.vector(n);
    const auto out = strict_homogeneous_feasible(rows, target);

    // Independent route: is target in the cone of the rows?
    LpBuilder cone(rows.rows());
    for (std::size_t j = 0; j < n; ++j) cone.add_row(rows.col(j), RowSense::kEqual, target[j]);
    for (std::size_t r = 0; r < rows.rows(); ++r) cone.add_sparse({{r, 1}}, RowSense::kGreaterEqual, 0);
    const bool in_cone = std::holds_alternative<Feasible>(feasible(cone.build()));

    if (const auto* f = std::get_if<StrictFeasible>(&out)) {
      EXPECT_FALSE(in_cone);
      EXPECT_TRUE(leq(rows * f->x, RatVector::zeros(rows.rows())));
      EXPECT_GE(dot(target, f->x), 1);
    } else {
      EXPECT_TRUE(in_cone);
      const RatVector& alpha = std::get<StrictInfeasible>(out).multipliers;
      EXPECT_TRUE(leq(RatVector::zeros(alpha.dim()), alpha));
      EXPECT_EQ(rows.transpose() * alpha, target);
    }
  }
}

TEST(FarkasCertificate, MutationsAreRejected) {
  Gen gen(24);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    // Free columns only: with sign-constrained columns a perturbed weight can stay valid.
    LinearProgram lp = random_lp(gen, 4, 7, false);
    lp.nonnegative.clear();
    const LpOutcome out = feasible(lp);
    const auto* inf = std::get_if<Infeasible>(&out);
    if (!inf) continue;
    ++checked;
    EXPECT_TRUE(verify_farkas_certificate(lp, inf->farkas));
    EXPECT_FALSE(verify_farkas_certificate(lp, RatVector::zeros(lp.num_rows())));
    // Perturbing one weight breaks y^T A = 0 unless that row is zero.
    const std::size_t k = gen.integer(0, static_cast<int>(lp.num_rows()) - 1);
    if (lp.a.row(k).is_zero()) continue;
    RatVector mutated = inf->farkas;
    mutated[k] += 1;
    EXPECT_FALSE(verify_farkas_certificate(lp, mutated));
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace farkas::lp
