#include <gtest/gtest.h>

#include "farkas/lp/linear_program.hpp"
#include "farkas/scalar/scalar.hpp"
#include "support/brute_force.hpp"
#include "support/random.hpp"

namespace farkas {
namespace {

using testing::BruteStatus;
using testing::Gen;

bool nonneg(const RatVector& v) {
  for (const auto& e : v) {
    if (e.sign() < 0) return false;
  }
  return true;
}

RatVector combine(const RatVector& alpha, const RatMatrix& rows, std::size_t n) {
  RatVector out(n);
  for (std::size_t k = 0; k < rows.rows(); ++k) out += alpha[k] * rows.row(k);
  return out;
}

PolyhedralSublinear sublinear(std::initializer_list<std::initializer_list<Rational>> gens) {
  return PolyhedralSublinear{RatMatrix(gens)};
}

TEST(SingleConsequence, Examples) {
  auto a = single_consequence(RatVector{1, 0}, RatVector{2, 0});
  ASSERT_TRUE(std::holds_alternative<ScaleDominance>(a));
  EXPECT_EQ(std::get<ScaleDominance>(a).alpha, 2);

  auto b = single_consequence(RatVector{0, 0}, RatVector{0, 0});
  ASSERT_TRUE(std::holds_alternative<ScaleDominance>(b));
  EXPECT_EQ(std::get<ScaleDominance>(b).alpha, 0);

  auto c = single_consequence(RatVector{1, 0}, RatVector{0, 1});
  ASSERT_TRUE(std::holds_alternative<Witness>(c));
  EXPECT_EQ(std::get<Witness>(c).x, (RatVector{0, 1}));

  EXPECT_THROW(single_consequence(RatVector{1}, RatVector{1, 2}), std::invalid_argument);
}

TEST(SingleConsequence, DegenerateChainAndRandom) {
  Gen gen(41);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = gen.integer(1, 4);
    RatVector f = gen.coin(0.2) ? RatVector(n) : gen.vector(n);
    RatVector g = gen.coin(0.3) ? gen.rational() * f : gen.vector(n);
    if (gen.coin(0.1)) g = RatVector(n);
    const auto out = single_consequence(f, g);
    if (g.is_zero()) {
      ASSERT_TRUE(std::holds_alternative<ScaleDominance>(out));
      EXPECT_EQ(std::get<ScaleDominance>(out).alpha, 0);
    } else if (f.is_zero()) {
      EXPECT_TRUE(std::holds_alternative<Witness>(out));
    }
    if (const auto* d = std::get_if<ScaleDominance>(&out)) {
      EXPECT_GE(d->alpha, 0);
      EXPECT_EQ(g, d->alpha * f);
    } else {
      const RatVector& x = std::get<Witness>(out).x;
      EXPECT_LE(dot(f, x), 0);
      EXPECT_GT(dot(g, x), 0);
    }
  }
}

TEST(HomogeneousConsequence, Examples) {
  ScalarSystem sys{RatMatrix{{1, 0}, {0, 1}}, RatVector{1, 1}, {}, {}};
  auto a = homogeneous_consequence(sys);
  ASSERT_TRUE(std::holds_alternative<Dominance>(a));
  EXPECT_EQ(std::get<Dominance>(a).alpha, (RatVector{1, 1}));

  sys.g = RatVector{1, -1};
  auto b = homogeneous_consequence(sys);
  ASSERT_TRUE(std::holds_alternative<Witness>(b));
  const RatVector& x = std::get<Witness>(b).x;
  EXPECT_TRUE(leq(sys.f_rows * x, RatVector{0, 0}));
  EXPECT_GE(dot(sys.g, x), 1);

  sys.g = RatVector{0, 0};
  auto c = homogeneous_consequence(sys);
  ASSERT_TRUE(std::holds_alternative<Dominance>(c));
  EXPECT_EQ(std::get<Dominance>(c).alpha, (RatVector{0, 0}));
}

TEST(ScalarAlternative, Examples) {
  auto a = scalar_alternative({RatMatrix{{1}}, RatVector{1}, {}, {}});
  ASSERT_TRUE(std::holds_alternative<Branch2>(a));
  EXPECT_EQ(std::get<Branch2>(a).alpha, RatVector{1});
  auto b = scalar_alternative({RatMatrix{{1}}, RatVector{-1}, {}, {}});
  ASSERT_TRUE(std::holds_alternative<Branch1>(b));
  EXPECT_EQ(std::get<Branch1>(b).x, RatVector{-1});
}

TEST(ScalarAlternative, DichotomyAgainstConeOracle) {
  Gen gen(42);
  int witnesses = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = gen.integer(1, 3);
    const std::size_t count = gen.integer(0, 4);
    ScalarSystem sys{gen.sparse_matrix(count, n, 0.3), gen.vector(n), {}, {}};
    if (count == 0) sys.f_rows = RatMatrix(0, n);
    if (gen.coin(0.3) && count > 0) sys.g = combine(gen.nonnegative_vector(count), sys.f_rows, n);
    const auto out = scalar_alternative(sys);
    const bool implied = testing::cone_implies(sys.f_rows, sys.g);
    if (const auto* b2 = std::get_if<Branch2>(&out)) {
      EXPECT_TRUE(implied);
      EXPECT_TRUE(nonneg(b2->alpha));
      EXPECT_EQ(combine(b2->alpha, sys.f_rows, n), sys.g);
    } else {
      ++witnesses;
      EXPECT_FALSE(implied);
      const RatVector& x = std::get<Branch1>(out).x;
      EXPECT_TRUE(leq(sys.f_rows * x, RatVector(count)));
      EXPECT_GE(dot(sys.g, x), 1);
    }
  }
  EXPECT_GT(witnesses, 100);
  EXPECT_LT(witnesses, 900);
}

TEST(HomogeneousConsequence, ScalingEquivariance) {
  Gen gen(43);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen.integer(1, 3), count = gen.integer(1, 3);
    ScalarSystem sys{gen.matrix(count, n), gen.vector(n), {}, {}};
    if (gen.coin()) sys.g = combine(gen.nonnegative_vector(count), sys.f_rows, n);
    const auto before = homogeneous_consequence(sys);

    const std::size_t k = gen.integer(0, static_cast<int>(count) - 1);
    const Rational lambda(gen.integer(1, 5), gen.integer(1, 4));
    ScalarSystem scaled = sys;
    scaled.f_rows.set_row(k, lambda * sys.f_rows.row(k));
    const auto after = homogeneous_consequence(scaled);
    ASSERT_EQ(before.index(), after.index());
    if (const auto* d = std::get_if<Dominance>(&before)) {
      RatVector alpha = d->alpha;
      alpha[k] /= lambda;
      EXPECT_EQ(combine(alpha, scaled.f_rows, n), scaled.g);
    }
  }
}

TEST(Factorize, Examples) {
  auto a = factorize(RatMatrix{{1, 0}}, RatMatrix{{2, 0}});
  ASSERT_TRUE(std::holds_alternative<Factor>(a));
  EXPECT_EQ(std::get<Factor>(a).x, RatMatrix{{2}});

  const RatMatrix b{{1, 2}, {3, 4}, {5, 6}};
  auto c = factorize(RatMatrix::identity(2), b);
  ASSERT_TRUE(std::holds_alternative<Factor>(c));
  EXPECT_EQ(std::get<Factor>(c).x, b);

  auto d = factorize(RatMatrix{{1, 0}}, RatMatrix{{0, 1}});
  ASSERT_TRUE(std::holds_alternative<NoFactor>(d));
  EXPECT_EQ(std::get<NoFactor>(d).x, (RatVector{0, 1}));

  EXPECT_THROW(factorize(RatMatrix{{1}}, RatMatrix{{1, 2}}), std::invalid_argument);
}

TEST(Factorize, RandomAgainstKernelInclusion) {
  Gen gen(44);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen.integer(1, 4);
    const RatMatrix a = gen.sparse_matrix(gen.integer(1, 3), n, 0.4);
    const RatMatrix b = gen.coin() ? gen.matrix(gen.integer(1, 3), a.rows()) * a : gen.matrix(gen.integer(1, 3), n);
    const auto out = factorize(a, b);
    if (const auto* f = std::get_if<Factor>(&out)) {
      EXPECT_EQ(f->x * a, b);
    } else {
      const RatVector& x = std::get<NoFactor>(out).x;
      EXPECT_TRUE((a * x).is_zero());
      EXPECT_FALSE((b * x).is_zero());
    }
  }
}

TEST(PositiveFactorize, Examples) {
  auto a = positive_factorize(RatMatrix::identity(2), RatVector{1, 1});
  ASSERT_TRUE(std::holds_alternative<PositiveFactor>(a));
  EXPECT_EQ(std::get<PositiveFactor>(a).x, (RatVector{1, 1}));

  auto b = positive_factorize(RatMatrix::identity(2), RatVector{-1, 0});
  ASSERT_TRUE(std::holds_alternative<Witness>(b));
  const RatVector& x = std::get<Witness>(b).x;
  EXPECT_TRUE(leq(x, RatVector{0, 0}));
  EXPECT_GE(-x[0], 1);

  // A = [[1],[-1]] maps onto the diagonal only: A x <= -e_0 forces x <= -1 and x >= 0.
  try {
    positive_factorize(RatMatrix{{1}, {-1}}, RatVector{1});
    ADD_FAILURE() << "expected HypothesisFailed";
  } catch (const HypothesisFailed& e) {
    EXPECT_EQ(e.index(), 0u);
  }
}

TEST(PositiveFactorize, AgreesWithHomogeneousConsequence) {
  Gen gen(45);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = gen.integer(1, 4);
    const std::size_t s = gen.integer(1, static_cast<int>(n));
    const RatMatrix a = gen.matrix(s, n);
    const RatVector b = gen.coin() ? combine(gen.nonnegative_vector(s), a, n) : gen.vector(n);
    try {
      const auto out = positive_factorize(a, b);
      ++checked;
      const auto ref = homogeneous_consequence({a, b, {}, {}});
      EXPECT_EQ(out.index(), ref.index());
      if (const auto* f = std::get_if<PositiveFactor>(&out)) {
        EXPECT_TRUE(nonneg(f->x));
        EXPECT_EQ(combine(f->x, a, n), b);
      }
    } catch (const HypothesisFailed&) {
      // Only rank-deficient draws can fail the hypothesis.
      EXPECT_LT(testing::minor_rank(a), s);
    }
  }
  EXPECT_GT(checked, 250);
}

TEST(InhomogeneousScalar, Examples) {
  ScalarSystem sys{RatMatrix{{1}}, RatVector{1}, RatVector{1}, Rational(2)};
  auto a = inhomogeneous_scalar(sys);
  ASSERT_TRUE(std::holds_alternative<Dominance>(a));
  EXPECT_EQ(std::get<Dominance>(a).alpha, RatVector{1});

  sys.v = Rational(1, 2);
  auto b = inhomogeneous_scalar(sys);
  ASSERT_TRUE(std::holds_alternative<Witness>(b));
  const RatVector& x = std::get<Witness>(b).x;
  EXPECT_LE(x[0], 1);
  EXPECT_GT(x[0], Rational(1, 2));

  ScalarSystem bad{RatMatrix{{1}, {-1}}, RatVector{1}, RatVector{-1, -1}, Rational(0)};
  auto c = inhomogeneous_scalar(bad);
  ASSERT_TRUE(std::holds_alternative<Inconsistent>(c));
  EXPECT_TRUE(proves_empty(std::get<Inconsistent>(c)));
}

TEST(InhomogeneousScalar, AgreesWithVertexEnumeration) {
  Gen gen(46);
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = gen.integer(1, 3), count = gen.integer(1, 4);
    ScalarSystem sys{gen.matrix(count, n), gen.vector(n), gen.vector(count), gen.rational()};
    if (gen.coin(0.4)) sys.g = combine(gen.nonnegative_vector(count), sys.f_rows, n);
    const auto out = inhomogeneous_scalar(sys);

    lp::LpBuilder b(n);
    for (std::size_t k = 0; k < count; ++k) b.add_row(sys.f_rows.row(k), lp::RowSense::kLessEqual, (*sys.u)[k]);
    b.set_objective(sys.g, lp::ObjectiveSense::kMaximize);
    const auto oracle = testing::brute_optimize(b.build());

    if (const auto* d = std::get_if<Dominance>(&out)) {
      ++counts[0];
      ASSERT_EQ(oracle.status, BruteStatus::kOptimal);
      EXPECT_LE(oracle.value, *sys.v);
      EXPECT_TRUE(nonneg(d->alpha));
      EXPECT_EQ(combine(d->alpha, sys.f_rows, n), sys.g);
      EXPECT_LE(dot(d->alpha, *sys.u), *sys.v);
    } else if (const auto* w = std::get_if<Witness>(&out)) {
      ++counts[1];
      EXPECT_TRUE(oracle.status == BruteStatus::kUnbounded ||
                  (oracle.status == BruteStatus::kOptimal && oracle.value > *sys.v));
      EXPECT_TRUE(leq(sys.f_rows * w->x, *sys.u));
      EXPECT_GT(dot(sys.g, w->x), *sys.v);
    } else {
      ++counts[2];
      EXPECT_EQ(oracle.status, BruteStatus::kInfeasible);
      EXPECT_TRUE(proves_empty(std::get<Inconsistent>(out)));
    }
  }
  for (int c : counts) EXPECT_GT(c, 20);
}

// Minimum of p over {p_k <= u_k} by vertex enumeration of the epigraph.
testing::BruteOptimum brute_sublinear_min(const std::vector<PolyhedralSublinear>& p_list, const RatVector& u,
                                          const PolyhedralSublinear& p) {
  const std::size_t n = p.dim();
  lp::LpBuilder b(n + 1);
  for (std::size_t j = 0; j < p.generators.rows(); ++j) {
    RatVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = p.generators(j, i);
    row[n] = -1;
    b.add_row(std::move(row), lp::RowSense::kLessEqual, 0);
  }
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    for (std::size_t j = 0; j < p_list[k].generators.rows(); ++j) {
      RatVector row(n + 1);
      for (std::size_t i = 0; i < n; ++i) row[i] = p_list[k].generators(j, i);
      b.add_row(std::move(row), lp::RowSense::kLessEqual, u[k]);
    }
  }
  b.set_objective(RatVector::unit(n + 1, n), lp::ObjectiveSense::kMinimize);
  return testing::brute_optimize(b.build());
}

// 0 in conv(p) + sum alpha_k conv(p_k), by Caratheodory over the Minkowski vertices.
bool nonnegative_sum(const std::vector<PolyhedralSublinear>& p_list, const RatVector& alpha,
                     const PolyhedralSublinear& p) {
  std::vector<RatVector> points;
  for (std::size_t j = 0; j < p.generators.rows(); ++j) points.push_back(p.generators.row(j));
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    std::vector<RatVector> next;
    for (const auto& base : points) {
      for (std::size_t j = 0; j < p_list[k].generators.rows(); ++j) {
        next.push_back(base + alpha[k] * p_list[k].generators.row(j));
      }
    }
    points = std::move(next);
  }
  return testing::zero_in_hull(points);
}

TEST(SublinearConsequence, Examples) {
  const auto abs = sublinear({{1}, {-1}});
  const auto ident = sublinear({{1}});

  auto a = sublinear_consequence({abs}, RatVector{1}, ident, Rational(-1));
  ASSERT_TRUE(std::holds_alternative<SublinearDominance>(a));
  EXPECT_EQ(std::get<SublinearDominance>(a).alpha, RatVector{1});

  auto b = sublinear_consequence({abs}, RatVector{1}, ident, Rational(0));
  ASSERT_TRUE(std::holds_alternative<Witness>(b));
  const RatVector& x = std::get<Witness>(b).x;
  EXPECT_LE(abs(x), 1);
  EXPECT_LT(ident(x), 0);

  auto c = sublinear_consequence({abs}, RatVector{1}, abs, Rational(0));
  ASSERT_TRUE(std::holds_alternative<SublinearDominance>(c));
  EXPECT_EQ(std::get<SublinearDominance>(c).alpha, RatVector{0});

  auto d = sublinear_consequence({abs}, RatVector{-1}, abs, Rational(0));
  ASSERT_TRUE(std::holds_alternative<Inconsistent>(d));
  EXPECT_TRUE(proves_empty(std::get<Inconsistent>(d)));
}

TEST(SublinearConsequence, AgreesWithEpigraphEnumeration) {
  Gen gen(47);
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = gen.integer(1, 2);
    const std::size_t count = gen.integer(0, 2);
    std::vector<PolyhedralSublinear> p_list;
    for (std::size_t k = 0; k < count; ++k) p_list.push_back({gen.matrix(gen.integer(1, 3), n)});
    const PolyhedralSublinear p{gen.matrix(gen.integer(1, 3), n)};
    const RatVector u = gen.vector(count);
    const Rational v = gen.rational();

    const auto out = sublinear_consequence(p_list, u, p, v);
    const auto oracle = brute_sublinear_min(p_list, u, p);
    if (const auto* d = std::get_if<SublinearDominance>(&out)) {
      ++counts[0];
      ASSERT_EQ(oracle.status, BruteStatus::kOptimal);
      EXPECT_GE(oracle.value, v);
      EXPECT_TRUE(nonneg(d->alpha));
      EXPECT_LE(dot(d->alpha, u), -v);
      EXPECT_TRUE(nonnegative_sum(p_list, d->alpha, p));
    } else if (const auto* w = std::get_if<Witness>(&out)) {
      ++counts[1];
      EXPECT_TRUE(oracle.status == BruteStatus::kUnbounded || oracle.value < v);
      EXPECT_LT(p(w->x), v);
      for (std::size_t k = 0; k < count; ++k) EXPECT_LE(p_list[k](w->x), u[k]);
    } else {
      ++counts[2];
      EXPECT_EQ(oracle.status, BruteStatus::kInfeasible);
      EXPECT_TRUE(proves_empty(std::get<Inconsistent>(out)));
    }
  }
  for (int c : counts) EXPECT_GT(c, 15);
}

TEST(LagrangeScalar, Examples) {
  const auto abs = sublinear({{1}, {-1}});
  const auto ident = sublinear({{1}});

  const auto a = lagrange_scalar({abs}, RatVector{1}, ident);
  EXPECT_EQ(a.primal.str(), "-1");
  EXPECT_EQ(a.multipliers, RatVector{1});
  EXPECT_EQ(a.dual, a.primal);

  const auto b = lagrange_scalar({abs}, RatVector{1}, abs);
  EXPECT_EQ(b.primal.str(), "0");
  EXPECT_EQ(b.multipliers, RatVector{0});
  EXPECT_EQ(b.dual, b.primal);

  const auto c = lagrange_scalar({sublinear({{1, 0}})}, RatVector{1}, sublinear({{1, 0}}));
  EXPECT_TRUE(c.primal.is_minus_infinity());
  EXPECT_TRUE(c.dual.is_minus_infinity());

  EXPECT_THROW(lagrange_scalar({abs}, RatVector{-1}, ident), EmptyFeasible);
}

TEST(LagrangeScalar, StrongDualityOnRandomData) {
  Gen gen(48);
  int unbounded = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen.integer(1, 3);
    const std::size_t count = gen.integer(1, 3);
    std::vector<PolyhedralSublinear> p_list;
    for (std::size_t k = 0; k < count; ++k) p_list.push_back({gen.matrix(gen.integer(1, 3), n)});
    const PolyhedralSublinear p{gen.matrix(gen.integer(1, 3), n)};
    const RatVector u = gen.nonnegative_vector(count);
    const auto r = lagrange_scalar(p_list, u, p);
    EXPECT_EQ(r.primal, r.dual);
    EXPECT_TRUE(nonneg(r.multipliers));
    if (r.primal.is_minus_infinity()) {
      ++unbounded;
      continue;
    }
    EXPECT_EQ(p(*r.minimizer), *r.primal.value);
    // The multipliers certify p >= primal on the constraint set.
    auto check = sublinear_consequence(p_list, u, p, *r.primal.value);
    EXPECT_TRUE(std::holds_alternative<SublinearDominance>(check));
    std::size_t vertices = p.generators.rows();
    for (const auto& pk : p_list) vertices *= pk.generators.rows();
    if (vertices <= 27) EXPECT_TRUE(nonnegative_sum(p_list, r.multipliers, p));
  }
  EXPECT_GT(unbounded, 10);
}

}  // namespace
}  // namespace farkas
