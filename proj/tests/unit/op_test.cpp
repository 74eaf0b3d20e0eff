#include <gtest/gtest.h>

#include "farkas/op/operator_farkas.hpp"
#include "support/mask_oracle.hpp"
#include "support/random.hpp"

namespace farkas {
namespace {

using testing::Gen;

OperatorSystem random_homogeneous(Gen& gen, std::size_t m, std::size_t n, std::size_t count) {
  OperatorSystem sys;
  for (std::size_t k = 0; k < count; ++k) sys.a_list.push_back(gen.sparse_matrix(m, n, 0.3));
  if (gen.coin(0.5)) {
    // Half of the instances are built to hold at some strata.
    sys.b = RatMatrix(m, n);
    for (std::size_t k = 0; k < count; ++k) sys.b += Orthomorphism(gen.nonnegative_vector(m)).apply(sys.a_list[k]);
    for (std::size_t i = 0; i < m; ++i) {
      if (gen.coin(0.2)) sys.b.set_row(i, gen.vector(n));
    }
  } else {
    sys.b = gen.matrix(m, n);
  }
  return sys;
}

OperatorSystem random_inhomogeneous(Gen& gen, std::size_t m, std::size_t n, std::size_t count) {
  OperatorSystem sys = random_homogeneous(gen, m, n, count);
  sys.u_list.emplace();
  for (std::size_t k = 0; k < count; ++k) sys.u_list->push_back(gen.vector(m));
  sys.v = gen.vector(m);
  return sys;
}

SublinearOperator random_sublinear(Gen& gen, std::size_t m, std::size_t n) {
  SublinearOperator p;
  for (std::size_t i = 0; i < m; ++i) p.strata.push_back({gen.matrix(gen.integer(1, 2), n, 3, 2)});
  return p;
}

TEST(OperatorConsequence, Examples) {
  OperatorSystem diag{{RatMatrix{{1, 0}, {0, 1}}}, RatMatrix{{2, 0}, {0, 3}}, {}, {}};
  auto a = operator_consequence(diag);
  ASSERT_TRUE(std::holds_alternative<OrthoCertificate>(a));
  EXPECT_EQ(std::get<OrthoCertificate>(a).alphas[0].diag(), (RatVector{2, 3}));

  OperatorSystem zero{{RatMatrix{{1, 2}, {3, 4}}, RatMatrix{{0, 1}, {1, 0}}}, RatMatrix(2, 2), {}, {}};
  auto b = operator_consequence(zero);
  ASSERT_TRUE(std::holds_alternative<OrthoCertificate>(b));
  for (const auto& alpha : std::get<OrthoCertificate>(b).alphas) EXPECT_TRUE(alpha.diag().is_zero());

  // Stratum 0 holds (B_0 = A_0), stratum 1 does not.
  OperatorSystem split{{RatMatrix{{1, 0}, {1, 0}}}, RatMatrix{{1, 0}, {0, 1}}, {}, {}};
  auto c = operator_consequence(split);
  ASSERT_TRUE(std::holds_alternative<StratumWitness>(c));
  const auto& w = std::get<StratumWitness>(c);
  EXPECT_EQ(w.coordinate, 1u);
  EXPECT_EQ(w.mask_b, Projection::singleton(2, 1));
  EXPECT_EQ(w.mask_b_prime, w.mask_b);
  EXPECT_TRUE(verify_witness(split, w));
}

TEST(OperatorAlternative, NegatedIdentityFailsAtCoordinateZero) {
  OperatorSystem sys{{RatMatrix{{1, 0}, {0, 1}}}, RatMatrix{{-1, 0}, {0, -1}}, {}, {}};
  auto out = operator_alternative(sys);
  ASSERT_EQ(out.index(), 0u);
  const auto& w = std::get<StratumWitness>(out);
  EXPECT_EQ(w.coordinate, 0u);
  EXPECT_EQ(w.x[0].sign(), -1);
  EXPECT_TRUE(verify_witness(sys, w));
}

TEST(OperatorAlternative, SingleStratumMatchesScalar) {
  Gen gen(61);
  for (int i = 0; i < 200; ++i) {
    const OperatorSystem sys = random_homogeneous(gen, 1, gen.integer(1, 4), gen.integer(0, 4));
    const auto op = operator_alternative(sys);
    const auto scalar = scalar_alternative(sys.stratum(0));
    EXPECT_EQ(op.index(), scalar.index());
  }
}

TEST(OperatorAlternative, AgreesWithAllMasks) {
  Gen gen(62);
  int holds = 0;
  for (int i = 0; i < 200; ++i) {
    const OperatorSystem sys = random_homogeneous(gen, gen.integer(1, 3), gen.integer(1, 3), gen.integer(1, 3));
    const auto out = operator_alternative(sys);
    if (const auto* cert = std::get_if<OrthoCertificate>(&out)) {
      ++holds;
      EXPECT_TRUE(verify_certificate(sys, *cert));
      EXPECT_TRUE(testing::homogeneous_all_masks(sys));
    } else {
      EXPECT_TRUE(verify_witness(sys, std::get<StratumWitness>(out)));
      EXPECT_FALSE(testing::homogeneous_all_masks(sys));
    }
  }
  EXPECT_GT(holds, 20);
  EXPECT_LT(holds, 180);
}

TEST(OperatorAlternative, CertificatesCommuteWithMasks) {
  Gen gen(63);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = gen.integer(1, 4), n = gen.integer(1, 4);
    OperatorSystem sys = random_homogeneous(gen, m, n, gen.integer(1, 3));
    const auto out = operator_consequence(sys);
    const auto* cert = std::get_if<OrthoCertificate>(&out);
    if (cert == nullptr) continue;
    const RatVector x = gen.vector(n);
    for (const auto& b : all_masks(m)) {
      RatVector lhs(m), rhs(m);
      for (std::size_t k = 0; k < sys.a_list.size(); ++k) {
        lhs += cert->alphas[k].apply(sys.a_list[k] * x);
        rhs += cert->alphas[k].apply(masked_apply(b, sys.a_list[k], x));
      }
      EXPECT_EQ(b.apply(lhs), rhs);
    }
  }
}

TEST(OperatorAlternative, ParallelRunsMatchSerial) {
  Gen gen(64);
  for (int i = 0; i < 50; ++i) {
    const OperatorSystem sys = random_homogeneous(gen, 4, 3, 3);
    const auto serial = operator_consequence(sys, SolveOptions{.jobs = 1});
    const auto parallel = operator_consequence(sys, SolveOptions{.jobs = 4});
    ASSERT_EQ(serial.index(), parallel.index());
    if (serial.index() == 0) {
      for (std::size_t k = 0; k < sys.a_list.size(); ++k) {
        EXPECT_EQ(std::get<0>(serial).alphas[k], std::get<0>(parallel).alphas[k]);
      }
    } else {
      EXPECT_EQ(std::get<1>(serial).coordinate, std::get<1>(parallel).coordinate);
      EXPECT_EQ(std::get<1>(serial).x, std::get<1>(parallel).x);
    }
  }
}

TEST(OperatorSystem, RejectsBadShapes) {
  OperatorSystem sys{{RatMatrix(2, 3)}, RatMatrix(2, 2), {}, {}};
  EXPECT_THROW(operator_consequence(sys), std::invalid_argument);
  OperatorSystem inh{{RatMatrix(2, 2)}, RatMatrix(2, 2), std::vector<RatVector>{RatVector(2)}, RatVector(2)};
  EXPECT_THROW(operator_consequence(inh), std::invalid_argument);
  inh.v = RatVector(3);
  EXPECT_THROW(inhomogeneous_consequence(inh), std::invalid_argument);
}

TEST(Reconstruct, Examples) {
  auto a = reconstruct(RatMatrix{{1}}, RatMatrix{{-2}});
  ASSERT_TRUE(std::holds_alternative<Proportional>(a));
  const auto& p = std::get<Proportional>(a);
  EXPECT_EQ(p.alpha.diag(), RatVector{-2});
  EXPECT_EQ(p.kappa, Projection::none(1));
  EXPECT_TRUE(reconstruct_conditions_hold(RatMatrix{{1}}, RatMatrix{{-2}}, p.kappa));
  EXPECT_FALSE(reconstruct_conditions_hold(RatMatrix{{1}}, RatMatrix{{-2}}, Projection::all(1)));

  auto b = reconstruct(RatMatrix{{1, 0}, {0, 0}}, RatMatrix{{1, 0}, {0, 1}});
  ASSERT_TRUE(std::holds_alternative<NotProportional>(b));
  EXPECT_EQ(std::get<NotProportional>(b).coordinate, 1u);

  auto c = reconstruct(RatMatrix{{0, 0}}, RatMatrix{{0, 0}});
  ASSERT_TRUE(std::holds_alternative<Proportional>(c));
  EXPECT_EQ(std::get<Proportional>(c).alpha.diag(), RatVector{0});
  EXPECT_EQ(std::get<Proportional>(c).kappa, Projection::all(1));

  EXPECT_THROW(reconstruct(RatMatrix(1, 2), RatMatrix(2, 2)), std::invalid_argument);
}

TEST(Reconstruct, ConstructThenSolve) {
  Gen gen(65);
  for (int i = 0; i < 300; ++i) {
    const std::size_t m = gen.integer(1, 4), n = gen.integer(1, 4);
    const RatMatrix a = gen.sparse_matrix(m, n, 0.3);
    const RatMatrix b = Orthomorphism(gen.vector(m)).apply(a);
    const auto out = reconstruct(a, b);
    ASSERT_TRUE(std::holds_alternative<Proportional>(out));
    const auto& p = std::get<Proportional>(out);
    EXPECT_EQ(p.alpha.apply(a), b);
    EXPECT_TRUE(reconstruct_conditions_hold(a, b, p.kappa));
    for (std::size_t r = 0; r < m; ++r) {
      EXPECT_EQ(p.kappa[r], p.alpha[r].sign() >= 0);
      if (a.row(r).is_zero()) EXPECT_TRUE(p.alpha[r].is_zero());
    }
  }
}

TEST(Reconstruct, AgreesWithAllKappas) {
  Gen gen(66);
  int proportional = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = gen.integer(1, 3), n = gen.integer(1, 3);
    const RatMatrix a = gen.sparse_matrix(m, n, 0.3);
    RatMatrix b = Orthomorphism(gen.vector(m)).apply(a);
    if (gen.coin(0.5)) b.set_row(gen.integer(0, m - 1), gen.vector(n));
    const auto out = reconstruct(a, b);
    if (const auto* p = std::get_if<Proportional>(&out)) {
      ++proportional;
      EXPECT_TRUE(testing::reconstruct_condition_for(a, b, p->kappa));
    } else {
      const auto& np = std::get<NotProportional>(out);
      EXPECT_TRUE(dot(a.row(np.coordinate), np.x).is_zero());
      EXPECT_GT(dot(b.row(np.coordinate), np.x).sign(), 0);
      EXPECT_FALSE(testing::reconstruct_some_kappa(a, b));
    }
  }
  EXPECT_GT(proportional, 50);
}

TEST(InhomogeneousConsequence, Examples) {
  OperatorSystem doubling{{RatMatrix{{1, 0}, {0, 1}}}, RatMatrix{{1, 0}, {0, 1}},
                          std::vector<RatVector>{RatVector{1, 1}}, RatVector{2, 2}};
  auto a = inhomogeneous_consequence(doubling);
  ASSERT_TRUE(std::holds_alternative<OrthoCertificate>(a));
  const auto& alpha = std::get<OrthoCertificate>(a).alphas[0];
  EXPECT_EQ(alpha.diag(), (RatVector{1, 1}));
  EXPECT_EQ(RatVector({2, 2}) - alpha.apply(RatVector{1, 1}), (RatVector{1, 1}));

  OperatorSystem tight = doubling;
  tight.v = RatVector{2, Rational(1, 2)};
  auto b = inhomogeneous_consequence(tight);
  ASSERT_TRUE(std::holds_alternative<StratumWitness>(b));
  EXPECT_EQ(std::get<StratumWitness>(b).coordinate, 1u);
  EXPECT_TRUE(verify_witness(tight, std::get<StratumWitness>(b)));

  // x_0 <= -1 and -x_0 <= -1 at coordinate 1 is empty; coordinate 0 also fails but inconsistency wins.
  OperatorSystem empty{{RatMatrix{{1}, {1}}, RatMatrix{{0}, {-1}}}, RatMatrix{{1}, {0}},
                       std::vector<RatVector>{RatVector{0, -1}, RatVector{0, -1}}, RatVector{-1, 0}};
  auto c = inhomogeneous_consequence(empty);
  ASSERT_TRUE(std::holds_alternative<StratumInconsistent>(c));
  EXPECT_EQ(std::get<StratumInconsistent>(c).coordinate, 1u);
  EXPECT_TRUE(proves_empty(std::get<StratumInconsistent>(c).certificate));
}

TEST(InhomogeneousConsequence, SingleStratumMatchesScalar) {
  Gen gen(67);
  for (int i = 0; i < 200; ++i) {
    const OperatorSystem sys = random_inhomogeneous(gen, 1, gen.integer(1, 3), gen.integer(1, 3));
    EXPECT_EQ(inhomogeneous_consequence(sys).index(), inhomogeneous_scalar(sys.stratum(0)).index());
  }
}

TEST(InhomogeneousConsequence, AgreesWithAllMasks) {
  Gen gen(68);
  int holds = 0;
  for (int i = 0; i < 200; ++i) {
    const OperatorSystem sys = random_inhomogeneous(gen, gen.integer(1, 3), gen.integer(1, 3), gen.integer(1, 3));
    const auto out = inhomogeneous_consequence(sys);
    if (const auto* c = std::get_if<StratumInconsistent>(&out)) {
      EXPECT_TRUE(proves_empty(c->certificate));
      EXPECT_FALSE(testing::strata_consistent(sys));
      continue;
    }
    EXPECT_TRUE(testing::strata_consistent(sys));
    if (const auto* cert = std::get_if<OrthoCertificate>(&out)) {
      ++holds;
      EXPECT_TRUE(verify_certificate(sys, *cert));
      EXPECT_TRUE(testing::inhomogeneous_all_masks(sys));
    } else {
      EXPECT_TRUE(verify_witness(sys, std::get<StratumWitness>(out)));
      EXPECT_FALSE(testing::inhomogeneous_all_masks(sys));
    }
  }
  EXPECT_GT(holds, 10);
}

TEST(MatrixConsequence, IdentityGrid) {
  const RatMatrix a{{1, 2}, {3, 4}, {0, 1}, {-1, 1}};  // s = 2 blocks of m = 2
  const RatVector u{1, 2, 3, 4};
  auto out = matrix_consequence(a, a, u, u, 2);
  ASSERT_TRUE(std::holds_alternative<MatrixCertificate>(out));
  const auto& cert = std::get<MatrixCertificate>(out);
  EXPECT_EQ(cert.s, 2u);
  EXPECT_EQ(cert.t, 2u);
  EXPECT_TRUE(verify_matrix_certificate(a, a, u, u, 2, cert));
  EXPECT_THROW(matrix_consequence(a, a, u, u, 3), std::invalid_argument);
}

TEST(MatrixConsequence, SingleTargetBlockMatchesInhomogeneous) {
  Gen gen(69);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = gen.integer(1, 3), n = gen.integer(1, 3), s = gen.integer(1, 3);
    const OperatorSystem sys = random_inhomogeneous(gen, m, n, s);
    RatMatrix a(0, n);
    RatVector u(s * m);
    for (std::size_t p = 0; p < s; ++p) {
      a = vstack(a, sys.a_list[p]);
      for (std::size_t r = 0; r < m; ++r) u[p * m + r] = (*sys.u_list)[p][r];
    }
    EXPECT_EQ(matrix_consequence(a, sys.b, u, *sys.v, m).index(), inhomogeneous_consequence(sys).index());
  }
}

TEST(MatrixConsequence, ConstructThenSolve) {
  Gen gen(70);
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = gen.integer(1, 3), n = gen.integer(1, 3), s = gen.integer(1, 3), t = gen.integer(1, 3);
    const RatMatrix a = gen.matrix(s * m, n);
    const RatVector u = gen.vector(s * m);
    RatMatrix b(t * m, n);
    RatVector v(t * m);
    for (std::size_t q = 0; q < t; ++q) {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t p = 0; p < s; ++p) {
          const Rational x = gen.nonnegative();
          b.set_row(q * m + r, b.row(q * m + r) + x * a.row(p * m + r));
          v[q * m + r] += x * u[p * m + r];
        }
        v[q * m + r] += gen.nonnegative();
      }
    }
    const auto out = matrix_consequence(a, b, u, v, m, SolveOptions{.jobs = 2});
    if (const auto* c = std::get_if<StratumInconsistent>(&out)) {
      EXPECT_TRUE(proves_empty(c->certificate));
      continue;
    }
    ASSERT_TRUE(std::holds_alternative<MatrixCertificate>(out));
    EXPECT_TRUE(verify_matrix_certificate(a, b, u, v, m, std::get<MatrixCertificate>(out)));
  }
}

TEST(SublinearOperator, IndependentAbsoluteValueStrata) {
  const PolyhedralSublinear abs{RatMatrix{{1}, {-1}}};
  const PolyhedralSublinear ident{RatMatrix{{1}}};
  const SublinearOperator p_abs{{abs, abs}};
  const SublinearOperator p{{ident, ident}};
  auto out = operator_sublinear_consequence({p_abs}, {RatVector{1, 2}}, p, RatVector{-1, -2});
  ASSERT_TRUE(std::holds_alternative<SublinearCertificate>(out));
  EXPECT_EQ(std::get<SublinearCertificate>(out).alphas[0].diag(), (RatVector{1, 1}));

  auto fail = operator_sublinear_consequence({p_abs}, {RatVector{1, 2}}, p, RatVector{-1, -1});
  ASSERT_TRUE(std::holds_alternative<StratumWitness>(fail));
  const auto& w = std::get<StratumWitness>(fail);
  EXPECT_EQ(w.coordinate, 1u);
  EXPECT_LE(abs(w.x), 2);
  EXPECT_LT(ident(w.x), -1);
}

TEST(SublinearOperator, AgreesWithAllMasks) {
  Gen gen(71);
  int holds = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t m = gen.integer(1, 3), n = gen.integer(1, 2), count = gen.integer(1, 2);
    std::vector<SublinearOperator> p_list;
    std::vector<RatVector> u_list;
    for (std::size_t k = 0; k < count; ++k) {
      p_list.push_back(random_sublinear(gen, m, n));
      u_list.push_back(gen.vector(m));
    }
    const SublinearOperator p = random_sublinear(gen, m, n);
    const RatVector v = gen.vector(m);
    const auto out = operator_sublinear_consequence(p_list, u_list, p, v);
    if (std::holds_alternative<StratumInconsistent>(out)) continue;
    if (const auto* cert = std::get_if<SublinearCertificate>(&out)) {
      ++holds;
      for (const auto& alpha : cert->alphas) EXPECT_TRUE(alpha.is_positive());
      EXPECT_TRUE(testing::sublinear_all_masks(p_list, u_list, p, v));
    } else {
      const auto& w = std::get<StratumWitness>(out);
      for (std::size_t k = 0; k < count; ++k) EXPECT_LE(p_list[k].strata[w.coordinate](w.x), u_list[k][w.coordinate]);
      EXPECT_LT(p.strata[w.coordinate](w.x), v[w.coordinate]);
      EXPECT_FALSE(testing::sublinear_all_masks(p_list, u_list, p, v));
    }
  }
  EXPECT_GT(holds, 10);
}

TEST(LagrangeCheck, PicksTheStratum) {
  const PolyhedralSublinear abs{RatMatrix{{1}, {-1}}};
  const PolyhedralSublinear ident{RatMatrix{{1}}};
  const SublinearOperator p_abs{{abs, abs}};
  const SublinearOperator p{{ident, abs}};
  const auto r0 = lagrange_check({p_abs}, {RatVector{1, 1}}, p, 0);
  EXPECT_EQ(r0.primal.str(), "-1");
  EXPECT_EQ(r0.multipliers, RatVector{1});
  EXPECT_EQ(r0.dual, r0.primal);
  const auto r1 = lagrange_check({p_abs}, {RatVector{1, 1}}, p, 1);
  EXPECT_EQ(r1.primal.str(), "0");
  EXPECT_EQ(r1.multipliers, RatVector{0});
  EXPECT_THROW(lagrange_check({p_abs}, {RatVector{1, -1}}, p, 1), EmptyFeasible);
  EXPECT_THROW(lagrange_check({p_abs}, {RatVector{1, 1}}, p, 2), std::out_of_range);
}

}  // namespace
}  // namespace farkas
