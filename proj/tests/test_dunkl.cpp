#include <gtest/gtest.h>

#include <random>

#include "hspecht/dunkl.hpp"
#include "test_support.hpp"

using namespace hspecht;
using hspecht::testing::poly;
using hspecht::testing::random_rational;

namespace {

CouplingMap random_coupling(std::mt19937_64& rng) { return {random_rational(rng), random_rational(rng)}; }

MultiPoly D(std::size_t i, const MultiPoly& f, const RootSystem& rs, const CouplingMap& c) {
  return dunkl_apply(unit_vector(rs.n, i), f, rs, c);
}

}  // namespace

TEST(RootSystem, TypeBPasses) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto rep = validate_root_system(make_B(n));
    EXPECT_TRUE(rep.passed) << n;
    EXPECT_EQ(rep.size, 2 * n * n);
    EXPECT_EQ(rep.group_order, group_order(2, n));
  }
  EXPECT_EQ(validate_root_system(make_B(2)).size, 8u);
  EXPECT_EQ(validate_root_system(make_B(1)).size, 2u);
}

TEST(RootSystem, DefectiveListsFail) {
  RootSystem lone{1, {{Rational(1)}}, '?'};
  auto rep = validate_root_system(lone);
  EXPECT_FALSE(rep.passed);
  auto failed = rep.failed_axioms();
  EXPECT_NE(std::find(failed.begin(), failed.end(), 2), failed.end());
  EXPECT_NE(std::find(failed.begin(), failed.end(), 3), failed.end());

  // B_2 minus one pair: no longer closed under reflections.
  auto b2 = make_B(2);
  RootSystem broken{2, {}, '?'};
  for (const auto& a : b2.roots)
    if (!(a[0] == 1 && a[1] == 1) && !(a[0] == -1 && a[1] == -1)) broken.roots.push_back(a);
  auto rb = validate_root_system(broken);
  EXPECT_FALSE(rb.passed);
  EXPECT_FALSE(rb.checks[2].passed);

  // Doubling a root breaks axiom 2; e1 against e1 + 2e2 gives 2/5.
  RootSystem doubled{1, {{Rational(1)}, {Rational(-1)}, {Rational(2)}, {Rational(-2)}}, '?'};
  EXPECT_FALSE(validate_root_system(doubled).checks[1].passed);
  RootSystem g{2, {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}, {Rational(1), Rational(2)}, {Rational(-1), Rational(-2)}}, '?'};
  EXPECT_FALSE(validate_root_system(g).checks[3].passed);
}

TEST(RootSystem, ReflectionElementsMatchMatrices) {
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& a : positive_roots(make_B(n))) {
      auto f = hspecht::testing::random_poly(rng, n, 1, 4, 6);
      EXPECT_EQ(act_on_poly(reflection_element(a), f), reflect_poly(a, f)) << root_to_string(a);
      EXPECT_TRUE((reflection_element(a) * reflection_element(a)).is_identity());
    }
  EXPECT_EQ(reflection_element({Rational(1), Rational(1)}).to_string(), "(1,1; (1 2))");
  EXPECT_EQ(reflection_element({Rational(0), Rational(1)}).to_string(), "(0,1; ())");
}

TEST(RootSystem, ReflectionClasses) {
  auto b2 = reflection_classes(make_B(2));
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_EQ(b2[0].size(), 2u);
  EXPECT_EQ(b2[1].size(), 2u);
  auto b3 = reflection_classes(make_B(3));
  ASSERT_EQ(b3.size(), 2u);
  EXPECT_EQ(b3[0].size() + b3[1].size(), 9u);
  for (const auto& cls : b3) {
    CouplingMap c{Rational(1, 3), Rational(2, 5)};
    for (const auto& a : cls) EXPECT_EQ(c(a), c(cls.front()));
  }
  EXPECT_NO_THROW(validate_coupling(make_B(3), CouplingMap{Rational(1, 2), Rational(-3)}));
}

TEST(Dunkl, RankOneExamples) {
  auto b1 = make_B(1);
  Rational c(2, 7);
  CouplingMap cm{c, 0};
  EXPECT_EQ(D(1, poly(1, "x1^2"), b1, cm), poly(1, "2*x1"));
  EXPECT_EQ(D(1, poly(1, "x1^3"), b1, cm), poly(1, "x1^2") * (Rational(3) - 2 * c));
  EXPECT_TRUE(D(1, poly(1, "1"), b1, cm).is_zero());
}

TEST(Dunkl, RepresentativeIndependent) {
  std::mt19937_64 rng(8);
  auto rs = make_B(2);
  auto pos = positive_roots(rs);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = random_coupling(rng);
    auto reps = pos;
    for (std::size_t k = 0; k < reps.size(); ++k)
      if ((trial >> k) & 1)
        for (auto& v : reps[k]) v = -v;
    auto f = hspecht::testing::random_poly(rng, 2, 1, 5, 6);
    std::vector<Rational> y{random_rational(rng), random_rational(rng)};
    EXPECT_EQ(dunkl_apply(y, f, reps, c), dunkl_apply(y, f, pos, c));
  }
}

TEST(Dunkl, LowersDegreeByOne) {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto rs = make_B(n);
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_coupling(rng);
      int d = 1 + trial % 5;
      auto f = hspecht::testing::random_homogeneous(rng, n, 1, d, 4);
      auto g = D(1 + static_cast<std::size_t>(trial) % n, f, rs, c);
      if (!g.is_zero()) {
        EXPECT_TRUE(g.is_homogeneous());
        EXPECT_EQ(g.degree(), d - 1);
      }
    }
  }
}

TEST(Dunkl, Commute) {
  std::mt19937_64 rng(10);
  for (std::size_t n = 2; n <= 3; ++n) {
    auto rs = make_B(n);
    auto tests = monomials_up_to(n, 5);
    for (int trial = 0; trial < 2; ++trial) {
      auto c = random_coupling(rng);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          auto rep = commutator_check([&](const MultiPoly& f) { return D(i, f, rs, c); },
                                      [&](const MultiPoly& f) { return D(j, f, rs, c); }, tests);
          EXPECT_TRUE(rep.passed) << rep.counterexample.value_or("");
          EXPECT_EQ(rep.max_degree, 5);
        }
    }
  }
}

TEST(Olshanetsky, Examples) {
  Rational c(3, 5);
  EXPECT_EQ(olshanetsky_apply(1, poly(1, "x1^2"), make_B(1), {c, 0}), poly(1, "1") * (Rational(2) - 4 * c));
  auto b2 = make_B(2);
  Rational cs(1, 2), cl(1, 3);
  // Hand computation: D_1^2 and D_2^2 each give 2 - 4 c_short - 4 c_long.
  EXPECT_EQ(olshanetsky_apply(1, poly(2, "x1^2 + x2^2"), b2, {cs, cl}), poly(2, "1") * (4 - 8 * cs - 8 * cl));
  for (int j = 1; j <= 2; ++j) EXPECT_TRUE(olshanetsky_apply(j, poly(2, "1"), b2, {cs, cl}).is_zero());
  EXPECT_THROW(olshanetsky_apply(1, poly(2, "x1^2"), b2, {cs, cl}), InvalidArgument);
  EXPECT_NO_THROW(olshanetsky_apply(1, poly(2, "x1^2"), b2, {cs, cl}, false));
  EXPECT_THROW(olshanetsky_apply(3, poly(2, "1"), b2, {cs, cl}), InvalidArgument);
}

TEST(Olshanetsky, HomogeneousAndInvariant) {
  std::mt19937_64 rng(12);
  auto rs = make_B(2);
  auto c = random_coupling(rng);
  for (const auto& p : invariant_samples(2, 8)) {
    for (int j = 1; j <= 2; ++j) {
      auto q = olshanetsky_apply(j, p, rs, c);
      EXPECT_TRUE(is_invariant(q, 2));
      if (!q.is_zero()) {
        EXPECT_TRUE(q.is_homogeneous());
        EXPECT_EQ(q.degree(), p.degree() - 2 * j);
      }
    }
  }
}

TEST(Olshanetsky, L1CommutesWithL2) {
  std::mt19937_64 rng(13);
  auto rs = make_B(2);
  for (int trial = 0; trial < 2; ++trial) {
    auto c = random_coupling(rng);
    auto rep = commutator_check([&](const MultiPoly& f) { return olshanetsky_apply(1, f, rs, c); },
                                [&](const MultiPoly& f) { return olshanetsky_apply(2, f, rs, c); },
                                invariant_samples(2, 8));
    EXPECT_TRUE(rep.passed) << rep.counterexample.value_or("");
  }
}

TEST(Olshanetsky, RestrictionIdentity) {
  std::mt19937_64 rng(14);
  for (std::size_t n = 1; n <= 2; ++n) {
    auto rs = make_B(n);
    for (int trial = 0; trial < 3; ++trial) {
      auto c = random_coupling(rng);
      for (const auto& p : invariant_samples(n, 8))
        EXPECT_EQ(RationalFunction(olshanetsky_apply(1, p, rs, c)), restriction_rhs(p, rs, c)) << p.to_string();
    }
  }
}

TEST(Hamiltonian, Examples) {
  auto b1 = make_B(1);
  for (int c = 1; c <= 3; ++c) {
    auto ground = RationalFunction(MultiPoly::variable(1, 1, 1).pow(c + 1));
    EXPECT_TRUE(hamiltonian_apply(ground, b1, {Rational(c), 0}).is_zero()) << c;
  }
  EXPECT_TRUE(hamiltonian_apply(RationalFunction(poly(1, "x1")), b1, {0, 0}).is_zero());

  auto b2 = make_B(2);
  CouplingMap cm{Rational(1, 2), Rational(2)};
  RationalFunction expected(MultiPoly(2, 1));
  for (const auto& a : positive_roots(b2)) {
    Rational w = cm(a) * (cm(a) + 1) * inner(a, a);
    expected = expected - RationalFunction(MultiPoly::constant(2, 1, w), linear_form(a).pow(2));
  }
  EXPECT_EQ(hamiltonian_apply(RationalFunction(poly(2, "1")), b2, cm), expected);
}

TEST(Hamiltonian, GaugeToL1) {
  for (std::size_t n = 1; n <= 2; ++n)
    for (int cs = 0; cs <= 1; ++cs)
      for (int cl = 0; cl <= 1; ++cl) {
        auto rep = gauge_check(make_B(n), {Rational(cs), Rational(cl)}, invariant_samples(n, 6));
        EXPECT_TRUE(rep.passed) << rep.witness;
        ASSERT_TRUE(rep.constant.has_value());
        EXPECT_EQ(*rep.constant, 0);
      }
  EXPECT_THROW(gauge_check(make_B(1), {Rational(1, 2), 0}, {poly(1, "1")}), InvalidArgument);
}

class SemidirectTest : public ::testing::Test {
 protected:
  RootSystem rs = make_B(2);
  RootContextPtr ctx = make_root_context(rs);
  CouplingMap c{Rational(1, 3), Rational(-2, 7)};
};

TEST_F(SemidirectTest, LoweringDunkl) {
  for (std::size_t i = 1; i <= 2; ++i)
    EXPECT_EQ(lower_m(dunkl_operator(ctx, unit_vector(2, i), c), ctx),
              DiffOp::directional(ctx, unit_vector(2, i)));
  auto g = GroupElement::scaling(2, 2, 1);
  EXPECT_EQ(lower_m(SemidirectOperator::group_element(ctx, g), ctx), DiffOp::identity(ctx));
  auto A = DiffOp::directional(ctx, unit_vector(2, 1));
  auto B = DiffOp::multiplication(RootFraction::over_root(ctx, Rational(3), 0));
  SemidirectOperator sum(ctx);
  sum.add_term(g, A);
  sum.add_term(GroupElement::from_permutation(2, Permutation::transposition(2, 1, 2)), B);
  EXPECT_EQ(lower_m(sum, ctx), A + B);
}

TEST_F(SemidirectTest, DunklOperatorMatchesApplication) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> y{random_rational(rng), random_rational(rng)};
    auto f = hspecht::testing::random_poly(rng, 2, 1, 5, 5);
    auto img = dunkl_operator(ctx, y, c).apply(f);
    ASSERT_TRUE(img.is_polynomial());
    EXPECT_EQ(img.num(), dunkl_apply(y, f, rs, c));
  }
}

TEST_F(SemidirectTest, ConjugationMatchesAction) {
  std::mt19937_64 rng(16);
  auto Dop = DiffOp::directional(ctx, {Rational(2), Rational(-1)}) * DiffOp::directional(ctx, unit_vector(2, 2)) +
             DiffOp::multiplication(RootFraction::over_root(ctx, Rational(5), 2)) *
                 DiffOp::directional(ctx, unit_vector(2, 1));
  for (const auto& g : enumerate_group(2, 2)) {
    auto f = hspecht::testing::random_poly(rng, 2, 1, 4, 5);
    auto lhs = Dop.conjugate(g).apply(f);
    auto rhs = Dop.apply(act_on_poly(g.inverse(), f)).act(g);
    EXPECT_EQ(lhs, rhs) << g.to_string();
  }
}

TEST_F(SemidirectTest, ProductMatchesComposition) {
  std::mt19937_64 rng(17);
  auto D1 = dunkl_operator(ctx, unit_vector(2, 1), c);
  auto D2 = dunkl_operator(ctx, unit_vector(2, 2), c);
  auto prod = D1 * D2;
  for (int trial = 0; trial < 8; ++trial) {
    auto f = hspecht::testing::random_poly(rng, 2, 1, 5, 5);
    auto inner_img = D2.apply(f);
    ASSERT_TRUE(inner_img.is_polynomial());
    EXPECT_EQ(prod.apply(f), D1.apply(inner_img.num()));
  }
  EXPECT_EQ(D1 * D2, D2 * D1);
}

TEST_F(SemidirectTest, LoweringIsMultiplicativeOnInvariants) {
  auto D1 = dunkl_operator(ctx, unit_vector(2, 1), c);
  auto D2 = dunkl_operator(ctx, unit_vector(2, 2), c);
  auto B = D1 * D1 + D2 * D2;
  for (const auto& g : group_generators(2, 2)) {
    auto G = SemidirectOperator::group_element(ctx, g);
    auto Ginv = SemidirectOperator::group_element(ctx, g.inverse());
    EXPECT_TRUE(G * B * Ginv == B) << g.to_string();
  }
  std::vector<SemidirectOperator> As = {D1, D2 * D1, D1 + SemidirectOperator::group_element(ctx, GroupElement::scaling(2, 2, 2))};
  for (const auto& A : As) EXPECT_EQ(lower_m(A * B, ctx), lower_m(A, ctx) * lower_m(B, ctx));

  // On invariants m(sum D_i^2) is the restriction operator.
  auto mB = lower_m(B, ctx);
  for (const auto& p : invariant_samples(2, 6))
    EXPECT_EQ(mB.apply(p).to_rational_function(), restriction_rhs(p, rs, c)) << p.to_string();
}
