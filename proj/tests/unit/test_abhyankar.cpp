#include <gtest/gtest.h>

#include <vector>

#include "semiring_lab/abhyankar/abhyankar.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

namespace semiring_lab {
namespace {

using testing::ambient;
using testing::tagged;

Polynomial nat2(const std::string& text) { return ambient(text, 2, Domain::natural); }

// Hand arithmetic: 2·(1/2)(1/4) − 3·(1/3)² + 1/3 − 1/4 = 1/4 − 1/3 + 1/3 − 1/4 = 0.
const char* const kK4Relation = "2*X2*X4 - 3*X3^2 + X3 - X4";

TEST(Generators, FirstFew) {
  EXPECT_EQ(abhyankar_generator(2), ambient(testing::kF2));
  EXPECT_EQ(abhyankar_generator(3), ambient(testing::kF3));
  EXPECT_EQ(abhyankar_generator(4), ambient(testing::kF4));
  EXPECT_EQ(abhyankar_generator(5), ambient(testing::kF5));
  EXPECT_THROW(abhyankar_generator(1), PreconditionError);
  EXPECT_THROW(AbhyankarContext(1), PreconditionError);
}

TEST(Phi, Examples) {
  const AbhyankarContext ctx(4);
  ASSERT_TRUE(ctx.verified());
  EXPECT_EQ(ctx.phi_eval(ctx.f(4)), mpq_class(1, 4));
  EXPECT_EQ(ctx.phi_eval(ctx.element("2*X2 - 1")), 0);
  EXPECT_EQ(ctx.phi_eval(ctx.element("X2*X3 + 7")), mpq_class(43, 6));
  EXPECT_EQ(ctx.element("X2*X3 + 7").ambient, ambient(testing::kF2) * ambient(testing::kF3) + ambient("7"));
  EXPECT_THROW(ctx.f(5), PreconditionError);
}

TEST(WellDefinedness, NoRelationsAtThree) {
  const auto wd = well_definedness_check(3);
  EXPECT_TRUE(wd.relations.complete);
  EXPECT_TRUE(wd.relations.relations.empty());
  EXPECT_EQ(wd.relations.verdict, Truth::yes);
  EXPECT_EQ(wd.verdict, Truth::yes);
}

TEST(WellDefinedness, KnownRelationAtFour) {
  const auto wd = well_definedness_check(4);
  ASSERT_TRUE(wd.relations.complete);
  ASSERT_EQ(wd.relations.relations.size(), 1U);
  const Polynomial expected = tagged(kK4Relation, 4, Domain::rational).scaled(mpq_class(1, 2));
  EXPECT_EQ(wd.relations.relations[0].relation, expected);
  EXPECT_EQ(wd.relations.relations[0].value, 0);
  EXPECT_EQ(wd.verdict, Truth::yes);
}

TEST(WellDefinedness, ExhaustedBudgetIsPartial) {
  GroebnerBudget tiny;
  tiny.max_degree = 3;
  const auto wd = well_definedness_check(5, tiny);
  EXPECT_TRUE(wd.partial());
  EXPECT_NE(wd.relations.verdict, Truth::no);
  for (const auto& r : wd.relations.relations) EXPECT_EQ(r.value, 0);
}

TEST(WellDefinedness, DefaultTruncationCompletes) {
  const auto wd = well_definedness_check(6);
  EXPECT_TRUE(wd.relations.complete);
  EXPECT_EQ(wd.relations.relations.size(), 6U);
  EXPECT_EQ(wd.relations.verdict, Truth::yes);
}

TEST(WellDefinedness, GermCertificate) {
  for (std::size_t k : {2, 3, 6, 10, 20}) {
    const auto g = germ_certificate(k);
    EXPECT_TRUE(g.holds()) << k;
    ASSERT_EQ(g.images.size(), k - 1);
    for (std::size_t n = 2; n <= k; ++n) {
      EXPECT_EQ(g.images[n - 2].constant_term(), mpq_class(1, n));
    }
  }
  // g₂ at k = 3 is (1 + t/3)/2.
  EXPECT_EQ(germ_certificate(3).images[0],
            parse_polynomial("1/2 + 1/6*T1", VarNames::ambient(1), Domain::rational));
}

TEST(WellDefinedness, LargeTruncationWithoutElimination) {
  const AbhyankarContext ctx(20, {std::nullopt, false});
  EXPECT_TRUE(ctx.verified());
  EXPECT_FALSE(ctx.well_definedness().relations.attempted);
  EXPECT_EQ(ctx.phi_eval(ctx.f(20)), mpq_class(1, 20));
}

TEST(IdealI, Membership) {
  const AbhyankarContext ctx(5);
  EXPECT_TRUE(ctx.in_I(ctx.element("2*X2 - 1")));
  EXPECT_FALSE(ctx.in_I(ctx.f(2)));
  for (std::size_t n = 2; n < 5; ++n) {
    EXPECT_TRUE(ctx.in_I(ctx.constant(n) * ctx.f(n) - ctx.constant(1))) << n;
  }
}

TEST(IAWitness, SmallCases) {
  const AbhyankarContext ctx(4);
  const auto w2 = ia_witness(ctx, 2);
  EXPECT_TRUE(w2.holds());
  EXPECT_EQ(w2.multiplier, ambient("3*T2"));
  EXPECT_EQ(w2.first.representation, tagged("2*X2 - 1", 4));
  EXPECT_EQ(w2.second.representation, tagged("3*X3 - 1", 4));
  // Oracle: hand-expanded f2, f3.
  EXPECT_EQ(ambient("3*T2") * (ambient(testing::kF2).scaled(2) - ambient("1")) -
                (ambient(testing::kF3).scaled(3) - ambient("1")),
            ambient("1"));
  const auto w3 = ia_witness(ctx, 3);
  EXPECT_TRUE(w3.holds());
  EXPECT_EQ(w3.multiplier, ambient("4*T2"));
  EXPECT_THROW(ia_witness(ctx, 4), PreconditionError);
  EXPECT_THROW(ia_witness(ctx, 1), PreconditionError);
}

TEST(IAWitness, NineAtTen) {
  const AbhyankarContext ctx(10, {std::nullopt, false});
  const auto w = ia_witness(ctx, 9);
  EXPECT_TRUE(w.holds());
  EXPECT_EQ(w.expansion, ambient("1"));
}

TEST(QuotientField, Certificates) {
  const AbhyankarContext ctx(3);
  const auto [t2, t1] = qf_witnesses(ctx);
  EXPECT_TRUE(t2.holds());
  EXPECT_TRUE(t1.holds());
  EXPECT_EQ(ambient("T2") * ambient("2*T1*T2 - 1") - ambient("2*T1*T2^2 - T2"), ambient("0"));
  EXPECT_EQ(ambient("T1") * ambient("2*T1*T2^2 - T2") - ambient("T1*T2") * ambient("2*T1*T2 - 1"),
            ambient("0"));
  EXPECT_EQ(t2.denominator.ambient, ambient("2*T1*T2 - 1"));
  EXPECT_EQ(t1.denominator.ambient, ambient(testing::kF3));
  EXPECT_THROW(qf_witnesses(AbhyankarContext(2)), PreconditionError);
}

TEST(NonExtendability, Steps) {
  const auto r = non_extendability(10);
  ASSERT_TRUE(r.first);
  EXPECT_EQ(*r.first, 2U);
  ASSERT_EQ(r.steps.size(), 9U);
  for (const auto& s : r.steps) {
    EXPECT_EQ(s.coefficient, 0);
    EXPECT_TRUE(s.image.is_zero());
    EXPECT_EQ(s.required, mpq_class(1, s.n + 1));
    EXPECT_TRUE(s.contradiction);
  }
  EXPECT_EQ(r.steps.back().n, 10U);
  EXPECT_THROW(non_extendability(1), PreconditionError);
}

TEST(UnivarIdeal, Examples) {
  const AbhyankarContext ctx(4);
  const auto u = ctx.element("2*X2 - 1");
  EXPECT_TRUE(ctx.univar_in_ideal({{ctx.constant(0) - u * ctx.f(2), u}}));
  EXPECT_FALSE(ctx.univar_in_ideal({{ctx.constant(0) - ctx.f(2), ctx.constant(1)}}));
  EXPECT_TRUE(ctx.univar_in_ideal({}));
}

TEST(ConditionC, F2) {
  const AbhyankarContext ctx(6);
  const auto r = condition_c_falsifier(ctx, nat2("T1*T2"));
  ASSERT_EQ(r.found, Truth::yes);
  const auto& w = *r.witness;
  EXPECT_TRUE(w.a.is_zero());
  ASSERT_EQ(w.h.coefficients.size(), 2U);
  EXPECT_EQ(w.h.coefficients[1].ambient, ambient("1"));
  EXPECT_EQ(w.h.coefficients[0].ambient, ambient("-T1*T2"));
  EXPECT_TRUE(w.root_checked);
  EXPECT_TRUE(w.outside_ideal);
}

TEST(ConditionC, F2Squared) {
  const AbhyankarContext ctx(6);
  const auto r = condition_c_falsifier(ctx, nat2("T1^2*T2^2"));
  ASSERT_EQ(r.found, Truth::yes);
  EXPECT_EQ(r.witness->h.coefficients[1].ambient, ambient("1"));
  EXPECT_EQ(r.witness->h.coefficients[0].ambient, ambient("-T1^2*T2^2"));
}

TEST(ConditionC, T1HasAReplayedWitness) {
  const AbhyankarContext ctx(6);
  const auto r = condition_c_falsifier(ctx, nat2("T1"));
  ASSERT_EQ(r.found, Truth::yes);
  const auto& w = *r.witness;
  EXPECT_TRUE(evaluate_at(w.h, w.l).is_zero());
  EXPECT_FALSE(ctx.univar_in_ideal(w.h));
}

TEST(ConditionC, MembershipRouteOnGenericSubring) {
  const AbhyankarContext ctx(4);
  const auto r = condition_c_search(ctx.ring(), nat2("T2"));
  ASSERT_EQ(r.found, Truth::yes);
  EXPECT_EQ(r.witness->route, "membership");
  EXPECT_TRUE(evaluate_at(r.witness->h, r.witness->l).is_zero());
  EXPECT_FALSE(ctx.univar_in_ideal(r.witness->h));
}

TEST(ConditionC, RejectsBadInput) {
  const AbhyankarContext ctx(4);
  EXPECT_THROW(condition_c_falsifier(ctx, ambient("T1")), DomainMismatch);
  EXPECT_THROW(condition_c_falsifier(ctx, ambient("T1", 3, Domain::natural)), ArityMismatch);
}

TEST(AbhyankarProperties, Recurrence) {
  for (std::size_t n = 2; n < 16; ++n) {
    const Polynomial fn = abhyankar_generator(n);
    EXPECT_EQ(abhyankar_generator(n + 1), poly_mul(fn.scaled(n) - ambient("1"), ambient("T2")));
  }
}

TEST(AbhyankarProperties, PhiIsAHomomorphism) {
  testing::Random rng;
  const AbhyankarContext ctx(5);
  const Polynomial rel = tagged("2*X2*X4 - 3*X3^2 + X3 - X4", 5);
  for (int i = 0; i < 1000; ++i) {
    const auto a = ctx.element(rng.polynomial(4, 3, 4));
    const auto b = ctx.element(rng.polynomial(4, 3, 4));
    EXPECT_EQ(ctx.phi_eval(a + b), ctx.phi_eval(a) + ctx.phi_eval(b));
    EXPECT_EQ(ctx.phi_eval(a * b), ctx.phi_eval(a) * ctx.phi_eval(b));
    // A different representation of the same element has the same value.
    const auto other = ctx.element(a.representation + rel * rng.polynomial(4, 2, 3));
    ASSERT_EQ(other.ambient, a.ambient);
    EXPECT_EQ(ctx.phi_eval(other), ctx.phi_eval(a));
  }
}

TEST(AbhyankarProperties, IAWitnessesExpandToOne) {
  const AbhyankarContext ctx(12, {std::nullopt, false});
  for (std::size_t n = 2; n < 12; ++n) {
    const auto w = ia_witness(ctx, n);
    EXPECT_TRUE(w.first_in_I && w.second_in_I);
    EXPECT_EQ(w.expansion, ambient("1")) << n;
  }
}

TEST(AbhyankarProperties, FalsifierWitnessesReplay) {
  testing::Random rng;
  const AbhyankarContext ctx(6);
  std::size_t found = 0;
  for (int i = 0; i < 300; ++i) {
    const Polynomial l0 = rng.polynomial(2, 4, 3, Domain::natural, 4);
    const auto r = condition_c_falsifier(ctx, l0);
    if (r.found != Truth::yes) continue;
    ++found;
    const auto& w = *r.witness;
    EXPECT_EQ(w.l, l0 + w.a);
    EXPECT_TRUE(evaluate_at(w.h, w.l).is_zero());
    EXPECT_FALSE(ctx.univar_in_ideal(w.h));
    for (const auto& c : w.h.coefficients) {
      EXPECT_EQ(ctx.ring().expand(c.representation), c.ambient);
      EXPECT_TRUE(c.representation.has_integral_coefficients());
    }
  }
  EXPECT_EQ(found, 300U);
}

}  // namespace
}  // namespace semiring_lab
