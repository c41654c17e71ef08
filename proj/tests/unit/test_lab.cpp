#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "semiring_lab/lab/conditions.hpp"
#include "semiring_lab/lab/cone.hpp"
#include "semiring_lab/lab/subsets.hpp"
#include "support/fixtures.hpp"
#include "support/purity_oracle.hpp"
#include "support/random.hpp"

namespace semiring_lab {
namespace {

using testing::ambient;

Polynomial nat(const std::string& text, std::size_t n = 1) {
  return parse_polynomial(text, VarNames::ambient(n), Domain::natural);
}

std::shared_ptr<const CongruenceClosure> closure(const std::string& relations, std::size_t n,
                                                 SemiringBudget budget) {
  return std::make_shared<const CongruenceClosure>(congruence_close(parse_presentation(relations, n), budget));
}

Cone full_box(std::size_t n, std::uint32_t box) { return make_cone(n, box, box_points(n, box)); }

Cone diagonal(std::uint32_t box) {
  std::vector<ExponentVector> members;
  for (std::uint32_t k = 0; k <= box; ++k) members.push_back({k, k});
  return make_cone(2, box, members);
}

TEST(Subsets, PositiveRationalsAreExact) {
  EXPECT_EQ(subset_member(SubsetTag::Q, mpq_class(7, 3)).verdict, Truth::yes);
  EXPECT_EQ(subset_member(SubsetTag::P, mpq_class(1, 9)).verdict, Truth::yes);
  EXPECT_EQ(subset_member(SubsetTag::L, mpq_class(5)).verdict, Truth::no);
  EXPECT_THROW(subset_member(SubsetTag::Q, mpq_class(0)), DomainViolation);
}

TEST(Subsets, FreeSemiring) {
  const auto cc = closure("", 1, {3, 8, 100000});
  EXPECT_EQ(subset_member(SubsetTag::Q, nat("3"), *cc).verdict, Truth::yes);
  EXPECT_EQ(subset_member(SubsetTag::P, nat("2"), *cc).verdict, Truth::yes);
  // T ↦ 2 in max-plus puts T above every constant.
  EXPECT_EQ(subset_member(SubsetTag::Q, nat("T1"), *cc).verdict, Truth::no);
  EXPECT_EQ(subset_member(SubsetTag::L, nat("T1"), *cc).verdict, Truth::no);
  EXPECT_THROW(subset_member(SubsetTag::Q, nat("T1^4"), *cc), OutOfBudget);
}

TEST(Subsets, AbsorbingElementIsInL) {
  const auto cc = closure("T1 + 1 = T1", 1, {3, 8, 100000});
  EXPECT_EQ(subset_member(SubsetTag::L, nat("T1"), *cc).verdict, Truth::yes);
  EXPECT_EQ(subset_member(SubsetTag::L, nat("1"), *cc).verdict, Truth::no);
}

TEST(Subsets, ScalingKeepsQ) {
  const auto cc = closure("T1 + T1 = 1", 1, {3, 12, 100000});
  for (const char* s : {"T1", "1", "T1 + 1"}) {
    const Polynomial a = nat(s);
    if (subset_member(SubsetTag::Q, a, *cc).verdict != Truth::yes) continue;
    for (unsigned q = 2; q <= 3; ++q) {
      EXPECT_EQ(subset_member(SubsetTag::Q, a.scaled(q), *cc).verdict, Truth::yes) << s << " times " << q;
    }
  }
  EXPECT_EQ(subset_member(SubsetTag::Q, nat("T1"), *cc).verdict, Truth::yes);
}

TEST(ConeEnumerate, PositiveImagesFillTheBox) {
  const Cone c = cone_enumerate(EvalHom({2, 3}), 4);
  EXPECT_EQ(c.members, box_points(2, 4));
  EXPECT_EQ(c.unknown, 0u);
  EXPECT_EQ(cone_dim(c), 2u);
  EXPECT_EQ(find_interior_u(c), ExponentVector({0, 0}));
  const Cone zero = cone_enumerate(EvalHom({mpq_class(1, 2)}), 0);
  EXPECT_EQ(zero.members, std::vector<ExponentVector>{{0}});
}

TEST(ConeEnumerate, PresentationUsesBoundedSearch) {
  const auto cc = closure("T1 + 1 = T1", 1, {3, 8, 100000});
  const Cone c = cone_enumerate(cc, 3);
  EXPECT_TRUE(c.contains({0}));
  // max-plus with T ↦ 1 satisfies T + 1 = T and puts every Tᵘ, u ≥ 1, above the constants.
  EXPECT_FALSE(c.contains({1}));
  EXPECT_FALSE(c.contains({3}));
}

TEST(ConeDim, Examples) {
  EXPECT_EQ(cone_dim(full_box(2, 4)), 2u);
  EXPECT_EQ(cone_dim(make_cone(2, 4, {{0, 0}})), 0u);
  EXPECT_EQ(cone_dim(diagonal(4)), 1u);
}

TEST(Purity, Examples) {
  EXPECT_TRUE(purity_check(2, {{1, 0}, {0, 1}}, 4).pure);
  const Purity p = purity_check(2, {{2, 0}, {0, 1}}, 4);
  ASSERT_FALSE(p.pure);
  EXPECT_EQ(p.witness->a, ExponentVector({2, 0}));
  EXPECT_EQ(p.witness->k, 2u);
  EXPECT_EQ(p.witness->quotient, ExponentVector({1, 0}));
  const Purity empty = purity_check(2, {}, 4);
  EXPECT_TRUE(empty.pure);
  EXPECT_EQ(empty.members, 1u);
}

TEST(Interior, Examples) {
  EXPECT_FALSE(find_interior_u(diagonal(4)).has_value());
  EXPECT_FALSE(qf_from_cone(diagonal(4), cone_oracle(diagonal(4))).has_value());
  const Cone full = full_box(2, 3);
  const auto fr = qf_from_cone(full, cone_oracle(full));
  ASSERT_TRUE(fr.has_value());
  ASSERT_EQ(fr->size(), 2u);
  EXPECT_TRUE((*fr)[0].holds());
  EXPECT_EQ((*fr)[0].denominator, ambient("1"));
  EXPECT_EQ((*fr)[0].numerator, ambient("T1"));
}

TEST(Interior, ShiftedCone) {
  const Cone c = make_cone(2, 3, {{1, 1}, {2, 1}, {1, 2}, {2, 2}});
  EXPECT_EQ(find_interior_u(c), ExponentVector({1, 1}));
  const auto fr = qf_from_cone(c, cone_oracle(c));
  ASSERT_TRUE(fr.has_value());
  EXPECT_EQ((*fr)[0].numerator, ambient("T1^2*T2"));
  EXPECT_EQ((*fr)[0].denominator, ambient("T1*T2"));
  EXPECT_EQ((*fr)[1].numerator, ambient("T1*T2^2"));
  for (const auto& f : *fr) EXPECT_TRUE(f.holds());
}

TEST(OnePlusTu, Examples) {
  const EvalHom phi({mpq_class(1, 3), 5});
  EXPECT_EQ(one_plus_Tu_in_P({2, 1}, phi).verdict, Truth::yes);
  EXPECT_EQ(one_plus_Tu_in_P({0, 0}, phi).verdict, Truth::yes);
  // T = T·T holds in Boolean and max-plus with T ↦ 0, so Tᵘ cannot be
  // refuted, and no derivation bounds it within this budget.
  const auto cc = closure("T1*T1 = T1", 1, {2, 2, 200});
  EXPECT_EQ(one_plus_Tu_in_P({1}, cc).verdict, Truth::unknown);
}

TEST(Conditions, AbhyankarSix) {
  const AbhyankarContext ctx(6);
  const ConditionReport r = verify_conditions(ctx, {nat("T1*T2", 2)});
  EXPECT_EQ(r.a.verdict, Verdict::holds);
  EXPECT_EQ(r.b.verdict, Verdict::holds);
  EXPECT_EQ(r.c.verdict, Verdict::fails);
  EXPECT_EQ(r.d.verdict, Verdict::holds);
  ASSERT_TRUE(r.unit.has_value());
  EXPECT_TRUE(r.unit->holds());
  ASSERT_EQ(r.c_witnesses.size(), 1u);
  EXPECT_TRUE(r.c_witnesses[0].root_checked);
  EXPECT_TRUE(r.c_witnesses[0].outside_ideal);
  ASSERT_EQ(r.preimages.size(), 20u);
  for (const auto& p : r.preimages) EXPECT_EQ(p.value, mpq_class(1, p.m));
  for (const auto& f : r.quotient_field) EXPECT_TRUE(f.holds());
}

TEST(Conditions, ZeroRingCandidate) {
  Candidate cand{"B = A, I = A", {ambient("T1"), ambient("T2")}, std::nullopt, {nat("T1", 2)}};
  const ConditionReport r = verify_conditions(cand);
  EXPECT_EQ(r.a.verdict, Verdict::holds);
  EXPECT_EQ(r.b.verdict, Verdict::holds);
  EXPECT_EQ(r.d.verdict, Verdict::fails);
}

TEST(Conditions, EmptyL0ListLeavesCUnknown) {
  Candidate cand{"B = A, I = A", {ambient("T1"), ambient("T2")}, std::nullopt, {}};
  EXPECT_EQ(verify_conditions(cand).c.verdict, Verdict::unknown);
  const AbhyankarContext ctx(4);
  EXPECT_EQ(verify_conditions(ctx, {}).c.verdict, Verdict::unknown);
}

TEST(Conditions, EvaluationCandidate) {
  // B = A with φ = evaluation at (1/2, 1/3): a holds trivially, 1 ∉ IA
  // since I·A = (2T₁ − 1, 3T₂ − 1) is proper, and d fails at the prime 5.
  Candidate cand{"evaluation", {ambient("T1"), ambient("T2")}, std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 3)},
                 {nat("T1", 2)}};
  const ConditionReport r = verify_conditions(cand);
  EXPECT_EQ(r.well_defined, Truth::yes);
  EXPECT_EQ(r.a.verdict, Verdict::holds);
  EXPECT_EQ(r.b.verdict, Verdict::fails);
  EXPECT_EQ(r.d.verdict, Verdict::fails);
  ASSERT_TRUE(r.d_refutation.has_value());
  EXPECT_EQ(r.d_refutation->prime, 5u);
  EXPECT_EQ(r.c.verdict, Verdict::fails);
}

TEST(Conditions, IllDefinedPhiStaysUnknown) {
  // T₁ and T₁² cannot go to 2 and 3 under one ring map.
  Candidate cand{"bad", {ambient("T1"), ambient("T1^2")}, std::vector<mpq_class>{2, 3}, {nat("T1")}};
  const ConditionReport r = verify_conditions(cand);
  EXPECT_EQ(r.well_defined, Truth::no);
  EXPECT_EQ(r.b.verdict, Verdict::unknown);
  EXPECT_EQ(r.c.verdict, Verdict::unknown);
  EXPECT_EQ(r.d.verdict, Verdict::unknown);
}

TEST(Conditions, Deterministic) {
  const AbhyankarContext ctx(5);
  const auto one = verify_conditions(ctx, {nat("T1*T2", 2), nat("T2", 2)});
  const auto two = verify_conditions(ctx, {nat("T1*T2", 2), nat("T2", 2)});
  EXPECT_EQ(one.c.summary, two.c.summary);
  ASSERT_EQ(one.c_witnesses.size(), two.c_witnesses.size());
  for (std::size_t i = 0; i < one.c_witnesses.size(); ++i) {
    EXPECT_EQ(one.c_witnesses[i].l, two.c_witnesses[i].l);
    EXPECT_EQ(one.c_witnesses[i].h.coefficients.size(), two.c_witnesses[i].h.coefficients.size());
    for (std::size_t j = 0; j < one.c_witnesses[i].h.coefficients.size(); ++j) {
      EXPECT_EQ(one.c_witnesses[i].h.coefficients[j].ambient, two.c_witnesses[i].h.coefficients[j].ambient);
    }
  }
  ASSERT_EQ(one.preimages.size(), two.preimages.size());
  for (std::size_t i = 0; i < one.preimages.size(); ++i) {
    EXPECT_EQ(one.preimages[i].element.representation, two.preimages[i].element.representation);
  }
}

TEST(Properties, ConeClosedUnderAddition) {
  testing::Random rng;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    std::vector<mpq_class> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(rng.positive_rational(9));
    const std::uint32_t box = 1 + static_cast<std::uint32_t>(rng.index(3));
    const Cone c = cone_enumerate(EvalHom(images), box);
    for (const auto& u : c.members) {
      for (const auto& v : c.members) {
        ExponentVector w(u);
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) inside = inside && (w[i] += v[i]) <= box;
        if (inside) {
          EXPECT_TRUE(c.contains(w));
        }
      }
    }
  }
}

TEST(Properties, DimensionBounds) {
  testing::Random rng;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.index(4);
    const std::uint32_t box = 1 + static_cast<std::uint32_t>(rng.index(3));
    std::vector<ExponentVector> members;
    const auto points = box_points(n, box);
    for (const auto& p : points) {
      if (rng.index(4) == 0) members.push_back(p);
    }
    bool units = true;
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector e(n, 0);
      e[i] = 1;
      if (std::find(members.begin(), members.end(), e) == members.end()) units = false;
    }
    const std::size_t d = cone_dim(make_cone(n, box, members));
    EXPECT_LE(d, n);
    if (units) {
      EXPECT_EQ(d, n);
    }
  }
}

TEST(Properties, PurityMatchesBruteForce) {
  testing::Random rng;
  std::map<bool, int> seen;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    const std::uint32_t box = 1 + static_cast<std::uint32_t>(rng.index(6));
    std::vector<ExponentVector> gens(rng.index(5));
    for (auto& g : gens) {
      g.resize(n);
      for (auto& x : g) x = static_cast<std::uint32_t>(rng.index(4));
    }
    const Purity p = purity_check(n, gens, box);
    EXPECT_EQ(p.pure, testing::brute_force_pure(n, gens, box)) << "trial " << trial;
    if (p.witness) {
      const Cone c = semigroup_in_box(n, gens, box);
      EXPECT_TRUE(c.contains(p.witness->a));
      EXPECT_FALSE(c.contains(p.witness->quotient));
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(p.witness->quotient[i] * p.witness->k, p.witness->a[i]);
    }
    ++seen[p.pure];
  }
  EXPECT_GT(seen[true], 50);
  EXPECT_GT(seen[false], 50);
}

TEST(Properties, InteriorPointRecheck) {
  testing::Random rng;
  int found = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    const std::uint32_t box = 2 + static_cast<std::uint32_t>(rng.index(3));
    std::vector<ExponentVector> gens(1 + rng.index(4));
    for (auto& g : gens) {
      g.resize(n);
      for (auto& x : g) x = static_cast<std::uint32_t>(rng.index(3));
    }
    const Cone c = semigroup_in_box(n, gens, box);
    const auto u = find_interior_u(c);
    if (!u) continue;
    ++found;
    std::set<ExponentVector> members(c.members.begin(), c.members.end());
    EXPECT_TRUE(members.count(*u));
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector v(*u);
      ++v[i];
      EXPECT_TRUE(members.count(v));
    }
    const auto fr = qf_from_cone(c, cone_oracle(c));
    ASSERT_TRUE(fr.has_value());
    for (const auto& f : *fr) EXPECT_TRUE(f.holds());
  }
  EXPECT_GT(found, 100);
}

}  // namespace
}  // namespace semiring_lab
