#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/semiring/congruence.hpp"
#include "semiring_lab/semiring/difference.hpp"
#include "semiring_lab/semiring/structure.hpp"
#include "support/random.hpp"

namespace semiring_lab {
namespace {

SemiringBudget small(std::uint64_t deg, std::uint64_t coef, std::uint64_t steps = 100000) {
  return {deg, coef, steps};
}

Presentation pres1(const std::string& text) { return parse_presentation(text, 1); }

Polynomial nat(const std::string& text, std::size_t n = 1) {
  return parse_polynomial(text, VarNames::ambient(n), Domain::natural);
}

// Re-evaluates a reported model with code independent of the library and
// checks that it satisfies the relations and separates the claimed values.
// Values are compared as strings produced by the same ad-hoc evaluator.
std::optional<std::vector<std::string>> check_model(const Presentation& pres, const ModelWitness& w,
                                                    const std::vector<Polynomial>& elements) {
  auto eval = [&](const Polynomial& p) -> std::string {
    if (w.model.rfind("threshold-", 0) == 0) {
      const long cap = std::stol(w.model.substr(10));
      long total = 0;
      for (const auto& [m, c] : p.terms()) {
        long t = std::min<long>(c.get_num().get_si(), cap);
        for (std::size_t i = 0; i < m.nvars(); ++i) {
          for (Exponent e = 0; e < m[i]; ++e) t = std::min(t * std::stol(w.assignment[i]), cap);
        }
        total = std::min(total + t, cap);
      }
      return std::to_string(total);
    }
    if (w.model == "max-plus") {
      std::optional<long> best;
      for (const auto& [m, c] : p.terms()) {
        std::optional<long> t = 0L;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
          if (m[i] == 0) continue;
          if (w.assignment[i] == "-inf") {
            t.reset();
          } else if (t) {
            *t += static_cast<long>(m[i]) * std::stol(w.assignment[i]);
          }
        }
        if (t && (!best || *t > *best)) best = t;
      }
      return best ? std::to_string(*best) : "-inf";
    }
    EXPECT_EQ(w.model, "rational");
    std::vector<mpq_class> point;
    for (const auto& a : w.assignment) point.emplace_back(a);
    mpq_class total = 0;
    for (const auto& [m, c] : p.terms()) {
      mpq_class t = c;
      for (std::size_t i = 0; i < m.nvars(); ++i) {
        for (Exponent e = 0; e < m[i]; ++e) t *= point[i];
      }
      total += t;
    }
    return total.get_str();
  };
  for (const auto& [l, r] : pres.relations()) {
    if (eval(l) != eval(r)) return std::nullopt;
  }
  std::vector<std::string> values;
  for (const auto& e : elements) values.push_back(eval(e));
  return values;
}

TEST(CongruenceClose, OnePlusOneCollapsesEveryDouble) {
  const Presentation pres = pres1("1 + 1 = 1");
  const auto cc = congruence_close(pres, small(2, 4));
  EXPECT_EQ(cc.status(), ClosureStatus::complete);
  std::size_t checked = 0;
  for (const auto& p : small_elements(1, 2, 2, 1000)) {
    const Polynomial pp = p + p;
    EXPECT_TRUE(cc.contains(pp, p)) << format(p, VarNames::ambient(1));
    ++checked;
  }
  EXPECT_EQ(checked, 27U);
}

TEST(CongruenceClose, FreePresentationIsReflexiveOnly) {
  const auto cc = congruence_close(Presentation(1), small(2, 3));
  EXPECT_EQ(cc.status(), ClosureStatus::complete);
  EXPECT_EQ(cc.stored(), 64U);
  for (const auto& p : small_elements(1, 2, 3, 1000)) {
    EXPECT_EQ(cc.stored_class(p), std::vector<Polynomial>{p});
  }
}

TEST(CongruenceClose, TPlusOneAbsorbsConstants) {
  const auto cc = congruence_close(pres1("T1 + 1 = T1"), small(1, 8));
  EXPECT_EQ(cc.status(), ClosureStatus::complete);
  for (int k = 0; k <= 8; ++k) {
    EXPECT_TRUE(cc.contains(nat("T1 + " + std::to_string(k)), nat("T1"))) << k;
  }
  EXPECT_FALSE(cc.contains(nat("1"), nat("0")));
}

TEST(CongruenceClose, SmallStepBudgetIsExhausted) {
  const auto cc = congruence_close(pres1("T1 + 1 = T1"), small(6, 64, 100));
  EXPECT_EQ(cc.status(), ClosureStatus::exhausted);
  EXPECT_LE(cc.stored(), 100U);
}

TEST(CongruenceClose, RejectsZeroBudget) {
  EXPECT_THROW(congruence_close(Presentation(1), small(2, 0)), PreconditionError);
  EXPECT_THROW(congruence_close(Presentation(1), small(2, 4, 0)), PreconditionError);
}

TEST(WordsEquivalent, Reflexive) {
  const auto cc = congruence_close(pres1("T1 + 1 = T1"), small(3, 8));
  const auto eq = words_equivalent(nat("T1^2 + 3"), nat("T1^2 + 3"), cc);
  EXPECT_EQ(eq.verdict, Truth::yes);
  EXPECT_TRUE(eq.derivation->empty());
}

TEST(WordsEquivalent, TPlusTwoIsTwoStepsFromT) {
  const Presentation pres = pres1("T1 + 1 = T1");
  const auto cc = congruence_close(pres, small(2, 8));
  const auto eq = words_equivalent(nat("T1 + 2"), nat("T1"), cc);
  ASSERT_EQ(eq.verdict, Truth::yes);
  EXPECT_EQ(eq.derivation->size(), 2U);
  EXPECT_TRUE(replay(pres, nat("T1 + 2"), nat("T1"), *eq.derivation));
}

TEST(WordsEquivalent, FreePresentationSeparatesTwoFromOne) {
  const Presentation pres(1);
  const auto cc = congruence_close(pres, small(2, 4));
  const auto eq = words_equivalent(nat("2"), nat("1"), cc);
  ASSERT_EQ(eq.verdict, Truth::no);
  const auto values = check_model(pres, *eq.separation, {nat("2"), nat("1")});
  ASSERT_TRUE(values);
  EXPECT_NE((*values)[0], (*values)[1]);
}

TEST(WordsEquivalent, NeedsMultipliedRelation) {
  // T^2 + 1 -> T^2 + T + 1 -> T^2 + T -> T^2
  const Presentation pres = pres1("T1 + 1 = T1");
  const auto cc = congruence_close(pres, small(2, 4));
  const auto eq = words_equivalent(nat("T1^2 + 1"), nat("T1^2"), cc);
  ASSERT_EQ(eq.verdict, Truth::yes);
  EXPECT_TRUE(replay(pres, nat("T1^2 + 1"), nat("T1^2"), *eq.derivation));
  EXPECT_TRUE(std::any_of(eq.derivation->begin(), eq.derivation->end(),
                          [](const DerivationStep& s) { return !s.multiplier.is_one(); }));
}

TEST(WordsEquivalent, RejectsOutOfBudgetAndWrongDomain) {
  const auto cc = congruence_close(Presentation(1), small(2, 4));
  EXPECT_THROW(words_equivalent(nat("T1^3"), nat("1"), cc), OutOfBudget);
  EXPECT_THROW(words_equivalent(nat("5"), nat("1"), cc), OutOfBudget);
  EXPECT_THROW(words_equivalent(parse_polynomial("T1", VarNames::ambient(1)), nat("1"), cc),
               DomainMismatch);
  EXPECT_THROW(words_equivalent(nat("T2", 2), nat("1", 2), cc), ArityMismatch);
}

TEST(Replay, RejectsTamperedSteps) {
  const Presentation pres = pres1("T1 + 1 = T1");
  const auto cc = congruence_close(pres, small(2, 8));
  auto d = *words_equivalent(nat("T1 + 2"), nat("T1"), cc).derivation;
  EXPECT_FALSE(replay(pres, nat("T1 + 3"), nat("T1"), d));
  d.front().after = nat("T1 + 5");
  EXPECT_FALSE(replay(pres, nat("T1 + 2"), nat("T1"), d));
}

TEST(Presentation, ReaderReportsLineAndColumn) {
  const auto pres = parse_presentation("# comment\n\nT1*T1 = T1\nT1 + T1 = T1\n", 1);
  EXPECT_EQ(pres.relations().size(), 2U);
  try {
    parse_presentation("T1 = 1\nT1 + = 2\n", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_presentation("T1 + 1\n", 1), ParseError);
  EXPECT_THROW(parse_presentation("T1 = 0 - 1\n", 1), AlgebraError);
}

TEST(Idempotence, GivenRelation) {
  const auto eq = is_add_idempotent(pres1("1 + 1 = 1"), small(2, 4));
  EXPECT_EQ(eq.verdict, Truth::yes);
}

TEST(Idempotence, FreeSemiringIsNot) {
  const auto eq = is_add_idempotent(Presentation(1), small(2, 4));
  EXPECT_EQ(eq.verdict, Truth::no);
}

TEST(Idempotence, IdempotentGeneratorDoesNotForceIt) {
  // T -> 0 is a homomorphism onto N that respects both relations, so 2 and
  // 1 stay apart: the answer is a certified No.
  const Presentation pres = pres1("T1*T1 = T1\nT1 + T1 = T1");
  const auto eq = is_add_idempotent(pres, small(3, 8));
  ASSERT_EQ(eq.verdict, Truth::no);
  const auto values = check_model(pres, *eq.separation, {nat("2"), nat("1")});
  ASSERT_TRUE(values);
  EXPECT_NE((*values)[0], (*values)[1]);
  const auto cc = congruence_close(pres, small(3, 8));
  EXPECT_FALSE(cc.search(nat("2"), nat("1")).derivation);
}

TEST(Cancellativity, RationalTargetCancels) {
  EXPECT_EQ(is_add_cancellative(EvalHom({mpq_class(1, 2)})).verdict, Truth::yes);
}

TEST(Cancellativity, TPlusOneWitness) {
  const Presentation pres = pres1("T1 + 1 = T1");
  const auto c = is_add_cancellative(pres);
  ASSERT_EQ(c.verdict, Truth::no);
  EXPECT_EQ(c.witness->a, nat("1"));
  EXPECT_EQ(c.witness->b, nat("0"));
  EXPECT_EQ(c.witness->c, nat("T1"));
  EXPECT_TRUE(replay(pres, c.witness->a + c.witness->c, c.witness->b + c.witness->c,
                     c.witness->derivation));
  const auto values = check_model(pres, c.witness->separation, {c.witness->a, c.witness->b});
  ASSERT_TRUE(values);
  EXPECT_NE((*values)[0], (*values)[1]);
}

TEST(Cancellativity, FreeSemiringCancels) {
  EXPECT_EQ(is_add_cancellative(Presentation(2)).verdict, Truth::yes);
}

TEST(Preorder, PositiveRationals) {
  auto r = preorder_leq(mpq_class(2, 3), mpq_class(5, 3));
  EXPECT_EQ(r.verdict, Truth::yes);
  EXPECT_EQ(*r.c, 1);
  EXPECT_EQ(preorder_leq(mpq_class(5), mpq_class(5)).verdict, Truth::no);
  EXPECT_EQ(preorder_leq(mpq_class(5), mpq_class(2)).verdict, Truth::no);
  EXPECT_THROW(preorder_leq(mpq_class(0), mpq_class(2)), DomainViolation);
}

TEST(Preorder, ThroughEvaluation) {
  const EvalHom phi({mpq_class(1, 2)});
  EXPECT_EQ(preorder_leq(nat("T1"), nat("T1 + 1"), phi).verdict, Truth::yes);
  EXPECT_EQ(preorder_leq(nat("2*T1"), nat("1"), phi).verdict, Truth::no);
}

TEST(Preorder, Presentations) {
  const auto free_cc = congruence_close(Presentation(1), small(2, 4));
  EXPECT_EQ(preorder_leq(nat("T1"), nat("T1 + 1"), free_cc).verdict, Truth::yes);
  EXPECT_EQ(preorder_leq(nat("T1"), nat("T1"), free_cc).verdict, Truth::no);
  EXPECT_EQ(preorder_leq(nat("T1^2"), nat("T1 + 1"), free_cc).verdict, Truth::no);

  const Presentation pres = pres1("T1 + 1 = T1");
  const auto cc = congruence_close(pres, small(2, 4));
  const auto r = preorder_leq(nat("1"), nat("T1"), cc);
  ASSERT_EQ(r.verdict, Truth::yes);
  EXPECT_TRUE(replay(pres, nat("T1"), nat("1") + *r.c, *r.derivation));
  const auto refuted = preorder_leq(nat("T1"), nat("1"), cc);
  ASSERT_EQ(refuted.verdict, Truth::no);
  EXPECT_TRUE(refuted.refutation);
}

TEST(Difference, OverNaturals) {
  const DifferenceRing<NaturalNumbers> z;
  EXPECT_TRUE(z.equal(z.pair(3, 1), z.pair(5, 3)));
  const auto sq = z.mul(z.pair(2, 1), z.pair(2, 1));
  EXPECT_EQ(sq.minuend, 5);
  EXPECT_EQ(sq.subtrahend, 4);
  EXPECT_TRUE(z.equal(sq, z.embed(1)));
  EXPECT_THROW(z.pair(-1, 0), DomainViolation);
}

TEST(Difference, OverPositiveRationals) {
  const DifferenceRing<PositiveRationals> q;
  EXPECT_TRUE(q.equal(q.embed(mpq_class(1, 2)), q.pair(mpq_class(3, 2), 1)));
  EXPECT_TRUE(q.equal(q.subtract(q.embed(2), q.embed(2)), q.pair(7, 7)));
  EXPECT_THROW(q.pair(0, 1), DomainViolation);
}

TEST(Difference, RefusedForTPlusOne) {
  try {
    difference_ring(pres1("T1 + 1 = T1"));
    FAIL();
  } catch (const NotCancellative& e) {
    ASSERT_TRUE(e.verdict().witness);
    EXPECT_EQ(e.verdict().witness->a, nat("1"));
    EXPECT_EQ(e.verdict().witness->b, nat("0"));
    EXPECT_EQ(e.verdict().witness->c, nat("T1"));
  }
  const auto ring = difference_ring(Presentation(1));
  EXPECT_TRUE(ring.equal(ring.pair(nat("T1 + 2"), nat("2")), ring.embed(nat("T1"))));
}

TEST(FindL, TPlusOne) {
  const Presentation pres = pres1("T1 + 1 = T1");
  const auto cc = congruence_close(pres, small(2, 4));
  const auto found = find_L(cc);
  for (const char* l : {"T1", "T1 + 1", "T1^2", "2*T1"}) {
    EXPECT_NE(std::find(found.elements.begin(), found.elements.end(), nat(l)), found.elements.end()) << l;
  }
  EXPECT_EQ(std::find(found.elements.begin(), found.elements.end(), nat("1")), found.elements.end());
  EXPECT_TRUE(found.closure_holds);
  EXPECT_GT(found.closure_checks, 0U);
  for (std::size_t i = 0; i < found.elements.size(); ++i) {
    EXPECT_TRUE(replay(pres, found.elements[i] + nat("1"), found.elements[i], found.derivations[i]));
  }
}

TEST(FindL, CancellativeTargetsAreEmpty) {
  EXPECT_TRUE(find_L(EvalHom({mpq_class(3)})).elements.empty());
  const auto found = find_L(congruence_close(Presentation(1), small(3, 4)));
  EXPECT_TRUE(found.elements.empty());
  EXPECT_EQ(found.undecided, 0U);
  EXPECT_GT(found.candidates, 0U);
}

// Random presentations in one or two variables with small sides.
Presentation random_presentation(testing::Random& rng, std::size_t nvars) {
  Presentation pres(nvars);
  const std::size_t count = 1 + rng.index(2);
  for (std::size_t i = 0; i < count; ++i) {
    pres.add(rng.polynomial(nvars, 2, 2, Domain::natural, 2), rng.polynomial(nvars, 2, 2, Domain::natural, 2));
  }
  return pres;
}

TEST(SemiringProperties, ClosureIsMonotoneInBudget) {
  testing::Random rng;
  std::size_t yes = 0;
  for (int i = 0; i < 100; ++i) {
    const Presentation pres = random_presentation(rng, 1 + rng.index(2));
    const auto lo = congruence_close(pres, small(2, 2, 20000));
    const auto hi = congruence_close(pres, small(3, 3, 30000));
    const auto elems = small_elements(pres.nvars(), 2, 2, 12);
    for (const auto& p : elems) {
      for (const auto& q : elems) {
        if (!lo.contains(p, q)) continue;
        ++yes;
        EXPECT_TRUE(hi.contains(p, q) || hi.search(p, q).derivation);
      }
    }
  }
  EXPECT_GT(yes, 1200U);
}

TEST(SemiringProperties, AnswersCarryCheckableEvidence) {
  testing::Random rng;
  std::size_t yes = 0, no = 0;
  for (int i = 0; i < 150; ++i) {
    const Presentation pres = random_presentation(rng, 1 + rng.index(2));
    const auto cc = congruence_close(pres, small(2, 3, 20000));
    const auto elems = small_elements(pres.nvars(), 2, 3, 10);
    for (int j = 0; j < 10; ++j) {
      const Polynomial& p = elems[rng.index(elems.size())];
      const Polynomial& q = elems[rng.index(elems.size())];
      const auto eq = words_equivalent(p, q, cc);
      if (eq.verdict == Truth::yes) {
        ++yes;
        EXPECT_TRUE(replay(pres, p, q, *eq.derivation));
      } else if (eq.verdict == Truth::no) {
        ++no;
        const auto values = check_model(pres, *eq.separation, {p, q});
        ASSERT_TRUE(values) << eq.separation->model;
        EXPECT_NE((*values)[0], (*values)[1]);
        EXPECT_FALSE(cc.search(p, q).derivation);
      }
    }
  }
  EXPECT_GT(yes, 200U);
  EXPECT_GT(no, 200U);
}

TEST(SemiringProperties, IdempotenceLemma) {
  testing::Random rng;
  for (int i = 0; i < 40; ++i) {
    Presentation pres = random_presentation(rng, 1);
    pres.add(nat("2"), nat("1"));
    const auto cc = congruence_close(pres, small(2, 4, 50000));
    ASSERT_EQ(is_add_idempotent(cc).verdict, Truth::yes);
    for (const auto& p : small_elements(1, 2, 2, 1000)) {
      const auto eq = words_equivalent(p + p, p, cc);
      ASSERT_EQ(eq.verdict, Truth::yes) << format(p, VarNames::ambient(1));
      EXPECT_TRUE(replay(pres, p + p, p, *eq.derivation));
    }
  }
}

TEST(SemiringProperties, DifferencesOverNaturalsAreIntegers) {
  testing::Random rng;
  const DifferenceRing<NaturalNumbers> z;
  auto value = [](const DifferencePair<mpz_class>& x) { return mpz_class(x.minuend - x.subtrahend); };
  for (int i = 0; i < 1000; ++i) {
    const auto x = z.pair(rng.integer(0, 100), rng.integer(0, 100));
    const auto y = z.pair(rng.integer(0, 100), rng.integer(0, 100));
    EXPECT_EQ(value(z.add(x, y)), value(x) + value(y));
    EXPECT_EQ(value(z.mul(x, y)), value(x) * value(y));
    EXPECT_EQ(z.equal(x, y), value(x) == value(y));
  }
}

TEST(SemiringProperties, RationalPreorderIsTransitive) {
  testing::Random rng;
  std::size_t chains = 0;
  for (int i = 0; i < 1000; ++i) {
    const mpq_class a = rng.positive_rational(6), b = rng.positive_rational(6), c = rng.positive_rational(6);
    if (preorder_leq(a, b).verdict == Truth::yes && preorder_leq(b, c).verdict == Truth::yes) {
      ++chains;
      EXPECT_EQ(preorder_leq(a, c).verdict, Truth::yes);
    }
  }
  EXPECT_GT(chains, 100U);
}

}  // namespace
}  // namespace semiring_lab
