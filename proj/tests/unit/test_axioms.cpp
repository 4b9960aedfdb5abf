#include <gtest/gtest.h>

#include "toag/axioms.hpp"
#include "toag/error.hpp"

using namespace toag;

namespace {

TruncStructure z(long tau) { return TruncStructure::truncation(Group::integers(), Integer(tau)); }
GroupElement i(long v) { return Integer(v); }

const char* kIdempotent = "TOAG1\nn 2\n0 1 2\n1 1 2\n2 2 2\n";

std::vector<TruncElement> indices(std::initializer_list<long> xs) {
  std::vector<TruncElement> out;
  for (long x : xs) out.push_back(i(x));
  return out;
}

}  // namespace

TEST(CheckAxiom, AssociativityExhaustiveOnTauSeven) {
  const auto r = check_axiom(z(7), 5);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.samples, 512u);
  EXPECT_EQ(r.render(), "AXIOM 5 PASS samples=512 seed=0");
}

TEST(CheckAxiom, IdempotentTableFailsAxiomSeven) {
  const auto t = load_finite_table(kIdempotent);
  const auto r = check_axiom(t, 7);
  ASSERT_EQ(r.verdict, Verdict::fail);
  // 1 + 0 = 1 + 1 = 1: the solution of 1 + z = 1 is not unique.
  EXPECT_EQ(r.witness, indices({1, 1, 1}));
  EXPECT_EQ(evaluate_statement(t, 7, r.witness), Outcome::violated);
  EXPECT_EQ(r.render(), "AXIOM 7 FAIL witness=(1,1,1) samples=14 seed=0");
  // y = tau is outside the hypothesis, so (1,2) is no witness.
  EXPECT_EQ(evaluate_statement(t, 7, indices({1, 2, 0})), Outcome::vacuous);
}

TEST(CheckAxiom, IdempotentTableOtherFailures) {
  const auto t = load_finite_table(kIdempotent);
  for (int id : {6, 9}) {
    const auto r = check_axiom(t, id);
    ASSERT_EQ(r.verdict, Verdict::fail) << id;
    EXPECT_EQ(evaluate_statement(t, id, r.witness), Outcome::violated);
  }
  EXPECT_EQ(evaluate_statement(t, 6, indices({1, 0, 1})), Outcome::violated);
  for (int id : {1, 2, 3, 4, 5}) EXPECT_EQ(check_axiom(t, id).verdict, Verdict::pass) << id;
}

TEST(CheckAxiom, RationalsSampled) {
  CheckOptions options;
  options.budget = 5000;
  const auto r = check_axiom(TruncStructure::truncation(Group::rationals(), Rational(1)), 9, options);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.samples, 5000u);
}

TEST(CheckAxiom, AllAxiomsOnTruncations) {
  for (long tau = 1; tau <= 6; ++tau) {
    for (const auto& r : check_axioms(z(tau))) EXPECT_EQ(r.verdict, Verdict::pass) << tau << ' ' << r.render();
  }
  CheckOptions options;
  options.budget = 3000;
  for (const char* spec : {"Q:tau=3/2", "ZZ:tau=(2,-3)", "QZ:tau=(1/2,4)"}) {
    const auto t = *parse_builtin_spec(spec);
    for (const auto& r : check_axioms(t, options)) EXPECT_EQ(r.verdict, Verdict::pass) << spec << ' ' << r.render();
  }
}

TEST(CheckAxiom, DeterministicForSeed) {
  CheckOptions options;
  options.budget = 500;
  options.seed = 42;
  const auto t = *parse_builtin_spec("QZ:tau=(1,0)");
  const auto a = check_axiom(t, 14, options);
  const auto b = check_axiom(t, 14, options);
  EXPECT_EQ(a.render(), b.render());
  EXPECT_EQ(a.applicable, b.applicable);
  EXPECT_NE(a.render().find("seed=42"), std::string::npos);
}

TEST(CheckAxiom, UnknownId) {
  EXPECT_THROW(check_axiom(z(3), 0), PreconditionError);
  EXPECT_THROW(check_axiom(z(3), 17), PreconditionError);
  EXPECT_THROW(evaluate_statement(z(3), 5, indices({1, 2})), PreconditionError);
}

TEST(CheckAxiom, OversizedTableReportsExhaustedBudget) {
  const auto t = TruncStructure::finite(FiniteTable::saturating(40));
  CheckOptions options;
  options.budget = 1000;
  const auto r = check_axiom(t, 5, options);
  EXPECT_EQ(r.verdict, Verdict::exhausted_budget);
  EXPECT_EQ(to_string(r.verdict), "EXHAUSTED-BUDGET");
}

TEST(CheckLemmas, Examples) {
  const auto t = z(6);
  EXPECT_EQ(evaluate_statement(t, kLemma1, indices({2, 4})), Outcome::holds);
  EXPECT_EQ(evaluate_statement(t, kCorollary1, indices({1, 3})), Outcome::holds);
  const auto reports = check_lemmas(t);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].render().substr(0, 12), "LEMMA 1 PASS");
  EXPECT_EQ(reports[1].render().substr(0, 12), "LEMMA 2 PASS");
  EXPECT_EQ(reports[2].render().substr(0, 16), "COROLLARY 1 PASS");
}

TEST(CheckLemmas, FailuresReevaluate) {
  const auto t = load_finite_table(kIdempotent);
  for (const auto& r : check_lemmas(t)) {
    if (r.verdict == Verdict::fail) EXPECT_EQ(evaluate_statement(t, r.id, r.witness), Outcome::violated);
  }
}

// The fast table evaluator and the generic evaluator are separate code paths;
// they must agree on every candidate table with N <= 4.
TEST(TableSatisfies, AgreesWithGenericEvaluation) {
  for (std::size_t n = 1; n <= 4; ++n) {
    SearchSpec spec;
    spec.size = n;
    const auto candidates = enumerate_toags(spec).tables;
    for (const auto& table : candidates) {
      const auto t = TruncStructure::finite(table);
      const auto xs = t.elements();
      for (int id = 1; id <= kAxiomCount; ++id) {
        const int arity = statement_arity(id);
        bool holds = true;
        std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
        std::vector<TruncElement> tuple(static_cast<std::size_t>(arity));
        while (holds) {
          for (int a = 0; a < arity; ++a) tuple[a] = xs[idx[a]];
          if (evaluate_statement(t, id, tuple) == Outcome::violated) holds = false;
          int pos = 0;
          while (pos < arity && ++idx[pos] == xs.size()) idx[pos++] = 0;
          if (pos == arity) break;
        }
        ASSERT_EQ(table_satisfies(table, id), holds) << "axiom " << id << "\n" << table.to_text();
      }
    }
  }
}

TEST(AxiomSet, ParseAndFormat) {
  EXPECT_EQ(parse_axiom_set("all").count(), 16u);
  EXPECT_EQ(parse_axiom_set("none").count(), 0u);
  const auto s = parse_axiom_set("1-3, 7,10-11");
  EXPECT_EQ(format_axiom_set(s), "1,2,3,7,10,11");
  EXPECT_THROW(parse_axiom_set("0"), ParseError);
  EXPECT_THROW(parse_axiom_set("3-1"), ParseError);
  EXPECT_THROW(parse_axiom_set("17"), ParseError);
  EXPECT_THROW(parse_axiom_set("x"), ParseError);
}
