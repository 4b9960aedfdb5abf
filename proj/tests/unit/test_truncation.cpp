#include <gtest/gtest.h>

#include <algorithm>

#include "toag/error.hpp"
#include "toag/truncation.hpp"

using namespace toag;

namespace {

TruncStructure z(long tau) { return TruncStructure::truncation(Group::integers(), Integer(tau)); }
GroupElement i(long v) { return Integer(v); }

const char* kSaturating2 = "TOAG1\nn 2\n0 1 2\n1 2 2\n2 2 2\n";

}  // namespace

TEST(Truncation, MakeTruncation) {
  EXPECT_EQ(z(5).elements().size(), 6u);
  EXPECT_FALSE(TruncStructure::truncation(Group::rationals(), Rational(1)).is_finite());
  EXPECT_THROW(z(0), PreconditionError);
  EXPECT_THROW(z(-3), PreconditionError);
  EXPECT_THROW(TruncStructure::truncation(Group::integers(), Rational(1, 2)), MixedInstanceError);
  EXPECT_THROW(make_truncation(Group::lex_zz(), "(-1,5)"), PreconditionError);
}

TEST(Truncation, AddExamples) {
  const auto t = z(5);
  EXPECT_EQ(t.add(i(3), i(4)), i(5));
  EXPECT_EQ(t.add(i(2), i(2)), i(4));
  for (const auto& x : t.elements()) EXPECT_EQ(t.add(x, t.tau()), t.tau());
  EXPECT_THROW(TruncStructure::finite(FiniteTable::saturating(3)).add(i(4), i(0)), PreconditionError);
}

TEST(Truncation, AddIsMinOfSumAndTau) {
  for (long tau = 1; tau <= 12; ++tau) {
    const auto t = z(tau);
    for (long x = 0; x <= tau; ++x) {
      for (long y = 0; y <= tau; ++y) ASSERT_EQ(t.add(i(x), i(y)), i(std::min(x + y, tau)));
    }
  }
}

TEST(Truncation, DotminusExamples) {
  const auto t = z(5);
  EXPECT_EQ(t.dotminus(i(4), i(1)), i(3));
  EXPECT_EQ(t.dotminus(i(3), i(3)), i(0));
  EXPECT_THROW(t.dotminus(i(5), i(1)), PreconditionError);
  EXPECT_THROW(t.dotminus(i(1), i(3)), PreconditionError);
  EXPECT_FALSE(t.try_dotminus(i(5), i(1)));
}

TEST(Truncation, TauDotminusExamples) {
  const auto t = z(5);
  EXPECT_EQ(t.tau_dotminus(i(2)), i(3));
  EXPECT_EQ(t.tau_dotminus(i(5)), i(0));
  EXPECT_EQ(t.tau_dotminus(i(0)), i(5));
}

TEST(Truncation, CaseOfExamples) {
  const auto t = z(5);
  EXPECT_EQ(t.case_of(i(2), i(2)), Case::case1);
  EXPECT_EQ(t.case_of(i(3), i(2)), Case::case2);
  EXPECT_EQ(t.case_of(i(0), i(4)), Case::case1);
  EXPECT_THROW(t.case_of(i(5), i(0)), PreconditionError);
}

TEST(Truncation, DerivedOperationProperties) {
  for (const auto& t : {z(1), z(6), load_finite_table(kSaturating2)}) {
    const auto xs = t.elements();
    for (const auto& x : xs) {
      const auto c = t.tau_dotminus(x);
      ASSERT_EQ(t.add(x, c), t.tau());
      for (const auto& w : xs) {
        if (t.less(w, c)) ASSERT_TRUE(t.less(t.add(x, w), t.tau()));
      }
      ASSERT_EQ(t.tau_dotminus(c), x);
      for (const auto& y : xs) {
        if (t.less_equal(x, y) && !t.is_top(y)) {
          const auto d = t.dotminus(y, x);
          ASSERT_EQ(t.add(x, d), y);
          for (const auto& w : xs) {
            if (!(w == d)) ASSERT_NE(t.add(x, w), y);
          }
        }
        if (!t.is_top(x) && !t.is_top(y)) {
          const bool case2 = t.less_equal(t.tau_dotminus(y), x);
          ASSERT_EQ(t.case_of(x, y) == Case::case2, case2);
        }
      }
    }
  }
}

TEST(Truncation, SampledDerivedOperations) {
  Rng rng(5);
  for (const auto& t : {TruncStructure::truncation(Group::rationals(), Rational(1)), make_truncation(Group::lex_zz(), "(1,0)"),
                        make_truncation(Group::lex_qz(), "(1,0)")}) {
    for (int n = 0; n < 2000; ++n) {
      auto x = t.sample(rng, 50);
      auto y = t.sample(rng, 50);
      ASSERT_TRUE(t.contains(x));
      if (t.less(y, x)) std::swap(x, y);
      if (!t.is_top(y)) ASSERT_EQ(t.add(x, t.dotminus(y, x)), y);
      ASSERT_EQ(t.add(x, t.tau_dotminus(x)), t.tau());
      ASSERT_EQ(t.tau_dotminus(t.tau_dotminus(x)), x);
    }
  }
}

TEST(FiniteTableLoad, ValidAndInvalid) {
  const auto t = load_finite_table(kSaturating2);
  EXPECT_TRUE(t.is_table());
  EXPECT_EQ(t.describe(), "TOAG1(n=2)");
  EXPECT_EQ(t.add(i(1), i(1)), i(2));

  try {
    load_finite_table("TOAG1\nn 2\n1 1 2\n1 2 2\n2 2 2\n");
    FAIL() << "row 0 is not the identity";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("Axiom 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_finite_table("TOAG1\nn 2\n0 1 2\n2 1 2\n2 2 2\n"), ParseError);  // not commutative
  EXPECT_THROW(load_finite_table("TOAG1\nn 2\n0 1 2\n1 2 2\n2 2 1\n"), ParseError);  // tau not absorbing
  EXPECT_THROW(load_finite_table("TOAG1\nn 3\n0 1 2 3\n1 2 1 3\n2 1 3 3\n3 3 3 3\n"), ParseError);  // not monotone
  EXPECT_THROW(load_finite_table("TOAG2\nn 1\n0 1\n1 1\n"), ParseError);
  EXPECT_THROW(load_finite_table("TOAG1\nn 1\n0 1\n1\n"), ParseError);
  EXPECT_THROW(load_finite_table("TOAG1\nn 1\n0 1\n1 7\n"), ParseError);
  EXPECT_THROW(load_finite_table("TOAG1\nn 0\n0\n"), ParseError);
}

TEST(FiniteTableLoad, CommentsAndBlankLines) {
  const auto t = load_finite_table("# a comment\n\nTOAG1  # header\nn 1\n\n0 1\n1 1 # top row\n");
  EXPECT_EQ(t.table(), FiniteTable::saturating(1));
}

TEST(FiniteTableLoad, SaturatingTableMatchesTruncation) {
  std::string text = "TOAG1\nn 5\n";
  for (long x = 0; x <= 5; ++x) {
    for (long y = 0; y <= 5; ++y) text += std::to_string(std::min(x + y, 5L)) + (y == 5 ? "\n" : " ");
  }
  const auto table = load_finite_table(text);
  const auto trunc = z(5);
  for (long x = 0; x <= 5; ++x) {
    for (long y = 0; y <= 5; ++y) ASSERT_EQ(table.add(i(x), i(y)), trunc.add(i(x), i(y)));
  }
  EXPECT_EQ(parse_finite_table(FiniteTable::saturating(5).to_text()), FiniteTable::saturating(5));
}

TEST(BuiltinSpec, Parse) {
  EXPECT_EQ(parse_builtin_spec("Z:tau=7")->describe(), "Z:tau=7");
  EXPECT_EQ(parse_builtin_spec("Q:tau=1/2")->tau(), GroupElement(Rational(1, 2)));
  EXPECT_EQ(parse_builtin_spec("ZZ:tau=(1,0)")->group().kind(), GroupKind::lex_zz);
  EXPECT_EQ(parse_builtin_spec("QZ:tau=(1/2,3)")->group().kind(), GroupKind::lex_qz);
  EXPECT_FALSE(parse_builtin_spec("table.toag"));
  EXPECT_THROW(parse_builtin_spec("Z:tau=x"), ParseError);
}
