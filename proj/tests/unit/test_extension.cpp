#include <gtest/gtest.h>

#include "toag/error.hpp"
#include "toag/extension.hpp"

using namespace toag;

namespace {

TruncStructure z(long tau) { return TruncStructure::truncation(Group::integers(), Integer(tau)); }
PElement pe(long k, long x) { return {Integer(k), Integer(x)}; }

// Integer oracle: <k,x> stands for k*tau + x.
long phi(const PElement& a, long tau) { return a.k.convert_to<long>() * tau + a.x.as<Integer>().convert_to<long>(); }

}  // namespace

TEST(Extension, AddExamples) {
  const Extension p(z(5));
  EXPECT_EQ(p.add(pe(0, 2), pe(0, 2)), pe(0, 4));
  EXPECT_EQ(p.add(pe(1, 3), pe(2, 4)), pe(4, 2));
  EXPECT_EQ(p.add(pe(0, 3), pe(0, 2)), p.tau_p());
  EXPECT_EQ(p.add(pe(1, 3), pe(2, 4)).to_string(), "<4,2>");
}

TEST(Extension, CompareExamples) {
  const Extension p(z(5));
  EXPECT_TRUE(p.compare(pe(0, 4), pe(1, 0)) < 0);
  EXPECT_TRUE(p.compare(pe(2, 1), pe(2, 1)) == 0);
  EXPECT_TRUE(p.compare(pe(3, 0), pe(2, 4)) > 0);
}

TEST(Extension, CancelWitnessExamples) {
  const Extension p(z(5));
  EXPECT_EQ(p.cancel_witness(pe(0, 4), pe(2, 1)), pe(1, 2));
  EXPECT_EQ(p.add(pe(0, 4), pe(1, 2)), pe(2, 1));
  EXPECT_EQ(p.cancel_witness(pe(1, 2), pe(1, 4)), pe(0, 2));
  EXPECT_EQ(p.cancel_witness(pe(0, 1), pe(2, 3)), pe(2, 2));
  EXPECT_THROW(p.cancel_witness(pe(2, 3), pe(0, 1)), PreconditionError);
}

TEST(Extension, EmbedExamples) {
  const Extension p(z(5));
  EXPECT_EQ(p.embed(Integer(3)), pe(0, 3));
  EXPECT_EQ(p.embed(Integer(5)), pe(1, 0));
  EXPECT_EQ(p.embed(Integer(0)), pe(0, 0));
  EXPECT_THROW(p.embed(Integer(6)), PreconditionError);
}

TEST(Extension, InvalidElements) {
  const Extension p(z(5));
  EXPECT_THROW(p.make(Integer(-1), Integer(0)), PreconditionError);
  EXPECT_THROW(p.make(Integer(0), Integer(5)), PreconditionError);
  EXPECT_THROW(p.add(pe(0, 5), pe(0, 0)), PreconditionError);
}

TEST(Extension, IntegerOracle) {
  for (long tau = 1; tau <= 12; ++tau) {
    const Extension p(z(tau));
    std::vector<PElement> all;
    for (long k = 0; k <= 6; ++k) {
      for (long x = 0; x < tau; ++x) all.push_back(pe(k, x));
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        ASSERT_EQ(phi(p.add(a, b), tau), phi(a, tau) + phi(b, tau));
        ASSERT_EQ(p.compare(a, b), phi(a, tau) <=> phi(b, tau));
        if (p.less_equal(a, b)) ASSERT_EQ(phi(p.cancel_witness(a, b), tau), phi(b, tau) - phi(a, tau));
      }
    }
  }
}

TEST(Extension, ShapeReachability) {
  EXPECT_TRUE(shape_reachable({1, Case::case1, Case::case1}));
  EXPECT_FALSE(shape_reachable({1, Case::case2, Case::case1}));
  EXPECT_TRUE(shape_reachable({2, Case::case1, Case::case2}));
  EXPECT_FALSE(shape_reachable({3, Case::case2, Case::case2}));
  EXPECT_TRUE(shape_reachable({4, Case::case2, Case::case2}));
  EXPECT_FALSE(shape_reachable({4, Case::case1, Case::case2}));
}

TEST(Extension, ShapeOfInstance) {
  const Extension p(z(5));
  // y + z = 2 + 1 < 5, x + 3 = 4 + 3 saturates.
  const auto s = p.shape(pe(0, 4), pe(0, 2), pe(0, 1));
  EXPECT_EQ(s.situation, 2);
  EXPECT_EQ(s.inner, Case::case2);
  EXPECT_EQ(s.outer, Case::case1);
}

TEST(VerifyEmbedding, Examples) {
  const auto r = verify_embedding(z(7));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(verify_embedding(TruncStructure::finite(FiniteTable::saturating(4))).verdict, Verdict::pass);
  ExtensionOptions options;
  options.budget = 2000;
  for (const char* spec : {"Q:tau=1", "ZZ:tau=(1,0)", "QZ:tau=(1,0)"}) {
    EXPECT_EQ(verify_embedding(*parse_builtin_spec(spec), options).verdict, Verdict::pass) << spec;
  }
}

TEST(VerifyPLaws, FiniteStructures) {
  for (long tau = 1; tau <= 5; ++tau) {
    ExtensionOptions options;
    options.kmax = 2;
    options.budget = 10'000'000;
    const auto report = verify_p_laws(z(tau), options);
    for (const auto& law : report.laws) {
      EXPECT_EQ(law.verdict, Verdict::pass) << tau << ' ' << law.render();
      EXPECT_TRUE(law.exhaustive) << law.name;
    }
    for (const auto& c : report.coverage) {
      if (!shape_reachable(c.shape)) EXPECT_EQ(c.count, 0u);
    }
    // Situation 4 needs x, y, z all near tau, which first happens at tau = 3.
    if (tau >= 3) EXPECT_TRUE(report.all_situations_reached()) << tau;
  }
}

TEST(VerifyPLaws, BrokenTableFails) {
  // 1 + 1 = 1 makes 1 -. (tau -. 1) undefined in the carry.
  const auto t = TruncStructure::finite(parse_finite_table("TOAG1\nn 2\n0 1 2\n1 1 2\n2 2 2\n"));
  const auto report = verify_p_laws(t);
  EXPECT_FALSE(report.all_pass());
}

TEST(VerifyPLaws, SampledStructures) {
  ExtensionOptions options;
  options.budget = 2000;
  for (const char* spec : {"Q:tau=1", "QZ:tau=(1,0)"}) {
    const auto report = verify_p_laws(*parse_builtin_spec(spec), options);
    EXPECT_TRUE(report.all_pass()) << spec;
  }
}

TEST(Completion, Example) {
  const Completion g(z(5));
  const CompletionElement a{pe(2, 1), pe(0, 4)};
  const CompletionElement b = g.from_monoid(pe(1, 2));
  EXPECT_TRUE(g.equal(a, b));
  EXPECT_EQ(g.normalize(a).to_string(), "<1,2>-<0,0>");
  EXPECT_EQ(g.normalize(g.negate(a)).to_string(), "<0,0>-<1,2>");
}

TEST(Completion, GroupLawsAndIntegerIsomorphism) {
  const long tau = 7;
  const Completion g(z(tau));
  // n in [-100, 100] as a normalized difference.
  auto of_int = [&](long n) {
    const long m = n < 0 ? -n : n;
    const PElement e = pe(m / tau, m % tau);
    return n < 0 ? g.negate(g.from_monoid(e)) : g.from_monoid(e);
  };
  auto to_int = [&](const CompletionElement& c) { return phi(c.pos, tau) - phi(c.neg, tau); };
  for (long a = -100; a <= 100; a += 3) {
    const auto ea = of_int(a);
    EXPECT_TRUE(g.equal(g.add(ea, g.negate(ea)), g.zero()));
    for (long b = -100; b <= 100; b += 7) {
      const auto eb = of_int(b);
      ASSERT_EQ(to_int(g.add(ea, eb)), a + b);
      ASSERT_EQ(g.compare(ea, eb), a <=> b);
      ASSERT_TRUE(g.equal(g.add(ea, eb), g.add(eb, ea)));
      ASSERT_EQ(to_int(g.normalize(g.sub(ea, eb))), a - b);
    }
  }
}
