#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "toag/axioms.hpp"
#include "toag/error.hpp"

using namespace toag;

namespace {

// Independent brute force: every symmetric table with identity row 0,
// absorbing row N and monotone rows, by direct enumeration of the upper
// triangle without pruning.
std::vector<FiniteTable> brute_force_candidates(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) cells.emplace_back(a, b);
  }
  std::vector<FiniteTable> out;
  std::vector<std::uint32_t> e((n + 1) * (n + 1));
  for (std::size_t x = 0; x <= n; ++x) {
    e[x] = e[x * (n + 1)] = static_cast<std::uint32_t>(x);
    e[n * (n + 1) + x] = e[x * (n + 1) + n] = static_cast<std::uint32_t>(n);
  }
  std::function<void(std::size_t)> go = [&](std::size_t c) {
    if (c == cells.size()) {
      for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (e[a * (n + 1) + b] > e[a * (n + 1) + b + 1]) return;
        }
      }
      out.emplace_back(n, e);
      return;
    }
    const auto [a, b] = cells[c];
    for (std::uint32_t v = 0; v <= n; ++v) {
      e[a * (n + 1) + b] = e[b * (n + 1) + a] = v;
      go(c + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

TEST(Enumerate, FullAxiomsGiveSaturatingTable) {
  for (std::size_t n = 1; n <= 3; ++n) {
    SearchSpec spec;
    spec.size = n;
    spec.required = parse_axiom_set("all");
    const auto result = enumerate_toags(spec);
    ASSERT_EQ(result.tables.size(), 1u) << n;
    EXPECT_EQ(result.tables.front(), FiniteTable::saturating(n));
    EXPECT_FALSE(result.stats.exhausted);
  }
}

TEST(Enumerate, CandidateSetMatchesBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    SearchSpec spec;
    spec.size = n;
    const auto found = enumerate_toags(spec).tables;
    const auto expected = brute_force_candidates(n);
    ASSERT_EQ(found.size(), expected.size()) << n;
    for (const auto& t : expected) EXPECT_NE(std::find(found.begin(), found.end(), t), found.end());
  }
}

TEST(Enumerate, PrunedSearchMatchesFilteredBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const char* req : {"5", "6", "5,6", "1-9", "all"}) {
      SearchSpec spec;
      spec.size = n;
      spec.required = parse_axiom_set(req);
      const auto found = enumerate_toags(spec).tables;
      std::size_t expected = 0;
      for (const auto& t : brute_force_candidates(n)) {
        bool ok = true;
        for (int id = 1; id <= kAxiomCount; ++id) ok = ok && (!spec.required.test(id) || table_satisfies(t, id));
        expected += ok;
      }
      EXPECT_EQ(found.size(), expected) << n << ' ' << req;
    }
  }
}

TEST(Enumerate, NegationsReverify) {
  SearchSpec spec;
  spec.size = 3;
  spec.required = parse_axiom_set("1-9");
  spec.negated = parse_axiom_set("10");
  for (const auto& t : enumerate_toags(spec).tables) {
    for (int id = 1; id <= 9; ++id) EXPECT_TRUE(table_satisfies(t, id));
    EXPECT_FALSE(table_satisfies(t, 10));
  }
  spec.required = parse_axiom_set("1-4");
  spec.negated = parse_axiom_set("5");
  const auto nonassoc = enumerate_toags(spec).tables;
  EXPECT_FALSE(nonassoc.empty());
  for (const auto& t : nonassoc) EXPECT_FALSE(table_satisfies(t, 5));
}

TEST(Enumerate, Errors) {
  SearchSpec spec;
  spec.size = 0;
  EXPECT_THROW(enumerate_toags(spec), PreconditionError);
  spec.size = 6;
  EXPECT_THROW(enumerate_toags(spec), PreconditionError);
  spec.size = 2;
  spec.required = parse_axiom_set("5");
  spec.negated = parse_axiom_set("5");
  EXPECT_THROW(enumerate_toags(spec), PreconditionError);
}

TEST(Enumerate, BudgetExhaustionIsDistinct) {
  SearchSpec spec;
  spec.size = 5;
  spec.node_budget = 10;
  const auto result = enumerate_toags(spec);
  EXPECT_TRUE(result.stats.exhausted);
}

TEST(Independence, SizeOneFindsNothing) {
  const auto report = independence_report(1, 1000000);
  ASSERT_EQ(report.size(), 7u);
  for (const auto& e : report) {
    EXPECT_FALSE(e.witness);
    EXPECT_EQ(e.searched_up_to, 1u);
  }
}

TEST(Independence, ConsistentWithEnumeration) {
  const auto report = independence_report(2, 1000000, {10});
  SearchSpec spec;
  spec.size = 2;
  spec.required = parse_axiom_set("1-9,11-16");
  spec.negated = parse_axiom_set("10");
  EXPECT_EQ(report.front().witness.has_value(), !enumerate_toags(spec).tables.empty());
  EXPECT_THROW(independence_report(2, 1000, {0}), PreconditionError);
  EXPECT_THROW(independence_report(2, 1000, {17}), PreconditionError);
}
