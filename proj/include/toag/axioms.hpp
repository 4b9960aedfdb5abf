#pragma once

// Checkers for the sixteen TOAG axioms and the three derived statements about
// tau -. x, plus a branch-and-bound enumerator of finite tables.

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toag/truncation.hpp"

namespace toag {

/// Statement identifiers: 1..16 are the axioms, the rest are the lemmas.
enum StatementId : int {
  kLemma1 = 101,       ///< y <= z < tau implies tau-.z <= tau-.y
  kLemma2 = 102,       ///< x, y < tau and tau-.x = tau-.y imply x = y
  kCorollary1 = 103,   ///< x < y < tau implies tau-.y < tau-.x
};

inline constexpr int kAxiomCount = 16;

/// Number of quantified variables in the checked instance of a statement.
int statement_arity(int id);
/// `AXIOM 5`, `LEMMA 1`, `COROLLARY 1`.
std::string statement_label(int id);
bool is_valid_statement(int id);

enum class Outcome { vacuous, holds, violated };
enum class Verdict { pass, fail, exhausted_budget };

std::string to_string(Verdict v);

struct CheckOptions {
  std::uint64_t budget = 100000;  ///< tuples per statement
  std::uint64_t seed = 0;
  std::int64_t bound = 100;       ///< coordinate bound for sampling
};

struct AxiomReport {
  int id = 0;
  Verdict verdict = Verdict::pass;
  std::vector<TruncElement> witness;  ///< present iff verdict == fail
  std::uint64_t samples = 0;          ///< tuples evaluated
  std::uint64_t applicable = 0;       ///< tuples whose hypotheses held
  std::uint64_t seed = 0;
  bool exhaustive = false;

  /// `AXIOM <id> PASS|FAIL [witness=(...)] samples=<n> seed=<s>`.
  std::string render() const;
};

/// Evaluates one statement instance; the tuple length must equal the arity.
Outcome evaluate_statement(const TruncStructure& t, int id, const std::vector<TruncElement>& tuple);

/// Exhaustive over all tuples for finite structures whose tuple count fits in
/// the budget, seeded sampling of `budget` tuples otherwise.  Tables too large
/// for the budget report EXHAUSTED-BUDGET when no failure is found.
AxiomReport check_axiom(const TruncStructure& t, int id, const CheckOptions& options = {});
std::vector<AxiomReport> check_axioms(const TruncStructure& t, const CheckOptions& options = {});
/// Lemma 1, Lemma 2 and Corollary 1.
std::vector<AxiomReport> check_lemmas(const TruncStructure& t, const CheckOptions& options = {});

/// Fast exhaustive evaluation on a raw table (no validation of Axioms 1-4).
bool table_satisfies(const FiniteTable& table, int id);

using AxiomSet = std::bitset<kAxiomCount + 1>;  ///< bit i <=> axiom i

/// Parses `all`, `none`, or a comma list of ids and ranges such as `1-9,11`.
AxiomSet parse_axiom_set(const std::string& text);
std::string format_axiom_set(const AxiomSet& set);

struct SearchSpec {
  std::size_t size = 1;  ///< N: the domain is {0, ..., N}
  AxiomSet required;
  AxiomSet negated;
  std::uint64_t node_budget = 10'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  bool exhausted = false;
};

struct SearchResult {
  std::vector<FiniteTable> tables;
  SearchStats stats;
};

inline constexpr std::size_t kMaxEnumerationSize = 5;

/// All commutative, monotone tables on {0..N} with identity row 0 and
/// absorbing row N that satisfy every required axiom and violate every
/// negated one, in lexicographic order of their upper triangles.
SearchResult enumerate_toags(const SearchSpec& spec);

struct IndependenceEntry {
  int id = 0;
  std::optional<FiniteTable> witness;  ///< table satisfying all other axioms but not `id`
  bool exhausted = false;
  std::size_t searched_up_to = 0;
};

/// For each id, searches N = 1..n_max for a table with every other axiom and
/// the negation of `id`.
std::vector<IndependenceEntry> independence_report(std::size_t n_max, std::uint64_t node_budget,
                                                   const std::vector<int>& ids = {10, 11, 12, 13, 14, 15, 16});

}  // namespace toag
