#pragma once

// Recognition of truncations of models of Presburger arithmetic, and the
// invariant that decides their elementary equivalence: the Presburger type
// of the penultimate element tau - 1 (standard or not, and its residue
// modulo every n).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toag/axioms.hpp"
#include "toag/truncation.hpp"

namespace toag {

struct PresburgerOptions {
  std::int64_t n_max = 30;
  std::uint64_t budget = 1000;  ///< sampled elements for infinite structures
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
};

struct ConditionReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<TruncElement> witness;
  std::optional<std::int64_t> witness_n;  ///< modulus, for division failures
  std::string reason;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;

  std::string render() const;
};

/// Least positive element 1 exists and every x > 0 has y < x with y + 1 = x.
ConditionReport is_discrete_with_successors(const TruncStructure& t, const PresburgerOptions& options = {});

struct DivisionResult {
  TruncElement y;
  std::int64_t m = 0;
};

/// Some (y, m) with m < n and y+...+y (n times) + 1+...+1 (m times) = x under
/// truncated addition.  Prefers the smallest y, then the smallest m; at
/// x = tau with no exact decomposition the saturating (tau, 0) is returned.
/// Throws when n < 1 or the structure has no least positive element.
std::optional<DivisionResult> euclidean_division(const TruncStructure& t, const TruncElement& x, std::int64_t n);

/// n*y under truncated addition.
TruncElement truncated_multiple(const TruncStructure& t, const TruncElement& y, std::int64_t n);

struct PresburgerReport {
  Verdict verdict = Verdict::pass;
  bool up_to_budget = false;  ///< infinite structure, checked on samples
  ConditionReport discrete;
  ConditionReport division;

  std::vector<std::string> render() const;
};

PresburgerReport is_presburger_toag(const TruncStructure& t, const PresburgerOptions& options = {});

struct TypeSignature {
  bool standard = true;
  std::optional<Integer> finite_value;         ///< tau - 1 when standard
  std::map<std::int64_t, std::int64_t> residues;  ///< n -> (tau - 1) mod n, 2 <= n <= n_max
  std::int64_t n_max = 0;

  bool coherent() const;
  /// `standard=<bool> value=<v|-> residues={2:r2,3:r3,...}`.
  std::string render() const;

  friend bool operator==(const TypeSignature&, const TypeSignature&) = default;
};

/// Throws PreconditionError when the structure is not Presburger.
TypeSignature type_signature(const TruncStructure& t, const PresburgerOptions& options = {});

struct EquivalenceVerdict {
  bool equivalent = false;
  bool up_to_n_max = false;
  std::int64_t n_max = 0;
  std::string reason;

  std::string render() const;
};

EquivalenceVerdict elementarily_equivalent(const TruncStructure& a, const TruncStructure& b,
                                           const PresburgerOptions& options = {});

/// Standard signatures become [0, v+1] over the integers; nonstandard ones
/// become tau = (1, s) over Q x Z with s - 1 matching every residue.
TruncStructure realize_signature(const TypeSignature& sig);

}  // namespace toag
