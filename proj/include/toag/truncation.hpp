#pragma once

// Truncated ordered abelian groups: a segment [0, tau] with saturating
// addition x + y = min(x (+) y, tau).  Two backings are supported: a
// truncation of one of the bundled groups, and an explicit finite table on
// {0, ..., N} with tau = N.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "toag/oag.hpp"

namespace toag {

/// Elements of a TruncStructure.  Table-backed structures use the integer
/// index of the element (0 < 1 < ... < N).
using TruncElement = GroupElement;

/// Whether y + z stays below tau (case1) or reaches it (case2).
enum class Case { case1, case2 };

/// Addition table on {0, ..., N}.  Subtractions are precomputed by search.
class FiniteTable {
 public:
  using element = std::uint32_t;

  /// `entries` is the row-major (N+1) x (N+1) table.  No axiom validation
  /// happens here beyond range checks; see `basic_violation`.
  FiniteTable(std::size_t n, std::vector<element> entries);

  /// min(i + j, N): the truncation of the integers at N.
  static FiniteTable saturating(std::size_t n);

  std::size_t top_index() const { return n_; }
  std::size_t size() const { return n_ + 1; }

  element zero() const { return 0; }
  element top() const { return static_cast<element>(n_); }
  element add(element a, element b) const { return entries_[a * (n_ + 1) + b]; }
  bool less(element a, element b) const { return a < b; }
  bool less_equal(element a, element b) const { return a <= b; }

  /// Least z with x + z = y, for x <= y < N; absent otherwise.
  std::optional<element> try_dotminus(element y, element x) const;
  /// Least z with x + z = N; 0 at x = N.
  element tau_dotminus(element x) const { return tau_dotminus_[x]; }

  std::span<const element> entries() const { return entries_; }

  /// Description of the first violation of commutativity, identity row,
  /// absorbing top or monotonicity, if any.
  std::optional<std::string> basic_violation() const;

  /// TOAG1 text rendering.
  std::string to_text() const;

  friend bool operator==(const FiniteTable& a, const FiniteTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  static constexpr element kNone = ~element{0};

  std::size_t n_;
  std::vector<element> entries_;
  std::vector<element> dotminus_;
  std::vector<element> tau_dotminus_;
};

/// Parses TOAG1 text into a table without validating axioms.
FiniteTable parse_finite_table(std::string_view text);

class TruncStructure {
 public:
  using element = TruncElement;

  /// Truncation of `group` at `tau`; throws PreconditionError unless tau > 0.
  static TruncStructure truncation(Group group, GroupElement tau);
  /// Table-backed structure; throws ParseError naming the violated axiom
  /// (1-4) with a witness when the table is not a valid candidate.
  static TruncStructure finite(FiniteTable table);

  bool is_table() const { return std::holds_alternative<FiniteTable>(backing_); }
  const FiniteTable& table() const { return std::get<FiniteTable>(backing_); }
  /// Group of the element representation (Integers for tables).
  const Group& group() const { return group_; }
  const GroupElement& tau() const { return tau_; }

  /// True when [0, tau] is finite (tables and integer truncations).
  bool is_finite() const;
  /// All elements in increasing order; only for finite structures.
  std::vector<TruncElement> elements() const;

  TruncElement zero() const { return group_.zero(); }
  TruncElement top() const { return tau_; }
  bool is_top(const TruncElement& x) const { return x == tau_; }
  bool contains(const TruncElement& x) const;

  TruncElement add(const TruncElement& x, const TruncElement& y) const;
  std::strong_ordering compare(const TruncElement& x, const TruncElement& y) const;
  bool less(const TruncElement& x, const TruncElement& y) const { return compare(x, y) < 0; }
  bool less_equal(const TruncElement& x, const TruncElement& y) const { return compare(x, y) <= 0; }

  /// y -. x, defined for x <= y < tau.
  std::optional<TruncElement> try_dotminus(const TruncElement& y, const TruncElement& x) const;
  /// As try_dotminus, but throws PreconditionError outside the domain.
  TruncElement dotminus(const TruncElement& y, const TruncElement& x) const;
  /// Least z with x + z = tau; tau -. tau = 0.
  TruncElement tau_dotminus(const TruncElement& x) const;
  /// Requires y, z < tau.
  Case case_of(const TruncElement& y, const TruncElement& z) const;

  /// Least positive element, when the order has one.
  std::optional<TruncElement> least_positive() const;

  /// Random element of [0, tau]; `bound` limits coordinates as in Group::sample.
  TruncElement sample(Rng& rng, std::int64_t bound) const;
  TruncElement parse_element(std::string_view text) const;
  std::string format(const TruncElement& x) const { return x.to_string(); }

  /// `Z:tau=7`-style description, or `TOAG1(n=N)` for tables.
  std::string describe() const;

 private:
  TruncStructure(Group group, GroupElement tau, std::variant<std::monostate, FiniteTable> backing)
      : group_(group), tau_(std::move(tau)), backing_(std::move(backing)) {}

  FiniteTable::element index(const TruncElement& x) const;
  void require(const TruncElement& x) const;

  Group group_;
  GroupElement tau_;
  std::variant<std::monostate, FiniteTable> backing_;
};

/// Builtin structure specs: `Z:tau=<int>`, `Q:tau=<rat>`, `ZZ:tau=(a,b)`,
/// `QZ:tau=(q,b)`.  Returns nullopt when `text` has none of these prefixes.
std::optional<TruncStructure> parse_builtin_spec(std::string_view text);

/// Validated TOAG1 load.
TruncStructure load_finite_table(std::string_view text);

/// Convenience for `truncation(g, tau)` with tau parsed from text.
TruncStructure make_truncation(Group group, std::string_view tau);

}  // namespace toag
