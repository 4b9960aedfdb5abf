#pragma once

// Concrete ordered abelian groups: the integers, the rationals and the two
// lexicographic products Z x Z and Q x Z (major coordinate first).  All
// arithmetic is exact.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace toag {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Rng = std::mt19937_64;

enum class GroupKind { integers, rationals, lex_zz, lex_qz };

std::string_view to_string(GroupKind kind);

/// Element of a lexicographic product; `major` dominates the order.
template <class Major>
struct LexPair {
  Major major;
  Integer minor;

  friend bool operator==(const LexPair&, const LexPair&) = default;
};

using LexZZ = LexPair<Integer>;
using LexQZ = LexPair<Rational>;

class GroupElement {
 public:
  using Value = std::variant<Integer, Rational, LexZZ, LexQZ>;

  GroupElement() : value_(Integer(0)) {}
  GroupElement(Integer v) : value_(std::move(v)) {}
  GroupElement(Rational v) : value_(std::move(v)) {}
  GroupElement(LexZZ v) : value_(std::move(v)) {}
  GroupElement(LexQZ v) : value_(std::move(v)) {}
  GroupElement(int v) : value_(Integer(v)) {}

  GroupKind kind() const { return static_cast<GroupKind>(value_.index()); }
  const Value& value() const { return value_; }

  template <class T>
  const T& as() const { return std::get<T>(value_); }

  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Value value_;
};

/// Result of `Group::divide_with_remainder`: a = n*quotient + remainder*1.
struct Division {
  GroupElement quotient;
  std::int64_t remainder = 0;
};

/// One of the four bundled ordered abelian groups.  Operations on elements
/// of a different kind throw MixedInstanceError.
class Group {
 public:
  explicit Group(GroupKind kind) : kind_(kind) {}

  static Group integers() { return Group(GroupKind::integers); }
  static Group rationals() { return Group(GroupKind::rationals); }
  static Group lex_zz() { return Group(GroupKind::lex_zz); }
  static Group lex_qz() { return Group(GroupKind::lex_qz); }

  GroupKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }

  bool contains(const GroupElement& a) const { return a.kind() == kind_; }

  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  /// n*a for an ordinary integer n.
  GroupElement multiply(const GroupElement& a, const Integer& n) const;

  std::strong_ordering compare(const GroupElement& a, const GroupElement& b) const;
  bool less(const GroupElement& a, const GroupElement& b) const { return compare(a, b) < 0; }
  bool less_equal(const GroupElement& a, const GroupElement& b) const { return compare(a, b) <= 0; }
  int sign(const GroupElement& a) const;

  /// The least positive element, when the order is discrete.
  std::optional<GroupElement> least_positive() const;

  /// The image of an ordinary integer n: n*1 in discrete groups, n itself in Q.
  GroupElement from_integer(const Integer& n) const;

  /// The unique q with n*q = a, if it exists (the groups are torsion free).
  std::optional<GroupElement> divide_exact(const GroupElement& a, const Integer& n) const;

  /// Some q and 0 <= r < n with a = n*q + r*1, choosing the smallest r.
  /// Requires a >= 0 and n >= 1; absent when no such decomposition exists.
  std::optional<Division> divide_with_remainder(const GroupElement& a, std::int64_t n) const;

  /// Bounded random element: integer coordinates in [-bound, bound],
  /// rational denominators in [1, bound].
  GroupElement sample(Rng& rng, std::int64_t bound) const;

  /// Random element of [0, hi] (hi >= 0), with extra weight on the endpoints
  /// of each coordinate range.
  GroupElement sample_between(Rng& rng, const GroupElement& hi, std::int64_t bound) const;

  /// Parses an element literal: `7`, `-3/4`, `(1,-2)`, `(1/2,3)`.
  GroupElement parse(std::string_view text) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  void require(const GroupElement& a) const;

  GroupKind kind_;
};

/// Uniform integer in [lo, hi] for arbitrary-precision bounds.
Integer uniform_integer(Rng& rng, const Integer& lo, const Integer& hi);

/// Floor division and the matching non-negative remainder (n > 0).
Integer floor_div(const Integer& a, const Integer& n);
Integer floor_mod(const Integer& a, const Integer& n);

}  // namespace toag
