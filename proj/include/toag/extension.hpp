#pragma once

// The ordered monoid P = omega x [0, tau) built from a TOAG, the embedding
// of [0, tau] onto [0, <1,0>] in P, and the formal-difference group of P.
//
// Addition carries into the omega coordinate exactly when the [0, tau)
// coordinates overflow:
//   <k,y> + <l,z> = <k+l, y+z>             if y + z < tau
//                 = <k+l+1, y -. (tau -. z)>  if y + z = tau

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "toag/axioms.hpp"
#include "toag/truncation.hpp"

namespace toag {

struct PElement {
  Integer k;       ///< omega coordinate, k >= 0
  TruncElement x;  ///< 0 <= x < tau

  /// `<k,x>`.
  std::string to_string() const;

  friend bool operator==(const PElement&, const PElement&) = default;
};

/// Shape of an associativity instance a + (b + c) versus c + (b + a), for
/// a = <k,x>, b = <l,y>, c = <m,z>.  `situation` (1-4) encodes the cases of
/// (y, z) and of x against the carry-free part of b + c; `inner` and `outer`
/// are the cases of (y, x) and of z against the carry-free part of b + a.
struct AssociativityShape {
  int situation = 1;
  Case inner = Case::case1;
  Case outer = Case::case1;
};

/// Whether a shape can arise in a structure satisfying all sixteen axioms.
bool shape_reachable(const AssociativityShape& shape);

class Extension {
 public:
  explicit Extension(TruncStructure t) : t_(std::move(t)) {}

  const TruncStructure& base() const { return t_; }

  PElement zero() const { return {0, t_.zero()}; }
  /// tau_P = <1,0>.
  PElement tau_p() const { return {1, t_.zero()}; }
  /// Validated constructor: k >= 0 and x in [0, tau).
  PElement make(Integer k, TruncElement x) const;

  PElement add(const PElement& a, const PElement& b) const;
  std::strong_ordering compare(const PElement& a, const PElement& b) const;
  bool less(const PElement& a, const PElement& b) const { return compare(a, b) < 0; }
  bool less_equal(const PElement& a, const PElement& b) const { return compare(a, b) <= 0; }

  /// Some c with a + c = b; requires a <= b.
  PElement cancel_witness(const PElement& a, const PElement& b) const;

  /// <0,x> for x < tau, <1,0> for x = tau.
  PElement embed(const TruncElement& x) const;

  AssociativityShape shape(const PElement& a, const PElement& b, const PElement& c) const;

 private:
  void require(const PElement& a) const;

  TruncStructure t_;
};

struct LawReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string witness;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;

  /// `<name> PASS|FAIL [witness=...] samples=<n> seed=<s>`.
  std::string render() const;
};

struct ExtensionOptions {
  std::uint64_t kmax = 3;         ///< largest omega coordinate enumerated or sampled
  std::uint64_t budget = 100000;  ///< tuples per law before falling back to sampling
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
};

/// embed is an order bijection onto [0, tau_P] and
/// embed(x + y) = min(embed x + embed y, tau_P).
LawReport verify_embedding(const TruncStructure& t, const ExtensionOptions& options = {});

struct ShapeCount {
  AssociativityShape shape;
  std::uint64_t count = 0;
};

struct PLawReport {
  std::vector<LawReport> laws;         ///< identity, commutativity, associativity, monotonicity, cancellation, cancellativity
  std::vector<ShapeCount> coverage;    ///< all 16 associativity shapes

  bool all_pass() const;
  /// Every situation 1-4 was met by at least one associativity instance.
  bool all_situations_reached() const;
  std::uint64_t count(int situation, Case inner, Case outer) const;
};

PLawReport verify_p_laws(const TruncStructure& t, const ExtensionOptions& options = {});

/// Formal difference pos - neg of two elements of P.
struct CompletionElement {
  PElement pos;
  PElement neg;

  /// `<k,x>-<l,y>`.
  std::string to_string() const;
};

/// The ordered abelian group of formal differences of P.
class Completion {
 public:
  explicit Completion(TruncStructure t) : p_(std::move(t)) {}

  const Extension& monoid() const { return p_; }

  CompletionElement zero() const { return {p_.zero(), p_.zero()}; }
  /// p as the difference p - 0; these form the non-negative cone.
  CompletionElement from_monoid(const PElement& p) const { return {p, p_.zero()}; }

  CompletionElement add(const CompletionElement& a, const CompletionElement& b) const;
  CompletionElement negate(const CompletionElement& a) const { return {a.neg, a.pos}; }
  CompletionElement sub(const CompletionElement& a, const CompletionElement& b) const { return add(a, negate(b)); }

  /// Compares a.pos + b.neg with b.pos + a.neg.
  std::strong_ordering compare(const CompletionElement& a, const CompletionElement& b) const;
  bool equal(const CompletionElement& a, const CompletionElement& b) const { return compare(a, b) == 0; }

  /// Representative with one side zero.
  CompletionElement normalize(const CompletionElement& a) const;

 private:
  Extension p_;
};

inline Completion complete_to_group(const TruncStructure& t) { return Completion(t); }

}  // namespace toag
