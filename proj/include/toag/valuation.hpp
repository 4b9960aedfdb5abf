#pragma once

// The truncated p-adic valuation on Z/p^k, with values in [0, k].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toag/axioms.hpp"
#include "toag/truncation.hpp"

namespace toag {

class ResidueRing {
 public:
  /// Throws PreconditionError unless p is prime, k >= 1 and p^k <= 10000.
  ResidueRing(std::int64_t p, std::int64_t k);

  std::int64_t p() const { return p_; }
  std::int64_t k() const { return k_; }
  std::int64_t modulus() const { return modulus_; }

  bool contains(std::int64_t x) const { return 0 <= x && x < modulus_; }
  std::int64_t add(std::int64_t x, std::int64_t y) const { return (x + y) % modulus_; }
  std::int64_t multiply(std::int64_t x, std::int64_t y) const { return (x * y) % modulus_; }

 private:
  std::int64_t p_;
  std::int64_t k_;
  std::int64_t modulus_;
};

/// p-adic valuation of the representative, capped at k; the zero class has value k.
std::int64_t truncated_valuation(const ResidueRing& r, std::int64_t x);

struct ValuationLaw {
  std::string name;  ///< "ultrametric" or "multiplicative"
  Verdict verdict = Verdict::pass;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
  std::uint64_t samples = 0;

  /// `LAW <name> PASS|FAIL [witness=(x,y)] samples=<n>`.
  std::string render() const;
};

struct ValuationReport {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::vector<ValuationLaw> laws;

  bool all_pass() const;
  std::vector<std::string> render() const;
};

/// v(x+y) >= min(v(x), v(y)) and v(xy) = min(k, v(x) + v(y)) over all pairs.
ValuationReport check_valuation_laws(const ResidueRing& r);

/// [0, k] over the integers.
TruncStructure value_toag(const ResidueRing& r);

}  // namespace toag
