#include "toag/valuation.hpp"

#include <algorithm>

#include "toag/error.hpp"

namespace toag {
namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

ResidueRing::ResidueRing(std::int64_t p, std::int64_t k) : p_(p), k_(k), modulus_(1) {
  if (!is_prime(p)) throw PreconditionError("residue ring: p=" + std::to_string(p) + " is not prime");
  if (k < 1) throw PreconditionError("residue ring: k must be at least 1");
  for (std::int64_t i = 0; i < k; ++i) {
    modulus_ *= p;
    if (modulus_ > 10000) throw PreconditionError("residue ring: p^k exceeds 10000");
  }
}

std::int64_t truncated_valuation(const ResidueRing& r, std::int64_t x) {
  if (!r.contains(x)) throw PreconditionError("truncated_valuation: " + std::to_string(x) + " is not reduced mod p^k");
  if (x == 0) return r.k();
  std::int64_t v = 0;
  while (x % r.p() == 0) {
    x /= r.p();
    ++v;
  }
  return v;
}

std::string ValuationLaw::render() const {
  std::string out = "LAW " + name + " " + to_string(verdict);
  if (witness) out += " witness=(" + std::to_string(witness->first) + "," + std::to_string(witness->second) + ")";
  return out + " samples=" + std::to_string(samples);
}

bool ValuationReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const ValuationLaw& l) { return l.verdict == Verdict::pass; });
}

std::vector<std::string> ValuationReport::render() const {
  std::int64_t modulus = 1;
  for (std::int64_t i = 0; i < k; ++i) modulus *= p;
  std::vector<std::string> lines{"VALUATION p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                 " modulus=" + std::to_string(modulus)};
  for (const auto& law : laws) lines.push_back(law.render());
  return lines;
}

ValuationReport check_valuation_laws(const ResidueRing& r) {
  const std::int64_t n = r.modulus();
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) v[x] = truncated_valuation(r, x);

  ValuationLaw ultra;
  ultra.name = "ultrametric";
  ValuationLaw mult;
  mult.name = "multiplicative";
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      if (ultra.verdict == Verdict::pass) {
        ++ultra.samples;
        if (v[r.add(x, y)] < std::min(v[x], v[y])) {
          ultra.verdict = Verdict::fail;
          ultra.witness = {x, y};
        }
      }
      if (mult.verdict == Verdict::pass) {
        ++mult.samples;
        if (v[r.multiply(x, y)] != std::min(r.k(), v[x] + v[y])) {
          mult.verdict = Verdict::fail;
          mult.witness = {x, y};
        }
      }
    }
  }
  return ValuationReport{r.p(), r.k(), {ultra, mult}};
}

TruncStructure value_toag(const ResidueRing& r) {
  return TruncStructure::truncation(Group::integers(), Integer(r.k()));
}

}  // namespace toag
