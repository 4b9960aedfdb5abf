#include "toag/presburger.hpp"

#include <sstream>

#include "toag/error.hpp"

namespace toag {
namespace {

TruncElement require_one(const TruncStructure& t) {
  auto one = t.least_positive();
  if (!one) throw PreconditionError(t.describe() + " has no least positive element");
  return *one;
}

// The y < tau with y + 1 = tau.
TruncElement penultimate(const TruncStructure& t, const TruncElement& one) {
  if (t.is_table()) return Integer(t.table().top_index() - 1);
  return t.group().sub(t.tau(), one);
}

std::optional<DivisionResult> divide_table(const TruncStructure& t, const TruncElement& x, std::int64_t n) {
  const auto& table = t.table();
  const auto target = static_cast<FiniteTable::element>(x.as<Integer>());
  std::vector<FiniteTable::element> units(static_cast<std::size_t>(n), 0);
  for (std::int64_t m = 1; m < n; ++m) units[m] = table.add(units[m - 1], 1);
  for (FiniteTable::element y = 0; y <= table.top(); ++y) {
    FiniteTable::element ny = 0;
    for (std::int64_t i = 0; i < n; ++i) ny = table.add(ny, y);
    for (std::int64_t m = 0; m < n; ++m) {
      if (table.add(ny, units[m]) == target) return DivisionResult{Integer(y), m};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string ConditionReport::render() const {
  std::ostringstream out;
  out << name << ' ' << to_string(verdict);
  if (verdict == Verdict::fail) {
    if (!witness.empty()) {
      out << " witness=(";
      for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i].to_string();
      if (witness_n) out << ",n=" << *witness_n;
      out << ')';
    }
    if (!reason.empty()) out << " reason=\"" << reason << '"';
  }
  out << " samples=" << samples << " seed=" << seed;
  return out.str();
}

TruncElement truncated_multiple(const TruncStructure& t, const TruncElement& y, std::int64_t n) {
  if (n < 0) throw PreconditionError("truncated_multiple: negative multiplier");
  if (t.is_table()) {
    TruncElement acc = t.zero();
    for (std::int64_t i = 0; i < n; ++i) acc = t.add(acc, y);
    return acc;
  }
  auto r = t.group().multiply(y, Integer(n));
  return t.group().less(r, t.tau()) ? r : t.tau();
}

std::optional<DivisionResult> euclidean_division(const TruncStructure& t, const TruncElement& x, std::int64_t n) {
  if (n < 1) throw PreconditionError("euclidean_division: n must be at least 1");
  if (!t.contains(x)) throw PreconditionError(x.to_string() + " is not an element of " + t.describe());
  const TruncElement one = require_one(t);
  if (t.is_table()) return divide_table(t, x, n);

  // An exact decomposition x = n*q + r*1 in the group is the solution with
  // the least y whenever one exists (1 is the least positive element).
  const Group& g = t.group();
  if (auto d = g.divide_with_remainder(x, n); d && g.sign(d->quotient) >= 0) {
    return DivisionResult{d->quotient, d->remainder};
  }
  if (t.is_top(x)) return DivisionResult{t.tau(), 0};
  return std::nullopt;
}

ConditionReport is_discrete_with_successors(const TruncStructure& t, const PresburgerOptions& options) {
  ConditionReport report;
  report.name = "DISCRETE";
  report.seed = options.seed;
  auto one = t.least_positive();
  if (!one) {
    // Dense order: halving any positive element gives a smaller one.
    const Group& g = t.group();
    TruncElement half = *g.divide_exact(t.tau(), 2);
    report.verdict = Verdict::fail;
    report.witness = {t.tau(), half};
    report.reason = "no least positive element: 0 < x/2 < x for every x > 0";
    report.exhaustive = false;
    return report;
  }
  auto check = [&](const TruncElement& x) {
    ++report.samples;
    if (t.less(t.zero(), x)) {
      // every positive element must be y + 1 for some y < x
      bool found = false;
      if (t.is_table()) {
        for (FiniteTable::element y = 0; y < static_cast<FiniteTable::element>(x.as<Integer>()); ++y) {
          if (t.table().add(y, 1) == static_cast<FiniteTable::element>(x.as<Integer>())) found = true;
        }
      } else {
        TruncElement y = t.group().sub(x, *one);
        found = t.contains(y) && t.less(y, x) && t.add(y, *one) == x;
      }
      if (!found) {
        report.verdict = Verdict::fail;
        report.witness = {x};
        report.reason = "not a successor";
        return false;
      }
    }
    return true;
  };
  if (t.is_finite()) {
    report.exhaustive = true;
    for (const auto& x : t.elements()) {
      if (!check(x)) break;
    }
    return report;
  }
  Rng rng(options.seed);
  if (!check(t.tau())) return report;
  for (std::uint64_t i = 0; i < options.budget; ++i) {
    if (!check(t.sample(rng, options.bound))) break;
  }
  return report;
}

std::vector<std::string> PresburgerReport::render() const {
  std::vector<std::string> lines{discrete.render()};
  if (discrete.verdict == Verdict::pass) lines.push_back(division.render());
  std::string last = "PRESBURGER " + to_string(verdict);
  if (up_to_budget) last += " up-to-budget";
  lines.push_back(last);
  return lines;
}

PresburgerReport is_presburger_toag(const TruncStructure& t, const PresburgerOptions& options) {
  PresburgerReport report;
  report.up_to_budget = !t.is_finite();
  report.discrete = is_discrete_with_successors(t, options);
  report.division.name = "DIVISION";
  report.division.seed = options.seed;
  if (report.discrete.verdict != Verdict::pass) {
    report.verdict = Verdict::fail;
    return report;
  }
  auto& div = report.division;
  auto check = [&](const TruncElement& x) {
    for (std::int64_t n = 1; n <= options.n_max; ++n) {
      ++div.samples;
      if (!euclidean_division(t, x, n)) {
        div.verdict = Verdict::fail;
        div.witness = {x};
        div.witness_n = n;
        div.reason = "no y, m < n with n*y + m = x";
        return false;
      }
    }
    return true;
  };
  if (t.is_finite()) {
    div.exhaustive = true;
    for (const auto& x : t.elements()) {
      if (!check(x)) break;
    }
  } else {
    const TruncElement one = *t.least_positive();
    std::vector<TruncElement> fixed{t.zero(), one, t.tau(), penultimate(t, one)};
    bool ok = true;
    for (const auto& x : fixed) {
      if (!(ok = check(x))) break;
    }
    Rng rng(options.seed);
    for (std::uint64_t i = 0; ok && i < options.budget; ++i) ok = check(t.sample(rng, options.bound));
  }
  report.verdict = div.verdict;
  return report;
}

bool TypeSignature::coherent() const {
  for (const auto& [n, r] : residues) {
    if (r < 0 || r >= n) return false;
    if (standard && finite_value && Integer(r) != floor_mod(*finite_value, Integer(n))) return false;
    for (const auto& [m, rm] : residues) {
      if (m % n == 0 && rm % n != r) return false;
    }
  }
  return true;
}

std::string TypeSignature::render() const {
  std::ostringstream out;
  out << "standard=" << (standard ? "true" : "false") << " value=";
  if (finite_value) {
    out << finite_value->str();
  } else {
    out << '-';
  }
  out << " residues={";
  bool first = true;
  for (const auto& [n, r] : residues) {
    out << (first ? "" : ",") << n << ':' << r;
    first = false;
  }
  out << '}';
  return out.str();
}

TypeSignature type_signature(const TruncStructure& t, const PresburgerOptions& options) {
  if (options.n_max < 1) throw PreconditionError("type_signature: n_max must be at least 1");
  auto check = is_presburger_toag(t, options);
  if (check.verdict != Verdict::pass) {
    const auto& failed = check.discrete.verdict != Verdict::pass ? check.discrete : check.division;
    throw PreconditionError(t.describe() + " is not a Presburger TOAG: " + failed.render());
  }
  const TruncElement one = *t.least_positive();
  const TruncElement pred = penultimate(t, one);

  TypeSignature sig;
  sig.n_max = options.n_max;
  switch (t.is_table() ? GroupKind::integers : t.group().kind()) {
    case GroupKind::integers:
      sig.standard = true;
      sig.finite_value = pred.as<Integer>();
      break;
    case GroupKind::lex_zz:
      sig.standard = pred.as<LexZZ>().major == 0;
      if (sig.standard) sig.finite_value = pred.as<LexZZ>().minor;
      break;
    case GroupKind::lex_qz:
      sig.standard = pred.as<LexQZ>().major == 0;
      if (sig.standard) sig.finite_value = pred.as<LexQZ>().minor;
      break;
    case GroupKind::rationals:
      throw PreconditionError("type_signature: dense structure");
  }
  for (std::int64_t n = 2; n <= options.n_max; ++n) {
    auto d = euclidean_division(t, pred, n);
    if (!d) throw PreconditionError("type_signature: tau - 1 has no residue mod " + std::to_string(n));
    sig.residues[n] = d->m;
  }
  return sig;
}

std::string EquivalenceVerdict::render() const {
  std::string out = equivalent ? "EQUIVALENT" : "NOT EQUIVALENT";
  if (up_to_n_max) out += " up-to-n_max=" + std::to_string(n_max);
  if (!reason.empty()) out += " reason=\"" + reason + "\"";
  return out;
}

EquivalenceVerdict elementarily_equivalent(const TruncStructure& a, const TruncStructure& b,
                                           const PresburgerOptions& options) {
  const TypeSignature sa = type_signature(a, options);
  const TypeSignature sb = type_signature(b, options);
  EquivalenceVerdict v;
  v.n_max = options.n_max;
  v.up_to_n_max = !sa.standard || !sb.standard;
  if (sa.standard != sb.standard) {
    v.reason = "tau-1 is standard in one and nonstandard in the other";
    return v;
  }
  if (sa.standard && sa.finite_value != sb.finite_value) {
    v.reason = "tau-1 differs: " + sa.finite_value->str() + " vs " + sb.finite_value->str();
    return v;
  }
  for (const auto& [n, r] : sa.residues) {
    if (sb.residues.at(n) != r) {
      v.reason = "residue mod " + std::to_string(n) + " differs: " + std::to_string(r) + " vs " +
                 std::to_string(sb.residues.at(n));
      return v;
    }
  }
  v.equivalent = true;
  return v;
}

TruncStructure realize_signature(const TypeSignature& sig) {
  if (!sig.coherent()) throw PreconditionError("realize_signature: incoherent signature " + sig.render());
  if (sig.standard) {
    if (!sig.finite_value || *sig.finite_value < 0) {
      throw PreconditionError("realize_signature: standard signature needs a value >= 0");
    }
    return TruncStructure::truncation(Group::integers(), Integer(*sig.finite_value + 1));
  }
  // Chinese remainder: c = s - 1 with c = r_n (mod n) for every n.
  Integer c = 0;
  Integer modulus = 1;
  for (const auto& [n, r] : sig.residues) {
    const Integer nn(n);
    const Integer g = gcd(modulus, nn);
    const Integer diff = Integer(r) - c;
    if (diff % g != 0) {
      throw PreconditionError("realize_signature: residues are not of the form (s-1) mod n; "
                              "unrealizable in bundled instances");
    }
    // Solve modulus * k = diff (mod n).
    const Integer step = nn / g;
    Integer k = 0;
    const Integer target = floor_mod(diff / g, step);
    const Integer base = floor_mod(modulus / g, step);
    while (floor_mod(base * k, step) != target) ++k;
    c += modulus * k;
    modulus = modulus / g * nn;
    c = floor_mod(c, modulus);
  }
  const Integer s = floor_mod(c + 1, modulus);
  return TruncStructure::truncation(Group::lex_qz(), LexQZ{Rational(1), s});
}

}  // namespace toag
