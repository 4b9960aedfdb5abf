#include "toag/extension.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <sstream>

#include "statement_eval.hpp"
#include "toag/error.hpp"

namespace toag {
namespace {

std::uint64_t power_capped(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && n > cap / base) return cap + 1;
    n *= base;
  }
  return n;
}

std::string render_tuple(std::span<const PElement> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) out += (i ? "," : "") + tuple[i].to_string();
  return out + ")";
}

int case_index(Case c) { return c == Case::case2 ? 1 : 0; }

// Elements of P used by the law checks: every <k,x> with k <= kmax when
// [0, tau) is finite, otherwise a sampler.
class PSource {
 public:
  PSource(const Extension& p, const ExtensionOptions& options) : p_(p), options_(options) {
    const auto& t = p.base();
    if (!t.is_finite()) return;
    auto elements = t.elements();
    elements.pop_back();  // tau
    for (std::uint64_t k = 0; k <= options.kmax; ++k) {
      for (const auto& x : elements) all_.push_back(PElement{Integer(k), x});
    }
  }

  bool enumerable(int arity) const {
    return !all_.empty() && power_capped(all_.size(), arity, options_.budget) <= options_.budget;
  }
  const std::vector<PElement>& all() const { return all_; }

  PElement sample(Rng& rng) const {
    const auto& t = p_.base();
    if (!all_.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, all_.size() - 1);
      return all_[pick(rng)];
    }
    std::uniform_int_distribution<std::uint64_t> k(0, options_.kmax);
    TruncElement x = t.sample(rng, options_.bound);
    while (t.is_top(x)) x = t.sample(rng, options_.bound);
    return PElement{Integer(k(rng)), std::move(x)};
  }

 private:
  const Extension& p_;
  const ExtensionOptions& options_;
  std::vector<PElement> all_;
};

using LawFn = std::function<Outcome(std::span<PElement>)>;

// Runs one law exhaustively when the tuple space fits in the budget, else on
// `budget` sampled tuples.  A PreconditionError raised by the construction
// (an undefined carry in a malformed table) is a failure.
LawReport run_law(std::string name, int arity, const PSource& source, const ExtensionOptions& options,
                  std::uint64_t seed_salt, const LawFn& law) {
  LawReport report;
  report.name = std::move(name);
  report.seed = options.seed;
  std::vector<PElement> tuple(static_cast<std::size_t>(arity));

  auto run_one = [&]() {
    ++report.samples;
    Outcome o;
    std::string note;
    try {
      o = law(tuple);
    } catch (const PreconditionError& e) {
      o = Outcome::violated;
      note = std::string(" error=\"") + e.what() + "\"";
    }
    if (o == Outcome::violated) {
      report.verdict = Verdict::fail;
      report.witness = render_tuple(tuple) + note;
      return false;
    }
    return true;
  };

  if (source.enumerable(arity)) {
    report.exhaustive = true;
    const auto& all = source.all();
    detail::for_each_index_tuple(all.size(), arity, [&](std::span<const std::uint32_t> idx) {
      for (int i = 0; i < arity; ++i) tuple[i] = all[idx[i]];
      return run_one();
    });
  } else {
    Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + seed_salt);
    for (std::uint64_t n = 0; n < options.budget; ++n) {
      for (auto& e : tuple) e = source.sample(rng);
      if (!run_one()) break;
    }
  }
  return report;
}

Outcome check(bool ok) { return ok ? Outcome::holds : Outcome::violated; }

}  // namespace

std::string PElement::to_string() const { return "<" + k.str() + "," + x.to_string() + ">"; }

std::string CompletionElement::to_string() const { return pos.to_string() + "-" + neg.to_string(); }

bool shape_reachable(const AssociativityShape& s) {
  switch (s.situation) {
    case 1: return s.inner == Case::case1 && s.outer == Case::case1;
    case 2:
    case 3: return s.inner != s.outer;
    case 4: return s.inner == Case::case2 && s.outer == Case::case2;
    default: return false;
  }
}

void Extension::require(const PElement& a) const {
  if (a.k < 0) throw PreconditionError("P element " + a.to_string() + " has negative omega coordinate");
  if (!t_.contains(a.x) || t_.is_top(a.x)) {
    throw PreconditionError("P element " + a.to_string() + " needs 0 <= x < " + t_.tau().to_string());
  }
}

PElement Extension::make(Integer k, TruncElement x) const {
  PElement p{std::move(k), std::move(x)};
  require(p);
  return p;
}

PElement Extension::add(const PElement& a, const PElement& b) const {
  require(a);
  require(b);
  TruncElement s = t_.add(a.x, b.x);
  if (!t_.is_top(s)) return {a.k + b.k, std::move(s)};
  auto carry = t_.try_dotminus(a.x, t_.tau_dotminus(b.x));
  if (!carry) {
    throw PreconditionError("carry " + a.x.to_string() + " -. (tau -. " + b.x.to_string() + ") is undefined");
  }
  return {a.k + b.k + 1, std::move(*carry)};
}

std::strong_ordering Extension::compare(const PElement& a, const PElement& b) const {
  if (a.k < b.k) return std::strong_ordering::less;
  if (b.k < a.k) return std::strong_ordering::greater;
  return t_.compare(a.x, b.x);
}

PElement Extension::cancel_witness(const PElement& a, const PElement& b) const {
  require(a);
  require(b);
  if (less(b, a)) throw PreconditionError("cancel_witness: " + a.to_string() + " > " + b.to_string());
  if (a.k == b.k) return {0, t_.dotminus(b.x, a.x)};
  if (t_.less_equal(a.x, b.x)) return {b.k - a.k, t_.dotminus(b.x, a.x)};
  return {b.k - a.k - 1, t_.tau_dotminus(t_.dotminus(a.x, b.x))};
}

PElement Extension::embed(const TruncElement& x) const {
  if (!t_.contains(x)) throw PreconditionError(x.to_string() + " is not an element of " + t_.describe());
  if (t_.is_top(x)) return tau_p();
  return {0, x};
}

AssociativityShape Extension::shape(const PElement& a, const PElement& b, const PElement& c) const {
  AssociativityShape s;
  const Case yz = t_.case_of(b.x, c.x);
  const Case x_bc = t_.case_of(a.x, add(b, c).x);
  s.situation = 1 + 2 * case_index(yz) + case_index(x_bc);
  s.inner = t_.case_of(b.x, a.x);
  s.outer = t_.case_of(c.x, add(b, a).x);
  return s;
}

std::string LawReport::render() const {
  std::ostringstream out;
  out << name << ' ' << to_string(verdict);
  if (verdict == Verdict::fail) out << " witness=" << witness;
  out << " samples=" << samples << " seed=" << seed;
  return out.str();
}

LawReport verify_embedding(const TruncStructure& t, const ExtensionOptions& options) {
  Extension p(t);
  LawReport report;
  report.name = "EMBEDDING";
  report.seed = options.seed;
  const PElement tau_p = p.tau_p();

  auto check_pair = [&](const TruncElement& x, const TruncElement& y) {
    ++report.samples;
    const PElement ex = p.embed(x);
    const PElement ey = p.embed(y);
    std::string problem;
    if (p.compare(ex, ey) != t.compare(x, y)) {
      problem = "order";
    } else if (!p.less_equal(ex, tau_p) || (ex == tau_p) != t.is_top(x)) {
      problem = "image";
    } else {
      try {
        const PElement sum = p.add(ex, ey);
        const PElement truncated = p.less(sum, tau_p) ? sum : tau_p;
        if (!(p.embed(t.add(x, y)) == truncated)) problem = "addition";
      } catch (const PreconditionError& e) {
        problem = std::string("addition error=\"") + e.what() + "\"";
      }
    }
    if (problem.empty()) return true;
    report.verdict = Verdict::fail;
    report.witness = "(" + x.to_string() + "," + y.to_string() + ") " + problem;
    return false;
  };

  const bool enumerable = t.is_finite() && power_capped(static_cast<std::uint64_t>(t.tau().as<Integer>()) + 1, 2,
                                                        options.budget) <= options.budget;
  if (enumerable) {
    report.exhaustive = true;
    const auto elements = t.elements();
    for (const auto& x : elements) {
      for (const auto& y : elements) {
        if (!check_pair(x, y)) return report;
      }
    }
    return report;
  }
  Rng rng(options.seed);
  for (std::uint64_t n = 0; n < options.budget; ++n) {
    if (!check_pair(t.sample(rng, options.bound), t.sample(rng, options.bound))) break;
  }
  return report;
}

bool PLawReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawReport& l) { return l.verdict == Verdict::pass; });
}

bool PLawReport::all_situations_reached() const {
  for (int s = 1; s <= 4; ++s) {
    bool hit = std::any_of(coverage.begin(), coverage.end(),
                           [&](const ShapeCount& c) { return c.shape.situation == s && c.count > 0; });
    if (!hit) return false;
  }
  return true;
}

std::uint64_t PLawReport::count(int situation, Case inner, Case outer) const {
  for (const auto& c : coverage) {
    if (c.shape.situation == situation && c.shape.inner == inner && c.shape.outer == outer) return c.count;
  }
  return 0;
}

PLawReport verify_p_laws(const TruncStructure& t, const ExtensionOptions& options) {
  Extension p(t);
  PSource source(p, options);
  PLawReport report;
  std::array<std::uint64_t, 16> shapes{};

  report.laws.push_back(run_law("P-LAW identity", 1, source, options, 1, [&](std::span<PElement> v) {
    return check(p.add(v[0], p.zero()) == v[0] && p.add(p.zero(), v[0]) == v[0]);
  }));
  report.laws.push_back(run_law("P-LAW commutativity", 2, source, options, 2, [&](std::span<PElement> v) {
    return check(p.add(v[0], v[1]) == p.add(v[1], v[0]));
  }));
  report.laws.push_back(run_law("P-LAW associativity", 3, source, options, 3, [&](std::span<PElement> v) {
    const auto& a = v[0];
    const auto& b = v[1];
    const auto& c = v[2];
    const PElement right = p.add(a, p.add(b, c));
    const bool ok = right == p.add(p.add(a, b), c) && right == p.add(c, p.add(b, a));
    if (ok) {
      const auto s = p.shape(a, b, c);
      ++shapes[(s.situation - 1) * 4 + case_index(s.inner) * 2 + case_index(s.outer)];
    }
    return check(ok);
  }));
  report.laws.push_back(run_law("P-LAW monotonicity", 4, source, options, 4, [&](std::span<PElement> v) {
    if (p.less(v[1], v[0])) std::swap(v[0], v[1]);
    if (p.less(v[3], v[2])) std::swap(v[2], v[3]);
    return check(p.less_equal(p.add(v[0], v[2]), p.add(v[1], v[3])));
  }));
  report.laws.push_back(run_law("P-LAW cancellation", 2, source, options, 5, [&](std::span<PElement> v) {
    if (p.less(v[1], v[0])) return Outcome::vacuous;
    return check(p.add(v[0], p.cancel_witness(v[0], v[1])) == v[1]);
  }));
  report.laws.push_back(run_law("P-LAW cancellativity", 3, source, options, 6, [&](std::span<PElement> v) {
    if (!(p.add(v[0], v[1]) == p.add(v[0], v[2]))) return Outcome::vacuous;
    return check(v[1] == v[2]);
  }));

  for (int s = 1; s <= 4; ++s) {
    for (int inner = 0; inner < 2; ++inner) {
      for (int outer = 0; outer < 2; ++outer) {
        AssociativityShape shape{s, inner ? Case::case2 : Case::case1, outer ? Case::case2 : Case::case1};
        report.coverage.push_back({shape, shapes[(s - 1) * 4 + inner * 2 + outer]});
      }
    }
  }
  return report;
}

CompletionElement Completion::add(const CompletionElement& a, const CompletionElement& b) const {
  return {p_.add(a.pos, b.pos), p_.add(a.neg, b.neg)};
}

std::strong_ordering Completion::compare(const CompletionElement& a, const CompletionElement& b) const {
  return p_.compare(p_.add(a.pos, b.neg), p_.add(b.pos, a.neg));
}

CompletionElement Completion::normalize(const CompletionElement& a) const {
  if (p_.less_equal(a.neg, a.pos)) return {p_.cancel_witness(a.neg, a.pos), p_.zero()};
  return {p_.zero(), p_.cancel_witness(a.pos, a.neg)};
}

}  // namespace toag
