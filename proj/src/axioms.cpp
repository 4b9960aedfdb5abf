#include "toag/axioms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "statement_eval.hpp"
#include "toag/error.hpp"

namespace toag {
namespace {

std::uint64_t tuple_count(std::size_t size, int arity, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (int i = 0; i < arity; ++i) {
    if (n > cap / std::max<std::size_t>(size, 1)) return cap + 1;
    n *= size;
  }
  return n;
}

// Orders sampled tuples so that ordering hypotheses hold more often.
void normalize_sample(const TruncStructure& t, int id, std::vector<TruncElement>& tuple) {
  auto order = [&](std::size_t i, std::size_t j) {
    if (t.less(tuple[j], tuple[i])) std::swap(tuple[i], tuple[j]);
  };
  switch (id) {
    case 4: order(0, 1); order(2, 3); break;
    case 7:
    case kLemma1:
    case kCorollary1: order(0, 1); break;
    default: break;
  }
}

std::uint64_t statement_seed(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  std::uint64_t out = 0;
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  out = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out;
}

void confirm_witness(const TruncStructure& t, int id, const std::vector<TruncElement>& witness) {
  if (evaluate_statement(t, id, witness) != Outcome::violated) {
    throw std::logic_error("witness for " + statement_label(id) + " does not re-evaluate as a violation");
  }
}

}  // namespace

int statement_arity(int id) {
  switch (id) {
    case 2: case 3: case 9: return 1;
    case 1: case 8: case 10: case kLemma1: case kLemma2: case kCorollary1: return 2;
    case 4: return 4;
    case 5: case 6: case 7: case 11: case 12: case 13: case 14: case 15: case 16: return 3;
    default: throw PreconditionError("unknown axiom id " + std::to_string(id));
  }
}

bool is_valid_statement(int id) {
  return (id >= 1 && id <= kAxiomCount) || id == kLemma1 || id == kLemma2 || id == kCorollary1;
}

std::string statement_label(int id) {
  switch (id) {
    case kLemma1: return "LEMMA 1";
    case kLemma2: return "LEMMA 2";
    case kCorollary1: return "COROLLARY 1";
    default:
      if (id >= 1 && id <= kAxiomCount) return "AXIOM " + std::to_string(id);
      throw PreconditionError("unknown axiom id " + std::to_string(id));
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::exhausted_budget: return "EXHAUSTED-BUDGET";
  }
  return "?";
}

std::string AxiomReport::render() const {
  std::ostringstream out;
  out << statement_label(id) << ' ' << to_string(verdict);
  if (verdict == Verdict::fail) {
    out << " witness=(";
    for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i].to_string();
    out << ')';
  }
  out << " samples=" << samples << " seed=" << seed;
  return out.str();
}

Outcome evaluate_statement(const TruncStructure& t, int id, const std::vector<TruncElement>& tuple) {
  if (static_cast<int>(tuple.size()) != statement_arity(id)) {
    throw PreconditionError(statement_label(id) + " takes " + std::to_string(statement_arity(id)) + " elements");
  }
  for (const auto& x : tuple) {
    if (!t.contains(x)) throw PreconditionError(x.to_string() + " is not an element of " + t.describe());
  }
  if (t.is_table()) {
    std::vector<FiniteTable::element> idx;
    for (const auto& x : tuple) idx.push_back(static_cast<FiniteTable::element>(x.as<Integer>()));
    return detail::evaluate(t.table(), id, std::span<const FiniteTable::element>(idx));
  }
  return detail::evaluate(t, id, std::span<const TruncElement>(tuple));
}

bool table_satisfies(const FiniteTable& table, int id) {
  const int arity = statement_arity(id);
  return detail::for_each_index_tuple(table.size(), arity, [&](std::span<const std::uint32_t> idx) {
    return detail::evaluate(table, id, idx) != Outcome::violated;
  });
}

AxiomReport check_axiom(const TruncStructure& t, int id, const CheckOptions& options) {
  const int arity = statement_arity(id);
  AxiomReport report;
  report.id = id;
  report.seed = options.seed;

  auto record = [&](Outcome o) {
    ++report.samples;
    if (o != Outcome::vacuous) ++report.applicable;
  };

  if (t.is_table()) {
    const auto& table = t.table();
    const std::uint64_t total = tuple_count(table.size(), arity, options.budget);
    report.exhaustive = total <= options.budget;
    std::vector<std::uint32_t> bad;
    detail::for_each_index_tuple(table.size(), arity, [&](std::span<const std::uint32_t> idx) {
      if (report.samples >= options.budget) return false;
      Outcome o = detail::evaluate(table, id, idx);
      record(o);
      if (o == Outcome::violated) {
        bad.assign(idx.begin(), idx.end());
        return false;
      }
      return true;
    });
    if (!bad.empty()) {
      report.verdict = Verdict::fail;
      for (auto i : bad) report.witness.emplace_back(Integer(i));
      confirm_witness(t, id, report.witness);
    } else if (!report.exhaustive) {
      report.verdict = Verdict::exhausted_budget;
    }
    return report;
  }

  std::vector<TruncElement> tuple(static_cast<std::size_t>(arity));
  if (t.is_finite() && tuple_count(static_cast<std::size_t>(t.tau().as<Integer>()) + 1, arity, options.budget) <=
                           options.budget) {
    report.exhaustive = true;
    const auto elements = t.elements();
    detail::for_each_index_tuple(elements.size(), arity, [&](std::span<const std::uint32_t> idx) {
      for (int i = 0; i < arity; ++i) tuple[i] = elements[idx[i]];
      Outcome o = detail::evaluate(t, id, std::span<const TruncElement>(tuple));
      record(o);
      if (o == Outcome::violated) {
        report.verdict = Verdict::fail;
        report.witness = tuple;
        return false;
      }
      return true;
    });
  } else {
    Rng rng(statement_seed(options.seed, id));
    for (std::uint64_t n = 0; n < options.budget; ++n) {
      for (auto& x : tuple) x = t.sample(rng, options.bound);
      normalize_sample(t, id, tuple);
      Outcome o = detail::evaluate(t, id, std::span<const TruncElement>(tuple));
      record(o);
      if (o == Outcome::violated) {
        report.verdict = Verdict::fail;
        report.witness = tuple;
        break;
      }
    }
  }
  if (report.verdict == Verdict::fail) confirm_witness(t, id, report.witness);
  return report;
}

std::vector<AxiomReport> check_axioms(const TruncStructure& t, const CheckOptions& options) {
  std::vector<AxiomReport> out;
  for (int id = 1; id <= kAxiomCount; ++id) out.push_back(check_axiom(t, id, options));
  return out;
}

std::vector<AxiomReport> check_lemmas(const TruncStructure& t, const CheckOptions& options) {
  return {check_axiom(t, kLemma1, options), check_axiom(t, kLemma2, options), check_axiom(t, kCorollary1, options)};
}

AxiomSet parse_axiom_set(const std::string& text) {
  AxiomSet set;
  if (text == "all") {
    for (int i = 1; i <= kAxiomCount; ++i) set.set(i);
    return set;
  }
  if (text == "none" || text.empty()) return set;
  std::istringstream in(text);
  auto parse_id = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw ParseError("bad axiom id '" + s + "'");
    }
    if (used != s.size() || v < 1 || v > kAxiomCount) throw ParseError("bad axiom id '" + s + "'");
    return v;
  };
  for (std::string item; std::getline(in, item, ',');) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      set.set(parse_id(item));
      continue;
    }
    int lo = parse_id(item.substr(0, dash));
    int hi = parse_id(item.substr(dash + 1));
    if (lo > hi) throw ParseError("bad axiom range '" + item + "'");
    for (int i = lo; i <= hi; ++i) set.set(i);
  }
  return set;
}

std::string format_axiom_set(const AxiomSet& set) {
  std::string out;
  for (int i = 1; i <= kAxiomCount; ++i) {
    if (!set.test(i)) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out.empty() ? "none" : out;
}

}  // namespace toag
