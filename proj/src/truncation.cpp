#include "toag/truncation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "toag/error.hpp"

namespace toag {

FiniteTable::FiniteTable(std::size_t n, std::vector<element> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw PreconditionError("finite table needs N >= 1");
  if (entries_.size() != (n_ + 1) * (n_ + 1)) {
    throw PreconditionError("finite table needs (N+1)^2 entries");
  }
  for (element e : entries_) {
    if (e > n_) throw PreconditionError("table entry " + std::to_string(e) + " outside {0..N}");
  }
  const std::size_t s = n_ + 1;
  dotminus_.assign(s * s, kNone);
  for (std::size_t y = 0; y < n_; ++y) {
    for (std::size_t x = 0; x <= y; ++x) {
      for (std::size_t z = 0; z <= n_; ++z) {
        if (entries_[x * s + z] == y) {
          dotminus_[y * s + x] = static_cast<element>(z);
          break;
        }
      }
    }
  }
  tau_dotminus_.assign(s, top());
  tau_dotminus_[n_] = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t z = 0; z <= n_; ++z) {
      if (entries_[x * s + z] == n_) {
        tau_dotminus_[x] = static_cast<element>(z);
        break;
      }
    }
  }
}

FiniteTable FiniteTable::saturating(std::size_t n) {
  std::vector<element> entries;
  entries.reserve((n + 1) * (n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) entries.push_back(static_cast<element>(std::min(i + j, n)));
  }
  return FiniteTable(n, std::move(entries));
}

std::optional<FiniteTable::element> FiniteTable::try_dotminus(element y, element x) const {
  if (x > y || y >= n_) return std::nullopt;
  element z = dotminus_[y * (n_ + 1) + x];
  if (z == kNone) return std::nullopt;
  return z;
}

std::optional<std::string> FiniteTable::basic_violation() const {
  const auto n = static_cast<element>(n_);
  for (element x = 0; x <= n; ++x) {
    for (element y = 0; y <= n; ++y) {
      if (add(x, y) != add(y, x)) {
        return "Axiom 1 (commutativity) fails at witness=(" + std::to_string(x) + "," +
               std::to_string(y) + ")";
      }
    }
  }
  for (element x = 0; x <= n; ++x) {
    if (add(x, 0) != x) return "Axiom 2 (x+0=x) fails at witness=(" + std::to_string(x) + ")";
  }
  for (element x = 0; x <= n; ++x) {
    if (add(x, n) != n) return "Axiom 3 (x+tau=tau) fails at witness=(" + std::to_string(x) + ")";
  }
  // With commutativity, monotonicity in the first argument gives Axiom 4.
  for (element a = 0; a < n; ++a) {
    for (element c = 0; c <= n; ++c) {
      if (add(a, c) > add(a + 1, c)) {
        return "Axiom 4 (monotonicity) fails at witness=(" + std::to_string(a) + "," +
               std::to_string(a + 1) + "," + std::to_string(c) + "," + std::to_string(c) + ")";
      }
    }
  }
  return std::nullopt;
}

std::string FiniteTable::to_text() const {
  std::ostringstream out;
  out << "TOAG1\n" << "n " << n_ << "\n";
  for (std::size_t i = 0; i <= n_; ++i) {
    for (std::size_t j = 0; j <= n_; ++j) out << (j ? " " : "") << entries_[i * (n_ + 1) + j];
    out << "\n";
  }
  return out.str();
}

FiniteTable parse_finite_table(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  if (lines.empty() || lines[0].size() != 1 || lines[0][0] != "TOAG1") {
    throw ParseError("TOAG1: missing 'TOAG1' header line");
  }
  if (lines.size() < 2 || lines[1].size() != 2 || lines[1][0] != "n") {
    throw ParseError("TOAG1: expected 'n <N>' on line 2");
  }
  auto parse_count = [](const std::string& s) -> std::size_t {
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("TOAG1: expected a non-negative integer, got '" + s + "'");
    }
    return std::stoul(s);
  };
  const std::size_t n = parse_count(lines[1][1]);
  if (n < 1) throw ParseError("TOAG1: N must be at least 1");
  if (lines.size() != n + 3) {
    throw ParseError("TOAG1: expected " + std::to_string(n + 1) + " table rows, got " +
                     std::to_string(lines.size() - 2));
  }
  std::vector<FiniteTable::element> entries;
  entries.reserve((n + 1) * (n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& row = lines[i + 2];
    if (row.size() != n + 1) {
      throw ParseError("TOAG1: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n + 1));
    }
    for (const auto& w : row) {
      auto v = parse_count(w);
      if (v > n) throw ParseError("TOAG1: entry " + w + " outside {0.." + std::to_string(n) + "}");
      entries.push_back(static_cast<FiniteTable::element>(v));
    }
  }
  return FiniteTable(n, std::move(entries));
}

TruncStructure TruncStructure::truncation(Group group, GroupElement tau) {
  if (!group.contains(tau)) {
    throw MixedInstanceError("tau " + tau.to_string() + " is not an element of " + std::string(group.name()));
  }
  if (group.sign(tau) <= 0) throw PreconditionError("tau must be positive, got " + tau.to_string());
  return TruncStructure(group, std::move(tau), std::monostate{});
}

TruncStructure TruncStructure::finite(FiniteTable table) {
  if (auto violation = table.basic_violation()) throw ParseError(*violation);
  GroupElement tau = Integer(table.top_index());
  return TruncStructure(Group::integers(), std::move(tau), std::move(table));
}

bool TruncStructure::is_finite() const { return is_table() || group_.kind() == GroupKind::integers; }

std::vector<TruncElement> TruncStructure::elements() const {
  if (!is_finite()) throw PreconditionError("elements(): structure " + describe() + " is infinite");
  std::vector<TruncElement> out;
  const auto& top = tau_.as<Integer>();
  for (Integer i = 0; i <= top; ++i) out.emplace_back(i);
  return out;
}

FiniteTable::element TruncStructure::index(const TruncElement& x) const {
  return static_cast<FiniteTable::element>(x.as<Integer>());
}

bool TruncStructure::contains(const TruncElement& x) const {
  return group_.contains(x) && group_.sign(x) >= 0 && group_.less_equal(x, tau_);
}

void TruncStructure::require(const TruncElement& x) const {
  if (!contains(x)) throw PreconditionError(x.to_string() + " is not in [0," + tau_.to_string() + "]");
}

TruncElement TruncStructure::add(const TruncElement& x, const TruncElement& y) const {
  if (is_table()) {
    require(x);
    require(y);
    return Integer(table().add(index(x), index(y)));
  }
  auto s = group_.add(x, y);
  if (group_.less(s, tau_)) return s;
  return tau_;
}

std::strong_ordering TruncStructure::compare(const TruncElement& x, const TruncElement& y) const {
  return group_.compare(x, y);
}

std::optional<TruncElement> TruncStructure::try_dotminus(const TruncElement& y, const TruncElement& x) const {
  if (is_table()) {
    if (!contains(x) || !contains(y)) return std::nullopt;
    if (auto z = table().try_dotminus(index(y), index(x))) return TruncElement(Integer(*z));
    return std::nullopt;
  }
  if (!group_.less_equal(x, y) || !group_.less(y, tau_) || group_.sign(x) < 0) return std::nullopt;
  return group_.sub(y, x);
}

TruncElement TruncStructure::dotminus(const TruncElement& y, const TruncElement& x) const {
  require(x);
  require(y);
  if (auto z = try_dotminus(y, x)) return *z;
  throw PreconditionError("dotminus(" + y.to_string() + "," + x.to_string() +
                          ") undefined: requires x <= y < tau");
}

TruncElement TruncStructure::tau_dotminus(const TruncElement& x) const {
  require(x);
  if (is_table()) return Integer(table().tau_dotminus(index(x)));
  return group_.sub(tau_, x);
}

Case TruncStructure::case_of(const TruncElement& y, const TruncElement& z) const {
  require(y);
  require(z);
  if (is_top(y) || is_top(z)) throw PreconditionError("case_of requires both arguments below tau");
  return is_top(add(y, z)) ? Case::case2 : Case::case1;
}

std::optional<TruncElement> TruncStructure::least_positive() const {
  if (is_table()) return TruncElement(Integer(1));
  // tau > 0 bounds the least positive element of the group from above.
  return group_.least_positive();
}

TruncElement TruncStructure::sample(Rng& rng, std::int64_t bound) const {
  if (is_table()) {
    std::uniform_int_distribution<std::size_t> pick(0, table().top_index());
    return Integer(pick(rng));
  }
  return group_.sample_between(rng, tau_, bound);
}

TruncElement TruncStructure::parse_element(std::string_view text) const {
  auto x = group_.parse(text);
  require(x);
  return x;
}

std::string TruncStructure::describe() const {
  if (is_table()) return "TOAG1(n=" + std::to_string(table().top_index()) + ")";
  switch (group_.kind()) {
    case GroupKind::integers: return "Z:tau=" + tau_.to_string();
    case GroupKind::rationals: return "Q:tau=" + tau_.to_string();
    case GroupKind::lex_zz: return "ZZ:tau=" + tau_.to_string();
    case GroupKind::lex_qz: return "QZ:tau=" + tau_.to_string();
  }
  return "?";
}

std::optional<TruncStructure> parse_builtin_spec(std::string_view text) {
  struct Prefix {
    std::string_view tag;
    GroupKind kind;
  };
  static constexpr Prefix prefixes[] = {{"ZZ:tau=", GroupKind::lex_zz},
                                        {"QZ:tau=", GroupKind::lex_qz},
                                        {"Z:tau=", GroupKind::integers},
                                        {"Q:tau=", GroupKind::rationals}};
  for (const auto& p : prefixes) {
    if (text.substr(0, p.tag.size()) == p.tag) {
      Group g(p.kind);
      return TruncStructure::truncation(g, g.parse(text.substr(p.tag.size())));
    }
  }
  return std::nullopt;
}

TruncStructure load_finite_table(std::string_view text) { return TruncStructure::finite(parse_finite_table(text)); }

TruncStructure make_truncation(Group group, std::string_view tau) {
  return TruncStructure::truncation(group, group.parse(tau));
}

}  // namespace toag
