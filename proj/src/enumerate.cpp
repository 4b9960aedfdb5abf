#include <algorithm>
#include <utility>

#include "toag/axioms.hpp"
#include "toag/error.hpp"

namespace toag {
namespace {

constexpr std::uint32_t kUnknown = ~std::uint32_t{0};

class TableSearch {
 public:
  explicit TableSearch(const SearchSpec& spec) : spec_(spec), n_(spec.size), s_(spec.size + 1) {
    entries_.assign(s_ * s_, kUnknown);
    for (std::size_t x = 0; x <= n_; ++x) {
      set(0, x, static_cast<std::uint32_t>(x));
      set(x, n_, static_cast<std::uint32_t>(n_));
    }
    for (std::size_t i = 1; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) cells_.emplace_back(i, j);
    }
  }

  SearchResult run() {
    descend(0);
    return std::move(result_);
  }

 private:
  std::uint32_t at(std::size_t i, std::size_t j) const { return entries_[i * s_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t v) {
    entries_[i * s_ + j] = v;
    entries_[j * s_ + i] = v;
  }

  void descend(std::size_t cell) {
    if (result_.stats.exhausted) return;
    if (cell == cells_.size()) {
      ++result_.stats.leaves;
      accept_leaf();
      return;
    }
    const auto [i, j] = cells_[cell];
    // Row-major order keeps both neighbours already assigned.
    const std::uint32_t lower = std::max(at(i, j - 1), at(i - 1, j));
    for (std::uint32_t v = lower; v <= n_; ++v) {
      if (++result_.stats.nodes > spec_.node_budget) {
        result_.stats.exhausted = true;
        return;
      }
      set(i, j, v);
      if (consistent()) descend(cell + 1);
      if (result_.stats.exhausted) break;
    }
    set(i, j, kUnknown);
  }

  // Violations of required axioms 5 and 6 that are already decided by the
  // filled entries.
  bool consistent() const {
    if (spec_.required.test(5)) {
      for (std::size_t x = 1; x < n_; ++x) {
        for (std::size_t y = 1; y < n_; ++y) {
          const auto xy = at(x, y);
          for (std::size_t z = 1; z < n_; ++z) {
            const auto yz = at(y, z);
            if (xy == kUnknown || yz == kUnknown) continue;
            const auto left = at(x, yz);
            const auto right = at(xy, z);
            if (left != kUnknown && right != kUnknown && left != right) return false;
          }
        }
      }
    }
    if (spec_.required.test(6)) {
      for (std::size_t x = 1; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
          const auto a = at(x, y);
          if (a == kUnknown || a >= n_) continue;
          for (std::size_t z = y + 1; z < n_; ++z) {
            if (at(x, z) == a) return false;
          }
        }
      }
    }
    return true;
  }

  void accept_leaf() {
    FiniteTable table(n_, entries_);
    for (int id = 1; id <= kAxiomCount; ++id) {
      if (spec_.required.test(id) && !table_satisfies(table, id)) return;
    }
    for (int id = 1; id <= kAxiomCount; ++id) {
      if (spec_.negated.test(id) && table_satisfies(table, id)) return;
    }
    result_.tables.push_back(std::move(table));
  }

  const SearchSpec& spec_;
  std::size_t n_;
  std::size_t s_;
  std::vector<std::uint32_t> entries_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  SearchResult result_;
};

}  // namespace

SearchResult enumerate_toags(const SearchSpec& spec) {
  if (spec.size < 1 || spec.size > kMaxEnumerationSize) {
    throw PreconditionError("enumerate: size must be in 1.." + std::to_string(kMaxEnumerationSize));
  }
  if ((spec.required & spec.negated).any()) {
    throw PreconditionError("enumerate: axioms " + format_axiom_set(spec.required & spec.negated) +
                            " are both required and negated");
  }
  return TableSearch(spec).run();
}

std::vector<IndependenceEntry> independence_report(std::size_t n_max, std::uint64_t node_budget,
                                                   const std::vector<int>& ids) {
  if (n_max < 1 || n_max > kMaxEnumerationSize) {
    throw PreconditionError("independence: size-max must be in 1.." + std::to_string(kMaxEnumerationSize));
  }
  for (int id : ids) {
    if (id < 1 || id > kAxiomCount) throw PreconditionError("independence: unknown axiom id " + std::to_string(id));
  }
  std::vector<IndependenceEntry> out;
  for (int id : ids) {
    IndependenceEntry entry;
    entry.id = id;
    for (std::size_t n = 1; n <= n_max; ++n) {
      SearchSpec spec;
      spec.size = n;
      spec.required = parse_axiom_set("all");
      spec.required.reset(id);
      spec.negated.set(id);
      spec.node_budget = node_budget;
      auto result = enumerate_toags(spec);
      entry.searched_up_to = n;
      entry.exhausted = entry.exhausted || result.stats.exhausted;
      if (!result.tables.empty()) {
        entry.witness = std::move(result.tables.front());
        break;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace toag
