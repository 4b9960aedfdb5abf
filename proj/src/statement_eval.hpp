#pragma once

// Statement evaluators shared by the runtime structure and the raw tables
// used during enumeration.  S provides element, zero(), top(), add(),
// less(), less_equal(), try_dotminus(y, x) and tau_dotminus(x).
//
// Hypotheses are evaluated first; a nested -. that is undefined counts as a
// failed hypothesis.

#include <array>
#include <cstdint>
#include <span>

#include "toag/axioms.hpp"

namespace toag::detail {

template <class S>
Outcome evaluate(const S& s, int id, std::span<const typename S::element> t) {
  using E = typename S::element;
  const E tau = s.top();
  auto is_tau = [&](const E& a) { return a == tau; };
  auto below = [&](const E& a) { return s.less(a, tau); };
  auto verdict = [](bool ok) { return ok ? Outcome::holds : Outcome::violated; };
  // y -. (tau -. x)
  auto shifted = [&](const E& y, const E& x) { return s.try_dotminus(y, s.tau_dotminus(x)); };

  switch (id) {
    case 1: return verdict(s.add(t[0], t[1]) == s.add(t[1], t[0]));
    case 2: return verdict(s.add(t[0], s.zero()) == t[0]);
    case 3: return verdict(is_tau(s.add(t[0], tau)));
    case 4: {
      const E &x1 = t[0], &y1 = t[1], &x2 = t[2], &y2 = t[3];
      if (!s.less_equal(x1, y1) || !s.less_equal(x2, y2)) return Outcome::vacuous;
      return verdict(s.less_equal(s.add(x1, x2), s.add(y1, y2)));
    }
    case 5: {
      const E &x = t[0], &y = t[1], &z = t[2];
      return verdict(s.add(x, s.add(y, z)) == s.add(s.add(x, y), z));
    }
    case 6: {
      const E &x = t[0], &y = t[1], &z = t[2];
      E a = s.add(x, y);
      if (!(a == s.add(x, z)) || !below(a)) return Outcome::vacuous;
      return verdict(y == z);
    }
    case 7: {
      // (x, y, w): the solution of x + z = y exists and w is no other solution.
      const E &x = t[0], &y = t[1], &w = t[2];
      if (!s.less_equal(x, y) || !below(y)) return Outcome::vacuous;
      auto d = s.try_dotminus(y, x);
      if (!d || !(s.add(x, *d) == y)) return Outcome::violated;
      if (s.add(x, w) == y && !(w == *d)) return Outcome::violated;
      return Outcome::holds;
    }
    case 8: {
      // (x, w): tau -. x reaches tau, and no smaller w does.
      const E &x = t[0], &w = t[1];
      E m = s.tau_dotminus(x);
      if (!is_tau(s.add(x, m))) return Outcome::violated;
      if (is_tau(s.add(x, w)) && s.less(w, m)) return Outcome::violated;
      return Outcome::holds;
    }
    case 9: {
      const E& x = t[0];
      return verdict(s.tau_dotminus(s.tau_dotminus(x)) == x);
    }
    case 10: {
      const E &x = t[0], &y = t[1];
      if (!below(x) || !below(y) || !is_tau(s.add(x, y))) return Outcome::vacuous;
      auto a = shifted(y, x);
      auto b = shifted(x, y);
      if (!a || !b) return Outcome::vacuous;
      return verdict(*a == *b);
    }
    case 11: {
      const E &x = t[0], &y = t[1], &z = t[2];
      E yz = s.add(y, z);
      E xy = s.add(y, x);
      if (!below(yz) || !is_tau(s.add(x, yz)) || !below(xy)) return Outcome::vacuous;
      auto a = s.try_dotminus(x, s.tau_dotminus(yz));
      auto b = s.try_dotminus(z, s.tau_dotminus(xy));
      if (!a || !b) return Outcome::vacuous;
      return verdict(*a == *b);
    }
    case 12: {
      const E &x = t[0], &y = t[1], &z = t[2];
      E yz = s.add(y, z);
      if (!below(yz) || !is_tau(s.add(x, yz)) || !is_tau(s.add(y, x))) return Outcome::vacuous;
      auto e = shifted(y, x);
      if (!e) return Outcome::vacuous;
      E lhs = s.add(z, *e);
      if (!below(lhs)) return Outcome::vacuous;
      auto rhs = s.try_dotminus(x, s.tau_dotminus(yz));
      if (!rhs) return Outcome::vacuous;
      return verdict(lhs == *rhs);
    }
    case 13: {
      const E &x = t[0], &y = t[1], &z = t[2];
      if (!is_tau(s.add(y, x)) || !below(s.add(y, z))) return Outcome::vacuous;
      auto e = shifted(y, x);
      if (!e) return Outcome::vacuous;
      return verdict(below(s.add(z, *e)));
    }
    case 14: {
      // Conclusion read as x + (y-.(tau-.z)) = (x-.(tau-.y)) + z.
      const E &x = t[0], &y = t[1], &z = t[2];
      if (!is_tau(s.add(y, z)) || !is_tau(s.add(y, x))) return Outcome::vacuous;
      auto e = shifted(y, x);
      if (!e || !below(s.add(z, *e))) return Outcome::vacuous;
      auto f = shifted(y, z);
      auto g = shifted(x, y);
      if (!f || !g) return Outcome::vacuous;
      return verdict(s.add(x, *f) == s.add(*g, z));
    }
    case 15: {
      const E &x = t[0], &y = t[1], &z = t[2];
      if (!is_tau(s.add(y, z)) || !is_tau(s.add(y, x))) return Outcome::vacuous;
      auto f = shifted(y, z);
      if (!f || !is_tau(s.add(x, *f))) return Outcome::vacuous;
      auto e = shifted(y, x);
      if (!e) return Outcome::vacuous;
      return verdict(is_tau(s.add(z, *e)));
    }
    case 16: {
      const E &x = t[0], &y = t[1], &z = t[2];
      if (!is_tau(s.add(y, z)) || !is_tau(s.add(y, x))) return Outcome::vacuous;
      auto f = shifted(y, z);
      if (!f || !is_tau(s.add(x, *f))) return Outcome::vacuous;
      auto e = shifted(y, x);
      if (!e) return Outcome::vacuous;
      auto lhs = shifted(*e, z);
      auto rhs = shifted(*f, x);
      if (!lhs || !rhs) return Outcome::vacuous;
      return verdict(*lhs == *rhs);
    }
    case kLemma1: {
      const E &y = t[0], &z = t[1];
      if (!s.less_equal(y, z) || !below(z)) return Outcome::vacuous;
      return verdict(s.less_equal(s.tau_dotminus(z), s.tau_dotminus(y)));
    }
    case kLemma2: {
      const E &x = t[0], &y = t[1];
      if (!below(x) || !below(y) || !(s.tau_dotminus(x) == s.tau_dotminus(y))) return Outcome::vacuous;
      return verdict(x == y);
    }
    case kCorollary1: {
      const E &x = t[0], &y = t[1];
      if (!s.less(x, y) || !below(y)) return Outcome::vacuous;
      return verdict(s.less(s.tau_dotminus(y), s.tau_dotminus(x)));
    }
    default: return Outcome::vacuous;
  }
}

/// Visits every index tuple over {0..size-1} in lexicographic order; stops
/// and returns false as soon as `fn` does.
template <class Fn>
bool for_each_index_tuple(std::size_t size, int arity, Fn&& fn) {
  std::array<std::uint32_t, 4> idx{};
  for (;;) {
    if (!fn(std::span<const std::uint32_t>(idx.data(), static_cast<std::size_t>(arity)))) return false;
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == size) idx[pos--] = 0;
    if (pos < 0) return true;
  }
}

}  // namespace toag::detail
