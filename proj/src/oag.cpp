#include "toag/oag.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "toag/error.hpp"

namespace toag {
namespace {

template <class T>
std::strong_ordering cmp_scalar(const T& a, const T& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Cross multiplication; denominators are positive.
std::strong_ordering cmp_scalar(const Rational& a, const Rational& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(a) == denominator(b)) return cmp_scalar(numerator(a), numerator(b));
  return cmp_scalar(Integer(numerator(a) * denominator(b)), Integer(numerator(b) * denominator(a)));
}

template <class Major>
std::strong_ordering cmp_lex(const LexPair<Major>& a, const LexPair<Major>& b) {
  if (auto c = cmp_scalar(a.major, b.major); c != 0) return c;
  return cmp_scalar(a.minor, b.minor);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::pair<std::string_view, std::string_view> parse_pair(std::string_view text) {
  auto t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw ParseError("expected a pair '(a,b)', got '" + std::string(text) + "'");
  }
  t = t.substr(1, t.size() - 2);
  auto comma = t.find(',');
  if (comma == std::string_view::npos || t.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("expected a pair '(a,b)', got '" + std::string(text) + "'");
  }
  return {t.substr(0, comma), t.substr(comma + 1)};
}

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational sample_rational(Rng& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

// hi * (num/den) with 0 <= num <= den <= bound.
Rational sample_fraction_of(Rng& rng, const Rational& hi, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  std::int64_t d = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, d);
  return hi * Rational(Integer(num(rng)), Integer(d));
}

Integer sample_in(Rng& rng, const Integer& lo, const Integer& hi) {
  // Endpoints get extra weight so boundary cases are exercised.
  std::uniform_int_distribution<int> pick(0, 7);
  switch (pick(rng)) {
    case 0: return lo;
    case 1: return hi;
    default: return uniform_integer(rng, lo, hi);
  }
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::integers: return "Integers";
    case GroupKind::rationals: return "Rationals";
    case GroupKind::lex_zz: return "LexZZ";
    case GroupKind::lex_qz: return "LexQZ";
  }
  return "?";
}

Integer uniform_integer(Rng& rng, const Integer& lo, const Integer& hi) {
  if (hi < lo) throw PreconditionError("uniform_integer: empty range");
  Integer span = hi - lo;
  constexpr auto max64 = std::numeric_limits<std::int64_t>::max();
  if (span < max64) {
    std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(span));
    return lo + dist(rng);
  }
  // Wide range: draw enough random words and reduce (the bias is negligible).
  Integer acc = 0;
  auto bits = msb(span) + 64;
  for (std::size_t have = 0; have < bits; have += 64) {
    acc <<= 64;
    acc += Integer(rng());
  }
  return lo + acc % (span + 1);
}

Integer floor_div(const Integer& a, const Integer& n) {
  Integer q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& n) { return a - n * floor_div(a, n); }

std::string GroupElement::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return rational_to_string(v);
        } else if constexpr (std::is_same_v<T, LexZZ>) {
          return "(" + v.major.str() + "," + v.minor.str() + ")";
        } else {
          return "(" + rational_to_string(v.major) + "," + v.minor.str() + ")";
        }
      },
      value_);
}

void Group::require(const GroupElement& a) const {
  if (a.kind() != kind_) {
    throw MixedInstanceError("element " + a.to_string() + " of " + std::string(to_string(a.kind())) +
                             " used with group " + std::string(name()));
  }
}

GroupElement Group::zero() const {
  switch (kind_) {
    case GroupKind::integers: return Integer(0);
    case GroupKind::rationals: return Rational(0);
    case GroupKind::lex_zz: return LexZZ{0, 0};
    case GroupKind::lex_qz: return LexQZ{0, 0};
  }
  return {};
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case GroupKind::integers: return Integer(a.as<Integer>() + b.as<Integer>());
    case GroupKind::rationals: return Rational(a.as<Rational>() + b.as<Rational>());
    case GroupKind::lex_zz: {
      const auto& x = a.as<LexZZ>();
      const auto& y = b.as<LexZZ>();
      return LexZZ{x.major + y.major, x.minor + y.minor};
    }
    case GroupKind::lex_qz: {
      const auto& x = a.as<LexQZ>();
      const auto& y = b.as<LexQZ>();
      return LexQZ{x.major + y.major, x.minor + y.minor};
    }
  }
  return {};
}

GroupElement Group::negate(const GroupElement& a) const {
  require(a);
  switch (kind_) {
    case GroupKind::integers: return Integer(-a.as<Integer>());
    case GroupKind::rationals: return Rational(-a.as<Rational>());
    case GroupKind::lex_zz: return LexZZ{-a.as<LexZZ>().major, -a.as<LexZZ>().minor};
    case GroupKind::lex_qz: return LexQZ{-a.as<LexQZ>().major, -a.as<LexQZ>().minor};
  }
  return {};
}

GroupElement Group::sub(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case GroupKind::integers: return Integer(a.as<Integer>() - b.as<Integer>());
    case GroupKind::rationals: return Rational(a.as<Rational>() - b.as<Rational>());
    case GroupKind::lex_zz: {
      const auto& x = a.as<LexZZ>();
      const auto& y = b.as<LexZZ>();
      return LexZZ{x.major - y.major, x.minor - y.minor};
    }
    case GroupKind::lex_qz: {
      const auto& x = a.as<LexQZ>();
      const auto& y = b.as<LexQZ>();
      return LexQZ{x.major - y.major, x.minor - y.minor};
    }
  }
  return {};
}

GroupElement Group::multiply(const GroupElement& a, const Integer& n) const {
  require(a);
  switch (kind_) {
    case GroupKind::integers: return Integer(a.as<Integer>() * n);
    case GroupKind::rationals: return Rational(a.as<Rational>() * Rational(n));
    case GroupKind::lex_zz: return LexZZ{a.as<LexZZ>().major * n, a.as<LexZZ>().minor * n};
    case GroupKind::lex_qz: return LexQZ{a.as<LexQZ>().major * Rational(n), a.as<LexQZ>().minor * n};
  }
  return {};
}

std::strong_ordering Group::compare(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case GroupKind::integers: return cmp_scalar(a.as<Integer>(), b.as<Integer>());
    case GroupKind::rationals: return cmp_scalar(a.as<Rational>(), b.as<Rational>());
    case GroupKind::lex_zz: return cmp_lex(a.as<LexZZ>(), b.as<LexZZ>());
    case GroupKind::lex_qz: return cmp_lex(a.as<LexQZ>(), b.as<LexQZ>());
  }
  return std::strong_ordering::equal;
}

int Group::sign(const GroupElement& a) const {
  require(a);
  switch (kind_) {
    case GroupKind::integers: return a.as<Integer>().sign();
    case GroupKind::rationals: return numerator(a.as<Rational>()).sign();
    case GroupKind::lex_zz: {
      const auto& v = a.as<LexZZ>();
      return v.major.sign() != 0 ? v.major.sign() : v.minor.sign();
    }
    case GroupKind::lex_qz: {
      const auto& v = a.as<LexQZ>();
      const int s = numerator(v.major).sign();
      return s != 0 ? s : v.minor.sign();
    }
  }
  return 0;
}

std::optional<GroupElement> Group::least_positive() const {
  switch (kind_) {
    case GroupKind::integers: return GroupElement(Integer(1));
    case GroupKind::rationals: return std::nullopt;
    case GroupKind::lex_zz: return GroupElement(LexZZ{0, 1});
    case GroupKind::lex_qz: return GroupElement(LexQZ{0, 1});
  }
  return std::nullopt;
}

GroupElement Group::from_integer(const Integer& n) const {
  switch (kind_) {
    case GroupKind::integers: return n;
    case GroupKind::rationals: return Rational(n);
    case GroupKind::lex_zz: return LexZZ{0, n};
    case GroupKind::lex_qz: return LexQZ{0, n};
  }
  return {};
}

std::optional<GroupElement> Group::divide_exact(const GroupElement& a, const Integer& n) const {
  require(a);
  if (n == 0) throw PreconditionError("divide_exact: division by zero");
  switch (kind_) {
    case GroupKind::integers: {
      const auto& v = a.as<Integer>();
      if (v % n != 0) return std::nullopt;
      return GroupElement(Integer(v / n));
    }
    case GroupKind::rationals: return GroupElement(Rational(a.as<Rational>() / Rational(n)));
    case GroupKind::lex_zz: {
      const auto& v = a.as<LexZZ>();
      if (v.major % n != 0 || v.minor % n != 0) return std::nullopt;
      return GroupElement(LexZZ{v.major / n, v.minor / n});
    }
    case GroupKind::lex_qz: {
      const auto& v = a.as<LexQZ>();
      if (v.minor % n != 0) return std::nullopt;
      return GroupElement(LexQZ{v.major / Rational(n), v.minor / n});
    }
  }
  return std::nullopt;
}

std::optional<Division> Group::divide_with_remainder(const GroupElement& a, std::int64_t n) const {
  require(a);
  if (n <= 0) throw PreconditionError("divide_with_remainder: n must be positive");
  if (sign(a) < 0) throw PreconditionError("divide_with_remainder: a must be non-negative");
  const Integer nn(n);
  switch (kind_) {
    case GroupKind::integers: {
      const auto& v = a.as<Integer>();
      return Division{Integer(floor_div(v, nn)), static_cast<std::int64_t>(floor_mod(v, nn))};
    }
    case GroupKind::rationals:
      return Division{Rational(a.as<Rational>() / Rational(nn)), 0};
    case GroupKind::lex_zz: {
      const auto& v = a.as<LexZZ>();
      if (v.major % nn != 0) return std::nullopt;
      return Division{LexZZ{v.major / nn, floor_div(v.minor, nn)},
                      static_cast<std::int64_t>(floor_mod(v.minor, nn))};
    }
    case GroupKind::lex_qz: {
      const auto& v = a.as<LexQZ>();
      return Division{LexQZ{v.major / Rational(nn), floor_div(v.minor, nn)},
                      static_cast<std::int64_t>(floor_mod(v.minor, nn))};
    }
  }
  return std::nullopt;
}

GroupElement Group::sample(Rng& rng, std::int64_t bound) const {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  switch (kind_) {
    case GroupKind::integers: return Integer(coord(rng));
    case GroupKind::rationals: return sample_rational(rng, bound);
    case GroupKind::lex_zz: {
      Integer major(coord(rng));
      return LexZZ{major, Integer(coord(rng))};
    }
    case GroupKind::lex_qz: {
      Rational major = sample_rational(rng, bound);
      return LexQZ{major, Integer(coord(rng))};
    }
  }
  return {};
}

GroupElement Group::sample_between(Rng& rng, const GroupElement& hi, std::int64_t bound) const {
  require(hi);
  if (sign(hi) < 0) throw PreconditionError("sample_between: upper end must be non-negative");
  std::uniform_int_distribution<int> pick(0, 3);
  switch (kind_) {
    case GroupKind::integers: return sample_in(rng, 0, hi.as<Integer>());
    case GroupKind::rationals: return sample_fraction_of(rng, hi.as<Rational>(), bound);
    case GroupKind::lex_zz:
    case GroupKind::lex_qz: {
      // Pick the major coordinate in [0, hi.major], then the minor one so that
      // the pair stays inside [0, hi].
      auto finish = [&](const auto& major, const auto& hi_pair) {
        const bool at_zero = major == 0;
        const bool at_top = major == hi_pair.major;
        Integer lo_minor = at_zero ? Integer(0) : Integer(-bound);
        Integer hi_minor = at_top ? hi_pair.minor : Integer(bound);
        if (at_zero && !at_top) hi_minor = bound;
        if (at_top && !at_zero) lo_minor = hi_pair.minor - bound;
        return sample_in(rng, lo_minor, hi_minor);
      };
      if (kind_ == GroupKind::lex_zz) {
        const auto& h = hi.as<LexZZ>();
        Integer major;
        switch (pick(rng)) {
          case 0: major = 0; break;
          case 1: major = h.major; break;
          default: major = uniform_integer(rng, 0, h.major);
        }
        Integer minor = finish(major, h);
        return LexZZ{std::move(major), std::move(minor)};
      }
      const auto& h = hi.as<LexQZ>();
      Rational major;
      switch (pick(rng)) {
        case 0: major = 0; break;
        case 1: major = h.major; break;
        default: major = sample_fraction_of(rng, h.major, bound);
      }
      Integer minor = finish(major, h);
      return LexQZ{std::move(major), std::move(minor)};
    }
  }
  return {};
}

GroupElement Group::parse(std::string_view text) const {
  switch (kind_) {
    case GroupKind::integers: return parse_integer(text);
    case GroupKind::rationals: return parse_rational(text);
    case GroupKind::lex_zz: {
      auto [a, b] = parse_pair(text);
      return LexZZ{parse_integer(a), parse_integer(b)};
    }
    case GroupKind::lex_qz: {
      auto [a, b] = parse_pair(text);
      return LexQZ{parse_rational(a), parse_integer(b)};
    }
  }
  return {};
}

}  // namespace toag
