#ifndef TOROIDAL_ALGEBRA_HPP
#define TOROIDAL_ALGEBRA_HPP

#include "rational.hpp"
#include "roots.hpp"

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace toroidal {

/// Generators of sl2 (x) C[t1^+-1, t2^+-1] + C c1 + C c2 + C d1 + C d2.
/// E, F, H stand for e, f, alpha^vee tensored with t1^m t2^n.
enum class Kind : std::uint8_t { F, H, E, C1, C2, D1, D2 };

struct BasisElement {
  Kind kind = Kind::H;
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend constexpr auto operator<=>(const BasisElement&, const BasisElement&) = default;

  constexpr bool is_loop() const { return kind == Kind::E || kind == Kind::F || kind == Kind::H; }
};

inline constexpr BasisElement e(std::int64_t m, std::int64_t n) { return {Kind::E, m, n}; }
inline constexpr BasisElement f(std::int64_t m, std::int64_t n) { return {Kind::F, m, n}; }
inline constexpr BasisElement h(std::int64_t m, std::int64_t n) { return {Kind::H, m, n}; }
inline constexpr BasisElement c1{Kind::C1, 0, 0};
inline constexpr BasisElement c2{Kind::C2, 0, 0};
inline constexpr BasisElement d1{Kind::D1, 0, 0};
inline constexpr BasisElement d2{Kind::D2, 0, 0};

inline std::string to_string(const BasisElement& b)
{
  auto loop = [&](char c) {
    return std::string(1, c) + "(" + std::to_string(b.m) + "," + std::to_string(b.n) + ")";
  };
  switch (b.kind) {
  case Kind::E: return loop('e');
  case Kind::F: return loop('f');
  case Kind::H: return loop('h');
  case Kind::C1: return "c1";
  case Kind::C2: return "c2";
  case Kind::D1: return "d1";
  default: return "d2";
  }
}

/// Root of the generator; the zero vector for h(0,0) and for c_i, d_i.
inline RootVector weight_of(const BasisElement& b)
{
  switch (b.kind) {
  case Kind::E: return {1, b.m, b.n};
  case Kind::F: return {-1, b.m, b.n};
  case Kind::H: return {0, b.m, b.n};
  default: return {};
  }
}

/// Elements of the Cartan subalgebra h act diagonally on weight vectors.
inline bool is_cartan(const BasisElement& b)
{
  return !b.is_loop() || (b.kind == Kind::H && b.m == 0 && b.n == 0);
}

/// Finite rational combination of basis elements; zero coefficients are never stored.
class AlgebraElement {
public:
  using Terms = std::map<BasisElement, Rational>;

  AlgebraElement() = default;
  AlgebraElement(const BasisElement& b, Rational coeff = 1) { add(b, coeff); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const BasisElement& b) const
  {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const BasisElement& b, const Rational& coeff)
  {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o)
  {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o)
  {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  AlgebraElement& operator*=(const Rational& s)
  {
    if (s == 0) terms_.clear();
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
  Terms terms_;
};

inline std::string to_string(const AlgebraElement& x)
{
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    out += to_string(b);
  }
  return out;
}

namespace detail {

// [x, y] in sl2 for x, y in {E, F, H}, returned as (kind, coefficient).
inline std::pair<Kind, int> sl2_bracket(Kind x, Kind y)
{
  if (x == y) return {Kind::H, 0};
  if (x == Kind::E && y == Kind::F) return {Kind::H, 1};
  if (x == Kind::F && y == Kind::E) return {Kind::H, -1};
  if (x == Kind::H && y == Kind::E) return {Kind::E, 2};
  if (x == Kind::E && y == Kind::H) return {Kind::E, -2};
  if (x == Kind::H && y == Kind::F) return {Kind::F, -2};
  return {Kind::F, 2}; // [f, h]
}

// (e|f) = (f|e) = 1, (h|h) = 2.
inline int sl2_form(Kind x, Kind y)
{
  if ((x == Kind::E && y == Kind::F) || (x == Kind::F && y == Kind::E)) return 1;
  if (x == Kind::H && y == Kind::H) return 2;
  return 0;
}

inline std::int64_t derivation_degree(Kind d, const BasisElement& b)
{
  return d == Kind::D1 ? b.m : b.n;
}

} // namespace detail

/// Bracket on basis elements:
///   [x(r), y(s)] = [x,y](r+s) + (x|y) delta_{r+s,0} (r1 c1 + r2 c2),
///   c1, c2 central, [d_i, x(r)] = r_i x(r), [d_i, d_j] = 0.
inline AlgebraElement bracket(const BasisElement& x, const BasisElement& y)
{
  AlgebraElement out;
  const bool x_central = x.kind == Kind::C1 || x.kind == Kind::C2;
  const bool y_central = y.kind == Kind::C1 || y.kind == Kind::C2;
  if (x_central || y_central) return out;
  if (!x.is_loop() && !y.is_loop()) return out; // [d_i, d_j]
  if (!x.is_loop()) {
    out.add(y, Rational(detail::derivation_degree(x.kind, y)));
    return out;
  }
  if (!y.is_loop()) {
    out.add(x, Rational(-detail::derivation_degree(y.kind, x)));
    return out;
  }
  auto [kind, c] = detail::sl2_bracket(x.kind, y.kind);
  if (c != 0) out.add({kind, x.m + y.m, x.n + y.n}, Rational(c));
  if (x.m + y.m == 0 && x.n + y.n == 0) {
    if (int form = detail::sl2_form(x.kind, y.kind); form != 0) {
      out.add(c1, Rational(form * x.m));
      out.add(c2, Rational(form * x.n));
    }
  }
  return out;
}

inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b)
{
  AlgebraElement out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      auto xy = bracket(x, y);
      xy *= cx * cy;
      out += xy;
    }
  return out;
}

namespace detail {

class ElementParser {
public:
  explicit ElementParser(std::string_view s) : s_(s) {}

  AlgebraElement parse()
  {
    AlgebraElement out;
    skip();
    if (eof()) fail("empty element");
    bool first = true;
    while (!eof()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [b, c] = term();
      out.add(b, sign * c);
      first = false;
      skip();
    }
    return out;
  }

private:
  std::pair<BasisElement, Rational> term()
  {
    Rational coeff = 1;
    std::optional<BasisElement> basis;
    for (;;) {
      skip();
      if (eof()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= scalar();
      } else {
        if (basis) fail("product of two generators is not a Lie algebra element");
        basis = generator();
      }
      skip();
      if (!eof() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    if (!basis) fail("term without a generator");
    return {*basis, coeff};
  }

  Rational scalar()
  {
    std::size_t start = pos_;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) get();
    return parse_rational(s_.substr(start, pos_ - start));
  }

  BasisElement generator()
  {
    char c = get();
    if (c == 'c' || c == 'd') {
      char i = eof() ? '\0' : get();
      if (i != '1' && i != '2') fail(std::string("expected 1 or 2 after '") + c + "'");
      if (c == 'c') return i == '1' ? c1 : c2;
      return i == '1' ? d1 : d2;
    }
    Kind kind;
    if (c == 'e') kind = Kind::E;
    else if (c == 'f') kind = Kind::F;
    else if (c == 'h') kind = Kind::H;
    else fail(std::string("unknown generator '") + c + "'");
    expect('(');
    auto m = integer();
    expect(',');
    auto n = integer();
    expect(')');
    return {kind, m, n};
  }

  std::int64_t integer()
  {
    skip();
    std::size_t start = pos_;
    if (!eof() && (peek() == '-' || peek() == '+')) get();
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) get();
    auto tok = std::string(s_.substr(start, pos_ - start));
    if (tok.empty() || tok == "-" || tok == "+") fail("expected integer");
    skip();
    try {
      return std::stoll(tok);
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  void expect(char c)
  {
    skip();
    if (eof() || get() != c) fail(std::string("expected '") + c + "'");
  }
  void skip()
  {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const
  {
    throw domain_error("cannot parse element '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                       ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses text such as "2*e(1,0) - 1/2*h(0,-1) + c1".
inline AlgebraElement parse_element(std::string_view text) { return detail::ElementParser(text).parse(); }

} // namespace toroidal

#endif
