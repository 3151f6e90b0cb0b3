#ifndef TOROIDAL_VERMA_HPP
#define TOROIDAL_VERMA_HPP

#include "algebra.hpp"
#include "rational.hpp"
#include "roots.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace toroidal {

/// lam with lam(alpha^vee) = n1, lam(c1) = k1 >= 0, lam(c2) = 0, lam(d_i) = d1v, d2v.
struct HighestWeight {
  Rational n1 = 0;
  Rational k1 = 0;
  Rational d1v = 0;
  Rational d2v = 0;

  HighestWeight() = default;
  HighestWeight(Rational n1_, Rational k1_, Rational d1_ = 0, Rational d2_ = 0)
      : n1(std::move(n1_)), k1(std::move(k1_)), d1v(std::move(d1_)), d2v(std::move(d2_))
  {
    if (k1 < 0) throw domain_error("highest weight requires k1 >= 0, got " + to_string(k1));
  }

  /// Rejects c2 != 0: only the trivial action of c2 is supported.
  static HighestWeight from_weight(const Weight& w)
  {
    if (w.c2 != 0) throw domain_error("c2 must act trivially, got c2 = " + to_string(w.c2));
    return HighestWeight(w.h, w.c1, w.d1, w.d2);
  }

  Weight weight() const { return {n1, k1, 0, d1v, d2v}; }

  /// lam(alpha_0^vee) = lam(c1 - alpha^vee).
  Rational n0() const { return k1 - n1; }

  bool dominant_integral() const
  {
    return is_integer(n1) && is_integer(n0()) && n1 >= 0 && n0() >= 0;
  }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Total orders on negative generators used to fix PBW monomials.
enum class MonomialOrder {
  /// Key (-n, -m, F < H < E): groups factors by delta2-level, then delta1-level.
  level_first,
  /// Key (F < H < E, -n, -m); an alternative used to cross-check order independence.
  kind_first,
};

namespace detail {

inline int kind_rank(Kind k)
{
  switch (k) {
  case Kind::F: return 0;
  case Kind::H: return 1;
  case Kind::E: return 2;
  default: return 3;
  }
}

inline std::tuple<std::int64_t, std::int64_t, std::int64_t> order_key(MonomialOrder order, const BasisElement& b)
{
  if (order == MonomialOrder::level_first) return {-b.n, -b.m, kind_rank(b.kind)};
  return {kind_rank(b.kind), -b.n, -b.m};
}

} // namespace detail

/// Ordered product y_1^{p_1} ... y_k^{p_k} of negative generators applied to
/// v_lam. Factors are listed left to right in strictly increasing order key;
/// the empty product is v_lam itself.
struct PBWMonomial {
  std::vector<std::pair<BasisElement, int>> factors;

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;

  std::size_t length() const
  {
    std::size_t n = 0;
    for (const auto& [b, p] : factors) n += static_cast<std::size_t>(p);
    return n;
  }

  /// Sum of factor roots; v_lam sits at lam + weight().
  RootVector weight() const
  {
    RootVector w;
    for (const auto& [b, p] : factors) w = w + weight_of(b) * p;
    return w;
  }
};

inline std::string to_string(const PBWMonomial& m)
{
  std::string out;
  for (const auto& [b, p] : m.factors) {
    out += to_string(b);
    if (p != 1) out += "^" + std::to_string(p);
    out += "*";
  }
  return out + "v";
}

struct PBWMonomialHash {
  std::size_t operator()(const PBWMonomial& m) const noexcept
  {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::int64_t x) { h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (const auto& [b, p] : m.factors) {
      mix(static_cast<std::int64_t>(b.kind));
      mix(b.m);
      mix(b.n);
      mix(p);
    }
    return h;
  }
};

/// Finite rational combination of PBW monomials; zero coefficients are never stored.
class ModuleVector {
public:
  using Terms = std::map<PBWMonomial, Rational>;

  ModuleVector() = default;
  ModuleVector(const PBWMonomial& m, Rational c = 1) { add(m, c); }

  static ModuleVector highest() { return ModuleVector(PBWMonomial{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const PBWMonomial& m) const
  {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const PBWMonomial& m, const Rational& c)
  {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const ModuleVector& o, const Rational& s)
  {
    if (s == 0) return;
    for (const auto& [m, c] : o.terms_) add(m, c * s);
  }

  ModuleVector& operator+=(const ModuleVector& o)
  {
    add_scaled(o, 1);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& o)
  {
    add_scaled(o, -1);
    return *this;
  }
  ModuleVector& operator*=(const Rational& s)
  {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Rational& s, ModuleVector a) { return a *= s; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
  Terms terms_;
};

inline std::string to_string(const ModuleVector& v)
{
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    out += to_string(m);
  }
  return out;
}

/// A generator is "negative" when its root lies in Delta_-.
inline bool is_negative_generator(const BasisElement& b)
{
  return !is_cartan(b) && is_negative(weight_of(b));
}

/// The Verma module M(lam) = U(T) (x)_{U(T_+ + h)} C 1_lam, realized on the
/// PBW basis of U(T_-) v_lam.
///
/// A basis element x acts on y_1 y_2 ... y_k v (y_1 the first factor) by
///
///   x y_1 w = y_1 (x w) + [x, y_1] w,
///
/// unless x is Cartan (diagonal), x is positive and the monomial is empty
/// (zero), or x is negative and may be placed in front of y_1 (prepend or
/// raise the exponent of y_1). Termination: the pair (number of factors out
/// of order, total length) drops lexicographically with every rewrite, since
/// the bracket term is one factor shorter and the reordered term has one
/// inversion fewer.
///
/// Results for (generator, monomial) are memoized. The cache makes a
/// VermaModule unsuitable for sharing across threads; give each thread its
/// own instance.
class VermaModule {
public:
  explicit VermaModule(HighestWeight hw, MonomialOrder order = MonomialOrder::level_first)
      : hw_(std::move(hw)), order_(order)
  {
  }

  const HighestWeight& highest_weight() const { return hw_; }
  MonomialOrder order() const { return order_; }

  /// True iff a precedes b in the PBW factor order.
  bool precedes(const BasisElement& a, const BasisElement& b) const
  {
    return detail::order_key(order_, a) < detail::order_key(order_, b);
  }

  bool is_canonical(const PBWMonomial& m) const
  {
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
      if (m.factors[i].second < 1 || !is_negative_generator(m.factors[i].first)) return false;
      if (i > 0 && !precedes(m.factors[i - 1].first, m.factors[i].first)) return false;
    }
    return true;
  }

  /// Sorts and merges an arbitrary multiset of commuting-order factors into
  /// canonical form. Only meaningful when the factors pairwise commute or
  /// when the caller wants the PBW label of a multiset (basis enumeration).
  PBWMonomial canonical_label(std::vector<std::pair<BasisElement, int>> factors) const
  {
    std::sort(factors.begin(), factors.end(),
              [this](const auto& a, const auto& b) { return precedes(a.first, b.first); });
    PBWMonomial out;
    for (auto& [b, p] : factors) {
      if (p == 0) continue;
      if (!out.factors.empty() && out.factors.back().first == b) out.factors.back().second += p;
      else out.factors.emplace_back(b, p);
    }
    return out;
  }

  /// Eigenvalue of a Cartan element on the monomial's weight space.
  Rational cartan_eigenvalue(const BasisElement& x, const PBWMonomial& m) const
  {
    assert(is_cartan(x));
    const RootVector w = m.weight();
    switch (x.kind) {
    case Kind::H: return hw_.n1 + 2 * w.a;
    case Kind::C1: return hw_.k1;
    case Kind::C2: return 0;
    case Kind::D1: return hw_.d1v + w.n1;
    case Kind::D2: return hw_.d2v + w.n2;
    default: return 0;
    }
  }

  const ModuleVector& act(const BasisElement& x, const PBWMonomial& m)
  {
    auto& slot = cache_[x];
    if (auto it = slot.find(m); it != slot.end()) return it->second;
    ModuleVector result = compute(x, m);
    return slot.emplace(m, std::move(result)).first->second;
  }

  ModuleVector act(const BasisElement& x, const ModuleVector& v)
  {
    ModuleVector out;
    for (const auto& [m, c] : v.terms()) out.add_scaled(act(x, m), c);
    return out;
  }

  ModuleVector act(const AlgebraElement& x, const ModuleVector& v)
  {
    ModuleVector out;
    for (const auto& [b, c] : x.terms()) out.add_scaled(act(b, v), c);
    return out;
  }

  /// Applies g_1 g_2 ... g_k (rightmost first) to v.
  ModuleVector apply_word(const std::vector<BasisElement>& word, ModuleVector v)
  {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
    return v;
  }

  /// The monomial's factors applied one by one to v_lam.
  ModuleVector realize(const PBWMonomial& m)
  {
    return apply_word(expand(m), ModuleVector::highest());
  }

  static std::vector<BasisElement> expand(const PBWMonomial& m)
  {
    std::vector<BasisElement> word;
    for (const auto& [b, p] : m.factors)
      for (int i = 0; i < p; ++i) word.push_back(b);
    return word;
  }

  /// PBW basis of M(lam)_{lam - eta} for eta in Q1+.
  ///
  /// Every root of Delta_- has delta2-degree <= 0, so a product of factors
  /// with total delta2-degree 0 uses only degree-0 factors: the basis is the
  /// set of multisets of negative roots of the horizontal affine subalgebra
  /// summing to -eta, each root space being one-dimensional.
  std::vector<PBWMonomial> weight_space_basis(const RootVector& eta) const
  {
    if (!in_q1_plus(eta)) throw domain_error("weight_space_basis: eta = " + to_string(eta) + " is not in Q1+");
    auto [a0, a1] = *simple_coords(eta);
    auto candidates = level_zero_generators(a0, a1);
    std::vector<PBWMonomial> out;
    std::vector<std::pair<BasisElement, int>> chosen;
    enumerate(candidates, 0, a0, a1, chosen, out);
    return out;
  }

  /// Truncated basis of a weight space at delta2-level < 0. Such spaces are
  /// infinite-dimensional; only factors with |delta1-degree| <= window are
  /// admitted, so the result is a finite subset of a basis, never a basis.
  std::vector<PBWMonomial> truncated_weight_space_basis(const RootVector& gamma, std::int64_t window) const
  {
    if (gamma.n2 < 0) throw domain_error("truncated_weight_space_basis: gamma must have delta2-degree >= 0");
    std::vector<BasisElement> deep;
    for (std::int64_t n = -gamma.n2; n <= -1; ++n)
      for (std::int64_t m = -window; m <= window; ++m)
        for (Kind k : {Kind::F, Kind::H, Kind::E}) deep.push_back({k, m, n});
    std::sort(deep.begin(), deep.end(), [this](const auto& a, const auto& b) { return precedes(a, b); });

    std::vector<PBWMonomial> out;
    std::vector<std::pair<BasisElement, int>> chosen;
    // Choose the factors of negative level first; the remainder must then be
    // a level-zero weight handled by the Q1+ enumeration.
    std::function<void(std::size_t, RootVector)> rec = [&](std::size_t i, RootVector rest) {
      if (rest.n2 == 0) {
        if (!in_q1_plus(rest)) return;
        auto [a0, a1] = *simple_coords(rest);
        std::vector<PBWMonomial> tails;
        std::vector<std::pair<BasisElement, int>> tail_chosen;
        enumerate(level_zero_generators(a0, a1), 0, a0, a1, tail_chosen, tails);
        for (const auto& t : tails) {
          auto all = chosen;
          all.insert(all.end(), t.factors.begin(), t.factors.end());
          out.push_back(canonical_label(std::move(all)));
        }
        return;
      }
      if (i == deep.size()) return;
      const RootVector beta = -weight_of(deep[i]);
      for (int p = 0; p * beta.n2 <= rest.n2; ++p) {
        if (p > 0) chosen.emplace_back(deep[i], p);
        rec(i + 1, rest - beta * p);
        if (p > 0) chosen.pop_back();
      }
    };
    rec(0, gamma);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t cache_size() const
  {
    std::size_t n = 0;
    for (const auto& [x, slot] : cache_) n += slot.size();
    return n;
  }

private:
  ModuleVector compute(const BasisElement& x, const PBWMonomial& m)
  {
    if (is_cartan(x)) return cartan_eigenvalue(x, m) * ModuleVector(m);

    const bool negative = is_negative(weight_of(x));
    if (m.factors.empty()) return negative ? ModuleVector(PBWMonomial{{{x, 1}}}) : ModuleVector{};

    const BasisElement& first = m.factors.front().first;
    if (negative && (x == first || precedes(x, first))) {
      PBWMonomial out = m;
      if (x == first) ++out.factors.front().second;
      else out.factors.insert(out.factors.begin(), {x, 1});
      assert(is_canonical(out));
      return ModuleVector(out);
    }

    // x y w = y (x w) + [x, y] w
    PBWMonomial rest = m;
    if (--rest.factors.front().second == 0) rest.factors.erase(rest.factors.begin());

    ModuleVector result;
    const ModuleVector xw = act(x, rest);
    for (const auto& [mono, c] : xw.terms()) result.add_scaled(act(first, mono), c);
    const AlgebraElement xy = bracket(x, first);
    for (const auto& [b, c] : xy.terms()) result.add_scaled(act(b, rest), c);
    return result;
  }

  // Negative generators of the horizontal affine subalgebra whose roots fit in
  // the box [0, a0] x [0, a1] of simple-root coordinates, in factor order.
  std::vector<std::pair<BasisElement, std::pair<std::int64_t, std::int64_t>>>
  level_zero_generators(std::int64_t a0, std::int64_t a1) const
  {
    std::vector<std::pair<BasisElement, std::pair<std::int64_t, std::int64_t>>> out;
    for (std::int64_t k = 0; k <= a0; ++k) {
      if (k + 1 <= a1) out.push_back({f(-k, 0), {k, k + 1}});             // -(alpha + k delta1)
      if (k >= 1 && k - 1 <= a1) out.push_back({e(-k, 0), {k, k - 1}});  // -(-alpha + k delta1)
      if (k >= 1 && k <= a1) out.push_back({h(-k, 0), {k, k}});           // -(k delta1)
    }
    std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) { return precedes(a.first, b.first); });
    return out;
  }

  static void enumerate(const std::vector<std::pair<BasisElement, std::pair<std::int64_t, std::int64_t>>>& cands,
                        std::size_t i, std::int64_t r0, std::int64_t r1,
                        std::vector<std::pair<BasisElement, int>>& chosen, std::vector<PBWMonomial>& out)
  {
    if (r0 == 0 && r1 == 0) {
      out.push_back(PBWMonomial{chosen});
      return;
    }
    if (i == cands.size()) return;
    const auto& [b, size] = cands[i];
    const auto [b0, b1] = size;
    enumerate(cands, i + 1, r0, r1, chosen, out);
    for (int p = 1; b0 * p <= r0 && b1 * p <= r1; ++p) {
      chosen.emplace_back(b, p);
      enumerate(cands, i + 1, r0 - b0 * p, r1 - b1 * p, chosen, out);
      chosen.pop_back();
    }
  }

  struct BasisHash {
    std::size_t operator()(const BasisElement& b) const noexcept
    {
      return std::hash<std::int64_t>{}(b.m * 1000003 + b.n * 1009 + static_cast<std::int64_t>(b.kind));
    }
  };

  HighestWeight hw_;
  MonomialOrder order_;
  std::unordered_map<BasisElement, std::unordered_map<PBWMonomial, ModuleVector, PBWMonomialHash>, BasisHash> cache_;
};

} // namespace toroidal

#endif
