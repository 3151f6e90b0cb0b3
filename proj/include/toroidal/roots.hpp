#ifndef TOROIDAL_ROOTS_HPP
#define TOROIDAL_ROOTS_HPP

#include "rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toroidal {

/// Element a*alpha + n1*delta1 + n2*delta2 of the root lattice.
///
/// Roots have a in {-1, 0, 1}; lattice points with |a| >= 2 (such as 2*alpha)
/// appear as weight differences and are classified as not_root.
struct RootVector {
  std::int64_t a = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;

  friend constexpr auto operator<=>(const RootVector&, const RootVector&) = default;

  constexpr RootVector operator+(const RootVector& o) const { return {a + o.a, n1 + o.n1, n2 + o.n2}; }
  constexpr RootVector operator-(const RootVector& o) const { return {a - o.a, n1 - o.n1, n2 - o.n2}; }
  constexpr RootVector operator-() const { return {-a, -n1, -n2}; }
  constexpr RootVector operator*(std::int64_t k) const { return {k * a, k * n1, k * n2}; }
  constexpr bool is_zero() const { return a == 0 && n1 == 0 && n2 == 0; }
};

inline constexpr RootVector alpha{1, 0, 0};
inline constexpr RootVector delta1{0, 1, 0};
inline constexpr RootVector delta2{0, 0, 1};
/// The "simple" roots alpha_1 = alpha, alpha_0 = delta1 - alpha, alpha_{-1} = delta2 - alpha.
inline constexpr RootVector alpha_1{1, 0, 0};
inline constexpr RootVector alpha_0{-1, 1, 0};
inline constexpr RootVector alpha_m1{-1, 0, 1};

inline std::string to_string(const RootVector& r)
{
  return "(" + std::to_string(r.a) + "," + std::to_string(r.n1) + "," + std::to_string(r.n2) + ")";
}

enum class RootKind { real, imaginary, not_root };

inline RootKind classify(const RootVector& r)
{
  if (r.a == 1 || r.a == -1) return RootKind::real;
  if (r.a == 0 && !(r.n1 == 0 && r.n2 == 0)) return RootKind::imaginary;
  return RootKind::not_root;
}

inline const char* to_string(RootKind k)
{
  switch (k) {
  case RootKind::real: return "real";
  case RootKind::imaginary: return "imaginary";
  default: return "not_root";
  }
}

inline bool is_root(const RootVector& r) { return classify(r) != RootKind::not_root; }

/// Membership in Delta_+, one clause per set in the union that defines it.
inline bool is_positive(const RootVector& r)
{
  if (!is_root(r)) throw domain_error("is_positive: " + to_string(r) + " is not a root");
  const auto [a, n1, n2] = r;
  return (a == 1 && n1 >= 0 && n2 >= 0)      // alpha + Z+ d1 + Z+ d2
         || (a == -1 && n1 >= 1 && n2 >= 0)  // -alpha + N d1 + Z+ d2
         || (a == 0 && n1 >= 1 && n2 >= 0)   // N d1 + Z+ d2
         || (a == -1 && n1 <= 0 && n2 >= 1)  // -alpha - Z+ d1 + N d2
         || (a == 1 && n1 <= -1 && n2 >= 1)  // alpha - N d1 + N d2
         || (a == 0 && n1 <= -1 && n2 >= 1)  // -N d1 + N d2
         || (a == 0 && n1 == 0 && n2 >= 1);  // N d2
}

inline bool is_negative(const RootVector& r) { return is_positive(-r); }

/// Positive root of the horizontal affine subalgebra (delta2-degree zero).
inline bool is_affine_positive(const RootVector& r)
{
  return r.n2 == 0 && is_root(r) && is_positive(r);
}

/// Coordinates (a0, a1) with r = a0*alpha_0 + a1*alpha_1, if r has zero delta2-degree.
inline std::optional<std::pair<std::int64_t, std::int64_t>> simple_coords(const RootVector& r)
{
  if (r.n2 != 0) return std::nullopt;
  return std::pair{r.n1, r.a + r.n1};
}

inline constexpr RootVector from_simple(std::int64_t a0, std::int64_t a1)
{
  return alpha_0 * a0 + alpha_1 * a1;
}

/// True iff r is a nonnegative integer combination of alpha_0 and alpha_1.
inline bool in_q1_plus(const RootVector& r)
{
  auto c = simple_coords(r);
  return c && c->first >= 0 && c->second >= 0;
}

/// a0 + a1 for r in Q1+.
inline std::int64_t depth(const RootVector& r)
{
  auto c = simple_coords(r);
  if (!c || c->first < 0 || c->second < 0) throw domain_error("depth: " + to_string(r) + " is not in Q1+");
  return c->first + c->second;
}

/// Element of h = span(alpha^vee, c1, c2, d1, d2).
struct CartanElement {
  Rational h, c1, c2, d1, d2;
  friend bool operator==(const CartanElement&, const CartanElement&) = default;
};

/// A functional on h, stored as its values on (alpha^vee, c1, c2, d1, d2).
struct Weight {
  Rational h, c1, c2, d1, d2;

  friend bool operator==(const Weight&, const Weight&) = default;

  Weight operator+(const Weight& o) const { return {h + o.h, c1 + o.c1, c2 + o.c2, d1 + o.d1, d2 + o.d2}; }
  Weight operator-(const Weight& o) const { return {h - o.h, c1 - o.c1, c2 - o.c2, d1 - o.d1, d2 - o.d2}; }
  Weight operator*(const Rational& s) const { return {h * s, c1 * s, c2 * s, d1 * s, d2 * s}; }

  Rational operator()(const CartanElement& x) const
  {
    return h * x.h + c1 * x.c1 + c2 * x.c2 + d1 * x.d1 + d2 * x.d2;
  }
};

/// alpha -> value 2 on alpha^vee; delta_i -> value 1 on d_i.
inline Weight embed(const RootVector& r)
{
  return {Rational(2 * r.a), 0, 0, Rational(r.n1), Rational(r.n2)};
}

inline const Weight omega1{0, 1, 0, 0, 0};
inline const Weight omega2{0, 0, 1, 0, 0};

/// Inverse of embed, when the weight lies in the root lattice.
inline std::optional<RootVector> to_root_vector(const Weight& w)
{
  if (w.c1 != 0 || w.c2 != 0) return std::nullopt;
  if (!is_integer(w.h) || !is_integer(w.d1) || !is_integer(w.d2)) return std::nullopt;
  mpz_class h = w.h.get_num();
  if (h % 2 != 0) return std::nullopt;
  return RootVector{mpz_class(h / 2).get_si(), w.d1.get_num().get_si(), w.d2.get_num().get_si()};
}

inline CartanElement coroot(const RootVector& r)
{
  if (classify(r) != RootKind::real)
    throw domain_error("coroot: " + to_string(r) + " is not a real root");
  return {Rational(r.a), Rational(r.n1), Rational(r.n2), 0, 0};
}

/// r_beta(lam) = lam - lam(beta^vee) beta.
inline Weight reflect(const RootVector& beta, const Weight& lam)
{
  return lam - embed(beta) * lam(coroot(beta));
}

/// Invariant form on h^*: (alpha|alpha) = 2, (delta_i|omega_j) = delta_ij, all
/// other pairings of {alpha, delta_i, omega_i} vanish. A weight expands as
/// (h/2) alpha + d1 delta1 + d2 delta2 + c1 omega1 + c2 omega2.
inline Rational form_hstar(const Weight& x, const Weight& y)
{
  return x.h * y.h / 2 + x.d1 * y.c1 + x.c1 * y.d1 + x.d2 * y.c2 + x.c2 * y.d2;
}

/// rho(alpha^vee) = 1, rho(c1) = rho(c2) = 2, rho(d_i) = 0. The d_i values never
/// matter: they cancel in w.lam and are invisible to real coroots.
inline const Weight rho{1, 2, 2, 0, 0};

enum class SimpleReflection { r0, r1 };

inline RootVector simple_root(SimpleReflection s)
{
  return s == SimpleReflection::r0 ? alpha_0 : alpha_1;
}

/// A word s_1 s_2 ... s_k denotes the group element s_1 s_2 ... s_k; its dot
/// action applies s_k first, so dot_action(u ++ v, lam) == dot_action(u, dot_action(v, lam)).
using WeylWord = std::vector<SimpleReflection>;

inline Weight dot_action(const WeylWord& word, const Weight& lam)
{
  Weight shifted = lam + rho;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    shifted = reflect(simple_root(*it), shifted);
  return shifted - rho;
}

inline std::string to_string(const WeylWord& w)
{
  if (w.empty()) return "e";
  std::string out;
  for (auto s : w) out += s == SimpleReflection::r0 ? "r0" : "r1";
  return out;
}

/// Reduced words of the infinite dihedral group W(A1^(1)) up to the given
/// length: the identity, then the two alternating words of each length.
inline std::vector<WeylWord> affine_weyl_elements(std::size_t max_length)
{
  std::vector<WeylWord> out{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (auto first : {SimpleReflection::r0, SimpleReflection::r1}) {
      WeylWord w;
      auto s = first;
      for (std::size_t i = 0; i < len; ++i) {
        w.push_back(s);
        s = s == SimpleReflection::r0 ? SimpleReflection::r1 : SimpleReflection::r0;
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

} // namespace toroidal

#endif
