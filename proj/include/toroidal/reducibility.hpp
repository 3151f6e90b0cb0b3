#ifndef TOROIDAL_REDUCIBILITY_HPP
#define TOROIDAL_REDUCIBILITY_HPP

#include "rational.hpp"
#include "roots.hpp"
#include "verma.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace toroidal {

/// A positive real root beta of the horizontal affine subalgebra and a positive
/// integer l with (lam + rho)(beta^vee) = l. M(lam - l beta) embeds in M(lam).
struct ResonancePair {
  RootVector beta;
  std::int64_t l = 0;
  Weight quotient_weight;

  RootVector shift() const { return beta * l; }
};

struct ReducibilityReport {
  bool verdict = false;
  std::vector<ResonancePair> witnesses;
  std::int64_t scan_bound = 0;
};

/// Resonances with beta = alpha + k delta1 (0 <= k <= kmax) or
/// beta = -alpha + k delta1 (1 <= k <= kmax). With s = k1 + 2 these read
///   l = (n1 + 1) + k s   and   l = -(n1 + 1) + k s.
///
/// Imaginary roots k delta1 resonate only at the critical level k1 = -2, which
/// k1 >= 0 excludes, so they never appear.
inline std::vector<ResonancePair> kk_pairs(const HighestWeight& hw, std::int64_t kmax)
{
  if (kmax < 0) throw domain_error("kk_pairs: kmax must be >= 0");
  const Weight shifted = hw.weight() + rho;
  std::vector<ResonancePair> out;
  auto consider = [&](const RootVector& beta) {
    const Rational l = shifted(coroot(beta));
    if (is_integer(l) && l > 0 && l.get_num().fits_slong_p()) {
      const std::int64_t li = l.get_num().get_si();
      out.push_back({beta, li, hw.weight() - embed(beta * li)});
    }
  };
  for (std::int64_t k = 0; k <= kmax; ++k) {
    consider(alpha + delta1 * k);
    if (k >= 1) consider(-alpha + delta1 * k);
  }
  return out;
}

/// Bound on k beyond which no new resonance family member can first appear.
///
/// Writing a = n1 + 1, s = k1 + 2 > 0 and D = lcm(den a, den s), the value
/// l = +-a + k s is an integer iff a congruence in k modulo D holds, so the
/// integral k form a union of residue classes mod D. Positivity holds for all
/// k > |a| / s. Hence if any resonance exists, one exists with
/// k <= floor(|a| / s) + 1 + D.
inline std::int64_t resonance_scan_bound(const HighestWeight& hw)
{
  const Rational a = hw.n1 + 1;
  const Rational s = hw.k1 + 2;
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), s.get_den_mpz_t());
  const Rational ratio = abs(a) / s;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  mpz_class bound = fl + 1 + den;
  if (!bound.fits_slong_p()) throw domain_error("resonance_scan_bound: denominators too large");
  return bound.get_si();
}

inline ReducibilityReport is_reducible(const HighestWeight& hw)
{
  ReducibilityReport rep;
  rep.scan_bound = resonance_scan_bound(hw);
  rep.witnesses = kk_pairs(hw, rep.scan_bound);
  std::stable_sort(rep.witnesses.begin(), rep.witnesses.end(),
                   [](const auto& x, const auto& y) { return depth(x.shift()) < depth(y.shift()); });
  rep.verdict = !rep.witnesses.empty();
  return rep;
}

/// Highest weights lam - l beta of the Verma submodules that generate J(lam).
inline std::vector<Weight> maximal_submodule_generators(const HighestWeight& hw)
{
  std::vector<Weight> out;
  for (const auto& p : is_reducible(hw).witnesses) out.push_back(p.quotient_weight);
  return out;
}

} // namespace toroidal

#endif
