#ifndef TOROIDAL_SINGULAR_HPP
#define TOROIDAL_SINGULAR_HPP

#include "algebra.hpp"
#include "linalg.hpp"
#include "roots.hpp"
#include "verma.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <thread>
#include <utility>
#include <vector>

namespace toroidal {

/// Chevalley raising elements of the horizontal affine subalgebra:
/// e_{alpha_1} = e(0,0) and e_{alpha_0} = f(1,0).
///
/// On delta2-level 0 these two suffice for T_+-invariance: a positive
/// generator of delta2-degree > 0 lands on a level above lam, where M(lam) is
/// zero, and the level-0 part of T_+ is generated by e(0,0) and f(1,0).
inline std::array<BasisElement, 2> raising_generators() { return {e(0, 0), f(1, 0)}; }

struct RaisingCheck {
  BasisElement generator;
  std::size_t vector_index = 0;
  bool vanishes = false;
};

struct SingularCertificate {
  RootVector eta;
  Weight weight;
  std::vector<ModuleVector> kernel_basis;
  std::vector<RaisingCheck> raising_checks;

  bool verified() const
  {
    return std::all_of(raising_checks.begin(), raising_checks.end(), [](const auto& c) { return c.vanishes; });
  }
};

/// Matrix of a list of linear maps M_{lam-eta} -> M, one block of rows per
/// map, on the PBW basis of M_{lam-eta}. Row labels are the target monomials.
inline Matrix action_matrix(VermaModule& verma, const std::vector<PBWMonomial>& basis,
                            const std::vector<BasisElement>& generators)
{
  std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      for (const auto& [m, c] : verma.act(generators[g], basis[j]).terms()) {
        auto [it, inserted] = rows.try_emplace({g, m}, rows.size());
        columns[j].emplace_back(it->second, c);
      }
    }
  }
  Matrix a(rows.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [r, c] : columns[j]) a(r, j) += c;
  return a;
}

inline ModuleVector combine(const std::vector<PBWMonomial>& basis, const std::vector<Rational>& coeffs)
{
  ModuleVector v;
  for (std::size_t i = 0; i < basis.size(); ++i) v.add(basis[i], coeffs[i]);
  return v;
}

/// Joint kernel of e(0,0) and f(1,0) on M(lam)_{lam-eta}: the singular vectors
/// of that weight (together with 0).
inline SingularCertificate find_singular(VermaModule& verma, const RootVector& eta)
{
  if (!in_q1_plus(eta)) throw domain_error("find_singular: eta = " + to_string(eta) + " is not in Q1+");
  const auto basis = verma.weight_space_basis(eta);
  const auto gens = raising_generators();
  SingularCertificate cert;
  cert.eta = eta;
  cert.weight = verma.highest_weight().weight() - embed(eta);
  for (const auto& k : kernel(action_matrix(verma, basis, {gens.begin(), gens.end()})))
    cert.kernel_basis.push_back(combine(basis, k));
  for (std::size_t i = 0; i < cert.kernel_basis.size(); ++i)
    for (const auto& g : gens) cert.raising_checks.push_back({g, i, verma.act(g, cert.kernel_basis[i]).is_zero()});
  return cert;
}

inline SingularCertificate find_singular(const HighestWeight& hw, const RootVector& eta,
                                         MonomialOrder order = MonomialOrder::level_first)
{
  VermaModule verma(hw, order);
  return find_singular(verma, eta);
}

/// All eta in Q1+ with 0 < a0 + a1 <= depth, ordered by (depth, a0).
inline std::vector<RootVector> q1_plus_up_to(std::int64_t max_depth, bool include_zero = false)
{
  std::vector<RootVector> out;
  for (std::int64_t d = include_zero ? 0 : 1; d <= max_depth; ++d)
    for (std::int64_t a0 = 0; a0 <= d; ++a0) out.push_back(from_simple(a0, d - a0));
  return out;
}

struct SingularWeight {
  RootVector eta;
  std::size_t kernel_dim = 0;
  bool verified = false;
  friend bool operator==(const SingularWeight&, const SingularWeight&) = default;
};

/// Runs find_singular on every eta of depth 1..max_depth and keeps those with
/// a nonzero kernel. With jobs > 1 the weights are split across threads, each
/// owning its own VermaModule; the result order does not depend on jobs.
inline std::vector<SingularWeight> scan_singular(const HighestWeight& hw, std::int64_t max_depth,
                                                 unsigned jobs = 1,
                                                 MonomialOrder order = MonomialOrder::level_first)
{
  const auto etas = q1_plus_up_to(max_depth);
  std::vector<SingularWeight> found(etas.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    VermaModule verma(hw, order);
    for (std::size_t i = start; i < etas.size(); i += stride) {
      auto cert = find_singular(verma, etas[i]);
      found[i] = {etas[i], cert.kernel_basis.size(), cert.verified()};
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(etas.size())));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }
  std::erase_if(found, [](const auto& s) { return s.kernel_dim == 0; });
  return found;
}

struct DotOrbitPoint {
  WeylWord word;
  RootVector eta; // lam - w.lam
};

/// lam - w.lam for the affine Weyl group elements whose shift has depth <= max_depth.
/// Requires dominant integral lam, for which the depth grows strictly with the
/// length of w.
inline std::vector<DotOrbitPoint> dot_orbit_within(const HighestWeight& hw, std::int64_t max_depth)
{
  if (!hw.dominant_integral()) throw domain_error("dot_orbit_within: highest weight must be dominant integral");
  std::vector<DotOrbitPoint> out;
  const Weight lam = hw.weight();
  for (std::size_t len = 0;; ++len) {
    bool any = false;
    for (auto& w : affine_weyl_elements(len)) {
      if (w.size() != len) continue;
      auto shift = to_root_vector(lam - dot_action(w, lam));
      if (!shift || !in_q1_plus(*shift)) throw domain_error("dot_orbit_within: shift outside Q1+");
      if (depth(*shift) <= max_depth) {
        out.push_back({w, *shift});
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

struct OrbitScanReport {
  std::vector<SingularWeight> found;
  std::vector<DotOrbitPoint> predicted; // excluding the identity
  bool found_equals_predicted = false;
  bool found_contains_predicted = false;
};

inline OrbitScanReport scan_vs_dot_orbit(const HighestWeight& hw, std::int64_t max_depth, unsigned jobs = 1)
{
  OrbitScanReport rep;
  rep.found = scan_singular(hw, max_depth, jobs);
  for (auto& p : dot_orbit_within(hw, max_depth))
    if (!p.word.empty()) rep.predicted.push_back(std::move(p));
  std::set<RootVector> found_set, predicted_set;
  for (const auto& s : rep.found) found_set.insert(s.eta);
  for (const auto& p : rep.predicted) predicted_set.insert(p.eta);
  rep.found_equals_predicted = found_set == predicted_set;
  rep.found_contains_predicted =
      std::includes(found_set.begin(), found_set.end(), predicted_set.begin(), predicted_set.end());
  return rep;
}

} // namespace toroidal

#endif
