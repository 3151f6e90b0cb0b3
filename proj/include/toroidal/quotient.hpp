#ifndef TOROIDAL_QUOTIENT_HPP
#define TOROIDAL_QUOTIENT_HPP

#include "algebra.hpp"
#include "linalg.hpp"
#include "partition.hpp"
#include "roots.hpp"
#include "singular.hpp"
#include "verma.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace toroidal {

/// Generators y_1^{n1+1} v = f(0,0)^{n1+1} v and y_0^{n0+1} v = e(-1,0)^{n0+1} v
/// of the submodule defining W(lam), with their depths eta = (n_i+1) alpha_i.
struct QuotientGenerator {
  PBWMonomial vector;
  RootVector eta;
};

inline std::vector<QuotientGenerator> quotient_generators(const HighestWeight& hw)
{
  if (!hw.dominant_integral()) throw domain_error("W(lam) requires n1, n0 nonnegative integers");
  const int p1 = static_cast<int>(hw.n1.get_num().get_si()) + 1;
  const int p0 = static_cast<int>(hw.n0().get_num().get_si()) + 1;
  return {{PBWMonomial{{{f(0, 0), p1}}}, alpha_1 * p1}, {PBWMonomial{{{e(-1, 0), p0}}}, alpha_0 * p0}};
}

/// Spanning set of the submodule sum_i U(T_-) y_i^{n_i+1} v inside M(lam)_{lam-eta}.
///
/// Only level-zero negative factors are needed: every root of Delta_- has
/// delta2-degree <= 0, so a factor of negative degree moves a vector below
/// level 0 and no further negative factor brings it back.
inline std::vector<ModuleVector> submodule_spanning_set(VermaModule& verma, const RootVector& eta)
{
  std::vector<ModuleVector> out;
  for (const auto& g : quotient_generators(verma.highest_weight())) {
    const RootVector rest = eta - g.eta;
    if (!in_q1_plus(rest)) continue;
    for (const auto& u : verma.weight_space_basis(rest))
      out.push_back(verma.apply_word(VermaModule::expand(u), ModuleVector(g.vector)));
  }
  return out;
}

/// Columns are the given vectors, rows their monomials (in a fixed order).
inline Matrix column_matrix(const std::vector<ModuleVector>& vectors, std::map<PBWMonomial, std::size_t>& rows)
{
  for (const auto& v : vectors)
    for (const auto& [m, c] : v.terms()) rows.try_emplace(m, rows.size());
  Matrix a(rows.size(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (const auto& [m, c] : vectors[j].terms()) a(rows.at(m), j) = c;
  return a;
}

inline std::size_t rank_of(const std::vector<ModuleVector>& vectors)
{
  std::map<PBWMonomial, std::size_t> rows;
  return rank(column_matrix(vectors, rows));
}

/// A linearly independent subset spanning the same space.
inline std::vector<ModuleVector> independent_subset(const std::vector<ModuleVector>& vectors)
{
  std::map<PBWMonomial, std::size_t> rows;
  Matrix a = column_matrix(vectors, rows);
  std::vector<ModuleVector> out;
  for (auto p : row_reduce(a)) out.push_back(vectors[p]);
  return out;
}

inline std::size_t submodule_dim_at(VermaModule& verma, const RootVector& eta)
{
  if (!in_q1_plus(eta)) throw domain_error("submodule_dim_at: eta = " + to_string(eta) + " is not in Q1+");
  return rank_of(submodule_spanning_set(verma, eta));
}

struct QuotientSpace {
  RootVector eta;
  std::size_t ambient_dim = 0;
  std::size_t submodule_dim = 0;
  std::size_t quotient_dim = 0;
};

inline QuotientSpace w_multiplicity(VermaModule& verma, const RootVector& eta)
{
  QuotientSpace q;
  q.eta = eta;
  q.ambient_dim = static_cast<std::size_t>(dim_oracle(eta));
  q.submodule_dim = submodule_dim_at(verma, eta);
  q.quotient_dim = q.ambient_dim - q.submodule_dim;
  return q;
}

/// dim L(lam)_{lam-eta} from the character formula
///   ch L(lam) = sum_w (-1)^{l(w)} ch M(w.lam),
/// each Verma character given by the Kostant partition function. Words are
/// added by length until every shift lam - w.lam of that length exceeds the
/// depth of eta; for dominant integral lam the shifts grow with the length.
inline std::int64_t lchar_oracle(const HighestWeight& hw, const RootVector& eta)
{
  if (!hw.dominant_integral()) throw domain_error("lchar_oracle: highest weight must be dominant integral");
  if (!in_q1_plus(eta)) throw domain_error("lchar_oracle: eta = " + to_string(eta) + " is not in Q1+");
  const auto [a0, a1] = *simple_coords(eta);
  const auto table = partition_table(a0, a1);
  std::int64_t total = 0;
  for (const auto& point : dot_orbit_within(hw, depth(eta))) {
    const RootVector rest = eta - point.eta;
    if (!in_q1_plus(rest)) continue;
    const auto [r0, r1] = *simple_coords(rest);
    const auto count = static_cast<std::int64_t>(table[r0][r1]);
    total += point.word.size() % 2 == 0 ? count : -count;
  }
  return total;
}

/// Dimension of the singular vectors of W(lam) at lam - eta: vectors v of
/// M(lam)_{lam-eta} whose raisings fall into the submodule, modulo the
/// submodule itself.
inline std::size_t quotient_singular_dim(VermaModule& verma, const RootVector& eta)
{
  const auto basis = verma.weight_space_basis(eta);
  const auto gens = raising_generators();

  // Rows: (generator index, target monomial). Columns: basis of M_{lam-eta},
  // then a basis of the submodule in each target weight space.
  std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  auto add_column = [&](std::size_t g, const ModuleVector& v, std::vector<std::pair<std::size_t, Rational>>& col) {
    for (const auto& [m, c] : v.terms()) {
      auto [it, inserted] = rows.try_emplace({g, m}, rows.size());
      col.emplace_back(it->second, c);
    }
  };
  for (const auto& b : basis) {
    std::vector<std::pair<std::size_t, Rational>> col;
    for (std::size_t g = 0; g < gens.size(); ++g) add_column(g, verma.act(gens[g], b), col);
    columns.push_back(std::move(col));
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const RootVector target = eta - weight_of(gens[g]);
    if (!in_q1_plus(target)) continue;
    for (const auto& s : independent_subset(submodule_spanning_set(verma, target))) {
      std::vector<std::pair<std::size_t, Rational>> col;
      add_column(g, s, col);
      columns.push_back(std::move(col));
    }
  }
  Matrix a(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [r, c] : columns[j]) a(r, j) += c;
  // The submodule columns are independent, so the kernel projects injectively
  // onto the first block: its dimension is that of the preimage.
  const std::size_t preimage = columns.size() - rank(a);
  return preimage - submodule_dim_at(verma, eta);
}

struct TranscriptLine {
  std::string claim;
  std::string computed;
  std::string expected;
  bool holds = false;
};

struct Transcript {
  std::vector<TranscriptLine> lines;
  std::string conclusion;
  bool verified() const
  {
    for (const auto& l : lines)
      if (!l.holds) return false;
    return !lines.empty();
  }
};

inline PBWMonomial power(const BasisElement& b, int p)
{
  if (p == 0) return {};
  return PBWMonomial{{{b, p}}};
}

/// Checks, through the module action, the identities showing e(0,-1) is not
/// locally nilpotent on W(lam) when k1 > 0:
///   f(0,1) e(0,-1)^N v = -N(N-1+n1) e(0,-1)^{N-1} v          (N = 1..max_n)
/// and, for n1 = 0, f(1,0) e(0,-1) v = -h(1,-1) v together with
///   h(-1,1) h(1,-1) v = (h|h)(-c1 + c2) v = -2 k1 v.
///
/// The identities are computed in M(lam) and hold in every quotient of it,
/// W(lam) included.
inline Transcript demo_nonintegrability(const HighestWeight& hw, int max_n)
{
  if (hw.k1 <= 0) throw domain_error("demo_nonintegrability: requires k1 > 0");
  if (max_n < 1) throw domain_error("demo_nonintegrability: requires N >= 1");
  VermaModule verma(hw);
  Transcript t;
  const BasisElement lower = e(0, -1);
  for (int n = 1; n <= max_n; ++n) {
    const ModuleVector got = verma.act(f(0, 1), ModuleVector(power(lower, n)));
    const Rational coeff = -Rational(n) * (Rational(n - 1) + hw.n1);
    const ModuleVector want = coeff * ModuleVector(power(lower, n - 1));
    t.lines.push_back({"f(0,1) e(0,-1)^" + std::to_string(n) + " v", to_string(got), to_string(want), got == want});
  }
  if (hw.n1 == 0) {
    const ModuleVector step = verma.act(f(1, 0), ModuleVector(power(lower, 1)));
    const ModuleVector step_want = Rational(-1) * ModuleVector(power(h(1, -1), 1));
    t.lines.push_back({"f(1,0) e(0,-1) v", to_string(step), to_string(step_want), step == step_want});

    const ModuleVector line = verma.act(h(-1, 1), ModuleVector(power(h(1, -1), 1)));
    const ModuleVector line_want = Rational(-2) * hw.k1 * ModuleVector::highest();
    t.lines.push_back({"h(-1,1) h(1,-1) v", to_string(line), to_string(line_want), line == line_want});

    const ModuleVector composite = verma.act(h(-1, 1), step);
    const ModuleVector composite_want = Rational(2) * hw.k1 * ModuleVector::highest();
    t.lines.push_back(
        {"h(-1,1) f(1,0) e(0,-1) v", to_string(composite), to_string(composite_want), composite == composite_want});
  }
  t.conclusion = t.verified() ? "e(0,-1) is not locally nilpotent on the highest weight vector at k1 = " +
                                    to_string(hw.k1)
                              : "identity check failed";
  return t;
}

struct InfiniteDimReport {
  int size = 0;
  Matrix entries;             // entries(s-1, m-1): coefficient of h(m,-1) v
  bool off_support_zero = false; // no other monomial ever appears
  std::size_t rank = 0;
};

/// For s, m = 1..size, expands h(s,1) h(-m,-1) h(m,-1) v in the PBW basis.
/// The result is delta_{s,m} 2 s k1 h(m,-1) v, so the vectors
/// h(-m,-1) h(m,-1) v, all of weight lam - 2 delta2, are linearly independent.
inline InfiniteDimReport demo_infinite_dim(const HighestWeight& hw, int size)
{
  if (hw.k1 <= 0) throw domain_error("demo_infinite_dim: requires k1 > 0");
  if (size < 1) throw domain_error("demo_infinite_dim: requires M >= 1");
  VermaModule verma(hw);
  InfiniteDimReport rep;
  rep.size = size;
  rep.entries = Matrix(size, size);
  rep.off_support_zero = true;
  for (int m = 1; m <= size; ++m) {
    const ModuleVector v = verma.apply_word({h(-m, -1), h(m, -1)}, ModuleVector::highest());
    const PBWMonomial target = power(h(m, -1), 1);
    for (int s = 1; s <= size; ++s) {
      const ModuleVector r = verma.act(h(s, 1), v);
      rep.entries(s - 1, m - 1) = r.coeff(target);
      if (r.size() > (r.coeff(target) != 0 ? 1u : 0u)) rep.off_support_zero = false;
    }
  }
  rep.rank = rank(rep.entries);
  return rep;
}

} // namespace toroidal

#endif
