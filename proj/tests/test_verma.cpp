#include "test_support.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace toroidal;

namespace {

ModuleVector mono(std::initializer_list<std::pair<BasisElement, int>> factors)
{
  return ModuleVector(PBWMonomial{factors});
}

BasisElement random_negative(std::mt19937_64& g, std::int64_t m_max, std::int64_t min_level)
{
  for (;;) {
    const Kind kinds[] = {Kind::E, Kind::F, Kind::H};
    BasisElement b{kinds[fixture::uniform(g, 0, 2)], fixture::uniform(g, -m_max, m_max), fixture::uniform(g, min_level, 0)};
    if (is_negative_generator(b)) return b;
  }
}

// A random vector at delta2-level >= -2: a sum of up to three words of
// negative generators applied to v, each word using at most two levels.
ModuleVector random_vector(VermaModule& verma, std::mt19937_64& g)
{
  ModuleVector v;
  for (auto terms = fixture::uniform(g, 1, 3); terms > 0; --terms) {
    std::vector<BasisElement> word;
    std::int64_t level = 0;
    for (auto len = fixture::uniform(g, 0, 3); len > 0; --len) {
      auto b = random_negative(g, 3, -2 - level);
      level += b.n;
      word.push_back(b);
    }
    v.add_scaled(verma.apply_word(word, ModuleVector::highest()), fixture::random_rational(g));
  }
  return v;
}

// Independent count: multisets of positive roots of the horizontal affine
// algebra (taken from the root partition itself) summing to eta.
std::uint64_t brute_force_dim(const RootVector& eta)
{
  const auto [a0, a1] = *simple_coords(eta);
  std::vector<RootVector> roots;
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t n1 = 0; n1 <= a0; ++n1) {
      RootVector r{a, n1, 0};
      if (!is_root(r) || !is_affine_positive(r)) continue;
      auto c = simple_coords(r);
      if (c->first <= a0 && c->second <= a1) roots.push_back(r);
    }
  std::function<std::uint64_t(std::size_t, RootVector)> count = [&](std::size_t i, RootVector rest) -> std::uint64_t {
    if (rest.is_zero()) return 1;
    if (i == roots.size() || !in_q1_plus(rest)) return 0;
    std::uint64_t total = 0;
    for (RootVector r = rest; in_q1_plus(r); r = r - roots[i]) total += count(i + 1, r);
    return total;
  };
  return count(0, eta);
}

} // namespace

TEST(Act, RaisingOnLowestLevelOne)
{
  VermaModule verma(HighestWeight(Rational(7, 3), 2));
  EXPECT_EQ(verma.act(e(0, 0), mono({{f(0, 0), 1}})), Rational(7, 3) * ModuleVector::highest());
  EXPECT_TRUE(verma.act(e(5, 2), ModuleVector::highest()).is_zero());
  EXPECT_TRUE(verma.act(f(1, 0), ModuleVector::highest()).is_zero());
  EXPECT_TRUE(verma.act(h(0, 1), ModuleVector::highest()).is_zero());
}

TEST(Act, CartanEigenvalues)
{
  HighestWeight hw(Rational(1, 2), 3, 5, -7);
  VermaModule verma(hw);
  const auto v = mono({{f(-1, 0), 2}, {e(2, -1), 1}});
  // weight: 2(-alpha - delta1) + (alpha + 2 delta1 - delta2) = -alpha - delta2
  EXPECT_EQ(verma.act(h(0, 0), v), Rational(-3, 2) * v);
  EXPECT_EQ(verma.act(c1, v), Rational(3) * v);
  EXPECT_TRUE(verma.act(c2, v).is_zero());
  EXPECT_EQ(verma.act(d1, v), Rational(5) * v);
  EXPECT_EQ(verma.act(d2, v), Rational(-8) * v);
}

TEST(Act, NonIntegrabilityIdentity)
{
  for (Rational n1 : {Rational(0), Rational(1), Rational(2), Rational(-5, 3)}) {
    VermaModule verma(HighestWeight(n1, 1));
    for (int n = 1; n <= 6; ++n) {
      const auto got = verma.act(f(0, 1), mono({{e(0, -1), n}}));
      const Rational coeff = -Rational(n) * (Rational(n - 1) + n1);
      const auto want = n == 1 ? coeff * ModuleVector::highest() : coeff * mono({{e(0, -1), n - 1}});
      EXPECT_EQ(got, want) << "N = " << n;
    }
  }
}

TEST(Act, HeisenbergPairingMatchesDeltaStructure)
{
  // h(s,1) h(-m,-1) h(m,-1) v = delta_{s,m} 2 s k1 h(m,-1) v.
  const Rational k1(5, 2);
  VermaModule verma(HighestWeight(1, k1));
  for (int s = 1; s <= 4; ++s)
    for (int m = 1; m <= 4; ++m) {
      const auto v = verma.apply_word({h(-m, -1), h(m, -1)}, ModuleVector::highest());
      const auto want = s == m ? Rational(2 * s) * k1 * mono({{h(m, -1), 1}}) : ModuleVector{};
      EXPECT_EQ(verma.act(h(s, 1), v), want) << "s=" << s << " m=" << m;
    }
}

TEST(Act, RepresentationProperty)
{
  auto g = fixture::rng(20);
  for (int trial = 0; trial < 300; ++trial) {
    HighestWeight hw(fixture::random_rational(g), abs(fixture::random_rational(g)), fixture::random_rational(g),
                     fixture::random_rational(g));
    VermaModule verma(hw);
    const auto x = fixture::random_basis(g, 3, 2), y = fixture::random_basis(g, 3, 2);
    const auto v = random_vector(verma, g);
    const auto lhs = verma.act(bracket(AlgebraElement(x), AlgebraElement(y)), v);
    const auto rhs = verma.act(x, verma.act(y, v)) - verma.act(y, verma.act(x, v));
    ASSERT_EQ(lhs, rhs) << to_string(x) << ", " << to_string(y) << " on " << to_string(v);
  }
}

TEST(Act, RepresentationPropertyUnderSecondOrder)
{
  auto g = fixture::rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    VermaModule verma(HighestWeight(fixture::random_rational(g), 2), MonomialOrder::kind_first);
    const auto x = fixture::random_basis(g, 3, 2), y = fixture::random_basis(g, 3, 2);
    const auto v = random_vector(verma, g);
    ASSERT_EQ(verma.act(bracket(AlgebraElement(x), AlgebraElement(y)), v),
              verma.act(x, verma.act(y, v)) - verma.act(y, verma.act(x, v)));
  }
}

TEST(Act, WeightCorrectness)
{
  auto g = fixture::rng(22);
  VermaModule verma(HighestWeight(Rational(2, 3), 1));
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = random_vector(verma, g);
    const auto x = fixture::random_basis(g, 3, 2);
    for (const auto& [m, c] : v.terms()) {
      const RootVector target = m.weight() + weight_of(x);
      for (const auto& [r, rc] : verma.act(x, m).terms()) ASSERT_EQ(r.weight(), target);
    }
  }
}

TEST(Freeness, MonomialsRealizeThemselves)
{
  for (auto order : {MonomialOrder::level_first, MonomialOrder::kind_first}) {
    VermaModule verma(HighestWeight(Rational(-1, 2), 3), order);
    for (const auto& eta : q1_plus_up_to(5, true))
      for (const auto& m : verma.weight_space_basis(eta)) {
        ASSERT_TRUE(verma.is_canonical(m)) << to_string(m);
        ASSERT_EQ(verma.realize(m), ModuleVector(m)) << to_string(m);
      }
  }
}

TEST(Freeness, NegativeLevelMonomials)
{
  VermaModule verma(HighestWeight(1, 1));
  for (const auto& m : verma.truncated_weight_space_basis(alpha + delta2 * 2, 1)) {
    ASSERT_TRUE(verma.is_canonical(m)) << to_string(m);
    ASSERT_EQ(verma.realize(m), ModuleVector(m)) << to_string(m);
  }
}

TEST(WeightSpaceBasis, Examples)
{
  VermaModule verma(HighestWeight(1, 1));
  EXPECT_EQ(verma.weight_space_basis(RootVector{}), (std::vector<PBWMonomial>{PBWMonomial{}}));
  EXPECT_EQ(verma.weight_space_basis(alpha), (std::vector<PBWMonomial>{PBWMonomial{{{f(0, 0), 1}}}}));
  // alpha + delta1 = alpha_0 + 2 alpha_1 splits as {alpha + delta1}, {alpha, delta1}
  // and {alpha, alpha, -alpha + delta1}.
  const auto b = verma.weight_space_basis(alpha + delta1);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(brute_force_dim(alpha + delta1), 3u);
  EXPECT_EQ(verma.weight_space_basis(delta1 * 2).size(), brute_force_dim(delta1 * 2));
  EXPECT_EQ(brute_force_dim(delta1 * 2), 6u);
  EXPECT_THROW(verma.weight_space_basis(-alpha), domain_error);
  EXPECT_THROW(verma.weight_space_basis(delta2), domain_error);
}

TEST(WeightSpaceBasis, MatchesPartitionOracle)
{
  VermaModule verma(HighestWeight(0, 0));
  for (std::int64_t a0 = 0; a0 <= 6; ++a0)
    for (std::int64_t a1 = 0; a1 <= 6; ++a1) {
      const auto eta = from_simple(a0, a1);
      EXPECT_EQ(verma.weight_space_basis(eta).size(), dim_oracle(eta)) << a0 << "," << a1;
    }
}

TEST(DimOracle, AgainstBruteForceEnumeration)
{
  for (std::int64_t a0 = 0; a0 <= 4; ++a0)
    for (std::int64_t a1 = 0; a1 <= 4; ++a1) EXPECT_EQ(dim_oracle(from_simple(a0, a1)), brute_force_dim(from_simple(a0, a1)));
  EXPECT_EQ(dim_oracle(RootVector{}), 1u);
  EXPECT_EQ(dim_oracle(alpha), 1u);
  EXPECT_EQ(dim_oracle(alpha + delta1), 3u);
  EXPECT_THROW(dim_oracle(delta2), domain_error);
}

TEST(TruncatedBasis, GrowsWithWindow)
{
  VermaModule verma(HighestWeight(0, 1));
  std::size_t previous = 0;
  for (std::int64_t w = 0; w <= 4; ++w) {
    const auto basis = verma.truncated_weight_space_basis(delta2, w);
    for (const auto& m : basis) EXPECT_EQ(m.weight(), -delta2);
    EXPECT_GT(basis.size(), previous) << "window " << w;
    previous = basis.size();
  }
}

TEST(HighestWeight, Validation)
{
  EXPECT_THROW(HighestWeight(0, -1), domain_error);
  EXPECT_THROW(HighestWeight::from_weight(Weight{0, 1, 1, 0, 0}), domain_error);
  HighestWeight hw(2, 5);
  EXPECT_EQ(hw.n0(), 3);
  EXPECT_TRUE(hw.dominant_integral());
  EXPECT_FALSE(HighestWeight(3, 2).dominant_integral());
  EXPECT_FALSE(HighestWeight(Rational(1, 2), 1).dominant_integral());
}
