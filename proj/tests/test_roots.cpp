#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace toroidal;

namespace {

Weight random_weight(std::mt19937_64& g)
{
  return {fixture::random_rational(g), fixture::random_rational(g), fixture::random_rational(g),
          fixture::random_rational(g), fixture::random_rational(g)};
}

RootVector random_real_root(std::mt19937_64& g, std::int64_t bound)
{
  return {fixture::uniform(g, 0, 1) ? 1 : -1, fixture::uniform(g, -bound, bound), fixture::uniform(g, -bound, bound)};
}

WeylWord random_word(std::mt19937_64& g, std::int64_t max_len)
{
  WeylWord w;
  for (auto i = fixture::uniform(g, 0, max_len); i > 0; --i)
    w.push_back(fixture::uniform(g, 0, 1) ? SimpleReflection::r1 : SimpleReflection::r0);
  return w;
}

// Hand simplification of the seven clauses: a root is positive iff its
// delta2-degree is positive, or it is zero and the root is a positive root of
// the horizontal affine algebra.
bool positive_by_levels(const RootVector& r)
{
  if (r.n2 != 0) return r.n2 > 0;
  if (r.a == 1) return r.n1 >= 0;
  return r.n1 >= 1;
}

} // namespace

TEST(Classify, Examples)
{
  EXPECT_EQ(classify(alpha - delta1 * 3 + delta2), RootKind::real);
  EXPECT_EQ(classify(-delta1 + delta2 * 5), RootKind::imaginary);
  EXPECT_EQ(classify(RootVector{}), RootKind::not_root);
  EXPECT_EQ(classify(alpha * 2), RootKind::not_root);
}

TEST(IsPositive, Examples)
{
  EXPECT_TRUE(is_positive(alpha - delta1 * 2 + delta2));
  EXPECT_FALSE(is_positive(-delta2));
  EXPECT_TRUE(is_positive(delta1 * 3));
  EXPECT_TRUE(is_positive(alpha_0));
  EXPECT_TRUE(is_positive(alpha_m1));
  EXPECT_THROW(is_positive(RootVector{}), domain_error);
  EXPECT_THROW(is_positive(alpha * 2), domain_error);
}

TEST(IsPositive, PartitionOfRootsOnBox)
{
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t n1 = -10; n1 <= 10; ++n1)
      for (std::int64_t n2 = -10; n2 <= 10; ++n2) {
        RootVector r{a, n1, n2};
        if (!is_root(r)) continue;
        EXPECT_NE(is_positive(r), is_positive(-r)) << to_string(r);
        EXPECT_EQ(is_positive(r), positive_by_levels(r)) << to_string(r);
      }
}

TEST(IsPositive, ClosedUnderAddition)
{
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b)
      for (std::int64_t n1 = -4; n1 <= 4; ++n1)
        for (std::int64_t n2 = 0; n2 <= 3; ++n2)
          for (std::int64_t m1 = -4; m1 <= 4; ++m1)
            for (std::int64_t m2 = 0; m2 <= 3; ++m2) {
              RootVector x{a, n1, n2}, y{b, m1, m2};
              if (!is_root(x) || !is_root(y) || !is_root(x + y)) continue;
              if (is_positive(x) && is_positive(y)) EXPECT_TRUE(is_positive(x + y)) << to_string(x) << to_string(y);
            }
}

TEST(Coroot, Examples)
{
  EXPECT_EQ(coroot(alpha_0), (CartanElement{-1, 1, 0, 0, 0}));
  EXPECT_EQ(coroot(alpha_m1), (CartanElement{-1, 0, 1, 0, 0}));
  EXPECT_EQ(coroot(alpha), (CartanElement{1, 0, 0, 0, 0}));
  EXPECT_THROW(coroot(delta1), domain_error);
  EXPECT_THROW(coroot(RootVector{}), domain_error);
}

TEST(Reflect, Examples)
{
  const Weight lam{3, 5, 7, 11, 13};
  EXPECT_EQ(reflect(alpha, lam), (Weight{-3, 5, 7, 11, 13}));
  EXPECT_EQ(reflect(alpha_0, Weight{1, 2, 0, 0, 0}), (Weight{3, 2, 0, -1, 0}));
  EXPECT_THROW(reflect(delta2, lam), domain_error);
}

TEST(Reflect, InvolutionAndIsometry)
{
  auto g = fixture::rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto beta = random_real_root(g, 5);
    const auto x = random_weight(g), y = random_weight(g);
    EXPECT_EQ(reflect(beta, reflect(beta, x)), x);
    EXPECT_EQ(form_hstar(reflect(beta, x), reflect(beta, y)), form_hstar(x, y));
  }
}

TEST(Reflect, PreservesRealRoots)
{
  auto g = fixture::rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto beta = random_real_root(g, 5), gamma = random_real_root(g, 5);
    const auto image = to_root_vector(reflect(beta, embed(gamma)));
    ASSERT_TRUE(image.has_value());
    EXPECT_EQ(classify(*image), RootKind::real);
  }
}

TEST(FormHstar, Examples)
{
  EXPECT_EQ(form_hstar(embed(alpha), embed(alpha)), 2);
  EXPECT_EQ(form_hstar(embed(delta1), embed(delta2)), 0);
  EXPECT_EQ(form_hstar(embed(delta1), omega1), 1);
  EXPECT_EQ(form_hstar(embed(delta2), omega1), 0);
  EXPECT_EQ(form_hstar(omega1, omega2), 0);
  EXPECT_EQ(form_hstar(embed(alpha), omega2), 0);
}

TEST(FormHstar, RealCorootIsTwiceProjection)
{
  // lam(beta^vee) = 2 (lam|beta) / (beta|beta) for every real root.
  auto g = fixture::rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto beta = random_real_root(g, 5);
    const auto lam = random_weight(g);
    EXPECT_EQ(lam(coroot(beta)), 2 * form_hstar(lam, embed(beta)) / form_hstar(embed(beta), embed(beta)));
  }
}

TEST(DotAction, Examples)
{
  const Weight lam{4, 9, 0, 1, 2};
  EXPECT_EQ(dot_action({}, lam), lam);
  EXPECT_EQ(dot_action({SimpleReflection::r1}, lam), lam - embed(alpha) * Rational(5));
  EXPECT_EQ(dot_action({SimpleReflection::r1, SimpleReflection::r1}, lam), lam);
  // (lam + rho)(alpha_0^vee) = (9 + 2) - (4 + 1) = 6.
  EXPECT_EQ(dot_action({SimpleReflection::r0}, lam), lam - embed(alpha_0) * Rational(6));
}

TEST(DotAction, CompositionOfWords)
{
  auto g = fixture::rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = random_word(g, 4), v = random_word(g, 4);
    const auto lam = random_weight(g);
    WeylWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    EXPECT_EQ(dot_action(u, dot_action(v, lam)), dot_action(uv, lam));
  }
}

TEST(DotAction, IgnoresDerivationValuesOfRho)
{
  // Only (lam + rho) evaluated on real coroots enters the reflections, and real
  // coroots have no d_i component.
  const Weight lam{2, 3, 0, 5, -1};
  const Weight shifted_rho = rho + Weight{0, 0, 0, 7, 11};
  for (auto& w : affine_weyl_elements(4)) {
    Weight x = lam + shifted_rho;
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = reflect(simple_root(*it), x);
    EXPECT_EQ(x - shifted_rho, dot_action(w, lam));
  }
}

TEST(SimpleCoords, RoundTrip)
{
  for (std::int64_t a0 = 0; a0 <= 5; ++a0)
    for (std::int64_t a1 = 0; a1 <= 5; ++a1) {
      const auto eta = from_simple(a0, a1);
      EXPECT_TRUE(in_q1_plus(eta));
      EXPECT_EQ(simple_coords(eta), (std::pair{a0, a1}));
      EXPECT_EQ(depth(eta), a0 + a1);
    }
  EXPECT_FALSE(in_q1_plus(-alpha));
  EXPECT_FALSE(in_q1_plus(delta2));
  EXPECT_TRUE(in_q1_plus(alpha + delta1));
}
