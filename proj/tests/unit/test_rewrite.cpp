#include <random>

#include <gtest/gtest.h>

#include "frobex/rewrite.hpp"
#include "../oracles.hpp"

using namespace frobex;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  Word w(rng() % (max_len + 1));
  for (int& g : w) g = static_cast<int>(rng() % gens);
  return w;
}

}  // namespace

TEST(RewriteSystem, SwapsMatchBubbleSortOracle) {
  const auto F = RootField::create(103, 3);
  const std::vector<std::vector<std::int64_t>> C = {{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}};
  const auto R = RewriteSystem::q_commuting(F, C);
  EXPECT_FALSE(R.find_critical_pair_failure().has_value());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, 3, 8);
    std::vector<int> counts(3, 0);
    for (int g : w) ++counts[g];
    const auto nf = R.normal_form(w);
    ASSERT_EQ(nf.size(), 1u);
    const Word sorted = oracle::word_of_exponents(counts);
    ASSERT_EQ(nf.begin()->first, sorted);
    std::int64_t k = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t q = p + 1; q < w.size(); ++q)
        if (w[p] > w[q]) k += C[w[p]][w[q]];
    EXPECT_EQ(nf.begin()->second, F.zeta_pow(k));
  }
}

TEST(RewriteSystem, StrategiesAgree) {
  const auto F = RootField::create(103, 3);
  const std::vector<std::vector<std::int64_t>> C = {{0, 1}, {-1, 0}};
  const auto R = RewriteSystem::q_commuting(F, C);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, 2, 10);
    const auto left = R.normal_form(w, 1, Strategy::leftmost);
    EXPECT_EQ(R.normal_form(w, 1, Strategy::rightmost), left);
    EXPECT_EQ(R.normal_form(w, 1, Strategy::random, &rng), left);
  }
}

TEST(RewriteSystem, DetectsNonConfluence) {
  const auto F = RootField::create(103, 3);
  // x1 x0 -> q x0 x1, x2 x1 -> x0, x2 x0 -> x0 x2: the overlap x2 x1 x0
  // reduces to x0 x0 one way and q x0 x0 the other.
  std::vector<RewriteRule> rules = {
      {1, 0, {{F.zeta(), {0, 1}}}},
      {2, 1, {{1, {0}}}},
      {2, 0, {{1, {0, 2}}}},
  };
  const RewriteSystem R(F, 3, rules);
  EXPECT_TRUE(R.find_critical_pair_failure().has_value());
}

TEST(RewriteSystem, BudgetIsEnforced) {
  const auto F = RootField::create(103, 3);
  std::vector<RewriteRule> rules = {{1, 0, {{1, {0, 1}}}}, {0, 1, {{1, {1, 0}}}}};
  const RewriteSystem R(F, 2, rules, 50);
  EXPECT_THROW((void)R.normal_form(Word{1, 0}), RewriteBudgetExceeded);
}

TEST(RewriteSystem, NormalFormIsLinear) {
  const auto F = RootField::create(103, 3);
  const auto R = RewriteSystem::q_commuting(F, {{0, 2}, {-2, 0}});
  RewriteSystem::Combination input{{Word{1, 0}, 5}, {Word{0, 1}, 7}};
  const auto nf = R.normal_form(input);
  ASSERT_EQ(nf.size(), 1u);
  EXPECT_EQ(nf.at(Word{0, 1}), F.add(F.mul(5, F.zeta_pow(-2)), 7));
}
