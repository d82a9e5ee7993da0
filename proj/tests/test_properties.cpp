#include <gtest/gtest.h>

#include "support/properties.hpp"

using namespace fdes;
using namespace fdes::testing;

namespace {

void expect_clean(const SuiteStats& stats) {
  for (const auto& f : stats.failures) ADD_FAILURE() << f;
  EXPECT_GT(stats.total_checks(), 0u);
}

}  // namespace

TEST(Properties, TheoremSuite) {
  Rng rng(101);
  SuiteStats stats;
  for (std::size_t i = 0; i < 150; ++i) theorem_suite_instance(rng, i, stats);
  expect_clean(stats);
}

TEST(Properties, OracleSuite) {
  Rng rng(202);
  SuiteStats stats;
  for (std::size_t i = 0; i < 40; ++i) oracle_suite_instance(rng, i, stats);
  expect_clean(stats);
}

TEST(Properties, ExistenceSuite) {
  Rng rng(303);
  SuiteStats stats;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < 30; ++i) existence_suite_instance(rng, i, stats, positives);
  expect_clean(stats);
  EXPECT_GT(positives, 0u);
  EXPECT_LT(positives, 30u);
}

TEST(Properties, ScpSuite) {
  Rng rng(404);
  SuiteStats stats;
  std::size_t solved = 0;
  for (std::size_t i = 0; i < 40; ++i) scp_suite_instance(rng, i, stats, solved);
  expect_clean(stats);
}

TEST(Properties, InfimalCoInvariants) {
  Rng rng(505);
  for (int i = 0; i < 200; ++i) {
    const Instance x = random_instance(rng, RandomConfig{});
    const Projection pr = Projection::central(x.alphabet);
    const FuzzyLanguage inf = infimal_co(x.spec, x.plant, pr);
    SCOPED_TRACE(dump(x));
    EXPECT_TRUE(is_sublanguage(x.spec, inf));
    EXPECT_TRUE(is_sublanguage(inf, x.plant));
    EXPECT_TRUE(is_controllable(inf, x.plant, *x.alphabet).holds());
    EXPECT_TRUE(is_observable(inf, x.plant, pr).holds());
    EXPECT_EQ(infimal_co(inf, x.plant, pr), inf);
    // Monotone: a smaller spec never has a larger infimal superlanguage.
    const FuzzyLanguage smaller = random_sublanguage(rng, x.spec, x.lattice);
    EXPECT_TRUE(is_sublanguage(infimal_co(smaller, x.plant, pr), inf));
  }
}

TEST(Properties, SupremalCnInvariants) {
  Rng rng(606);
  for (int i = 0; i < 200; ++i) {
    const Instance x = random_instance(rng, RandomConfig{});
    const Projection pr = Projection::central(x.alphabet);
    const FuzzyLanguage sup = supremal_cn(x.spec, x.plant, pr);
    SCOPED_TRACE(dump(x));
    EXPECT_TRUE(is_sublanguage(sup, x.spec));
    if (sup.is_empty()) continue;
    EXPECT_TRUE(is_controllable(sup, x.plant, *x.alphabet).holds());
    EXPECT_TRUE(is_normal(sup, x.plant, pr).holds());
    EXPECT_EQ(supremal_cn(sup, x.plant, pr), sup);
    const FuzzyLanguage smaller = random_sublanguage(rng, x.spec, x.lattice);
    EXPECT_TRUE(is_sublanguage(supremal_cn(smaller, x.plant, pr), sup));
  }
}

TEST(Properties, DecentralizedExistenceMatchesCoobservability) {
  Rng rng(707);
  RandomConfig cfg;
  cfg.max_support = 4;
  cfg.max_lattice = 3;
  cfg.max_events = 3;
  cfg.sites = true;
  std::size_t positives = 0;
  for (int i = 0; i < 40; ++i) {
    const Instance x = random_instance(rng, cfg);
    const auto sites = site_controls(x.alphabet);
    SCOPED_TRACE(dump(x));
    const bool predicted = is_controllable(x.spec, x.plant, *x.alphabet).holds() &&
                           is_coobservable(x.spec, x.plant, sites[0], sites[1]).holds();
    const bool found = brute_decentralized_supervisor_exists(x.spec, x.plant, x.alphabet, 1u << 20);
    EXPECT_EQ(predicted, found);
    if (found) ++positives;
  }
  EXPECT_GT(positives, 0u);
}
