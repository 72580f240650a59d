#include <gtest/gtest.h>

#include <random>

#include "nmp/revision.hpp"
#include "support/oracle.hpp"
#include "support/random_kb.hpp"

namespace nmp {
namespace {

void expect_matches_oracle(const Network& net, const Beliefs& beliefs,
                           ElementRef target) {
  const auto dp = foundations(net, beliefs, target);
  const auto chains = oracle::enumerate_chains(net, beliefs, target);
  for (std::size_t p = 0; p < net.pairs().size(); ++p) {
    const auto it = chains.pair.find(p);
    if (it == chains.pair.end()) {
      EXPECT_FALSE(dp.pair[p]) << net.describe(net.pairs()[p]);
    } else {
      ASSERT_TRUE(dp.pair[p]) << net.describe(net.pairs()[p]);
      EXPECT_EQ(*dp.pair[p], it->second) << net.describe(net.pairs()[p]);
    }
  }
  auto check = [&](ElementRef e) {
    const auto it = chains.element.find(e);
    if (it == chains.element.end()) {
      EXPECT_FALSE(dp.element(e)) << net.name(e);
    } else {
      ASSERT_TRUE(dp.element(e)) << net.name(e);
      EXPECT_EQ(*dp.element(e), it->second) << net.name(e);
    }
  };
  for (std::size_t i = 0; i < net.statements().size(); ++i) check(ElementRef::statement(i));
  for (std::size_t i = 0; i < net.rules().size(); ++i) check(ElementRef::rule(i));
}

TEST(FoundationsOracle, MatchesChainEnumeration) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> size(2, 12);
  int non_trivial = 0;
  for (int i = 0; i < 300; ++i) {
    const auto net = Network::build(testing::random_kb(rng, size(rng)));
    const auto beliefs = propagate(net);
    for (std::size_t s = 0; s < net.statements().size(); ++s) {
      const auto target = ElementRef::statement(s);
      if (!foundations(net, beliefs, target).empty()) ++non_trivial;
      expect_matches_oracle(net, beliefs, target);
    }
  }
  EXPECT_GT(non_trivial, 300);
}

}  // namespace
}  // namespace nmp
