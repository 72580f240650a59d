#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "nmp/error.hpp"
#include "nmp/kb_format.hpp"
#include "support/random_kb.hpp"

namespace nmp {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int error_line(std::string_view text) {
  try {
    parse_kb(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string error_message(std::string_view text) {
  try {
    parse_kb(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

TEST(ParseKb, ZadehBinaryFile) {
  const auto kb = parse_kb(slurp(NMP_DATA_DIR "/zadeh_binary.nmp"));
  ASSERT_EQ(kb.statements().size(), 1u);
  ASSERT_EQ(kb.rules().size(), 2u);
  EXPECT_EQ(kb.queries(), std::vector<std::string>{"building"});
  const auto& photo = kb.rules()[0];
  EXPECT_EQ(photo.id, "photo");
  EXPECT_TRUE(photo.evidence);
  EXPECT_TRUE(photo.antecedents.empty());
  EXPECT_EQ(photo.consequent, "building");
  EXPECT_EQ(photo.yes, 0.99);
  EXPECT_EQ(photo.no, 0.01);
  EXPECT_NEAR(photo.unknown, 0.0, 1e-15);
  EXPECT_EQ(photo.discount, 0.01);
  EXPECT_EQ(kb.rules()[1].discount, 0.02);
  EXPECT_FALSE(kb.params().gamma);
}

TEST(ParseKb, EmptyAndCommentOnly) {
  EXPECT_TRUE(parse_kb("").empty());
  EXPECT_TRUE(parse_kb("# nothing\n\n   \n").empty());
}

TEST(ParseKb, FullGrammar) {
  const auto kb = parse_kb(
      "statement a   # trailing comment\n"
      "statement b discount=0.1\n"
      "statement indep\n"
      "evidence ea for a yes=0.6 no=0.1 unknown=0.3 discount=0.05\n"
      "rule r1 if a,indep then b yes=0.7 no=0\n"
      "rule r2 if a , indep then indep2 yes=0.7 no=0\n"
      "statement indep2\n"
      "reason r1 includes indep\n"
      "query b\n"
      "param gamma=2 delta=0.5\n"
      "param maxiter=12\n");
  EXPECT_EQ(kb.statements().size(), 4u);
  EXPECT_EQ(kb.find_statement("b")->discount, 0.1);
  EXPECT_EQ(kb.find_rule("r1")->antecedents,
            (std::vector<std::string>{"a", "indep"}));
  EXPECT_EQ(kb.find_rule("r2")->antecedents,
            (std::vector<std::string>{"a", "indep"}));
  EXPECT_NEAR(kb.find_rule("r1")->unknown, 0.3, 1e-15);
  EXPECT_FALSE(kb.find_rule("r1")->evidence);
  ASSERT_EQ(kb.reasons().size(), 1u);
  EXPECT_EQ(kb.reasons()[0], (ReasonDecl{"r1", "indep"}));
  EXPECT_EQ(kb.params().gamma, 2.0);
  EXPECT_EQ(kb.params().delta, 0.5);
  EXPECT_EQ(kb.params().max_iter, 12);
}

TEST(ParseKb, CrlfAndUnicodeIds) {
  const auto kb = parse_kb("statement gebäude\r\nevidence e:1 for gebäude yes=1 no=0\r\n");
  EXPECT_TRUE(kb.find_statement("gebäude"));
  EXPECT_TRUE(kb.find_rule("e:1"));
}

TEST(ParseKb, MassSumViolation) {
  const auto msg = error_message("statement b\nevidence e for b yes=0.7 no=0.4\n");
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("exceeds 1"), std::string::npos) << msg;
  EXPECT_EQ(error_line("statement b\nevidence e for b yes=0.5 no=0.2 unknown=0.2\n"), 2);
  EXPECT_EQ(error_line("statement b\nevidence e for b yes=-0.5 no=0.2\n"), 2);
}

TEST(ParseKb, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("statement a\nfrobnicate a\n"), 2);
  EXPECT_EQ(error_line("statement a\nstatement a\n"), 2);
  EXPECT_EQ(error_line("statement a\nevidence a for a yes=1 no=0\n"), 2);
  EXPECT_EQ(error_line("statement a\n\nquery ghost\n"), 3);
  EXPECT_EQ(error_line("statement a\nrule r if a then ghost yes=1 no=0\n"), 2);
  EXPECT_EQ(error_line("statement a\nrule r if a then a yes=1 no=0\n"), 2);
  EXPECT_EQ(error_line("statement a\nrule r if then a yes=1 no=0\n"), 2);
  EXPECT_EQ(error_line("statement a\nevidence e for a yes=1\n"), 2);
  EXPECT_EQ(error_line("statement a\nevidence e for a yes=x no=0\n"), 2);
  EXPECT_EQ(error_line("statement a\nevidence e for a yes=1 no=0 weight=2\n"), 2);
  EXPECT_EQ(error_line("statement a\nevidence e for a yes=0.5 no=0 discount=2\n"), 2);
  EXPECT_EQ(error_line("param gamma=0\n"), 1);
  EXPECT_EQ(error_line("param delta=0\n"), 1);
  EXPECT_EQ(error_line("param maxiter=2.5\n"), 1);
  EXPECT_EQ(error_line("param colour=1\n"), 1);
  EXPECT_EQ(error_line("statement a\nevidence e for a yes=1 no=0\nreason e includes e\n"), 3);
  EXPECT_EQ(error_line("statement a b\n"), 1);
  EXPECT_EQ(error_line("statement a=b\n"), 1);
}

TEST(ParseKb, CyclesAreLeftToNetworkBuild) {
  EXPECT_NO_THROW(parse_kb(
      "statement a\nstatement b\n"
      "rule r1 if a then b yes=1 no=0\n"
      "rule r2 if b then a yes=1 no=0\n"));
}

TEST(SerializeKb, ShortestNumbers) {
  const auto kb = parse_kb(
      "statement b\n"
      "evidence photo for b yes=0.99 no=0.01 discount=0.01\n"
      "query b\nparam gamma=0.5\n");
  const auto text = serialize_kb(kb);
  EXPECT_NE(text.find("evidence photo for b yes=0.99 no=0.01 unknown=0 discount=0.01"),
            std::string::npos)
      << text;
  EXPECT_NE(text.find("param gamma=0.5"), std::string::npos) << text;
}

TEST(SerializeKb, RoundTripsHandWritten) {
  const auto kb = parse_kb(
      "statement a\nstatement b discount=0.25\n"
      "evidence ea for a yes=0.6 no=0.1\n"
      "rule r if a then b yes=0.3 no=0.3 discount=0.1\n"
      "reason b includes a\nquery b\n"
      "param gamma=1.5 delta=0.1 maxiter=9\n");
  EXPECT_EQ(parse_kb(serialize_kb(kb)), kb);
}

TEST(SerializeKb, RoundTripsRandom) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    auto kb = testing::random_kb(rng, 1 + i % 14);
    if (u(rng) < 0.5) kb.add_query("s0");
    if (u(rng) < 0.5) kb.params().gamma = 0.01 + u(rng);
    if (u(rng) < 0.5) kb.params().delta = 0.01 + 0.9 * u(rng);
    if (u(rng) < 0.5) kb.params().max_iter = 1 + static_cast<int>(u(rng) * 100);
    const auto text = serialize_kb(kb);
    EXPECT_EQ(parse_kb(text), kb) << text;
    EXPECT_EQ(serialize_kb(parse_kb(text)), text);
  }
}

}  // namespace
}  // namespace nmp
