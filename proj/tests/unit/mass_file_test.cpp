#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "nmp/error.hpp"
#include "nmp/mass_file.hpp"

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
    parse_mass_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(MassFile, ShippedAnalystFiles) {
  const auto a = parse_mass_file(slurp(NMP_DATA_DIR "/zadeh_a.mass"));
  const auto& f = a.mass.frame();
  EXPECT_EQ(f.labels(), (std::vector<std::string>{"H1", "H2", "H3"}));
  EXPECT_EQ(a.mass.mass(f.singleton("H1")), 0.99);
  EXPECT_FALSE(a.discount);

  const auto b = parse_mass_file(slurp(NMP_DATA_DIR "/zadeh_b_discounted.mass"));
  ASSERT_TRUE(b.discount);
  EXPECT_EQ(*b.discount, 0.02);
  EXPECT_NEAR(b.effective().mass(f.singleton("H3")), 0.9702, 1e-12);
}

TEST(MassFile, SubsetSeparators) {
  const auto m = parse_mass_file(
      "frame a b c\nmass {a,b}=0.5 {b c}=0.25 { a , b , c }=0.25\n");
  const auto& f = m.mass.frame();
  EXPECT_EQ(m.mass.mass(f.subset({"a", "b"})), 0.5);
  EXPECT_EQ(m.mass.mass(f.subset({"b", "c"})), 0.25);
  EXPECT_EQ(m.mass.mass(f.theta()), 0.25);
}

TEST(MassFile, Errors) {
  EXPECT_EQ(error_line("mass {a}=1\n"), 1);
  EXPECT_EQ(error_line("frame a b\nmass {c}=1\n"), 2);
  EXPECT_EQ(error_line("frame a b\nmass {a}=0.5\n"), 2);
  EXPECT_EQ(error_line("frame a b\nmass {}=1\n"), 2);
  EXPECT_EQ(error_line("frame a b\nmass {a=1\n"), 2);
  EXPECT_EQ(error_line("frame a b\nmass {a}=1\ndiscount 1.5\n"), 3);
  EXPECT_EQ(error_line("frame a a\nmass {a}=1\n"), 1);
  EXPECT_GT(error_line("frame a b\n"), 0);
  EXPECT_EQ(error_line("frame a b\nmass {a}=1\nmass {b}=1\n"), 3);
  EXPECT_EQ(error_line("frame a b\nweight 2\n"), 2);
}

}  // namespace
}  // namespace nmp
