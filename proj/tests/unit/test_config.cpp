#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "adenewton/cli/config.hpp"
#include "adenewton/errors.hpp"

using namespace adenewton;
using namespace adenewton::cli;

TEST(Config, Defaults) {
  const Config c;
  EXPECT_EQ(c.preset, "h-type");
  EXPECT_EQ(c.dim, 1u);
  EXPECT_EQ(c.target, "4");
  EXPECT_EQ(c.branch_bound, 16u);
  EXPECT_EQ(c.depth, 32u);
  EXPECT_EQ(c.format, Format::Text);
  EXPECT_EQ(c.field(), Field::h_type());
}

TEST(Config, AllKeys) {
  const Config c = parse_config(R"(
# run settings
[field]
preset = "monotone"
dim = 1

[solver]
target = "7/2"   # a rational exponent
branch_bound = 4
depth = 9
samples = 50
seed = 3

[output]
format = "json"
)");
  EXPECT_EQ(c.preset, "monotone");
  EXPECT_EQ(c.target, "7/2");
  EXPECT_EQ(c.branch_bound, 4u);
  EXPECT_EQ(c.depth, 9u);
  EXPECT_EQ(c.samples, 50u);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.format, Format::Json);
  EXPECT_EQ(c.field(), Field::monotone());
}

TEST(Config, LayersOverBase) {
  Config base;
  base.depth = 5;
  const Config c = parse_config("[solver]\nbranch_bound = 2\n", base);
  EXPECT_EQ(c.depth, 5u);
  EXPECT_EQ(c.branch_bound, 2u);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("[solver]\nspeed = 3\n"), ParseError);
  EXPECT_THROW(parse_config("[network]\n"), ParseError);
  EXPECT_THROW(parse_config("depth = 3\n"), ParseError);
  EXPECT_THROW(parse_config("[solver]\ndepth = -3\n"), ParseError);
  EXPECT_THROW(parse_config("[solver]\ndepth\n"), ParseError);
  EXPECT_THROW(parse_config("[output]\nformat = \"xml\"\n"), Error);
  try {
    (void)parse_config("[solver]\n\ndepth = lots\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(Config{"quantum"}.field(), DomainError);
}

TEST(Config, LoadFromFile) {
  const std::string path = ::testing::TempDir() + "adenewton_config_test.toml";
  {
    std::ofstream out(path);
    out << "[field]\npreset = \"monotone\"\n";
  }
  EXPECT_EQ(load_config(path).preset, "monotone");
  std::remove(path.c_str());
  EXPECT_THROW(load_config(path), Error);
}

TEST(Config, Format) {
  EXPECT_EQ(parse_format("text"), Format::Text);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_THROW(parse_format("yaml"), DomainError);
}
