#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "pntlab/errors.hpp"
#include "pntlab/presets.hpp"

using namespace pntlab;

TEST(Presets, RegionStrings) {
  EXPECT_EQ(parse_region("classical:5.573412").params().r, 5.573412);
  EXPECT_EQ(parse_region("classical-5.573412").params().r, 5.573412);
  EXPECT_EQ(parse_region("vk:53.989").family(), RegionFamily::VinogradovKorobov);
  const auto p = parse_region("power:0.05,1,0.3");
  EXPECT_EQ(p.params().c1, 0.05);
  EXPECT_EQ(p.params().c2, 1.0);
  EXPECT_EQ(p.params().c3, 0.3);
  const auto q = parse_region("power-0.05-1--0.3");
  EXPECT_EQ(q.params().c3, -0.3);
  EXPECT_EQ(parse_region("power:1e-1,1,0").params().c1, 0.1);
  EXPECT_EQ(parse_region("Classical:2").params().r, 2.0);
}

TEST(Presets, RegionJson) {
  EXPECT_EQ(parse_region(R"({"family": "classical", "R": 5.573412})").params().r, 5.573412);
  EXPECT_EQ(parse_region(R"({"family": "vk", "c": 53.989})").params().c, 53.989);
  EXPECT_EQ(parse_region(R"({"family": "power", "c1": 0.05, "c2": 1, "c3": 0.3})").params().c3, 0.3);
}

TEST(Presets, RegionFromFile) {
  const std::string path = ::testing::TempDir() + "region.json";
  std::ofstream(path) << R"({"family": "vk", "c": 40})";
  EXPECT_EQ(parse_region("@" + path).params().c, 40.0);
  std::remove(path.c_str());
  EXPECT_THROW(parse_region("@/nonexistent/region.json"), IoError);
}

TEST(Presets, RegionRejects) {
  EXPECT_THROW(parse_region(""), ParameterError);
  EXPECT_THROW(parse_region("classical"), ParameterError);
  EXPECT_THROW(parse_region("classical:abc"), ParameterError);
  EXPECT_THROW(parse_region("classical:1,2"), ParameterError);
  EXPECT_THROW(parse_region("hadamard:1"), ParameterError);
  EXPECT_THROW(parse_region("power:1,0,0"), ParameterError);
  EXPECT_THROW(parse_region("{not json"), ParameterError);
  EXPECT_THROW(parse_region(R"({"family": "vk"})"), ParameterError);
}

TEST(Presets, DescribeParsesBack) {
  for (const char* spec : {"classical:5.573412", "vk:53.989", "power:0.05,1,-0.3"}) {
    const auto r = parse_region(spec);
    EXPECT_EQ(r.describe(), spec);
    EXPECT_EQ(parse_region(r.describe()).params().c3, r.params().c3);
  }
}

TEST(Presets, Density) {
  const auto j = parse_density("jutila");
  EXPECT_EQ(j.a, 2.5);
  EXPECT_EQ(j.sigma0, 0.8);
  const auto f = parse_density("FORD");
  EXPECT_EQ(f.a, 58.05);
  EXPECT_EQ(f.b, 1.5);
  EXPECT_EQ(f.c, 15.0);
  EXPECT_EQ(f.sigma0, 0.9);
  const auto c = parse_density("3,1,2,0.7");
  EXPECT_EQ(c.a, 3.0);
  EXPECT_EQ(c.c, 2.0);
  const auto js = parse_density(R"({"A": 2, "B": 1, "C": 0, "sigma0": 0.75, "label": "mine"})");
  EXPECT_EQ(js.label, "mine");
  EXPECT_EQ(describe(j), "jutila(A=2.5,B=1,C=0,sigma0=0.8)");
}

TEST(Presets, DensityRejects) {
  EXPECT_THROW(parse_density("huxley"), ParameterError);
  EXPECT_THROW(parse_density("1,2,3"), ParameterError);
  EXPECT_THROW(parse_density("0,1,0,0.8"), ParameterError);
  EXPECT_THROW(parse_density("2,1,0,0.3"), ParameterError);
  EXPECT_THROW(parse_density(R"({"A": 2})"), ParameterError);
}
