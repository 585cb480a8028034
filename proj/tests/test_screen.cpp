#include <gtest/gtest.h>

#include <algorithm>

#include "facecode/screen.hpp"

using namespace facecode;
using St = ScreenVerdict::Status;

namespace {

bool has_rule(const ScreenVerdict& v, const std::string& id) {
  return std::any_of(v.trace.begin(), v.trace.end(), [&](const ScreenRule& r) { return r.id == id; });
}

const ScreenRule* rule(const ScreenVerdict& v, const std::string& id) {
  for (const auto& r : v.trace) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST(Screen, Golay24) {
  const auto v = realizability_screen(24, 8, true);
  EXPECT_EQ(v.status, St::Infeasible);
  EXPECT_TRUE(has_rule(v, "vertex-count"));
  EXPECT_TRUE(has_rule(v, "dim-3"));
  EXPECT_TRUE(has_rule(v, "dim-1"));
  EXPECT_TRUE(has_rule(v, "no-dimension"));
  EXPECT_NE(rule(v, "vertex-count")->detail.find("{1,3}"), std::string::npos);
  EXPECT_TRUE(v.surviving_dimensions.empty());
}

TEST(Screen, QR48) {
  const auto v = realizability_screen(48, 12, true);
  EXPECT_EQ(v.status, St::Infeasible);
  ASSERT_NE(rule(v, "dim-5-3faces"), nullptr);
  EXPECT_NE(rule(v, "dim-5-3faces")->detail.find(": {12}"), std::string::npos);
  ASSERT_NE(rule(v, "dim-5-4faces"), nullptr);
  EXPECT_NE(rule(v, "dim-5-4faces")->detail.find(": {24}"), std::string::npos);
  // 24 = 2*12 and 2*24 = 48 both apply; one entry per pruned size
  EXPECT_EQ(std::count_if(v.trace.begin(), v.trace.end(), [](const ScreenRule& r) { return r.id == "dim-5-cube-face"; }), 1);
  EXPECT_TRUE(has_rule(v, "dim-5-empty-4faces"));
}

TEST(Screen, Length72) {
  const auto v = realizability_screen(72, 16, true);
  EXPECT_EQ(v.status, St::Infeasible);
  EXPECT_NE(rule(v, "dim-5-3faces")->detail.find(": {16}"), std::string::npos);
  EXPECT_NE(rule(v, "dim-5-4faces")->detail.find(": {32,36}"), std::string::npos);
  EXPECT_EQ(std::count_if(v.trace.begin(), v.trace.end(), [](const ScreenRule& r) { return r.id == "dim-5-cube-face"; }), 2);
}

TEST(Screen, Witnesses) {
  const auto c = realizability_screen(8, 4, true);
  EXPECT_EQ(c.status, St::FeasibleWitness);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->to_string(), "cube 3");

  const auto p = realizability_screen(16, 4, true);
  EXPECT_EQ(p.status, St::FeasibleWitness);
  ASSERT_TRUE(p.witness);
  EXPECT_EQ(p.witness->to_string(), "prism 8");

  const auto s = realizability_screen(2, 2, false);
  EXPECT_EQ(s.status, St::FeasibleWitness);
  EXPECT_EQ(s.witness->to_string(), "segment");

  const auto h = realizability_screen(12, 4, false);
  EXPECT_EQ(h.status, St::FeasibleWitness);
  EXPECT_EQ(h.witness->to_string(), "prism 6");

  const auto c5 = realizability_screen(32, 8, true);
  EXPECT_EQ(c5.status, St::FeasibleWitness);
  EXPECT_EQ(c5.witness->to_string(), "cube 5");
}

TEST(Screen, WitnessesAreRecomputed) {
  for (const auto& [l, d, de] : std::vector<std::tuple<int, int, bool>>{{8, 4, true}, {16, 4, true}, {12, 4, false}, {32, 8, true}}) {
    const auto v = realizability_screen(l, d, de);
    ASSERT_TRUE(v.witness);
    const auto p = v.witness->build();
    const int k = (p.dim() - 1) / 2;
    const auto code = face_code(p, k).code;
    EXPECT_EQ(static_cast<int>(code.length()), l);
    EXPECT_TRUE(gf2::is_self_dual(code).self_dual);
    EXPECT_EQ(static_cast<int>(gf2::min_distance(code)), d);
    EXPECT_EQ(gf2::weight_enumerator(code).doubly_even, de);
  }
}

TEST(Screen, PrismDoublyEvenOnlyWhenSidesDivisibleByFour) {
  // (12,4,true): 6 sides, hexagons break doubly-evenness; Gleason rules it out first.
  EXPECT_EQ(realizability_screen(12, 4, true).status, St::Infeasible);
  EXPECT_TRUE(has_rule(realizability_screen(12, 4, true), "doubly-even-length"));
  // (24,4,true): the 12-prism is doubly-even.
  const auto v = realizability_screen(24, 4, true);
  EXPECT_EQ(v.status, St::FeasibleWitness);
  EXPECT_EQ(v.witness->to_string(), "prism 12");
  // (20,4,false): the 10-prism
  EXPECT_EQ(realizability_screen(20, 4, false).witness->to_string(), "prism 10");
}

TEST(Screen, ParityRules) {
  EXPECT_TRUE(has_rule(realizability_screen(9, 4, false), "odd-length"));
  EXPECT_EQ(realizability_screen(9, 4, false).status, St::Infeasible);
  EXPECT_TRUE(has_rule(realizability_screen(10, 3, false), "odd-distance"));
  EXPECT_TRUE(has_rule(realizability_screen(16, 6, true), "doubly-even-distance"));
}

TEST(Screen, UnknownWithoutWitness) {
  // n = 5 survives for (64, 8, true) and there is no canned construction.
  const auto v = realizability_screen(64, 8, true);
  EXPECT_EQ(v.status, St::Unknown);
  EXPECT_FALSE(v.witness);
  EXPECT_FALSE(v.surviving_dimensions.empty());
}

TEST(Screen, InfeasibleAlwaysHasTrace) {
  for (int l = 2; l <= 96; l += 2) {
    for (int d = 2; d <= 20; d += 2) {
      for (bool de : {false, true}) {
        const auto v = realizability_screen(l, d, de);
        if (v.status == St::Infeasible) { EXPECT_FALSE(v.trace.empty()); }
        if (v.status == St::FeasibleWitness) { EXPECT_TRUE(v.witness); }
      }
    }
  }
}

TEST(Screen, BadArguments) {
  EXPECT_THROW(realizability_screen(0, 2, false), Error);
  EXPECT_THROW(realizability_screen(8, 1, false), Error);
}

TEST(MallowsSloane, Examples) {
  EXPECT_EQ(mallows_sloane(8).bound, 4);
  EXPECT_TRUE(mallows_sloane(8).is_extremal(face_code(cube(3), 1).code));
  EXPECT_EQ(mallows_sloane(16).bound, 4);
  EXPECT_TRUE(mallows_sloane(16).is_extremal(face_code(prism(8), 1).code));
  EXPECT_EQ(mallows_sloane(24).bound, 8);
  EXPECT_FALSE(mallows_sloane(16).is_extremal(face_code(prism(6), 1).code));  // wrong length
  try {
    mallows_sloane(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inapplicable);
  }
}
