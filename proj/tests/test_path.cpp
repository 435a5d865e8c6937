#include "ddyck/path.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace ddyck;

// A 28-step (-1)-Dyck path with valley vector (0,1,0,3,4,3,2) and area 70,
// used as the running fixture across the suite.
constexpr const char* kFixture = "UDUUDUDDUUUUUDDUUDUDDUDDUDDD";

TEST(Parse, SmallestPaths) {
  EXPECT_EQ(Path::parse("UD").semi_length(), 1u);
  EXPECT_EQ(Path::parse("UUDD").semi_length(), 2u);
  EXPECT_TRUE(Path::parse("").empty());
}

TEST(Parse, AliasesAndCase) {
  EXPECT_EQ(Path::parse("XY"), Path::parse("UD"));
  EXPECT_EQ(Path::parse("xxyy"), Path::parse("UUDD"));
  EXPECT_EQ(Path::parse("uDuD"), Path::parse("UDUD"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(Path::parse("UDDU"), BelowAxis);  // prefix UDD dips below axis
  EXPECT_THROW(Path::parse("UUD"), Unbalanced);
  EXPECT_THROW(Path::parse("U D"), BadToken);
  EXPECT_THROW(Path::parse("UDZ"), BadToken);
  EXPECT_THROW(Path::parse("D"), BelowAxis);
}

TEST(Parse, RenderRoundTrip) {
  std::mt19937 rng(20240707);
  for (int iter = 0; iter < 200; ++iter) {
    // random Dyck path by rejection-free ballot walk
    std::size_t n = 1 + rng() % 12;
    std::vector<Step> steps;
    std::size_t ups = 0, downs = 0;
    while (steps.size() < 2 * n) {
      bool can_up = ups < n;
      bool can_down = downs < ups;
      bool up = can_up && (!can_down || rng() % 2 == 0);
      steps.push_back(up ? Step::Up : Step::Down);
      (up ? ups : downs)++;
    }
    Path p = Path::from_steps(steps);
    EXPECT_EQ(Path::parse(p.to_string()), p);
  }
}

TEST(ValleyVector, Fixture) {
  Path p = Path::parse(kFixture);
  EXPECT_EQ(p.semi_length(), 14u);
  EXPECT_EQ(valley_vector(p), (ValleyVector{0, 1, 0, 3, 4, 3, 2}));
}

TEST(ValleyVector, PyramidHasNone) {
  EXPECT_TRUE(valley_vector(Path::parse("UUUUDDDD")).empty());
}

TEST(ValleyVector, HandTrace) {
  EXPECT_EQ(valley_vector(Path::parse("UUUDUDDDUD")), (ValleyVector{2, 0}));
}

TEST(IsDDyck, FixtureIsMinusOneDyck) {
  EXPECT_TRUE(is_d_dyck(Path::parse(kFixture), DParam::restricted(-1)));
}

TEST(IsDDyck, TheOneBadPathOfSemiLengthFive) {
  Path p = Path::parse("UUUDUDDDUD");
  EXPECT_FALSE(is_d_dyck(p, DParam::restricted(-1)));
  EXPECT_TRUE(is_d_dyck(p, DParam::restricted(-2)));
  EXPECT_TRUE(is_d_dyck(p, DParam::unrestricted()));
}

TEST(IsDDyck, PyramidsAlwaysPass) {
  for (int a = 1; a <= 5; ++a) {
    Path p = Path::parse(std::string(a, 'U') + std::string(a, 'D'));
    for (int d = -3; d <= 3; ++d) EXPECT_TRUE(is_d_dyck(p, DParam::restricted(d)));
  }
}

TEST(IsDDyck, MonotoneInD) {
  const char* samples[] = {"UDUD", "UUDUDD", "UUDDUD", "UUUDUDDDUD", kFixture,
                           "UDUDUD", "UUDDUUDD"};
  for (const char* s : samples) {
    Path p = Path::parse(s);
    for (int d = -4; d <= 2; ++d)
      if (is_d_dyck(p, DParam::restricted(d))) {
        for (int dd = -5; dd <= d; ++dd) {
          EXPECT_TRUE(is_d_dyck(p, DParam::restricted(dd))) << s << " d=" << dd;
        }
      }
  }
}

TEST(Peaks, Examples) {
  EXPECT_EQ(peaks(Path::parse("UD")), 1u);
  EXPECT_EQ(peaks(Path::parse("UDUDUD")), 3u);
  EXPECT_EQ(peaks(Path::parse("UUDUDD")), 2u);
  EXPECT_EQ(peaks(Path()), 0u);
}

TEST(Peaks, EqualsValleysPlusOne) {
  const char* samples[] = {"UD", "UDUD", "UUDUDD", "UUUDUDDDUD", kFixture};
  for (const char* s : samples) {
    Path p = Path::parse(s);
    EXPECT_EQ(peaks(p), valley_vector(p).size() + 1) << s;
  }
}

TEST(Area, Examples) {
  EXPECT_EQ(area(Path::parse(kFixture)), 70);
  EXPECT_EQ(area(Path::parse("UD")), 1);
  EXPECT_EQ(area(Path()), 0);
}

TEST(Area, PyramidIsASquared) {
  for (long long a = 1; a <= 8; ++a) {
    Path p = Path::parse(std::string(a, 'U') + std::string(a, 'D'));
    EXPECT_EQ(area(p), a * a);
  }
}

TEST(Area, AdditiveAtGroundReturns) {
  const char* left[] = {"UD", "UUDD", "UUDUDD"};
  const char* right[] = {"UDUD", "UUUDDD", "UD"};
  for (const char* a : left)
    for (const char* b : right) {
      Path joined = Path::parse(std::string(a) + b);
      EXPECT_EQ(area(joined), area(Path::parse(a)) + area(Path::parse(b)));
    }
}

TEST(LastValley, Examples) {
  EXPECT_FALSE(last_valley_level(Path::parse("UUDD")).has_value());
  EXPECT_EQ(last_valley_level(Path::parse("UDUD")), 0);
  EXPECT_EQ(last_valley_level(Path::parse(kFixture)), 2);
}

TEST(EmptyPath, Conventions) {
  Path p;
  EXPECT_TRUE(is_d_dyck(p, DParam::restricted(-1)));
  EXPECT_EQ(area(p), 0);
  EXPECT_EQ(peaks(p), 0u);
  EXPECT_TRUE(valley_vector(p).empty());
  EXPECT_EQ(p.to_string(), "");
}

TEST(ValleyVertices, PointIndices) {
  auto vs = valley_vertices(Path::parse("UUUDUDDDUD"));
  ASSERT_EQ(vs.size(), 2u);
  EXPECT_EQ(vs[0], (Valley{4, 2}));
  EXPECT_EQ(vs[1], (Valley{8, 0}));
}

}  // namespace
