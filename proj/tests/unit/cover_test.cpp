#include <doctest.h>

#include <algorithm>
#include <array>

#include "cfrag/cover.hpp"
#include "cfrag/errors.hpp"
#include "cfrag/periodic_function.hpp"

using namespace cfrag;

TEST_CASE("default and symmetric covers are valid") {
  CHECK_NOTHROW(CoverConfig::default_cover());
  const auto c = CoverConfig::symmetric(0.6, 0.1);
  const auto chain = c.chain();
  CHECK(std::is_sorted(chain.begin(), chain.end()));
  CHECK(chain.front() > 0.0);
  CHECK(chain.back() < kTwoPi);
}

TEST_CASE("json round trip") {
  const auto c = CoverConfig::default_cover();
  const auto back = CoverConfig::parse(c.to_json().dump());
  for (int j = 1; j <= 3; ++j) {
    CHECK(back.I(j).a() == c.I(j).a());
    CHECK(back.I(j).b() == c.I(j).b());
    CHECK(back.Ihat(j).a() == c.Ihat(j).a());
    CHECK(back.Ihat(j).b() == c.Ihat(j).b());
  }
  CHECK(back.margin == c.margin);
}

TEST_CASE("wrapped intervals are lifted") {
  const auto c = CoverConfig::parse(
      R"({"I":[[0.3,2.6],[2.2,4.7],[4.3,0.7]],"Ihat":[[0.45,2.45],[2.35,4.55],[4.45,0.55]],"margin":0.1})");
  CHECK(c.I(3).b() > kTwoPi);
}

TEST_CASE("malformed input is a geometry error") {
  CHECK_THROWS_AS(CoverConfig::parse("{\"I\": [1,2"), GeometryError);
  CHECK_THROWS_AS(CoverConfig::parse("{}"), GeometryError);
  CHECK_THROWS_AS(CoverConfig::parse(R"({"I":[[0,1]],"Ihat":[[0,1]]})"), GeometryError);
  CHECK_THROWS_AS(CoverConfig::parse(R"({"I":[["a",1],[1,2],[2,3]],"Ihat":[[0,1],[1,2],[2,3]]})"),
                  GeometryError);
}

TEST_CASE("margin must lie in (0, 1/2)") {
  auto j = CoverConfig::default_cover().to_json();
  j["margin"] = 0.5;
  CHECK_THROWS_AS(CoverConfig::from_json(j), GeometryError);
  j["margin"] = 0.0;
  CHECK_THROWS_AS(CoverConfig::from_json(j), GeometryError);
}

TEST_CASE("every relabelling of the cover breaks the ordering chain") {
  const auto c = CoverConfig::default_cover();
  std::array<int, 3> perm{0, 1, 2};
  int rejected = 0;
  while (std::next_permutation(perm.begin(), perm.end())) {
    CoverConfig p = c;
    for (int j = 0; j < 3; ++j) {
      p.intervals[j] = c.intervals[perm[j]];
      p.inner[j] = c.inner[perm[j]];
    }
    CHECK_THROWS_AS(p.validate(), GeometryError);
    ++rejected;
  }
  CHECK(rejected == 5);
}

TEST_CASE("inner interval outside its interval is rejected") {
  auto j = CoverConfig::default_cover().to_json();
  j["Ihat"][0] = {0.2, 2.45};
  CHECK_THROWS_AS(CoverConfig::from_json(j), GeometryError);
}

TEST_CASE("symmetric cover that does not fit is rejected") {
  CHECK_THROWS_AS(CoverConfig::symmetric(1.2, 0.1), GeometryError);
}
