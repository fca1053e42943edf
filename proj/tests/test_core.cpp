#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "veccomp/multi_index.hpp"
#include "veccomp/weight_function.hpp"

using namespace veccomp;
using namespace veccomp::testing;

TEST_CASE("multi-index basics") {
  MultiIndex a{1, 2};
  MultiIndex b{0, 3};
  CHECK((a + b) == MultiIndex{1, 5});
  CHECK(a.checked_sub(MultiIndex{0, 2}) == MultiIndex{1, 0});
  CHECK_FALSE(a.checked_sub(b).has_value());
  CHECK(a * 3 == MultiIndex{3, 6});
  CHECK(MultiIndex::zeros(3).is_zero());
  CHECK(a.coord_sum() == 3);
  CHECK_THROWS_AS((MultiIndex{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS((void)(a + MultiIndex{1, 1, 1}), std::invalid_argument);

  // canonical order is lexicographic
  CHECK(MultiIndex{0, 5} < MultiIndex{1, 0});
  CHECK(MultiIndex{1, 0} < MultiIndex{1, 1});
}

TEST_CASE("parse weight functions from JSON") {
  SUBCASE("indicator with delannoy steps") {
    auto f = WeightFunction::parse(nlohmann::json::parse(
        R"({"dim":2,"kind":"indicator","set":[[1,0],[0,1],[1,1]]})"));
    CHECK(f.eval(MultiIndex{1, 0}) == 1);
    CHECK(f.eval(MultiIndex{0, 1}) == 1);
    CHECK(f.eval(MultiIndex{1, 1}) == 1);
    CHECK(f.eval(MultiIndex{2, 1}) == 0);
    CHECK(f.eval(MultiIndex{0, 0}) == 0);
  }
  SUBCASE("explicit table with a doubled color") {
    auto f = WeightFunction::parse(nlohmann::json::parse(
        R"({"dim":2,"kind":"explicit","entries":[{"s":[1,1],"w":2},{"s":[1,0],"w":1},{"s":[0,1],"w":1}]})"));
    CHECK(f.eval(MultiIndex{1, 1}) == 2);
    CHECK(f.eval(MultiIndex{1, 0}) == 1);
    CHECK(f.eval(MultiIndex{2, 2}) == 0);
  }
  SUBCASE("product weight") {
    auto f = WeightFunction::parse(nlohmann::json::parse(R"({"dim":3,"kind":"product"})"));
    CHECK(f.eval(MultiIndex{2, 3, 1}) == 6);
    CHECK(f.eval(MultiIndex{2, 0, 1}) == 0);
  }
  SUBCASE("malformed specs are rejected") {
    CHECK_THROWS(WeightFunction::parse(nlohmann::json::parse(R"({"kind":"product"})")));
    CHECK_THROWS(WeightFunction::parse(nlohmann::json::parse(
        R"({"dim":2,"kind":"explicit","entries":[{"s":[1,1],"w":0}]})")));
    CHECK_THROWS(WeightFunction::parse(nlohmann::json::parse(
        R"({"dim":2,"kind":"explicit","entries":[{"s":[1],"w":1}]})")));
    CHECK_THROWS(WeightFunction::parse(nlohmann::json::parse(
        R"({"dim":2,"kind":"indicator"})")));
    CHECK_THROWS(WeightFunction::parse(nlohmann::json::parse(
        R"({"dim":2,"kind":"nope"})")));
  }
}

TEST_CASE("parse then re-serialize is the identity on canonical specs") {
  const char* specs[] = {
      R"({"dim":2,"kind":"indicator","set":[[0,1],[1,0],[1,1]]})",
      R"({"dim":2,"kind":"explicit","entries":[{"s":[0,1],"w":1},{"s":[1,0],"w":1},{"s":[1,1],"w":2}]})",
      R"({"dim":3,"kind":"product"})",
  };
  for (const char* s : specs) {
    nlohmann::ordered_json spec = nlohmann::ordered_json::parse(s);
    auto f = WeightFunction::parse(spec);
    CHECK(f.to_json() == spec);
  }
}

TEST_CASE("support within a box") {
  SUBCASE("intro weights, box (1,2)") {
    auto sup = intro_weights().support_within(MultiIndex{1, 2});
    CHECK(sup.parts() ==
          std::vector<MultiIndex>{MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}});
    CHECK_FALSE(sup.includes_zero);
  }
  SUBCASE("product weight drops zero coordinates") {
    auto sup = WeightFunction::product(2).support_within(MultiIndex{2, 2});
    CHECK(sup.parts() == std::vector<MultiIndex>{MultiIndex{1, 1}, MultiIndex{1, 2},
                                                 MultiIndex{2, 1}, MultiIndex{2, 2}});
    CHECK(sup.entries.back().weight == 4);
  }
  SUBCASE("zero box keeps only the zero part") {
    auto with_zero = divis_weights().support_within(MultiIndex{0, 0});
    CHECK(with_zero.includes_zero);
    CHECK(with_zero.parts() == std::vector<MultiIndex>{MultiIndex{0, 0}});
    auto without = intro_weights().support_within(MultiIndex{0, 0});
    CHECK_FALSE(without.includes_zero);
    CHECK(without.parts().empty());
  }
}

TEST_CASE("support is monotone in the box") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coord(0, 5);
  for (const auto& fixture : standard_fixtures()) {
    const int dim = fixture.f.dim();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> small(static_cast<size_t>(dim)), big(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        small[static_cast<size_t>(i)] = coord(rng);
        big[static_cast<size_t>(i)] = small[static_cast<size_t>(i)] + coord(rng) % 3;
      }
      auto sub = fixture.f.support_within(MultiIndex(small)).parts();
      auto super = fixture.f.support_within(MultiIndex(big)).parts();
      for (const auto& p : sub)
        CHECK(std::find(super.begin(), super.end(), p) != super.end());
    }
  }
}

TEST_CASE("zeroed parts disappear from evaluation and support") {
  auto f = five_step_weights().with_zeroed(MultiIndex{1, 1});
  CHECK(f.eval(MultiIndex{1, 1}) == 0);
  CHECK(f.eval(MultiIndex{1, 2}) == 1);
  auto parts = f.support_within(MultiIndex{3, 3}).parts();
  CHECK(std::find(parts.begin(), parts.end(), MultiIndex{1, 1}) == parts.end());
}
