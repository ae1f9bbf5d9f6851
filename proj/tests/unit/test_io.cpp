#include <doctest.h>

#include "helpers.hpp"
#include "neurobetti/errors.hpp"
#include "neurobetti/io.hpp"

using namespace neurobetti;
using testing_helpers::key_code;
using testing_helpers::S;

namespace {

BettiTable key_table() {
  const PiercingOrder order{{{0, 0, 0}, {1, 0, S({1})}, {2, 0, S({2})}, {3, 0, S({1, 2})}, {4, S({3}), S({2, 3})}}};
  return multigraded_betti_closed(piercing_profile(order));
}

}  // namespace

TEST_CASE("betti json layout") {
  const std::string text = betti_to_json(key_table()).dump();
  CHECK(text ==
        R"({"n":5,"total":[1,5,6,2],"graded":[[0,0,1],[1,2,5],[2,3,6],[3,4,2]],)"
        R"("multigraded":[[0,0,0,1],[1,1,1,1],[1,2,0,4],[2,2,1,2],[2,3,0,4],[3,3,1,1],[3,4,0,1]]})");
}

TEST_CASE("betti json round trip") {
  const ParsedBetti parsed = betti_from_json(nlohmann::json::parse(betti_to_json(key_table()).dump()));
  REQUIRE(parsed.table);
  CHECK(*parsed.table == key_table());
  CHECK(parsed.graded == key_table().graded());

  const ParsedBetti graded_only = betti_from_json(nlohmann::json::parse(R"({"n":2,"graded":[[0,0,1],[1,2,1]]})"));
  CHECK_FALSE(graded_only.table);
  CHECK(graded_only.graded.at({1, 2}) == 1);

  CHECK_THROWS_AS(betti_from_json(nlohmann::json::parse("[]")), InputError);
  CHECK_THROWS_AS(betti_from_json(nlohmann::json::parse(R"({"n":2})")), InputError);
  CHECK_THROWS_AS(betti_from_json(nlohmann::json::parse(R"({"n":2,"graded":[[1,2,-1]]})")), InputError);
  CHECK_THROWS_AS(betti_from_json(nlohmann::json::parse(R"({"n":2,"multigraded":[[1,2,0]]})")), InputError);
}

TEST_CASE("betti triangle") {
  CHECK(render_betti_triangle(key_table().graded()) ==
        "       0 1 2 3\n"
        "total: 1 5 6 2\n"
        "    0: 1 . . .\n"
        "    1: . 5 6 2\n");
}

TEST_CASE("profile rendering") {
  const PiercingProfile p = invert_multigraded(key_table());
  CHECK(render_marginals(p) == "j0=1 j1=3 j2=1");
  CHECK(render_profile_table(p) == "j00=1 j10=2 j11=1 j20=1");
  CHECK(profile_to_json(p).dump() == R"({"n":5,"jk":[1,3,1,0,0],"jkl":[[0,0,1],[1,0,2],[1,1,1],[2,0,1]]})");
}

TEST_CASE("canonical form json") {
  CHECK(cf_to_json(canonical_form(key_code())).dump() == R"j(["x1*x3","x1*x5","x3*x4","x4*x5","x5*(1-x3)"])j");
}

TEST_CASE("linear strand lists") {
  CHECK(parse_linear_strand("5 6 2 0") == GradedBetti{{{1, 2}, 5}, {{2, 3}, 6}, {{3, 4}, 2}});
  CHECK(parse_linear_strand("5,6, 2") == GradedBetti{{{1, 2}, 5}, {{2, 3}, 6}, {{3, 4}, 2}});
  CHECK(parse_linear_strand("").empty());
  CHECK_THROWS_AS(parse_linear_strand("5 x"), InputError);
  CHECK_THROWS_AS(parse_linear_strand("-1"), InputError);
}
