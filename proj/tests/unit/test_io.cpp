#include <doctest.h>

#include <random>
#include <set>

#include "relxl/errors.hpp"
#include "relxl/io.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace relxl;

TEST_CASE("fixtures parse") {
  const Instance c3 = relxl::testing::fixture("c3_single.json");
  CHECK(c3.graph.size() == 4);
  CHECK(c3.graph.edges().size() == 6);
  std::multiset<int> labels;
  for (const Edge& e : c3.graph.edges()) labels.insert(e.label);
  CHECK(labels == std::multiset<int>{2, 2, 2, 3, 4, 4});

  const Instance fig = relxl::testing::fixture("c3_join.json");
  CHECK(fig.graph.size() == 8);
  CHECK(fig.graph.edges().size() == 6 + 6 + 16);
  CHECK(fig.family.count() == 2);

  const Instance one = parse_instance(R"({"vertices": ["a"], "edges": [], "family": [["a"]]})");
  CHECK(one.graph.size() == 1);
  CHECK(one.family.count() == 1);
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(relxl::testing::fixture("malformed.json"), InputError);
  CHECK_THROWS_AS(parse_instance("{"), InputError);
  CHECK_THROWS_AS(parse_instance("[]"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a"], "edges": [], "family": [["a"]], "x": 1})"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a"], "edges": []})"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "z", "m": 3}],
                                     "family": [["a", "b"]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3.5}],
                                     "family": [["a", "b"]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a", "b"], "edges": [], "family": [["a"]]})"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a", "b"], "edges": [], "family": [["a", "a"], ["b"]]})"),
                  InputError);
  CHECK_THROWS_AS(load_instance("/nonexistent/graph.json"), InputError);
}

TEST_CASE("serialisation round trip") {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Instance inst = relxl::testing::random_instance(rng, 1 + i % 9, 7, 0.4);
    const Instance back = parse_instance(serialize_instance(inst));
    CHECK(back.graph == inst.graph);
    CHECK(back.family == inst.family);
  }
}
