#include <doctest.h>

#include "relxl/errors.hpp"
#include "relxl/girth_checker.hpp"
#include "relxl/link_builder.hpp"
#include "support/fixtures.hpp"

using namespace relxl;

namespace {

Instance make(std::vector<std::string> names, std::vector<Edge> edges, std::vector<VertexSet> parts) {
  DefiningGraph g = DefiningGraph::create(std::move(names), edges);
  SubgraphFamily f = SubgraphFamily::create(g, std::move(parts));
  return {std::move(g), std::move(f)};
}

Instance single_edge(int m) { return make({"a", "b"}, {{0, 1, m}}, {VertexSet::single(0), VertexSet::single(1)}); }

// a-b and a-c both labelled m, so each inter-edge meets the other.
Instance touching(int m) {
  return make({"a", "b", "c"}, {{0, 1, m}, {0, 2, m}},
              {VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)});
}

}  // namespace

TEST_CASE("corner and base angles") {
  CHECK(corner_units(single_edge(2), VertexSet::pair(0, 1)) == 2);
  CHECK(base_units(single_edge(2), VertexSet::pair(0, 1)) == 2);
  CHECK(corner_units(touching(4), VertexSet::pair(0, 1)) == 1);
  CHECK(base_units(touching(4), VertexSet::pair(0, 1)) == 3);
  CHECK(corner_units(touching(4), VertexSet::single(0)) == 2);
}

TEST_CASE("link of the trivial coset") {
  const Instance e = single_edge(4);
  const LinkGraph small = build_link_empty(e);
  // {a} is both a part and an inter-edge vertex, so it appears once.
  CHECK(small.vertex_count() == 3);
  CHECK(small.edge_count() == 2);
  CHECK_FALSE(shortest_embedded_cycle(small).found);

  const Instance fig = relxl::testing::fixture("c3_join.json");
  const LinkGraph link = build_link_empty(fig);
  CHECK(link.vertex_count() == 26);
  CHECK(link.respects_sides());
  CHECK_FALSE(link.truncated());
  int singles = 0;
  for (int v = 0; v < link.vertex_count(); ++v) {
    if (link.vertices()[static_cast<std::size_t>(v)].subset.size() != 1) continue;
    ++singles;
    CHECK(link.neighbours(v).size() == 5);
  }
  CHECK(singles == 8);
  const auto girth = shortest_embedded_cycle(link);
  CHECK(girth.found);
  CHECK(girth.length_units == 16);

  const Instance c3 = relxl::testing::fixture("c3_single.json");
  CHECK(build_link_empty(c3).edge_count() == 0);
}

TEST_CASE("link of a single generator") {
  const Instance e = single_edge(4);
  const LinkGraph link = build_link_single(e, 0, 3);
  // Powers a^-3..a^3 against the one inter-edge.
  CHECK(link.vertex_count() == 7 + 1);
  CHECK(link.truncated());
  CHECK(link.radius() == 3);

  const Instance fig = relxl::testing::fixture("c3_join.json");
  const int a1 = *fig.graph.index_of("a1");
  const LinkGraph big = build_link_single(fig, a1, 4);
  CHECK(big.vertex_count() == 9 + 5);
  for (const LinkEdge& edge : big.edges()) CHECK(edge.length == kRightAngleUnits);
  const auto girth = shortest_embedded_cycle(big);
  CHECK(girth.edge_count() == 4);
  CHECK(girth.length_units == 16);

  const Instance three = make({"s", "x", "y", "z", "w"}, {{0, 1, 4}, {0, 2, 4}, {0, 3, 4}, {0, 4, 3}},
                              {VertexSet::pair(0, 4), VertexSet::single(1), VertexSet::single(2),
                               VertexSet::single(3)});
  const LinkGraph k = build_link_single(three, 0, 2);
  CHECK(k.vertex_count() == 5 + 4);
  CHECK(shortest_embedded_cycle(k).edge_count() == 4);

  CHECK_THROWS_AS(build_link_single(relxl::testing::fixture("c3_single.json"), 0), InputError);
  CHECK_THROWS_AS(build_link_single(e, 0, 0), InputError);
}

TEST_CASE("part oracles") {
  const Instance fig = relxl::testing::fixture("c3_join.json");
  CHECK(make_part_oracle(fig, 0) == nullptr);

  const Instance pair = make({"a", "b", "c"}, {{0, 1, 5}, {1, 2, 4}}, {VertexSet::pair(0, 1), VertexSet::single(2)});
  const auto d = make_part_oracle(pair, 0);
  REQUIRE(d != nullptr);
  CHECK(d->engine() == "dihedral-garside");
  CHECK(make_part_oracle(pair, 1)->engine() == "free");

  const Instance edgeless = make({"a", "b", "c"}, {{1, 2, 4}}, {VertexSet::pair(0, 1), VertexSet::single(2)});
  CHECK(make_part_oracle(edgeless, 0)->engine() == "free");
}

TEST_CASE("developed part links") {
  const Instance lone = make({"s", "t"}, {{0, 1, 4}}, {VertexSet::single(0), VertexSet::single(1)});
  const auto z = make_part_oracle(lone, 0);
  const LinkGraph star = develop_link_part(lone, 0, *z, 4);
  CHECK(star.vertex_count() == 9 + 1);
  CHECK_FALSE(shortest_embedded_cycle(star).found);

  const Instance dihedral = make({"a", "b", "c"}, {{0, 1, 3}, {1, 2, 4}}, {VertexSet::pair(0, 1), VertexSet::single(2)});
  const auto d = make_part_oracle(dihedral, 0);
  const LinkGraph link = develop_link_part(dihedral, 0, *d, 6);
  CHECK(link.respects_sides());
  const auto c = shortest_embedded_cycle(link);
  CHECK(c.found);
  CHECK(c.edge_count() >= 8);

  const Instance free2 = make({"a", "b", "c"}, {{1, 2, 4}}, {VertexSet::pair(0, 1), VertexSet::single(2)});
  const auto f = make_part_oracle(free2, 0);
  CHECK_FALSE(shortest_embedded_cycle(develop_link_part(free2, 0, *f, 4)).found);

  const CoxeterQuotientOracle q(3);
  CHECK_THROWS_AS(develop_link_part(dihedral, 0, q, 3), InputError);
  CHECK_THROWS_AS((void)develop_link_part(dihedral, 0, *d, 12, 1000), ResourceLimitError);
}

TEST_CASE("developed inter-edge links") {
  SUBCASE("m = 2, disjoint") {
    const Instance e = single_edge(2);
    const LinkGraph link = develop_link_interedge(e, inter_edges(e.graph, e.family)[0], 5);
    const auto c = shortest_embedded_cycle(link);
    CHECK(c.edge_count() == 8);
    CHECK(c.length_units == 16);
    CHECK(cycle_length(link, c.cycle) == 16);
  }
  SUBCASE("m = 3, disjoint") {
    const Instance e = single_edge(3);
    const LinkGraph link = develop_link_interedge(e, inter_edges(e.graph, e.family)[0], 7);
    const auto c = shortest_embedded_cycle(link);
    CHECK((!c.found || c.edge_count() >= 12));
  }
  SUBCASE("m = 4, meeting another inter-edge") {
    const Instance e = touching(4);
    const LinkGraph link = develop_link_interedge(e, inter_edges(e.graph, e.family)[0], 9);
    const auto c = shortest_embedded_cycle(link);
    CHECK(c.edge_count() == 16);
    CHECK(c.length_units == 16);
  }
}

TEST_CASE("link graph bookkeeping") {
  LinkGraph g(LinkCase::Empty, "1");
  const int u = g.add_vertex({"u", LinkVertexKind::Subset, "u", {}, 0, false});
  const int v = g.add_vertex({"v", LinkVertexKind::Subset, "v", {}, 1, false});
  CHECK(g.add_vertex({"u", LinkVertexKind::Subset, "u", {}, 0, false}) == u);
  g.add_edge(u, v, 2);
  CHECK_NOTHROW(g.add_edge(v, u, 2));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(u, v, 3), std::logic_error);
  CHECK_THROWS_AS(g.add_edge(u, u, 3), std::logic_error);
  CHECK(g.find("v") == v);
  CHECK_FALSE(g.find("w").has_value());
}
