#include <doctest.h>

#include <random>

#include "relxl/girth_checker.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace relxl;

namespace {

LinkGraph ring(int n, int length) {
  LinkGraph g(LinkCase::Empty, "1");
  for (int i = 0; i < n; ++i) g.add_vertex({std::to_string(i), LinkVertexKind::Subset, std::to_string(i), {}, i % 2, false});
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, length);
  return g;
}

Instance make(std::vector<std::string> names, std::vector<Edge> edges, std::vector<VertexSet> parts) {
  DefiningGraph g = DefiningGraph::create(std::move(names), edges);
  SubgraphFamily f = SubgraphFamily::create(g, std::move(parts));
  return {std::move(g), std::move(f)};
}

const LinkCertificate* find_case(const LinkConditionReport& r, LinkCase c) {
  for (const auto& cert : r.certificates)
    if (cert.link_case == c) return &cert;
  return nullptr;
}

}  // namespace

TEST_CASE("weighted girth of small graphs") {
  const auto tri = shortest_embedded_cycle(ring(3, 1));
  CHECK(tri.length_units == 3);
  CHECK_FALSE(tri.passes());

  const auto square = shortest_embedded_cycle(ring(4, 4));
  CHECK(square.length_units == 16);
  CHECK(square.passes());

  CHECK(shortest_embedded_cycle(ring(8, 2)).passes());
  const auto six = shortest_embedded_cycle(ring(6, 2));
  CHECK(six.length_units == 12);
  CHECK_FALSE(six.passes());

  LinkGraph tree(LinkCase::Empty, "1");
  for (int i = 0; i < 4; ++i) tree.add_vertex({std::to_string(i), LinkVertexKind::Subset, "", {}, 0, false});
  tree.add_edge(0, 1, 1);
  tree.add_edge(0, 2, 1);
  tree.add_edge(0, 3, 1);
  CHECK_FALSE(shortest_embedded_cycle(tree).found);
  CHECK(cycle_length(tree, {0, 1, 2}) == std::nullopt);
}

TEST_CASE("girth agrees with exhaustive simple-cycle search") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 3 + trial % 12;
    LinkGraph g(LinkCase::Empty, "1");
    for (int i = 0; i < n; ++i) g.add_vertex({std::to_string(i), LinkVertexKind::Subset, "", {}, 0, false});
    // Exhaustive enumeration explodes on dense graphs, so larger ones stay sparse.
    std::bernoulli_distribution coin(n <= 9 ? 0.15 + 0.1 * (trial % 5) : 0.2);
    std::uniform_int_distribution<int> len(1, 5);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v, len(rng));
    const int brute = relxl::testing::brute_force_girth(g);
    const auto c = shortest_embedded_cycle(g);
    CAPTURE(trial);
    CHECK(c.found == (brute >= 0));
    if (!c.found) continue;
    CHECK(c.length_units == brute);
    CHECK(cycle_length(g, c.cycle) == brute);
    // The witness is simple.
    std::vector<int> sorted = c.cycle;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    const auto through = shortest_cycle_through(g, c.cycle.front());
    CHECK(through.length_units == brute);
  }
}

TEST_CASE("syllable search") {
  SUBCASE("commuting pair: 4 syllables") {
    const auto s = shortest_syllable_cycle(DihedralGroup(2), 16, 2);
    REQUIRE(s.shortest.has_value());
    CHECK(s.syllables() == 4);
    CHECK(s.witness_simple);
    CHECK(s.witness_in_ball);
    CHECK(DihedralGroup(2).normal_form(syllables_to_word(*s.shortest)).is_identity());
  }
  SUBCASE("m = 3 needs 6 syllables") {
    CHECK_FALSE(shortest_syllable_cycle(DihedralGroup(3), 24, 2).shortest.has_value());
    const auto s = shortest_syllable_cycle(DihedralGroup(3), 24, 3);
    CHECK(s.syllables() == 6);
  }
  SUBCASE("m = 4 needs 8 syllables") {
    const auto s = shortest_syllable_cycle(DihedralGroup(4), 16, 4);
    REQUIRE(s.shortest.has_value());
    CHECK(s.syllables() == 8);
    CHECK(s.witness_in_ball);
    CHECK(s.witness_simple);
  }
  SUBCASE("free groups have none") {
    CHECK_FALSE(shortest_syllable_cycle(FreeGroup({"a", "b"}), 12, 3).shortest.has_value());
    CHECK_FALSE(shortest_syllable_cycle(FreeGroup({"a", "b", "c"}), 8, 2).shortest.has_value());
  }
  CHECK(half_syllables_for(2) == 2);
  CHECK(half_syllables_for(1) == 4);
}

TEST_CASE("syllable search agrees with the developed ball") {
  // Shortest cycle through 1 in a materialised development is at least the
  // syllable search result, and equal when the witness lies in the ball.
  for (int m = 2; m <= 3; ++m) {
    const Instance e = make({"a", "b"}, {{0, 1, m}}, {VertexSet::single(0), VertexSet::single(1)});
    const int radius = 3 * m;
    const LinkGraph link = develop_link_interedge(e, inter_edges(e.graph, e.family)[0], radius);
    const int root = *link.find("e:" + DihedralOracle(DihedralGroup(m)).key({}));
    const auto through = shortest_cycle_through(link, root);
    const auto s = shortest_syllable_cycle(DihedralGroup(m), radius, m);
    REQUIRE(through.found);
    REQUIRE(s.shortest.has_value());
    CHECK(through.edge_count() == 2 * s.syllables());
  }
}

TEST_CASE("certify the C~3 join fixture") {
  const Instance fig = relxl::testing::fixture("c3_join.json");
  const LinkConditionReport r = certify_link_condition(fig);
  CHECK(r.passed());
  int case3 = 0;
  for (const LinkCertificate& c : r.certificates) {
    CHECK(c.status != CertStatus::Fail);
    if (c.link_case == LinkCase::InterEdge) {
      ++case3;
      CHECK(c.length_units == 16);
      CHECK(c.minimal_cycle.size() == 16);
      CHECK(c.radius == 32);
    }
    if (c.link_case == LinkCase::Part) CHECK(c.status == CertStatus::TrustedByPaper);
  }
  CHECK(case3 == 16);
  CHECK(find_case(r, LinkCase::Empty)->status == CertStatus::PassComplete);
  CHECK(find_case(r, LinkCase::Single)->length_units == 16);
}

TEST_CASE("certify an isolated commuting inter-edge") {
  const Instance e = make({"a", "b"}, {{0, 1, 2}}, {VertexSet::single(0), VertexSet::single(1)});
  const LinkConditionReport r = certify_link_condition(e);
  CHECK(r.passed());
  const LinkCertificate* c3 = find_case(r, LinkCase::InterEdge);
  REQUIRE(c3 != nullptr);
  CHECK(c3->length_units == 16);
  CHECK(c3->minimal_cycle.size() == 8);
  CHECK(c3->status == CertStatus::PassWithinRadius);
}

TEST_CASE("certify the touching control") {
  const Instance control = relxl::testing::fixture("control_touching_3.json");
  const LinkConditionReport r = certify_link_condition(control);
  CHECK(r.failed());
  int failures = 0;
  for (const LinkCertificate& c : r.certificates) {
    if (c.status != CertStatus::Fail) continue;
    ++failures;
    CHECK(c.link_case == LinkCase::InterEdge);
    CHECK(c.length_units == 12);
    CHECK(c.minimal_cycle.size() == 12);
  }
  CHECK(failures == 2);
}

TEST_CASE("certify parts with exact engines") {
  // A dihedral part, a free part and a singleton part.
  const Instance inst = make({"a", "b", "c", "d", "e"}, {{0, 1, 3}, {1, 2, 4}, {0, 4, 2}},
                             {VertexSet::pair(0, 1), VertexSet::pair(2, 3), VertexSet::single(4)});
  const LinkConditionReport r = certify_link_condition(inst);
  CHECK(r.passed());
  int parts = 0;
  for (const LinkCertificate& c : r.certificates) {
    if (c.link_case != LinkCase::Part) continue;
    ++parts;
    CHECK(c.status != CertStatus::TrustedByPaper);
  }
  CHECK(parts == 3);
}
