#include <doctest.h>

#include <cmath>
#include <numbers>

#include "relxl/errors.hpp"
#include "relxl/coxeter.hpp"
#include "relxl/poset_complex.hpp"
#include "support/fixtures.hpp"

using namespace relxl;

namespace {

Instance single_edge(int m) {
  DefiningGraph g = DefiningGraph::create({"a", "b"}, {{0, 1, m}});
  SubgraphFamily f = SubgraphFamily::create(g, {VertexSet::single(0), VertexSet::single(1)});
  return {std::move(g), std::move(f)};
}

VertexSet named(const Instance& inst, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s = s.with(*inst.graph.index_of(n));
  return s;
}

}  // namespace

TEST_CASE("S^l") {
  const Instance e = single_edge(4);
  const SubsetPoset p = build_s_ell(e);
  CHECK(p.size() == 4);
  const unsigned a_tags = p.tags(VertexSet::single(0));
  CHECK((a_tags & kTagPart) != 0);
  CHECK((a_tags & kTagInterEdgeVertex) != 0);
  CHECK(tag_names(a_tags).size() == 2);

  const Instance fig = relxl::testing::fixture("c3_join.json");
  CHECK(build_s_ell(fig).size() == 27);

  const Instance c3 = relxl::testing::fixture("c3_single.json");
  const SubsetPoset lone = build_s_ell(c3);
  CHECK(lone.size() == 2);
  CHECK(lone.contains(VertexSet{}));
  CHECK(lone.contains(c3.graph.all()));
}

TEST_CASE("S^f and S-bar") {
  const auto one = DefiningGraph::create({"a"}, {});
  CHECK(build_s_f(one).size() == 2);
  CHECK(build_s_f(single_edge(4).graph).size() == 4);

  const Instance c3 = relxl::testing::fixture("c3_single.json");
  const SubsetPoset sf = build_s_f(c3.graph);
  CHECK_FALSE(sf.contains(c3.graph.all()));
  for (const auto& e : sf.elements()) CHECK(is_spherical(c3.graph, e.set));

  CHECK(build_s_bar(single_edge(4)).size() == 4);
  // 27 elements of S^l, plus the 10 subsets of each part that are neither
  // empty, a singleton, nor the part itself.
  const Instance fig = relxl::testing::fixture("c3_join.json");
  CHECK(build_s_bar(fig).size() == 47);
}

TEST_CASE("posets are ordered by size then bits") {
  const Instance fig = relxl::testing::fixture("c3_join.json");
  const SubsetPoset p = build_s_bar(fig);
  for (std::size_t i = 1; i < p.size(); ++i)
    CHECK(BySizeThenBits{}(p.elements()[i - 1].set, p.elements()[i].set));
  SubsetPoset q = p;
  q.remove(VertexSet::single(0));
  CHECK(q.size() == p.size() - 1);
  CHECK_FALSE(q.index_of(VertexSet::single(0)).has_value());
}

TEST_CASE("derived complex") {
  SubsetPoset p;
  p.add(VertexSet{}, kTagEmpty);
  p.add(VertexSet::single(0), kTagPart);
  const DerivedComplex c = derived_complex(p);
  CHECK(c.count(0) == 2);
  CHECK(c.count(1) == 1);
  CHECK(c.count(2) == 0);

  const DerivedComplex e = derived_complex(build_s_ell(single_edge(4)));
  const Chain ab1{VertexSet{}, VertexSet::single(0), VertexSet::pair(0, 1)};
  const Chain ab2{VertexSet{}, VertexSet::single(1), VertexSet::pair(0, 1)};
  CHECK(e.count(2) == 2);
  CHECK(e.contains(ab1));
  CHECK(e.contains(ab2));
  CHECK(e.maximal_simplices().size() == 2);

  CHECK_THROWS_AS((void)derived_complex(build_s_bar(relxl::testing::fixture("c3_join.json")), 10),
                  ResourceLimitError);
}

TEST_CASE("two-dimensionality") {
  SubsetPoset p;
  p.add(VertexSet{}, kTagEmpty);
  p.add(VertexSet::single(0), kTagInterEdgeVertex);
  p.add(VertexSet::pair(0, 1), kTagInterEdge);
  const auto ok = check_two_dimensional(derived_complex(p));
  CHECK(ok.two_dimensional);
  CHECK(ok.longest_chain == 3);

  p.add(VertexSet::first_n(3), kTagPart);
  const auto bad = check_two_dimensional(derived_complex(p));
  CHECK_FALSE(bad.two_dimensional);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->size() == 4);

  const Instance fig = relxl::testing::fixture("c3_join.json");
  CHECK(check_two_dimensional(derived_complex(build_s_ell(fig))).two_dimensional);
}

TEST_CASE("edge lengths") {
  CHECK(value(EdgeLength::One) == 1.0);
  CHECK(value(EdgeLength::Sqrt2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(value(EdgeLength::OnePlusSqrt2) == doctest::Approx(std::tan(3 * std::numbers::pi / 8)));
  CHECK(value(EdgeLength::Sec3PiOver8) == doctest::Approx(1.0 / std::cos(3 * std::numbers::pi / 8)));
}

TEST_CASE("metric on the 2-simplices") {
  const Instance fig = relxl::testing::fixture("c3_join.json");
  const auto simplices = assign_metric(derived_complex(build_s_ell(fig)), fig);
  // 8 [empty < {s} < S_i] and 2 per inter-edge.
  CHECK(simplices.size() == 40);
  for (const MetricSimplex& s : simplices) {
    CHECK(s.angles[0] + s.angles[1] + s.angles[2] == kPiUnits);
    CHECK(s.angles[1] == 4);
    CHECK(s.lengths[0] == EdgeLength::One);
    if (s.kind == SimplexKind::Part) {
      CHECK(s.angles == std::array<int, 3>{2, 4, 2});
      CHECK(s.lengths[2] == EdgeLength::Sqrt2);
    } else {
      // Every inter-edge of the join meets others.
      CHECK(s.kind == SimplexKind::SharedInterEdge);
      CHECK(s.angles == std::array<int, 3>{3, 4, 1});
      CHECK(s.lengths[1] == EdgeLength::OnePlusSqrt2);
      CHECK(s.lengths[2] == EdgeLength::Sec3PiOver8);
    }
    // Right triangle with leg 1 at the angle at the empty set.
    const double alpha = s.angles[0] * std::numbers::pi / 8;
    CHECK(value(s.lengths[1]) == doctest::Approx(std::tan(alpha)));
    CHECK(value(s.lengths[2]) == doctest::Approx(1.0 / std::cos(alpha)));
  }
  const GluingReport glue = check_gluing(simplices);
  CHECK(glue.consistent);
  CHECK_FALSE(glue.shared_edges.empty());

  const Instance iso = single_edge(2);
  const auto disjoint = assign_metric(derived_complex(build_s_ell(iso)), iso);
  int inter = 0;
  for (const auto& s : disjoint) {
    if (s.kind != SimplexKind::DisjointInterEdge) continue;
    ++inter;
    CHECK(s.angles == std::array<int, 3>{2, 4, 2});
  }
  CHECK(inter == 2);
  CHECK(check_gluing(disjoint).consistent);

  MetricSimplex a = simplices.front();
  MetricSimplex b = a;
  b.lengths[0] = EdgeLength::Sqrt2;
  CHECK_FALSE(check_gluing({a, b}).consistent);

  SubsetPoset odd;
  odd.add(VertexSet{}, kTagEmpty);
  odd.add(named(fig, {"a1"}), kTagInterEdgeVertex);
  odd.add(named(fig, {"a1", "b1"}), kTagPartSubset);
  CHECK_THROWS_AS((void)assign_metric(derived_complex(odd), fig), std::invalid_argument);
}

TEST_CASE("retraction") {
  const Instance fig = relxl::testing::fixture("c3_join.json");
  const VertexSet s1 = fig.family.part(0);
  const VertexSet a1 = named(fig, {"a1"});
  const VertexSet a1b1 = named(fig, {"a1", "b1"});
  const VertexSet a1a2 = named(fig, {"a1", "a2"});

  const Chain edge_chain{VertexSet{}, a1, a1a2};
  CHECK(retract_maximal_chain(edge_chain, fig) == edge_chain);
  CHECK(retract_maximal_chain(Chain{VertexSet{}, a1, a1b1, s1}, fig) == Chain{VertexSet{}, a1, s1});
  CHECK_FALSE(retract_maximal_chain(Chain{a1, a1b1}, fig).has_value());

  // A vertex on no inter-edge: the part {x} u {y} with only y joined.
  DefiningGraph g = DefiningGraph::create({"x", "y", "z"}, {{0, 1, 3}, {1, 2, 4}});
  SubgraphFamily f = SubgraphFamily::create(g, {VertexSet::pair(0, 1), VertexSet::single(2)});
  const Instance lone{g, f};
  CHECK(retract_maximal_chain(Chain{VertexSet{}, VertexSet::single(0), VertexSet::pair(0, 1)}, lone) ==
        Chain{VertexSet{}, VertexSet::pair(0, 1)});

  const DerivedComplex bar = derived_complex(build_s_bar(fig));
  const DerivedComplex ell = derived_complex(build_s_ell(fig));
  const RetractionReport r = retraction_map(bar, ell, fig);
  CHECK(r.ok());
  CHECK(r.maximal_images.size() == bar.maximal_simplices().size());
  CHECK(r.problems.empty());

  SUBCASE("target missing a vertex") {
    SubsetPoset smaller = build_s_ell(fig);
    smaller.remove(a1);
    const RetractionReport bad = retraction_map(bar, derived_complex(smaller), fig);
    CHECK_FALSE(bad.lands_in_s_ell);
    CHECK_FALSE(bad.ok());
  }
  SUBCASE("source chain with no image") {
    SubsetPoset extra = build_s_bar(fig);
    extra.add(named(fig, {"b1", "b2"}) | a1, kTagPartSubset);
    const RetractionReport bad = retraction_map(derived_complex(extra), ell, fig);
    CHECK_FALSE(bad.total);
  }
}
