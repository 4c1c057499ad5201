#include <doctest.h>

#include <cmath>

#include "relxl/coxeter.hpp"
#include "relxl/errors.hpp"
#include "support/fixtures.hpp"

using namespace relxl;

namespace {

DefiningGraph triangle(int ab, int bc, int ac) {
  return DefiningGraph::create({"a", "b", "c"}, {{0, 1, ab}, {1, 2, bc}, {0, 2, ac}});
}

}  // namespace

TEST_CASE("coxeter matrix") {
  const auto g = DefiningGraph::create({"a", "b", "c"}, {{0, 1, 4}});
  const auto one = coxeter_matrix(g, VertexSet::single(0));
  CHECK(one.rank() == 1);
  CHECK(one.at(0, 0) == 1);
  CHECK(coxeter_matrix(g, VertexSet::pair(0, 1)).at(0, 1) == 4);
  CHECK(coxeter_matrix(g, VertexSet::pair(0, 2)).at(1, 0) == CoxeterMatrix::kInfinity);
  CHECK_THROWS_AS(coxeter_matrix(g, VertexSet::single(5)), InputError);
}

TEST_CASE("spherical subsets") {
  const auto g = DefiningGraph::create({"a", "b"}, {{0, 1, 4}});
  CHECK(is_spherical(g, VertexSet::single(0)));
  CHECK(is_spherical(g, VertexSet::pair(0, 1)));
  CHECK(enumerate_spherical_subsets(g).size() == 4);

  CHECK(is_spherical(triangle(2, 3, 5), VertexSet::first_n(3)));
  CHECK_FALSE(is_spherical(triangle(3, 3, 3), VertexSet::first_n(3)));

  const auto free3 = DefiningGraph::create({"a", "b", "c"}, {});
  CHECK_FALSE(is_spherical(free3, VertexSet::pair(0, 1)));
  const auto commuting = DefiningGraph::create({"a", "b", "c", "d"},
                                               {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
  CHECK(enumerate_spherical_subsets(commuting).size() == 16);

  const Instance c3 = relxl::testing::fixture("c3_single.json");
  const auto sph = enumerate_spherical_subsets(c3.graph);
  int checked = 0;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const VertexSet t(bits);
    const bool listed = std::find(sph.begin(), sph.end(), t) != sph.end();
    const bool pd = t.empty() || definiteness_oracle(c3.graph, t).kind == Definiteness::PositiveDefinite;
    CHECK(listed == pd);
    if (listed) CHECK(t.size() <= 3);
    ++checked;
  }
  CHECK(checked == 16);
  CHECK(std::find(sph.begin(), sph.end(), c3.graph.all()) == sph.end());
}

TEST_CASE("type classification") {
  const Instance c3 = relxl::testing::fixture("c3_single.json");
  const auto t = classify_type(c3.graph, c3.graph.all());
  CHECK(t.kind == TypeClass::Affine);
  CHECK(t.name() == "~C3");

  const auto path = DefiningGraph::create({"a", "b", "c"}, {{0, 1, 3}, {1, 2, 3}, {0, 2, 2}});
  CHECK(classify_type(path, path.all()).name() == "A3");
  const auto two = DefiningGraph::create({"a", "b"}, {});
  CHECK(classify_type(two, two.all()).name() == "~A1");
  const auto three = DefiningGraph::create({"a", "b", "c"}, {});
  CHECK(classify_type(three, three.all()).kind == TypeClass::Neither);
  const auto apart = DefiningGraph::create({"a", "b"}, {{0, 1, 2}});
  CHECK(classify_type(apart, apart.all()).name() == "A1 x A1");
  CHECK(classify_type(triangle(2, 3, 5), VertexSet::first_n(3)).name() == "H3");
  CHECK(classify_type(triangle(3, 3, 3), VertexSet::first_n(3)).name() == "~A2");

  const auto g2 = DefiningGraph::create({"a", "b", "c"}, {{0, 1, 6}, {1, 2, 3}, {0, 2, 2}});
  CHECK(classify_type(g2, g2.all()).name() == "~G2");
  const auto f4 = DefiningGraph::create({"a", "b", "c", "d"}, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}, {0, 2, 2}, {0, 3, 2}, {1, 3, 2}});
  CHECK(classify_type(f4, f4.all()).name() == "F4");
  const auto d4 = DefiningGraph::create({"a", "b", "c", "d"}, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
  CHECK(classify_type(d4, d4.all()).name() == "D4");
}

TEST_CASE("definiteness oracle") {
  const auto g = DefiningGraph::create({"a", "b"}, {{0, 1, 2}});
  CHECK(definiteness_oracle(g, VertexSet::single(0)).kind == Definiteness::PositiveDefinite);
  CHECK(definiteness_oracle(g, g.all()).kind == Definiteness::PositiveDefinite);

  const auto r = definiteness_oracle(triangle(3, 3, 3), VertexSet::first_n(3));
  CHECK(r.kind == Definiteness::PositiveSemidefinite);
  CHECK(std::abs(r.min_eigenvalue) < 1e-9);

  const auto hyp = definiteness_oracle(triangle(3, 3, 4), VertexSet::first_n(3));
  CHECK(hyp.kind == Definiteness::Indefinite);
  const auto free2 = DefiningGraph::create({"a", "b"}, {});
  CHECK(definiteness_oracle(free2, free2.all()).kind == Definiteness::PositiveSemidefinite);
}
