#include <benchmark/benchmark.h>

#include "relxl/coxeter.hpp"
#include "relxl/dihedral_garside.hpp"
#include "relxl/girth_checker.hpp"
#include "relxl/link_builder.hpp"

namespace {

relxl::Instance c3_join() {
  std::vector<std::string> names = {"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"};
  std::vector<relxl::Edge> edges;
  for (int base : {0, 4}) {
    edges.push_back({base + 0, base + 1, 3});
    edges.push_back({base + 0, base + 2, 4});
    edges.push_back({base + 0, base + 3, 2});
    edges.push_back({base + 1, base + 2, 2});
    edges.push_back({base + 1, base + 3, 4});
    edges.push_back({base + 2, base + 3, 2});
  }
  for (int u = 0; u < 4; ++u) {
    for (int v = 4; v < 8; ++v) edges.push_back({u, v, 4});
  }
  auto g = relxl::DefiningGraph::create(names, edges);
  auto f = relxl::SubgraphFamily::create(g, {relxl::VertexSet(0x0F), relxl::VertexSet(0xF0)});
  return {g, f};
}

void BM_NormalForm(benchmark::State& state) {
  const relxl::DihedralGroup group(static_cast<int>(state.range(0)));
  relxl::Word w;
  for (int i = 0; i < 64; ++i) w.push_back({(i * 7) % 2, (i % 3) == 0});
  for (auto _ : state) benchmark::DoNotOptimize(group.normal_form(w));
}
BENCHMARK(BM_NormalForm)->Arg(3)->Arg(4)->Arg(5);

void BM_Ball(benchmark::State& state) {
  const relxl::DihedralGroup group(3);
  for (auto _ : state) benchmark::DoNotOptimize(group.ball(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Ball)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SyllableSearch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const relxl::DihedralGroup group(m);
  for (auto _ : state) benchmark::DoNotOptimize(relxl::shortest_syllable_cycle(group, 8 * m, 4));
}
BENCHMARK(BM_SyllableSearch)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CertifyC3Join(benchmark::State& state) {
  const auto inst = c3_join();
  for (auto _ : state) benchmark::DoNotOptimize(relxl::certify_link_condition(inst));
}
BENCHMARK(BM_CertifyC3Join)->Unit(benchmark::kMillisecond);

void BM_SphericalSubsets(benchmark::State& state) {
  const auto inst = c3_join();
  for (auto _ : state) benchmark::DoNotOptimize(relxl::enumerate_spherical_subsets(inst.graph));
}
BENCHMARK(BM_SphericalSubsets);

// Weighted girth of a materialised inter-edge development (m = 4, the edge
// meets another inter-edge so every link edge is pi/8).
void BM_DevelopedGirth(benchmark::State& state) {
  auto g = relxl::DefiningGraph::create({"a", "b", "c"}, {{0, 1, 4}, {0, 2, 4}});
  auto f = relxl::SubgraphFamily::create(
      g, {relxl::VertexSet::single(0), relxl::VertexSet::single(1), relxl::VertexSet::single(2)});
  const relxl::Instance inst{g, f};
  const auto link = relxl::develop_link_interedge(inst, relxl::inter_edges(g, f)[0], static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relxl::shortest_embedded_cycle(link));
  state.counters["vertices"] = link.vertex_count();
}
BENCHMARK(BM_DevelopedGirth)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
