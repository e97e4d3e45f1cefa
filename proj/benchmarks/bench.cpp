#include <benchmark/benchmark.h>

#include "weylcactus/cactus.hpp"
#include "weylcactus/tableaux.hpp"

using namespace weylcactus;

static void BM_build_group(benchmark::State& state, const char* name) {
  DynkinDiagram d = DynkinDiagram::from_name(name);
  for (auto _ : state) {
    WeylGroup g(d);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK_CAPTURE(BM_build_group, A3, "A3");
BENCHMARK_CAPTURE(BM_build_group, B3, "B3");
BENCHMARK_CAPTURE(BM_build_group, D4, "D4");

static void BM_kl_table(benchmark::State& state, const char* name) {
  WeylGroup g(DynkinDiagram::from_name(name));
  for (auto _ : state) {
    KLTable table(g);
    table.build_all();
    benchmark::DoNotOptimize(table.complete());
  }
}
BENCHMARK_CAPTURE(BM_kl_table, A3, "A3");
BENCHMARK_CAPTURE(BM_kl_table, B3, "B3");
BENCHMARK_CAPTURE(BM_kl_table, D4, "D4");

static void BM_cells(benchmark::State& state, const char* name) {
  WeylGroup g(DynkinDiagram::from_name(name));
  KLTable table(g);
  table.build_all();
  for (auto _ : state) {
    CellData cd = compute_cells(g, table);
    benchmark::DoNotOptimize(cd.two_sided.count());
  }
}
BENCHMARK_CAPTURE(BM_cells, A3, "A3");
BENCHMARK_CAPTURE(BM_cells, D4, "D4");

static void BM_wall_crossing_table(benchmark::State& state, const char* name) {
  WeylGroup g(DynkinDiagram::from_name(name));
  KLTable table(g);
  table.build_all();
  CellData cd = compute_cells(g, table);
  for (auto _ : state) {
    CactusContext ctx(g, table, cd);
    WallCrossingTable t = build_wall_crossing_table(ctx);
    benchmark::DoNotOptimize(t.generators.size());
  }
}
BENCHMARK_CAPTURE(BM_wall_crossing_table, A3, "A3");
BENCHMARK_CAPTURE(BM_wall_crossing_table, B3, "B3");

static void BM_verify_relations(benchmark::State& state, const char* name) {
  WeylGroup g(DynkinDiagram::from_name(name));
  KLTable table(g);
  table.build_all();
  CellData cd = compute_cells(g, table);
  CactusContext ctx(g, table, cd);
  WallCrossingTable t = build_wall_crossing_table(ctx);
  for (auto _ : state) {
    VerificationReport report = verify_cactus_relations(g, t);
    benchmark::DoNotOptimize(report.all_pass());
  }
}
BENCHMARK_CAPTURE(BM_verify_relations, D4, "D4");

static void BM_rsk_s5(benchmark::State& state) {
  WeylGroup g(DynkinDiagram::from_name("A4"));
  for (auto _ : state) {
    for (ElementId w = 0; w < g.size(); ++w) {
      RSKPair pair = rsk(weyl_to_oneline(g, w));
      benchmark::DoNotOptimize(pair.p.size());
    }
  }
}
BENCHMARK(BM_rsk_s5);

BENCHMARK_MAIN();
