#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "polyspline/complex.hpp"
#include "polyspline/hilbert.hpp"
#include "polyspline/oracle.hpp"
#include "polyspline/xi_graph.hpp"

using namespace polyspline;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(POLYSPLINE_FIXTURE_DIR) + "/" + name + ".json");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string& honeycomb_text() {
  static const std::string text = slurp("honeycomb");
  return text;
}

const Complex& honeycomb() {
  static const Complex c = parse_complex(honeycomb_text());
  return c;
}

void BM_ParseHoneycomb(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_complex(honeycomb_text()));
}
BENCHMARK(BM_ParseHoneycomb);

void BM_AllCycles(benchmark::State& state) {
  const Complex& c = honeycomb();
  for (auto _ : state) benchmark::DoNotOptimize(all_cycles(c));
}
BENCHMARK(BM_AllCycles);

void BM_PlanarHP(benchmark::State& state) {
  const Complex& c = honeycomb();
  for (auto _ : state) benchmark::DoNotOptimize(planar_hp(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PlanarHP)->Arg(1)->Arg(4);

void BM_OracleRank(benchmark::State& state) {
  const Complex& c = honeycomb();
  const int r = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spline_dim_oracle(c, r, k));
  const ExactMatrix m = build_phi(c, r, k);
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(BM_OracleRank)->Args({0, 4})->Args({1, 6})->Args({2, 8})->Unit(benchmark::kMillisecond);

void BM_CValue(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 2; n <= 8; ++n)
      for (int r = 0; r <= 12; ++r) benchmark::DoNotOptimize(c_value(n, r));
}
BENCHMARK(BM_CValue);

} // namespace

BENCHMARK_MAIN();
