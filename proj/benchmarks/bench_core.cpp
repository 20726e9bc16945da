#include "ricci_lab/cohomogeneity_charts.hpp"
#include "ricci_lab/construction.hpp"
#include "ricci_lab/oracle.hpp"
#include "ricci_lab/smith.hpp"
#include "ricci_lab/submersion.hpp"
#include "ricci_lab/toric.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ricci_lab;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(10);

static void BM_FreenessScan(benchmark::State& state) {
  const auto a = toric::edge_cut_action();
  for (auto _ : state) benchmark::DoNotOptimize(toric::freeness_scan(a));
}
BENCHMARK(BM_FreenessScan);

static void BM_CurvatureTensors(benchmark::State& state) {
  const submersion::TripleSphereMetric m(submersion::build_f_profile(0.1));
  const Eigen::Vector3d t(0.4, 0.8, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(submersion::curvature_tensors(m, t));
}
BENCHMARK(BM_CurvatureTensors);

static void BM_OneillTerms(benchmark::State& state) {
  const submersion::TripleSphereMetric m(submersion::build_f_profile(0.1));
  const Eigen::MatrixXd k = submersion::edge_cut_killing_fields();
  const Eigen::Vector3d t(0.4, 0.8, 1.1);
  const Eigen::VectorXd x = Eigen::VectorXd::Unit(9, 0);
  for (auto _ : state) benchmark::DoNotOptimize(submersion::oneill_terms(m, k, t, x));
}
BENCHMARK(BM_OneillTerms);

static void BM_OracleRicci(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MetricChart chart = warped::orbit_chart(n, {0.2, 1.8}, warped::warps_of(warped::fubini_study_phi(n, 2.0)));
  const Eigen::VectorXd x = warped::orbit_chart_point(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(curvature::ricci_at(chart, x, 1e-3));
}
BENCHMARK(BM_OracleRicci)->Arg(2)->Arg(3);

static void BM_OracleRichardson(benchmark::State& state) {
  const MetricChart chart = warped::orbit_chart(2, {0.2, 1.8}, warped::warps_of(warped::fubini_study_phi(2, 2.0)));
  const Eigen::VectorXd x = warped::orbit_chart_point(2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(curvature::richardson_sample(chart, x, 3e-3));
}
BENCHMARK(BM_OracleRichardson);

static void BM_CertifyBounds(benchmark::State& state) {
  construction::PsiBuilderConfig cfg;
  const construction::GluedBuild b = construction::assemble_glued_metric(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(construction::certify_bounds(b.metric, 4000));
}
BENCHMARK(BM_CertifyBounds);

BENCHMARK_MAIN();
