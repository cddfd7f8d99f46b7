#include <random>

#include <benchmark/benchmark.h>

#include "pqc/fourier.hpp"
#include "pqc/lcu.hpp"
#include "pqc/young_basis.hpp"

namespace {

Eigen::VectorXcd random_table(int n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(pqc::factorial(n)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {u(rng), u(rng)};
  return v;
}

void BM_FourierFft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = random_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(pqc::fourier_fft(n, table));
  pqc::TransformStats stats;
  pqc::fourier_fft(n, table, &stats);
  state.counters["ops"] = static_cast<double>(stats.ops);
}
BENCHMARK(BM_FourierFft)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_FourierNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = random_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(pqc::fourier_naive_dense(n, table));
  pqc::TransformStats stats;
  pqc::fourier_naive_dense(n, table, &stats);
  state.counters["ops"] = static_cast<double>(stats.ops);
}
BENCHMARK(BM_FourierNaive)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_BuildSegment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = pqc::random_hermitian_k_local(n, 2, 4, 11);
  const auto p = pqc::plan(f, 1.0, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(pqc::build_segment(f, p.delta_t, p.K));
}
BENCHMARK(BM_BuildSegment)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_MatrixElementSwap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = pqc::young_basis(n, 2);
  const pqc::Partition hook({n - 1, 1});
  const auto& u = basis[pqc::find_basis_vector(basis, hook, 0, 0)];
  const auto& v = basis[pqc::find_basis_vector(basis, hook, 1, 0)];
  const auto f = pqc::random_hermitian_k_local(n, 2, 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(pqc::matrix_element(u.vector, v.vector, f, 1.0, 1e-3));
}
BENCHMARK(BM_MatrixElementSwap)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_YoungBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pqc::young_basis(n, 2));
}
BENCHMARK(BM_YoungBasis)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
