// Parallel kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>

#include "hdgcn/data_io.hpp"
#include "hdgcn/kernels.hpp"

using namespace hdgcn;

namespace {

Dataset bench_graph(Index n_per_class) {
  BlobSpec spec;
  spec.n_per_class = n_per_class;
  spec.num_classes = 4;
  spec.dim = 64;
  spec.intra_edge_prob = 0.02;
  spec.inter_edge_prob = 0.002;
  return make_synthetic_blobs(spec);
}

Matrix random_dense(Index rows, Index cols) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  return m;
}

void BM_SpmmParallel(benchmark::State& state) {
  const auto d = bench_graph(state.range(0));
  const auto adj = normalize_adjacency(d.graph);
  const Matrix x = random_dense(d.num_nodes(), 64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::spmm(adj.matrix, x));
}

void BM_SpmmSerial(benchmark::State& state) {
  const auto d = bench_graph(state.range(0));
  const auto adj = normalize_adjacency(d.graph);
  const Matrix x = random_dense(d.num_nodes(), 64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::spmm(adj.matrix, x));
}

void BM_GaussianKernelParallel(benchmark::State& state) {
  const Matrix x = random_dense(state.range(0), 32);
  for (auto _ : state) {
    kernels::FeatureIndex index(x);
    benchmark::DoNotOptimize(kernels::gaussian_kernel_dense(index, 4.0));
  }
}

void BM_GaussianKernelSerial(benchmark::State& state) {
  const Matrix x = random_dense(state.range(0), 32);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::gaussian_kernel_dense(x, 4.0));
}

void BM_LaplacianParallel(benchmark::State& state) {
  const auto d = bench_graph(state.range(0));
  const std::vector<double> w(static_cast<std::size_t>(d.graph.num_entries()), 0.5);
  const Matrix f = random_dense(d.num_nodes(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weighted_laplacian_apply(d.graph, w, f));
}

}  // namespace

BENCHMARK(BM_SpmmParallel)->Arg(250)->Arg(1000);
BENCHMARK(BM_SpmmSerial)->Arg(250)->Arg(1000);
BENCHMARK(BM_GaussianKernelParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_GaussianKernelSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_LaplacianParallel)->Arg(250)->Arg(1000);

BENCHMARK_MAIN();
