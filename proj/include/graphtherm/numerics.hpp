#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace graphtherm {

/// splitmix64 mixing step; used to decorrelate user seeds and to derive
/// independent per-trial streams from a master seed.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Maximizes f on [lo, hi] by golden-section search; rel_tol bounds the
/// final bracket width relative to |x|.
GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, double rel_tol,
                                int max_iter = 300);

/// Bisection root finder; f(lo) and f(hi) must differ in sign.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double tol, int max_iter = 400);

std::vector<double> log_spaced(double lo, double hi, int points);

/// Worker count: GRAPHTHERM_THREADS if set, hardware concurrency otherwise.
int worker_count();

/// Runs f(i) for i in 0..n-1 across worker threads. Callers write results
/// into per-index slots, so aggregation order is deterministic.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace graphtherm
