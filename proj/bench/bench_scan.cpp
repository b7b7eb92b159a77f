// Times the structural scan serial vs parallel and prints the speedup.
// Usage: bench_scan [max_n] [repeats]   (defaults 13 and 3)
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "riccitree/analysis.hpp"

using namespace riccitree;

namespace {

double time_scan(int max_n, bool parallel, int repeats, size_t* records) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<TreeScanRecord> recs = scan_trees(2, max_n, parallel);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs < best) best = secs;
    *records = recs.size();
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 13;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (max_n < 2 || max_n > 14 || repeats < 1) {
    std::fprintf(stderr, "usage: bench_scan [max_n in 2..14] [repeats >= 1]\n");
    return 2;
  }
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  size_t records = 0;
  double serial = time_scan(max_n, false, repeats, &records);
  double parallel = time_scan(max_n, true, repeats, &records);
  std::printf("scan of %zu trees (n <= %d), best of %d runs\n", records, max_n, repeats);
  std::printf("  serial reference : %8.3f s\n", serial);
  std::printf("  parallel (%2d thr): %8.3f s   speedup %.2fx\n", threads, parallel,
              serial / parallel);
  if (threads == 1)
    std::printf("  (one hardware thread available; expect speedup close to 1)\n");
  return 0;
}
