// placeholder; replaced by the real benchmark after the library settles
#include <benchmark/benchmark.h>
BENCHMARK_MAIN();
