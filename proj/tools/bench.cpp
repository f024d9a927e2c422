// Serial vs OpenMP timing for the three hot kernels: the symmetric-group
// projector, the candidate evaluation matrix, and the exact partition sum.
//
//   slipforge-bench [repeats]
//
// SLIPFORGE_THREADS bounds the parallel runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "slipforge/dimension.hpp"
#include "slipforge/invariant_basis.hpp"
#include "slipforge/qstate.hpp"
#include "slipforge/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace slipforge;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto t0 = Clock::now();
        f();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    if (repeats < 1) repeats = 1;

#ifdef _OPENMP
    if (const char* env = std::getenv("SLIPFORGE_THREADS")) {
        int want = std::atoi(env);
        if (want >= 1) omp_set_num_threads(want);
    }
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-34s %12s %12s %8s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

    {
        Rng rng(11);
        std::vector<Cx> w(256);
        for (Cx& v : w) v = rng.complex_gaussian();
        double ts = best_of(repeats, [&] { project_single_serial(2, 8, w); });
        double tp = best_of(repeats, [&] { project_single(2, 8, w); });
        std::printf("%-34s %12.4f %12.4f %8.2f\n", "projector m=2 k=8 (40320 perms)", ts, tp, ts / tp);
    }
    {
        std::vector<int> dims(5, 2);
        auto candidates = slip_basis(dims, 4, 1);
        std::vector<QuditState> states;
        for (uint64_t s = 0; s < 200; ++s)
            states.push_back(random_state(dims, Rng::derive(3, s)).normalized());
        double ts = best_of(repeats, [&] { build_evaluation_matrix_serial(candidates, states); });
        double tp = best_of(repeats, [&] { build_evaluation_matrix(candidates, states); });
        std::printf("%-34s %12.4f %12.4f %8.2f\n", "eval matrix 5 qubits k=4 x200", ts, tp, ts / tp);
    }
    {
        double ts = best_of(repeats, [&] { slip_dim_serial(18, 10, 2); });
        double tp = best_of(repeats, [&] { slip_dim(18, 10, 2); });
        std::printf("%-34s %12.4f %12.4f %8.2f\n", "partition sum k=18 n=10", ts, tp, ts / tp);
    }
    return 0;
}
