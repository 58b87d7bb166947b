// Times the OpenMP Monte Carlo kernel against the serial reference on a few
// workloads and checks that both return the same estimate.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include <CLI11.hpp>

#include "zolab/cli.hpp"

using namespace zolab;

namespace {

struct Workload {
    const char* name;
    ProbSeq seq;
    int n;
    Target target;
    ModelKind kind;
};

template <class F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parallel vs serial Monte Carlo timing"};
    std::uint64_t trials = 20000, seed = 1;
    int threads = 0, repeats = 3;
    app.add_option("--trials", trials, "trials per workload");
    app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
    app.add_option("--repeats", repeats, "timing repetitions, best is reported")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "master seed");
    CLI11_PARSE(app, argc, argv);
    if (threads > 0) omp_set_num_threads(threads);

    const std::vector<Workload> workloads{
        {"triangle_native line n=40", make_constant(0.1), 40, triangle_native_target(), ModelKind::Line},
        {"triangle_native circle n=162", cli::resolve_sequence("thm6_half"), 162, triangle_native_target(),
         ModelKind::Circle},
        {"fo triangle line n=12", make_constant(0.3), 12, library_target("triangle"), ModelKind::Line},
        {"extension_A1 line n=30", make_constant(0.5), 30, library_target("extension_Ak", 1), ModelKind::Line},
    };

    std::printf("threads=%d trials=%llu\n", omp_get_max_threads(), static_cast<unsigned long long>(trials));
    std::printf("%-32s %12s %12s %8s %s\n", "workload", "serial_s", "parallel_s", "speedup", "match");
    bool all_match = true;
    for (const auto& w : workloads) {
        EstimateResult serial, parallel;
        double best_serial = 1e300, best_parallel = 1e300;
        for (int r = 0; r < repeats; ++r) {
            best_serial = std::min(best_serial, seconds([&] {
                serial = mc_probability_serial(w.seq, w.n, w.target, w.kind, trials, seed);
            }));
            best_parallel = std::min(best_parallel, seconds([&] {
                parallel = mc_probability(w.seq, w.n, w.target, w.kind, trials, seed);
            }));
        }
        const bool match = serial.estimate == parallel.estimate;
        all_match = all_match && match;
        std::printf("%-32s %12.4f %12.4f %8.2f %s\n", w.name, best_serial, best_parallel, best_serial / best_parallel,
                    match ? "yes" : "NO");
    }
    return all_match ? 0 : 1;
}
