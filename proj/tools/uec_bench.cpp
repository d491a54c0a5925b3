// Timing comparison of the OpenMP kernels against their serial reference
// implementations. Results must match bitwise; speedup is informational.

#include <chrono>
#include <cstdio>
#include <string>

#include "uec/protocols.hpp"
#include "uec/rates.hpp"
#include "uec/schur.hpp"

using namespace uec;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) set_max_threads(std::stoi(argv[1]));
    std::printf("%-34s %13s %13s   %s\n", "kernel", "serial", "openmp", "speedup");

    {
        const auto p = SchmidtSpectrum::parse("1/2,1/3,1/6");
        GridResult gs, gp;
        const double ts = time_ms([&] { gs = rate_function_grid(p, 0.9, 2.5e-4, Exec::serial); });
        const double tp = time_ms([&] { gp = rate_function_grid(p, 0.9, 2.5e-4, Exec::parallel); });
        report("rate_function_grid d=3", ts, tp,
               gs.min_divergence == gp.min_divergence && gs.argmin == gp.argmin);
    }
    {
        const auto p = SchmidtSpectrum::parse("1/2,1/3,1/6");
        SchurOptions so, po;
        so.exec = Exec::serial;
        po.exec = Exec::parallel;
        so.exact_n_cap = po.exact_n_cap = 200;
        YieldDistribution ds, dp;
        const double ts = time_ms([&] { ds = yield_distribution(150, p, so); });
        const double tp = time_ms([&] { dp = yield_distribution(150, p, po); });
        bool same = ds.entries.size() == dp.entries.size();
        for (std::size_t i = 0; same && i < ds.entries.size(); ++i)
            same = ds.entries[i].probability == dp.entries[i].probability;
        report("yield_distribution d=3 n=150", ts, tp, same);
    }
    {
        const auto dist = yield_distribution(60, SchmidtSpectrum::parse("3/4,1/4"));
        SampleCounts cs, cp;
        const double ts = time_ms([&] { cs = sample_yields(dist, 4'000'000, 99, Exec::serial); });
        const double tp = time_ms([&] { cp = sample_yields(dist, 4'000'000, 99, Exec::parallel); });
        report("sample_yields 4e6 draws", ts, tp, cs.counts == cp.counts);
    }
    {
        BoundSweep ss, sp;
        const double ts = time_ms([&] { ss = dimension_entropy_bound_sweep(3, 70, Exec::serial); });
        const double tp =
            time_ms([&] { sp = dimension_entropy_bound_sweep(3, 70, Exec::parallel); });
        report("entropy_bound_sweep d=3 n<=70", ts, tp,
               ss.min_margin == sp.min_margin && ss.checked == sp.checked);
    }
    return 0;
}
