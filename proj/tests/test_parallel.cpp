#include <doctest.h>

#include "testutil.hpp"
#include "uec/protocols.hpp"
#include "uec/rates.hpp"
#include "uec/schur.hpp"

using namespace uec;

// Every parallel kernel must reproduce its serial reference bit for bit:
// parallel regions only fill independent slots, reductions run serially
// in index order.

TEST_CASE("yield distribution: serial and parallel agree bitwise") {
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    for (auto path : {SchurOptions::Path::exact, SchurOptions::Path::floating}) {
        SchurOptions serial, parallel;
        serial.exec = Exec::serial;
        serial.path = path;
        parallel.exec = Exec::parallel;
        parallel.path = path;
        const auto ds = yield_distribution(80, p, serial);
        const auto dp = yield_distribution(80, p, parallel);
        REQUIRE(ds.entries.size() == dp.entries.size());
        for (std::size_t i = 0; i < ds.entries.size(); ++i) {
            CHECK(ds.entries[i].probability == dp.entries[i].probability);
            CHECK(ds.entries[i].log2_probability == dp.entries[i].log2_probability);
            CHECK(ds.entries[i].yield_bits == dp.entries[i].yield_bits);
        }
    }
}

TEST_CASE("grid oracle: serial and parallel agree bitwise") {
    for (const char* spectrum : {"3/4,1/4", "1/2,1/3,1/6"}) {
        const auto p = SchmidtSpectrum::parse(spectrum);
        for (double R : {0.3, 0.9}) {
            const auto gs = rate_function_grid(p, R, 1e-3, Exec::serial);
            const auto gp = rate_function_grid(p, R, 1e-3, Exec::parallel);
            CHECK(gs.min_divergence == gp.min_divergence);
            REQUIRE(gs.argmin.size() == gp.argmin.size());
            for (std::size_t i = 0; i < gs.argmin.size(); ++i)
                CHECK(gs.argmin[i] == gp.argmin[i]);
        }
    }
}

TEST_CASE("bound sweep: serial and parallel agree bitwise") {
    const auto ss = dimension_entropy_bound_sweep(2, 40, Exec::serial);
    const auto sp = dimension_entropy_bound_sweep(2, 40, Exec::parallel);
    CHECK(ss.min_margin == sp.min_margin);
    CHECK(ss.worst.parts == sp.worst.parts);
    CHECK(ss.checked == sp.checked);
}

TEST_CASE("sampling: stream decomposition is thread-count independent") {
    const auto dist = yield_distribution(10, SchmidtSpectrum::parse("3/4,1/4"));
    const auto a = sample_yields(dist, 50000, 7, Exec::serial);
    const auto b = sample_yields(dist, 50000, 7, Exec::parallel);
    CHECK(a.counts == b.counts);
    const auto c = sample_yields(dist, 50000, 8, Exec::parallel);
    CHECK(a.counts != c.counts);  // seed matters
}

TEST_CASE("thread cap round trip") {
    const int before = max_threads();
    set_max_threads(2);
    CHECK(max_threads() <= 2);
    set_max_threads(0);
    CHECK(max_threads() == before);
}
