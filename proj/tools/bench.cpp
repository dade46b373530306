// Benchmark comparing the serial reference kernels against the OpenMP
// variants on mid-size instances. Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <functional>

#include "qgm/examples.hpp"
#include "qgm/kernels.hpp"
#include "qgm/matroid.hpp"

using namespace qgm;

namespace {

double time_ms(const std::function<void()>& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   openmp %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled\n");
#else
    std::printf("OpenMP not enabled; both columns run the serial code\n");
#endif

    // bracelet adjacency on (K_8, empty bias)
    {
        auto bg = make_biased_graph(examples::complete_graph(8), {});
        auto nodes = enumerate_bracelets(bg);
        std::vector<std::pair<int, int>> a, b;
        double ts = time_ms([&] { a = kernels::bracelet_adjacency_serial(bg, nodes); });
        double tp = time_ms([&] { b = kernels::bracelet_adjacency_parallel(bg, nodes); });
        if (a != b) std::printf("MISMATCH in bracelet adjacency!\n");
        row("bracelet_adjacency(K8)", ts, tp);
    }

    // dependence + rank tables on the K_6 frame family (15 edges)
    {
        auto t = examples::complete_empty_bias(6, CycleClass::Frame);
        auto cf = circuits(t);
        auto ms = cf.masks();
        int n = cf.ground_size;
        std::vector<char> ds, dp;
        double ts = time_ms([&] { ds = kernels::dependence_table_serial(ms, n); });
        double tp = time_ms([&] { dp = kernels::dependence_table_parallel(ms, n); });
        if (ds != dp) std::printf("MISMATCH in dependence table!\n");
        row("dependence_table(K6 frame)", ts, tp);

        std::vector<std::uint8_t> rs, rp;
        ts = time_ms([&] { rs = kernels::rank_table_from_dependence_serial(ds, n); });
        tp = time_ms([&] { rp = kernels::rank_table_from_dependence_parallel(ds, n); });
        if (rs != rp) std::printf("MISMATCH in rank table!\n");
        row("rank_table(K6 frame)", ts, tp);

        auto el_s = kernels::elimination_scan_serial(ms, ds);
        auto el_p = kernels::elimination_scan_parallel(ms, ds);
        if (el_s.has_value() != el_p.has_value()) std::printf("MISMATCH in elimination!\n");
        ts = time_ms([&] { (void)kernels::elimination_scan_serial(ms, ds); });
        tp = time_ms([&] { (void)kernels::elimination_scan_parallel(ms, ds); });
        row("elimination_scan(K6 frame)", ts, tp);
    }

    // Ingleton quadruple scan on graphic K_4 (exhaustive, 16.7M quadruples)
    {
        auto k4 = examples::complete_graph(4);
        auto t = make_tripartition(k4, enumerate_cycles(k4), {}, {});
        RankOracle oracle{t};
        auto table = kernels::rank_table_from_oracle(oracle, 6);
        kernels::IngletonScan a, b;
        double ts = time_ms([&] { a = kernels::ingleton_scan_serial(table, 6, 30'000'000, 1); });
        double tp = time_ms([&] { b = kernels::ingleton_scan_parallel(table, 6, 30'000'000, 1); });
        if (a.min_value != b.min_value || a.argmin != b.argmin) {
            std::printf("MISMATCH in ingleton scan!\n");
        }
        row("ingleton_scan(K4 graphic)", ts, tp);
    }

    // rank table straight from the closed-form oracle, K_5 parity (10 edges)
    {
        auto t = examples::four_cycle_parity_complete(5);
        RankOracle oracle{t};
        std::vector<std::uint8_t> rs, rp;
        double ts = time_ms([&] { rs = kernels::rank_table_from_oracle_serial(oracle, 10); });
        double tp = time_ms([&] { rp = kernels::rank_table_from_oracle_parallel(oracle, 10); });
        if (rs != rp) std::printf("MISMATCH in oracle rank table!\n");
        row("oracle_rank_table(K5 parity)", ts, tp);
    }
    return 0;
}
