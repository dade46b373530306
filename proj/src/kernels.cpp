#include "qgm/kernels.hpp"

#include <algorithm>

#include "qgm/matroid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qgm::kernels {

namespace {

constexpr int kMaxTableBits = 25;

void check_table_bits(int n) {
    if (n < 0 || n > kMaxTableBits) {
        throw Error(ErrorKind::CapExceeded,
                    "subset tables capped at " + std::to_string(kMaxTableBits) + " elements");
    }
}

// splitmix64; every sampled quadruple is a pure function of (seed, index)
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

// --- bracelet adjacency ---

std::vector<std::pair<int, int>> bracelet_adjacency_serial(const BiasedGraph& bg,
                                                           const std::vector<Bracelet>& nodes) {
    std::vector<std::pair<int, int>> out;
    int n = static_cast<int>(nodes.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (bracelet_union_beta(bg, nodes[i], nodes[j]) == 3) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> bracelet_adjacency_parallel(const BiasedGraph& bg,
                                                             const std::vector<Bracelet>& nodes) {
    int n = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> row(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (bracelet_union_beta(bg, nodes[i], nodes[j]) == 3) row[i].push_back(j);
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j : row[i]) out.emplace_back(i, j);
    }
    return out;
}

std::vector<std::pair<int, int>> bracelet_adjacency(const BiasedGraph& bg,
                                                    const std::vector<Bracelet>& nodes) {
#ifdef _OPENMP
    return bracelet_adjacency_parallel(bg, nodes);
#else
    return bracelet_adjacency_serial(bg, nodes);
#endif
}

// --- dependence table ---

std::vector<char> dependence_table_serial(const std::vector<std::uint64_t>& circuit_masks,
                                          int n) {
    check_table_bits(n);
    std::size_t size = std::size_t(1) << n;
    std::vector<char> dep(size, 0);
    for (auto cm : circuit_masks) dep[cm] = 1;
    for (int b = 0; b < n; ++b) {
        std::uint64_t bit = std::uint64_t(1) << b;
        for (std::uint64_t m = 0; m < size; ++m) {
            if ((m & bit) && dep[m ^ bit]) dep[m] = 1;
        }
    }
    return dep;
}

std::vector<char> dependence_table_parallel(const std::vector<std::uint64_t>& circuit_masks,
                                            int n) {
    check_table_bits(n);
    std::size_t size = std::size_t(1) << n;
    std::vector<char> dep(size, 0);
    for (auto cm : circuit_masks) dep[cm] = 1;
    for (int b = 0; b < n; ++b) {
        std::uint64_t bit = std::uint64_t(1) << b;
        // masks with bit b read only masks without it, so each pass is a
        // race-free parallel sweep
        long long sz = static_cast<long long>(size);
#pragma omp parallel for schedule(static)
        for (long long m = 0; m < sz; ++m) {
            if ((m & bit) && dep[m ^ bit]) dep[m] = 1;
        }
    }
    return dep;
}

std::vector<char> dependence_table(const std::vector<std::uint64_t>& circuit_masks, int n) {
#ifdef _OPENMP
    return dependence_table_parallel(circuit_masks, n);
#else
    return dependence_table_serial(circuit_masks, n);
#endif
}

// --- rank table from dependence ---

std::vector<std::uint8_t> rank_table_from_dependence_serial(const std::vector<char>& dep, int n) {
    check_table_bits(n);
    std::size_t size = std::size_t(1) << n;
    std::vector<std::uint8_t> rank(size, 0);
    for (std::uint64_t m = 1; m < size; ++m) {
        if (!dep[m]) {
            rank[m] = static_cast<std::uint8_t>(__builtin_popcountll(m));
            continue;
        }
        std::uint8_t best = 0;
        for (std::uint64_t rest = m; rest;) {
            std::uint64_t bit = rest & (~rest + 1);
            rest ^= bit;
            best = std::max(best, rank[m ^ bit]);
        }
        rank[m] = best;
    }
    return rank;
}

std::vector<std::uint8_t> rank_table_from_dependence_parallel(const std::vector<char>& dep,
                                                              int n) {
    check_table_bits(n);
    std::size_t size = std::size_t(1) << n;
    std::vector<std::uint8_t> rank(size, 0);
    // group masks by popcount; level k reads only level k-1
    std::vector<std::vector<std::uint32_t>> levels(n + 1);
    for (std::uint64_t m = 0; m < size; ++m) {
        levels[__builtin_popcountll(m)].push_back(static_cast<std::uint32_t>(m));
    }
    for (int k = 1; k <= n; ++k) {
        auto& level = levels[k];
        long long sz = static_cast<long long>(level.size());
#pragma omp parallel for schedule(static)
        for (long long idx = 0; idx < sz; ++idx) {
            std::uint64_t m = level[idx];
            if (!dep[m]) {
                rank[m] = static_cast<std::uint8_t>(k);
                continue;
            }
            std::uint8_t best = 0;
            for (std::uint64_t rest = m; rest;) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                best = std::max(best, rank[m ^ bit]);
            }
            rank[m] = best;
        }
    }
    return rank;
}

std::vector<std::uint8_t> rank_table_from_dependence(const std::vector<char>& dep, int n) {
#ifdef _OPENMP
    return rank_table_from_dependence_parallel(dep, n);
#else
    return rank_table_from_dependence_serial(dep, n);
#endif
}

// --- rank table from the closed-form oracle ---

std::vector<std::uint8_t> rank_table_from_oracle_serial(const RankOracle& oracle, int n) {
    check_table_bits(n);
    std::size_t size = std::size_t(1) << n;
    std::vector<std::uint8_t> rank(size, 0);
    for (std::uint64_t m = 0; m < size; ++m) {
        rank[m] = static_cast<std::uint8_t>(oracle.rank(edges_from_bits(m)));
    }
    return rank;
}

std::vector<std::uint8_t> rank_table_from_oracle_parallel(const RankOracle& oracle, int n) {
    check_table_bits(n);
    std::size_t size = std::size_t(1) << n;
    std::vector<std::uint8_t> rank(size, 0);
    long long sz = static_cast<long long>(size);
#pragma omp parallel for schedule(dynamic, 256)
    for (long long m = 0; m < sz; ++m) {
        rank[m] = static_cast<std::uint8_t>(oracle.rank(edges_from_bits(m)));
    }
    return rank;
}

std::vector<std::uint8_t> rank_table_from_oracle(const RankOracle& oracle, int n) {
#ifdef _OPENMP
    return rank_table_from_oracle_parallel(oracle, n);
#else
    return rank_table_from_oracle_serial(oracle, n);
#endif
}

// --- Ingleton scan ---

namespace {

inline long ingleton_value(const std::vector<std::uint8_t>& r, std::uint64_t a, std::uint64_t b,
                           std::uint64_t c, std::uint64_t d) {
    long lhs = r[a | b] + r[a | c] + r[a | d] + r[b | c] + r[b | d];
    long rhs = r[a] + r[b] + r[a | b | c] + r[a | b | d] + r[c | d];
    return lhs - rhs;
}

bool tuple_less(const std::array<std::uint64_t, 4>& x, const std::array<std::uint64_t, 4>& y) {
    return x < y;
}

} // namespace

IngletonScan ingleton_scan_serial(const std::vector<std::uint8_t>& rank, int n, long quad_cap,
                                  std::uint64_t seed) {
    check_table_bits(n);
    std::uint64_t size = std::uint64_t(1) << n;
    IngletonScan best;
    best.min_value = 0;
    bool have = false;
    double total = static_cast<double>(size) * size * size * size;
    if (total <= static_cast<double>(quad_cap)) {
        for (std::uint64_t a = 0; a < size; ++a)
            for (std::uint64_t b = 0; b < size; ++b)
                for (std::uint64_t c = 0; c < size; ++c)
                    for (std::uint64_t d = 0; d < size; ++d) {
                        long v = ingleton_value(rank, a, b, c, d);
                        if (!have || v < best.min_value) {
                            have = true;
                            best.min_value = v;
                            best.argmin = {a, b, c, d};
                        }
                    }
        best.exhaustive = true;
        return best;
    }
    best.exhaustive = false;
    best.seed = seed;
    std::uint64_t lo = size - 1;
    for (long i = 0; i < quad_cap; ++i) {
        std::uint64_t h1 = mix(seed + 2 * static_cast<std::uint64_t>(i));
        std::uint64_t h2 = mix(seed + 2 * static_cast<std::uint64_t>(i) + 1);
        std::array<std::uint64_t, 4> q{h1 & lo, (h1 >> 32) & lo, h2 & lo, (h2 >> 32) & lo};
        long v = ingleton_value(rank, q[0], q[1], q[2], q[3]);
        if (!have || v < best.min_value ||
            (v == best.min_value && tuple_less(q, best.argmin))) {
            have = true;
            best.min_value = v;
            best.argmin = q;
        }
    }
    return best;
}

IngletonScan ingleton_scan_parallel(const std::vector<std::uint8_t>& rank, int n, long quad_cap,
                                    std::uint64_t seed) {
    check_table_bits(n);
    std::uint64_t size = std::uint64_t(1) << n;
    double total = static_cast<double>(size) * size * size * size;
    IngletonScan best;
    best.min_value = 0;
    if (total <= static_cast<double>(quad_cap)) {
        long long sz = static_cast<long long>(size);
        long global_min = 0;
        std::array<std::uint64_t, 4> global_arg{0, 0, 0, 0};
        bool global_have = false;
#pragma omp parallel
        {
            long local_min = 0;
            std::array<std::uint64_t, 4> local_arg{0, 0, 0, 0};
            bool local_have = false;
#pragma omp for schedule(dynamic, 1) nowait
            for (long long ai = 0; ai < sz; ++ai) {
                std::uint64_t a = static_cast<std::uint64_t>(ai);
                for (std::uint64_t b = 0; b < size; ++b)
                    for (std::uint64_t c = 0; c < size; ++c)
                        for (std::uint64_t d = 0; d < size; ++d) {
                            long v = ingleton_value(rank, a, b, c, d);
                            std::array<std::uint64_t, 4> q{a, b, c, d};
                            if (!local_have || v < local_min ||
                                (v == local_min && tuple_less(q, local_arg))) {
                                local_have = true;
                                local_min = v;
                                local_arg = q;
                            }
                        }
            }
#pragma omp critical
            {
                if (local_have &&
                    (!global_have || local_min < global_min ||
                     (local_min == global_min && tuple_less(local_arg, global_arg)))) {
                    global_have = true;
                    global_min = local_min;
                    global_arg = local_arg;
                }
            }
        }
        best.min_value = global_min;
        best.argmin = global_arg;
        best.exhaustive = true;
        return best;
    }
    best.exhaustive = false;
    best.seed = seed;
    std::uint64_t lo = size - 1;
    long global_min = 0;
    std::array<std::uint64_t, 4> global_arg{0, 0, 0, 0};
    bool global_have = false;
#pragma omp parallel
    {
        long local_min = 0;
        std::array<std::uint64_t, 4> local_arg{0, 0, 0, 0};
        bool local_have = false;
#pragma omp for schedule(static) nowait
        for (long i = 0; i < quad_cap; ++i) {
            std::uint64_t h1 = mix(seed + 2 * static_cast<std::uint64_t>(i));
            std::uint64_t h2 = mix(seed + 2 * static_cast<std::uint64_t>(i) + 1);
            std::array<std::uint64_t, 4> q{h1 & lo, (h1 >> 32) & lo, h2 & lo, (h2 >> 32) & lo};
            long v = ingleton_value(rank, q[0], q[1], q[2], q[3]);
            if (!local_have || v < local_min || (v == local_min && tuple_less(q, local_arg))) {
                local_have = true;
                local_min = v;
                local_arg = q;
            }
        }
#pragma omp critical
        {
            if (local_have &&
                (!global_have || local_min < global_min ||
                 (local_min == global_min && tuple_less(local_arg, global_arg)))) {
                global_have = true;
                global_min = local_min;
                global_arg = local_arg;
            }
        }
    }
    best.min_value = global_min;
    best.argmin = global_arg;
    return best;
}

IngletonScan ingleton_scan(const std::vector<std::uint8_t>& rank, int n, long quad_cap,
                           std::uint64_t seed) {
#ifdef _OPENMP
    return ingleton_scan_parallel(rank, n, quad_cap, seed);
#else
    return ingleton_scan_serial(rank, n, quad_cap, seed);
#endif
}

// --- circuit elimination scan ---

std::optional<EliminationWitness> elimination_scan_serial(
    const std::vector<std::uint64_t>& circuit_masks, const std::vector<char>& dep) {
    int n = static_cast<int>(circuit_masks.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t common = circuit_masks[i] & circuit_masks[j];
            std::uint64_t uni = circuit_masks[i] | circuit_masks[j];
            for (std::uint64_t rest = common; rest;) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                if (!dep[uni & ~bit]) {
                    return EliminationWitness{i, j, __builtin_ctzll(bit)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<EliminationWitness> elimination_scan_parallel(
    const std::vector<std::uint64_t>& circuit_masks, const std::vector<char>& dep) {
    int n = static_cast<int>(circuit_masks.size());
    EliminationWitness best;
    bool have = false;
#pragma omp parallel
    {
        EliminationWitness local;
        bool local_have = false;
#pragma omp for schedule(dynamic, 32) nowait
        for (int i = 0; i < n; ++i) {
            if (local_have && local.circuit_i < i) continue;
            for (int j = i + 1; j < n && !(local_have && local.circuit_i == i); ++j) {
                std::uint64_t common = circuit_masks[i] & circuit_masks[j];
                std::uint64_t uni = circuit_masks[i] | circuit_masks[j];
                for (std::uint64_t rest = common; rest;) {
                    std::uint64_t bit = rest & (~rest + 1);
                    rest ^= bit;
                    if (!dep[uni & ~bit]) {
                        EliminationWitness w{i, j, __builtin_ctzll(bit)};
                        if (!local_have || std::tie(w.circuit_i, w.circuit_j, w.element) <
                                               std::tie(local.circuit_i, local.circuit_j,
                                                        local.element)) {
                            local = w;
                            local_have = true;
                        }
                        break;
                    }
                }
            }
        }
#pragma omp critical
        {
            if (local_have &&
                (!have || std::tie(local.circuit_i, local.circuit_j, local.element) <
                              std::tie(best.circuit_i, best.circuit_j, best.element))) {
                best = local;
                have = true;
            }
        }
    }
    if (!have) return std::nullopt;
    return best;
}

std::optional<EliminationWitness> elimination_scan(const std::vector<std::uint64_t>& circuit_masks,
                                                   const std::vector<char>& dep) {
#ifdef _OPENMP
    return elimination_scan_parallel(circuit_masks, dep);
#else
    return elimination_scan_serial(circuit_masks, dep);
#endif
}

} // namespace qgm::kernels
