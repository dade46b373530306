#ifndef QGM_VERIFY_HPP
#define QGM_VERIFY_HPP

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "qgm/matroid.hpp"

namespace qgm {

struct VerificationReport {
    std::string check;
    std::string instance;
    bool pass = true;
    nlohmann::json witness; // null on pass
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const;
};

/// Nonempty members, pairwise incomparability, weak circuit elimination.
/// Ground set capped (subset tables). Witness names the offending circuits.
VerificationReport circuit_axioms(const CircuitFamily& cf, const std::string& instance = "");

/// Exhaustive normalization / unit-increase / monotonicity / local
/// submodularity over all subsets of the ground set (|ground| <= 14).
VerificationReport rank_axioms(const RankOracle& oracle, const EdgeSet& ground,
                               const std::string& instance = "");

/// Cocircuits from first principles: complements of hyperplanes, hyperplanes
/// read off a circuit-derived rank table. |E| capped.
std::vector<EdgeSet> cocircuits_bruteforce(const CircuitFamily& cf);

/// Ingleton slack: LHS - RHS of Ingleton's inequality; negative = violation.
long ingleton_check(const RankOracle& oracle, const EdgeSet& a, const EdgeSet& b,
                    const EdgeSet& c, const EdgeSet& d);

struct IngletonWitness {
    std::array<EdgeSet, 4> sets;
    long value = 0;
};

/// Scans vertex-disjoint L-pairs x vertex-disjoint F-pairs for an Ingleton
/// violation; nullopt when a degenerate side leaves nothing to scan or no
/// violation is found within eval_cap evaluations.
std::optional<IngletonWitness> ingleton_search(const Tripartition& t, long eval_cap = 10'000'000);

/// Minimum Ingleton slack over all subset quadruples of the oracle's ground
/// set (exhaustive when feasible within quad_cap, else seeded sampling).
struct IngletonScanReport {
    long min_value = 0;
    std::array<EdgeSet, 4> argmin;
    bool exhaustive = true;
    std::uint64_t seed = 0;
};
IngletonScanReport ingleton_exhaustive(const RankOracle& oracle, long quad_cap = 30'000'000,
                                       std::uint64_t seed = 1);

enum class FrameLiftClass { Frame, Lift, Both, Neither };
const char* to_string(FrameLiftClass c);

/// Compares circuits(t) against the frame and lift families of (G, B).
FrameLiftClass classify_frame_lift(const Tripartition& t);

/// e ~ f when some circuit contains both; connected = one class covering E.
bool matroid_connected(const CircuitFamily& cf);

/// When the matroid is connected: non-degenerate F forces G connected, and
/// both sides non-degenerate force G 2-connected.
VerificationReport connectivity_checks(const Tripartition& t, const std::string& instance = "");

/// Circuits whose induced subgraph fails the five-shape classification
/// (balanced cycle / all-unbalanced theta / tight or loose handcuff /
/// bracelet), with balance read off cf itself.
std::vector<EdgeSet> lemma_shape_violations(const Multigraph& g, const CircuitFamily& cf);

} // namespace qgm

#endif
