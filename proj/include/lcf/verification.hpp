#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lcf/analysis.hpp"
#include "lcf/coloring.hpp"
#include "lcf/hypergraph.hpp"
#include "lcf/linear.hpp"

namespace lcf {

// Brute-force oracles. These deliberately share no search code with the
// detectors they audit.

/// Enumerates edge subsets of size 3..min(|E|, n/2) and their cyclic
/// arrangements; first witness wins. Guarded to |E| <= 25.
std::optional<LinearCycleWitness> brute_linear_cycle(const Hypergraph& h);

/// First proper assignment in base-k counting order (vertex 0 least
/// significant), or absent. Guarded to k^n <= 2^24.
std::optional<Coloring> brute_k_colorable(const Hypergraph& h, int k);

/// Maximum over all 2^n vertex subsets. Guarded to n <= 20.
IndependenceResult brute_alpha(const Hypergraph& h);

/// Unpruned complete-5-set scan; audits the thick-pair pruning.
std::optional<K53Witness> brute_k53(const Hypergraph& h);

// --- sweep harness ------------------------------------------------------------

enum SweepCheck : unsigned {
    check_colorability3 = 1u << 0,   // every LCF instance 3-colorable, alpha >= 2n/5
    check_two_coloring = 1u << 1,    // LCF K_5^3-free: pipeline colors, alpha >= n/2
    check_strong_degree = 1u << 2,   // some vertex of strong degree <= 2
    check_degree_bound = 1u << 3,    // n >= 10: minimum degree <= n-2
    check_oracle_audit = 1u << 4,    // detector/oracle agreement on a subsample
    check_all = (1u << 5) - 1,
};

struct SweepOptions {
    int n = 5;
    bool random_mode = false;
    std::uint64_t seed = 0;
    long count = 0;         // instances in random mode
    unsigned checks = check_all;
    int audit_stride = 64;  // every k-th LCF instance gets the full oracle
    bool parallel = true;
};

struct CheckTally {
    long checked = 0;
    long failures = 0;
};

struct SweepReport {
    int n = 0;
    bool random_mode = false;
    std::uint64_t seed = 0;
    long count = 0;
    unsigned checks = 0;

    long total = 0;
    long lcf = 0;
    long k53_free = 0;

    CheckTally colorable3;
    CheckTally alpha_two_fifths;
    CheckTally two_colored;
    CheckTally alpha_half;
    CheckTally strong_deg;
    CheckTally degree_bound;
    CheckTally oracle_audit;
    CheckTally profile_dichotomy;
    long structural_failures = 0;

    std::vector<std::string> counterexamples;

    bool clean() const;
    void merge(const SweepReport& other);
    std::string to_text() const;
};

/// Checks one instance and accumulates into the report. `index` drives the
/// deterministic audit subsample.
void sweep_check_instance(const Hypergraph& h, const SweepOptions& opt, long index,
                          SweepReport& report);

/// Serial reference driver.
SweepReport run_sweep_serial(const SweepOptions& opt);

/// Chunked OpenMP driver; falls back to the serial one without OpenMP.
/// Reports are identical to the serial driver's for any thread count.
SweepReport run_sweep(const SweepOptions& opt);

/// The instance enumerated/generated for a given index (bitmask order in
/// exhaustive mode, seeded generator in random mode).
Hypergraph sweep_instance(const SweepOptions& opt, long index);

/// Domain size: 2^C(n,3) in exhaustive mode, `count` in random mode.
long sweep_domain_size(const SweepOptions& opt);

}  // namespace lcf
