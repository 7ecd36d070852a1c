#pragma once

#include "liechar/catalog.hpp"

namespace liechar {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool advisory = false;  // recorded in reports, never gates the suite
    std::string detail;
    Json data;  // optional serialized inputs/outputs
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::map<std::string, long long> counters;
    long long wall_time_ms = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.advisory && !c.passed) return false;
        return true;
    }
};

// Exact identity suites over a catalog. Each function appends one
// CheckResult per verified instance.

// transfer_factor * Num_r(rho_r) = Num_g(rho), every pair.
std::vector<CheckResult> check_denominator_quotient(const CatalogFile& catalog);

// dirac_index = signed Kostant multiplet, lambda in {0, fundamentals, rho}.
std::vector<CheckResult> check_index_identity(const CatalogFile& catalog);

// Kernel contains the multiplet, index supported in the kernel,
// multiplicity-one recorded as advisory.
std::vector<CheckResult> check_kernel_agreement(const CatalogFile& catalog);

// mu + rho_r in W(lambda + rho) for every kernel type, with witnesses.
std::vector<CheckResult> check_infinitesimal_conjugacy(const CatalogFile& catalog);

// |W^1| pinned values and |W^1| * |W_r| = |W| on every pair.
std::vector<CheckResult> check_coset_counts(const CatalogFile& catalog);

// verify_lift_identity on seeded random W_K-regular parameters plus
// K-regular/g-singular (limits) parameters, per endoscopic datum.
std::vector<CheckResult> check_lifting(const CatalogFile& catalog, std::uint64_t seed,
                                       int regular_trials = 100, int limit_trials = 10);

// Rank-1 matrix oracle for n = 0..5.
std::vector<CheckResult> check_rank1_oracle();

// Weyl-formula cross-multiplication, adjoint spot dimensions, and seeded
// decompose/reconstruct round trips.
std::vector<CheckResult> check_character_ring(const CatalogFile& catalog, std::uint64_t seed,
                                              int reconstruct_trials = 50);

// suite: identities | lifting | oracle | all.
SuiteReport run_suite(const CatalogFile& catalog, const std::string& suite, std::uint64_t seed);

Json suite_report_to_json(const SuiteReport& report);

}  // namespace liechar
