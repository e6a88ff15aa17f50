#pragma once

// Randomised and exhaustive consistency checks tying the modules together.
// Each check runs a batch of cases and reports the first counterexample.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shicores/bijection.hpp"

namespace shicores {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    bool ok() const { return failures == 0; }
    void record(bool passed, const std::string& detail);
};

using Rng = std::mt19937_64;

AffinePermutation random_group_element(int n, Rng& rng, int max_word_length = 24);
RationalPoint random_point(int n, Rng& rng);
QVector random_qvector(int n, Rng& rng, Int magnitude);

// s_i^2 = 1, commuting and braid relations, as maps on random points.
CheckResult check_presentation(int n, std::size_t cases, Rng& rng);
// alpha + k delta in Inv(w)  <=>  <w^{-1}(p_0), -alpha> > k.
CheckResult check_inversion_separation(int n, std::size_t cases, Rng& rng);
// Inversions of a minimal coset representative are -alpha + k delta,
// alpha > 0, k > 0, closed under lowering k.
CheckResult check_minimal_coset_shape(int n, std::size_t cases, Rng& rng);
// No n-core has both an addable and a removable box of one residue.
CheckResult check_add_remove_exclusivity(int n, const std::vector<Partition>& cores);
// Abacus::balanced succeeds exactly on n-cores.
CheckResult check_flush_iff_core(int n, const std::vector<Partition>& partitions);
// n_vector(s_i core) = s_i n_vector(core).
CheckResult check_equivariance(int n, std::size_t cases, Rng& rng);
// Hook oracle, Anderson's grid and (for t = mn + 1) the inequality form agree.
CheckResult check_t_core_criteria(int n, const std::vector<Partition>& cores, int max_t);
// s_i removes k > 0 boxes  <=>  <n(core), alpha_i> = -k (i != 0),
// <n(core), theta> = k + 1 (i = 0).
CheckResult check_removable_bridge(int n, const std::vector<Partition>& cores);
// core_from_vector and n_vector are mutually inverse.
CheckResult check_vector_roundtrip(int n, std::size_t cases, Rng& rng);

// Every catalog invariant: size, distinctness, both core conditions,
// dominance, m-minimality, phi round trips, words, removable bound.
CheckResult check_catalog(const RegionCatalog& catalog);
// bruteforce_dominant_regions and enumerate list the same alcoves, and each
// region has exactly one m-minimal alcove.
CheckResult check_region_oracle(int n, int m);

} // namespace shicores
