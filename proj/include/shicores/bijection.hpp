#pragma once

// The core/alcove bijection: an n-core lambda = w(empty) with w minimal in
// its coset w S_n goes to the dominant alcove w^{-1} A_0. Restricted to
// (mn+1)-cores it hits exactly the dominant m-minimal alcoves, which are in
// turn indexed by the lattice points of
//   A_m = {v : <v, alpha_i> >= -m, <v, theta> <= m + 1}.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shicores/affine_group.hpp"
#include "shicores/cores.hpp"
#include "shicores/shi.hpp"

namespace shicores {

struct CatalogEntry {
    Partition core;
    QVector vector;                   // n-vector of the core, w(0)
    AffinePermutation group_element;  // w
    std::vector<int> word;            // reduced word for w
    int narayana_k = 0;               // residues with exactly m removable boxes
    ResidueCounts removable;

    Alcove alcove() const { return {inverse(group_element)}; }
};

// Entries sorted by core size, then parts lexicographically.
struct RegionCatalog {
    int n = 0;
    int m = 0;
    std::vector<CatalogEntry> entries;
};

// Throws NotACore.
Alcove phi(const Partition& core, int n);
// Throws std::invalid_argument for a non-dominant alcove.
Partition phi_inverse(const Alcove& a);

// Closed membership in A_m.
bool in_dilated_alcove(const RationalPoint& p, int m);

// Q intersected with A_m, in lexicographic order of the gaps a_i - a_{i+1}.
std::vector<QVector> lattice_points_in_dilated_alcove(int n, int m);

// One catalog entry per lattice point, built in parallel.
RegionCatalog enumerate(int n, int m);
// Serial reference for enumerate.
RegionCatalog enumerate_serial(int n, int m);

// N^m(k) for k = 0..n-1.
std::vector<std::uint64_t> narayana_histogram(const RegionCatalog& catalog);
std::vector<std::uint64_t> narayana_histogram(int n, int m);

// binom(s + t, t) / (s + t) with s = mn + 1, t = n.
boost::multiprecision::cpp_int anderson_count(int n, int m);

struct HaimanReport {
    int n = 0;
    int m = 0;
    std::uint64_t expected = 0;           // (mn + 1)^(n - 1)
    std::size_t alcoves_in_region = 0;    // alcoves x A_0 inside A_m
    std::size_t m_minimal_alcoves = 0;    // found by the unrestricted search
    Int search_radius = 0;
    bool ok = false;
    std::string counterexample;           // first failed check, empty when ok
};

// Checks that x A_0 -> x^{-1} A_0 maps the alcoves of A_m bijectively onto
// the m-minimal alcoves. Never throws on a failed check; see the report.
HaimanReport verify_haiman(int n, int m);

} // namespace shicores
