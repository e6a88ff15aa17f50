#pragma once

// The m-Shi arrangement {H_{alpha,k} : alpha > 0, -m < k <= m}, alcoves and
// m-minimality, plus a brute-force region oracle.

#include <compare>
#include <cstddef>
#include <vector>

#include "shicores/affine_group.hpp"
#include "shicores/rootsys.hpp"

namespace shicores {

// The open simplex x A_0.
struct Alcove {
    AffinePermutation x;

    static Alcove fundamental(int n) { return {AffinePermutation::identity(n)}; }

    int rank() const { return x.rank(); }
    RationalPoint sample_point() const;
    std::vector<RationalPoint> vertices() const;

    auto operator<=>(const Alcove&) const = default;
};

// Ordered like shi_hyperplanes(n, m).
struct SignVector {
    std::vector<Side> signs;

    auto operator<=>(const SignVector&) const = default;
};

// Roots in positive_roots order, levels -m+1..m within each root.
std::vector<Hyperplane> shi_hyperplanes(int n, int m);

SignVector sign_vector(const Alcove& a, int n, int m);

// Every wall of x A_0 lies on x(alpha_i) = alpha - k delta; the alcove is
// m-minimal unless some such wall has alpha > 0 and k > m, or alpha < 0 and
// k > m - 1.
bool is_m_minimal(const Alcove& a, int m);

bool is_dominant(const Alcove& a);

struct DominantRegion {
    SignVector signs;
    Alcove minimal;
    Int minimal_length = 0;
    std::size_t alcove_count = 0;       // alcoves of the region seen within the radius
    std::size_t m_minimal_count = 0;    // of those, how many pass is_m_minimal
};

// Breadth-first search from A_0 over dominant alcoves with <sample, theta> <
// radius, grouped by sign vector. Requires radius > m + 1. Reruns at
// radius + 1 and throws RadiusTooSmall if the region count changes; throws
// OracleFailure if a region's shortest alcove is not unique or fails
// is_m_minimal. Regions sorted by (length, sample point).
std::vector<DominantRegion> bruteforce_dominant_regions(int n, int m, Int radius);

// Every alcove reachable from A_0 through alcoves accepted by `keep`, in
// breadth-first order. The accepted alcoves should tile a convex set
// containing A_0, otherwise parts of it may be missed.
template <typename Predicate>
std::vector<Alcove> alcoves_bfs(int n, Predicate keep);

} // namespace shicores

#include "shicores/shi_bfs.ipp"
