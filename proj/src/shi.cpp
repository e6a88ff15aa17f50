#include "shicores/shi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "shicores/errors.hpp"

namespace shicores {

RationalPoint Alcove::sample_point() const
{
    return act_point(x, fundamental_sample_point(x.rank()));
}

std::vector<RationalPoint> Alcove::vertices() const
{
    auto out = fundamental_alcove_vertices(x.rank());
    for (auto& v : out) {
        v = act_point(x, v);
    }
    return out;
}

std::vector<Hyperplane> shi_hyperplanes(int n, int m)
{
    if (n < 2 || m < 1) {
        throw std::invalid_argument("need n >= 2 and m >= 1");
    }
    std::vector<Hyperplane> out;
    for (const auto root : positive_roots(n)) {
        for (Int k = -m + 1; k <= m; ++k) {
            out.emplace_back(root, k);
        }
    }
    return out;
}

SignVector sign_vector(const Alcove& a, int n, int m)
{
    if (a.rank() != n) {
        throw DimensionMismatch("alcove rank differs from n");
    }
    const auto p = a.sample_point();
    SignVector out;
    for (const auto& h : shi_hyperplanes(n, m)) {
        out.signs.push_back(side_of(p, h));
    }
    return out;
}

bool is_m_minimal(const Alcove& a, int m)
{
    const int n = a.rank();
    for (int i = 0; i < n; ++i) {
        const auto wall = act_affine_root(a.x, affine_simple_root(i, n));
        const Int k = -wall.level;
        if (wall.root.is_positive() ? k > m : k > m - 1) {
            return false;
        }
    }
    return true;
}

bool is_dominant(const Alcove& a)
{
    const int n = a.rank();
    const auto p = a.sample_point();
    for (int i = 1; i < n; ++i) {
        if (side_of(p, Hyperplane(simple_root(i, n), 0)) != Side::Positive) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<DominantRegion> collect_regions(int n, int m, Int radius)
{
    const auto theta = highest_root(n);
    const auto alcoves = alcoves_bfs(n, [&](const Alcove& a) {
        return is_dominant(a) && pairing(a.sample_point(), theta) < Rational{radius, 1};
    });

    std::map<SignVector, DominantRegion> regions;
    std::map<SignVector, bool> tied;
    for (const auto& a : alcoves) {
        auto signs = sign_vector(a, n, m);
        const Int len = length(a.x);
        auto [it, inserted] = regions.try_emplace(signs, DominantRegion{signs, a, len, 0, 0});
        auto& region = it->second;
        ++region.alcove_count;
        if (is_m_minimal(a, m)) {
            ++region.m_minimal_count;
        }
        if (!inserted) {
            if (len < region.minimal_length) {
                region.minimal = a;
                region.minimal_length = len;
                tied[signs] = false;
            } else if (len == region.minimal_length) {
                tied[signs] = true;
            }
        }
    }

    std::vector<DominantRegion> out;
    for (auto& [signs, region] : regions) {
        if (tied[signs]) {
            throw OracleFailure("region has two shortest alcoves");
        }
        if (!is_m_minimal(region.minimal, m)) {
            throw OracleFailure("shortest alcove of a region is not m-minimal");
        }
        out.push_back(std::move(region));
    }
    std::sort(out.begin(), out.end(), [](const DominantRegion& a, const DominantRegion& b) {
        if (a.minimal_length != b.minimal_length) {
            return a.minimal_length < b.minimal_length;
        }
        const auto pa = a.minimal.sample_point();
        const auto pb = b.minimal.sample_point();
        return std::lexicographical_compare(pa.numerators().begin(), pa.numerators().end(),
                                            pb.numerators().begin(), pb.numerators().end());
    });
    return out;
}

} // namespace

std::vector<DominantRegion> bruteforce_dominant_regions(int n, int m, Int radius)
{
    if (n < 2 || m < 1) {
        throw std::invalid_argument("need n >= 2 and m >= 1");
    }
    if (radius <= m + 1) {
        throw std::invalid_argument("radius must exceed m + 1");
    }
    auto regions = collect_regions(n, m, radius);
    const auto wider = collect_regions(n, m, radius + 1);
    if (regions.size() != wider.size()) {
        throw RadiusTooSmall("region count changed from " + std::to_string(regions.size()) + " to "
                             + std::to_string(wider.size()) + " at radius " + std::to_string(radius + 1));
    }
    return regions;
}

} // namespace shicores
