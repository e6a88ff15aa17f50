#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "shicores/affine_group.hpp"

using namespace shicores;

namespace {

// Number of hyperplanes H_{alpha,k} strictly between the sample points of A_0
// and w A_0; both points are generic so no pairing is an integer.
Int separating_hyperplanes(const AffinePermutation& w)
{
    const int n = w.rank();
    const auto p = fundamental_sample_point(n);
    const auto q = act_point(w, p);
    Int count = 0;
    for (const auto a : positive_roots(n)) {
        const auto x = pairing(p, a);
        const auto y = pairing(q, a);
        const double lo = std::min(static_cast<double>(x.num) / x.den, static_cast<double>(y.num) / y.den);
        const double hi = std::max(static_cast<double>(x.num) / x.den, static_cast<double>(y.num) / y.den);
        count += static_cast<Int>(std::floor(hi) - std::floor(lo));
    }
    return count;
}

// Cayley graph distances from the identity, by breadth-first search.
std::map<AffinePermutation, int> cayley_ball(int n, int radius)
{
    std::map<AffinePermutation, int> dist;
    std::queue<AffinePermutation> queue;
    dist[AffinePermutation::identity(n)] = 0;
    queue.push(AffinePermutation::identity(n));
    while (!queue.empty()) {
        const auto w = queue.front();
        queue.pop();
        const int d = dist[w];
        if (d == radius) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            const auto next = w * generator(i, n);
            if (!dist.contains(next)) {
                dist[next] = d + 1;
                queue.push(next);
            }
        }
    }
    return dist;
}

} // namespace

TEST_CASE("generators act on points")
{
    const RationalPoint p({3, 1, -4}, 1);
    CHECK(act_point(generator(1, 3), p) == RationalPoint({1, 3, -4}, 1));
    CHECK(act_point(generator(2, 3), p) == RationalPoint({3, -4, 1}, 1));
    // s_0 reflects across <v, theta> = 1
    CHECK(act_point(generator(0, 3), p) == RationalPoint({-3, 1, 2}, 1));
    CHECK_THROWS(generator(3, 3));
}

TEST_CASE("generators are involutions and inverse works")
{
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 6; ++n) {
        const auto id = AffinePermutation::identity(n);
        for (int i = 0; i < n; ++i) {
            CHECK(generator(i, n) * generator(i, n) == id);
        }
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> word(rng() % 20);
            for (auto& r : word) {
                r = static_cast<int>(rng() % n);
            }
            const auto w = from_word(word, n);
            CHECK(w * inverse(w) == id);
            CHECK(inverse(w) * w == id);
        }
    }
}

TEST_CASE("the element s1 s2 s0 s1 s2 s1 s0 in rank 3")
{
    const std::vector<int> word{1, 2, 0, 1, 2, 1, 0};
    const auto w = from_word(word, 3);
    CHECK(w == generator(2, 3) * AffinePermutation::translation_by(QVector({-2, 0, 2})));
    CHECK(w == AffinePermutation::translation_by(QVector({-2, 2, 0})) * generator(2, 3));
    CHECK(length(w) == 7);

    const auto x = inverse(w);
    CHECK(act_affine_root(x, affine_simple_root(0, 3)) == AffineRoot{{1, 0}, 3});
    CHECK(act_affine_root(x, affine_simple_root(1, 3)) == AffineRoot{{0, 2}, -4});
    CHECK(act_affine_root(x, affine_simple_root(2, 3)) == AffineRoot{{2, 1}, 2});

    std::set<AffineRoot> expected{
        {{1, 0}, 1}, {{1, 0}, 2},                               // -alpha_1 + k delta
        {{2, 0}, 1}, {{2, 0}, 2}, {{2, 0}, 3}, {{2, 0}, 4},     // -theta + k delta
        {{2, 1}, 1},                                            // -alpha_2 + delta
    };
    const auto inv = inversion_set(w);
    CHECK(std::set<AffineRoot>(inv.begin(), inv.end()) == expected);
    CHECK(inv.size() == 7);
}

TEST_CASE("length agrees with Cayley graph distance")
{
    for (int n = 2; n <= 4; ++n) {
        const int radius = n == 4 ? 5 : 7;
        const auto ball = cayley_ball(n, radius);
        for (const auto& [w, d] : ball) {
            CHECK(length(w) == d);
            CHECK(static_cast<Int>(inversion_set(w).size()) == d);
            CHECK(separating_hyperplanes(w) == d);
        }
    }
}

TEST_CASE("length equals separating hyperplane count for long elements")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<int> word(rng() % 60);
        for (auto& r : word) {
            r = static_cast<int>(rng() % n);
        }
        const auto w = from_word(word, n);
        CHECK(length(w) == separating_hyperplanes(w));
        CHECK(static_cast<Int>(inversion_set(w).size()) == length(w));
    }
}

TEST_CASE("no inversions beyond the level bound")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        std::vector<int> word(rng() % 40);
        for (auto& r : word) {
            r = static_cast<int>(rng() % n);
        }
        const auto w = from_word(word, n);
        const Int level = inversion_level_bound(w) + 1;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    CHECK(act_affine_root(w, AffineRoot{{i, j}, level}).is_positive());
                }
            }
        }
    }
}

TEST_CASE("word_for gives a reduced word")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<int> word(rng() % 40);
        for (auto& r : word) {
            r = static_cast<int>(rng() % n);
        }
        const auto w = from_word(word, n);
        const auto reduced = word_for(w);
        CHECK(from_word(reduced, n) == w);
        CHECK(static_cast<Int>(reduced.size()) == length(w));
        for (int i = 0; i < n; ++i) {
            CHECK(has_right_descent(w, i) == (length(w * generator(i, n)) < length(w)));
        }
    }
}

TEST_CASE("minimal coset representative against all n! candidates")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<Int> g(n);
        Int sum = 0;
        for (int k = 0; k + 1 < n; ++k) {
            g[k] = static_cast<Int>(rng() % 11) - 5;
            sum += g[k];
        }
        g[n - 1] = -sum;
        const QVector gamma(g);

        // every element u t_{u^{-1} gamma} sends 0 to gamma
        std::vector<int> u(n);
        std::iota(u.begin(), u.end(), 0);
        Int best = -1;
        int best_count = 0;
        AffinePermutation best_w;
        do {
            std::vector<Int> shifted(n);
            for (int k = 0; k < n; ++k) {
                shifted[k] = g[u[k]];
            }
            const AffinePermutation w(u, QVector(shifted));
            REQUIRE(w.origin_image() == gamma);
            const Int l = separating_hyperplanes(w);
            if (best < 0 || l < best) {
                best = l;
                best_count = 1;
                best_w = w;
            } else if (l == best) {
                ++best_count;
            }
        } while (std::next_permutation(u.begin(), u.end()));

        const auto w = min_length_in_translation_coset(gamma);
        CHECK(best_count == 1);
        CHECK(w == best_w);
        CHECK(length(w) == best);
    }
}

TEST_CASE("minimal representative for the coset of (-2,2,0)")
{
    const auto w = min_length_in_translation_coset(QVector({-2, 2, 0}));
    CHECK(w == from_word(std::vector<int>{1, 2, 0, 1, 2, 1, 0}, 3));
}
