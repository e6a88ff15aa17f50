#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "shicores/cores.hpp"
#include "shicores/errors.hpp"

using namespace shicores;

namespace {

using Box = std::pair<int, int>;

std::set<Box> diagram(const Partition& p)
{
    std::set<Box> boxes;
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.part(r); ++c) {
            boxes.insert({r, c});
        }
    }
    return boxes;
}

// Hook lengths straight from the box set.
bool is_core_by_boxes(const Partition& p, int t)
{
    const auto boxes = diagram(p);
    for (const auto& [r, c] : boxes) {
        int hook = 1;
        for (int k = c + 1; boxes.contains({r, k}); ++k) {
            ++hook;
        }
        for (int k = r + 1; boxes.contains({k, c}); ++k) {
            ++hook;
        }
        if (hook % t == 0) {
            return false;
        }
    }
    return true;
}

std::vector<int> residue_histogram(const Partition& p, int n)
{
    std::vector<int> counts(n, 0);
    for (const auto& [r, c] : diagram(p)) {
        ++counts[((c - r) % n + n) % n];
    }
    return counts;
}

// The n-vector of a core from its residue histogram: c_i - c_{i+1}.
QVector vector_from_residues(const Partition& p, int n)
{
    const auto c = residue_histogram(p, n);
    std::vector<Int> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = c[i] - c[(i + 1) % n];
    }
    return QVector(v);
}

} // namespace

TEST_CASE("partition parsing")
{
    CHECK(Partition::parse("5,3,2").parts().size() == 3);
    CHECK(Partition::parse("-").empty());
    CHECK(to_string(Partition::parse("4,2,2,1")) == "4,2,2,1");
    CHECK_THROWS_AS(Partition::parse("2,3"), ParseError);
    CHECK_THROWS_AS(Partition::parse("2,0"), ParseError);
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
    CHECK_THROWS_AS(Partition::parse(""), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("-1"), ParseError);
    CHECK(Partition::parse("3,1").conjugate() == Partition({2, 1, 1}));
}

TEST_CASE("first column hooks")
{
    CHECK(first_column_hooks(Partition({5, 2, 1, 1, 1})) == std::vector<int>{9, 5, 3, 2, 1});
    CHECK(first_column_hooks(Partition({6, 4, 2, 2, 1, 1})) == std::vector<int>{11, 8, 5, 4, 2, 1});
    CHECK(first_column_hooks(Partition()).empty());
    CHECK(hook_length(Partition({5, 2, 1, 1, 1}), 0, 0) == 9);
    CHECK(hook_length(Partition({5, 2, 1, 1, 1}), 1, 1) == 1);
    CHECK_THROWS_AS(hook_length(Partition({2}), 1, 0), std::out_of_range);
}

TEST_CASE("t-core by hooks against the box oracle")
{
    for (const auto& p : partitions_up_to(16)) {
        for (int t = 1; t <= 9; ++t) {
            CHECK(is_t_core_hooks(p, t) == is_core_by_boxes(p, t));
        }
    }
    CHECK(is_t_core_hooks(Partition({5, 2, 1, 1, 1}), 4));
    CHECK_FALSE(is_t_core_hooks(Partition({5, 2, 1, 1, 1}), 5));
}

TEST_CASE("partition and core enumeration sizes")
{
    // p(0..10)
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    std::size_t total = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        total += p[k];
        CHECK(partitions_up_to(static_cast<int>(k)).size() == total);
    }
    for (int n = 2; n <= 5; ++n) {
        std::size_t expected = 0;
        for (const auto& q : partitions_up_to(20)) {
            expected += is_core_by_boxes(q, n) ? 1 : 0;
        }
        CHECK(cores_up_to(n, 20).size() == expected);
        CHECK(cores_up_to(n, 20) == cores_up_to_serial(n, 20));
    }
}

TEST_CASE("addable and removable boxes")
{
    const Partition lambda({5, 3, 2, 2, 1, 1});
    const auto counts = box_counts(lambda, 3);
    CHECK(counts.removable.counts == std::vector<int>{0, 4, 0});
    CHECK(counts.addable.counts == std::vector<int>{3, 0, 2});
    CHECK(residue_counts(lambda, 3).counts == std::vector<int>{4, 6, 4});
    CHECK(residue_counts(lambda, 3).total() == lambda.size());

    const auto empty = box_counts(Partition(), 4);
    CHECK(empty.addable.counts == std::vector<int>{1, 0, 0, 0});
    CHECK(empty.removable.total() == 0);
}

TEST_CASE("generators act on cores")
{
    CHECK(apply_generator_core(Partition(), 0, 3) == Partition({1}));
    CHECK(apply_generator_core(Partition(), 1, 3) == Partition());
    CHECK(apply_generator_core(Partition({5, 3, 2, 2, 1, 1}), 1, 3) == Partition({4, 2, 2, 1, 1}));
    CHECK(apply_word_core(std::vector<int>{1, 2, 0, 1, 2, 1, 0}, Partition(), 3) == Partition({5, 3, 2, 2, 1, 1}));
    CHECK_THROWS_AS(apply_generator_core(Partition({3}), 0, 3), NotACore);

    // s_i is an involution on n-cores and keeps them n-cores
    for (int n = 2; n <= 5; ++n) {
        for (const auto& core : cores_up_to(n, 25)) {
            for (int i = 0; i < n; ++i) {
                const auto image = apply_generator_core(core, i, n);
                CHECK(is_core_by_boxes(image, n));
                CHECK(apply_generator_core(image, i, n) == core);
            }
        }
    }
}

TEST_CASE("n-vectors")
{
    CHECK(n_vector(Partition({5, 2, 1, 1, 1}), 4) == QVector({2, 0, 0, -2}));
    CHECK(n_vector(Partition({5, 2, 2, 1, 1, 1}), 4) == QVector({2, 0, -2, 0}));
    CHECK(n_vector(Partition(), 3) == QVector({0, 0, 0}));
    CHECK(n_vector(Partition({5, 3, 2, 2, 1, 1}), 3) == QVector({-2, 2, 0}));
    CHECK(core_from_vector(QVector({2, 0, 0, -2})) == Partition({5, 2, 1, 1, 1}));
    CHECK_THROWS_AS(n_vector(Partition({2}), 2), NotACore);

    for (int n = 2; n <= 6; ++n) {
        for (const auto& core : cores_up_to(n, 30)) {
            CHECK(n_vector(core, n) == vector_from_residues(core, n));
        }
    }
}

TEST_CASE("n-vector round trips on random vectors")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Int> v(n);
        Int sum = 0;
        for (int k = 0; k + 1 < n; ++k) {
            v[k] = static_cast<Int>(rng() % 9) - 4;
            sum += v[k];
        }
        v[n - 1] = -sum;
        const auto core = core_from_vector(QVector(v));
        CHECK(is_core_by_boxes(core, n));
        CHECK(n_vector(core, n) == QVector(v));
        CHECK(vector_from_residues(core, n) == QVector(v));
    }
}

TEST_CASE("balanced abacus")
{
    const auto abacus = Abacus::balanced(Partition({5, 2, 1, 1, 1}), 4);
    CHECK(abacus.balance_number() == 0);
    CHECK(abacus.has_bead(8));
    CHECK_FALSE(abacus.has_bead(9));
    CHECK(abacus.has_bead(-100));
    CHECK(abacus.partition() == Partition({5, 2, 1, 1, 1}));
    CHECK(Abacus::from_top_levels({1, 0, 0, -1}).partition() == core_from_vector(QVector({1, 0, 0, -1})));
    CHECK_THROWS_AS(Abacus::balanced(Partition({3}), 3), NotACore);
}

TEST_CASE("t-core criteria on examples")
{
    CHECK(anderson_is_t_core(Partition({6, 4, 2, 2, 1, 1}), 3, 7));
    CHECK_FALSE(anderson_is_t_core(Partition({5, 2, 1, 1, 1}), 4, 5));
    CHECK(anderson_is_t_core(Partition(), 4, 5));
    CHECK_THROWS(anderson_is_t_core(Partition(), 4, 6));
    CHECK_THROWS_AS(anderson_is_t_core(Partition({3}), 3, 4), NotACore);

    CHECK(satisfies_mn1_inequalities(QVector({-2, 0, 2}), 2));
    CHECK_FALSE(satisfies_mn1_inequalities(QVector({-2, 2, 0}), 2));
    CHECK_FALSE(satisfies_mn1_inequalities(QVector({2, 0, 0, -2}), 1));

    for (int n = 2; n <= 5; ++n) {
        for (const auto& core : cores_up_to(n, 30)) {
            for (int t = 2; t <= 13; ++t) {
                if (std::gcd(n, t) == 1) {
                    CHECK(anderson_is_t_core(core, n, t) == is_core_by_boxes(core, t));
                }
            }
        }
    }
}
