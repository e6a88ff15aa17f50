#pragma once

// Partitions, hooks, residues, the affine action on n-cores and the
// balanced abacus bijection between n-cores and the root lattice Q.
//
// Boxes are addressed 0-based as (row, col); the residue of (row, col) is
// (col - row) mod n, which matches the 1-based j - i.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shicores/rootsys.hpp"

namespace shicores {

class Partition {
public:
    Partition() = default;
    // Parts must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    // "5,3,2" or "-" for the empty partition. Throws ParseError.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int row) const { return row < rows() ? parts_[row] : 0; }
    int size() const;
    bool empty() const { return parts_.empty(); }
    bool contains(int row, int col) const { return row >= 0 && col >= 0 && col < part(row); }

    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// 1 + arm + leg of a box in the diagram.
int hook_length(const Partition& p, int row, int col);
// beta_k = hook length of (k, 0); strictly decreasing.
std::vector<int> first_column_hooks(const Partition& p);

// Ground truth: no hook length divisible by t.
bool is_t_core_hooks(const Partition& p, int t);

struct ResidueCounts {
    std::vector<int> counts;

    int total() const;
    int operator[](std::size_t i) const { return counts[i]; }
    friend bool operator==(const ResidueCounts&, const ResidueCounts&) = default;
};

struct BoxCounts {
    ResidueCounts removable;
    ResidueCounts addable;
};

BoxCounts box_counts(const Partition& p, int n);
ResidueCounts residue_counts(const Partition& p, int n);

// s_i on an n-core: add all addable i-boxes, else remove all removable
// i-boxes, else leave unchanged. Throws NotACore.
Partition apply_generator_core(const Partition& core, int i, int n);
// Folds a word; the last letter is applied first.
Partition apply_word_core(std::span<const int> word, const Partition& core, int n);

// Flush abacus of an n-core. Runner r holds entries level * n + r and carries
// beads at every level up to top_levels()[r].
class Abacus {
public:
    // Balanced abacus of an n-core; throws NotACore when not flush.
    static Abacus balanced(const Partition& core, int n);
    // Abacus with the given top levels (any balance number).
    static Abacus from_top_levels(std::vector<Int> top_levels);

    int runners() const { return static_cast<int>(tops_.size()); }
    std::span<const Int> top_levels() const { return tops_; }
    Int balance_number() const;
    bool has_bead(Int entry) const;

    // Top levels as a root lattice vector (balanced abaci only).
    QVector vector() const;
    Partition partition() const;

    // One line per level from `from` to `to` inclusive; beads are shown in
    // parentheses, gaps as bare numbers.
    std::string render(Int from, Int to) const;

private:
    explicit Abacus(std::vector<Int> tops)
        : tops_(std::move(tops))
    {
    }
    std::vector<Int> tops_;
};

QVector n_vector(const Partition& core, int n);
Partition core_from_vector(const QVector& v);

// Anderson's grid criterion for an n-core to be a t-core, gcd(n, t) = 1.
bool anderson_is_t_core(const Partition& core, int n, int t);

// <v, alpha_i> >= -m for 0 < i < n and <v, theta> <= m + 1.
bool satisfies_mn1_inequalities(const QVector& v, int m);

// All partitions of size <= max_size, grouped by size, reverse
// lexicographic within a size.
std::vector<Partition> partitions_up_to(int max_size);

// n-cores of size <= max_size, filtered with is_t_core_hooks in parallel.
std::vector<Partition> cores_up_to(int n, int max_size);
// Serial reference for cores_up_to.
std::vector<Partition> cores_up_to_serial(int n, int max_size);

} // namespace shicores
