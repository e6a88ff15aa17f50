#include "shicores/affine_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shicores/errors.hpp"

namespace shicores {

namespace {

void check_rank(int a, int b)
{
    if (a != b) {
        throw DimensionMismatch("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

// (u v)_{u(k)} = v_k
std::vector<Int> permute(std::span<const int> perm, std::span<const Int> v)
{
    std::vector<Int> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[perm[k]] = v[k];
    }
    return out;
}

std::vector<int> invert(std::span<const int> perm)
{
    std::vector<int> out(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        out[perm[k]] = static_cast<int>(k);
    }
    return out;
}

} // namespace

AffinePermutation::AffinePermutation(std::vector<int> finite_part, QVector translation)
    : perm_(std::move(finite_part))
    , gamma_(std::move(translation))
{
    check_rank(rank(), gamma_.rank());
    std::vector<bool> seen(perm_.size(), false);
    for (const int image : perm_) {
        if (image < 0 || image >= rank() || seen[image]) {
            throw std::invalid_argument("finite part is not a permutation");
        }
        seen[image] = true;
    }
}

AffinePermutation AffinePermutation::identity(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    return {std::move(perm), QVector::zero(n)};
}

AffinePermutation AffinePermutation::translation_by(const QVector& gamma)
{
    auto w = identity(gamma.rank());
    w.gamma_ = gamma;
    return w;
}

QVector AffinePermutation::origin_image() const
{
    return QVector(permute(perm_, gamma_.entries()));
}

AffinePermutation generator(int i, int n)
{
    if (n < 2) {
        throw std::out_of_range("rank must be at least 2");
    }
    if (i < 0 || i >= n) {
        throw std::out_of_range("generator index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
    }
    auto w = AffinePermutation::identity(n);
    std::vector<int> perm(w.finite_part().begin(), w.finite_part().end());
    if (i == 0) {
        // s_0(a) = (a_n + 1, a_2, ..., a_{n-1}, a_1 - 1) = swap_{1,n}(a + (-1, 0, ..., 0, 1))
        std::swap(perm.front(), perm.back());
        std::vector<Int> gamma(static_cast<std::size_t>(n), 0);
        gamma.front() = -1;
        gamma.back() = 1;
        return {std::move(perm), QVector(std::move(gamma))};
    }
    std::swap(perm[i - 1], perm[i]);
    return {std::move(perm), QVector::zero(n)};
}

AffinePermutation compose(const AffinePermutation& w1, const AffinePermutation& w2)
{
    check_rank(w1.rank(), w2.rank());
    const auto u1 = w1.finite_part();
    const auto u2 = w2.finite_part();
    const auto n = static_cast<std::size_t>(w1.rank());

    std::vector<int> perm(n);
    for (std::size_t k = 0; k < n; ++k) {
        perm[k] = u1[u2[k]];
    }
    // gamma = u2^{-1}(gamma1) + gamma2
    const auto u2_inv = invert(u2);
    auto gamma = permute(u2_inv, w1.translation().entries());
    for (std::size_t k = 0; k < n; ++k) {
        gamma[k] += w2.translation()[k];
    }
    return {std::move(perm), QVector(std::move(gamma))};
}

AffinePermutation inverse(const AffinePermutation& w)
{
    auto gamma = permute(w.finite_part(), w.translation().entries());
    for (auto& g : gamma) {
        g = -g;
    }
    return {invert(w.finite_part()), QVector(std::move(gamma))};
}

RationalPoint act_point(const AffinePermutation& w, const RationalPoint& p)
{
    check_rank(w.rank(), p.rank());
    std::vector<Int> shifted(p.numerators().begin(), p.numerators().end());
    for (std::size_t k = 0; k < shifted.size(); ++k) {
        shifted[k] += w.translation()[k] * p.denominator();
    }
    return {permute(w.finite_part(), shifted), p.denominator()};
}

QVector act_vector(const AffinePermutation& w, const QVector& v)
{
    check_rank(w.rank(), v.rank());
    std::vector<Int> shifted(v.entries().begin(), v.entries().end());
    for (std::size_t k = 0; k < shifted.size(); ++k) {
        shifted[k] += w.translation()[k];
    }
    return QVector(permute(w.finite_part(), shifted));
}

FiniteRoot act_finite_root(const AffinePermutation& w, FiniteRoot root)
{
    if (root.i >= w.rank() || root.j >= w.rank()) {
        throw DimensionMismatch("root outside the group's rank");
    }
    return {w.finite_part()[root.i], w.finite_part()[root.j]};
}

AffineRoot act_affine_root(const AffinePermutation& w, const AffineRoot& r)
{
    return {act_finite_root(w, r.root), r.level - pairing(w.translation(), r.root)};
}

Int inversion_level_bound(const AffinePermutation& w)
{
    Int bound = 0;
    for (const auto root : positive_roots(w.rank())) {
        const Int c = pairing(w.translation(), root);
        bound = std::max(bound, c < 0 ? -c : c);
    }
    return bound + 1;
}

std::vector<AffineRoot> inversion_set(const AffinePermutation& w)
{
    const int n = w.rank();
    const Int bound = inversion_level_bound(w);
    std::vector<AffineRoot> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            for (Int k = 0; k <= bound; ++k) {
                const AffineRoot r{{i, j}, k};
                if (r.is_positive() && !act_affine_root(w, r).is_positive()) {
                    out.push_back(r);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int length(const AffinePermutation& w)
{
    // For a finite root alpha with c = <gamma, alpha>, the level k root
    // alpha + k delta is positive for k >= (alpha > 0 ? 0 : 1) and its image
    // u(alpha) + (k - c) delta is negative for k <= (u(alpha) < 0 ? c : c - 1).
    const int n = w.rank();
    const auto u = w.finite_part();
    Int total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const Int c = w.translation()[i] - w.translation()[j];
            const Int lo = i < j ? 0 : 1;
            const Int hi = u[i] > u[j] ? c : c - 1;
            total += std::max<Int>(0, hi - lo + 1);
        }
    }
    return total;
}

bool has_right_descent(const AffinePermutation& w, int i)
{
    return !act_affine_root(w, affine_simple_root(i, w.rank())).is_positive();
}

AffinePermutation from_word(std::span<const int> word, int n)
{
    auto w = AffinePermutation::identity(n);
    for (const int letter : word) {
        w = compose(w, generator(letter, n));
    }
    return w;
}

std::vector<int> word_for(const AffinePermutation& w)
{
    const int n = w.rank();
    std::vector<int> stripped;
    auto current = w;
    for (;;) {
        int descent = -1;
        for (int i = 0; i < n; ++i) {
            if (has_right_descent(current, i)) {
                descent = i;
                break;
            }
        }
        if (descent < 0) {
            break;
        }
        stripped.push_back(descent);
        current = compose(current, generator(descent, n));
    }
    // w = s_{r_l} ... s_{r_1} where r_1 was stripped first.
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

AffinePermutation min_length_in_translation_coset(const QVector& gamma)
{
    // Every coset member maps 0 to gamma. The level-0 inversions vanish
    // exactly when u lists the coordinates of gamma in increasing order,
    // ties kept in index order; then the translation part is sorted gamma.
    const int n = gamma.rank();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return gamma[a] < gamma[b]; });

    std::vector<Int> sorted(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        sorted[k] = gamma[order[k]];
    }
    return {std::move(order), QVector(std::move(sorted))};
}

} // namespace shicores
