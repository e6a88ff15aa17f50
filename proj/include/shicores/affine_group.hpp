#pragma once

// The affine symmetric group acting on V.
//
// An element is stored as w = u o t_gamma with u a permutation of the n
// coordinates and gamma in Q, so that w(p) = u(p + gamma). A permutation
// moves the k-th coordinate to position u(k): (u p)_{u(k)} = p_k.
// Composition is functional: (w1 * w2)(p) = w1(w2(p)), and a word
// [r_1, ..., r_l] denotes s_{r_1} * ... * s_{r_l}, so its last letter acts
// on points first.

#include <compare>
#include <span>
#include <vector>

#include "shicores/rootsys.hpp"

namespace shicores {

class AffinePermutation {
public:
    AffinePermutation() = default;
    // finite_part[k] = u(k); translation = gamma.
    AffinePermutation(std::vector<int> finite_part, QVector translation);

    static AffinePermutation identity(int n);
    static AffinePermutation translation_by(const QVector& gamma);

    int rank() const { return static_cast<int>(perm_.size()); }
    std::span<const int> finite_part() const { return perm_; }
    const QVector& translation() const { return gamma_; }

    // w(0, ..., 0) = u(gamma).
    QVector origin_image() const;

    auto operator<=>(const AffinePermutation&) const = default;

private:
    std::vector<int> perm_;
    QVector gamma_;
};

AffinePermutation generator(int i, int n);
AffinePermutation compose(const AffinePermutation& w1, const AffinePermutation& w2);
AffinePermutation inverse(const AffinePermutation& w);

inline AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b)
{
    return compose(a, b);
}

RationalPoint act_point(const AffinePermutation& w, const RationalPoint& p);
QVector act_vector(const AffinePermutation& w, const QVector& v);

// u(e_i - e_j) = e_{u(i)} - e_{u(j)} for the finite part only.
FiniteRoot act_finite_root(const AffinePermutation& w, FiniteRoot root);

// u t_gamma sends alpha + k delta to u(alpha) + (k - <gamma, alpha>) delta.
AffineRoot act_affine_root(const AffinePermutation& w, const AffineRoot& r);

// Positive affine roots sent negative, sorted. Scans delta-levels
// 0..1 + max |<gamma, alpha>|, beyond which no inversion exists.
std::vector<AffineRoot> inversion_set(const AffinePermutation& w);

// Bound used by inversion_set.
Int inversion_level_bound(const AffinePermutation& w);

// Counts inversions per finite root in closed form; equals
// inversion_set(w).size().
Int length(const AffinePermutation& w);

// True when length(w * s_i) < length(w), i.e. w(alpha_i) < 0.
bool has_right_descent(const AffinePermutation& w, int i);

AffinePermutation from_word(std::span<const int> word, int n);

// Reduced word by greedy right-descent stripping, smallest residue first.
std::vector<int> word_for(const AffinePermutation& w);

// The minimal length element of t_gamma S_n: w(0) = gamma and no level-0
// inversions. Its inverse maps A_0 into the dominant chamber.
AffinePermutation min_length_in_translation_coset(const QVector& gamma);

} // namespace shicores
