#pragma once

// Type A_{n-1} root system inside V = {v in Q^n : sum v_i = 0}.
//
// Coordinates are 0-based in code: FiniteRoot{i, j} is e_{i+1} - e_{j+1} in
// the usual 1-based notation, and simple_root(k, n) is alpha_k for
// k = 1..n-1. Everything is exact integer/rational arithmetic.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shicores {

using Int = std::int64_t;

struct FiniteRoot {
    int i = 0;
    int j = 1;

    bool is_positive() const { return i < j; }
    FiniteRoot negated() const { return {j, i}; }

    auto operator<=>(const FiniteRoot&) const = default;
};

// Checked constructor: 0 <= i, j < n and i != j.
FiniteRoot make_root(int i, int j, int n);
// alpha_k = e_k - e_{k+1}, k in 1..n-1.
FiniteRoot simple_root(int k, int n);
// theta = e_1 - e_n.
FiniteRoot highest_root(int n);
// Positive roots ordered lexicographically by (i, j).
std::vector<FiniteRoot> positive_roots(int n);

// "e1-e3"
std::string to_string(FiniteRoot root);

// Element of the root lattice Q: integer vector with zero sum.
class QVector {
public:
    QVector() = default;
    explicit QVector(std::vector<Int> entries);

    static QVector zero(int n);

    int rank() const { return static_cast<int>(entries_.size()); }
    std::span<const Int> entries() const { return entries_; }
    Int operator[](std::size_t k) const { return entries_[k]; }

    auto operator<=>(const QVector&) const = default;

private:
    std::vector<Int> entries_;
};

// "[2,0,0,-2]"
std::string to_string(const QVector& v);

// Exact rational with positive denominator, always in lowest terms.
struct Rational {
    Int num = 0;
    Int den = 1;

    static Rational make(Int num, Int den);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

Rational operator-(const Rational& a);
std::string to_string(const Rational& r);

// Point of V with a common denominator, stored in lowest terms.
class RationalPoint {
public:
    RationalPoint() = default;
    RationalPoint(std::vector<Int> numerators, Int denominator);

    static RationalPoint from(const QVector& v);

    int rank() const { return static_cast<int>(numerators_.size()); }
    std::span<const Int> numerators() const { return numerators_; }
    Int denominator() const { return denominator_; }
    Rational coordinate(std::size_t k) const { return Rational::make(numerators_[k], denominator_); }

    auto operator<=>(const RationalPoint&) const = default;

private:
    std::vector<Int> numerators_;
    Int denominator_ = 1;
};

std::string to_string(const RationalPoint& p);

// <v, e_i - e_j> = v_i - v_j
Int pairing(const QVector& v, FiniteRoot root);
Rational pairing(const RationalPoint& p, FiniteRoot root);

// root + level * delta
struct AffineRoot {
    FiniteRoot root;
    Int level = 0;

    bool is_positive() const { return level > 0 || (level == 0 && root.is_positive()); }
    AffineRoot negated() const { return {root.negated(), -level}; }

    auto operator<=>(const AffineRoot&) const = default;
};

// alpha_i for i in 1..n-1, and alpha_0 = delta - theta.
AffineRoot affine_simple_root(int i, int n);

// -theta + 4 delta for n = 3 prints as "e3-e1+4d".
std::string to_string(const AffineRoot& r);

// H_{root, level}, normalised so that root is positive.
class Hyperplane {
public:
    Hyperplane(FiniteRoot root, Int level);

    FiniteRoot root() const { return root_; }
    Int level() const { return level_; }

    auto operator<=>(const Hyperplane&) const = default;

private:
    FiniteRoot root_;
    Int level_;
};

std::string to_string(const Hyperplane& h);

enum class Side { Negative, On, Positive };

Side side_of(const RationalPoint& p, const Hyperplane& h);

// rho / n, the canonical interior point of the fundamental alcove.
RationalPoint fundamental_sample_point(int n);

// 0 and the fundamental coweights omega_1 .. omega_{n-1}.
std::vector<RationalPoint> fundamental_alcove_vertices(int n);

} // namespace shicores
