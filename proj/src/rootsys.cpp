#include "shicores/rootsys.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shicores/errors.hpp"

namespace shicores {

namespace {

void check_index(int k, int n)
{
    if (k < 0 || k >= n) {
        throw DimensionMismatch("root index " + std::to_string(k) + " outside rank " + std::to_string(n));
    }
}

void check_root(const std::span<const Int> v, FiniteRoot root)
{
    const int n = static_cast<int>(v.size());
    check_index(root.i, n);
    check_index(root.j, n);
}

} // namespace

FiniteRoot make_root(int i, int j, int n)
{
    check_index(i, n);
    check_index(j, n);
    if (i == j) {
        throw std::invalid_argument("a root needs two distinct indices");
    }
    return {i, j};
}

FiniteRoot simple_root(int k, int n)
{
    if (k < 1 || k >= n) {
        throw std::out_of_range("simple root index must lie in 1..n-1");
    }
    return {k - 1, k};
}

FiniteRoot highest_root(int n)
{
    if (n < 2) {
        throw std::out_of_range("rank must be at least 2");
    }
    return {0, n - 1};
}

std::vector<FiniteRoot> positive_roots(int n)
{
    std::vector<FiniteRoot> roots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            roots.push_back({i, j});
        }
    }
    return roots;
}

std::string to_string(FiniteRoot root)
{
    return "e" + std::to_string(root.i + 1) + "-e" + std::to_string(root.j + 1);
}

QVector::QVector(std::vector<Int> entries)
    : entries_(std::move(entries))
{
    if (std::accumulate(entries_.begin(), entries_.end(), Int{0}) != 0) {
        throw std::invalid_argument("root lattice vector must sum to zero");
    }
}

QVector QVector::zero(int n)
{
    return QVector(std::vector<Int>(static_cast<std::size_t>(n), 0));
}

std::string to_string(const QVector& v)
{
    std::string out = "[";
    for (int k = 0; k < v.rank(); ++k) {
        if (k) {
            out += ',';
        }
        out += std::to_string(v[k]);
    }
    return out + "]";
}

Rational Rational::make(Int num, Int den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Int g = std::gcd(num, den);
    return {num / g, den / g};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    return a.num * b.den <=> b.num * a.den;
}

Rational operator-(const Rational& a)
{
    return {-a.num, a.den};
}

std::string to_string(const Rational& r)
{
    if (r.den == 1) {
        return std::to_string(r.num);
    }
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

RationalPoint::RationalPoint(std::vector<Int> numerators, Int denominator)
    : numerators_(std::move(numerators))
    , denominator_(denominator)
{
    if (denominator_ == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (std::accumulate(numerators_.begin(), numerators_.end(), Int{0}) != 0) {
        throw std::invalid_argument("point must lie in the sum-zero subspace");
    }
    if (denominator_ < 0) {
        denominator_ = -denominator_;
        for (auto& a : numerators_) {
            a = -a;
        }
    }
    Int g = denominator_;
    for (const auto a : numerators_) {
        g = std::gcd(g, a);
    }
    denominator_ /= g;
    for (auto& a : numerators_) {
        a /= g;
    }
}

RationalPoint RationalPoint::from(const QVector& v)
{
    return RationalPoint({v.entries().begin(), v.entries().end()}, 1);
}

std::string to_string(const RationalPoint& p)
{
    std::ostringstream os;
    if (p.denominator() != 1) {
        os << "(1/" << p.denominator() << ")";
    }
    os << "(";
    for (int k = 0; k < p.rank(); ++k) {
        os << (k ? "," : "") << p.numerators()[k];
    }
    os << ")";
    return os.str();
}

Int pairing(const QVector& v, FiniteRoot root)
{
    check_root(v.entries(), root);
    return v[root.i] - v[root.j];
}

Rational pairing(const RationalPoint& p, FiniteRoot root)
{
    check_root(p.numerators(), root);
    return Rational::make(p.numerators()[root.i] - p.numerators()[root.j], p.denominator());
}

AffineRoot affine_simple_root(int i, int n)
{
    if (i < 0 || i >= n) {
        throw std::out_of_range("residue must lie in 0..n-1");
    }
    if (i == 0) {
        return {highest_root(n).negated(), 1};
    }
    return {simple_root(i, n), 0};
}

std::string to_string(const AffineRoot& r)
{
    std::string out = to_string(r.root);
    if (r.level > 0) {
        out += "+" + std::to_string(r.level) + "d";
    } else if (r.level < 0) {
        out += std::to_string(r.level) + "d";
    }
    return out;
}

Hyperplane::Hyperplane(FiniteRoot root, Int level)
    : root_(root.is_positive() ? root : root.negated())
    , level_(root.is_positive() ? level : -level)
{
    if (root.i == root.j) {
        throw std::invalid_argument("degenerate root");
    }
}

std::string to_string(const Hyperplane& h)
{
    return "H(" + to_string(h.root()) + "," + std::to_string(h.level()) + ")";
}

Side side_of(const RationalPoint& p, const Hyperplane& h)
{
    const auto value = pairing(p, h.root());
    const auto c = value <=> Rational{h.level(), 1};
    if (c > 0) {
        return Side::Positive;
    }
    if (c < 0) {
        return Side::Negative;
    }
    return Side::On;
}

RationalPoint fundamental_sample_point(int n)
{
    // rho_k = (n + 1 - 2k) / 2 for k = 1..n, divided by n: common denominator 2n.
    std::vector<Int> num(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        num[k] = n - 1 - 2 * k;
    }
    return RationalPoint(std::move(num), 2 * Int{n});
}

std::vector<RationalPoint> fundamental_alcove_vertices(int n)
{
    std::vector<RationalPoint> vertices;
    vertices.push_back(RationalPoint::from(QVector::zero(n)));
    // omega_j = (1 - j/n, ..., 1 - j/n, -j/n, ..., -j/n) with j leading entries.
    for (int j = 1; j < n; ++j) {
        std::vector<Int> num(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            num[k] = k < j ? n - j : -j;
        }
        vertices.emplace_back(std::move(num), n);
    }
    return vertices;
}

} // namespace shicores
