#include "shicores/bijection.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shicores/errors.hpp"

namespace shicores {

namespace {

void check_params(int n, int m)
{
    if (n < 2 || m < 1) {
        throw std::invalid_argument("need n >= 2 and m >= 1");
    }
}

CatalogEntry make_entry(const QVector& gamma, int m)
{
    const int n = gamma.rank();
    CatalogEntry e;
    e.core = core_from_vector(gamma);
    e.vector = gamma;
    e.group_element = min_length_in_translation_coset(gamma);
    e.word = word_for(e.group_element);
    e.removable = box_counts(e.core, n).removable;
    e.narayana_k = static_cast<int>(std::count(e.removable.counts.begin(), e.removable.counts.end(), m));
    return e;
}

void sort_entries(std::vector<CatalogEntry>& entries)
{
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        const int sa = a.core.size();
        const int sb = b.core.size();
        return sa != sb ? sa < sb : a.core < b.core;
    });
}

// Gaps d_i = a_i - a_{i+1} >= -m with sum d_i = a_1 - a_n <= m + 1. The
// vector is a_n + suffix sums of d, with a_n fixed by the zero sum.
template <typename Visit>
void visit_lattice_points(int n, int m, Visit visit)
{
    std::vector<Int> gaps(static_cast<std::size_t>(n - 1));
    auto recurse = [&](auto&& self, int index, Int gap_sum) -> void {
        if (index == n - 1) {
            Int weighted = 0;
            for (int i = 0; i < n - 1; ++i) {
                weighted += Int{i + 1} * gaps[i];
            }
            if (weighted % n != 0) {
                return;
            }
            std::vector<Int> a(static_cast<std::size_t>(n));
            a[n - 1] = -weighted / n;
            for (int i = n - 2; i >= 0; --i) {
                a[i] = a[i + 1] + gaps[i];
            }
            visit(QVector(std::move(a)));
            return;
        }
        const Int remaining = n - 2 - index;
        for (Int d = -m; d <= m + 1 - gap_sum + m * remaining; ++d) {
            gaps[index] = d;
            self(self, index + 1, gap_sum + d);
        }
    };
    recurse(recurse, 0, 0);
}

} // namespace

Alcove phi(const Partition& core, int n)
{
    return {inverse(min_length_in_translation_coset(n_vector(core, n)))};
}

Partition phi_inverse(const Alcove& a)
{
    if (!is_dominant(a)) {
        throw std::invalid_argument("phi_inverse needs a dominant alcove");
    }
    return core_from_vector(inverse(a.x).origin_image());
}

bool in_dilated_alcove(const RationalPoint& p, int m)
{
    const int n = p.rank();
    for (int i = 1; i < n; ++i) {
        if (pairing(p, simple_root(i, n)) < Rational{-m, 1}) {
            return false;
        }
    }
    return pairing(p, highest_root(n)) <= Rational{m + 1, 1};
}

std::vector<QVector> lattice_points_in_dilated_alcove(int n, int m)
{
    check_params(n, m);
    std::vector<QVector> out;
    visit_lattice_points(n, m, [&](QVector v) { out.push_back(std::move(v)); });
    return out;
}

RegionCatalog enumerate_serial(int n, int m)
{
    check_params(n, m);
    RegionCatalog catalog{n, m, {}};
    visit_lattice_points(n, m, [&](const QVector& v) { catalog.entries.push_back(make_entry(v, m)); });
    sort_entries(catalog.entries);
    return catalog;
}

RegionCatalog enumerate(int n, int m)
{
    const auto points = lattice_points_in_dilated_alcove(n, m);
    const auto count = static_cast<std::ptrdiff_t>(points.size());
    RegionCatalog catalog{n, m, std::vector<CatalogEntry>(points.size())};

#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        catalog.entries[k] = make_entry(points[k], m);
    }

    sort_entries(catalog.entries);
    return catalog;
}

std::vector<std::uint64_t> narayana_histogram(const RegionCatalog& catalog)
{
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(catalog.n), 0);
    for (const auto& e : catalog.entries) {
        if (e.narayana_k >= catalog.n) {
            throw OracleFailure("core " + to_string(e.core) + " has m removable boxes of every residue");
        }
        ++hist[e.narayana_k];
    }
    return hist;
}

std::vector<std::uint64_t> narayana_histogram(int n, int m)
{
    return narayana_histogram(enumerate(n, m));
}

boost::multiprecision::cpp_int anderson_count(int n, int m)
{
    check_params(n, m);
    using boost::multiprecision::cpp_int;
    const cpp_int s = cpp_int(m) * n + 1;
    const cpp_int total = s + n;
    // binom(s + n, n) built incrementally; every prefix product is integral.
    cpp_int binom = 1;
    for (int k = 1; k <= n; ++k) {
        binom = binom * (s + k) / k;
    }
    return binom / total;
}

HaimanReport verify_haiman(int n, int m)
{
    check_params(n, m);
    HaimanReport report;
    report.n = n;
    report.m = m;
    report.expected = 1;
    for (int k = 0; k < n - 1; ++k) {
        report.expected *= static_cast<std::uint64_t>(m) * n + 1;
    }

    auto inside = [m](const Alcove& a) {
        const auto vs = a.vertices();
        return std::all_of(vs.begin(), vs.end(), [m](const RationalPoint& v) { return in_dilated_alcove(v, m); });
    };
    auto fail = [&report](std::string message) {
        report.ok = false;
        report.counterexample = std::move(message);
        return report;
    };

    const auto region = alcoves_bfs(n, inside);
    report.alcoves_in_region = region.size();
    if (region.size() != report.expected) {
        return fail("found " + std::to_string(region.size()) + " alcoves in A_m, expected "
                    + std::to_string(report.expected));
    }

    std::set<AffinePermutation> images;
    for (const auto& a : region) {
        const Alcove image{inverse(a.x)};
        if (!is_m_minimal(image, m)) {
            return fail("x^-1 A_0 is not m-minimal for x(0) = " + to_string(a.x.origin_image()));
        }
        images.insert(image.x);
    }

    // Unrestricted search in the box |<p, alpha>| < radius, widened until the
    // number of m-minimal alcoves stops changing.
    auto in_box = [n](Int radius) {
        return [n, radius](const Alcove& a) {
            const auto p = a.sample_point();
            for (const auto root : positive_roots(n)) {
                const auto value = pairing(p, root);
                if (value >= Rational{radius, 1} || value <= Rational{-radius, 1}) {
                    return false;
                }
            }
            return true;
        };
    };
    auto minimal_in = [&](const std::vector<Alcove>& alcoves) {
        std::set<AffinePermutation> out;
        for (const auto& a : alcoves) {
            if (is_m_minimal(a, m)) {
                out.insert(a.x);
            }
        }
        return out;
    };

    constexpr Int max_extra = 6;
    Int radius = m + 2;
    auto box = alcoves_bfs(n, in_box(radius));
    auto minimal = minimal_in(box);
    for (;;) {
        auto wider_box = alcoves_bfs(n, in_box(radius + 1));
        auto wider = minimal_in(wider_box);
        if (wider.size() == minimal.size()) {
            break;
        }
        if (radius >= m + 2 + max_extra) {
            return fail("m-minimal alcove count did not stabilise by radius " + std::to_string(radius));
        }
        ++radius;
        box = std::move(wider_box);
        minimal = std::move(wider);
    }
    report.search_radius = radius;
    report.m_minimal_alcoves = minimal.size();

    for (const auto& a : box) {
        const bool minimal_here = minimal.contains(a.x);
        const bool preimage_inside = inside(Alcove{inverse(a.x)});
        if (minimal_here != preimage_inside) {
            std::ostringstream os;
            os << "alcove with x(0) = " << to_string(a.x.origin_image()) << (minimal_here ? " is" : " is not")
               << " m-minimal but x^-1 A_0" << (preimage_inside ? " lies" : " does not lie") << " in A_m";
            return fail(os.str());
        }
    }
    if (minimal != images) {
        return fail("image of A_m differs from the set of m-minimal alcoves");
    }
    report.ok = true;
    return report;
}

} // namespace shicores
