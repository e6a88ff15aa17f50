#include "shicores/verify.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "shicores/errors.hpp"

namespace shicores {

void CheckResult::record(bool passed, const std::string& detail)
{
    ++cases;
    if (!passed) {
        if (failures == 0) {
            first_failure = detail;
        }
        ++failures;
    }
}

AffinePermutation random_group_element(int n, Rng& rng, int max_word_length)
{
    std::uniform_int_distribution<int> len(0, max_word_length);
    std::uniform_int_distribution<int> letter(0, n - 1);
    std::vector<int> word(static_cast<std::size_t>(len(rng)));
    for (auto& r : word) {
        r = letter(rng);
    }
    return from_word(word, n);
}

RationalPoint random_point(int n, Rng& rng)
{
    std::uniform_int_distribution<Int> num(-60, 60);
    std::uniform_int_distribution<Int> den(1, 12);
    std::vector<Int> coords(static_cast<std::size_t>(n));
    Int sum = 0;
    for (int k = 0; k + 1 < n; ++k) {
        coords[k] = num(rng);
        sum += coords[k];
    }
    coords[n - 1] = -sum;
    return {std::move(coords), den(rng)};
}

QVector random_qvector(int n, Rng& rng, Int magnitude)
{
    std::uniform_int_distribution<Int> entry(-magnitude, magnitude);
    std::vector<Int> coords(static_cast<std::size_t>(n));
    Int sum = 0;
    for (int k = 0; k + 1 < n; ++k) {
        coords[k] = entry(rng);
        sum += coords[k];
    }
    coords[n - 1] = -sum;
    return QVector(std::move(coords));
}

CheckResult check_presentation(int n, std::size_t cases, Rng& rng)
{
    CheckResult result{"presentation relations"};
    std::vector<AffinePermutation> s;
    for (int i = 0; i < n; ++i) {
        s.push_back(generator(i, n));
    }
    auto same_map = [](const AffinePermutation& a, const AffinePermutation& b, const RationalPoint& p) {
        return act_point(a, p) == act_point(b, p);
    };
    const auto id = AffinePermutation::identity(n);
    for (std::size_t c = 0; c < cases; ++c) {
        const auto p = random_point(n, rng);
        for (int i = 0; i < n; ++i) {
            result.record(same_map(s[i] * s[i], id, p), "s_" + std::to_string(i) + "^2 != 1 at " + to_string(p));
            for (int j = i + 1; j < n; ++j) {
                const int gap = (j - i) % n;
                const bool adjacent = gap == 1 || gap == n - 1;
                std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ") at " + to_string(p);
                if (n == 2) {
                    continue; // only s_i^2 = 1
                }
                if (adjacent) {
                    result.record(same_map(s[i] * s[j] * s[i], s[j] * s[i] * s[j], p), "braid relation fails " + tag);
                } else {
                    result.record(same_map(s[i] * s[j], s[j] * s[i], p), "commutation fails " + tag);
                }
            }
        }
    }
    return result;
}

CheckResult check_inversion_separation(int n, std::size_t cases, Rng& rng)
{
    CheckResult result{"inversion set vs separating hyperplanes"};
    const auto p0 = fundamental_sample_point(n);
    for (std::size_t c = 0; c < cases; ++c) {
        const auto w = random_group_element(n, rng);
        const auto inv = inversion_set(w);
        const std::set<AffineRoot> inversions(inv.begin(), inv.end());
        const auto p = act_point(inverse(w), p0);
        const Int bound = inversion_level_bound(w) + 1;
        bool ok = static_cast<Int>(inv.size()) == length(w);
        std::string detail = "length disagrees with |Inv| for w(0) = " + to_string(w.origin_image());
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j < n && ok; ++j) {
                if (i == j) {
                    continue;
                }
                for (Int k = 0; k <= bound; ++k) {
                    const AffineRoot r{{i, j}, k};
                    if (!r.is_positive()) {
                        continue;
                    }
                    const bool separated = pairing(p, r.root.negated()) > Rational{k, 1};
                    if (separated != inversions.contains(r)) {
                        ok = false;
                        detail = "root " + to_string(r) + " for w(0) = " + to_string(w.origin_image());
                        break;
                    }
                }
            }
        }
        result.record(ok, detail);
    }
    return result;
}

CheckResult check_minimal_coset_shape(int n, std::size_t cases, Rng& rng)
{
    CheckResult result{"minimal coset representative inversion shape"};
    for (std::size_t c = 0; c < cases; ++c) {
        const auto gamma = random_qvector(n, rng, 6);
        const auto w = min_length_in_translation_coset(gamma);
        const auto inv = inversion_set(w);
        const std::set<AffineRoot> inversions(inv.begin(), inv.end());
        bool ok = w.origin_image() == gamma;
        for (const auto& r : inv) {
            ok = ok && !r.root.is_positive() && r.level > 0;
            if (r.level > 1) {
                ok = ok && inversions.contains(AffineRoot{r.root, r.level - 1});
            }
        }
        ok = ok && is_dominant(Alcove{inverse(w)});
        result.record(ok, "gamma = " + to_string(gamma));
    }
    return result;
}

CheckResult check_add_remove_exclusivity(int n, const std::vector<Partition>& cores)
{
    CheckResult result{"addable/removable exclusivity"};
    for (const auto& core : cores) {
        const auto counts = box_counts(core, n);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            ok = ok && (counts.addable[i] == 0 || counts.removable[i] == 0);
        }
        result.record(ok, to_string(core));
    }
    return result;
}

CheckResult check_flush_iff_core(int n, const std::vector<Partition>& partitions)
{
    CheckResult result{"flush abacus iff n-core"};
    for (const auto& p : partitions) {
        bool flush = true;
        try {
            (void)Abacus::balanced(p, n);
        } catch (const NotACore&) {
            flush = false;
        }
        result.record(flush == is_t_core_hooks(p, n), to_string(p));
    }
    return result;
}

CheckResult check_equivariance(int n, std::size_t cases, Rng& rng)
{
    CheckResult result{"n-vector equivariance"};
    std::uniform_int_distribution<int> residue(0, n - 1);
    for (std::size_t c = 0; c < cases; ++c) {
        const auto core = core_from_vector(random_qvector(n, rng, 4));
        const int i = residue(rng);
        const auto lhs = n_vector(apply_generator_core(core, i, n), n);
        const auto rhs = act_vector(generator(i, n), n_vector(core, n));
        result.record(lhs == rhs, "s_" + std::to_string(i) + " on " + to_string(core));
    }
    return result;
}

CheckResult check_t_core_criteria(int n, const std::vector<Partition>& cores, int max_t)
{
    CheckResult result{"t-core criteria agreement"};
    for (const auto& core : cores) {
        const auto v = n_vector(core, n);
        for (int t = 1; t <= max_t; ++t) {
            if (std::gcd(n, t) != 1) {
                continue;
            }
            const bool hooks = is_t_core_hooks(core, t);
            bool ok = hooks == anderson_is_t_core(core, n, t);
            if (t > 1 && (t - 1) % n == 0) {
                ok = ok && hooks == satisfies_mn1_inequalities(v, (t - 1) / n);
            }
            result.record(ok, to_string(core) + " with t = " + std::to_string(t));
        }
    }
    return result;
}

CheckResult check_removable_bridge(int n, const std::vector<Partition>& cores)
{
    CheckResult result{"removable count vs n-vector pairing"};
    for (const auto& core : cores) {
        const auto v = n_vector(core, n);
        const auto counts = box_counts(core, n);
        for (int i = 0; i < n; ++i) {
            const int removed = counts.addable[i] == 0 ? counts.removable[i] : 0;
            const Int predicted = i == 0 ? pairing(v, highest_root(n)) - 1 : -pairing(v, simple_root(i, n));
            const bool ok = (removed > 0 || predicted > 0) ? predicted == removed : true;
            result.record(ok, "residue " + std::to_string(i) + " of " + to_string(core));
        }
    }
    return result;
}

CheckResult check_vector_roundtrip(int n, std::size_t cases, Rng& rng)
{
    CheckResult result{"n-vector round trips"};
    for (std::size_t c = 0; c < cases; ++c) {
        const auto v = random_qvector(n, rng, 5);
        const auto core = core_from_vector(v);
        bool ok = is_t_core_hooks(core, n) && n_vector(core, n) == v;
        ok = ok && core_from_vector(n_vector(core, n)) == core;
        result.record(ok, to_string(v));
    }
    return result;
}

CheckResult check_catalog(const RegionCatalog& catalog)
{
    const int n = catalog.n;
    const int m = catalog.m;
    CheckResult result{"catalog n=" + std::to_string(n) + " m=" + std::to_string(m)};

    const auto expected = anderson_count(n, m);
    result.record(expected == catalog.entries.size(),
                  std::to_string(catalog.entries.size()) + " entries, expected " + expected.str());

    std::set<Partition> cores;
    std::set<QVector> vectors;
    std::set<AffinePermutation> elements;
    for (const auto& e : catalog.entries) {
        cores.insert(e.core);
        vectors.insert(e.vector);
        elements.insert(e.group_element);

        const auto alcove = e.alcove();
        const auto tag = to_string(e.core);
        result.record(is_t_core_hooks(e.core, n) && is_t_core_hooks(e.core, m * n + 1), tag + " is not an (n, mn+1)-core");
        result.record(is_dominant(alcove) && is_m_minimal(alcove, m), tag + " alcove not dominant m-minimal");
        result.record(phi(e.core, n) == alcove, tag + " phi disagrees with catalog alcove");
        result.record(phi_inverse(alcove) == e.core, tag + " phi_inverse does not round trip");
        result.record(apply_word_core(e.word, Partition{}, n) == e.core, tag + " word does not rebuild the core");
        result.record(static_cast<Int>(e.word.size()) == length(e.group_element), tag + " word not reduced");
        result.record(n_vector(e.core, n) == e.vector, tag + " stored vector is not the n-vector");
        bool bounded = true;
        for (int i = 0; i < n; ++i) {
            bounded = bounded && e.removable[i] <= m;
        }
        result.record(bounded, tag + " has more than m removable boxes of a residue");
    }
    const auto size = catalog.entries.size();
    result.record(cores.size() == size && vectors.size() == size && elements.size() == size,
                  "catalog entries are not pairwise distinct");
    return result;
}

CheckResult check_region_oracle(int n, int m)
{
    CheckResult result{"brute-force regions n=" + std::to_string(n) + " m=" + std::to_string(m)};
    std::vector<DominantRegion> regions;
    Int radius = m + 2;
    for (;; ++radius) {
        try {
            regions = bruteforce_dominant_regions(n, m, radius);
            break;
        } catch (const RadiusTooSmall& e) {
            if (radius > m + 12) {
                result.record(false, e.what());
                return result;
            }
        } catch (const OracleFailure& e) {
            result.record(false, e.what());
            return result;
        }
    }

    std::set<AffinePermutation> brute;
    for (const auto& r : regions) {
        brute.insert(r.minimal.x);
        result.record(r.m_minimal_count == 1, "region with " + std::to_string(r.m_minimal_count)
                                                  + " m-minimal alcoves, shortest x(0) = "
                                                  + to_string(r.minimal.x.origin_image()));
    }
    std::set<AffinePermutation> listed;
    for (const auto& e : enumerate(n, m).entries) {
        listed.insert(inverse(e.group_element));
    }
    result.record(brute == listed, std::to_string(brute.size()) + " brute-force regions vs " + std::to_string(listed.size())
                                       + " catalog alcoves");
    return result;
}

} // namespace shicores
