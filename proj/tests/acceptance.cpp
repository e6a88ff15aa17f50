// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shicores/bijection.hpp"
#include "shicores/verify.hpp"

using namespace shicores;

namespace {

// Wall-clock budgets for the timed criteria, in seconds.
constexpr double kCountBudget = 60.0;
constexpr double kOracleBudget = 60.0;

constexpr std::size_t kPropertyCases = 200;
constexpr std::uint64_t kSeed = 20240229;

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what)
    {
        if (!ok && failure_.empty()) {
            failure_ = what;
        }
        ok_ = ok_ && ok;
    }

    void expect(const CheckResult& r)
    {
        std::ostringstream os;
        os << r.name << ": " << r.failures << "/" << r.cases << " failed, first: " << r.first_failure;
        expect(r.ok() && r.cases > 0, os.str());
        cases_ += r.cases;
    }

    std::size_t cases() const { return cases_; }

    bool report(double seconds) const
    {
        std::printf("%s  %-28s %8.2fs  %s\n", ok_ ? "PASS" : "FAIL", name_.c_str(), seconds,
                    ok_ ? "" : failure_.c_str());
        return ok_;
    }

private:
    std::string name_;
    bool ok_ = true;
    std::string failure_;
    std::size_t cases_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::set<Partition> parse_all(const std::vector<std::string>& texts)
{
    std::set<Partition> out;
    for (const auto& t : texts) {
        out.insert(Partition::parse(t));
    }
    return out;
}

bool counts()
{
    Criterion c("1 counts");
    const auto start = std::chrono::steady_clock::now();
    for (int n = 2; n <= 6; ++n) {
        for (int m = 1; m <= 3; ++m) {
            const auto size = enumerate(n, m).entries.size();
            c.expect(anderson_count(n, m) == size, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " gave "
                                                       + std::to_string(size));
        }
    }
    c.expect(anderson_count(3, 2) == 12, "anderson_count(3,2) != 12");
    c.expect(anderson_count(6, 3) == 7084, "anderson_count(6,3) != 7084");
    const double t = seconds_since(start);
    c.expect(t < kCountBudget, "over the time budget");
    return c.report(t);
}

bool narayana()
{
    Criterion c("2 narayana table");
    const auto start = std::chrono::steady_clock::now();
    const auto catalog = enumerate(3, 2);
    c.expect(narayana_histogram(catalog) == std::vector<std::uint64_t>{5, 6, 1}, "histogram is not (5,6,1)");
    const std::vector<std::set<Partition>> expected{
        parse_all({"-", "1", "2", "1,1", "3,1,1"}),
        parse_all({"3,1", "2,1,1", "2,2,1,1", "4,2", "5,3,1,1", "4,2,2,1,1"}),
        parse_all({"6,4,2,2,1,1"}),
    };
    std::vector<std::set<Partition>> got(3);
    for (const auto& e : catalog.entries) {
        got.at(static_cast<std::size_t>(e.narayana_k)).insert(e.core);
    }
    for (std::size_t k = 0; k < 3; ++k) {
        c.expect(got[k] == expected[k], "membership list " + std::to_string(k) + " differs");
    }
    return c.report(seconds_since(start));
}

bool worked_examples()
{
    Criterion c("3 worked examples");
    const auto start = std::chrono::steady_clock::now();
    c.expect(n_vector(Partition({5, 2, 1, 1, 1}), 4) == QVector({2, 0, 0, -2}), "n-vector of 5,2,1,1,1");
    c.expect(n_vector(Partition({5, 2, 2, 1, 1, 1}), 4) == QVector({2, 0, -2, 0}), "n-vector of 5,2,2,1,1,1");
    c.expect(first_column_hooks(Partition({5, 2, 1, 1, 1})) == std::vector<int>{9, 5, 3, 2, 1},
             "first-column hooks of 5,2,1,1,1");

    const Partition lambda({5, 3, 2, 2, 1, 1});
    const auto w = inverse(phi(lambda, 3).x);
    c.expect(length(w) == 7, "length is not 7");
    const auto inv = inversion_set(w);
    const std::set<AffineRoot> expected{
        {{1, 0}, 1}, {{1, 0}, 2}, {{2, 0}, 1}, {{2, 0}, 2}, {{2, 0}, 3}, {{2, 0}, 4}, {{2, 1}, 1},
    };
    c.expect(inv.size() == 7 && std::set<AffineRoot>(inv.begin(), inv.end()) == expected,
             "inversion set differs from the displayed one");
    return c.report(seconds_since(start));
}

bool oracle_equivalence()
{
    Criterion c("4 oracle equivalence");
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}}) {
        c.expect(check_region_oracle(n, m));
    }
    const double t = seconds_since(start);
    c.expect(t < kOracleBudget, "over the time budget");
    return c.report(t);
}

bool haiman()
{
    Criterion c("5 alcove bijection");
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::tuple<int, int, std::uint64_t>> cases{{2, 1, 3}, {2, 2, 5}, {3, 1, 16}, {3, 2, 49}};
    for (const auto& [n, m, expected] : cases) {
        const auto r = verify_haiman(n, m);
        const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": ";
        c.expect(r.ok, tag + r.counterexample);
        c.expect(r.expected == expected && r.alcoves_in_region == expected && r.m_minimal_alcoves == expected,
                 tag + std::to_string(r.alcoves_in_region) + " alcoves, expected " + std::to_string(expected));
    }
    return c.report(seconds_since(start));
}

bool properties()
{
    Criterion c("6 property suites");
    const auto start = std::chrono::steady_clock::now();
    Rng rng(kSeed);
    const auto partitions = partitions_up_to(20);
    for (int n = 2; n <= 5; ++n) {
        const auto cores = cores_up_to(n, 40);
        c.expect(check_presentation(n, kPropertyCases, rng));
        c.expect(check_inversion_separation(n, kPropertyCases, rng));
        c.expect(check_minimal_coset_shape(n, kPropertyCases, rng));
        c.expect(check_equivariance(n, kPropertyCases, rng));
        c.expect(check_add_remove_exclusivity(n, cores));
        c.expect(check_flush_iff_core(n, partitions));
        c.expect(check_t_core_criteria(n, cores, 13));
        c.expect(check_removable_bridge(n, cores));
    }
    return c.report(seconds_since(start));
}

bool roundtrips()
{
    Criterion c("7 round trips");
    const auto start = std::chrono::steady_clock::now();
    Rng rng(kSeed + 1);
    for (int n = 2; n <= 6; ++n) {
        c.expect(check_vector_roundtrip(n, kPropertyCases, rng));
    }
    for (int n = 2; n <= 5; ++n) {
        for (int m = 1; m <= 2; ++m) {
            for (const auto& e : enumerate(n, m).entries) {
                const auto tag = to_string(e.core) + " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
                c.expect(phi_inverse(phi(e.core, n)) == e.core, tag + ": phi_inverse(phi) differs");
                const auto w = inverse(phi(e.core, n).x);
                c.expect(apply_word_core(word_for(w), Partition(), n) == e.core, tag + ": word does not rebuild");
            }
        }
    }
    return c.report(seconds_since(start));
}

} // namespace

int main()
{
    const std::vector<std::function<bool()>> criteria{counts, narayana, worked_examples, oracle_equivalence,
                                                      haiman, properties, roundtrips};
    int failed = 0;
    for (const auto& run : criteria) {
        try {
            failed += run() ? 0 : 1;
        } catch (const std::exception& e) {
            std::printf("FAIL  (exception) %s\n", e.what());
            ++failed;
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
