#include "shicores/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shicores/bijection.hpp"
#include "shicores/errors.hpp"
#include "shicores/render.hpp"
#include "shicores/verify.hpp"

namespace shicores {

namespace {

constexpr int kMaxEnumerateN = 9;
constexpr int kMaxEnumerateM = 6;
constexpr long kMaxCatalogSize = 2'000'000;
constexpr int kMaxVerifyN = 5;
constexpr int kMaxVerifyM = 3;
constexpr int kMaxRenderM = 4;
constexpr std::uint64_t kVerifySeed = 20240229;

template <typename T>
std::string bracketed(const std::vector<T>& values)
{
    std::string out = "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? "," : "") + std::to_string(values[k]);
    }
    return out + "]";
}

std::string joined(const std::vector<int>& values, const char* sep)
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? sep : "") + std::to_string(values[k]);
    }
    return out;
}

int cmd_core(const std::string& text, int n, int m, std::ostream& out, std::ostream& err)
{
    if (n < 2 || n > 64 || m < 1) {
        err << "error: core needs 2 <= n <= 64 and m >= 1\n";
        return kExitLimits;
    }
    Partition p;
    try {
        p = Partition::parse(text);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    }

    out << "partition: " << to_string(p) << '\n';
    out << "size: " << p.size() << '\n';
    out << "first-column hooks: " << bracketed(first_column_hooks(p)) << '\n';
    out << "hooks:\n";
    for (int r = 0; r < p.rows(); ++r) {
        out << ' ';
        for (int c = 0; c < p.part(r); ++c) {
            out << ' ' << hook_length(p, r, c);
        }
        out << '\n';
    }
    out << "residues:\n";
    for (int r = 0; r < p.rows(); ++r) {
        out << ' ';
        for (int c = 0; c < p.part(r); ++c) {
            out << ' ' << ((c - r) % n + n) % n;
        }
        out << '\n';
    }
    out << "residue counts: " << bracketed(residue_counts(p, n).counts) << '\n';
    const auto counts = box_counts(p, n);
    out << "removable counts: " << bracketed(counts.removable.counts) << '\n';
    out << "addable counts: " << bracketed(counts.addable.counts) << '\n';

    const bool core = is_t_core_hooks(p, n);
    const int t = m * n + 1;
    out << n << "-core: " << (core ? "yes" : "no") << '\n';
    out << t << "-core (m=" << m << "): " << (is_t_core_hooks(p, t) ? "yes" : "no") << '\n';
    if (!core) {
        out << "n-vector: undefined (abacus is not flush)\n";
        return kExitOk;
    }

    const auto abacus = Abacus::balanced(p, n);
    Int lo = 0;
    Int hi = 0;
    for (const Int level : abacus.top_levels()) {
        lo = std::min(lo, level);
        hi = std::max(hi, level);
    }
    out << "abacus (balanced, levels " << lo - 1 << ".." << hi + 1 << "):\n" << abacus.render(lo - 1, hi + 1);
    const auto v = abacus.vector();
    out << "n-vector: " << to_string(v) << '\n';
    const auto w = min_length_in_translation_coset(v);
    out << "coset representative: length " << length(w) << ", word " << (length(w) ? joined(word_for(w), " ") : "(empty)")
        << '\n';
    out << "dominant alcove x(0): " << to_string(inverse(w).origin_image()) << '\n';
    out << m << "-minimal: " << (is_m_minimal(phi(p, n), m) ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_enumerate(int n, int m, const std::string& format, std::ostream& out, std::ostream& err)
{
    if (n < 2 || n > kMaxEnumerateN || m < 1 || m > kMaxEnumerateM || anderson_count(n, m) > kMaxCatalogSize) {
        err << "error: enumerate supports 2 <= n <= " << kMaxEnumerateN << ", 1 <= m <= " << kMaxEnumerateM
            << " and at most " << kMaxCatalogSize << " entries\n";
        return kExitLimits;
    }
    const auto catalog = enumerate(n, m);
    const auto hist = narayana_histogram(catalog);

    if (format == "json") {
        for (const auto& e : catalog.entries) {
            nlohmann::ordered_json row;
            row["core"] = to_string(e.core);
            row["vector"] = std::vector<Int>(e.vector.entries().begin(), e.vector.entries().end());
            row["word"] = e.word;
            row["length"] = e.word.size();
            row["narayana_k"] = e.narayana_k;
            row["removable_counts"] = e.removable.counts;
            out << row.dump() << '\n';
        }
        nlohmann::ordered_json summary;
        summary["summary"]["count"] = catalog.entries.size();
        summary["summary"]["narayana"] = hist;
        out << summary.dump() << '\n';
        return kExitOk;
    }

    out << "core\tvector\tword\tlength\tnarayana_k\tremovable_counts\n";
    for (const auto& e : catalog.entries) {
        out << to_string(e.core) << '\t' << to_string(e.vector) << '\t' << joined(e.word, " ") << '\t'
            << e.word.size() << '\t' << e.narayana_k << '\t' << bracketed(e.removable.counts) << '\n';
    }
    std::string hs;
    for (std::size_t k = 0; k < hist.size(); ++k) {
        hs += (k ? " " : "") + std::to_string(hist[k]);
    }
    out << "# count: " << catalog.entries.size() << " narayana: " << hs << '\n';
    return kExitOk;
}

bool report(const CheckResult& r, std::ostream& out)
{
    if (r.ok()) {
        out << "PASS " << r.name << " (" << r.cases << " cases)\n";
    } else {
        out << "FAIL " << r.name << ": " << r.failures << " of " << r.cases << " cases, first: " << r.first_failure
            << '\n';
    }
    return r.ok();
}

int cmd_verify(int n, int m, const std::string& suite, std::ostream& out, std::ostream& err)
{
    if (n < 2 || n > kMaxVerifyN || m < 1 || m > kMaxVerifyM) {
        err << "error: verify supports 2 <= n <= " << kMaxVerifyN << " and 1 <= m <= " << kMaxVerifyM << '\n';
        return kExitLimits;
    }
    bool ok = true;
    const bool all = suite == "all";

    if (all || suite == "oracle") {
        ok = report(check_catalog(enumerate(n, m)), out) && ok;
        ok = report(check_region_oracle(n, m), out) && ok;
    }
    if (all || suite == "haiman") {
        const auto h = verify_haiman(n, m);
        out << h.alcoves_in_region << " alcoves in A_m (expected " << h.expected << ")\n";
        out << h.m_minimal_alcoves << " m-minimal alcoves (search radius " << h.search_radius << ")\n";
        if (h.ok) {
            out << "PASS alcove bijection x A_0 -> x^-1 A_0\n";
        } else {
            out << "FAIL alcove bijection: " << h.counterexample << '\n';
            ok = false;
        }
    }
    if (all || suite == "props") {
        Rng rng(kVerifySeed);
        constexpr std::size_t cases = 200;
        const auto cores = cores_up_to(n, 30);
        ok = report(check_presentation(n, cases, rng), out) && ok;
        ok = report(check_inversion_separation(n, cases, rng), out) && ok;
        ok = report(check_minimal_coset_shape(n, cases, rng), out) && ok;
        ok = report(check_equivariance(n, cases, rng), out) && ok;
        ok = report(check_vector_roundtrip(n, cases, rng), out) && ok;
        ok = report(check_add_remove_exclusivity(n, cores), out) && ok;
        ok = report(check_flush_iff_core(n, partitions_up_to(18)), out) && ok;
        ok = report(check_t_core_criteria(n, cores, 13), out) && ok;
        ok = report(check_removable_bridge(n, cores), out) && ok;
    }
    out << (ok ? "all checks passed\n" : "verification failed\n");
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_render(int n, int m, const std::string& path, std::ostream& out, std::ostream& err)
{
    if (n != 3) {
        err << "error: unsupported rank n = " << n << ", rendering supports only n = 3\n";
        return kExitLimits;
    }
    if (m < 1 || m > kMaxRenderM) {
        err << "error: render supports 1 <= m <= " << kMaxRenderM << '\n';
        return kExitLimits;
    }
    const auto svg = render_svg(n, m);
    if (path == "-") {
        out << svg;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    file << svg;
    file.close();
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Simultaneous (n, mn+1)-cores and dominant regions of the m-Shi arrangement"};
    app.require_subcommand(1);

    std::string partition_text;
    int n = 0;
    int m = 1;
    std::string format = "tsv";
    std::string suite = "all";
    std::string path = "-";

    auto* core = app.add_subcommand("core", "Hooks, residues, abacus and n-vector of a partition");
    core->add_option("partition", partition_text, "Comma-separated parts, or - for the empty partition")->required();
    core->add_option("--n", n, "Number of abacus runners")->required();
    core->add_option("--m", m, "Report whether the partition is an (mn+1)-core");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List all (n, mn+1)-cores with their alcoves");
    enumerate_cmd->add_option("--n", n)->required();
    enumerate_cmd->add_option("--m", m)->required();
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run oracle, alcove-bijection and property checks");
    verify->add_option("--n", n)->required();
    verify->add_option("--m", m);
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "oracle", "haiman", "props"}));

    auto* render = app.add_subcommand("render", "Draw the n = 3 arrangement as SVG");
    render->add_option("--n", n)->required();
    render->add_option("--m", m);
    render->add_option("--out", path, "Output file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    }

    try {
        if (*core) {
            return cmd_core(partition_text, n, m, out, err);
        }
        if (*enumerate_cmd) {
            return cmd_enumerate(n, m, format, out, err);
        }
        if (*verify) {
            return cmd_verify(n, m, suite, out, err);
        }
        return cmd_render(n, m, path, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
}

} // namespace shicores
