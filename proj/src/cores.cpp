#include "shicores/cores.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shicores/errors.hpp"

namespace shicores {

namespace {

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

Int floor_mod(Int a, Int b)
{
    return a - floor_div(a, b) * b;
}

int residue(int row, int col, int n)
{
    return static_cast<int>(floor_mod(col - row, n));
}

void check_modulus(int n)
{
    if (n < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
}

void require_core(const Partition& p, int n)
{
    if (!is_t_core_hooks(p, n)) {
        throw NotACore(to_string(p) + " is not a " + std::to_string(n) + "-core");
    }
}

// Largest entry below `bound` on runner r.
Int largest_below(Int bound, int r, int n)
{
    return floor_div(bound - 1 - r, n) * n + r;
}

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view text)
{
    if (text == "-") {
        return {};
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || token.front() == '-' || token.front() == '+' || ec != std::errc() || ptr != last) {
            throw ParseError("malformed partition text '" + std::string(text) + "'");
        }
        if (value <= 0) {
            throw ParseError("partition parts must be positive: '" + std::string(text) + "'");
        }
        if (!parts.empty() && value > parts.back()) {
            throw ParseError("partition parts must be weakly decreasing: '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (const int part : parts_) {
        for (int c = 0; c < part; ++c) {
            ++conj[c];
        }
    }
    return Partition(std::move(conj));
}

std::string to_string(const Partition& p)
{
    if (p.empty()) {
        return "-";
    }
    std::string out;
    for (int k = 0; k < p.rows(); ++k) {
        if (k) {
            out += ',';
        }
        out += std::to_string(p.part(k));
    }
    return out;
}

int hook_length(const Partition& p, int row, int col)
{
    if (!p.contains(row, col)) {
        throw std::out_of_range("box (" + std::to_string(row) + "," + std::to_string(col) + ") is not in "
                                + to_string(p));
    }
    int leg = 0;
    for (int r = row + 1; r < p.rows() && p.part(r) > col; ++r) {
        ++leg;
    }
    return p.part(row) - col - 1 + leg + 1;
}

std::vector<int> first_column_hooks(const Partition& p)
{
    std::vector<int> hooks(static_cast<std::size_t>(p.rows()));
    for (int k = 0; k < p.rows(); ++k) {
        hooks[k] = p.part(k) + p.rows() - k - 1;
    }
    return hooks;
}

bool is_t_core_hooks(const Partition& p, int t)
{
    check_modulus(t);
    const auto conj = p.conjugate();
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.part(r); ++c) {
            const int hook = (p.part(r) - c - 1) + (conj.part(c) - r - 1) + 1;
            if (hook % t == 0) {
                return false;
            }
        }
    }
    return true;
}

int ResidueCounts::total() const
{
    return std::accumulate(counts.begin(), counts.end(), 0);
}

BoxCounts box_counts(const Partition& p, int n)
{
    check_modulus(n);
    BoxCounts out{{std::vector<int>(n, 0)}, {std::vector<int>(n, 0)}};
    for (int r = 0; r <= p.rows(); ++r) {
        const int len = p.part(r);
        if (r == 0 || p.part(r - 1) > len) {
            ++out.addable.counts[residue(r, len, n)];
        }
        if (len > 0 && p.part(r + 1) < len) {
            ++out.removable.counts[residue(r, len - 1, n)];
        }
    }
    return out;
}

ResidueCounts residue_counts(const Partition& p, int n)
{
    check_modulus(n);
    ResidueCounts out{std::vector<int>(n, 0)};
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.part(r); ++c) {
            ++out.counts[residue(r, c, n)];
        }
    }
    return out;
}

Partition apply_generator_core(const Partition& core, int i, int n)
{
    if (i < 0 || i >= n) {
        throw std::out_of_range("residue must lie in 0..n-1");
    }
    require_core(core, n);

    std::vector<int> parts(core.parts().begin(), core.parts().end());
    const auto counts = box_counts(core, n);
    if (counts.addable[i] > 0) {
        for (int r = 0; r <= core.rows(); ++r) {
            const int len = core.part(r);
            if ((r == 0 || core.part(r - 1) > len) && residue(r, len, n) == i) {
                if (r == core.rows()) {
                    parts.push_back(1);
                } else {
                    ++parts[r];
                }
            }
        }
    } else if (counts.removable[i] > 0) {
        for (int r = 0; r < core.rows(); ++r) {
            const int len = core.part(r);
            if (core.part(r + 1) < len && residue(r, len - 1, n) == i) {
                --parts[r];
            }
        }
        while (!parts.empty() && parts.back() == 0) {
            parts.pop_back();
        }
    }
    return Partition(std::move(parts));
}

Partition apply_word_core(std::span<const int> word, const Partition& core, int n)
{
    auto current = core;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        current = apply_generator_core(current, *it, n);
    }
    return current;
}

Abacus Abacus::balanced(const Partition& core, int n)
{
    check_modulus(n);
    const auto beta = first_column_hooks(core);
    const std::set<Int> beads(beta.begin(), beta.end());
    for (const Int b : beta) {
        if (b - n >= 0 && !beads.contains(b - n)) {
            throw NotACore(to_string(core) + " has a non-flush abacus on " + std::to_string(n) + " runners");
        }
    }

    // Top entry per runner for the bead set beta + shift together with every
    // entry below shift.
    auto tops_for_shift = [&](Int shift) {
        std::vector<Int> tops(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            Int top = largest_below(shift, r, n);
            for (const Int b : beta) {
                if (floor_mod(b + shift, n) == r) {
                    top = std::max(top, b + shift);
                }
            }
            tops[r] = floor_div(top, n);
        }
        return tops;
    };

    const auto unshifted = tops_for_shift(0);
    const Int balance = std::accumulate(unshifted.begin(), unshifted.end(), Int{0});
    // Shifting every bead up by one raises the balance number by one.
    return Abacus(tops_for_shift(-balance));
}

Abacus Abacus::from_top_levels(std::vector<Int> top_levels)
{
    if (top_levels.empty()) {
        throw std::invalid_argument("abacus needs at least one runner");
    }
    return Abacus(std::move(top_levels));
}

Int Abacus::balance_number() const
{
    return std::accumulate(tops_.begin(), tops_.end(), Int{0});
}

bool Abacus::has_bead(Int entry) const
{
    const Int n = runners();
    return floor_div(entry, n) <= tops_[floor_mod(entry, n)];
}

QVector Abacus::vector() const
{
    return QVector(tops_);
}

Partition Abacus::partition() const
{
    const Int n = runners();
    Int first_gap = (tops_[0] + 1) * n;
    for (int r = 1; r < runners(); ++r) {
        first_gap = std::min(first_gap, (tops_[r] + 1) * n + r);
    }
    std::vector<Int> beta;
    for (int r = 0; r < runners(); ++r) {
        for (Int level = tops_[r]; level * n + r > first_gap; --level) {
            beta.push_back(level * n + r);
        }
    }
    std::sort(beta.rbegin(), beta.rend());
    const auto count = static_cast<Int>(beta.size());
    std::vector<int> parts(beta.size());
    for (Int k = 0; k < count; ++k) {
        parts[k] = static_cast<int>(beta[k] - first_gap - (count - 1 - k));
    }
    return Partition(std::move(parts));
}

std::string Abacus::render(Int from, Int to) const
{
    const Int n = runners();
    std::ostringstream os;
    os << "level";
    for (int r = 0; r < runners(); ++r) {
        os << ' ';
        os.width(6);
        os << "r" + std::to_string(r) + " ";
    }
    os << '\n';
    for (Int level = from; level <= to; ++level) {
        os.width(5);
        os << level;
        for (int r = 0; r < runners(); ++r) {
            const Int entry = level * n + r;
            std::string cell = std::to_string(entry);
            cell = has_bead(entry) ? "(" + cell + ")" : " " + cell + " ";
            os << ' ';
            os.width(6);
            os << cell;
        }
        os << '\n';
    }
    return os.str();
}

QVector n_vector(const Partition& core, int n)
{
    return Abacus::balanced(core, n).vector();
}

Partition core_from_vector(const QVector& v)
{
    return Abacus::from_top_levels({v.entries().begin(), v.entries().end()}).partition();
}

bool anderson_is_t_core(const Partition& core, int n, int t)
{
    check_modulus(n);
    check_modulus(t);
    if (std::gcd(n, t) != 1) {
        throw std::invalid_argument("Anderson's criterion needs gcd(n, t) = 1");
    }
    if (!is_t_core_hooks(core, n)) {
        throw NotACore(to_string(core) + " is not a " + std::to_string(n) + "-core");
    }

    const Int M = Int{n} * t - n - t;
    Int t_inverse = 1;
    while ((t_inverse * t) % n != 1 % n) {
        ++t_inverse;
    }

    const auto beta = first_column_hooks(core);
    const std::set<Int> beads(beta.begin(), beta.end());
    auto circled = [&](Int label) { return label < 0 || beads.contains(label); };

    // Negative entries are all beads, sit inside the grid and have only
    // negative neighbours below and to the right, so only beta needs checking.
    for (const Int b : beta) {
        if (b > M) {
            return false;
        }
        const Int x = floor_mod((M - b) * t_inverse, n);
        const Int y = (M - b - x * t) / n;
        if (y < 0) {
            return false;
        }
        if (!circled(b - n)) {
            return false;
        }
        if (x <= n - 2 && !circled(b - t)) {
            return false;
        }
    }
    return true;
}

bool satisfies_mn1_inequalities(const QVector& v, int m)
{
    const int n = v.rank();
    for (int i = 1; i < n; ++i) {
        if (pairing(v, simple_root(i, n)) < -m) {
            return false;
        }
    }
    return pairing(v, highest_root(n)) <= m + 1;
}

std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    for (int size = 0; size <= max_size; ++size) {
        generate(size, size, prefix, out);
    }
    return out;
}

std::vector<Partition> cores_up_to_serial(int n, int max_size)
{
    std::vector<Partition> out;
    for (auto& p : partitions_up_to(max_size)) {
        if (is_t_core_hooks(p, n)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<Partition> cores_up_to(int n, int max_size)
{
    const auto all = partitions_up_to(max_size);
    const auto count = static_cast<std::ptrdiff_t>(all.size());
    std::vector<char> keep(all.size(), 0);

#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        keep[k] = is_t_core_hooks(all[k], n) ? 1 : 0;
    }

    std::vector<Partition> out;
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (keep[k]) {
            out.push_back(all[k]);
        }
    }
    return out;
}

} // namespace shicores
