#include "phic/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace phic::complexity {

std::vector<std::size_t> lz_parse(std::span<const Symbol> seq)
{
    const std::size_t n = seq.size();
    if (n == 0)
        throw std::domain_error("lz_parse: empty sequence");

    std::vector<std::size_t> ends;
    std::vector<std::size_t> candidates;
    std::size_t start = 0;
    while (start < n) {
        // candidates: every p < start with seq[p .. p+(e-start)] == seq[start .. e]
        candidates.clear();
        for (std::size_t p = 0; p < start; ++p)
            if (seq[p] == seq[start])
                candidates.push_back(p);

        std::size_t e = start;
        while (!candidates.empty() && e + 1 < n) {
            ++e;
            const std::size_t k = e - start;
            std::erase_if(candidates, [&](std::size_t p) { return seq[p + k] != seq[e]; });
        }
        ends.push_back(e);
        start = e + 1;
    }
    return ends;
}

std::size_t lz_parse_count(std::span<const Symbol> seq)
{
    return lz_parse(seq).size();
}

double lz_normalized(std::span<const Symbol> seq, std::uint32_t alphabet_size)
{
    if (seq.empty())
        throw std::domain_error("lz_normalized: empty sequence");
    if (alphabet_size < 2)
        throw std::domain_error("lz_normalized: alphabet size must be at least 2");
    const double n = static_cast<double>(seq.size());
    if (seq.size() == 1)
        return 0.0;
    const double c = static_cast<double>(lz_parse_count(seq));
    return (c / n) * (std::log(n) / std::log(static_cast<double>(alphabet_size)));
}

LZResult lz(const SymbolSequence& seq)
{
    return {lz_parse_count(seq.view()), lz_normalized(seq.view(), seq.alphabet_size)};
}

namespace {

struct PairStat {
    std::size_t count = 0;
    std::size_t first = 0;
};

inline std::uint64_t pair_key(Symbol a, Symbol b)
{
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Most frequent pair under the run rule; ties go to the earliest first occurrence.
std::pair<Symbol, Symbol> most_frequent_pair(std::span<const Symbol> s,
                                             std::unordered_map<std::uint64_t, PairStat>& stats)
{
    stats.clear();
    const std::size_t n = s.size();
    auto bump = [&](Symbol a, Symbol b, std::size_t at, std::size_t by) {
        auto [it, inserted] = stats.try_emplace(pair_key(a, b));
        if (inserted)
            it->second.first = at;
        it->second.count += by;
    };

    std::size_t i = 0;
    while (i + 1 < n) {
        if (s[i] != s[i + 1]) {
            bump(s[i], s[i + 1], i, 1);
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j + 1 < n && s[j + 1] == s[i])
            ++j;
        bump(s[i], s[i], i, (j - i + 1) / 2);
        i = j;
    }

    std::uint64_t best_key = 0;
    PairStat best{0, n};
    for (const auto& [key, stat] : stats) {
        if (stat.count > best.count || (stat.count == best.count && stat.first < best.first)) {
            best = stat;
            best_key = key;
        }
    }
    return {static_cast<Symbol>(best_key >> 32), static_cast<Symbol>(best_key & 0xffffffffu)};
}

std::vector<Symbol> substitute(std::span<const Symbol> s, Symbol a, Symbol b, Symbol fresh)
{
    std::vector<Symbol> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (i + 1 < s.size() && s[i] == a && s[i + 1] == b) {
            out.push_back(fresh);
            i += 2;
        } else {
            out.push_back(s[i]);
            ++i;
        }
    }
    return out;
}

std::vector<Symbol> step_with(std::span<const Symbol> seq, std::unordered_map<std::uint64_t, PairStat>& stats)
{
    if (seq.size() < 2 || is_constant(seq))
        throw std::domain_error("nsrps_step: sequence is already constant or shorter than 2");
    auto [a, b] = most_frequent_pair(seq, stats);
    const Symbol fresh = *std::max_element(seq.begin(), seq.end()) + 1;
    return substitute(seq, a, b, fresh);
}

}  // namespace

std::vector<Symbol> nsrps_step(std::span<const Symbol> seq)
{
    std::unordered_map<std::uint64_t, PairStat> stats;
    return step_with(seq, stats);
}

std::vector<std::vector<Symbol>> nsrps_trace(std::span<const Symbol> seq)
{
    std::unordered_map<std::uint64_t, PairStat> stats;
    std::vector<std::vector<Symbol>> trace;
    trace.emplace_back(seq.begin(), seq.end());
    while (trace.back().size() > 1 && !is_constant(trace.back()))
        trace.push_back(step_with(trace.back(), stats));
    return trace;
}

ETCResult etc(std::span<const Symbol> seq)
{
    const std::size_t length = seq.size();
    if (length <= 1)
        return {0, 0.0};

    std::unordered_map<std::uint64_t, PairStat> stats;
    stats.reserve(length);
    std::vector<Symbol> current(seq.begin(), seq.end());
    std::size_t iterations = 0;
    while (current.size() > 1 && !is_constant(current)) {
        current = step_with(current, stats);
        ++iterations;
    }
    return {iterations, static_cast<double>(iterations) / static_cast<double>(length - 1)};
}

double shannon_entropy(std::span<const Symbol> seq)
{
    if (seq.empty())
        throw std::domain_error("shannon_entropy: empty sequence");
    std::vector<Symbol> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double h = 0.0;
    for (auto it = sorted.begin(); it != sorted.end();) {
        auto next = std::upper_bound(it, sorted.end(), *it);
        const double p = static_cast<double>(next - it) / n;
        h -= p * std::log2(p);
        it = next;
    }
    return h == 0.0 ? 0.0 : h;
}

}  // namespace phic::complexity
