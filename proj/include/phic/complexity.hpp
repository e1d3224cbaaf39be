#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "phic/sequence.hpp"

namespace phic::complexity {

struct LZResult {
    std::size_t component_count = 0;
    double normalized = 0.0;
};

struct ETCResult {
    std::size_t iterations = 0;
    double normalized = 0.0;
};

// Lempel-Ziv (1976) left-to-right parsing. Returns the (inclusive) end index of
// every component; the last entry is always size()-1.
//   "aacgacga" -> a.ac.g.acga. -> {0, 2, 3, 7}
std::vector<std::size_t> lz_parse(std::span<const Symbol> seq);

// c(n): number of components of lz_parse. Throws std::domain_error on empty input.
std::size_t lz_parse_count(std::span<const Symbol> seq);

// (c(n)/n) * log_alpha(n), alpha = declared alphabet size (never the observed one).
// Zero for n == 1. May exceed 1 for short sequences.
double lz_normalized(std::span<const Symbol> seq, std::uint32_t alphabet_size);
LZResult lz(const SymbolSequence& seq);

// One round of non-sequential recursive pair substitution.
//
// Pair frequencies count every adjacent ordered pair, except that a run of k
// identical symbols contributes floor(k/2) to its (a,a) pair, so the count
// equals the number of non-overlapping left-to-right replacements. Among pairs
// with the maximal count, the one occurring first wins. Every occurrence is
// replaced, left to right, by max(symbol)+1.
//
// Throws std::domain_error if seq is shorter than 2 or constant.
std::vector<Symbol> nsrps_step(std::span<const Symbol> seq);

// Every intermediate sequence, starting with seq itself and ending with the
// first constant (or length-1) sequence.
std::vector<std::vector<Symbol>> nsrps_trace(std::span<const Symbol> seq);

// Effort-to-compress: number of nsrps_step rounds until the sequence is
// constant, normalized by L-1. (0, 0) for L <= 1.
ETCResult etc(std::span<const Symbol> seq);

// Empirical Shannon entropy in bits/symbol. Throws std::domain_error on empty input.
double shannon_entropy(std::span<const Symbol> seq);

}  // namespace phic::complexity
