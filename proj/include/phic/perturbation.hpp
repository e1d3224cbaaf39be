#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "phic/sequence.hpp"

namespace phic {

inline constexpr std::size_t kDefaultLength = 200;

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Child seed for one (network, state, trial) task. Depends only on its
// arguments, never on scheduling order.
std::uint64_t derive_seed(std::uint64_t root, std::string_view network_label, std::uint64_t state_index,
                          std::uint64_t trial);

// Maximum-entropy perturbation: iid fair bits, element 0 forced to first_symbol.
// Bits are the top bit of successive std::mt19937_64 outputs, so a seed gives
// the same series on every conforming platform.
SymbolSequence gen_mep(std::size_t len, Symbol first_symbol, std::uint64_t seed);

// Zero-entropy perturbation: len copies of symbol.
SymbolSequence gen_zep(std::size_t len, Symbol symbol);

struct PerturbationPair {
    SymbolSequence mep;
    SymbolSequence zep;
};

// The two MEP and two ZEP series of one experiment, indexed by starting
// symbol. Every bipartition takes the pair matching its node's current state.
struct PerturbationSet {
    std::array<PerturbationPair, 2> by_start;

    std::size_t length() const { return by_start[0].mep.size(); }
    const PerturbationPair& starting_with(std::uint8_t bit) const { return by_start[bit & 1u]; }
};

PerturbationSet make_perturbations(std::size_t len, std::uint64_t seed);

// Bit-complemented set: the start-0 pair becomes the complement of the
// start-1 pair and vice versa.
PerturbationSet complement(const PerturbationSet& set);

}  // namespace phic
