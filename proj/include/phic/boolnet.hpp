#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phic/sequence.hpp"

namespace phic::boolnet {

enum class GateKind : std::uint8_t { XOR, OR, AND };

std::string_view gate_name(GateKind g);
GateKind parse_gate(std::string_view name);  // throws std::invalid_argument listing valid names

// OR = any, AND = all, XOR = parity. Throws std::domain_error on empty input.
std::uint8_t gate_eval(GateKind gate, std::span<const std::uint8_t> inputs);

// Output entropy (bits) of a gate fed n_inputs independent fair bits.
double gate_output_entropy(GateKind gate, int n_inputs);

// Fully connected, bidirectional, no self-loops: node i reads every j != i.
struct NetworkSpec {
    std::vector<GateKind> gates;

    std::size_t size() const { return gates.size(); }
    std::string label() const;  // "OR-AND-XOR"

    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

// "OR-AND-XOR" (case-insensitive, spaces around '-' allowed). At least 2 gates.
NetworkSpec parse_network(std::string_view label);

// Label of the canonical multiset representative: gates sorted XOR < OR < AND.
std::string canonical_label(const NetworkSpec& spec);
NetworkSpec canonical(const NetworkSpec& spec);

// AND <-> OR swap; XOR is kept.
NetworkSpec dual(const NetworkSpec& spec);
bool is_and_or_only(const NetworkSpec& spec);

struct NetworkState {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits[i]; }

    // Node 0 is the most significant bit: index 4 of a 3-node net is (1,0,0).
    static NetworkState from_index(std::uint64_t index, std::size_t n);
    static NetworkState from_string(std::string_view bits);  // "100"
    std::uint64_t index() const;
    std::string to_string() const;

    friend bool operator==(const NetworkState&, const NetworkState&) = default;
};

NetworkState complement(const NetworkState& s);

// Synchronous update: every node reads the previous global state.
NetworkState step(const NetworkSpec& spec, const NetworkState& state);

struct ClampedRun {
    std::size_t clamped_node = 0;
    SymbolSequence input_series;
    // outputs[k] belongs to node output_nodes[k]; both skip clamped_node.
    std::vector<std::size_t> output_nodes;
    std::vector<SymbolSequence> outputs;

    const SymbolSequence& output_of(std::size_t node) const;
};

// Drives clamped_node with input_series while the other nodes update
// synchronously. Outputs are recorded for t = 0 .. LEN-1, t = 0 being the
// initial state. The clamped node's own gate is never evaluated.
ClampedRun simulate_clamped(const NetworkSpec& spec, const NetworkState& initial, std::size_t clamped_node,
                            const SymbolSequence& input_series);

// One representative per gate multiset, canonical order (most XORs first,
// then most ORs). C(N+2, 2) entries. Throws std::domain_error for N < 2.
std::vector<NetworkSpec> enumerate_networks(int n);

}  // namespace phic::boolnet
