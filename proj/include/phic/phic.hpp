#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "phic/boolnet.hpp"
#include "phic/perturbation.hpp"

namespace phic {

enum class MeasureKind { ETC, LZ };

std::string_view measure_name(MeasureKind kind);  // "etc" / "lz"
MeasureKind parse_measure(std::string_view name);

// Normalized ETC, or normalized LZ over the sequence's declared alphabet.
double normalized_complexity(const SymbolSequence& seq, MeasureKind kind);

// Differential complexity response of every unperturbed node j to node i:
// complexity(response to MEP) - complexity(response to ZEP).
struct DCCRD {
    std::size_t perturbed_node = 0;
    std::vector<std::size_t> nodes;
    std::vector<double> values;

    double value_of(std::size_t node) const;
};

DCCRD dccrd(const boolnet::NetworkSpec& spec, const boolnet::NetworkState& state, std::size_t node, MeasureKind kind,
            const PerturbationPair& pair);

// Sum of the N-1 differential complexities.
double aggregate(const DCCRD& d);

struct PhiCResult {
    std::vector<double> per_node_aggregate;
    double phi_c = 0.0;
    std::size_t argmax_node = 0;  // lowest index on ties

    friend bool operator==(const PhiCResult&, const PhiCResult&) = default;
};

// Maximum aggregate over all atomic bipartitions, using the perturbation pair
// whose first symbol matches each node's current state.
PhiCResult phi_c(const boolnet::NetworkSpec& spec, const boolnet::NetworkState& state, MeasureKind kind,
                 const PerturbationSet& perturbations);

PhiCResult phi_c(const boolnet::NetworkSpec& spec, const boolnet::NetworkState& state, MeasureKind kind,
                 std::uint64_t seed, std::size_t len = kDefaultLength);

struct StateSummary {
    boolnet::NetworkState state;
    double mean = 0.0;  // over trials
    std::vector<PhiCResult> trials;
};

struct PhiCSummary {
    double mean = 0.0;
    double std = 0.0;          // sample std over the 2^N per-state means
    std::optional<double> cov;  // empty when mean == 0
    std::vector<StateSummary> per_state;
};

// Reduces per-state means to mean / sample std / CoV.
PhiCSummary summarize(std::vector<StateSummary> per_state);

}  // namespace phic
