#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "phic/phic.hpp"

namespace phic {

enum class Execution { Serial, Parallel };

struct SweepConfig {
    MeasureKind kind = MeasureKind::ETC;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::size_t len = kDefaultLength;
};

// Exhaustive (network x state x trial) sweep. Each task draws its
// perturbations from derive_seed(seed, label, state, trial), and results are
// reduced in canonical order, so Serial and Parallel are bit-identical.
std::vector<PhiCSummary> sweep(const std::vector<boolnet::NetworkSpec>& networks, const SweepConfig& config,
                               Execution exec = Execution::Parallel);

// Plain nested loops over networks, states and trials. Kept as the reference
// the flattened kernel above is checked against.
std::vector<PhiCSummary> sweep_reference(const std::vector<boolnet::NetworkSpec>& networks,
                                         const SweepConfig& config);

PhiCSummary phi_c_mean(const boolnet::NetworkSpec& spec, const SweepConfig& config,
                       Execution exec = Execution::Parallel);

struct HierarchyRow {
    boolnet::NetworkSpec spec;
    std::size_t label_order = 0;  // 1-based position in enumerate_networks(N)
    double mean = 0.0;
    double std = 0.0;
    std::optional<double> cov;
};

// One row per gate multiset of size n, sorted by descending mean (ties keep
// enumeration order).
std::vector<HierarchyRow> hierarchy_report(int n, const SweepConfig& config, Execution exec = Execution::Parallel);

// Number of worker threads the parallel kernel will use (1 without OpenMP).
int parallel_threads();
void set_parallel_threads(int threads);

}  // namespace phic
