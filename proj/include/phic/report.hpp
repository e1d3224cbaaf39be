#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phic/sweep.hpp"

namespace phic::report {

// Shortest representation that parses back to the same double.
std::string format_number(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Throws std::invalid_argument naming the missing column.
    std::size_t column(std::string_view name) const;
    bool has_column(std::string_view name) const;
};

// Plain comma-separated values, no quoting. Throws ParseError (line-numbered)
// on ragged rows.
CsvTable read_csv(std::istream& in);

double parse_number(const std::string& text, std::size_t line, std::string_view column);

// Reference comparison for one hierarchy row.
struct ReferenceMatch {
    double mean = 0.0;
    double std = 0.0;
    bool in_band = false;
};

struct HierarchyReport {
    int nodes = 0;
    MeasureKind kind = MeasureKind::ETC;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<HierarchyRow> rows;
    // Filled by reference::compare; empty otherwise.
    std::vector<std::optional<ReferenceMatch>> reference;
    std::optional<double> spearman;
};

// CSV header: network,label_order,mean,std,cov,measure,trials,seed
// plus ref_mean,ref_std,in_band,spearman when a comparison is attached.
// Undefined CoV is written as NA (null in JSON).
void write_hierarchy_csv(std::ostream& out, const HierarchyReport& report);
void write_hierarchy_json(std::ostream& out, const HierarchyReport& report);

struct PhicRun {
    boolnet::NetworkSpec spec;
    MeasureKind kind = MeasureKind::ETC;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<StateSummary> states;
    std::optional<PhiCSummary> summary;  // present for --state all
};

// One row per state (phi_c and per-node aggregates averaged over trials),
// then a "all" summary row carrying std and cov.
void write_phic_csv(std::ostream& out, const PhicRun& run);
void write_phic_json(std::ostream& out, const PhicRun& run);

}  // namespace phic::report
