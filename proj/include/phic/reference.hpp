#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phic/report.hpp"

namespace phic::reference {

// Published state-averaged means (with std) for every 3-, 4- and 5-node
// network, bundled into the library from data/reference/*.csv.
enum class Table { Phi, ETC, LZ };

Table table_for(MeasureKind kind);
Table parse_table(std::string_view name);  // "phi" / "etc" / "lz"

struct Row {
    int nodes = 0;
    int network_no = 0;
    std::string network;  // as printed in the source table, e.g. "OR-OR-AND-XOR"
    double mean = 0.0;
    double std = 0.0;
};

std::string_view bundled_csv(Table table);
std::vector<Row> bundled(Table table);
std::vector<Row> bundled(Table table, int nodes);

// Columns: nodes,network_no,network,mean,std (nodes/network_no optional).
std::vector<Row> parse_csv(std::istream& in);

// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> a, std::span<const double> b);

// Band: |mean - ref.mean| <= max(sigmas * ref.std, floor).
bool in_band(double mean, const Row& ref, double sigmas = 3.0, double floor = 0.02);

// Matches hierarchy rows to reference rows by gate multiset and fills the
// report's reference columns and Spearman correlation (over matched rows).
void compare(report::HierarchyReport& report, std::span<const Row> ref, double sigmas = 3.0, double floor = 0.02);

}  // namespace phic::reference
