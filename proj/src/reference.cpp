#include "phic/reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace phic::reference {

namespace detail {
extern const std::string_view kPhiCsv;
extern const std::string_view kEtcCsv;
extern const std::string_view kLzCsv;
}  // namespace detail

Table table_for(MeasureKind kind)
{
    return kind == MeasureKind::ETC ? Table::ETC : Table::LZ;
}

Table parse_table(std::string_view name)
{
    if (name == "phi")
        return Table::Phi;
    if (name == "etc")
        return Table::ETC;
    if (name == "lz")
        return Table::LZ;
    throw std::invalid_argument("unknown reference table '" + std::string(name) + "' (valid: phi, etc, lz)");
}

std::string_view bundled_csv(Table table)
{
    switch (table) {
    case Table::Phi:
        return detail::kPhiCsv;
    case Table::ETC:
        return detail::kEtcCsv;
    case Table::LZ:
        return detail::kLzCsv;
    }
    return {};
}

std::vector<Row> parse_csv(std::istream& in)
{
    const auto table = report::read_csv(in);
    const auto network = table.column("network");
    const auto mean = table.column("mean");
    const bool has_std = table.has_column("std");
    const bool has_nodes = table.has_column("nodes");
    const bool has_no = table.has_column("network_no");

    std::vector<Row> rows;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& cells = table.rows[k];
        const std::size_t line = k + 2;
        Row r;
        r.network = cells[network];
        r.mean = report::parse_number(cells[mean], line, "mean");
        if (has_std)
            r.std = report::parse_number(cells[table.column("std")], line, "std");
        r.nodes = has_nodes ? static_cast<int>(report::parse_number(cells[table.column("nodes")], line, "nodes"))
                            : static_cast<int>(boolnet::parse_network(r.network).size());
        if (has_no)
            r.network_no = static_cast<int>(report::parse_number(cells[table.column("network_no")], line, "network_no"));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Row> bundled(Table table)
{
    std::istringstream in{std::string(bundled_csv(table))};
    return parse_csv(in);
}

std::vector<Row> bundled(Table table, int nodes)
{
    auto rows = bundled(table);
    std::erase_if(rows, [&](const Row& r) { return r.nodes != nodes; });
    return rows;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v)
{
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]])
            ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size() || a.size() < 2)
        throw std::domain_error("spearman: need two equally long samples of size >= 2");
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0)
        throw std::domain_error("spearman: a sample is constant");
    return sab / std::sqrt(saa * sbb);
}

bool in_band(double mean, const Row& ref, double sigmas, double floor)
{
    return std::abs(mean - ref.mean) <= std::max(sigmas * ref.std, floor);
}

void compare(report::HierarchyReport& report, std::span<const Row> ref, double sigmas, double floor)
{
    std::map<std::string, const Row*> by_multiset;
    for (const auto& r : ref)
        by_multiset[boolnet::canonical_label(boolnet::parse_network(r.network))] = &r;

    report.reference.clear();
    std::vector<double> ours, theirs;
    for (const auto& row : report.rows) {
        auto it = by_multiset.find(boolnet::canonical_label(row.spec));
        if (it == by_multiset.end()) {
            report.reference.emplace_back(std::nullopt);
            continue;
        }
        const Row& r = *it->second;
        report.reference.emplace_back(report::ReferenceMatch{r.mean, r.std, in_band(row.mean, r, sigmas, floor)});
        ours.push_back(row.mean);
        theirs.push_back(r.mean);
    }
    report.spearman.reset();
    if (ours.size() >= 2) {
        try {
            report.spearman = spearman(ours, theirs);
        } catch (const std::domain_error&) {
        }
    }
}

}  // namespace phic::reference
