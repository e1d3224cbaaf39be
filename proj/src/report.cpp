#include "phic/report.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "phic/sequence.hpp"

namespace phic::report {

std::string format_number(double v)
{
    if (std::isnan(v))
        return "NA";
    if (v == 0.0)
        v = 0.0;  // no "-0"
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::size_t CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw std::invalid_argument("missing column '" + std::string(name) + "'");
}

bool CsvTable::has_column(std::string_view name) const
{
    for (const auto& h : header)
        if (h == name)
            return true;
    return false;
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto comma = line.find(',', pos);
        out.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

nlohmann::json number_or_null(const std::optional<double>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string optional_cell(const std::optional<double>& v)
{
    return v ? format_number(*v) : "NA";
}

struct StateRow {
    double phi_c = 0.0;
    std::size_t argmax = 0;
    std::vector<double> aggregates;
};

StateRow state_row(const StateSummary& st)
{
    StateRow row;
    row.phi_c = st.mean;
    const std::size_t n = st.trials.front().per_node_aggregate.size();
    row.aggregates.assign(n, 0.0);
    for (const auto& t : st.trials)
        for (std::size_t i = 0; i < n; ++i)
            row.aggregates[i] += t.per_node_aggregate[i];
    for (auto& a : row.aggregates)
        a /= static_cast<double>(st.trials.size());
    for (std::size_t i = 1; i < n; ++i)
        if (row.aggregates[i] > row.aggregates[row.argmax])
            row.argmax = i;
    if (st.trials.size() == 1)
        row.argmax = st.trials.front().argmax_node;
    return row;
}

}  // namespace

CsvTable read_csv(std::istream& in)
{
    CsvTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto cells = split(line);
        if (table.header.empty()) {
            table.header = std::move(cells);
            continue;
        }
        if (cells.size() != table.header.size())
            throw ParseError(lineno, "expected " + std::to_string(table.header.size()) + " fields, got " +
                                         std::to_string(cells.size()));
        table.rows.push_back(std::move(cells));
    }
    if (table.header.empty())
        throw std::domain_error("CSV input is empty");
    return table;
}

double parse_number(const std::string& text, std::size_t line, std::string_view column)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError(line, "column '" + std::string(column) + "': '" + text + "' is not a number");
    return v;
}

void write_hierarchy_csv(std::ostream& out, const HierarchyReport& report)
{
    const bool with_ref = !report.reference.empty();
    out << "network,label_order,mean,std,cov,measure,trials,seed";
    if (with_ref)
        out << ",ref_mean,ref_std,in_band,spearman";
    out << '\n';
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        const auto& r = report.rows[k];
        out << r.spec.label() << ',' << r.label_order << ',' << format_number(r.mean) << ','
            << format_number(r.std) << ',' << optional_cell(r.cov) << ',' << measure_name(report.kind) << ','
            << report.trials << ',' << report.seed;
        if (with_ref) {
            const auto& m = report.reference[k];
            if (m)
                out << ',' << format_number(m->mean) << ',' << format_number(m->std) << ','
                    << (m->in_band ? "true" : "false");
            else
                out << ",NA,NA,NA";
            out << ',' << optional_cell(report.spearman);
        }
        out << '\n';
    }
}

void write_hierarchy_json(std::ostream& out, const HierarchyReport& report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        const auto& r = report.rows[k];
        nlohmann::json row = {
            {"network", r.spec.label()}, {"label_order", r.label_order}, {"mean", r.mean},
            {"std", r.std},              {"cov", number_or_null(r.cov)}, {"measure", measure_name(report.kind)},
            {"trials", report.trials},   {"seed", report.seed},
        };
        if (!report.reference.empty()) {
            const auto& m = report.reference[k];
            row["ref_mean"] = m ? nlohmann::json(m->mean) : nlohmann::json(nullptr);
            row["ref_std"] = m ? nlohmann::json(m->std) : nlohmann::json(nullptr);
            row["in_band"] = m ? nlohmann::json(m->in_band) : nlohmann::json(nullptr);
            row["spearman"] = number_or_null(report.spearman);
        }
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

void write_phic_csv(std::ostream& out, const PhicRun& run)
{
    const std::string label = run.spec.label();
    out << "network,state,measure,trials,seed,phi_c,argmax,aggregates,std,cov\n";
    for (const auto& st : run.states) {
        const auto row = state_row(st);
        out << label << ',' << st.state.to_string() << ',' << measure_name(run.kind) << ',' << run.trials << ','
            << run.seed << ',' << format_number(row.phi_c) << ',' << row.argmax << ',';
        for (std::size_t i = 0; i < row.aggregates.size(); ++i)
            out << (i ? ";" : "") << format_number(row.aggregates[i]);
        out << ",,\n";
    }
    if (run.summary)
        out << label << ",all," << measure_name(run.kind) << ',' << run.trials << ',' << run.seed << ','
            << format_number(run.summary->mean) << ",,," << format_number(run.summary->std) << ','
            << optional_cell(run.summary->cov) << '\n';
}

void write_phic_json(std::ostream& out, const PhicRun& run)
{
    nlohmann::json doc;
    doc["network"] = run.spec.label();
    doc["measure"] = measure_name(run.kind);
    doc["trials"] = run.trials;
    doc["seed"] = run.seed;
    doc["states"] = nlohmann::json::array();
    for (const auto& st : run.states) {
        const auto row = state_row(st);
        doc["states"].push_back(
            {{"state", st.state.to_string()}, {"phi_c", row.phi_c}, {"argmax", row.argmax}, {"aggregates", row.aggregates}});
    }
    if (run.summary)
        doc["summary"] = {{"mean", run.summary->mean}, {"std", run.summary->std}, {"cov", number_or_null(run.summary->cov)}};
    out << doc.dump(2) << '\n';
}

}  // namespace phic::report
