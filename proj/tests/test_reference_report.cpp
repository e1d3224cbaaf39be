#include <cmath>
#include <set>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "phic/reference.hpp"
#include "phic/report.hpp"

using namespace phic;

TEST_CASE("format_number is shortest round-trip")
{
    CHECK(report::format_number(0.5) == "0.5");
    CHECK(report::format_number(3.0) == "3");
    CHECK(report::format_number(-0.0) == "0");
    CHECK(report::format_number(std::nan("")) == "NA");
    const double x = 0.1 + 0.2;
    CHECK(std::stod(report::format_number(x)) == x);
}

TEST_CASE("read_csv")
{
    std::istringstream in("a,b\n1,2\r\n3,4\n");
    const auto t = report::read_csv(in);
    CHECK(t.header == std::vector<std::string>{"a", "b"});
    CHECK(t.rows.size() == 2);
    CHECK(t.column("b") == 1);
    CHECK_THROWS_WITH_AS(t.column("mean"), doctest::Contains("mean"), std::invalid_argument);

    std::istringstream ragged("a,b\n1,2\n3\n");
    try {
        report::read_csv(ragged);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(report::parse_number("x", 2, "mean"), ParseError);
}

TEST_CASE("bundled reference tables")
{
    for (auto table : {reference::Table::Phi, reference::Table::ETC, reference::Table::LZ}) {
        CHECK(reference::bundled(table, 3).size() == 10);
        CHECK(reference::bundled(table, 4).size() == 15);
        CHECK(reference::bundled(table, 5).size() == 21);
        std::set<std::string> multisets;
        for (const auto& r : reference::bundled(table)) {
            multisets.insert(boolnet::canonical_label(boolnet::parse_network(r.network)));
            CHECK(r.mean >= 0.0);
            CHECK(r.std >= 0.0);
        }
        CHECK(multisets.size() == 46);
    }
    const auto etc3 = reference::bundled(reference::Table::ETC, 3);
    CHECK(etc3.front().network == "XOR-XOR-XOR");
    CHECK(etc3.front().mean == 0.604);
    CHECK(etc3.front().std == 0.020);
    CHECK(reference::table_for(MeasureKind::LZ) == reference::Table::LZ);
    CHECK(reference::parse_table("phi") == reference::Table::Phi);
    CHECK_THROWS_AS(reference::parse_table("iit"), std::invalid_argument);
}

TEST_CASE("reference parse_csv requires network and mean")
{
    std::istringstream ok("network,mean\nOR-AND-XOR,0.5\n");
    const auto rows = reference::parse_csv(ok);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].nodes == 3);
    CHECK(rows[0].mean == 0.5);

    std::istringstream missing("network,std\nOR-AND-XOR,0.1\n");
    CHECK_THROWS_WITH_AS(reference::parse_csv(missing), doctest::Contains("mean"), std::invalid_argument);
}

TEST_CASE("spearman")
{
    const std::vector<double> a{1, 2, 3, 4, 5};
    const std::vector<double> b{10, 20, 30, 40, 50};
    const std::vector<double> r{5, 4, 3, 2, 1};
    CHECK(reference::spearman(a, b) == doctest::Approx(1.0));
    CHECK(reference::spearman(a, r) == doctest::Approx(-1.0));
    // ties get average ranks: ranks of {1,2,2,3} are {1,2.5,2.5,4}
    const std::vector<double> t{1, 2, 2, 3};
    const std::vector<double> u{1, 2, 3, 4};
    CHECK(reference::spearman(t, u) == doctest::Approx(0.9486832980505138));
    CHECK_THROWS_AS(reference::spearman(a, t), std::domain_error);
}

TEST_CASE("in_band uses three sigmas with a floor")
{
    reference::Row row;
    row.mean = 0.5;
    row.std = 0.1;
    CHECK(reference::in_band(0.79, row));
    CHECK_FALSE(reference::in_band(0.81, row));
    row.mean = 0;
    row.std = 0;
    CHECK(reference::in_band(0.015, row));
    CHECK_FALSE(reference::in_band(0.03, row));
}

namespace {

report::HierarchyReport small_report()
{
    report::HierarchyReport rep;
    rep.nodes = 3;
    rep.kind = MeasureKind::ETC;
    rep.trials = 2;
    rep.seed = 5;
    rep.rows = hierarchy_report(3, {MeasureKind::ETC, 5, 2, 150});
    reference::compare(rep, reference::bundled(reference::Table::ETC, 3));
    return rep;
}

}  // namespace

TEST_CASE("compare matches rows by gate multiset")
{
    const auto rep = small_report();
    REQUIRE(rep.reference.size() == 10);
    for (const auto& m : rep.reference)
        CHECK(m.has_value());
    REQUIRE(rep.spearman);
    CHECK(*rep.spearman > 0.5);
}

TEST_CASE("hierarchy CSV and JSON carry the same values")
{
    const auto rep = small_report();
    std::ostringstream csv_out, json_out;
    report::write_hierarchy_csv(csv_out, rep);
    report::write_hierarchy_json(json_out, rep);

    std::istringstream csv_in(csv_out.str());
    const auto table = report::read_csv(csv_in);
    CHECK(table.header == std::vector<std::string>{"network", "label_order", "mean", "std", "cov", "measure",
                                                   "trials", "seed", "ref_mean", "ref_std", "in_band", "spearman"});
    const auto json = nlohmann::json::parse(json_out.str());
    REQUIRE(json.size() == table.rows.size());
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& cells = table.rows[k];
        const auto& row = json[k];
        CHECK(cells[table.column("network")] == row["network"].get<std::string>());
        for (const char* col : {"mean", "std", "ref_mean", "spearman"}) {
            const double a = std::stod(cells[table.column(col)]);
            const double b = row[col].get<double>();
            CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
        }
        if (row["cov"].is_null())
            CHECK(cells[table.column("cov")] == "NA");
        else
            CHECK(std::stod(cells[table.column("cov")]) == row["cov"].get<double>());
        CHECK(cells[table.column("in_band")] == (row["in_band"].get<bool>() ? "true" : "false"));
    }
}

TEST_CASE("reports are byte-identical across reruns")
{
    std::ostringstream a, b;
    report::write_hierarchy_csv(a, small_report());
    report::write_hierarchy_csv(b, small_report());
    CHECK(a.str() == b.str());
}

TEST_CASE("phic run CSV has one row per state plus a summary")
{
    const auto spec = boolnet::parse_network("OR-AND-XOR");
    const auto summary = phi_c_mean(spec, {MeasureKind::ETC, 1, 1, 200});
    report::PhicRun run{spec, MeasureKind::ETC, 1, 1, summary.per_state, summary};
    std::ostringstream out;
    report::write_phic_csv(out, run);
    std::istringstream in(out.str());
    const auto table = report::read_csv(in);
    REQUIRE(table.rows.size() == 9);
    CHECK(table.rows.back()[table.column("state")] == "all");
    CHECK(table.rows[4][table.column("state")] == "100");

    std::ostringstream js;
    report::write_phic_json(js, run);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["states"].size() == 8);
    CHECK(doc["summary"]["mean"].get<double>() == summary.mean);
}
