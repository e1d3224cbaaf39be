// Drives the phic executable end to end. PHIC_CLI is the path of the built
// binary, injected by CMake.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

#include "phic/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args)
{
    const std::string cmd = std::string(PHIC_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch()
{
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() / ("phic_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text)
{
    const auto path = scratch() / name;
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

std::string lines(const std::string& symbols)
{
    std::string out;
    for (char c : symbols) {
        out += c;
        out += '\n';
    }
    return out;
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

phic::report::CsvTable csv(const std::string& text)
{
    std::istringstream in(text);
    return phic::report::read_csv(in);
}

}  // namespace

TEST_CASE("measure: etc on the worked example")
{
    const auto f = write_file("etc.txt", lines("11010010"));
    const auto r = run("measure " + f.string() + " --measure etc");
    CHECK(r.code == 0);
    CHECK(r.out == "measure,length,alphabet,raw,normalized\netc,8,2,5,0.7142857142857143\n");
}

TEST_CASE("measure: constant file and lz with a declared alphabet")
{
    std::string ones;
    for (int k = 0; k < 200; ++k)
        ones += "1\n";
    const auto f = write_file("ones.txt", ones);
    CHECK(run("measure " + f.string() + " --measure etc").out.find("etc,200,2,0,0\n") != std::string::npos);

    const auto g = write_file("dna.txt", lines("00120120"));
    CHECK(run("measure " + g.string() + " --measure lz --alphabet 4").out.find("lz,8,4,4,0.75\n") !=
          std::string::npos);

    const auto e = write_file("ent.txt", lines("0001"));
    const auto j = nlohmann::json::parse(run("measure " + e.string() + " --measure entropy --format json").out);
    CHECK(j["raw"].get<double>() == doctest::Approx(0.8112781244591328));
}

TEST_CASE("measure: input errors exit 2")
{
    CHECK(run("measure " + write_file("bad.txt", "0\n1\nq\n").string()).code == 2);
    CHECK(run("measure " + write_file("empty.txt", "").string()).code == 2);
    CHECK(run("measure " + (scratch() / "missing.txt").string()).code == 2);
    CHECK(run("measure " + write_file("x.txt", "0\n1\n").string() + " --measure pci").code == 2);
    CHECK(run("bogus").code == 2);
}

TEST_CASE("phic: one state and all states")
{
    const auto one = run("phic OR-AND-XOR --state 100 --seed 7");
    REQUIRE(one.code == 0);
    const auto t = csv(one.out);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][t.column("state")] == "100");
    const double phi = std::stod(t.rows[0][t.column("phi_c")]);
    CHECK(phi > 0.3);
    CHECK(phi < 0.8);

    const auto all = csv(run("phic OR-AND-XOR --state all --seed 7").out);
    CHECK(all.rows.size() == 9);
    CHECK(all.rows.back()[all.column("state")] == "all");

    CHECK(run("phic OR-NAND-XOR --state 100").code == 2);
    CHECK(run("phic OR-AND-XOR --state 10").code == 2);
    CHECK(run("phic OR-AND-XOR --len 1").code == 2);
}

TEST_CASE("phic: reruns are byte-identical, whatever the thread count")
{
    const auto a = run("phic XOR-OR-AND-AND --trials 3 --seed 99 --threads 1");
    const auto b = run("phic XOR-OR-AND-AND --trials 3 --seed 99 --threads 6");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("sweep: reference comparison and --min-spearman")
{
    const auto out = scratch() / "sweep3.csv";
    CHECK(run("sweep --nodes 3 --trials 4 --seed 7 --out " + out.string()).code == 0);
    const auto t = csv(read_file(out));
    CHECK(t.rows.size() == 10);
    CHECK(t.has_column("spearman"));
    CHECK(t.rows.front()[t.column("network")] == "XOR-XOR-XOR");

    CHECK(run("sweep --nodes 3 --trials 4 --seed 7 --min-spearman 1.01").code == 3);
    CHECK(run("sweep --nodes 6").code == 2);

    const auto lz = csv(run("sweep --nodes 4 --measure lz --seed 1").out);
    CHECK(lz.rows.size() == 15);

    const auto two = csv(run("sweep --nodes 2 --seed 1").out);
    CHECK(two.rows.size() == 6);
    CHECK_FALSE(two.has_column("spearman"));

    const auto json = nlohmann::json::parse(run("sweep --nodes 3 --seed 7 --format json").out);
    CHECK(json.size() == 10);
}

TEST_CASE("sweep: a user reference file")
{
    const auto ref = write_file("ref.csv", "network,mean,std\nXOR-XOR-XOR,0.6,0.02\nOR-OR-OR,0.06,0.06\n"
                                           "AND-AND-AND,0.06,0.06\n");
    const auto t = csv(run("sweep --nodes 3 --seed 7 --reference " + ref.string()).out);
    CHECK(t.rows.size() == 10);
    std::size_t matched = 0;
    for (const auto& row : t.rows)
        matched += row[t.column("ref_mean")] != "NA";
    CHECK(matched == 3);
}

TEST_CASE("regress: bundled-style table, zero and doubled y")
{
    const std::string body = "XOR-XOR-XOR,3\nXOR-XOR-OR,2.568\nXOR-XOR-AND,2.568\nOR-OR-XOR,1.704\n"
                             "AND-AND-XOR,1.422\nOR-AND-XOR,0.946\nAND-AND-OR,0.312\nOR-OR-AND,0.312\n"
                             "AND-AND-AND,0.277\nOR-OR-OR,0.277\n";
    const auto f = write_file("phi3.csv", "network,mean\n" + body);
    const auto r = run("regress " + f.string());
    REQUIRE(r.code == 0);
    const auto first_line = r.out.substr(0, r.out.find('\n'));
    CHECK(first_line.find("x_high=1.11") != std::string::npos);

    const auto j = nlohmann::json::parse(run("regress " + f.string() + " --format json").out);
    CHECK(std::abs(j["x_high"].get<double>() - 1.11) <= 0.01);
    CHECK(std::abs(j["x_low"].get<double>() - 0.1408) <= 0.001);

    std::string zero = "network,mean\n";
    std::string doubled = "network,mean\n";
    std::istringstream in(body);
    for (std::string line; std::getline(in, line);) {
        const auto comma = line.find(',');
        zero += line.substr(0, comma) + ",0\n";
        doubled += line.substr(0, comma) + "," + std::to_string(2 * std::stod(line.substr(comma + 1))) + "\n";
    }
    const auto jz = nlohmann::json::parse(run("regress " + write_file("z.csv", zero).string() + " --format json").out);
    CHECK(jz["x_high"].get<double>() == 0.0);
    CHECK(jz["x_low"].get<double>() == 0.0);
    const auto jd =
        nlohmann::json::parse(run("regress " + write_file("d.csv", doubled).string() + " --format json").out);
    CHECK(jd["x_high"].get<double>() == doctest::Approx(2 * j["x_high"].get<double>()));
    CHECK(jd["x_low"].get<double>() == doctest::Approx(2 * j["x_low"].get<double>()));

    CHECK(run("regress " + write_file("nomean.csv", "network,y\nOR-OR-OR,1\n").string()).code == 2);
}

TEST_CASE("neuron: files, short window edge cases and divergence")
{
    const auto trace = scratch() / "trace.txt";
    const auto train = scratch() / "train.txt";
    const auto r = run("neuron -I 3.28 --duration 300 --transient 100 --trace-out " + trace.string() +
                       " --binary-out " + train.string());
    REQUIRE(r.code == 0);
    const auto t = csv(r.out);
    CHECK(t.rows[0][t.column("length")] == "100");
    std::size_t n_lines = 0;
    for (char c : read_file(train))
        n_lines += c == '\n';
    CHECK(n_lines == 100);

    const auto high = csv(run("neuron --duration 300 --transient 100 --threshold 100").out);
    CHECK(high.rows[0][high.column("entropy")] == "0");

    const auto whole = csv(run("neuron --duration 300 --transient 100 --window 200").out);
    CHECK(whole.rows[0][whole.column("length")] == "1");
    CHECK(whole.rows[0][whole.column("etc")] == "0");

    CHECK(run("neuron --dt 5 --duration 500 --transient 0 --init 1,0,0").code == 4);
    CHECK(run("neuron --window 0.001").code == 2);
}
