// phic: compression-complexity measures and integrated-information
// experiments on small boolean gate networks.
//
// Exit codes: 0 ok, 2 input/parse error, 3 reference comparison failed,
// 4 numeric divergence.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phic/complexity.hpp"
#include "phic/hr_neuron.hpp"
#include "phic/reference.hpp"
#include "phic/regression.hpp"
#include "phic/report.hpp"
#include "phic/sweep.hpp"

namespace {

using namespace phic;

constexpr int kExitInput = 2;
constexpr int kExitComparison = 3;
constexpr int kExitDiverged = 4;

enum class Format { Csv, Json };

struct CommonOptions {
    std::string measure = "etc";
    std::size_t len = kDefaultLength;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string format = "csv";
    std::string out;
    int threads = 0;
};

Format parse_format(const std::string& f)
{
    if (f == "csv")
        return Format::Csv;
    if (f == "json")
        return Format::Json;
    throw std::invalid_argument("unknown format '" + f + "' (valid: csv, json)");
}

void emit(const std::string& path, const std::function<void(std::ostream&)>& write)
{
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    write(file);
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool randomness)
{
    cmd->add_option("--measure", opt.measure, "Complexity measure: etc or lz")->capture_default_str();
    if (randomness) {
        cmd->add_option("--len", opt.len, "Perturbation length")->capture_default_str()->check(CLI::Range(2, 1 << 20));
        cmd->add_option("--seed", opt.seed, "Root seed")->capture_default_str();
        cmd->add_option("--trials", opt.trials, "Perturbation draws per state")->capture_default_str()->check(
            CLI::Range(1, 1 << 20));
        cmd->add_option("--threads", opt.threads, "Worker threads (0 = OpenMP default)");
    }
    cmd->add_option("--format", opt.format, "Output format: csv or json")->capture_default_str();
    cmd->add_option("--out", opt.out, "Output path (default stdout)");
}

// measure ---------------------------------------------------------------

int run_measure(const std::string& file, const std::string& measure, std::uint32_t alphabet, const CommonOptions& opt)
{
    auto in = open_input(file);
    const auto seq = read_symbol_text(in, alphabet);
    double raw = 0.0;
    double normalized = 0.0;
    if (measure == "etc") {
        const auto r = complexity::etc(seq.view());
        raw = static_cast<double>(r.iterations);
        normalized = r.normalized;
    } else if (measure == "lz") {
        const auto r = complexity::lz(seq);
        raw = static_cast<double>(r.component_count);
        normalized = r.normalized;
    } else if (measure == "entropy") {
        raw = complexity::shannon_entropy(seq.view());
        normalized = raw / std::log2(static_cast<double>(seq.alphabet_size));
    } else {
        throw std::invalid_argument("unknown measure '" + measure + "' (valid: etc, lz, entropy)");
    }
    const auto format = parse_format(opt.format);
    emit(opt.out, [&](std::ostream& out) {
        if (format == Format::Json) {
            nlohmann::json doc = {{"measure", measure},     {"length", seq.size()},
                                  {"alphabet", seq.alphabet_size}, {"raw", raw},
                                  {"normalized", normalized}};
            out << doc.dump(2) << '\n';
        } else {
            out << "measure,length,alphabet,raw,normalized\n"
                << measure << ',' << seq.size() << ',' << seq.alphabet_size << ',' << report::format_number(raw)
                << ',' << report::format_number(normalized) << '\n';
        }
    });
    return 0;
}

// phic ------------------------------------------------------------------

int run_phic(const std::string& label, const std::string& state, const CommonOptions& opt)
{
    const auto spec = boolnet::parse_network(label);
    const auto kind = parse_measure(opt.measure);
    const auto format = parse_format(opt.format);
    const SweepConfig config{kind, opt.seed, opt.trials, opt.len};

    report::PhicRun run;
    run.spec = spec;
    run.kind = kind;
    run.trials = opt.trials;
    run.seed = opt.seed;
    if (state == "all") {
        auto summary = phi_c_mean(spec, config);
        run.states = summary.per_state;
        run.summary = std::move(summary);
    } else {
        const auto s = boolnet::NetworkState::from_string(state);
        if (s.size() != spec.size())
            throw std::invalid_argument("state '" + state + "' has " + std::to_string(s.size()) + " bits, network has " +
                                        std::to_string(spec.size()) + " nodes");
        StateSummary st;
        st.state = s;
        double sum = 0.0;
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const auto seed = derive_seed(opt.seed, spec.label(), s.index(), t);
            st.trials.push_back(phi_c(spec, s, kind, make_perturbations(opt.len, seed)));
            sum += st.trials.back().phi_c;
        }
        st.mean = sum / static_cast<double>(opt.trials);
        run.states.push_back(std::move(st));
    }
    emit(opt.out, [&](std::ostream& out) {
        if (format == Format::Json)
            report::write_phic_json(out, run);
        else
            report::write_phic_csv(out, run);
    });
    return 0;
}

// sweep -----------------------------------------------------------------

int run_sweep(int nodes, const std::string& reference_path, double min_spearman, const CommonOptions& opt)
{
    if (nodes < 2 || nodes > 5)
        throw std::invalid_argument("--nodes must be in [2, 5] for exhaustive sweeps");
    const auto kind = parse_measure(opt.measure);
    const auto format = parse_format(opt.format);

    report::HierarchyReport rep;
    rep.nodes = nodes;
    rep.kind = kind;
    rep.trials = opt.trials;
    rep.seed = opt.seed;
    rep.rows = hierarchy_report(nodes, {kind, opt.seed, opt.trials, opt.len});

    std::vector<reference::Row> ref;
    if (!reference_path.empty()) {
        auto in = open_input(reference_path);
        ref = reference::parse_csv(in);
        std::erase_if(ref, [&](const auto& r) { return r.nodes != nodes; });
    } else if (nodes >= 3) {
        ref = reference::bundled(reference::table_for(kind), nodes);
    }
    if (!ref.empty())
        reference::compare(rep, ref);

    emit(opt.out, [&](std::ostream& out) {
        if (format == Format::Json)
            report::write_hierarchy_json(out, rep);
        else
            report::write_hierarchy_csv(out, rep);
    });

    if (!std::isnan(min_spearman)) {
        if (!rep.spearman || *rep.spearman < min_spearman) {
            std::cerr << "phic: Spearman correlation "
                      << (rep.spearman ? report::format_number(*rep.spearman) : std::string("NA"))
                      << " below required " << min_spearman << '\n';
            return kExitComparison;
        }
    }
    return 0;
}

// regress ---------------------------------------------------------------

int run_regress(const std::string& input, int nodes, const CommonOptions& opt)
{
    auto in = open_input(input);
    const auto table = report::read_csv(in);
    const auto network_col = table.column("network");
    const auto mean_col = table.column("mean");
    const bool has_nodes = table.has_column("nodes");

    std::vector<std::string> labels;
    std::vector<regression::EntropyDesignRow> rows;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& cells = table.rows[k];
        const auto spec = boolnet::parse_network(cells[network_col]);
        if (nodes > 0) {
            const int n = has_nodes ? static_cast<int>(report::parse_number(cells[table.column("nodes")], k + 2, "nodes"))
                                    : static_cast<int>(spec.size());
            if (n != nodes)
                continue;
        }
        labels.push_back(cells[network_col]);
        rows.push_back(regression::design_row(spec, report::parse_number(cells[mean_col], k + 2, "mean")));
    }
    const auto fit = regression::fit_entropy_model(rows);
    const auto format = parse_format(opt.format);
    emit(opt.out, [&](std::ostream& out) {
        if (format == Format::Json) {
            nlohmann::json doc = {{"x_high", fit.x_high}, {"x_low", fit.x_low}, {"rows", nlohmann::json::array()}};
            for (std::size_t k = 0; k < rows.size(); ++k)
                doc["rows"].push_back({{"network", labels[k]},
                                       {"n_high", rows[k].n_high},
                                       {"n_low", rows[k].n_low},
                                       {"y", rows[k].y},
                                       {"y_hat", regression::predict(rows[k], fit)}});
            out << doc.dump(2) << '\n';
        } else {
            out << "# x_high=" << report::format_number(fit.x_high) << " x_low=" << report::format_number(fit.x_low)
                << '\n';
            out << "network,n_high,n_low,y,y_hat\n";
            for (std::size_t k = 0; k < rows.size(); ++k)
                out << labels[k] << ',' << rows[k].n_high << ',' << rows[k].n_low << ','
                    << report::format_number(rows[k].y) << ','
                    << report::format_number(regression::predict(rows[k], fit)) << '\n';
        }
    });
    return 0;
}

// neuron ----------------------------------------------------------------

struct NeuronOptions {
    hr::Params params;
    hr::Settings settings;
    std::vector<double> init;
    double window = 2.0;
    double threshold = -0.1;
    std::string trace_out;
    std::string binary_out;
};

int run_neuron(NeuronOptions nopt, const CommonOptions& opt)
{
    if (!nopt.init.empty()) {
        if (nopt.init.size() != 3)
            throw std::invalid_argument("--init expects three values S,P,Q");
        nopt.settings.init = {nopt.init[0], nopt.init[1], nopt.init[2]};
    }
    const auto trace = hr::simulate(nopt.params, nopt.settings);
    const auto spikes = hr::binarize_spikes(trace, nopt.settings.dt, nopt.window, nopt.threshold);

    if (!nopt.trace_out.empty())
        emit(nopt.trace_out, [&](std::ostream& out) {
            for (double v : trace)
                out << report::format_number(v) << '\n';
        });
    if (!nopt.binary_out.empty())
        emit(nopt.binary_out, [&](std::ostream& out) { write_symbol_text(out, spikes.view()); });

    const double h = complexity::shannon_entropy(spikes.view());
    const double etc = complexity::etc(spikes.view()).normalized;
    const double lz = complexity::lz_normalized(spikes.view(), 2);
    const auto format = parse_format(opt.format);
    emit(opt.out, [&](std::ostream& out) {
        if (format == Format::Json) {
            nlohmann::json doc = {{"current", nopt.params.current}, {"r", nopt.params.r}, {"length", spikes.size()},
                                  {"entropy", h},                   {"etc", etc},         {"lz", lz}};
            out << doc.dump(2) << '\n';
        } else {
            out << "current,r,length,entropy,etc,lz\n"
                << report::format_number(nopt.params.current) << ',' << report::format_number(nopt.params.r) << ','
                << spikes.size() << ',' << report::format_number(h) << ',' << report::format_number(etc) << ','
                << report::format_number(lz) << '\n';
        }
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Compression-complexity measures of integrated information"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* measure = app.add_subcommand("measure", "Complexity of a one-symbol-per-line sequence file");
    std::string measure_file;
    std::uint32_t alphabet = 0;
    measure->add_option("file", measure_file, "Sequence file")->required();
    measure->add_option("--alphabet", alphabet, "Declared alphabet size (default: max symbol + 1, at least 2)");
    add_common(measure, opt, false);
    measure->get_option("--measure")->description("etc, lz or entropy");

    auto* phic_cmd = app.add_subcommand("phic", "Phi^C of one network for one state or all states");
    std::string label;
    std::string state = "all";
    phic_cmd->add_option("network", label, "Gate labels, e.g. OR-AND-XOR")->required();
    phic_cmd->add_option("--state", state, "Bit string such as 100, or 'all'")->capture_default_str();
    add_common(phic_cmd, opt, true);

    auto* sweep_cmd = app.add_subcommand("sweep", "Hierarchy of all N-node networks vs reference table");
    int nodes = 3;
    std::string reference_path;
    double min_spearman = std::nan("");
    sweep_cmd->add_option("--nodes", nodes, "Network size (2..5)")->capture_default_str();
    sweep_cmd->add_option("--reference", reference_path, "Reference CSV (default: bundled table)");
    sweep_cmd->add_option("--min-spearman", min_spearman, "Exit 3 if the rank correlation falls below this");
    add_common(sweep_cmd, opt, true);

    auto* regress_cmd = app.add_subcommand("regress", "Fit the node-entropy model to a network/mean CSV");
    std::string regress_input;
    int regress_nodes = 0;
    regress_cmd->add_option("input", regress_input, "CSV with network and mean columns")->required();
    regress_cmd->add_option("--nodes", regress_nodes, "Only use rows with this many nodes");
    regress_cmd->add_option("--format", opt.format, "Output format: csv or json")->capture_default_str();
    regress_cmd->add_option("--out", opt.out, "Output path (default stdout)");

    auto* neuron_cmd = app.add_subcommand("neuron", "Hindmarsh-Rose spike train and its complexity");
    NeuronOptions nopt;
    neuron_cmd->add_option("--current,-I", nopt.params.current, "External current I")->capture_default_str();
    neuron_cmd->add_option("--r", nopt.params.r, "Internal rate r")->capture_default_str();
    neuron_cmd->add_option("--dt", nopt.settings.dt, "RK4 step")->capture_default_str();
    neuron_cmd->add_option("--duration", nopt.settings.duration, "Total time, transient included")
        ->capture_default_str();
    neuron_cmd->add_option("--transient", nopt.settings.transient, "Discarded initial time")->capture_default_str();
    neuron_cmd->add_option("--init", nopt.init, "Initial S,P,Q")->delimiter(',')->expected(3);
    neuron_cmd->add_option("--window", nopt.window, "Binarization window (time units)")->capture_default_str();
    neuron_cmd->add_option("--threshold", nopt.threshold, "Spike threshold")->capture_default_str();
    neuron_cmd->add_option("--trace-out", nopt.trace_out, "Write the voltage trace here");
    neuron_cmd->add_option("--binary-out", nopt.binary_out, "Write the binarized train here");
    neuron_cmd->add_option("--format", opt.format, "Output format: csv or json")->capture_default_str();
    neuron_cmd->add_option("--out", opt.out, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        set_parallel_threads(opt.threads);
        if (*measure)
            return run_measure(measure_file, opt.measure, alphabet, opt);
        if (*phic_cmd)
            return run_phic(label, state, opt);
        if (*sweep_cmd)
            return run_sweep(nodes, reference_path, min_spearman, opt);
        if (*regress_cmd)
            return run_regress(regress_input, regress_nodes, opt);
        if (*neuron_cmd)
            return run_neuron(nopt, opt);
    } catch (const hr::IntegrationDiverged& e) {
        std::cerr << "phic: " << e.what() << '\n';
        return kExitDiverged;
    } catch (const ParseError& e) {
        std::cerr << "phic: parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "phic: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "phic: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
