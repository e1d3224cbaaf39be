#include "phic/boolnet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace phic::boolnet {

namespace {

// Gate output given how many of its n_inputs are 1.
inline std::uint8_t eval_counts(GateKind gate, std::size_t ones, std::size_t n_inputs)
{
    switch (gate) {
    case GateKind::OR:
        return ones > 0;
    case GateKind::AND:
        return ones == n_inputs;
    case GateKind::XOR:
        return ones & 1u;
    }
    return 0;
}

double binary_entropy(double p)
{
    if (p <= 0.0 || p >= 1.0)
        return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

std::string trim_upper(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::string_view gate_name(GateKind g)
{
    switch (g) {
    case GateKind::XOR:
        return "XOR";
    case GateKind::OR:
        return "OR";
    case GateKind::AND:
        return "AND";
    }
    return "?";
}

GateKind parse_gate(std::string_view name)
{
    const std::string up = trim_upper(name);
    if (up == "XOR")
        return GateKind::XOR;
    if (up == "OR")
        return GateKind::OR;
    if (up == "AND")
        return GateKind::AND;
    throw std::invalid_argument("unknown gate '" + std::string(name) + "' (valid gates: XOR, OR, AND)");
}

std::uint8_t gate_eval(GateKind gate, std::span<const std::uint8_t> inputs)
{
    if (inputs.empty())
        throw std::domain_error("gate_eval: gate has no inputs");
    const auto ones = static_cast<std::size_t>(std::count_if(inputs.begin(), inputs.end(), [](auto b) { return b != 0; }));
    return eval_counts(gate, ones, inputs.size());
}

double gate_output_entropy(GateKind gate, int n_inputs)
{
    if (n_inputs < 1)
        throw std::domain_error("gate_output_entropy: need at least one input");
    const double all = std::ldexp(1.0, -n_inputs);  // P(all inputs are 1) = P(all are 0)
    switch (gate) {
    case GateKind::XOR:
        return 1.0;
    case GateKind::AND:
        return binary_entropy(all);
    case GateKind::OR:
        return binary_entropy(1.0 - all);
    }
    return 0.0;
}

std::string NetworkSpec::label() const
{
    std::string out;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (i)
            out += '-';
        out += gate_name(gates[i]);
    }
    return out;
}

NetworkSpec parse_network(std::string_view label)
{
    NetworkSpec spec;
    std::size_t pos = 0;
    while (true) {
        const auto dash = label.find('-', pos);
        spec.gates.push_back(parse_gate(label.substr(pos, dash == std::string_view::npos ? dash : dash - pos)));
        if (dash == std::string_view::npos)
            break;
        pos = dash + 1;
    }
    if (spec.gates.size() < 2)
        throw std::invalid_argument("network '" + std::string(label) + "' needs at least 2 gates");
    return spec;
}

NetworkSpec canonical(const NetworkSpec& spec)
{
    NetworkSpec out = spec;
    std::sort(out.gates.begin(), out.gates.end());
    return out;
}

std::string canonical_label(const NetworkSpec& spec)
{
    return canonical(spec).label();
}

NetworkSpec dual(const NetworkSpec& spec)
{
    NetworkSpec out = spec;
    for (auto& g : out.gates) {
        if (g == GateKind::AND)
            g = GateKind::OR;
        else if (g == GateKind::OR)
            g = GateKind::AND;
    }
    return out;
}

bool is_and_or_only(const NetworkSpec& spec)
{
    return std::none_of(spec.gates.begin(), spec.gates.end(), [](GateKind g) { return g == GateKind::XOR; });
}

NetworkState NetworkState::from_index(std::uint64_t index, std::size_t n)
{
    if (n == 0 || n > 63 || (index >> n) != 0)
        throw std::domain_error("state index " + std::to_string(index) + " out of range for " + std::to_string(n) +
                                " nodes");
    NetworkState s;
    s.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        s.bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
    return s;
}

NetworkState NetworkState::from_string(std::string_view text)
{
    NetworkState s;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("state '" + std::string(text) + "' must consist of 0/1 characters");
        s.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (s.bits.empty())
        throw std::invalid_argument("empty state");
    return s;
}

std::uint64_t NetworkState::index() const
{
    std::uint64_t v = 0;
    for (auto b : bits)
        v = (v << 1) | b;
    return v;
}

std::string NetworkState::to_string() const
{
    std::string out;
    for (auto b : bits)
        out += static_cast<char>('0' + b);
    return out;
}

NetworkState complement(const NetworkState& s)
{
    NetworkState out = s;
    for (auto& b : out.bits)
        b ^= 1u;
    return out;
}

NetworkState step(const NetworkSpec& spec, const NetworkState& state)
{
    const std::size_t n = spec.size();
    if (state.size() != n)
        throw std::domain_error("step: state has " + std::to_string(state.size()) + " bits, network has " +
                                std::to_string(n) + " nodes");
    std::size_t ones = 0;
    for (auto b : state.bits)
        ones += b;
    NetworkState next;
    next.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        next.bits[i] = eval_counts(spec.gates[i], ones - state.bits[i], n - 1);
    return next;
}

const SymbolSequence& ClampedRun::output_of(std::size_t node) const
{
    for (std::size_t k = 0; k < output_nodes.size(); ++k)
        if (output_nodes[k] == node)
            return outputs[k];
    throw std::out_of_range("no output recorded for node " + std::to_string(node));
}

ClampedRun simulate_clamped(const NetworkSpec& spec, const NetworkState& initial, std::size_t clamped_node,
                            const SymbolSequence& input_series)
{
    const std::size_t n = spec.size();
    if (initial.size() != n)
        throw std::domain_error("simulate_clamped: state size does not match network");
    if (clamped_node >= n)
        throw std::domain_error("simulate_clamped: clamped node " + std::to_string(clamped_node) + " out of range");
    if (input_series.empty())
        throw std::domain_error("simulate_clamped: empty input series");
    if (input_series[0] != initial[clamped_node])
        throw std::domain_error("simulate_clamped: input series starts with " + std::to_string(input_series[0]) +
                                " but node " + std::to_string(clamped_node) + " is in state " +
                                std::to_string(initial[clamped_node]));
    for (Symbol x : input_series.symbols)
        if (x > 1)
            throw std::domain_error("simulate_clamped: input series is not binary");

    const std::size_t len = input_series.size();
    ClampedRun run;
    run.clamped_node = clamped_node;
    run.input_series = input_series;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == clamped_node)
            continue;
        run.output_nodes.push_back(j);
        run.outputs.emplace_back(std::vector<Symbol>(len), 2);
    }

    std::vector<std::uint8_t> cur = initial.bits;
    std::vector<std::uint8_t> next(n);
    for (std::size_t t = 0; t < len; ++t) {
        if (t > 0) {
            std::size_t ones = 0;
            for (auto b : cur)
                ones += b;
            for (std::size_t j = 0; j < n; ++j)
                if (j != clamped_node)
                    next[j] = eval_counts(spec.gates[j], ones - cur[j], n - 1);
            cur.swap(next);
        }
        cur[clamped_node] = static_cast<std::uint8_t>(input_series[t]);
        for (std::size_t k = 0; k < run.output_nodes.size(); ++k)
            run.outputs[k].symbols[t] = cur[run.output_nodes[k]];
    }
    return run;
}

std::vector<NetworkSpec> enumerate_networks(int n)
{
    if (n < 2)
        throw std::domain_error("enumerate_networks: need at least 2 nodes");
    std::vector<NetworkSpec> out;
    for (int x = n; x >= 0; --x) {
        for (int o = n - x; o >= 0; --o) {
            const int a = n - x - o;
            NetworkSpec spec;
            spec.gates.insert(spec.gates.end(), x, GateKind::XOR);
            spec.gates.insert(spec.gates.end(), o, GateKind::OR);
            spec.gates.insert(spec.gates.end(), a, GateKind::AND);
            out.push_back(std::move(spec));
        }
    }
    return out;
}

}  // namespace phic::boolnet
