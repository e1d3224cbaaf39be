#include "phic/phic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "phic/complexity.hpp"

namespace phic {

std::string_view measure_name(MeasureKind kind)
{
    return kind == MeasureKind::ETC ? "etc" : "lz";
}

MeasureKind parse_measure(std::string_view name)
{
    if (name == "etc" || name == "ETC")
        return MeasureKind::ETC;
    if (name == "lz" || name == "LZ")
        return MeasureKind::LZ;
    throw std::invalid_argument("unknown measure '" + std::string(name) + "' (valid: etc, lz)");
}

double normalized_complexity(const SymbolSequence& seq, MeasureKind kind)
{
    if (kind == MeasureKind::ETC)
        return complexity::etc(seq.view()).normalized;
    return complexity::lz_normalized(seq.view(), seq.alphabet_size);
}

double DCCRD::value_of(std::size_t node) const
{
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k] == node)
            return values[k];
    throw std::out_of_range("dCCRD has no entry for node " + std::to_string(node));
}

DCCRD dccrd(const boolnet::NetworkSpec& spec, const boolnet::NetworkState& state, std::size_t node, MeasureKind kind,
            const PerturbationPair& pair)
{
    if (node >= spec.size() || state.size() != spec.size())
        throw std::domain_error("dccrd: node or state does not fit the network");
    if (pair.mep.empty() || pair.zep.empty() || pair.mep[0] != state[node] || pair.zep[0] != state[node])
        throw std::domain_error("dccrd: perturbation series must start with the current state of node " +
                                std::to_string(node));

    const auto mep_run = boolnet::simulate_clamped(spec, state, node, pair.mep);
    const auto zep_run = boolnet::simulate_clamped(spec, state, node, pair.zep);

    DCCRD d;
    d.perturbed_node = node;
    d.nodes = mep_run.output_nodes;
    d.values.reserve(d.nodes.size());
    for (std::size_t k = 0; k < d.nodes.size(); ++k)
        d.values.push_back(normalized_complexity(mep_run.outputs[k], kind) -
                           normalized_complexity(zep_run.outputs[k], kind));
    return d;
}

double aggregate(const DCCRD& d)
{
    double sum = 0.0;
    for (double v : d.values)
        sum += v;
    return sum;
}

PhiCResult phi_c(const boolnet::NetworkSpec& spec, const boolnet::NetworkState& state, MeasureKind kind,
                 const PerturbationSet& perturbations)
{
    const std::size_t n = spec.size();
    if (n < 2)
        throw std::domain_error("phi_c: network needs at least 2 nodes");
    if (state.size() != n)
        throw std::domain_error("phi_c: state size does not match network");

    PhiCResult result;
    result.per_node_aggregate.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = dccrd(spec, state, i, kind, perturbations.starting_with(state[i]));
        result.per_node_aggregate.push_back(aggregate(d));
    }
    result.argmax_node = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (result.per_node_aggregate[i] > result.per_node_aggregate[result.argmax_node])
            result.argmax_node = i;
    result.phi_c = result.per_node_aggregate[result.argmax_node];
    return result;
}

PhiCResult phi_c(const boolnet::NetworkSpec& spec, const boolnet::NetworkState& state, MeasureKind kind,
                 std::uint64_t seed, std::size_t len)
{
    return phi_c(spec, state, kind, make_perturbations(len, seed));
}

PhiCSummary summarize(std::vector<StateSummary> per_state)
{
    PhiCSummary s;
    s.per_state = std::move(per_state);
    const auto count = static_cast<double>(s.per_state.size());
    if (s.per_state.empty())
        return s;
    double sum = 0.0;
    for (const auto& st : s.per_state)
        sum += st.mean;
    s.mean = sum / count;
    if (s.per_state.size() > 1) {
        double ss = 0.0;
        for (const auto& st : s.per_state)
            ss += (st.mean - s.mean) * (st.mean - s.mean);
        s.std = std::sqrt(ss / (count - 1.0));
    }
    if (s.mean != 0.0)
        s.cov = s.std / s.mean;
    return s;
}

}  // namespace phic
