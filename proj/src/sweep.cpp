#include "phic/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phic {

namespace {

void check_config(const SweepConfig& config)
{
    if (config.trials < 1)
        throw std::domain_error("sweep: trials must be at least 1");
    if (config.len < 2)
        throw std::domain_error("sweep: perturbation length must be at least 2");
}

std::size_t state_count(const boolnet::NetworkSpec& spec)
{
    if (spec.size() < 2 || spec.size() > 20)
        throw std::domain_error("sweep: exhaustive state averaging needs 2..20 nodes");
    return std::size_t{1} << spec.size();
}

PhiCResult run_task(const boolnet::NetworkSpec& spec, const std::string& label, std::uint64_t state_index,
                    std::size_t trial, const SweepConfig& config)
{
    const auto state = boolnet::NetworkState::from_index(state_index, spec.size());
    const auto seed = derive_seed(config.seed, label, state_index, trial);
    return phi_c(spec, state, config.kind, make_perturbations(config.len, seed));
}

StateSummary reduce_state(const boolnet::NetworkSpec& spec, std::uint64_t state_index,
                          std::vector<PhiCResult> trials)
{
    StateSummary st;
    st.state = boolnet::NetworkState::from_index(state_index, spec.size());
    double sum = 0.0;
    for (const auto& r : trials)
        sum += r.phi_c;
    st.mean = sum / static_cast<double>(trials.size());
    st.trials = std::move(trials);
    return st;
}

}  // namespace

int parallel_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_parallel_threads(int threads)
{
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::vector<PhiCSummary> sweep(const std::vector<boolnet::NetworkSpec>& networks, const SweepConfig& config,
                               Execution exec)
{
    check_config(config);

    struct Task {
        std::size_t network;
        std::uint64_t state;
        std::size_t trial;
    };
    std::vector<Task> tasks;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < networks.size(); ++k) {
        labels.push_back(networks[k].label());
        const std::size_t states = state_count(networks[k]);
        for (std::uint64_t s = 0; s < states; ++s)
            for (std::size_t t = 0; t < config.trials; ++t)
                tasks.push_back({k, s, t});
    }

    std::vector<PhiCResult> results(tasks.size());
    const auto count = static_cast<std::ptrdiff_t>(tasks.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const auto& task = tasks[i];
            results[i] = run_task(networks[task.network], labels[task.network], task.state, task.trial, config);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const auto& task = tasks[i];
            results[i] = run_task(networks[task.network], labels[task.network], task.state, task.trial, config);
        }
    }

    std::vector<PhiCSummary> out;
    out.reserve(networks.size());
    std::size_t next = 0;
    for (const auto& spec : networks) {
        const std::size_t states = state_count(spec);
        std::vector<StateSummary> per_state;
        per_state.reserve(states);
        for (std::uint64_t s = 0; s < states; ++s) {
            std::vector<PhiCResult> trials(std::make_move_iterator(results.begin() + next),
                                           std::make_move_iterator(results.begin() + next + config.trials));
            next += config.trials;
            per_state.push_back(reduce_state(spec, s, std::move(trials)));
        }
        out.push_back(summarize(std::move(per_state)));
    }
    return out;
}

std::vector<PhiCSummary> sweep_reference(const std::vector<boolnet::NetworkSpec>& networks,
                                         const SweepConfig& config)
{
    check_config(config);
    std::vector<PhiCSummary> out;
    for (const auto& spec : networks) {
        const std::string label = spec.label();
        const std::size_t states = state_count(spec);
        std::vector<StateSummary> per_state;
        for (std::uint64_t s = 0; s < states; ++s) {
            std::vector<PhiCResult> trials;
            for (std::size_t t = 0; t < config.trials; ++t)
                trials.push_back(run_task(spec, label, s, t, config));
            per_state.push_back(reduce_state(spec, s, std::move(trials)));
        }
        out.push_back(summarize(std::move(per_state)));
    }
    return out;
}

PhiCSummary phi_c_mean(const boolnet::NetworkSpec& spec, const SweepConfig& config, Execution exec)
{
    return std::move(sweep({spec}, config, exec).front());
}

std::vector<HierarchyRow> hierarchy_report(int n, const SweepConfig& config, Execution exec)
{
    const auto networks = boolnet::enumerate_networks(n);
    const auto summaries = sweep(networks, config, exec);
    std::vector<HierarchyRow> rows;
    for (std::size_t k = 0; k < networks.size(); ++k)
        rows.push_back({networks[k], k + 1, summaries[k].mean, summaries[k].std, summaries[k].cov});
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.mean > b.mean; });
    return rows;
}

}  // namespace phic
