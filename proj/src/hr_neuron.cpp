#include "phic/hr_neuron.hpp"

#include <algorithm>
#include <cmath>

namespace phic::hr {

State derivatives(const State& x, const Params& params)
{
    const double s2 = x.s * x.s;
    return {
        x.p + 3.0 * s2 - s2 * x.s - x.q + params.current,
        1.0 - 5.0 * s2 - x.p,
        -params.r * (x.q - 4.0 * (x.s + 8.0 / 5.0)),
    };
}

namespace {

State axpy(const State& x, double a, const State& d)
{
    return {x.s + a * d.s, x.p + a * d.p, x.q + a * d.q};
}

bool finite(const State& x)
{
    return std::isfinite(x.s) && std::isfinite(x.p) && std::isfinite(x.q);
}

}  // namespace

State rk4_step(const State& x, const Params& params, double dt)
{
    const State k1 = derivatives(x, params);
    const State k2 = derivatives(axpy(x, dt / 2, k1), params);
    const State k3 = derivatives(axpy(x, dt / 2, k2), params);
    const State k4 = derivatives(axpy(x, dt, k3), params);
    return {
        x.s + dt / 6 * (k1.s + 2 * k2.s + 2 * k3.s + k4.s),
        x.p + dt / 6 * (k1.p + 2 * k2.p + 2 * k3.p + k4.p),
        x.q + dt / 6 * (k1.q + 2 * k2.q + 2 * k3.q + k4.q),
    };
}

std::vector<double> integrate(const Params& params, double dt, std::size_t n_steps, const State& init,
                              std::size_t transient_steps)
{
    if (!(dt > 0.0))
        throw std::domain_error("integrate: dt must be positive");
    if (n_steps <= transient_steps)
        throw std::domain_error("integrate: n_steps must exceed transient_steps");
    if (!(params.r > 0.0))
        throw std::domain_error("integrate: r must be positive");

    std::vector<double> trace;
    trace.reserve(n_steps - transient_steps);
    State x = init;
    for (std::size_t step = 1; step <= n_steps; ++step) {
        x = rk4_step(x, params, dt);
        if (!finite(x))
            throw IntegrationDiverged(step);
        if (step > transient_steps)
            trace.push_back(x.s);
    }
    return trace;
}

std::vector<double> simulate(const Params& params, const Settings& settings)
{
    if (!(settings.dt > 0.0) || !(settings.duration > settings.transient) || settings.transient < 0.0)
        throw std::domain_error("simulate: need dt > 0 and duration > transient >= 0");
    const auto n_steps = static_cast<std::size_t>(std::llround(settings.duration / settings.dt));
    const auto transient_steps = static_cast<std::size_t>(std::llround(settings.transient / settings.dt));
    return integrate(params, settings.dt, n_steps, settings.init, transient_steps);
}

SymbolSequence binarize_spikes(std::span<const double> trace, double dt, double window, double threshold)
{
    if (trace.empty())
        throw std::domain_error("binarize_spikes: empty trace");
    if (!(dt > 0.0))
        throw std::domain_error("binarize_spikes: dt must be positive");
    const double per = window / dt;
    if (!(per >= 1.0 - 1e-9))
        throw std::domain_error("binarize_spikes: window is shorter than one sample");
    const auto samples = static_cast<std::size_t>(std::llround(per));
    const std::size_t windows = trace.size() / samples;
    if (windows == 0)
        throw std::domain_error("binarize_spikes: trace is shorter than one window");

    std::vector<Symbol> out(windows);
    for (std::size_t w = 0; w < windows; ++w) {
        const auto first = trace.begin() + static_cast<std::ptrdiff_t>(w * samples);
        out[w] = *std::max_element(first, first + static_cast<std::ptrdiff_t>(samples)) > threshold ? 1 : 0;
    }
    return {std::move(out), 2};
}

}  // namespace phic::hr
