#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "phic/sequence.hpp"

namespace phic::hr {

// Hindmarsh-Rose neuron in dimensionless form:
//   S' = P + 3S^2 - S^3 - Q + I
//   P' = 1 - 5S^2 - P
//   Q' = -r (Q - 4 (S + 8/5))
struct State {
    double s = 0.0;  // membrane voltage
    double p = 0.0;  // recovery
    double q = 0.0;  // adaptation
};

struct Params {
    double current = 3.28;  // I
    double r = 0.0021;
};

State derivatives(const State& x, const Params& params);

class IntegrationDiverged : public std::runtime_error {
public:
    explicit IntegrationDiverged(std::size_t step)
        : std::runtime_error("integration diverged at step " + std::to_string(step)), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

State rk4_step(const State& x, const Params& params, double dt);

// Fixed-step RK4 for n_steps. Returns S after each step past the transient,
// i.e. n_steps - transient_steps samples.
std::vector<double> integrate(const Params& params, double dt, std::size_t n_steps, const State& init,
                              std::size_t transient_steps);

struct Settings {
    double dt = 0.01;
    double duration = 20000.0;   // time units, transient included
    double transient = 2000.0;   // time units discarded
    State init{};
};

std::vector<double> simulate(const Params& params, const Settings& settings);

// Splits the trace into consecutive windows of `window` time units and emits 1
// when the window's maximum exceeds threshold. A trailing partial window is
// dropped.
SymbolSequence binarize_spikes(std::span<const double> trace, double dt, double window = 2.0,
                               double threshold = -0.1);

}  // namespace phic::hr
