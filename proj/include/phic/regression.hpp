#pragma once

#include <span>
#include <vector>

#include "phic/boolnet.hpp"

namespace phic::regression {

// Output entropies used for the two node classes: XOR is "high", AND/OR "low".
inline constexpr double kHighEntropy = 1.0;
inline constexpr double kLowEntropy = 0.8113;

struct EntropyDesignRow {
    int n_high = 0;
    int n_low = 0;
    double h_high = kHighEntropy;
    double h_low = kLowEntropy;
    double y = 0.0;
};

struct EntropyFit {
    double x_high = 0.0;
    double x_low = 0.0;
};

EntropyDesignRow design_row(const boolnet::NetworkSpec& spec, double y);

// Least squares, no intercept, for  y = n_high*H_high*x_high + n_low*H_low*x_low.
// Solved through the 2x2 normal equations. Throws std::domain_error for fewer
// than two rows or a rank-deficient design.
EntropyFit fit_entropy_model(std::span<const EntropyDesignRow> rows);

double predict(const EntropyDesignRow& row, const EntropyFit& fit);

}  // namespace phic::regression
