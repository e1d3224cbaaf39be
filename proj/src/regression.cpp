#include "phic/regression.hpp"

#include <cmath>
#include <stdexcept>

namespace phic::regression {

EntropyDesignRow design_row(const boolnet::NetworkSpec& spec, double y)
{
    EntropyDesignRow row;
    for (auto g : spec.gates) {
        if (g == boolnet::GateKind::XOR)
            ++row.n_high;
        else
            ++row.n_low;
    }
    row.y = y;
    return row;
}

EntropyFit fit_entropy_model(std::span<const EntropyDesignRow> rows)
{
    if (rows.size() < 2)
        throw std::domain_error("fit_entropy_model: need at least 2 rows, got " + std::to_string(rows.size()));

    double uu = 0.0, uv = 0.0, vv = 0.0, uy = 0.0, vy = 0.0;
    for (const auto& r : rows) {
        const double u = r.n_high * r.h_high;
        const double v = r.n_low * r.h_low;
        uu += u * u;
        uv += u * v;
        vv += v * v;
        uy += u * r.y;
        vy += v * r.y;
    }
    if (uu == 0.0)
        throw std::domain_error("fit_entropy_model: design column n_high*H_high is identically zero");
    if (vv == 0.0)
        throw std::domain_error("fit_entropy_model: design column n_low*H_low is identically zero");
    const double det = uu * vv - uv * uv;
    if (det <= 1e-12 * uu * vv)
        throw std::domain_error("fit_entropy_model: design columns n_high*H_high and n_low*H_low are collinear");

    return {(vv * uy - uv * vy) / det, (uu * vy - uv * uy) / det};
}

double predict(const EntropyDesignRow& row, const EntropyFit& fit)
{
    return row.n_high * row.h_high * fit.x_high + row.n_low * row.h_low * fit.x_low;
}

}  // namespace phic::regression
