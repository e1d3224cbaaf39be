#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "phic/reference.hpp"
#include "phic/regression.hpp"

using namespace phic;
using namespace phic::regression;

namespace {

std::vector<EntropyDesignRow> three_node_phi_rows()
{
    std::vector<EntropyDesignRow> rows;
    for (const auto& r : reference::bundled(reference::Table::Phi, 3))
        rows.push_back(design_row(boolnet::parse_network(r.network), r.mean));
    return rows;
}

EntropyDesignRow row(int n_high, int n_low, double y)
{
    EntropyDesignRow r;
    r.n_high = n_high;
    r.n_low = n_low;
    r.y = y;
    return r;
}

}  // namespace

TEST_CASE("design_row classifies XOR as high entropy")
{
    const auto r = design_row(boolnet::parse_network("OR-XOR-AND"), 1.5);
    CHECK(r.n_high == 1);
    CHECK(r.n_low == 2);
    CHECK(r.h_high == 1.0);
    CHECK(r.h_low == 0.8113);
    CHECK(r.y == 1.5);
}

TEST_CASE("fit on the 3-node phi table reproduces the reference coefficients")
{
    const auto rows = three_node_phi_rows();
    REQUIRE(rows.size() == 10);
    const auto fit = fit_entropy_model(rows);
    // frozen from an independent numpy lstsq on the same ten rows
    CHECK(fit.x_high == doctest::Approx(1.1100666666666663).epsilon(1e-12));
    CHECK(fit.x_low == doctest::Approx(0.14084391306134184).epsilon(1e-12));
    CHECK(std::abs(fit.x_high - 1.11) <= 0.01);
    CHECK(std::abs(fit.x_low - 0.1408) <= 0.001);

    CHECK(std::abs(predict(row(3, 0, 0), fit) - 3.3301) <= 1e-3);
    CHECK(std::abs(predict(row(2, 1, 0), fit) - 2.3343) <= 1e-3);
    CHECK(std::abs(predict(row(1, 2, 0), fit) - 1.3385) <= 1e-3);
    CHECK(std::abs(predict(row(0, 3, 0), fit) - 0.3427) <= 1e-3);
    CHECK(predict(row(0, 0, 0), fit) == 0.0);
}

TEST_CASE("two rows on a known plane are recovered exactly")
{
    const double a = 0.7, b = -0.3;
    std::vector<EntropyDesignRow> rows{row(2, 1, 0), row(1, 3, 0)};
    for (auto& r : rows)
        r.y = r.n_high * r.h_high * a + r.n_low * r.h_low * b;
    const auto fit = fit_entropy_model(rows);
    CHECK(fit.x_high == doctest::Approx(a).epsilon(1e-12));
    CHECK(fit.x_low == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("doubling y doubles the coefficients; y = 0 gives zero")
{
    auto rows = three_node_phi_rows();
    const auto fit = fit_entropy_model(rows);
    for (auto& r : rows)
        r.y *= 2;
    const auto doubled = fit_entropy_model(rows);
    CHECK(doubled.x_high == doctest::Approx(2 * fit.x_high).epsilon(1e-12));
    CHECK(doubled.x_low == doctest::Approx(2 * fit.x_low).epsilon(1e-12));

    for (auto& r : rows)
        r.y = 0;
    const auto zero = fit_entropy_model(rows);
    CHECK(zero.x_high == 0.0);
    CHECK(zero.x_low == 0.0);
}

TEST_CASE("residuals are orthogonal to both design columns")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> y(0.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        auto rows = three_node_phi_rows();
        for (auto& r : rows)
            r.y = y(rng);
        const auto fit = fit_entropy_model(rows);
        double dot_u = 0, dot_v = 0, norm_u = 0, norm_v = 0, norm_e = 0;
        for (const auto& r : rows) {
            const double e = r.y - predict(r, fit);
            const double u = r.n_high * r.h_high;
            const double v = r.n_low * r.h_low;
            dot_u += e * u;
            dot_v += e * v;
            norm_u += u * u;
            norm_v += v * v;
            norm_e += e * e;
        }
        const double scale_e = std::sqrt(norm_e) + 1e-300;
        CHECK(std::abs(dot_u) / (std::sqrt(norm_u) * scale_e) <= 1e-9);
        CHECK(std::abs(dot_v) / (std::sqrt(norm_v) * scale_e) <= 1e-9);
    }
}

TEST_CASE("fit does not depend on row order")
{
    auto rows = three_node_phi_rows();
    const auto fit = fit_entropy_model(rows);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10; ++k) {
        std::shuffle(rows.begin(), rows.end(), rng);
        const auto again = fit_entropy_model(rows);
        CHECK(again.x_high == doctest::Approx(fit.x_high).epsilon(1e-13));
        CHECK(again.x_low == doctest::Approx(fit.x_low).epsilon(1e-13));
    }
}

TEST_CASE("rank-deficient designs are rejected with the column named")
{
    std::vector<EntropyDesignRow> one{row(1, 2, 1.0)};
    CHECK_THROWS_AS(fit_entropy_model(one), std::domain_error);

    std::vector<EntropyDesignRow> no_high{row(0, 3, 1.0), row(0, 2, 0.5)};
    CHECK_THROWS_WITH_AS(fit_entropy_model(no_high), doctest::Contains("n_high"), std::domain_error);

    std::vector<EntropyDesignRow> no_low{row(3, 0, 1.0), row(2, 0, 0.5)};
    CHECK_THROWS_WITH_AS(fit_entropy_model(no_low), doctest::Contains("n_low"), std::domain_error);

    std::vector<EntropyDesignRow> collinear{row(1, 1, 1.0), row(2, 2, 0.5), row(3, 3, 0.1)};
    CHECK_THROWS_WITH_AS(fit_entropy_model(collinear), doctest::Contains("collinear"), std::domain_error);
}
