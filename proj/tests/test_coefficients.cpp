#include "ergm/coefficients.hpp"
#include "ergm/error.hpp"
#include "ergm/expansion.hpp"
#include "ergm/kotecky_preiss.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace ergm;
using Catch::Approx;

TEST_CASE("gamma recursion equals the Lagrange-inversion formula", "[coefficients][oracle]")
{
    for (int p = 1; p <= 5; ++p) {
        const auto table = abar_recursion(p, 0.01, 1.5, 30);
        REQUIRE(table.n_max() == 30);
        for (int n = 1; n <= 30; ++n) {
            INFO("p=" << p << " n=" << n);
            REQUIRE(table.gamma[static_cast<std::size_t>(n - 1)] == oracle::lagrange_gamma(p, n));
        }
    }
    CHECK(abar_recursion(2, 0.1, 2.0, 3).gamma[1] == 2);
}

TEST_CASE("abar scaling", "[coefficients]")
{
    const auto table = abar_recursion(2, 0.01, 1.4, 10);
    CHECK(table.scale() == Approx(2 * 0.01 * 1.4 * 1.4));
    CHECK(table.abar(1) == Approx(table.scale()));
    CHECK(table.abar(3) == Approx(5 * std::pow(table.scale(), 3)));
    CHECK_THROWS_AS(table.abar(11), InvalidArgument);
    CHECK_THROWS_AS(abar_recursion(2, 0.01, 1.0, 5), InvalidArgument);
    CHECK_THROWS_AS(abar_recursion(2, -0.01, 1.5, 5), InvalidArgument);
    CHECK_THROWS_AS(abar_recursion(2, 0.01, 1.5, 0), InvalidArgument);
}

TEST_CASE("generating function identity", "[coefficients]")
{
    CHECK(generating_function_check(2, 0.01, 1.5, 1));
    CHECK(generating_function_check(2, 0.01, 1.5, 10));
    for (int p = 2; p <= 4; ++p) CHECK(generating_function_check(p, 0.003, optimal_M(p), 30));
    auto corrupted = abar_recursion(2, 0.01, 1.5, 10);
    corrupted.gamma[1] += Rational(1, 7);
    CHECK_FALSE(generating_function_check(corrupted));
}

TEST_CASE("coefficient bound holds in-region", "[coefficients]")
{
    for (int p = 2; p <= 4; ++p) {
        const double M = optimal_M(p);
        const double norm = norm_threshold(p, M);
        const auto table = abar_recursion(p, norm, M, 30);
        for (int n = 1; n <= 30; ++n) CHECK(table.abar(n) <= table.abar_bound(n) * (1 + 1e-12));
    }
}

TEST_CASE("radius and tail", "[coefficients]")
{
    const double M = std::exp(0.366);
    const auto t = radius_and_tail(2, 0.01, M);
    const double r = 2 * 0.01 * std::pow(M * 2, 2);
    CHECK(t.ratio == Approx(r));
    CHECK(t.radius == Approx(1 / r));
    CHECK(t.convergent());
    for (int n0 = 0; n0 < 10; ++n0) CHECK(t.tail_bound(n0 + 1) / t.tail_bound(n0) == Approx(r));
    CHECK(t.tail_bound(0) == Approx(r / (1 - r)));

    const auto zero = radius_and_tail(3, 0.0, 1.5);
    CHECK(std::isinf(zero.radius));
    CHECK(zero.tail_bound(0) == 0.0);

    const auto divergent = radius_and_tail(2, 1.0, 2.0);
    CHECK_FALSE(divergent.convergent());
    CHECK(std::isinf(divergent.tail_bound(3)));
    CHECK_THROWS_AS(radius_and_tail(1, 0.1, 1.5), InvalidArgument);
}

TEST_CASE("full tail at the norm threshold reaches log M", "[coefficients]")
{
    for (int p = 2; p <= 4; ++p)
        for (double M : {1.2, optimal_M(p), 2.0}) {
            const auto t = radius_and_tail(p, norm_threshold(p, M), M);
            CHECK(t.tail_bound(0) <= std::log(M) * (1 + 1e-12));
            CHECK(t.tail_bound(0) == Approx(std::log(M)).epsilon(1e-12));
        }
}

TEST_CASE("region formulas", "[region]")
{
    CHECK(std::log(optimal_M(2)) == Approx((std::sqrt(3.0) - 1) / 2).epsilon(1e-15));
    CHECK(std::log(optimal_M(3)) == Approx((-3 + std::sqrt(33.0)) / 12).epsilon(1e-15));
    for (int p = 2; p <= 8; ++p) CHECK(optimal_M(p) > 1.0);
    CHECK(region_bound(2, 3, optimal_M(2)) == Approx(0.0026846).epsilon(1e-4));
    CHECK(region_bound(2, 3, 1.0 + 1e-9) < 1e-9);
    CHECK(region_bound(2, 3, 1e6) < 1e-9);
    CHECK_THROWS_AS(region_bound(1, 2, 1.5), InvalidArgument);
    CHECK_THROWS_AS(optimal_M(1), InvalidArgument);
    CHECK_THROWS_AS(norm_threshold(2, 1.0), InvalidArgument);
}

TEST_CASE("region bound is capped by the mean-value condition", "[region]")
{
    // Large-norm thresholds never occur for p >= 2, so check the cap arithmetic directly.
    for (int p = 2; p <= 4; ++p)
        for (double M : {1.1, 1.5, 3.0}) {
            const double threshold = norm_threshold(p, M);
            CHECK(region_bound(p, 4, M) == Approx(std::min(threshold, 0.5) / 12));
        }
}

TEST_CASE("optimal M maximizes the region by golden-section search", "[region]")
{
    const double phi = (std::sqrt(5.0) - 1) / 2;
    for (int p = 2; p <= 4; ++p) {
        double a = 1.0 + 1e-12;
        double b = 20.0;
        auto f = [&](double M) { return region_bound(p, 3, M); };
        double c = b - phi * (b - a);
        double d = a + phi * (b - a);
        while (b - a > 1e-10) {
            if (f(c) > f(d))
                b = d;
            else
                a = c;
            c = b - phi * (b - a);
            d = a + phi * (b - a);
        }
        CHECK(std::abs((a + b) / 2 - optimal_M(p)) <= 1e-6);
    }
}

TEST_CASE("kp certificate", "[kp]")
{
    const double M = optimal_M(2);
    const auto zero = kp_certify(Interaction(4, 2), M);
    CHECK(zero.pass);
    CHECK(zero.max_site_sum == 0.0);

    const double budget = region_bound(2, 3, M);
    const auto in = kp_certify(build_interaction(Model({Motif::two_star()}, {budget / 2}), 4), M);
    CHECK(in.pass);
    CHECK(in.per_site_sums.size() == 6);
    CHECK(in.max_site_sum <= in.log_m);

    const auto divergent = kp_certify(build_interaction(Model({Motif::two_star()}, {0.2}), 4), M, 1);
    CHECK_FALSE(divergent.pass);
    CHECK_FALSE(divergent.diagnostic.empty());

    const auto edge_only = kp_certify(build_interaction(Model({Motif::edge()}, {0.01}), 4), M, 1);
    CHECK(edge_only.head_exhaustive);
    CHECK(edge_only.tail == 0.0);
    CHECK(edge_only.max_site_sum == Approx(std::expm1(0.02) * M));
    CHECK_THROWS_AS(kp_certify(Interaction(4, 2), 1.0), InvalidArgument);
}

TEST_CASE("kp verdict is monotone under scaling beta down", "[kp][property]")
{
    const double M = optimal_M(2);
    const double budget = region_bound(2, 3, M);
    const Model base({Motif::two_star()}, {budget});
    REQUIRE(kp_certify(build_interaction(base, 4), M, 2).pass);
    for (double t : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) CHECK(kp_certify(build_interaction(base.scaled(t), 4), M, 2).pass);

    // Per-site sums themselves shrink monotonically.
    double previous = -1.0;
    for (double t : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
        const auto cert = kp_certify(build_interaction(base.scaled(t), 4), M, 2);
        CHECK(cert.max_site_sum >= previous);
        previous = cert.max_site_sum;
    }
}

TEST_CASE("expansion report", "[expansion]")
{
    const double budget = region_bound(2, 3, optimal_M(2));
    ExpansionOptions opts;
    opts.order = 3;
    opts.max_links = kUnlimitedLinks;
    const auto report = expand(Model({Motif::two_star()}, {budget / 2}), 4, opts);
    CHECK(report.polymers_complete);
    REQUIRE(report.exact_log_w);
    REQUIRE(report.orders.size() == 3);
    CHECK(report.region.inside());
    CHECK(report.kp.pass);
    for (const auto& row : report.orders) {
        REQUIRE(row.gap_to_exact);
        CHECK(std::abs(*row.gap_to_exact) <= row.tail_bound);
    }
    const auto edge = region_info(Model({Motif::edge()}, {0.1}));
    CHECK_FALSE(edge.beta_budget);
    CHECK_FALSE(edge.inside());
    CHECK(edge.M == Approx(optimal_M(2)));

    opts.guard = EnumerationGuard{3, false};
    CHECK_FALSE(expand(Model({Motif::two_star()}, {0.001}), 4, opts).exact_log_w);
}
