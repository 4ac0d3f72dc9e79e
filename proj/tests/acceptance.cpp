// One line per acceptance criterion; exit status is the number of failures.

#include "ergm/coefficients.hpp"
#include "ergm/ensemble.hpp"
#include "ergm/expansion.hpp"
#include "ergm/kotecky_preiss.hpp"
#include "ergm/polymer.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace ergm;

namespace {

int failures = 0;

void report(int id, const std::string& title, const std::function<bool(std::ostringstream&)>& body)
{
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s [%.3fs] %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs, detail.str().c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

const std::vector<Motif>& motif_set()
{
    static const std::vector<Motif> hs{Motif::edge(), Motif::two_star(), Motif::triangle()};
    return hs;
}

}  // namespace

int main()
{
    report(1, "figure-1 two-star example", [](std::ostringstream& d) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto g = make_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {1, 3}});
        const auto h = Motif::two_star();
        bool ok = hom_count(h, g) == 18 && hom_density(h, g) == Rational(18, 64);
        const EdgeSubset ab = EdgeSubset::single(EdgeSite(0, 1).index(4));
        const EdgeSubset ab_bc{ab.bits | EdgeSubset::single(EdgeSite(1, 2).index(4)).bits};
        ok = ok && exact_density(h, ab, 4) == Rational(2, 64) && exact_density(h, ab_bc, 4) == Rational(2, 64);
        // All other subsets of E_4 vanish: the 6 edges and 12 adjacent pairs are the whole support.
        int nonzero = 0;
        for (std::uint64_t x = 1; x < 64; ++x) {
            const auto dx = exact_density(h, EdgeSubset{x}, 4);
            if (dx == 0) continue;
            ++nonzero;
            const auto s = EdgeSubset{x}.sites(4);
            const bool edge_or_adjacent =
                s.size() == 1 || (s.size() == 2 && (s[0].i == s[1].i || s[0].i == s[1].j || s[0].j == s[1].i || s[0].j == s[1].j));
            ok = ok && edge_or_adjacent && dx == Rational(2, 64);
        }
        ok = ok && nonzero == 18;
        const double secs = seconds_since(t0);
        d << "hom=" << hom_count(h, g) << " t=" << hom_count(h, g) << "/64 (" << to_string(hom_density(h, g)) << ")" << " nonzero_X=" << nonzero;
        return ok && secs < 1.0;
    });

    report(2, "representation identity, n in {3,4,5}", [](std::ostringstream& d) {
        const auto t0 = std::chrono::steady_clock::now();
        std::size_t checks = 0;
        std::size_t failed = 0;
        for (int n = 3; n <= 5; ++n)
            for (const auto& h : motif_set()) {
                const auto supports = support_families(h, n);
                for_each_graph(n, [&](const SimpleGraph& g) {
                    ++checks;
                    if (!representation_check(h, g, supports).holds()) ++failed;
                });
            }
        const double secs = seconds_since(t0);
        d << checks << " graph/motif pairs, " << failed << " failures";
        return failed == 0 && secs < 60.0;
    });

    report(3, "pinned bound t_e <= m(m-1)/n^2", [](std::ostringstream& d) {
        std::size_t checks = 0;
        std::size_t violations = 0;
        for (int n = 3; n <= 5; ++n)
            for (const auto& h : motif_set()) {
                const auto supports = support_families(h, n);
                const auto bound = pinned_density_bound(h, n);
                for_each_graph(n, [&](const SimpleGraph& g) {
                    for (int s = 0; s < edge_count(n); ++s) {
                        ++checks;
                        if (pinned_density(supports, g, EdgeSite::at(s, n)) > bound) ++violations;
                    }
                });
            }
        d << checks << " pins, " << violations << " violations";
        return violations == 0;
    });

    report(4, "free-energy bookkeeping", [](std::ostringstream& d) {
        double worst_identity = 0.0;
        double worst_closed = 0.0;
        int points = 0;
        const Model base({Motif::edge(), Motif::two_star(), Motif::triangle()}, {1.0, -0.6, 0.8});
        for (int i = 0; i < 60; ++i) {
            const double s = -1.5 + 3.0 * i / 59.0;
            ++points;
            for (int n = 3; n <= 5; ++n) {
                const Model model = base.scaled(s);
                const auto k = build_interaction(model, n);
                const double lhs = psi_n(model, n);
                const double rhs = (edge_count(n) * std::log(2.0) + partition_normalized(k)) / (n * n);
                worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
                const double closed = edge_count(n) * std::log1p(std::exp(2 * s)) / (n * n);
                worst_closed = std::max(worst_closed, std::abs(psi_n(Model({Motif::edge()}, {s}), n) - closed));
            }
        }
        d << points << " beta points, max identity err " << worst_identity << ", max edge closed-form err " << worst_closed;
        return points >= 50 && worst_identity <= 1e-12 && worst_closed <= 1e-12;
    });

    report(5, "d psi_n / d beta_i = E[t(H_i, G)], n=4", [](std::ostringstream& d) {
        const std::vector<Model> models{Model({Motif::edge(), Motif::two_star()}, {0.3, -0.2}),
                                        Model({Motif::edge(), Motif::triangle()}, {-0.4, 0.7})};
        double worst = 0.0;
        for (const auto& model : models)
            for (std::size_t i = 0; i < model.size(); ++i) {
                const auto c = derivative_check(model, 4, i, 1e-4);
                worst = std::max(worst, std::abs(c.finite_difference - c.expectation));
            }
        d << "max |fd - E| = " << worst;
        return worst <= 1e-6;
    });

    report(6, "cluster representation: sum over disjoint polymer collections = W", [](std::ostringstream& d) {
        const auto t0 = std::chrono::steady_clock::now();
        const double M = optimal_M(2);
        const double b2 = region_bound(2, 3, M);
        const double b3 = region_bound(3, 3, optimal_M(3));
        const std::vector<Model> models{Model({Motif::edge()}, {0.001}), Model({Motif::two_star()}, {0.9 * b2}),
                                        Model({Motif::edge(), Motif::triangle()}, {0.45 * b3, 0.45 * b3})};
        double worst = 0.0;
        double worst_log = 0.0;
        std::size_t polymers = 0;
        for (const auto& model : models)
            for (int n : {3, 4}) {
                const auto k = build_interaction(model, n);
                const auto ps = build_polymers(k, kUnlimitedLinks);
                polymers += ps.polymers.size();
                const double w = cluster_partition_sum(ps);
                const double log_w = partition_normalized(k);
                worst = std::max(worst, std::abs(w - std::exp(log_w)));
                worst_log = std::max(worst_log, std::abs(std::log(w) - log_w));
            }
        const double secs = seconds_since(t0);
        d << polymers << " polymers over 6 cases, max |W_cluster - W_enum| = " << worst << ", max log gap = " << worst_log;
        return worst <= 1e-9 && secs < 300.0;
    });

    report(7, "expansion gap within |E_n| tail bound and strictly decreasing", [](std::ostringstream& d) {
        const double M = optimal_M(2);
        const Model model({Motif::two_star()}, {region_bound(2, 3, M) / 2});
        ExpansionOptions opts;
        opts.order = 4;
        opts.max_links = kUnlimitedLinks;
        opts.head_links = 4;
        opts.M = M;
        const auto rep = expand(model, 4, opts);
        bool ok = rep.kp.pass && rep.polymers_complete && rep.orders.size() == 4;
        double previous = INFINITY;
        for (const auto& row : rep.orders) {
            const double gap = std::abs(row.gap_to_exact.value());
            d << "n0=" << row.order << " gap=" << gap << " bound=" << row.tail_bound << "; ";
            ok = ok && gap <= row.tail_bound && gap < previous;
            previous = gap;
        }
        d << "kp " << (rep.kp.pass ? "pass" : "fail");
        return ok;
    });

    report(8, "coefficient identities", [](std::ostringstream& d) {
        bool ok = true;
        for (int p = 2; p <= 4; ++p) {
            const double M = optimal_M(p);
            const double norm = norm_threshold(p, M);
            const auto table = abar_recursion(p, norm, M, 30);
            for (int n = 1; n <= 30; ++n) {
                ok = ok && table.gamma[static_cast<std::size_t>(n - 1)] == oracle::lagrange_gamma(p, n);
                ok = ok && table.abar(n) <= table.abar_bound(n) * (1 + 1e-12);
            }
            ok = ok && generating_function_check(table);
            const double tail = radius_and_tail(p, norm, M).tail_bound(0);
            ok = ok && tail <= std::log(M) * (1 + 1e-12);
            d << "p=" << p << " tail/logM=" << tail / std::log(M) << "; ";
        }
        return ok;
    });

    report(9, "optimal M maximizes the region (golden-section over (1,20])", [](std::ostringstream& d) {
        const double phi = (std::sqrt(5.0) - 1) / 2;
        double worst = 0.0;
        for (int p = 2; p <= 4; ++p) {
            auto f = [&](double M) { return region_bound(p, 3, M); };
            double a = 1.0 + 1e-12;
            double b = 20.0;
            double c = b - phi * (b - a);
            double e = a + phi * (b - a);
            double fc = f(c);
            double fe = f(e);
            while (b - a > 1e-10) {
                if (fc > fe) {
                    b = e;
                    e = c;
                    fe = fc;
                    c = b - phi * (b - a);
                    fc = f(c);
                } else {
                    a = c;
                    c = e;
                    fc = fe;
                    e = a + phi * (b - a);
                    fe = f(e);
                }
            }
            worst = std::max(worst, std::abs((a + b) / 2 - optimal_M(p)));
        }
        d << "max |argmax - optimal_M| = " << worst;
        return worst <= 1e-6;
    });

    report(10, "negative control at 4x budget", [](std::ostringstream& d) {
        const double M = optimal_M(2);
        const double budget = region_bound(2, 3, M);
        const Model model({Motif::two_star()}, {4 * budget});
        const auto k = build_interaction(model, 4);
        const auto enumerated = kp_certify(k, M, 4);
        const auto tail_only = kp_certify(k, M, 0);
        const auto worst_case = radius_and_tail(2, 3 * 2 * model.beta_l1(), M);
        d << "head-4 certificate " << (enumerated.pass ? "pass" : "fail") << " (max " << enumerated.max_site_sum << " vs logM "
          << enumerated.log_m << "); tail-only certificate " << (tail_only.pass ? "pass" : "fail") << " (max " << tail_only.max_site_sum
          << "); region-norm tail ratio " << worst_case.ratio << (worst_case.convergent() ? " convergent" : " divergent");
        return !tail_only.pass && !worst_case.convergent();
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
