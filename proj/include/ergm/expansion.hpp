#pragma once

// End-to-end high-temperature expansion of log W for one model: truncated
// cluster sums per order, their gap to the exact enumeration when n allows,
// the Kotecky-Preiss certificate and the admissible parameter region.

#include "ergm/ensemble.hpp"
#include "ergm/kotecky_preiss.hpp"
#include "ergm/polymer.hpp"

#include <optional>
#include <vector>

namespace ergm {

struct OrderRow {
    int order = 0;
    double partial_sum = 0.0;
    std::optional<double> gap_to_exact;  // partial_sum - log W
    double tail_bound = 0.0;             // |E_n| * sum_{j > order} abar_j bound
};

struct RegionInfo {
    int p = 0;
    int m = 0;
    double M = 1.0;
    std::optional<double> beta_budget;  // absent for p = 1
    double beta_l1 = 0.0;

    bool inside() const { return beta_budget && beta_l1 <= *beta_budget; }
};

struct ExpansionOptions {
    int order = 4;
    std::size_t max_links = kDefaultMaxLinks;
    std::size_t head_links = kDefaultMaxLinks;
    std::optional<double> M;  // defaults to optimal_M(max(p, 2))
    EnumerationGuard guard = ensemble_guard();
};

struct ExpansionReport {
    int n = 0;
    double norm = 0.0;
    bool polymers_complete = false;
    std::size_t polymer_count = 0;
    std::optional<double> exact_log_w;
    std::vector<OrderRow> orders;
    KPCertificate kp;
    RegionInfo region;
};

double default_M(int p);

RegionInfo region_info(const Model& model, std::optional<double> M = std::nullopt);

ExpansionReport expand(const Model& model, int n, const ExpansionOptions& options = {});

}  // namespace ergm
