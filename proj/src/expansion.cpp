#include "ergm/expansion.hpp"

#include "ergm/coefficients.hpp"
#include "ergm/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergm {

double default_M(int p) { return optimal_M(std::max(p, 2)); }

RegionInfo region_info(const Model& model, std::optional<double> M)
{
    RegionInfo out;
    out.p = model.max_edges();
    out.m = model.max_vertices();
    out.M = M.value_or(default_M(out.p));
    out.beta_l1 = model.beta_l1();
    if (out.p >= 2) out.beta_budget = region_bound(out.p, out.m, out.M);
    return out;
}

ExpansionReport expand(const Model& model, int n, const ExpansionOptions& options)
{
    const Interaction k = build_interaction(model, n, {kDefaultEnumerationLimit, options.guard.force});
    ExpansionReport report;
    report.n = n;
    report.norm = banach_norm(k);
    report.region = region_info(model, options.M);

    const PolymerSet polymers = build_polymers(k, options.max_links);
    report.polymers_complete = polymers.complete;
    report.polymer_count = polymers.polymers.size();

    if (n <= options.guard.limit || options.guard.force) report.exact_log_w = partition_normalized(k, options.guard);

    const double inf = std::numeric_limits<double>::infinity();
    std::optional<TailModel> tail;
    if (k.p_max() >= 2 && report.norm <= kMeanValueNormCap) tail = radius_and_tail(k.p_max(), report.norm, report.region.M);

    const auto sums = truncated_log_partition(polymers, options.order);
    for (int i = 0; i < options.order; ++i) {
        OrderRow row;
        row.order = i + 1;
        row.partial_sum = sums[static_cast<std::size_t>(i)];
        if (report.exact_log_w) row.gap_to_exact = row.partial_sum - *report.exact_log_w;
        row.tail_bound = tail ? edge_count(n) * tail->tail_bound(row.order) : inf;
        report.orders.push_back(row);
    }
    report.kp = kp_certify(k, report.region.M, options.head_links);
    return report;
}

}  // namespace ergm
