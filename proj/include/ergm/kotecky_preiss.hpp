#pragma once

// Reduced Kotecky-Preiss condition with B_N = M^{|N|}: for every site e,
//   sum_{N ni e} v_N M^{|N|} <= log M.
// The per-site sum is split by link count: hypergraphs with at most
// head_links links are enumerated exactly, the rest are bounded by the
// abar_n majorant (valid while ||K|| <= 1/2, where e^x - 1 <= 2x).

#include "ergm/hypergraph.hpp"

#include <map>
#include <string>

namespace ergm {

inline constexpr double kMeanValueNormCap = 0.5;

struct KPCertificate {
    double M = 1.0;
    double log_m = 0.0;
    double norm = 0.0;
    std::size_t head_links = 0;
    bool head_exhaustive = false;  // no connected hypergraph exceeds head_links
    double tail = 0.0;             // analytic bound added to every site
    std::map<EdgeSite, double> per_site_sums;
    double max_site_sum = 0.0;
    bool pass = false;
    std::string diagnostic;
};

KPCertificate kp_certify(const Interaction& k, double M, std::size_t head_links = kDefaultMaxLinks,
                         std::size_t limit = kDefaultHypergraphLimit);

/// log M (p-1)^p / (2 (Mp)^p (1 + (p-1) log M)): the largest admissible
/// m(m-1) sum|beta_i|.
double norm_threshold(int p, double M);

/// Largest admissible sum |beta_i|: min(norm_threshold, 1/2) / (m(m-1)).
double region_bound(int p, int m, double M);

/// exp((-p + sqrt(5p^2 - 4p)) / (2p(p-1))), the M maximizing region_bound.
double optimal_M(int p);

}  // namespace ergm
