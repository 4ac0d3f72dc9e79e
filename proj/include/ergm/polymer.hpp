#pragma once

// Polymer (cluster) representation of the normalized partition function
//   W = sum_Delta prod_{N in Delta} w_N
// over collections Delta of pairwise disjoint supports, and its logarithm
//   log W = sum_n 1/n! sum_{N_1..N_n} C(N_1..N_n) w_{N_1} ... w_{N_n}.

#include "ergm/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace ergm {

struct Polymer {
    EdgeSubset support;
    double activity = 0.0;        // w_N
    double activity_bound = 0.0;  // v_N >= |w_N|
};

struct PolymerSet {
    int n = 0;
    std::size_t max_links = kDefaultMaxLinks;
    bool complete = false;  // no connected hypergraph was cut off by max_links
    std::vector<Polymer> polymers;  // canonical support order
};

/// One pass over the connected hypergraphs with <= max_links links,
/// accumulating every hypergraph into the polymer of its support.
///
/// In the normalized spin sum over sigma|N, a factor exp(K(X) sigma_X) - 1
/// vanishes unless X is fully occupied; since the links cover N only
/// sigma = 1 on N survives, so
///   w_N = 2^{-|N|} sum_{union Gamma_c = N} prod_X (exp(K(X)) - 1)
///   v_N =          sum_{union Gamma_c = N} prod_X (exp(|K(X)|) - 1).
PolymerSet build_polymers(const Interaction& k, std::size_t max_links = kDefaultMaxLinks,
                          std::size_t limit = kDefaultHypergraphLimit);

double polymer_activity(const Interaction& k, EdgeSubset support, std::size_t max_links = kDefaultMaxLinks);
double activity_bound(const Interaction& k, EdgeSubset support, std::size_t max_links = kDefaultMaxLinks);

/// sum over all collections of pairwise disjoint polymers of prod w_N.
/// Requires C(n,2) <= 24.
double cluster_partition_sum(const PolymerSet& polymers);

inline constexpr int kMaxUrsellSize = 8;

/// Sum over connected spanning subgraphs R of the graph on k vertices given
/// by `adjacency` (bit j of row i) of (-1)^{|E(R)|}.
std::int64_t connected_graph_sum(int k, std::span<const std::uint32_t> adjacency);

/// C(N_1..N_n): connected graphs on {1..n} whose every edge joins
/// overlapping supports, signed by (-1)^{#edges}. Memoized on the overlap
/// graph; safe to call concurrently.
std::int64_t ursell_coefficient(std::span<const EdgeSubset> supports);

inline constexpr std::size_t kDefaultClusterLimit = 20'000'000;

/// Cumulative sums of the cluster expansion of log W, entry i holding all
/// clusters of 1..i+1 polymers. Ordered tuples are collapsed to multisets:
/// the n!/prod(mult!) orderings cancel the 1/n! prefactor.
std::vector<double> truncated_log_partition(const PolymerSet& polymers, int order, std::size_t limit = kDefaultClusterLimit);
std::vector<double> truncated_log_partition(const Interaction& k, int order, std::size_t max_links = kDefaultMaxLinks);

/// For each polymer N: sum_{n <= order} 1/n! sum_{tuples containing N} |C| |w_1|...|w_n|,
/// the pinned cluster sum bounded by the Kotecky-Preiss condition.
std::vector<double> pinned_cluster_sums(const PolymerSet& polymers, int order, std::size_t limit = kDefaultClusterLimit);

}  // namespace ergm
