#pragma once

// Connected hypergraphs over the links (nonzero-K subsets) of an interaction.
// Two links are connected when they share a site; a set of links is a
// connected hypergraph when its overlap graph is connected.

#include "ergm/lattice_gas.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace ergm {

inline constexpr std::size_t kUnlimitedLinks = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultMaxLinks = 4;
inline constexpr std::size_t kDefaultHypergraphLimit = 50'000'000;

struct Hypergraph {
    std::vector<EdgeSubset> links;  // canonical order
    EdgeSubset support;             // union of links
};

struct HypergraphWalk {
    std::size_t visited = 0;  // hypergraphs passed to the visitor
    bool truncated = false;   // some connected hypergraph has more than max_links links
};

using HypergraphVisitor = std::function<void(std::span<const int> link_indices, EdgeSubset support)>;

/// Every connected set of at most `max_links` distinct links, each exactly
/// once, in a fixed depth-first order (rooted at its least link index). With
/// a root site, only hypergraphs whose support contains it are visited.
/// Throws GuardExceeded once more than `limit` candidate sets are generated.
HypergraphWalk for_each_connected_hypergraph(std::span<const EdgeSubset> links, std::size_t max_links,
                                             std::optional<int> root_site, const HypergraphVisitor& visit,
                                             std::size_t limit = kDefaultHypergraphLimit);

std::vector<Hypergraph> enumerate_connected_hypergraphs(const Interaction& k, std::size_t max_links,
                                                        std::optional<EdgeSite> root = std::nullopt,
                                                        std::size_t limit = kDefaultHypergraphLimit);

/// Links of the interaction in canonical order.
std::vector<EdgeSubset> interaction_links(const Interaction& k);

/// Connectivity of an arbitrary link collection (oracle-friendly helper).
bool is_connected(std::span<const EdgeSubset> links);

}  // namespace ergm
