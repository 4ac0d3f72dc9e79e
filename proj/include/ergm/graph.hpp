#pragma once

// Labeled simple graphs on n vertices, motif graphs, exhaustive enumeration
// and homomorphism counting.
//
// Edge sites of K_n are indexed lexicographically:
//   (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)
// and subsets of E_n are 64-bit masks over that index, which caps the
// library at n <= 11 (C(11,2) = 55 sites).

#include "ergm/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ergm {

inline constexpr int kMaxVertices = 11;
inline constexpr int kDefaultEnumerationLimit = 7;

constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Unordered vertex pair {i, j}, stored with i < j.
struct EdgeSite {
    int i = 0;
    int j = 1;

    EdgeSite() = default;
    EdgeSite(int a, int b);  // canonicalizes; throws on a == b or negative

    auto operator<=>(const EdgeSite&) const = default;

    int index(int n) const;
    static EdgeSite at(int index, int n);
};

/// A subset X of E_n as a bitmask over site indices. The canonical order of
/// subsets is the numeric order of the mask.
struct EdgeSubset {
    std::uint64_t bits = 0;

    auto operator<=>(const EdgeSubset&) const = default;

    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int site_index) const { return (bits >> site_index) & 1u; }
    bool subset_of(EdgeSubset other) const { return (bits & ~other.bits) == 0; }
    bool overlaps(EdgeSubset other) const { return (bits & other.bits) != 0; }

    std::vector<EdgeSite> sites(int n) const;
    static EdgeSubset of(std::span<const EdgeSite> sites, int n);
    static EdgeSubset single(int site_index) { return {std::uint64_t{1} << site_index}; }
    static EdgeSubset full(int n);
};

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph from_mask(int n, EdgeSubset edges);
    static SimpleGraph complete(int n);

    int n() const { return n_; }
    EdgeSubset edges() const { return edges_; }
    int edge_total() const { return edges_.size(); }
    bool has_edge(int i, int j) const;
    std::uint32_t neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return __builtin_popcount(neighbors(v)); }
    std::vector<EdgeSite> edge_list() const { return edges_.sites(n_); }

    void add_edge(EdgeSite e);

    bool operator==(const SimpleGraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    EdgeSubset edges_;
    std::vector<std::uint32_t> adjacency_;
};

/// Builds a graph from an edge list. Strict mode rejects duplicate pairs
/// (after canonicalization); otherwise they collapse.
SimpleGraph make_graph(int n, std::span<const std::pair<int, int>> edge_list, bool strict = true);

/// A pre-chosen finite simple graph H with m vertices and p edges.
class Motif {
public:
    Motif(std::string name, int m, std::vector<std::pair<int, int>> edges);

    static Motif edge();
    static Motif two_star();
    static Motif triangle();
    /// "edge", "two-star" or "triangle".
    static Motif named(const std::string& name);

    const std::string& name() const { return name_; }
    int m() const { return m_; }
    int p() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::uint32_t neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int isolated_count() const;

    // Non-isolated vertices in a connectivity-friendly order: each vertex
    // after the first in its component has an earlier neighbour.
    const std::vector<int>& search_order() const { return order_; }

    bool operator==(const Motif& other) const { return m_ == other.m_ && edges_ == other.edges_; }

private:
    std::string name_;
    int m_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<int> order_;
};

/// Motif family H_1..H_k with aligned parameters beta_1..beta_k.
struct Model {
    std::vector<Motif> motifs;
    std::vector<double> betas;

    Model() = default;
    Model(std::vector<Motif> motifs, std::vector<double> betas);

    std::size_t size() const { return motifs.size(); }
    int max_vertices() const;  // m
    int max_edges() const;     // p
    double beta_l1() const;    // sum |beta_i|
    /// True when H_1 is K_2, the usual ERGM convention.
    bool edge_first() const;
    Model scaled(double t) const;
};

struct EnumerationGuard {
    int limit = kDefaultEnumerationLimit;
    bool force = false;

    void check(int n, const char* what) const;
};

/// Visits all 2^C(n,2) graphs in edge-subset bitmask order 0, 1, 2, ...
void for_each_graph(int n, const std::function<void(const SimpleGraph&)>& visit, EnumerationGuard guard = {});
std::vector<SimpleGraph> enumerate_graphs(int n, EnumerationGuard guard = {});

/// |hom(H, G)|: vertex maps V(H) -> V(G) sending every edge of H to an edge of G.
std::uint64_t hom_count(const Motif& motif, const SimpleGraph& graph);

/// t(H, G) = |hom(H, G)| / n^m.
Rational hom_density(const Motif& motif, const SimpleGraph& graph);

/// T^beta(G) = sum_i beta_i t(H_i, G). Each density is exact until its single
/// conversion to double.
double weighted_density(const Model& model, const SimpleGraph& graph);

}  // namespace ergm
