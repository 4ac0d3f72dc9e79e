#pragma once

// Lattice-gas view of an ERGM: sites are the vertex pairs of K_n, occupation
// sigma_e in {0,1} is edge presence, and
//   t(H, G) = sum_{X subset of E_n} d(H, X) sigma_X
// where d(H, X) counts maps whose edge image is exactly X.

#include "ergm/graph.hpp"

#include <map>
#include <vector>

namespace ergm {

using SupportMap = std::map<EdgeSubset, Rational>;

/// d(H, X) = |ehom(H, X)| / n^m. Zero when |X| > p(H).
Rational exact_density(const Motif& motif, EdgeSubset x, int n);

/// Every X with d(H, X) != 0, found by enumerating homomorphic images of H
/// into K_n. Keys in canonical order.
SupportMap support_families(const Motif& motif, int n);

struct RepresentationCheck {
    Rational direct;   // hom_density(H, G)
    Rational lattice;  // sum_{X subset of E(G)} d(H, X)
    bool holds() const { return direct == lattice; }
};

RepresentationCheck representation_check(const Motif& motif, const SimpleGraph& graph);
// Sweeps reuse one support_families(H, n) table across graphs.
RepresentationCheck representation_check(const Motif& motif, const SimpleGraph& graph, const SupportMap& supports);

/// t_e(H, G) = sum over X with e in X subset of E(G) of d(H, X).
Rational pinned_density(const Motif& motif, const SimpleGraph& graph, EdgeSite e);
Rational pinned_density(const SupportMap& supports, const SimpleGraph& graph, EdgeSite e);
/// Same sum with X ranging over all of E_n (the pin used by the norm).
Rational pinned_density_all(const Motif& motif, int n, EdgeSite e);
/// m(m-1)/n^2
Rational pinned_density_bound(const Motif& motif, int n);

/// Sparse finite-body interaction K(X) = n^2 sum_i beta_i d(H_i, X).
class Interaction {
public:
    Interaction(int n, int p_max) : n_(n), p_max_(p_max) {}

    int n() const { return n_; }
    int p_max() const { return p_max_; }
    const std::map<EdgeSubset, double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double at(EdgeSubset x) const;

    // Zero values are dropped; |X| > p_max or empty X is rejected.
    void set(EdgeSubset x, double value);

private:
    int n_;
    int p_max_;
    std::map<EdgeSubset, double> values_;
};

/// The rounding point: n^2 d(H_i, X) is exact and converted once, then
/// weighted by beta_i.
Interaction build_interaction(const Model& model, int n, EnumerationGuard guard = {});

/// ||K|| = sup_e sum_{X ni e} |K(X)|, taken over every site of E_n.
double banach_norm(const Interaction& k);
/// Per-site pinned absolute sums, indexed by site.
std::vector<double> pinned_norms(const Interaction& k);

/// Occupation variables over E_n; bijective with SimpleGraph.
class SpinConfiguration {
public:
    SpinConfiguration(int n, EdgeSubset occupied);
    static SpinConfiguration of(const SimpleGraph& graph) { return {graph.n(), graph.edges()}; }

    int n() const { return n_; }
    EdgeSubset occupied() const { return occupied_; }
    int operator[](EdgeSite e) const { return occupied_.contains(e.index(n_)) ? 1 : 0; }
    /// sigma_X = prod_{e in X} sigma_e
    int product(EdgeSubset x) const { return x.subset_of(occupied_) ? 1 : 0; }
    SimpleGraph graph() const { return SimpleGraph::from_mask(n_, occupied_); }

private:
    int n_;
    EdgeSubset occupied_;
};

/// H(sigma) = -sum_X K(X) sigma_X
double hamiltonian(const Interaction& k, const SpinConfiguration& sigma);

}  // namespace ergm
