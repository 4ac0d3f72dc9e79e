#include "ergm/lattice_gas.hpp"

#include "ergm/error.hpp"

#include <algorithm>
#include <cmath>

namespace ergm {

namespace {

// Maps the non-isolated vertices of H (in search order) into `targets`,
// requiring every edge of H to land on a pair accepted by `edge_ok`, and
// reports the edge image of each complete map.
template <class EdgeOk, class Visit>
void for_each_edge_image(const Motif& motif, const std::vector<int>& targets, int n, EdgeOk edge_ok, Visit visit)
{
    const auto& order = motif.search_order();
    std::vector<int> image(static_cast<std::size_t>(motif.m()), -1);

    auto rec = [&](auto&& self, std::size_t k, std::uint64_t mask) -> void {
        if (k == order.size()) {
            visit(EdgeSubset{mask});
            return;
        }
        const int v = order[k];
        for (int target : targets) {
            std::uint64_t next = mask;
            bool ok = true;
            for (std::size_t q = 0; q < k && ok; ++q) {
                const int u = order[q];
                if (!((motif.neighbors(v) >> u) & 1u)) continue;
                const int tu = image[static_cast<std::size_t>(u)];
                if (tu == target) {
                    ok = false;
                    break;
                }
                const int idx = EdgeSite(tu, target).index(n);
                if (!edge_ok(idx)) ok = false;
                next |= std::uint64_t{1} << idx;
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = target;
            self(self, k + 1, next);
        }
        image[static_cast<std::size_t>(v)] = -1;
    };
    rec(rec, 0, 0);
}

BigInt total_maps(const Motif& motif, int n) { return ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(motif.m())); }

BigInt isolated_factor(const Motif& motif, int n)
{
    return ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(motif.isolated_count()));
}

}  // namespace

Rational exact_density(const Motif& motif, EdgeSubset x, int n)
{
    if (!x.subset_of(EdgeSubset::full(n))) throw InvalidArgument("edge subset exceeds E_n");
    if (x.empty() || x.size() > motif.p()) return 0;

    std::uint32_t vmask = 0;
    for (const auto& e : x.sites(n)) vmask |= (1u << e.i) | (1u << e.j);
    std::vector<int> targets;
    for (std::uint32_t b = vmask; b != 0; b &= b - 1) targets.push_back(__builtin_ctz(b));

    std::uint64_t onto = 0;
    for_each_edge_image(
        motif, targets, n, [&](int idx) { return x.contains(idx); },
        [&](EdgeSubset img) {
            if (img == x) ++onto;
        });
    return make_rational(BigInt(onto) * isolated_factor(motif, n), total_maps(motif, n));
}

SupportMap support_families(const Motif& motif, int n)
{
    if (n < 2 || n > kMaxVertices) throw InvalidArgument("support_families: n out of range");
    std::vector<int> targets(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) targets[static_cast<std::size_t>(v)] = v;

    std::map<EdgeSubset, std::uint64_t> counts;
    for_each_edge_image(
        motif, targets, n, [](int) { return true; }, [&](EdgeSubset img) { ++counts[img]; });

    const BigInt iso = isolated_factor(motif, n);
    const BigInt den = total_maps(motif, n);
    SupportMap out;
    for (const auto& [x, c] : counts) out.emplace(x, make_rational(BigInt(c) * iso, den));
    return out;
}

RepresentationCheck representation_check(const Motif& motif, const SimpleGraph& graph, const SupportMap& supports)
{
    RepresentationCheck out{hom_density(motif, graph), 0};
    for (const auto& [x, d] : supports)
        if (x.subset_of(graph.edges())) out.lattice += d;
    return out;
}

RepresentationCheck representation_check(const Motif& motif, const SimpleGraph& graph)
{
    if (graph.n() < 2) return {hom_density(motif, graph), 0};
    return representation_check(motif, graph, support_families(motif, graph.n()));
}

Rational pinned_density(const SupportMap& supports, const SimpleGraph& graph, EdgeSite e)
{
    const int idx = e.index(graph.n());
    Rational sum = 0;
    for (const auto& [x, d] : supports)
        if (x.contains(idx) && x.subset_of(graph.edges())) sum += d;
    return sum;
}

Rational pinned_density(const Motif& motif, const SimpleGraph& graph, EdgeSite e)
{
    return pinned_density(support_families(motif, graph.n()), graph, e);
}

Rational pinned_density_all(const Motif& motif, int n, EdgeSite e)
{
    return pinned_density(support_families(motif, n), SimpleGraph::complete(n), e);
}

Rational pinned_density_bound(const Motif& motif, int n)
{
    return make_rational(BigInt(motif.m() * (motif.m() - 1)), BigInt(n * n));
}

// ---------------------------------------------------------------- Interaction

double Interaction::at(EdgeSubset x) const
{
    const auto it = values_.find(x);
    return it == values_.end() ? 0.0 : it->second;
}

void Interaction::set(EdgeSubset x, double value)
{
    if (x.empty()) throw InvalidArgument("interaction link must be nonempty");
    if (x.size() > p_max_) throw InvalidArgument("interaction link larger than p_max violates finite-body property");
    if (value == 0.0)
        values_.erase(x);
    else
        values_[x] = value;
}

Interaction build_interaction(const Model& model, int n, EnumerationGuard guard)
{
    guard.check(n, "build_interaction");
    Interaction k(n, model.max_edges());
    const Rational n2 = n * n;
    std::map<EdgeSubset, double> acc;
    for (std::size_t i = 0; i < model.size(); ++i) {
        const double beta = model.betas[i];
        if (beta == 0.0) continue;
        for (const auto& [x, d] : support_families(model.motifs[i], n)) acc[x] += beta * to_double(n2 * d);
    }
    for (const auto& [x, v] : acc) k.set(x, v);
    return k;
}

std::vector<double> pinned_norms(const Interaction& k)
{
    std::vector<double> per_site(static_cast<std::size_t>(edge_count(k.n())), 0.0);
    for (const auto& [x, v] : k.values())
        for (std::uint64_t b = x.bits; b != 0; b &= b - 1) per_site[static_cast<std::size_t>(__builtin_ctzll(b))] += std::abs(v);
    return per_site;
}

double banach_norm(const Interaction& k)
{
    const auto per_site = pinned_norms(k);
    return per_site.empty() ? 0.0 : *std::max_element(per_site.begin(), per_site.end());
}

// ---------------------------------------------------------------- spins

SpinConfiguration::SpinConfiguration(int n, EdgeSubset occupied) : n_(n), occupied_(occupied)
{
    if (n < 1 || n > kMaxVertices) throw InvalidArgument("spin configuration: n out of range");
    if (!occupied.subset_of(EdgeSubset::full(n))) throw InvalidArgument("spin configuration exceeds E_n");
}

double hamiltonian(const Interaction& k, const SpinConfiguration& sigma)
{
    if (k.n() != sigma.n()) throw InvalidArgument("hamiltonian: interaction and configuration disagree on n");
    double energy = 0.0;
    for (const auto& [x, v] : k.values())
        if (sigma.product(x)) energy -= v;
    return energy;
}

}  // namespace ergm
