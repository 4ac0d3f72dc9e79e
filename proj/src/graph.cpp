#include "ergm/graph.hpp"

#include "ergm/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ergm {

namespace {

void check_vertex_count(int n)
{
    if (n < 1 || n > kMaxVertices) {
        std::ostringstream os;
        os << "vertex count " << n << " outside supported range [1, " << kMaxVertices << "]";
        throw InvalidArgument(os.str());
    }
}

std::uint64_t checked_pow(int base, int exp)
{
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > UINT64_MAX / static_cast<std::uint64_t>(base))
            throw InvalidArgument("n^m overflows 64-bit homomorphism counter");
        out *= static_cast<std::uint64_t>(base);
    }
    return out;
}

}  // namespace

EdgeSite::EdgeSite(int a, int b)
{
    if (a < 0 || b < 0) throw InvalidArgument("negative vertex index");
    if (a == b) {
        std::ostringstream os;
        os << "self-loop at vertex " << a;
        throw InvalidArgument(os.str());
    }
    i = std::min(a, b);
    j = std::max(a, b);
}

int EdgeSite::index(int n) const
{
    if (j >= n) {
        std::ostringstream os;
        os << "edge {" << i << "," << j << "} out of range for n=" << n;
        throw InvalidArgument(os.str());
    }
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

EdgeSite EdgeSite::at(int index, int n)
{
    if (index < 0 || index >= edge_count(n)) throw InvalidArgument("edge index out of range");
    int i = 0;
    int row = n - 1;
    while (index >= row) {
        index -= row;
        ++i;
        --row;
    }
    return EdgeSite(i, i + 1 + index);
}

std::vector<EdgeSite> EdgeSubset::sites(int n) const
{
    std::vector<EdgeSite> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(EdgeSite::at(__builtin_ctzll(b), n));
    return out;
}

EdgeSubset EdgeSubset::of(std::span<const EdgeSite> sites, int n)
{
    EdgeSubset out;
    for (const auto& e : sites) out.bits |= std::uint64_t{1} << e.index(n);
    return out;
}

EdgeSubset EdgeSubset::full(int n)
{
    const int c = edge_count(n);
    return {c == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1};
}

// ---------------------------------------------------------------- SimpleGraph

SimpleGraph::SimpleGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n), 0)
{
    check_vertex_count(n);
}

SimpleGraph SimpleGraph::from_mask(int n, EdgeSubset edges)
{
    SimpleGraph g(n);
    if (!edges.subset_of(EdgeSubset::full(n))) throw InvalidArgument("edge mask exceeds E_n");
    for (std::uint64_t b = edges.bits; b != 0; b &= b - 1) g.add_edge(EdgeSite::at(__builtin_ctzll(b), n));
    return g;
}

SimpleGraph SimpleGraph::complete(int n) { return from_mask(n, EdgeSubset::full(n)); }

bool SimpleGraph::has_edge(int i, int j) const
{
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) return false;
    return (adjacency_[static_cast<std::size_t>(i)] >> j) & 1u;
}

void SimpleGraph::add_edge(EdgeSite e)
{
    edges_.bits |= std::uint64_t{1} << e.index(n_);
    adjacency_[static_cast<std::size_t>(e.i)] |= 1u << e.j;
    adjacency_[static_cast<std::size_t>(e.j)] |= 1u << e.i;
}

SimpleGraph make_graph(int n, std::span<const std::pair<int, int>> edge_list, bool strict)
{
    SimpleGraph g(n);
    for (const auto& [a, b] : edge_list) {
        if (a >= n || b >= n || a < 0 || b < 0) {
            std::ostringstream os;
            os << "vertex out of range in pair {" << a << "," << b << "} for n=" << n;
            throw InvalidArgument(os.str());
        }
        const EdgeSite e(a, b);
        if (strict && g.has_edge(e.i, e.j)) {
            std::ostringstream os;
            os << "duplicate edge {" << e.i << "," << e.j << "}";
            throw InvalidArgument(os.str());
        }
        g.add_edge(e);
    }
    return g;
}

// ---------------------------------------------------------------------- Motif

Motif::Motif(std::string name, int m, std::vector<std::pair<int, int>> edges) : name_(std::move(name)), m_(m)
{
    if (m < 2 || m > 32) throw InvalidArgument("motif vertex count must lie in [2, 32]");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= m || b >= m) throw InvalidArgument("motif edge endpoint out of range");
        if (a == b) throw InvalidArgument("motif edge is a self-loop");
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) throw InvalidArgument("motif has a duplicate edge");
    }
    if (seen.empty()) throw InvalidArgument("motif must have at least one edge");
    edges_.assign(seen.begin(), seen.end());

    adjacency_.assign(static_cast<std::size_t>(m), 0);
    for (auto [a, b] : edges_) {
        adjacency_[static_cast<std::size_t>(a)] |= 1u << b;
        adjacency_[static_cast<std::size_t>(b)] |= 1u << a;
    }

    // BFS per component, so later vertices usually have a mapped neighbour.
    std::vector<bool> placed(static_cast<std::size_t>(m), false);
    for (int s = 0; s < m; ++s) {
        if (placed[static_cast<std::size_t>(s)] || adjacency_[static_cast<std::size_t>(s)] == 0) continue;
        std::vector<int> queue{s};
        placed[static_cast<std::size_t>(s)] = true;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const int v = queue[q];
            order_.push_back(v);
            for (std::uint32_t nb = adjacency_[static_cast<std::size_t>(v)]; nb != 0; nb &= nb - 1) {
                const int u = __builtin_ctz(nb);
                if (!placed[static_cast<std::size_t>(u)]) {
                    placed[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
            }
        }
    }
}

Motif Motif::edge() { return Motif("edge", 2, {{0, 1}}); }
Motif Motif::two_star() { return Motif("two-star", 3, {{0, 1}, {0, 2}}); }
Motif Motif::triangle() { return Motif("triangle", 3, {{0, 1}, {0, 2}, {1, 2}}); }

Motif Motif::named(const std::string& name)
{
    if (name == "edge" || name == "K2") return edge();
    if (name == "two-star") return two_star();
    if (name == "triangle" || name == "K3") return triangle();
    throw InvalidArgument("unknown built-in motif '" + name + "'");
}

int Motif::isolated_count() const
{
    return static_cast<int>(std::count(adjacency_.begin(), adjacency_.end(), 0u));
}

// ---------------------------------------------------------------------- Model

Model::Model(std::vector<Motif> ms, std::vector<double> bs) : motifs(std::move(ms)), betas(std::move(bs))
{
    if (motifs.size() != betas.size()) {
        std::ostringstream os;
        os << "parameter length mismatch: " << motifs.size() << " motifs, " << betas.size() << " betas";
        throw InvalidArgument(os.str());
    }
    if (motifs.empty()) throw InvalidArgument("model needs at least one motif");
}

int Model::max_vertices() const
{
    int out = 0;
    for (const auto& h : motifs) out = std::max(out, h.m());
    return out;
}

int Model::max_edges() const
{
    int out = 0;
    for (const auto& h : motifs) out = std::max(out, h.p());
    return out;
}

double Model::beta_l1() const
{
    double s = 0.0;
    for (double b : betas) s += std::abs(b);
    return s;
}

bool Model::edge_first() const { return !motifs.empty() && motifs.front().m() == 2 && motifs.front().p() == 1; }

Model Model::scaled(double t) const
{
    Model out = *this;
    for (double& b : out.betas) b *= t;
    return out;
}

void EnumerationGuard::check(int n, const char* what) const
{
    check_vertex_count(n);
    if (n > limit && !force) {
        std::ostringstream os;
        os << what << ": n=" << n << " exceeds enumeration guard " << limit << " (use --force to override)";
        throw GuardExceeded(os.str());
    }
}

// ---------------------------------------------------------------- enumeration

void for_each_graph(int n, const std::function<void(const SimpleGraph&)>& visit, EnumerationGuard guard)
{
    guard.check(n, "enumerate_graphs");
    const std::uint64_t total = std::uint64_t{1} << edge_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(SimpleGraph::from_mask(n, {mask}));
}

std::vector<SimpleGraph> enumerate_graphs(int n, EnumerationGuard guard)
{
    std::vector<SimpleGraph> out;
    for_each_graph(n, [&](const SimpleGraph& g) { out.push_back(g); }, guard);
    return out;
}

// ------------------------------------------------------------- homomorphisms

namespace {

struct HomSearch {
    const Motif& motif;
    const SimpleGraph& graph;
    std::uint32_t active;  // vertices of G with degree >= 1
    std::vector<int> image;
    std::uint64_t count = 0;

    void run(std::size_t k)
    {
        const auto& order = motif.search_order();
        const int v = order[k];
        std::uint32_t candidates = active;
        for (std::size_t q = 0; q < k; ++q) {
            const int u = order[q];
            if ((motif.neighbors(v) >> u) & 1u) candidates &= graph.neighbors(image[static_cast<std::size_t>(u)]);
        }
        if (k + 1 == order.size()) {
            count += static_cast<std::uint64_t>(__builtin_popcount(candidates));
            return;
        }
        for (std::uint32_t c = candidates; c != 0; c &= c - 1) {
            image[static_cast<std::size_t>(v)] = __builtin_ctz(c);
            run(k + 1);
        }
    }
};

}  // namespace

std::uint64_t hom_count(const Motif& motif, const SimpleGraph& graph)
{
    const int n = graph.n();
    const std::uint64_t free_factor = checked_pow(n, motif.isolated_count());
    checked_pow(n, motif.m());

    std::uint32_t active = 0;
    for (int v = 0; v < n; ++v)
        if (graph.degree(v) > 0) active |= 1u << v;
    if (active == 0) return 0;

    HomSearch search{motif, graph, active, std::vector<int>(static_cast<std::size_t>(motif.m()), -1)};
    search.run(0);
    return search.count * free_factor;
}

Rational hom_density(const Motif& motif, const SimpleGraph& graph)
{
    return make_rational(BigInt(hom_count(motif, graph)), ipow(static_cast<std::uint64_t>(graph.n()), static_cast<unsigned>(motif.m())));
}

double weighted_density(const Model& model, const SimpleGraph& graph)
{
    double total = 0.0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        if (model.betas[i] == 0.0) continue;
        total += model.betas[i] * to_double(hom_density(model.motifs[i], graph));
    }
    return total;
}

}  // namespace ergm
