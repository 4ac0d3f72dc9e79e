#include "ergm/polymer.hpp"

#include "ergm/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ergm {

namespace {

struct Accumulator {
    long double w = 0.0L;
    long double v = 0.0L;
};

void accumulate(const Interaction& k, std::span<const EdgeSubset> links, std::size_t max_links, std::size_t limit,
                std::optional<EdgeSubset> only_support, std::map<EdgeSubset, Accumulator>& out, bool& complete)
{
    std::vector<double> signed_factor;
    std::vector<double> abs_factor;
    for (const auto& x : links) {
        const double kx = k.at(x);
        signed_factor.push_back(std::expm1(kx));
        abs_factor.push_back(std::expm1(std::abs(kx)));
    }
    const auto walk = for_each_connected_hypergraph(
        links, max_links, std::nullopt,
        [&](std::span<const int> idx, EdgeSubset support) {
            if (only_support && support != *only_support) return;
            long double w = 1.0L;
            long double v = 1.0L;
            for (int i : idx) {
                w *= signed_factor[static_cast<std::size_t>(i)];
                v *= abs_factor[static_cast<std::size_t>(i)];
            }
            auto& acc = out[support];
            acc.w += w;
            acc.v += v;
        },
        limit);
    complete = !walk.truncated;
}

double normalization(EdgeSubset support) { return std::ldexp(1.0, -support.size()); }

std::vector<EdgeSubset> links_within(const Interaction& k, EdgeSubset support)
{
    std::vector<EdgeSubset> out;
    for (const auto& [x, v] : k.values())
        if (x.subset_of(support)) out.push_back(x);
    return out;
}

}  // namespace

PolymerSet build_polymers(const Interaction& k, std::size_t max_links, std::size_t limit)
{
    PolymerSet out;
    out.n = k.n();
    out.max_links = max_links;
    std::map<EdgeSubset, Accumulator> acc;
    const auto links = interaction_links(k);
    accumulate(k, links, max_links, limit, std::nullopt, acc, out.complete);
    for (const auto& [support, a] : acc)
        out.polymers.push_back({support, static_cast<double>(a.w) * normalization(support), static_cast<double>(a.v)});
    return out;
}

double polymer_activity(const Interaction& k, EdgeSubset support, std::size_t max_links)
{
    std::map<EdgeSubset, Accumulator> acc;
    bool complete = false;
    accumulate(k, links_within(k, support), max_links, kDefaultHypergraphLimit, support, acc, complete);
    const auto it = acc.find(support);
    return it == acc.end() ? 0.0 : static_cast<double>(it->second.w) * normalization(support);
}

double activity_bound(const Interaction& k, EdgeSubset support, std::size_t max_links)
{
    std::map<EdgeSubset, Accumulator> acc;
    bool complete = false;
    accumulate(k, links_within(k, support), max_links, kDefaultHypergraphLimit, support, acc, complete);
    const auto it = acc.find(support);
    return it == acc.end() ? 0.0 : static_cast<double>(it->second.v);
}

double cluster_partition_sum(const PolymerSet& set)
{
    const int sites = edge_count(set.n);
    if (sites > 24) throw GuardExceeded("cluster_partition_sum: more than 24 sites");

    // Z(S) = Z(S - {s}) + sum_{N: s in N subset of S} w_N Z(S - N), s = lowest site of S.
    std::vector<std::vector<const Polymer*>> by_lowest(static_cast<std::size_t>(std::max(sites, 1)));
    for (const auto& poly : set.polymers) by_lowest[static_cast<std::size_t>(__builtin_ctzll(poly.support.bits))].push_back(&poly);

    const std::size_t states = std::size_t{1} << sites;
    std::vector<long double> z(states, 0.0L);
    z[0] = 1.0L;
    for (std::size_t s = 1; s < states; ++s) {
        const int low = __builtin_ctzll(s);
        long double acc = z[s & (s - 1)];
        for (const Polymer* poly : by_lowest[static_cast<std::size_t>(low)])
            if ((poly->support.bits & ~static_cast<std::uint64_t>(s)) == 0)
                acc += static_cast<long double>(poly->activity) * z[s & ~static_cast<std::size_t>(poly->support.bits)];
        z[s] = acc;
    }
    return static_cast<double>(z[states - 1]);
}

// ------------------------------------------------------------------ Ursell

std::int64_t connected_graph_sum(int k, std::span<const std::uint32_t> adjacency)
{
    if (k < 1 || k > kMaxUrsellSize) {
        std::ostringstream os;
        os << "connected graph sum supports 1.." << kMaxUrsellSize << " vertices, got " << k;
        throw GuardExceeded(os.str());
    }
    // f(S): connected spanning subgraphs of G[S]; g(S): all spanning subgraphs
    // of G[S], whose signed sum is 1 when G[S] has no edges and 0 otherwise.
    // g(S) = sum_{T subset of S, min(S) in T} f(T) g(S - T).
    const std::size_t states = std::size_t{1} << k;
    std::vector<std::int64_t> f(states, 0);
    std::vector<std::int64_t> g(states, 0);
    for (std::size_t s = 1; s < states; ++s) {
        bool edgeless = true;
        for (std::size_t b = s; b != 0 && edgeless; b &= b - 1)
            if (adjacency[static_cast<std::size_t>(__builtin_ctzll(b))] & s) edgeless = false;
        g[s] = edgeless ? 1 : 0;
    }
    g[0] = 1;
    for (std::size_t s = 1; s < states; ++s) {
        const std::size_t low = s & (~s + 1);
        const std::size_t rest = s ^ low;
        std::int64_t acc = g[s];
        // proper subsets T of S containing low: T = low | r, r a proper subset of rest
        for (std::size_t r = (rest - 1) & rest;; r = (r - 1) & rest) {
            if (r != rest) acc -= f[low | r] * g[rest & ~r];
            if (r == 0) break;
        }
        if (rest == 0) acc = g[s];
        f[s] = acc;
    }
    return f[states - 1];
}

std::int64_t ursell_coefficient(std::span<const EdgeSubset> supports)
{
    const int k = static_cast<int>(supports.size());
    if (k < 1 || k > kMaxUrsellSize) {
        std::ostringstream os;
        os << "ursell_coefficient supports 1.." << kMaxUrsellSize << " polymers, got " << k;
        throw GuardExceeded(os.str());
    }
    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(k), 0);
    std::uint64_t key = static_cast<std::uint64_t>(k);
    int bit = 4;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++bit)
            if (supports[static_cast<std::size_t>(i)].overlaps(supports[static_cast<std::size_t>(j)])) {
                adjacency[static_cast<std::size_t>(i)] |= 1u << j;
                adjacency[static_cast<std::size_t>(j)] |= 1u << i;
                key |= std::uint64_t{1} << bit;
            }

    static std::mutex mutex;
    static std::unordered_map<std::uint64_t, std::int64_t> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const std::int64_t value = connected_graph_sum(k, adjacency);
    std::lock_guard lock(mutex);
    return memo.try_emplace(key, value).first->second;
}

// ------------------------------------------------------------------ clusters

namespace {

// Connected multisets of polymer indices (sorted), level by level: every
// connected multiset of size k+1 has a member whose removal leaves a
// connected multiset of size k, so growing by overlapping polymers and
// de-duplicating reaches each exactly once.
template <class Visit>
void for_each_cluster(const PolymerSet& set, int order, std::size_t limit, Visit visit)
{
    if (order < 1) throw InvalidArgument("cluster order must be >= 1");
    if (order > kMaxUrsellSize) throw GuardExceeded("cluster order exceeds Ursell coefficient guard");
    const auto& polys = set.polymers;
    std::size_t produced = 0;

    std::vector<std::vector<int>> level;
    for (int i = 0; i < static_cast<int>(polys.size()); ++i) level.push_back({i});

    std::vector<EdgeSubset> supports;
    for (int size = 1; size <= order && !level.empty(); ++size) {
        for (const auto& members : level) {
            supports.clear();
            long double inv_mult = 1.0L;
            int run = 1;
            for (std::size_t q = 0; q < members.size(); ++q) {
                supports.push_back(polys[static_cast<std::size_t>(members[q])].support);
                if (q > 0 && members[q] == members[q - 1])
                    inv_mult /= ++run;
                else
                    run = 1;
            }
            visit(size, std::span<const int>(members), ursell_coefficient(supports), inv_mult);
        }
        if (size == order) break;

        std::set<std::vector<int>> next;
        for (const auto& members : level) {
            std::uint64_t united = 0;
            for (int m : members) united |= polys[static_cast<std::size_t>(m)].support.bits;
            for (int j = 0; j < static_cast<int>(polys.size()); ++j) {
                if ((polys[static_cast<std::size_t>(j)].support.bits & united) == 0) continue;
                std::vector<int> grown = members;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), j), j);
                if (next.insert(std::move(grown)).second && ++produced > limit) {
                    std::ostringstream os;
                    os << "cluster enumeration exceeded " << limit << " multisets";
                    throw GuardExceeded(os.str());
                }
            }
        }
        level.assign(next.begin(), next.end());
    }
}

}  // namespace

std::vector<double> truncated_log_partition(const PolymerSet& set, int order, std::size_t limit)
{
    std::vector<long double> per_order(static_cast<std::size_t>(order), 0.0L);
    for_each_cluster(set, order, limit, [&](int size, std::span<const int> members, std::int64_t c, long double inv_mult) {
        if (c == 0) return;
        long double term = static_cast<long double>(c) * inv_mult;
        for (int m : members) term *= set.polymers[static_cast<std::size_t>(m)].activity;
        per_order[static_cast<std::size_t>(size - 1)] += term;
    });
    std::vector<double> out;
    long double running = 0.0L;
    for (auto t : per_order) {
        running += t;
        out.push_back(static_cast<double>(running));
    }
    return out;
}

std::vector<double> truncated_log_partition(const Interaction& k, int order, std::size_t max_links)
{
    return truncated_log_partition(build_polymers(k, max_links), order);
}

std::vector<double> pinned_cluster_sums(const PolymerSet& set, int order, std::size_t limit)
{
    std::vector<long double> acc(set.polymers.size(), 0.0L);
    for_each_cluster(set, order, limit, [&](int, std::span<const int> members, std::int64_t c, long double inv_mult) {
        if (c == 0) return;
        long double term = static_cast<long double>(std::llabs(c)) * inv_mult;
        for (int m : members) term *= std::abs(set.polymers[static_cast<std::size_t>(m)].activity);
        for (std::size_t q = 0; q < members.size(); ++q)
            if (q == 0 || members[q] != members[q - 1]) acc[static_cast<std::size_t>(members[q])] += term;
    });
    return {acc.begin(), acc.end()};
}

}  // namespace ergm
