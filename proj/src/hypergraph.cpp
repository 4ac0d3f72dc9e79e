#include "ergm/hypergraph.hpp"

#include "ergm/error.hpp"

#include <algorithm>
#include <sstream>

namespace ergm {

namespace {

// ESU-style enumeration of connected induced subgraphs of the link overlap
// graph: each set is grown from its least index v, only ever adding
// vertices > v that are new exclusive neighbours, so it is produced once.
class ConnectedSetWalker {
public:
    ConnectedSetWalker(std::span<const EdgeSubset> links, std::size_t max_links, std::optional<int> root,
                       const HypergraphVisitor& visit, std::size_t limit)
        : links_(links), max_(max_links), root_(root), visit_(visit), limit_(limit), mark_(links.size(), 0)
    {
        adjacency_.resize(links.size());
        for (std::size_t a = 0; a < links.size(); ++a)
            for (std::size_t b = a + 1; b < links.size(); ++b)
                if (links[a].overlaps(links[b])) {
                    adjacency_[a].push_back(static_cast<int>(b));
                    adjacency_[b].push_back(static_cast<int>(a));
                }
    }

    HypergraphWalk run()
    {
        if (max_ == 0) {
            walk_.truncated = !links_.empty();
            return walk_;
        }
        for (int v = 0; v < static_cast<int>(links_.size()); ++v) {
            std::vector<int> ext;
            for (int u : adjacency_[static_cast<std::size_t>(v)])
                if (u > v) ext.push_back(u);
            push(v);
            extend(std::move(ext), v, links_[static_cast<std::size_t>(v)]);
            pop(v);
        }
        return walk_;
    }

private:
    void push(int v)
    {
        members_.push_back(v);
        ++mark_[static_cast<std::size_t>(v)];
        for (int u : adjacency_[static_cast<std::size_t>(v)]) ++mark_[static_cast<std::size_t>(u)];
    }

    void pop(int v)
    {
        members_.pop_back();
        --mark_[static_cast<std::size_t>(v)];
        for (int u : adjacency_[static_cast<std::size_t>(v)]) --mark_[static_cast<std::size_t>(u)];
    }

    void extend(std::vector<int> ext, int v, EdgeSubset support)
    {
        if (++generated_ > limit_) {
            std::ostringstream os;
            os << "connected hypergraph enumeration exceeded " << limit_ << " sets";
            throw GuardExceeded(os.str());
        }
        if (!root_ || support.contains(*root_)) {
            ++walk_.visited;
            visit_(members_, support);
        }
        if (members_.size() == max_) {
            if (!ext.empty()) walk_.truncated = true;
            return;
        }
        while (!ext.empty()) {
            const int w = ext.back();
            ext.pop_back();
            std::vector<int> next = ext;
            for (int u : adjacency_[static_cast<std::size_t>(w)])
                if (u > v && mark_[static_cast<std::size_t>(u)] == 0) next.push_back(u);
            push(w);
            extend(std::move(next), v, {support.bits | links_[static_cast<std::size_t>(w)].bits});
            pop(w);
        }
    }

    std::span<const EdgeSubset> links_;
    std::size_t max_;
    std::optional<int> root_;
    const HypergraphVisitor& visit_;
    std::size_t limit_;
    std::size_t generated_ = 0;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> mark_;  // members plus their neighbours, with multiplicity
    std::vector<int> members_;
    HypergraphWalk walk_;
};

}  // namespace

HypergraphWalk for_each_connected_hypergraph(std::span<const EdgeSubset> links, std::size_t max_links,
                                             std::optional<int> root_site, const HypergraphVisitor& visit, std::size_t limit)
{
    return ConnectedSetWalker(links, max_links, root_site, visit, limit).run();
}

std::vector<EdgeSubset> interaction_links(const Interaction& k)
{
    std::vector<EdgeSubset> out;
    out.reserve(k.size());
    for (const auto& [x, v] : k.values()) out.push_back(x);
    return out;
}

std::vector<Hypergraph> enumerate_connected_hypergraphs(const Interaction& k, std::size_t max_links, std::optional<EdgeSite> root,
                                                        std::size_t limit)
{
    const auto links = interaction_links(k);
    std::optional<int> root_index;
    if (root) root_index = root->index(k.n());
    std::vector<Hypergraph> out;
    for_each_connected_hypergraph(
        links, max_links, root_index,
        [&](std::span<const int> idx, EdgeSubset support) {
            Hypergraph h;
            for (int i : idx) h.links.push_back(links[static_cast<std::size_t>(i)]);
            std::sort(h.links.begin(), h.links.end());
            h.support = support;
            out.push_back(std::move(h));
        },
        limit);
    return out;
}

bool is_connected(std::span<const EdgeSubset> links)
{
    if (links.empty()) return false;
    std::vector<bool> seen(links.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < links.size(); ++b)
            if (!seen[b] && links[a].overlaps(links[b])) {
                seen[b] = true;
                ++reached;
                stack.push_back(b);
            }
    }
    return reached == links.size();
}

}  // namespace ergm
