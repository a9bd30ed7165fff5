#include "mis.hpp"

#include <algorithm>

namespace debruijn::detail {

namespace {

struct Graph {
    std::vector<std::vector<int>> adj;  // local ids
    std::vector<int> orig;              // local id -> caller id
};

struct Partial {
    int size = 0;
    std::vector<int> witness;  // caller ids
};

// alpha(G) <= |V| - size of any maximal matching.
int greedy_matching(const Graph& g) {
    std::vector<char> matched(g.adj.size(), 0);
    int m = 0;
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
        if (matched[v]) continue;
        for (int u : g.adj[v]) {
            if (!matched[static_cast<std::size_t>(u)]) {
                matched[v] = matched[static_cast<std::size_t>(u)] = 1;
                ++m;
                break;
            }
        }
    }
    return m;
}

Graph induce(const Graph& g, const std::vector<char>& keep) {
    Graph sub;
    std::vector<int> local(g.adj.size(), -1);
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
        if (!keep[v]) continue;
        local[v] = static_cast<int>(sub.orig.size());
        sub.orig.push_back(g.orig[v]);
    }
    sub.adj.resize(sub.orig.size());
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
        if (!keep[v]) continue;
        auto& row = sub.adj[static_cast<std::size_t>(local[v])];
        for (int u : g.adj[v])
            if (keep[static_cast<std::size_t>(u)]) row.push_back(local[static_cast<std::size_t>(u)]);
    }
    return sub;
}

// Returns the exact maximum whenever it exceeds `need`; branches that
// provably cannot beat `need` may be cut, in which case the reported size
// stays <= need and the caller discards it.
Partial solve(const Graph& g, int need) {
    const std::size_t n = g.adj.size();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<int>(g.adj[v].size());

    Partial acc;
    auto remove_vertex = [&](int v) {
        alive[static_cast<std::size_t>(v)] = 0;
        for (int u : g.adj[static_cast<std::size_t>(v)])
            if (alive[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    };

    // A vertex of degree 0 or 1 lies in some maximum independent set.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v] || deg[v] > 1) continue;
            acc.size += 1;
            acc.witness.push_back(g.orig[v]);
            if (deg[v] == 1) {
                for (int u : g.adj[v])
                    if (alive[static_cast<std::size_t>(u)]) {
                        remove_vertex(u);
                        break;
                    }
            }
            remove_vertex(static_cast<int>(v));
            changed = true;
        }
    }

    std::size_t alive_count = 0;
    for (std::size_t v = 0; v < n; ++v) alive_count += alive[v] ? 1 : 0;
    if (alive_count == 0) return acc;

    // Residual minimum degree is >= 2; split into connected components.
    std::vector<int> comp(n, -1);
    int comps = 0;
    std::vector<int> stack;
    for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v] || comp[v] >= 0) continue;
        comp[v] = comps;
        stack.push_back(static_cast<int>(v));
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int u : g.adj[static_cast<std::size_t>(x)])
                if (alive[static_cast<std::size_t>(u)] && comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = comps;
                    stack.push_back(u);
                }
        }
        ++comps;
    }

    if (comps > 1) {
        Partial total = acc;
        for (int c = 0; c < comps; ++c) {
            std::vector<char> keep(n, 0);
            for (std::size_t v = 0; v < n; ++v) keep[v] = alive[v] && comp[v] == c;
            Partial part = solve(induce(g, keep), -1);
            total.size += part.size;
            total.witness.insert(total.witness.end(), part.witness.begin(), part.witness.end());
        }
        return total;
    }

    const int residual_need = need - acc.size;
    const Graph sub = induce(g, alive);
    const int ub = static_cast<int>(alive_count) - greedy_matching(sub);
    if (ub <= residual_need) {
        acc.size += ub;
        return acc;
    }

    // Every maximum independent set meets the closed neighborhood of any
    // vertex; branch over N[v] for a minimum-degree v (fewest branches).
    int pivot = 0;
    for (std::size_t v = 1; v < sub.adj.size(); ++v)
        if (sub.adj[v].size() < sub.adj[static_cast<std::size_t>(pivot)].size())
            pivot = static_cast<int>(v);

    std::vector<int> candidates{pivot};
    candidates.insert(candidates.end(), sub.adj[static_cast<std::size_t>(pivot)].begin(),
                      sub.adj[static_cast<std::size_t>(pivot)].end());

    Partial best;
    best.size = -1;
    int bar = residual_need;
    std::vector<char> keep(sub.adj.size());
    for (int u : candidates) {
        keep.assign(sub.adj.size(), 1);
        keep[static_cast<std::size_t>(u)] = 0;
        for (int w : sub.adj[static_cast<std::size_t>(u)]) keep[static_cast<std::size_t>(w)] = 0;
        Partial branch = solve(induce(sub, keep), bar - 1);
        branch.size += 1;
        branch.witness.push_back(sub.orig[static_cast<std::size_t>(u)]);
        if (branch.size > best.size) {
            best = std::move(branch);
            bar = std::max(bar, best.size);
        }
    }
    best.size += acc.size;
    best.witness.insert(best.witness.end(), acc.witness.begin(), acc.witness.end());
    return best;
}

}  // namespace

MisResult max_independent_set(const std::vector<std::vector<int>>& adj) {
    Graph g;
    g.adj = adj;
    g.orig.resize(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) g.orig[v] = static_cast<int>(v);
    Partial best = solve(g, -1);
    std::sort(best.witness.begin(), best.witness.end());
    return {best.size, best.witness};
}

}  // namespace debruijn::detail
