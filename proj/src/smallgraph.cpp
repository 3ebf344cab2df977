#include "gcm/smallgraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace gcm {

SmallGraph::SmallGraph(std::size_t n) : n_(n), rows_(n, DynBitset(n)) {}

void SmallGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    rows_[u].set(v);
    rows_[v].set(u);
}

std::size_t SmallGraph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t u = 0; u < n_; ++u) twice += rows_[u].count();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SmallGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        rows_[u].for_each([&](std::size_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
SmallGraph::degree_histogram() const {
    std::vector<std::pair<std::size_t, std::size_t>> hist;
    std::vector<std::size_t> degs(n_);
    for (std::size_t u = 0; u < n_; ++u) degs[u] = degree(u);
    std::sort(degs.begin(), degs.end());
    for (std::size_t i = 0; i < n_;) {
        std::size_t j = i;
        while (j < n_ && degs[j] == degs[i]) ++j;
        hist.emplace_back(degs[i], j - i);
        i = j;
    }
    return hist;
}

bool SmallGraph::regular(std::size_t* degree_out) const {
    if (n_ == 0) return true;
    std::size_t d = degree(0);
    for (std::size_t u = 1; u < n_; ++u)
        if (degree(u) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

SmallGraph SmallGraph::complement() const {
    SmallGraph c(n_);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

SmallGraph SmallGraph::induced(const std::vector<std::size_t>& verts) const {
    SmallGraph g(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) g.add_edge(i, j);
    return g;
}

std::size_t SmallGraph::girth() const {
    // BFS from each vertex; a cycle through the root shows up as an edge
    // between vertices at equal or adjacent depth.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t root = 0; root < n_; ++root) {
        std::vector<std::size_t> dist(n_, std::numeric_limits<std::size_t>::max());
        std::vector<std::size_t> parent(n_, n_);
        std::queue<std::size_t> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            bool found = false;
            rows_[u].for_each([&](std::size_t v) {
                if (found) return;
                if (dist[v] == std::numeric_limits<std::size_t>::max()) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    std::size_t cyc = dist[u] + dist[v] + 1;
                    if (cyc < best) best = cyc;
                    if (cyc <= 3) found = true;
                }
            });
            if (found) break;
        }
        if (best == 3) break;
    }
    return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

std::size_t SmallGraph::diameter() const {
    if (n_ <= 1) return 0;
    std::size_t diam = 0;
    for (std::size_t root = 0; root < n_; ++root) {
        std::vector<std::size_t> dist(n_, std::numeric_limits<std::size_t>::max());
        std::queue<std::size_t> q;
        dist[root] = 0;
        q.push(root);
        std::size_t reached = 1, far = 0;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            far = std::max(far, dist[u]);
            rows_[u].for_each([&](std::size_t v) {
                if (dist[v] == std::numeric_limits<std::size_t>::max()) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                    ++reached;
                }
            });
        }
        if (reached != n_) return std::numeric_limits<std::size_t>::max();
        diam = std::max(diam, far);
    }
    return diam;
}

} // namespace gcm
