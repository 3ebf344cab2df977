#include "gcm/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "gcm/errors.hpp"

namespace gcm {

namespace {

int env_threads() {
    const char* s = std::getenv("GCM_THREADS");
    if (!s) return 1;
    int v = std::atoi(s);
    return v < 1 ? 1 : v;
}

} // namespace

GcmGraph::GcmGraph(GroupTable group, int m, GraphCaps caps)
    : group_(std::move(group)), m_(m) {
    if (m_ < 2) throw BadParameters("m must be at least 2");
    if (group_.order() < 2) throw BadParameters("group must be non-trivial");

    const std::size_t n = static_cast<std::size_t>(group_.order());
    std::size_t v = 1;
    for (int i = 0; i < m_; ++i) {
        if (v > caps.hard / n) throw TooLarge("vertex count exceeds hard cap");
        v *= n;
    }
    vcount_ = v;

    for (int k = 1; k <= m_; ++k)
        for (int l = k + 1; l <= m_ + 1; ++l)
            for (int x = 1; x < group_.order(); ++x) {
                gen_set_.push_back(interval_vertex(x, k, l));
                gen_params_.push_back(IntervalElement{x, k, l});
            }

    if (vcount_ <= caps.materialize) {
        rows_.assign(vcount_, DynBitset(vcount_));
        std::vector<std::vector<int>> gens;
        gens.reserve(gen_set_.size());
        for (Vertex s : gen_set_) gens.push_back(decode(s));

        auto fill = [&](std::size_t lo, std::size_t hi) {
            std::vector<int> tuple, prod(m_);
            for (std::size_t u = lo; u < hi; ++u) {
                tuple = decode(static_cast<Vertex>(u));
                for (const auto& s : gens) {
                    for (int i = 0; i < m_; ++i)
                        prod[i] = group_.mul(s[i], tuple[i]);
                    rows_[u].set(encode(prod));
                }
            }
        };
        int nthreads = env_threads();
        if (nthreads <= 1 || vcount_ < 1024) {
            fill(0, vcount_);
        } else {
            std::vector<std::thread> workers;
            std::size_t chunk = (vcount_ + nthreads - 1) / nthreads;
            for (int t = 0; t < nthreads; ++t) {
                std::size_t lo = t * chunk, hi = std::min(vcount_, lo + chunk);
                if (lo < hi) workers.emplace_back(fill, lo, hi);
            }
            for (auto& w : workers) w.join();
        }
    }
}

GcmGraph build_graph(const GroupTable& G, int m, GraphCaps caps) {
    return GcmGraph(G, m, caps);
}

std::vector<int> GcmGraph::decode(Vertex v) const {
    std::vector<int> tuple(m_);
    const int n = group_.order();
    for (int i = 0; i < m_; ++i) {
        tuple[i] = static_cast<int>(v % n);
        v /= n;
    }
    return tuple;
}

Vertex GcmGraph::encode(const std::vector<int>& tuple) const {
    const int n = group_.order();
    std::uint64_t v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * n + tuple[i];
    return static_cast<Vertex>(v);
}

Vertex GcmGraph::vertex_mul(Vertex a, Vertex b) const {
    const int n = group_.order();
    std::uint64_t out = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
        out += mul * group_.mul(static_cast<int>(a % n), static_cast<int>(b % n));
        mul *= n;
        a /= n;
        b /= n;
    }
    return static_cast<Vertex>(out);
}

Vertex GcmGraph::vertex_inv(Vertex a) const {
    const int n = group_.order();
    std::uint64_t out = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
        out += mul * group_.inv(static_cast<int>(a % n));
        mul *= n;
        a /= n;
    }
    return static_cast<Vertex>(out);
}

Vertex GcmGraph::interval_vertex(int x, int k, int l) const {
    std::vector<int> tuple(m_, 0);
    for (int i = k; i < l; ++i) tuple[i - 1] = x;
    return encode(tuple);
}

WeightDecomposition GcmGraph::weight_decomposition(Vertex v) const {
    if (v == 0) throw IdentityVertex("identity tuple has no decomposition");
    std::vector<int> tuple = decode(v);
    int first = 0, last = m_ - 1;
    while (tuple[first] == 0) ++first;
    while (tuple[last] == 0) --last;

    WeightDecomposition d;
    d.boundaries.push_back(first + 1);
    int cur = tuple[first];
    for (int i = first + 1; i <= last; ++i) {
        if (tuple[i] != cur) {
            d.values.push_back(cur);
            d.boundaries.push_back(i + 1);
            cur = tuple[i];
        }
    }
    d.values.push_back(cur);
    d.boundaries.push_back(last + 2);
    return d;
}

int GcmGraph::weight(Vertex v) const {
    return v == 0 ? 0 : weight_decomposition(v).weight();
}

bool GcmGraph::weight_is_one(Vertex v) const {
    if (v == 0) return false;
    const int n = group_.order();
    int i = 0;
    Vertex rest = v;
    while (rest % n == 0) {
        rest /= n;
        ++i;
    }
    const int x = static_cast<int>(rest % n);
    while (i < m_ && static_cast<int>(rest % n) == x) {
        rest /= n;
        ++i;
    }
    // Everything after the block must be the identity.
    return rest == 0;
}

bool GcmGraph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (materialized()) return rows_[u].test(v);
    return weight_is_one(vertex_mul(v, vertex_inv(u)));
}

std::vector<Vertex> GcmGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(gen_set_.size());
    for (Vertex s : gen_set_) out.push_back(vertex_mul(s, v));
    std::sort(out.begin(), out.end());
    return out;
}

const DynBitset& GcmGraph::neighbor_row(Vertex v) const {
    if (!materialized()) throw Error("adjacency rows are not materialized");
    return rows_[v];
}

std::vector<Vertex> GcmGraph::common_neighbors(Vertex u, Vertex v) const {
    if (u == v) throw BadParameters("common neighbors need distinct vertices");
    // Translate so the first vertex becomes the identity tuple, scan the
    // connection set, translate back.
    const Vertex g = vertex_mul(v, vertex_inv(u));
    const Vertex ginv = vertex_inv(g);
    std::vector<Vertex> out;
    for (Vertex w : gen_set_)
        if (weight_is_one(vertex_mul(w, ginv))) out.push_back(vertex_mul(w, u));
    std::sort(out.begin(), out.end());
    return out;
}

std::string GcmGraph::vertex_name(Vertex v) const {
    std::vector<int> tuple = decode(v);
    std::string out = "(";
    for (int i = 0; i < m_; ++i) {
        if (i) out += ",";
        out += group_.name(tuple[i]);
    }
    return out + ")";
}

SmallGraph GcmGraph::to_small_graph() const {
    SmallGraph g(vcount_);
    if (materialized()) {
        for (std::size_t u = 0; u < vcount_; ++u)
            rows_[u].for_each([&](std::size_t v) {
                if (u < v) g.add_edge(u, v);
            });
    } else {
        for (std::size_t u = 0; u < vcount_; ++u)
            for (Vertex s : gen_set_) {
                Vertex v = vertex_mul(s, static_cast<Vertex>(u));
                if (u < v) g.add_edge(u, v);
            }
    }
    return g;
}

SmallGraph GcmGraph::identity_neighborhood() const {
    const std::size_t k = gen_set_.size();
    SmallGraph g(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (adjacent(gen_set_[i], gen_set_[j])) g.add_edge(i, j);
    return g;
}

// ---------------------------------------------------------------------------

bool interval_product_in_S(const GcmGraph& graph, const IntervalElement& h,
                           const IntervalElement& g) {
    const GroupTable& G = graph.group();
    const int i = h.k, j = h.l, k = g.k, l = g.l;
    const int ginv = G.inv(g.x);
    if (h.x != ginv && i == k && j == l) return true;
    if (h.x == g.x && (j == k || i == l)) return true;
    if (h.x == ginv && ((i != k && j == l) || (i == k && j != l))) return true;
    return false;
}

int expected_weight3_common(const GroupTable& G, int x, int y, int z) {
    const int e = 0;
    if (y == e) {
        if (z == x) return G.elem_order(x) == 2 ? 6 : 4;
        if (z == G.inv(x)) return 4; // order > 2 here, else z == x
        return 2;
    }
    if (z == x) {
        if (y == G.mul(x, x)) return 4; // order > 2, else y would be e
        return 2;
    }
    const bool commute = G.mul(x, y) == G.mul(y, x);
    const int xinv_y = G.mul(G.inv(x), y);
    const int y_xinv = G.mul(y, G.inv(x));
    if (commute) return z == xinv_y ? 2 : 0;
    if (z == xinv_y || z == y_xinv) return 1;
    return 0;
}

Weight3Profile weight3_profile(const GcmGraph& graph) {
    if (graph.m() < 3) throw BadParameters("weight 3 needs m >= 3");
    Weight3Profile out;
    out.matches_case_table = true;
    std::vector<std::pair<int, std::size_t>>& hist = out.histogram;
    auto bump = [&hist](int count) {
        for (auto& [c, n] : hist)
            if (c == count) {
                ++n;
                return;
            }
        hist.emplace_back(count, 1);
    };
    for (Vertex v = 1; v < graph.vertex_count(); ++v) {
        WeightDecomposition d = graph.weight_decomposition(v);
        if (d.weight() != 3) continue;
        const int actual =
            static_cast<int>(graph.common_neighbors(0, v).size());
        const int expected = expected_weight3_common(
            graph.group(), d.values[0], d.values[1], d.values[2]);
        if (actual != expected) out.matches_case_table = false;
        bump(actual);
    }
    std::sort(hist.begin(), hist.end());
    return out;
}

IntervalSubgraph interval_subgraph(const GcmGraph& graph, int x) {
    if (x == 0) throw IdentityElement("interval subgraph needs x != e");
    const int xi = graph.group().inv(x);
    IntervalSubgraph out;
    for (int k = 1; k <= graph.m(); ++k)
        for (int l = k + 1; l <= graph.m() + 1; ++l) {
            out.vertices.push_back(graph.interval_vertex(x, k, l));
            if (xi != x)
                out.vertices.push_back(graph.interval_vertex(xi, k, l));
        }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.graph = SmallGraph(out.vertices.size());
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
            if (graph.adjacent(out.vertices[i], out.vertices[j]))
                out.graph.add_edge(i, j);
    return out;
}

IntervalMetaGraph interval_meta_graph(int m) {
    if (m < 2) throw BadParameters("m must be at least 2");
    IntervalMetaGraph out;
    for (int k = 1; k <= m; ++k)
        for (int l = k + 1; l <= m + 1; ++l) out.windows.emplace_back(k, l);
    const std::size_t n = out.windows.size();
    out.graph = SmallGraph(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            auto [k, l] = out.windows[a];
            auto [i, j] = out.windows[b];
            int shared = (k == i) + (k == j) + (l == i) + (l == j);
            if (shared == 1) out.graph.add_edge(a, b);
        }
    out.complement = out.graph.complement();
    return out;
}

} // namespace gcm
