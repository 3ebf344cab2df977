#include "gcm/cliques.hpp"

#include <algorithm>

#include "gcm/errors.hpp"

namespace gcm {

namespace {

struct BronKerbosch {
    const SmallGraph& g;
    std::size_t best = 0;
    std::vector<std::vector<std::size_t>> maximum_cliques;
    std::vector<std::size_t> current;

    explicit BronKerbosch(const SmallGraph& graph) : g(graph) {}

    void run() {
        DynBitset p(g.size()), x(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) p.set(v);
        expand(p, x);
        for (auto& c : maximum_cliques) std::sort(c.begin(), c.end());
        std::sort(maximum_cliques.begin(), maximum_cliques.end());
    }

    void expand(DynBitset p, DynBitset x) {
        if (p.none() && x.none()) {
            if (current.size() > best) {
                best = current.size();
                maximum_cliques.clear();
            }
            if (current.size() == best) maximum_cliques.push_back(current);
            return;
        }
        // Pivot with the most neighbors in P.
        std::size_t pivot = g.size(), pivot_deg = 0;
        DynBitset both = p;
        both |= x;
        both.for_each([&](std::size_t u) {
            std::size_t d = p.and_count(g.row(u));
            if (pivot == g.size() || d > pivot_deg) {
                pivot = u;
                pivot_deg = d;
            }
        });
        DynBitset candidates = p;
        if (pivot != g.size()) candidates -= g.row(pivot);
        candidates.for_each([&](std::size_t v) {
            if (!p.test(v)) return; // removed by an earlier branch
            current.push_back(v);
            DynBitset p2 = p, x2 = x;
            p2 &= g.row(v);
            x2 &= g.row(v);
            expand(std::move(p2), std::move(x2));
            current.pop_back();
            p.reset(v);
            x.set(v);
        });
    }
};

} // namespace

std::vector<Vertex> canonical_dispersed_clique(const GcmGraph& graph, int x,
                                               int j) {
    const int xi = graph.group().inv(x);
    std::vector<Vertex> out;
    for (int i = 1; i < j; ++i) out.push_back(graph.interval_vertex(xi, i, j));
    for (int k = j + 1; k <= graph.m() + 1; ++k)
        out.push_back(graph.interval_vertex(x, j, k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CliqueRecord> max_cliques_through_e(const GcmGraph& graph,
                                                std::size_t cap) {
    if (graph.vertex_count() > cap)
        throw TooLarge("clique search exceeds cap");
    SmallGraph nbhd = graph.identity_neighborhood();
    BronKerbosch bk(nbhd);
    bk.run();

    std::vector<CliqueRecord> out;
    for (const auto& local : bk.maximum_cliques) {
        CliqueRecord rec;
        rec.vertices.push_back(0);
        for (std::size_t i : local) rec.vertices.push_back(graph.gen_set()[i]);
        std::sort(rec.vertices.begin(), rec.vertices.end());
        classify_clique(graph, rec);
        out.push_back(std::move(rec));
    }
    return out;
}

std::size_t clique_number(const GcmGraph& graph, std::size_t cap) {
    if (graph.vertex_count() > cap)
        throw TooLarge("clique search exceeds cap");
    SmallGraph nbhd = graph.identity_neighborhood();
    BronKerbosch bk(nbhd);
    bk.run();
    return bk.best + 1; // plus the identity tuple
}

CliqueType classify_clique(const GcmGraph& graph, CliqueRecord& record) {
    const auto& verts = record.vertices;
    if (std::find(verts.begin(), verts.end(), 0u) == verts.end())
        throw NotAClique("clique must contain the identity tuple");
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!graph.adjacent(verts[i], verts[j]))
                throw NotAClique("vertices are not pairwise adjacent");

    std::vector<Vertex> star; // non-identity part
    for (Vertex v : verts)
        if (v != 0) star.push_back(v);
    record.type = CliqueType::MixedInvalid;
    if (star.empty()) return record.type;

    // Every member is adjacent to e, so has weight 1; collect windows.
    std::vector<IntervalElement> params;
    for (Vertex v : star) {
        WeightDecomposition d = graph.weight_decomposition(v);
        if (d.weight() != 1) throw NotAClique("member not adjacent to e");
        params.push_back(
            IntervalElement{d.values[0], d.boundaries[0], d.boundaries[1]});
    }

    bool one_window = true;
    for (const auto& p : params)
        if (p.k != params[0].k || p.l != params[0].l) one_window = false;
    if (one_window) {
        record.type = CliqueType::Interval;
        record.k = params[0].k;
        record.l = params[0].l;
        return record.type;
    }

    for (int j = 1; j <= graph.m() + 1; ++j)
        for (int x = 1; x < graph.group().order(); ++x)
            if (canonical_dispersed_clique(graph, x, j) == star) {
                record.type = CliqueType::Dispersed;
                record.x = x;
                record.j = j;
                return record.type;
            }

    if (graph.m() == 3 && star.size() == 3) {
        // Triangle {x_[i,j), x_[i,k), x_[j,k)} for an order-2 element.
        for (int x = 1; x < graph.group().order(); ++x) {
            if (graph.group().elem_order(x) != 2) continue;
            for (int i = 1; i <= 4; ++i)
                for (int j = i + 1; j <= 4; ++j)
                    for (int k = j + 1; k <= 4; ++k) {
                        std::vector<Vertex> tri{graph.interval_vertex(x, i, j),
                                                graph.interval_vertex(x, i, k),
                                                graph.interval_vertex(x, j, k)};
                        std::sort(tri.begin(), tri.end());
                        if (tri == star) {
                            record.type = CliqueType::DispersedOther;
                            record.x = x;
                            return record.type;
                        }
                    }
        }
    }
    if (graph.m() == 2) {
        // Dispersed shapes at m = 2 carry no classification.
        record.type = CliqueType::DispersedOther;
        return record.type;
    }
    return record.type;
}

NeighborGraphReport neighbor_graph(const GcmGraph& graph,
                                   const CliqueRecord& record) {
    std::vector<Vertex> star;
    for (Vertex v : record.vertices)
        if (v != 0) star.push_back(v);

    // Neighbors of the clique inside the identity's neighborhood.
    NeighborGraphReport rep;
    for (Vertex w : graph.gen_set()) {
        if (std::find(star.begin(), star.end(), w) != star.end()) continue;
        for (Vertex q : star)
            if (graph.adjacent(w, q)) {
                rep.vertices.push_back(w);
                break;
            }
    }
    std::sort(rep.vertices.begin(), rep.vertices.end());

    rep.graph = SmallGraph(rep.vertices.size());
    for (std::size_t i = 0; i < rep.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < rep.vertices.size(); ++j)
            if (graph.adjacent(rep.vertices[i], rep.vertices[j]))
                rep.graph.add_edge(i, j);
    rep.degree_histogram = rep.graph.degree_histogram();
    rep.regular = rep.graph.regular(&rep.degree);
    return rep;
}

} // namespace gcm
