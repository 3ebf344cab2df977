#include "gcm/morphisms.hpp"

#include <algorithm>

#include "gcm/errors.hpp"

namespace gcm {

namespace {

// Builds a vertex permutation from a coordinatewise tuple map.
template <typename F>
VertexPermutation tuple_permutation(const GcmGraph& graph, F&& f,
                                    std::string label) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint32_t> img(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> tuple = graph.decode(static_cast<Vertex>(v));
        img[v] = graph.encode(f(tuple));
    }
    return VertexPermutation(std::move(img), std::move(label));
}

} // namespace

VertexPermutation transfer(const GcmGraph& graph, Vertex g) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint32_t> img(n);
    for (std::size_t v = 0; v < n; ++v)
        img[v] = graph.vertex_mul(static_cast<Vertex>(v), g);
    return VertexPermutation(std::move(img), "T" + graph.vertex_name(g));
}

VertexPermutation homogeneous_aut(const GcmGraph& graph, const GroupMap& f) {
    if (!f.is_bijective() || !f.is_homomorphism(graph.group(), graph.group()))
        throw NotAnAutomorphism("map is not a group automorphism");
    return tuple_permutation(
        graph,
        [&f](std::vector<int> t) {
            for (int& x : t) x = f(x);
            return t;
        },
        "hom");
}

VertexPermutation gamma(const GcmGraph& graph, int i) {
    if (i < 1 || i > graph.m()) throw IndexOutOfRange("gamma index");
    const GroupTable& G = graph.group();
    const int m = graph.m();
    return tuple_permutation(
        graph,
        [&G, i, m](std::vector<int> t) {
            int left = i >= 2 ? t[i - 2] : 0;
            int right = i < m ? t[i] : 0;
            t[i - 1] = G.mul(G.mul(left, G.inv(t[i - 1])), right);
            return t;
        },
        "gamma" + std::to_string(i));
}

VertexPermutation tau(const GcmGraph& graph) {
    return tuple_permutation(
        graph,
        [](std::vector<int> t) {
            std::reverse(t.begin(), t.end());
            return t;
        },
        "tau");
}

VertexPermutation omega(const GcmGraph& graph) {
    const GroupTable& G = graph.group();
    const int m = graph.m();
    return tuple_permutation(
        graph,
        [&G, m](std::vector<int> t) {
            std::vector<int> out(m);
            const int inv1 = G.inv(t[0]);
            for (int j = 0; j + 1 < m; ++j) out[j] = G.mul(inv1, t[j + 1]);
            out[m - 1] = inv1;
            return out;
        },
        "omega");
}

VertexPermutation epsilon(const GcmGraph& graph) {
    const GroupTable& G = graph.group();
    return tuple_permutation(
        graph,
        [&G](std::vector<int> t) {
            for (int& x : t) x = G.inv(x);
            return t;
        },
        "epsilon");
}

TauFamily epsilon_and_tau_i(const GcmGraph& graph) {
    if (!graph.group().abelian())
        throw NotAbelian("the tau family needs an abelian group");
    const int m = graph.m();
    const int p = (m + 1) / 2;

    std::vector<VertexPermutation> gam;
    for (int i = 1; i <= m; ++i) gam.push_back(gamma(graph, i));
    auto g = [&gam](int i) -> const VertexPermutation& { return gam[i - 1]; };

    std::vector<VertexPermutation> taus(p);
    if (m % 2 == 1) {
        taus[p - 1] = g(p);
    } else {
        taus[p - 1] = g(p + 1).then(g(p)).then(g(p + 1));
    }
    for (int i = p - 1; i >= 1; --i) {
        const int outer = m + 1 - i;
        taus[i - 1] =
            g(i).then(g(outer)).then(taus[i]).then(g(outer)).then(g(i));
    }
    for (int i = 1; i <= p; ++i)
        taus[i - 1].set_label("tau_" + std::to_string(i));

    TauFamily fam;
    fam.tau_i = std::move(taus);
    fam.epsilon = epsilon(graph);
    fam.tau = tau(graph);
    return fam;
}

bool is_graph_automorphism(const GcmGraph& graph, const VertexPermutation& p,
                           std::size_t cap) {
    const std::size_t n = graph.vertex_count();
    if (p.size() != n) return false;
    if (n > cap) throw TooLarge("exhaustive edge check exceeds cap");
    for (std::size_t u = 0; u < n; ++u)
        for (Vertex s : graph.gen_set()) {
            Vertex v = graph.vertex_mul(s, static_cast<Vertex>(u));
            if (static_cast<Vertex>(u) < v &&
                !graph.adjacent(p(static_cast<Vertex>(u)), p(v)))
                return false;
        }
    return true;
}

PredictedAutOrder predicted_aut_order(const GroupTable& G, int m) {
    if (m < 2 || G.order() < 2) throw BadParameters("need m >= 2, |G| >= 2");
    PredictedAutOrder out;
    const bool exceptional =
        G.abelian() &&
        ((m == 2 && G.order() == 3) || (m == 3 && G.exponent() == 2));
    out.exceptional = exceptional;

    if (exceptional) {
        if (m == 2 && G.order() == 3) out.order = 1296; // (S3 wr S3)
        if (m == 3 && G.order() == 2) out.order = 384;  // (C2 wr S4)
        return out;
    }

    mpz_class order = 1;
    for (int i = 0; i < m; ++i) order *= G.order();
    order *= static_cast<long>(automorphism_group(G).size());
    if (G.abelian()) {
        for (int i = 2; i <= m + 1; ++i) order *= i;
    } else {
        order *= 2 * (m + 1);
    }
    out.order = order;
    return out;
}

std::vector<VertexPermutation> assemble_full_aut(const GcmGraph& graph) {
    const GroupTable& G = graph.group();
    const int m = graph.m();
    if (predicted_aut_order(G, m).exceptional)
        throw ExceptionalCase("parameters outside the product description");

    std::vector<VertexPermutation> gens;

    // Transfers for a generating set of G^m: group generators placed in
    // each coordinate.
    for (int i = 1; i <= m; ++i)
        for (int g : G.generators())
            gens.push_back(transfer(graph, graph.interval_vertex(g, i, i + 1)));

    // Homogeneous lifts of a small generating subset of Aut(G).
    {
        std::vector<GroupMap> auts = automorphism_group(G);
        std::vector<VertexPermutation> chosen;
        for (const GroupMap& f : auts) {
            std::vector<std::uint32_t> img(f.image.begin(), f.image.end());
            VertexPermutation p(std::move(img));
            if (p.is_identity()) continue;
            if (!chosen.empty() &&
                PermGroup(chosen, G.order()).contains(p))
                continue;
            chosen.push_back(p);
            GroupMap gm = f;
            gens.push_back(homogeneous_aut(graph, gm));
        }
    }

    if (G.abelian()) {
        for (int i = 1; i <= m; ++i) gens.push_back(gamma(graph, i));
    } else {
        gens.push_back(tau(graph));
        gens.push_back(omega(graph));
    }
    return gens;
}

mpz_class graph_canonical_aut_order(const GcmGraph& graph, std::size_t ir_cap) {
    return canonical_aut_order(graph.to_small_graph(), ir_cap);
}

bool graphs_isomorphic(const GcmGraph& a, const GcmGraph& b,
                       std::size_t ir_cap) {
    if (a.vertex_count() != b.vertex_count() || a.m() != b.m()) return false;
    if (a.degree() != b.degree()) return false;
    return small_graphs_isomorphic(a.to_small_graph(), b.to_small_graph(),
                                   ir_cap);
}

std::optional<GroupMap> extract_group_iso(const GcmGraph& a, const GcmGraph& b,
                                          const VertexPermutation& F) {
    if (F.size() != a.vertex_count() || a.vertex_count() != b.vertex_count() ||
        a.m() != b.m())
        throw NotAnIsomorphism("size mismatch");
    const std::size_t n = a.vertex_count();
    for (std::size_t u = 0; u < n; ++u)
        for (Vertex s : a.gen_set()) {
            Vertex v = a.vertex_mul(s, static_cast<Vertex>(u));
            if (static_cast<Vertex>(u) < v &&
                !b.adjacent(F(static_cast<Vertex>(u)), F(v)))
                throw NotAnIsomorphism("edge not preserved");
        }
    if (a.edge_count() != b.edge_count())
        throw NotAnIsomorphism("edge counts differ");

    // Homogeneity: identity fixed and every window mapped into itself.
    if (F(0) != 0) return std::nullopt;
    const int m = a.m();
    const int ng = a.group().order();
    for (int k = 1; k <= m; ++k)
        for (int l = k + 1; l <= m + 1; ++l)
            for (int x = 1; x < ng; ++x) {
                Vertex img = F(a.interval_vertex(x, k, l));
                if (img == 0) return std::nullopt;
                WeightDecomposition d = b.weight_decomposition(img);
                if (d.weight() != 1 || d.boundaries[0] != k ||
                    d.boundaries[1] != l)
                    return std::nullopt;
            }

    // Read f off the first window and check F coordinatewise.
    GroupMap f;
    f.domain_order = f.codomain_order = ng;
    f.image.assign(ng, 0);
    for (int x = 1; x < ng; ++x) {
        std::vector<int> t = b.decode(F(a.interval_vertex(x, 1, 2)));
        f.image[x] = t[0];
    }
    if (!f.is_bijective() || !f.is_homomorphism(a.group(), b.group()))
        return std::nullopt;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> t = a.decode(static_cast<Vertex>(v));
        for (int& x : t) x = f(x);
        if (F(static_cast<Vertex>(v)) != b.encode(t)) return std::nullopt;
    }
    return f;
}

Prop42Result verify_neighborhood_iso(const GroupTable& G, const GroupTable& H,
                                     int m, GraphCaps caps,
                                     std::size_t ir_cap) {
    if (G.order() != H.order() ||
        G.involution_count() != H.involution_count())
        return Prop42Result::PreconditionFailed;
    GcmGraph a(G, m, caps), b(H, m, caps);
    return small_graphs_isomorphic(a.identity_neighborhood(),
                                   b.identity_neighborhood(), ir_cap)
               ? Prop42Result::Holds
               : Prop42Result::Fails;
}

} // namespace gcm
