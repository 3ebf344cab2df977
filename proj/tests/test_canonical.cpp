#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "gcm/canonical.hpp"
#include "gcm/graph.hpp"
#include "gcm/morphisms.hpp"

using namespace gcm;

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = s;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SmallGraph cycle(std::size_t n) {
    SmallGraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SmallGraph complete(std::size_t n) {
    SmallGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<std::size_t>& perm) {
    SmallGraph out(g.size());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace

TEST_CASE("automorphism counts of reference graphs") {
    CHECK(canonical_aut_order(complete(4)) == 24);
    CHECK(canonical_aut_order(cycle(5)) == 10);
    CHECK(canonical_aut_order(cycle(6)) == 12);

    SmallGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(canonical_aut_order(path) == 2);

    SmallGraph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK(canonical_aut_order(two_edges) == 8);

    // The disjoint-pair graph on the ten 2-subsets of a 5-set.
    SmallGraph petersen = interval_meta_graph(4).complement;
    CHECK(canonical_aut_order(petersen) == 120);
}

TEST_CASE("canonical form is a fixed point") {
    for (const SmallGraph& g :
         {cycle(7), complete(5), interval_meta_graph(4).complement}) {
        CanonicalResult r = canonical_form(g);
        std::vector<std::size_t> perm(r.form.labeling.begin(),
                                      r.form.labeling.end());
        SmallGraph canon = relabel(g, perm);
        CanonicalResult again = canonical_form(canon);
        CHECK(again.form.edges == r.form.edges);
    }
}

TEST_CASE("fingerprints are relabeling invariants") {
    std::uint64_t seed = 5;
    for (const SmallGraph& g :
         {cycle(8), interval_meta_graph(3).graph,
          GcmGraph(build_group("C3"), 2).to_small_graph()}) {
        CanonicalResult base = canonical_form(g);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<std::size_t> perm(g.size());
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[splitmix(seed) % i]);
            CanonicalResult shuffled = canonical_form(relabel(g, perm));
            CHECK(shuffled.form.edges == base.form.edges);
        }
    }
}

TEST_CASE("non-isomorphic regular pairs are separated") {
    // Both 2-regular on six vertices.
    SmallGraph hexagon = cycle(6);
    SmallGraph triangles(6);
    triangles.add_edge(0, 1);
    triangles.add_edge(1, 2);
    triangles.add_edge(0, 2);
    triangles.add_edge(3, 4);
    triangles.add_edge(4, 5);
    triangles.add_edge(3, 5);
    CHECK_FALSE(small_graphs_isomorphic(hexagon, triangles));
    CHECK(small_graphs_isomorphic(hexagon, cycle(6)));
}

TEST_CASE("exceptional instances match their known automorphism orders") {
    // Complement of 4 disjoint edges: the order is 2^4 * 4!.
    GcmGraph g32(build_group("C2"), 3);
    CHECK(graph_canonical_aut_order(g32) == 384);

    // Complement of 3 disjoint triangles: the order is 6^3 * 6.
    GcmGraph g23(build_group("C3"), 2);
    CHECK(graph_canonical_aut_order(g23) == 1296);
}

namespace {

SmallGraph random_graph(std::size_t n, std::uint64_t& seed) {
    SmallGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (splitmix(seed) & 1) g.add_edge(u, v);
    return g;
}

// All permutations of at most 7 points, as an automorphism oracle.
long brute_force_aut_count(const SmallGraph& g) {
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool aut = true;
        for (std::size_t u = 0; u < g.size() && aut; ++u)
            for (std::size_t v = u + 1; v < g.size() && aut; ++v)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v]))
                    aut = false;
        if (aut) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool brute_force_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool iso = true;
        for (std::size_t u = 0; u < a.size() && iso; ++u)
            for (std::size_t v = u + 1; v < a.size() && iso; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v]))
                    iso = false;
        if (iso) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("random graphs against the all-permutations oracle") {
    std::uint64_t seed = 99;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + splitmix(seed) % 4; // 4..7 vertices
        SmallGraph g = random_graph(n, seed);
        CAPTURE(trial);
        CHECK(canonical_aut_order(g) == brute_force_aut_count(g));
    }
}

TEST_CASE("symmetric structured graphs against the oracle") {
    // Disjoint unions and circulants force uneven refinement paths.
    SmallGraph two_k4(8);
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = u + 1; v < 4; ++v) {
            two_k4.add_edge(u, v);
            two_k4.add_edge(u + 4, v + 4);
        }
    CHECK(canonical_aut_order(two_k4) == brute_force_aut_count(two_k4));
    CHECK(canonical_aut_order(two_k4) == 1152); // (S4 x S4) x C2

    SmallGraph k3_c5(8);
    k3_c5.add_edge(0, 1);
    k3_c5.add_edge(1, 2);
    k3_c5.add_edge(0, 2);
    for (std::size_t i = 0; i < 5; ++i)
        k3_c5.add_edge(3 + i, 3 + (i + 1) % 5);
    CHECK(canonical_aut_order(k3_c5) == brute_force_aut_count(k3_c5));
    CHECK(canonical_aut_order(k3_c5) == 60); // S3 x D5

    for (auto offsets : {std::vector<std::size_t>{1, 2},
                         std::vector<std::size_t>{1, 4},
                         std::vector<std::size_t>{2, 4},
                         std::vector<std::size_t>{1, 2, 3}}) {
        SmallGraph circ(8);
        for (std::size_t v = 0; v < 8; ++v)
            for (std::size_t o : offsets) circ.add_edge(v, (v + o) % 8);
        CHECK(canonical_aut_order(circ) == brute_force_aut_count(circ));
    }

    std::uint64_t seed = 1234;
    for (int trial = 0; trial < 12; ++trial) {
        SmallGraph g = random_graph(8, seed);
        CAPTURE(trial);
        CHECK(canonical_aut_order(g) == brute_force_aut_count(g));
    }
}

TEST_CASE("random pairs against the all-permutations isomorphism oracle") {
    std::uint64_t seed = 7;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 5 + splitmix(seed) % 2; // 5..6 vertices
        SmallGraph a = random_graph(n, seed);
        SmallGraph b = random_graph(n, seed);
        CAPTURE(trial);
        CHECK(small_graphs_isomorphic(a, b) == brute_force_isomorphic(a, b));
    }
}

TEST_CASE("discovered generators are genuine automorphisms") {
    GcmGraph graph(build_group("C4"), 2);
    SmallGraph g = graph.to_small_graph();
    CanonicalResult r = canonical_form(g);
    for (const auto& p : r.aut_generators) {
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t v = u + 1; v < g.size(); ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(p(u), p(v)));
    }
    CHECK(canonical_aut_order(g) == 192);
}
