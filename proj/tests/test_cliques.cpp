#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "gcm/cliques.hpp"
#include "gcm/morphisms.hpp"

using namespace gcm;

namespace {

// Independent clique-number oracle: enumerate every subset of the
// identity's neighborhood (usable up to ~20 candidates).
std::size_t subset_clique_number(const GcmGraph& graph) {
    const auto& gen = graph.gen_set();
    const std::size_t k = gen.size();
    REQUIRE(k <= 20);
    std::vector<std::uint32_t> rows(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (graph.adjacent(gen[i], gen[j])) rows[i] |= 1u << j;
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool clique = true;
        for (std::size_t i = 0; i < k && clique; ++i)
            if (mask & (1u << i))
                if ((mask & rows[i]) != (mask & ~(1u << i))) clique = false;
        if (clique)
            best = std::max(best,
                            static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best + 1; // plus the identity tuple
}

std::map<std::size_t, std::size_t> histogram_map(
    const std::vector<std::pair<std::size_t, std::size_t>>& hist) {
    return {hist.begin(), hist.end()};
}

} // namespace

TEST_CASE("maximum cliques through the identity") {
    SUBCASE("the square case has the special four-clique") {
        GcmGraph graph(build_group("C2"), 2);
        auto cliques = max_cliques_through_e(graph);
        REQUIRE(!cliques.empty());
        CHECK(cliques.front().vertices.size() == 4);
        // {e, (x,e), (x,x), (e,x)} appears.
        std::vector<Vertex> special{0, graph.encode({1, 0}),
                                    graph.encode({1, 1}), graph.encode({0, 1})};
        std::sort(special.begin(), special.end());
        bool found = false;
        for (const auto& rec : cliques)
            if (rec.vertices == special) found = true;
        CHECK(found);
    }
    SUBCASE("interval cliques win for a large group") {
        GcmGraph graph(build_group("C5"), 2);
        auto cliques = max_cliques_through_e(graph);
        REQUIRE(!cliques.empty());
        for (const auto& rec : cliques) {
            CHECK(rec.vertices.size() == 5);
            CHECK(rec.type == CliqueType::Interval);
        }
    }
    SUBCASE("dispersed cliques win for a large power") {
        GcmGraph graph(build_group("C3"), 4);
        auto cliques = max_cliques_through_e(graph);
        REQUIRE(!cliques.empty());
        bool dispersed = false;
        for (const auto& rec : cliques) {
            CHECK(rec.vertices.size() == 5);
            if (rec.type == CliqueType::Dispersed) dispersed = true;
        }
        CHECK(dispersed);
    }
}

TEST_CASE("clique numbers against the subset oracle") {
    const std::vector<std::pair<const char*, int>> instances = {
        {"C2", 2}, {"C3", 2}, {"C4", 2}, {"C5", 2}, {"C2", 3},
        {"C2", 4}, {"C4", 3}, {"C3", 4}, {"S3", 2}};
    for (auto [spec, m] : instances) {
        GroupTable G = build_group(spec);
        CAPTURE(spec);
        CAPTURE(m);
        GcmGraph graph(G, m);
        const std::size_t expected =
            (m == 2 && G.order() == 2)
                ? 4
                : std::max<std::size_t>(m + 1, G.order());
        CHECK(clique_number(graph) == expected);
        if (graph.gen_set().size() <= 20)
            CHECK(subset_clique_number(graph) == expected);
    }
}

TEST_CASE("classification") {
    GcmGraph graph(build_group("C4"), 3);

    SUBCASE("interval windows") {
        CliqueRecord rec;
        rec.vertices = {0};
        for (int x = 1; x < 4; ++x)
            rec.vertices.push_back(graph.interval_vertex(x, 1, 3));
        std::sort(rec.vertices.begin(), rec.vertices.end());
        CHECK(classify_clique(graph, rec) == CliqueType::Interval);
        CHECK(rec.k == 1);
        CHECK(rec.l == 3);
    }
    SUBCASE("canonical dispersed form at every pivot") {
        for (int j = 1; j <= 4; ++j) {
            CliqueRecord rec;
            rec.vertices = canonical_dispersed_clique(graph, 1, j);
            rec.vertices.push_back(0);
            std::sort(rec.vertices.begin(), rec.vertices.end());
            CAPTURE(j);
            CHECK(classify_clique(graph, rec) == CliqueType::Dispersed);
            CHECK(rec.x == 1);
            CHECK(rec.j == j);
        }
    }
    SUBCASE("order-two triangle shape") {
        // x = x^2 has order two; {x_[1,2), x_[1,3), x_[2,3)} is a clique.
        CliqueRecord rec;
        rec.vertices = {0, graph.interval_vertex(2, 1, 2),
                        graph.interval_vertex(2, 1, 3),
                        graph.interval_vertex(2, 2, 3)};
        std::sort(rec.vertices.begin(), rec.vertices.end());
        CHECK(classify_clique(graph, rec) == CliqueType::DispersedOther);
    }
    SUBCASE("non-cliques are rejected") {
        CliqueRecord rec;
        rec.vertices = {0, graph.encode({1, 0, 0}), graph.encode({2, 1, 0})};
        CHECK_THROWS_AS(classify_clique(graph, rec), NotAClique);
        CliqueRecord no_e;
        no_e.vertices = {graph.encode({1, 0, 0}), graph.encode({1, 1, 0})};
        CHECK_THROWS_AS(classify_clique(graph, no_e), NotAClique);
    }
}

TEST_CASE("every maximum clique classifies cleanly on the corpus") {
    const std::vector<std::pair<const char*, int>> instances = {
        {"C2", 2}, {"C3", 2}, {"C4", 2},    {"C5", 2},    {"S3", 2},
        {"C2", 3}, {"C4", 3}, {"C2xC2", 3}, {"C2", 4},    {"C3", 3}};
    for (auto [spec, m] : instances) {
        GcmGraph graph(build_group(spec), m);
        CAPTURE(spec);
        CAPTURE(m);
        for (const auto& rec : max_cliques_through_e(graph))
            CHECK(rec.type != CliqueType::MixedInvalid);
    }
}

TEST_CASE("neighbor graphs separate the clique types") {
    SUBCASE("interval cliques have regular neighbor graphs") {
        for (const char* spec : {"C4", "C2xC2"}) {
            GcmGraph graph(build_group(spec), 3);
            CAPTURE(spec);
            for (const auto& rec : max_cliques_through_e(graph)) {
                if (rec.type != CliqueType::Interval) continue;
                NeighborGraphReport rep = neighbor_graph(graph, rec);
                CHECK(rep.regular);
                CHECK(rep.degree == 4); // 2m - 2
            }
        }
    }
    SUBCASE("dispersed cliques with a high-order element") {
        GcmGraph graph(build_group("C4"), 3);
        bool seen = false;
        for (const auto& rec : max_cliques_through_e(graph)) {
            if (rec.type != CliqueType::Dispersed) continue;
            if (graph.group().elem_order(rec.x) == 2) continue;
            seen = true;
            NeighborGraphReport rep = neighbor_graph(graph, rec);
            CHECK_FALSE(rep.regular);
            // Degrees 3m-4, 2m-2, 2m-3 with counts m, m(m-1), m(m-2).
            auto hist = histogram_map(rep.degree_histogram);
            CHECK(hist ==
                  std::map<std::size_t, std::size_t>{{5, 3}, {4, 6}, {3, 3}});
        }
        CHECK(seen);
    }
    SUBCASE("dispersed cliques with an order-two element") {
        for (const char* spec : {"C4", "C2xC2"}) {
            GcmGraph graph(build_group(spec), 3);
            CAPTURE(spec);
            bool seen = false;
            for (const auto& rec : max_cliques_through_e(graph)) {
                if (rec.type != CliqueType::Dispersed) continue;
                if (graph.group().elem_order(rec.x) != 2) continue;
                seen = true;
                NeighborGraphReport rep = neighbor_graph(graph, rec);
                CHECK_FALSE(rep.regular);
                // Degrees 2m-4 and 2m-3 with counts m(m+1)/2 - m and
                // (|G|-2) m.
                auto hist = histogram_map(rep.degree_histogram);
                CHECK(hist ==
                      std::map<std::size_t, std::size_t>{{2, 3}, {3, 6}});
            }
            CHECK(seen);
        }
    }
}

TEST_CASE("the order-three square swaps clique types") {
    GcmGraph graph(build_group("C3"), 2);
    // The interval clique {e, (x,x), (x^2,x^2)}.
    CliqueRecord interval;
    interval.vertices = {0, graph.encode({1, 1}), graph.encode({2, 2})};
    CHECK(classify_clique(graph, interval) == CliqueType::Interval);

    // Swap (x,e) with (x^2,x^2): a graph automorphism.
    std::vector<std::uint32_t> img(9);
    for (std::uint32_t i = 0; i < 9; ++i) img[i] = i;
    std::swap(img[graph.encode({1, 0})], img[graph.encode({2, 2})]);
    VertexPermutation swap_perm(img);
    REQUIRE(is_graph_automorphism(graph, swap_perm));

    CliqueRecord image;
    for (Vertex v : interval.vertices) image.vertices.push_back(swap_perm(v));
    std::sort(image.vertices.begin(), image.vertices.end());
    CliqueType t = classify_clique(graph, image);
    CHECK(t != CliqueType::Interval);
}
