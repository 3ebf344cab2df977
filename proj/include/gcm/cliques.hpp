#pragma once

#include <vector>

#include "gcm/graph.hpp"
#include "gcm/smallgraph.hpp"

namespace gcm {

enum class CliqueType { Interval, Dispersed, DispersedOther, MixedInvalid };

struct CliqueRecord {
    std::vector<Vertex> vertices; // sorted, identity included
    CliqueType type = CliqueType::MixedInvalid;
    int x = 0, j = 0; // Dispersed(x, j) parameters
    int k = 0, l = 0; // Interval window
};

// All maximum cliques containing the identity tuple, by pivoting
// Bron-Kerbosch restricted to the identity's neighborhood (right
// transfers make that sufficient). Records come back classified.
std::vector<CliqueRecord> max_cliques_through_e(const GcmGraph& graph,
                                                std::size_t cap = 4096);

std::size_t clique_number(const GcmGraph& graph, std::size_t cap = 4096);

// Interval when all non-identity vertices share one window;
// Dispersed(x, j) when they form the canonical m-element dispersed
// clique at pivot j; DispersedOther covers the m = 3 order-2 triangle
// and the m = 2 shapes the classification leaves open.
CliqueType classify_clique(const GcmGraph& graph, CliqueRecord& record);

// The canonical dispersed clique: inverses of x ending at j, copies of
// x starting at j.
std::vector<Vertex> canonical_dispersed_clique(const GcmGraph& graph, int x,
                                               int j);

struct NeighborGraphReport {
    std::vector<Vertex> vertices; // neighbors of Q* inside V(e), sorted
    SmallGraph graph;
    std::vector<std::pair<std::size_t, std::size_t>> degree_histogram;
    bool regular = false;
    std::size_t degree = 0; // when regular
};

// Neighbors of the clique's non-identity part within the identity's
// neighborhood subgraph, with induced edges and degrees.
NeighborGraphReport neighbor_graph(const GcmGraph& graph,
                                   const CliqueRecord& record);

} // namespace gcm
