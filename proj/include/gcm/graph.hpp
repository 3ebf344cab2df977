#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcm/bitset.hpp"
#include "gcm/group.hpp"
#include "gcm/smallgraph.hpp"

namespace gcm {

using Vertex = std::uint32_t;

// A window [k,l) with 1 <= k < l <= m+1 and a non-identity element x:
// the tuple with x in coordinates k..l-1 and the identity elsewhere.
struct IntervalElement {
    int x = 0;
    int k = 0;
    int l = 0;
};

// The unique factorization of a non-identity tuple into maximal constant
// blocks spanning its support: boundaries i_1 < ... < i_{k+1} (1-based,
// in [1, m+1]) and block values x_1..x_k with x_1 != e != x_k and
// consecutive values distinct. weight() is the number of blocks.
struct WeightDecomposition {
    std::vector<int> boundaries;
    std::vector<int> values;

    int weight() const { return static_cast<int>(values.size()); }
};

struct GraphCaps {
    std::size_t materialize = 4096; // bit-set adjacency rows up to here
    std::size_t hard = 1000000;     // refuse to build beyond this
};

// The Cayley graph on G^m whose connection set is the union of all
// intervals. Vertices are dense indices encoding tuples in mixed radix
// with the first coordinate least significant; vertex 0 is the identity
// tuple. Immutable after construction.
class GcmGraph {
  public:
    GcmGraph(GroupTable group, int m, GraphCaps caps = {});

    const GroupTable& group() const { return group_; }
    int m() const { return m_; }
    std::size_t vertex_count() const { return vcount_; }
    std::size_t degree() const { return gen_set_.size(); }
    std::size_t edge_count() const { return vcount_ * degree() / 2; }
    bool materialized() const { return !rows_.empty(); }

    // Tuple <-> index codecs.
    std::vector<int> decode(Vertex v) const;
    Vertex encode(const std::vector<int>& tuple) const;

    Vertex vertex_mul(Vertex a, Vertex b) const;
    Vertex vertex_inv(Vertex a) const;

    Vertex interval_vertex(int x, int k, int l) const;

    // All interval elements, in (k,l) lexicographic then element order.
    const std::vector<Vertex>& gen_set() const { return gen_set_; }
    const std::vector<IntervalElement>& gen_set_params() const {
        return gen_params_;
    }

    WeightDecomposition weight_decomposition(Vertex v) const;
    int weight(Vertex v) const;

    bool adjacent(Vertex u, Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    const DynBitset& neighbor_row(Vertex v) const; // materialized mode only

    std::vector<Vertex> common_neighbors(Vertex u, Vertex v) const;

    std::string vertex_name(Vertex v) const;

    // Dense copy of the whole graph (for canonical labeling and the
    // induced-subgraph machinery); requires materialized().
    SmallGraph to_small_graph() const;

    // Induced subgraph on the neighbors of the identity tuple, with its
    // vertex list in gen_set order.
    SmallGraph identity_neighborhood() const;

  private:
    bool weight_is_one(Vertex v) const;

    GroupTable group_;
    int m_ = 0;
    std::size_t vcount_ = 0;
    std::vector<Vertex> gen_set_;
    std::vector<IntervalElement> gen_params_;
    std::vector<DynBitset> rows_;
};

GcmGraph build_graph(const GroupTable& G, int m, GraphCaps caps = {});

// Case analysis for when the product of two interval elements lands in
// the connection set again: same window with h != g^-1, same element
// with touching windows, or inverse element with one shared endpoint.
// Agrees with the weight-1 test on the product by construction.
bool interval_product_in_S(const GcmGraph& graph, const IntervalElement& h,
                           const IntervalElement& g);

// Expected |V(e) ^ V(g)| for a weight-3 vertex with block values
// (x, y, z); total over all shapes, always one of {0,1,2,4,6}.
int expected_weight3_common(const GroupTable& G, int x, int y, int z);

struct Weight3Profile {
    // count value -> number of weight-3 vertices with that many common
    // neighbors with the identity tuple.
    std::vector<std::pair<int, std::size_t>> histogram;
    bool matches_case_table = false; // every vertex matched its predicted count
};

Weight3Profile weight3_profile(const GcmGraph& graph);

// Induced subgraph on {x_[k,l)} u {x^-1_[k,l)} together with its vertex
// list. Throws IdentityElement for x = 0.
struct IntervalSubgraph {
    std::vector<Vertex> vertices;
    SmallGraph graph;
};

IntervalSubgraph interval_subgraph(const GcmGraph& graph, int x);

// The graph on the C(m+1,2) windows, adjacent when they share exactly
// one endpoint, plus its complement (adjacent when disjoint).
struct IntervalMetaGraph {
    std::vector<std::pair<int, int>> windows; // (k,l) lexicographic
    SmallGraph graph;
    SmallGraph complement;
};

IntervalMetaGraph interval_meta_graph(int m);

} // namespace gcm
