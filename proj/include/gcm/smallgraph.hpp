#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gcm/bitset.hpp"

namespace gcm {

// Dense undirected graph on [0, n) with bit-set rows. Workhorse for
// induced subgraphs, the window meta-graph and the canonical-labeling
// engine.
class SmallGraph {
  public:
    SmallGraph() = default;
    explicit SmallGraph(std::size_t n);

    std::size_t size() const { return n_; }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const {
        return rows_[u].test(v);
    }
    const DynBitset& row(std::size_t u) const { return rows_[u]; }

    std::size_t degree(std::size_t u) const { return rows_[u].count(); }
    std::size_t edge_count() const;

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    // Degree -> vertex count.
    std::vector<std::pair<std::size_t, std::size_t>> degree_histogram() const;
    bool regular(std::size_t* degree_out = nullptr) const;

    std::size_t common_count(std::size_t u, std::size_t v) const {
        return rows_[u].and_count(rows_[v]);
    }

    SmallGraph complement() const;
    SmallGraph induced(const std::vector<std::size_t>& verts) const;

    // Length of a shortest cycle, or 0 for a forest.
    std::size_t girth() const;
    // Largest finite eccentricity; 0 for n <= 1, SIZE_MAX if disconnected.
    std::size_t diameter() const;

  private:
    std::size_t n_ = 0;
    std::vector<DynBitset> rows_;
};

} // namespace gcm
