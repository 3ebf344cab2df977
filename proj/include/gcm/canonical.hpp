#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "gcm/permutation.hpp"
#include "gcm/smallgraph.hpp"

namespace gcm {

// Canonical relabeling of a graph plus the edge list it induces. Two
// graphs are isomorphic exactly when their canonical edge lists match;
// comparisons are bit-exact on the sorted lists, never on hashes.
struct CanonicalForm {
    std::vector<std::uint32_t> labeling; // vertex -> canonical position
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.edges == b.edges && a.labeling.size() == b.labeling.size();
    }
};

struct CanonicalResult {
    CanonicalForm form;
    // Automorphism generators discovered during the search; they
    // generate the full automorphism group.
    std::vector<VertexPermutation> aut_generators;
};

// Individualization-refinement search. The refinement signature is the
// pair (neighbor counts per color class, sorted common-neighbor counts
// per color class); the target cell is the smallest non-singleton,
// ties broken by color order; candidate branches are pruned by orbits
// of the automorphisms found so far.
CanonicalResult canonical_form(const SmallGraph& g, std::size_t cap = 2000);

// Order of the automorphism group, from the discovered generators.
mpz_class canonical_aut_order(const SmallGraph& g, std::size_t cap = 2000);

bool small_graphs_isomorphic(const SmallGraph& a, const SmallGraph& b,
                             std::size_t cap = 2000);

} // namespace gcm
