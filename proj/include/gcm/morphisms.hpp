#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "gcm/canonical.hpp"
#include "gcm/graph.hpp"
#include "gcm/group.hpp"
#include "gcm/permutation.hpp"

namespace gcm {

// Right multiplication by g; an automorphism for every group.
VertexPermutation transfer(const GcmGraph& graph, Vertex g);

// Coordinatewise application of a group automorphism; fixes every
// interval. Throws NotAnAutomorphism unless f is a bijective
// homomorphism of the graph's group.
VertexPermutation homogeneous_aut(const GcmGraph& graph, const GroupMap& f);

// The coordinate move sending g_i to g_{i-1} g_i^-1 g_{i+1} (with
// g_0 = g_{m+1} = e). Always a permutation of the vertex set; a graph
// automorphism exactly when the group is abelian.
VertexPermutation gamma(const GcmGraph& graph, int i);

VertexPermutation tau(const GcmGraph& graph);   // coordinate reversal
VertexPermutation omega(const GcmGraph& graph); // order-(m+1) twist
VertexPermutation epsilon(const GcmGraph& graph); // vertex-wise inversion

// The commuting involutions whose product is epsilon * tau, built from
// the gamma generators by the odd/even recursion. Abelian groups only.
struct TauFamily {
    std::vector<VertexPermutation> tau_i;
    VertexPermutation epsilon;
    VertexPermutation tau;
};
TauFamily epsilon_and_tau_i(const GcmGraph& graph);

// Exhaustive edge-preservation check.
bool is_graph_automorphism(const GcmGraph& graph, const VertexPermutation& p,
                           std::size_t cap = 4096);

struct PredictedAutOrder {
    std::optional<mpz_class> order;
    bool exceptional = false;
};

// |G|^m * |Aut(G)| * (m+1)! for abelian groups, |G|^m * |Aut(G)| * 2(m+1)
// otherwise. The abelian cases (m = 2, |G| = 3) and (m = 3, exponent 2)
// fall outside the formula; the two with known orders get them, the
// rest report no prediction.
PredictedAutOrder predicted_aut_order(const GroupTable& G, int m);

// Generators of the full automorphism group: transfers for a generating
// set of G^m, homogeneous lifts of Aut(G) generators, and the gamma
// family (abelian) or tau and omega (non-abelian). Refuses exceptional
// parameters with ExceptionalCase.
std::vector<VertexPermutation> assemble_full_aut(const GcmGraph& graph);

// Canonical-labeling route to |Aut| of the graph; the only engine that
// covers the exceptional parameter sets.
mpz_class graph_canonical_aut_order(const GcmGraph& graph,
                                    std::size_t ir_cap = 2000);

bool graphs_isomorphic(const GcmGraph& a, const GcmGraph& b,
                       std::size_t ir_cap = 2000);

// Reads the group isomorphism off a homogeneous graph isomorphism
// (identity goes to identity, every window maps into the same window),
// verifying F = f x ... x f exactly. Throws NotAnIsomorphism when F is
// not even a graph isomorphism; returns nullopt when F is one but is
// not homogeneous.
std::optional<GroupMap> extract_group_iso(const GcmGraph& a, const GcmGraph& b,
                                          const VertexPermutation& F);

enum class Prop42Result { Holds, Fails, PreconditionFailed };

// Equal order and equal involution counts force isomorphic identity
// neighborhoods; checked with the canonical-labeling engine.
Prop42Result verify_neighborhood_iso(const GroupTable& G, const GroupTable& H,
                                     int m, GraphCaps caps = {},
                                     std::size_t ir_cap = 2000);

} // namespace gcm
