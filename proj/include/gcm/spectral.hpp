#pragma once

#include <cstdint>
#include <vector>

#include "gcm/graph.hpp"
#include "gcm/group.hpp"

namespace gcm {

// Integer spectrum as (eigenvalue, multiplicity) pairs, eigenvalues
// strictly descending, multiplicities positive and summing to the
// vertex count.
struct ExactSpectrum {
    std::vector<std::pair<long long, long long>> eigs;

    long long min_eigenvalue() const { return eigs.back().first; }
    long long max_eigenvalue() const { return eigs.front().first; }
    long long multiplicity_of(long long lambda) const;
};

// Exact spectrum of the graph on G^m for abelian G. Each character
// m-tuple contributes the eigenvalue -C(m+1,2) + n*w where w counts the
// windows whose character product is trivial; w is found by comparing
// prefix residue vectors, so no floating point is involved.
ExactSpectrum abelian_spectrum(const GroupTable& G, int m);

struct LambdaMinResult {
    double value = 0;
    double residual = 0; // ||A v - value v|| for the returned Ritz pair
    int iterations = 0;
};

// Smallest adjacency eigenvalue via Lanczos on -A with full
// reorthogonalization and a deterministic seeded start vector. The
// residual is computed explicitly from the Ritz vector.
LambdaMinResult lambda_min_numeric(const GcmGraph& graph,
                                   std::uint64_t seed = 1,
                                   std::size_t cap = 50000);

struct RegularityReport {
    std::size_t n = 0;
    std::size_t k = 0;              // common degree when k_regular
    long long a = -1;               // common-neighbor count over edges
    long long c = -1;               // over non-adjacent pairs (m = 2)
    std::size_t nonadjacent_pairs = 0;
    bool k_regular = false;
    bool edge_regular = false;      // k_regular and a constant
    bool strongly_regular = false;  // edge_regular and c constant (m = 2)
};

// Exhaustive scan over all vertex pairs. Requires materialized
// adjacency; throws TooLarge beyond the cap.
RegularityReport check_regularity(const GcmGraph& graph,
                                  std::size_t cap = 4096);

enum class Q26Verdict { StrictlyAbove, AtBound, Below };

struct Q26Probe {
    Q26Verdict verdict = Q26Verdict::StrictlyAbove;
    bool exact = false;      // abelian path
    double lambda_min = 0;   // exact integer when exact
    double residual = 0;     // numeric path only
    long long bound = 0;     // C(m+1,2)
};

// Compares the smallest eigenvalue against -C(m+1,2). Abelian groups
// get the exact verdict; otherwise Lanczos with a certified bracket.
// Below is returned only when the whole bracket sits strictly below
// the bound, which the positive semidefiniteness of B^T B rules out.
Q26Probe question26_probe(const GroupTable& G, int m, std::uint64_t seed = 1,
                          GraphCaps caps = {}, std::size_t numeric_cap = 50000);

} // namespace gcm
