#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gcm/graph.hpp"
#include "gcm/group.hpp"

namespace gcm {

// One trace element over the degree-m monomial basis: a window [k,l),
// the fixed assignment outside it (positions 1..k-1 then l..m) and the
// block inside, canonicalized so its first entry is the identity. The
// row expands to a 0/1 vector with exactly |G| ones, one per left
// translate of the inside block.
struct TraceRow {
    int k = 0;
    int l = 0;
    std::vector<int> outside;
    std::vector<int> inside;
};

// The full system of C(m+1,2)*|G|^(m-1) deduplicated rows over the
// |G|^m monomial basis (basis indices are the graph's vertex codec).
class TraceSystem {
  public:
    TraceSystem(GroupTable group, int m, std::size_t exact_cap = 2048);

    const GroupTable& group() const { return group_; }
    int m() const { return m_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }
    const std::vector<TraceRow>& rows() const { return rows_; }

    // Basis columns hit by a row, sorted ascending; |G| entries.
    std::vector<std::uint32_t> row_support(const TraceRow& row) const;
    const std::vector<std::uint32_t>& row_support(std::size_t idx) const {
        return support_[idx];
    }

    std::vector<int> decode(std::uint32_t col) const;
    std::uint32_t encode(const std::vector<int>& tuple) const;

  private:
    GroupTable group_;
    int m_ = 0;
    std::size_t cols_ = 0;
    std::vector<TraceRow> rows_;
    std::vector<std::vector<std::uint32_t>> support_;
};

TraceSystem build_trace_system(const GroupTable& G, int m,
                               std::size_t exact_cap = 2048);

// Exact integer check of B^T B = C(m+1,2) I + A against the graph's
// adjacency. Throws DimensionMismatch when the two objects do not come
// from the same (G, m).
bool verify_btb_identity(const TraceSystem& system, const GcmGraph& graph);

// Rank of an integer matrix over the rationals by fraction-free
// elimination, pivot rows chosen by sparsity.
std::size_t integer_matrix_rank(std::vector<std::vector<mpz_class>> a);

// Rank of B over the rationals.
std::size_t rational_rank(const TraceSystem& system);

// Exact rational y with y^T B = unit vector at the target column, or
// nullopt when the target is outside the row space.
std::optional<std::vector<mpq_class>> express_monomial(
    const TraceSystem& system, std::uint32_t target);

// Exact back-substitution check of a certificate from express_monomial.
bool check_certificate(const TraceSystem& system,
                       const std::vector<mpq_class>& coeffs,
                       std::uint32_t target);

struct TraceIdentity {
    std::vector<std::pair<mpq_class, TraceRow>> terms;
    mpq_class target_coeff;
    std::vector<int> target_tuple;
};

// Exact expansion of the left-hand side and comparison with
// target_coeff * unit(target). Rows are validated against (G, m);
// throws UnknownRow for malformed terms.
bool verify_identity(const GroupTable& G, int m, const TraceIdentity& id);

// JSON fixture: {"group": spec, "m": int, "terms": [{"coeff": "p/q",
// "window": [k,l], "outside": [names], "inside": [names]}...],
// "target_coeff": "p/q", "target_tuple": [names]}.
TraceIdentity load_identity_fixture(const std::string& path,
                                    const GroupTable& G, int m);

} // namespace gcm
