#include "gcm/trace_space.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "gcm/errors.hpp"

namespace gcm {

TraceSystem::TraceSystem(GroupTable group, int m, std::size_t exact_cap)
    : group_(std::move(group)), m_(m) {
    if (m_ < 2) throw BadParameters("m must be at least 2");
    const int n = group_.order();
    std::size_t cols = 1;
    for (int i = 0; i < m_; ++i) {
        if (cols > exact_cap / n + 1) throw TooLarge("basis exceeds exact cap");
        cols *= n;
    }
    if (cols > exact_cap) throw TooLarge("basis exceeds exact cap");
    cols_ = cols;

    for (int k = 1; k <= m_; ++k)
        for (int l = k + 1; l <= m_ + 1; ++l) {
            const int out_len = m_ - (l - k);
            const int in_len = l - k;
            std::vector<int> outside(out_len, 0), inside(in_len, 0);
            // outside runs over |G|^out_len, inside over |G|^(in_len-1)
            // with the first entry pinned to the identity.
            for (;;) {
                rows_.push_back(TraceRow{k, l, outside, inside});
                int i = static_cast<int>(inside.size()) - 1;
                while (i >= 1 && ++inside[i] == n) inside[i--] = 0;
                if (i >= 1) continue;
                int o = out_len - 1;
                while (o >= 0 && ++outside[o] == n) outside[o--] = 0;
                if (o < 0) break;
            }
        }

    support_.reserve(rows_.size());
    for (const TraceRow& r : rows_) support_.push_back(row_support(r));
}

TraceSystem build_trace_system(const GroupTable& G, int m,
                               std::size_t exact_cap) {
    return TraceSystem(G, m, exact_cap);
}

std::vector<int> TraceSystem::decode(std::uint32_t col) const {
    std::vector<int> tuple(m_);
    const int n = group_.order();
    for (int i = 0; i < m_; ++i) {
        tuple[i] = static_cast<int>(col % n);
        col /= n;
    }
    return tuple;
}

std::uint32_t TraceSystem::encode(const std::vector<int>& tuple) const {
    const int n = group_.order();
    std::uint64_t v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * n + tuple[i];
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> TraceSystem::row_support(const TraceRow& row) const {
    const int n = group_.order();
    std::vector<int> tuple(m_, 0);
    for (int i = 1; i < row.k; ++i) tuple[i - 1] = row.outside[i - 1];
    for (int i = row.l; i <= m_; ++i)
        tuple[i - 1] = row.outside[row.k - 1 + (i - row.l)];
    std::vector<std::uint32_t> cols;
    cols.reserve(n);
    for (int h = 0; h < n; ++h) {
        for (int i = row.k; i < row.l; ++i)
            tuple[i - 1] = group_.mul(h, row.inside[i - row.k]);
        cols.push_back(encode(tuple));
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

bool verify_btb_identity(const TraceSystem& system, const GcmGraph& graph) {
    if (system.col_count() != graph.vertex_count() ||
        system.m() != graph.m() ||
        system.group().order() != graph.group().order())
        throw DimensionMismatch("system and graph sizes differ");

    const std::size_t n = system.col_count();
    std::vector<std::vector<int>> btb(n, std::vector<int>(n, 0));
    for (std::size_t r = 0; r < system.row_count(); ++r) {
        const auto& sup = system.row_support(r);
        for (std::size_t i = 0; i < sup.size(); ++i)
            for (std::size_t j = 0; j < sup.size(); ++j)
                ++btb[sup[i]][sup[j]];
    }

    const int windows = system.m() * (system.m() + 1) / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int expected =
                (i == j ? windows : 0) +
                (graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))
                     ? 1
                     : 0);
            if (btb[i][j] != expected) return false;
        }
    return true;
}

std::size_t integer_matrix_rank(std::vector<std::vector<mpz_class>> a) {
    const std::size_t R = a.size();
    if (R == 0) return 0;
    const std::size_t C = a[0].size();

    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        // Sparsest row with a nonzero entry in this column.
        std::size_t pivot = R;
        std::size_t best_nnz = C + 1;
        for (std::size_t r = rank; r < R; ++r) {
            if (a[r][col] == 0) continue;
            std::size_t nnz = 0;
            for (std::size_t c = col; c < C; ++c)
                if (a[r][c] != 0) ++nnz;
            if (nnz < best_nnz) {
                best_nnz = nnz;
                pivot = r;
            }
        }
        if (pivot == R) continue;
        std::swap(a[rank], a[pivot]);
        const mpz_class p = a[rank][col];
        for (std::size_t r = rank + 1; r < R; ++r) {
            for (std::size_t c = col + 1; c < C; ++c)
                a[r][c] = (a[r][c] * p - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t rational_rank(const TraceSystem& system) {
    const std::size_t R = system.row_count(), C = system.col_count();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C, 0));
    for (std::size_t r = 0; r < R; ++r)
        for (std::uint32_t c : system.row_support(r)) a[r][c] = 1;
    return integer_matrix_rank(std::move(a));
}

std::optional<std::vector<mpq_class>> express_monomial(
    const TraceSystem& system, std::uint32_t target) {
    const std::size_t R = system.row_count(), C = system.col_count();
    if (target >= C) throw BadParameters("target column out of range");

    // Solve B^T y = e_target by Gauss-Jordan over the rationals; the
    // augmented matrix is C x (R+1).
    std::vector<std::vector<mpq_class>> a(C, std::vector<mpq_class>(R + 1, 0));
    for (std::size_t r = 0; r < R; ++r)
        for (std::uint32_t c : system.row_support(r)) a[c][r] = 1;
    a[target][R] = 1;

    std::vector<std::size_t> pivot_col(C, R);
    std::size_t row = 0;
    for (std::size_t col = 0; col < R && row < C; ++col) {
        std::size_t p = row;
        while (p < C && a[p][col] == 0) ++p;
        if (p == C) continue;
        std::swap(a[row], a[p]);
        const mpq_class inv = 1 / a[row][col];
        for (std::size_t c = col; c <= R; ++c) a[row][c] *= inv;
        for (std::size_t r = 0; r < C; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t c = col; c <= R; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    // Inconsistent when a zero row has a nonzero right-hand side.
    for (std::size_t r = row; r < C; ++r)
        if (a[r][R] != 0) return std::nullopt;

    std::vector<mpq_class> y(R, 0);
    for (std::size_t r = 0; r < row; ++r) y[pivot_col[r]] = a[r][R];
    if (!check_certificate(system, y, target))
        throw Error("internal: certificate failed back-substitution");
    return y;
}

bool check_certificate(const TraceSystem& system,
                       const std::vector<mpq_class>& coeffs,
                       std::uint32_t target) {
    if (coeffs.size() != system.row_count()) return false;
    std::map<std::uint32_t, mpq_class> acc;
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (coeffs[r] == 0) continue;
        for (std::uint32_t c : system.row_support(r)) acc[c] += coeffs[r];
    }
    for (auto& [c, v] : acc) {
        if (v == 0) continue;
        if (c != target || v != 1) return false;
    }
    return acc.count(target) && acc.at(target) == 1;
}

namespace {

TraceRow canonicalize_row(const GroupTable& G, int m, TraceRow row) {
    if (row.k < 1 || row.l <= row.k || row.l > m + 1)
        throw UnknownRow("bad window");
    if (static_cast<int>(row.outside.size()) != m - (row.l - row.k) ||
        static_cast<int>(row.inside.size()) != row.l - row.k)
        throw UnknownRow("bad block sizes");
    for (int g : row.outside)
        if (g < 0 || g >= G.order()) throw UnknownRow("element out of range");
    for (int g : row.inside)
        if (g < 0 || g >= G.order()) throw UnknownRow("element out of range");
    const int shift = G.inv(row.inside[0]);
    for (int& g : row.inside) g = G.mul(shift, g);
    return row;
}

} // namespace

bool verify_identity(const GroupTable& G, int m, const TraceIdentity& id) {
    TraceSystem system(G, m);
    if (static_cast<int>(id.target_tuple.size()) != m)
        throw UnknownRow("bad target tuple length");
    std::map<std::uint32_t, mpq_class> acc;
    for (const auto& [coeff, raw] : id.terms) {
        TraceRow row = canonicalize_row(G, m, raw);
        for (std::uint32_t c : system.row_support(row)) acc[c] += coeff;
    }
    const std::uint32_t target = system.encode(id.target_tuple);
    for (auto& [c, v] : acc)
        if (v != (c == target ? id.target_coeff : mpq_class(0))) return false;
    if (!acc.count(target) && id.target_coeff != 0) return false;
    return true;
}

TraceIdentity load_identity_fixture(const std::string& path,
                                    const GroupTable& G, int m) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture: " + path);
    nlohmann::json j;
    in >> j;

    auto elem = [&G](const std::string& name) {
        int idx = G.index_of(name);
        if (idx < 0) throw UnknownRow("unknown element name: " + name);
        return idx;
    };
    auto rational = [](const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
        q.canonicalize();
        return q;
    };

    TraceIdentity id;
    for (const auto& t : j.at("terms")) {
        TraceRow row;
        row.k = t.at("window").at(0).get<int>();
        row.l = t.at("window").at(1).get<int>();
        for (const auto& s : t.at("outside"))
            row.outside.push_back(elem(s.get<std::string>()));
        for (const auto& s : t.at("inside"))
            row.inside.push_back(elem(s.get<std::string>()));
        id.terms.emplace_back(rational(t.at("coeff").get<std::string>()),
                              std::move(row));
    }
    id.target_coeff = rational(j.at("target_coeff").get<std::string>());
    for (const auto& s : j.at("target_tuple"))
        id.target_tuple.push_back(elem(s.get<std::string>()));
    if (static_cast<int>(id.target_tuple.size()) != m)
        throw UnknownRow("bad target tuple length");
    return id;
}

} // namespace gcm
