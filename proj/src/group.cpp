#include "gcm/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gcm {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

} // namespace

GroupTable GroupTable::from_table(std::vector<std::vector<int>> mult,
                                  std::vector<std::string> names) {
    const int n = static_cast<int>(mult.size());
    if (n < 2) throw NotAGroup("group order must be at least 2");
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != n)
            throw NotAGroup("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw NotAGroup("table entry out of range");
    }

    // Locate the two-sided identity.
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mult[e][a] == a && mult[a][e] == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw NotAGroup("no identity element");

    if (id != 0) {
        // Relabel so the identity sits at index 0.
        std::vector<int> newof(n);
        for (int i = 0; i < n; ++i) newof[i] = i;
        std::swap(newof[0], newof[id]);
        std::vector<int> oldof = newof; // swap is an involution
        std::vector<std::vector<int>> m2(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                m2[a][b] = newof[mult[oldof[a]][oldof[b]]];
        if (!names.empty()) {
            std::vector<std::string> n2(n);
            for (int a = 0; a < n; ++a) n2[a] = names[oldof[a]];
            names = std::move(n2);
        }
        mult = std::move(m2);
    }

    GroupTable G;
    G.n_ = n;
    G.mult_ = std::move(mult);
    if (names.empty()) {
        names.resize(n);
        names[0] = "e";
        for (int i = 1; i < n; ++i) names[i] = "g" + std::to_string(i);
    }
    G.names_ = std::move(names);
    G.finish_construction();
    return G;
}

void GroupTable::finish_construction() {
    const int n = n_;
    if (n < 2) throw NotAGroup("group order must be at least 2");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
                    throw NotAGroup("multiplication is not associative");

    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mult_[a][b] == 0 && mult_[b][a] == 0) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw NotAGroup("element without two-sided inverse");
    }

    elem_orders_.assign(n, 0);
    long long exp = 1;
    for (int a = 0; a < n; ++a) {
        int k = 1, p = a;
        while (p != 0) {
            p = mult_[p][a];
            ++k;
        }
        elem_orders_[a] = k;
        exp = lcm_ll(exp, k);
    }
    exponent_ = static_cast<int>(exp);

    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mult_[a][b] != mult_[b][a]) {
                abelian_ = false;
                break;
            }

    class_sizes_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        std::set<int> cls;
        for (int g = 0; g < n; ++g) cls.insert(mult_[mult_[inv_[g]][a]][g]);
        class_sizes_[a] = static_cast<int>(cls.size());
    }

    // Greedy generating sequence.
    std::vector<char> in(n, 0);
    in[0] = 1;
    int covered = 1;
    for (int a = 1; a < n && covered < n; ++a) {
        if (in[a]) continue;
        generators_.push_back(a);
        std::vector<int> sub = generated_subgroup(generators_);
        std::fill(in.begin(), in.end(), 0);
        for (int s : sub) in[s] = 1;
        covered = static_cast<int>(sub.size());
    }
}

int GroupTable::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

int GroupTable::power(int a, int k) const {
    int r = 0;
    int base = k >= 0 ? a : inv_[a];
    long long e = k >= 0 ? k : -static_cast<long long>(k);
    e %= elem_orders_[a];
    for (long long i = 0; i < e; ++i) r = mult_[r][base];
    return r;
}

std::vector<int> GroupTable::center() const {
    std::vector<int> z;
    for (int a = 0; a < n_; ++a) {
        bool central = true;
        for (int g = 0; g < n_ && central; ++g)
            central = mult_[a][g] == mult_[g][a];
        if (central) z.push_back(a);
    }
    return z;
}

int GroupTable::involution_count() const {
    int c = 0;
    for (int a = 1; a < n_; ++a)
        if (elem_orders_[a] == 2) ++c;
    return c;
}

std::vector<int> GroupTable::generated_subgroup(
    const std::vector<int>& gens) const {
    std::vector<char> in(n_, 0);
    in[0] = 1;
    std::vector<int> elems{0};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (int g : gens) {
            int p = mult_[elems[head]][g];
            if (!in[p]) {
                in[p] = 1;
                elems.push_back(p);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

// ---------------------------------------------------------------------------
// Group spec parsing and atomic builders.

namespace {

struct NamedTable {
    std::vector<std::vector<int>> mult;
    std::vector<std::string> names;
};

NamedTable make_cyclic(int n, const std::string& letter) {
    NamedTable t;
    t.mult.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.mult[i][j] = (i + j) % n;
    t.names.resize(n);
    t.names[0] = "e";
    for (int i = 1; i < n; ++i)
        t.names[i] = i == 1 ? letter : letter + "^" + std::to_string(i);
    return t;
}

NamedTable make_dihedral(int n, const std::string& tick) {
    // Elements r^i s^j with s r = r^-1 s; index = i + n*j.
    const int N = 2 * n;
    NamedTable t;
    t.mult.assign(N, std::vector<int>(N));
    auto idx = [n](int i, int j) { return i + n * j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < 2; ++l) {
                    int ii = ((j ? i - k : i + k) % n + n) % n;
                    t.mult[idx(i, j)][idx(k, l)] = idx(ii, j ^ l);
                }
    const std::string r = "r" + tick, s = "s" + tick;
    t.names.resize(N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string nm;
            if (i == 1)
                nm = r;
            else if (i > 1)
                nm = r + "^" + std::to_string(i);
            if (j) nm += nm.empty() ? s : "*" + s;
            t.names[idx(i, j)] = nm.empty() ? "e" : nm;
        }
    return t;
}

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool perm_is_even(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

std::string cycle_name(const std::vector<int>& p, const std::string& tick) {
    const int k = static_cast<int>(p.size());
    std::vector<char> seen(k, 0);
    std::string out;
    for (int i = 0; i < k; ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            out += std::to_string(j + 1);
            j = p[j];
        }
        out += ")";
    }
    if (out.empty()) return "e";
    return out + tick;
}

NamedTable make_symmetric(int k, bool even_only, const std::string& tick) {
    std::vector<std::vector<int>> perms;
    for (auto& p : all_permutations(k))
        if (!even_only || perm_is_even(p)) perms.push_back(p);
    const int N = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < N; ++i) index[perms[i]] = i;
    NamedTable t;
    t.mult.assign(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            t.mult[a][b] = index.at(c);
        }
    t.names.resize(N);
    for (int i = 0; i < N; ++i) t.names[i] = cycle_name(perms[i], tick);
    return t;
}

NamedTable make_quaternion(const std::string& tick) {
    // Index = 2*unit + sign with units 1,i,j,k.
    auto u = [](int idx) { return idx >> 1; };
    auto sgn = [](int idx) { return idx & 1; };
    // unit_mul[a][b] = (unit, extra sign) for a*b over {1,i,j,k}
    static const int unit_of[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_of[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    NamedTable t;
    t.mult.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int unit = unit_of[u(a)][u(b)];
            int sign = sgn(a) ^ sgn(b) ^ sign_of[u(a)][u(b)];
            t.mult[a][b] = 2 * unit + sign;
        }
    const std::string base[4] = {"e", "i" + tick, "j" + tick, "k" + tick};
    t.names.resize(8);
    for (int a = 0; a < 8; ++a) {
        std::string nm = u(a) == 0 ? (sgn(a) ? "-1" : "e")
                                   : (sgn(a) ? "-" + base[u(a)] : base[u(a)]);
        t.names[a] = nm;
    }
    return t;
}

NamedTable direct_product(const NamedTable& A, const NamedTable& B) {
    const int na = static_cast<int>(A.mult.size());
    const int nb = static_cast<int>(B.mult.size());
    NamedTable t;
    t.mult.assign(na * nb, std::vector<int>(na * nb));
    auto idx = [na](int a, int b) { return a + na * b; };
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    t.mult[idx(a1, b1)][idx(a2, b2)] =
                        idx(A.mult[a1][a2], B.mult[b1][b2]);
    t.names.resize(na * nb);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
            const std::string &sa = A.names[a], &sb = B.names[b];
            std::string nm;
            if (sa == "e" && sb == "e")
                nm = "e";
            else if (sa == "e")
                nm = sb;
            else if (sb == "e")
                nm = sa;
            else
                nm = sa + "*" + sb;
            t.names[idx(a, b)] = nm;
        }
    return t;
}

int parse_int(const std::string& s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("missing order in group spec: " + s);
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("bad number in group spec: " + s);
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(s.substr(pos), &used);
    } catch (const std::exception&) {
        throw ParseError("bad number in group spec: " + s);
    }
    if (pos + used != s.size())
        throw ParseError("trailing characters in group spec: " + s);
    return v;
}

NamedTable build_atom(const std::string& atom, int position, int noncyclic_seen,
                      int cap) {
    static const char* letters = "xyzwvut";
    if (atom.empty()) throw ParseError("empty factor in group spec");
    const std::string tick(noncyclic_seen, '\'');
    char kind = atom[0];
    if (atom == "Q8") return make_quaternion(tick);
    int k = parse_int(atom, 1);
    switch (kind) {
        case 'C': {
            if (k < 2) throw ParseError("cyclic factor must have order >= 2");
            if (k > cap) throw TooLarge("group order exceeds cap");
            std::string letter(1, letters[position % 7]);
            return make_cyclic(k, letter);
        }
        case 'D': {
            if (k < 1) throw ParseError("dihedral factor needs n >= 1");
            if (2 * k > cap) throw TooLarge("group order exceeds cap");
            return make_dihedral(k, tick);
        }
        case 'S':
        case 'A': {
            if (k < 2 || k > 5)
                throw ParseError("permutation group degree out of range");
            long long ord = 1;
            for (int i = 2; i <= k; ++i) ord *= i;
            if (kind == 'A') ord /= 2;
            if (ord > cap) throw TooLarge("group order exceeds cap");
            if (ord < 2) throw ParseError("factor must have order >= 2");
            return make_symmetric(k, kind == 'A', tick);
        }
        default:
            throw ParseError("unknown group kind: " + atom);
    }
}

} // namespace

GroupTable build_group(const std::string& spec, int cap) {
    if (spec.rfind("table:", 0) == 0)
        return build_group_from_csv(spec.substr(6), cap);

    std::vector<std::string> atoms;
    std::string cur;
    for (char c : spec) {
        if (c == 'x') {
            atoms.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    atoms.push_back(cur);

    NamedTable acc;
    int noncyclic = 0;
    for (int i = 0; i < static_cast<int>(atoms.size()); ++i) {
        bool cyclic = !atoms[i].empty() && atoms[i][0] == 'C';
        NamedTable part = build_atom(atoms[i], i, cyclic ? 0 : noncyclic, cap);
        if (!cyclic) ++noncyclic;
        if (i == 0) {
            acc = std::move(part);
        } else {
            if (static_cast<long long>(acc.mult.size()) *
                    static_cast<long long>(part.mult.size()) >
                cap)
                throw TooLarge("group order exceeds cap");
            acc = direct_product(acc, part);
        }
    }
    if (static_cast<int>(acc.mult.size()) > cap)
        throw TooLarge("group order exceeds cap");
    return GroupTable::from_table(std::move(acc.mult), std::move(acc.names));
}

GroupTable build_group_from_csv(const std::string& path, int cap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file: " + path);
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                throw ParseError("bad table entry: " + cell);
            }
        }
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) > cap)
        throw TooLarge("group order exceeds cap");
    return GroupTable::from_table(std::move(rows));
}

// ---------------------------------------------------------------------------
// Maps, automorphisms, isomorphisms.

GroupMap GroupMap::identity(int n) {
    GroupMap f;
    f.domain_order = f.codomain_order = n;
    f.image.resize(n);
    std::iota(f.image.begin(), f.image.end(), 0);
    return f;
}

bool GroupMap::is_homomorphism(const GroupTable& dom,
                               const GroupTable& cod) const {
    if (dom.order() != domain_order || cod.order() != codomain_order)
        return false;
    for (int a = 0; a < domain_order; ++a)
        for (int b = 0; b < domain_order; ++b)
            if (image[dom.mul(a, b)] != cod.mul(image[a], image[b]))
                return false;
    return true;
}

bool GroupMap::is_bijective() const {
    if (domain_order != codomain_order) return false;
    std::vector<char> hit(codomain_order, 0);
    for (int v : image) {
        if (v < 0 || v >= codomain_order || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

namespace {

// Backtracking over images of a generating sequence. Works for both
// Aut(G) (H = G) and isomorphism search; candidates are pruned by
// element order and conjugacy class size.
struct IsoSearch {
    const GroupTable& G;
    const GroupTable& H;
    bool stop_at_first;
    std::vector<GroupMap> found;

    std::vector<int> gens;
    std::vector<std::vector<int>> candidates;

    explicit IsoSearch(const GroupTable& g, const GroupTable& h, bool first)
        : G(g), H(h), stop_at_first(first) {
        gens = G.generators();
        candidates.resize(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (int b = 0; b < H.order(); ++b)
                if (H.elem_order(b) == G.elem_order(gens[i]) &&
                    H.class_sizes()[b] == G.class_sizes()[gens[i]])
                    candidates[i].push_back(b);
        }
    }

    struct State {
        std::vector<int> img;      // -1 where unknown
        std::vector<char> used;    // image elements taken
        std::vector<int> known;    // domain elements with known image
    };

    // Extends the partial map with gen -> b and closes under products.
    // Returns false on any conflict.
    bool extend(State& st, int gen, int b) {
        if (st.img[gen] != -1) return st.img[gen] == b;
        if (st.used[b]) return false;
        std::vector<int> queue{gen};
        st.img[gen] = b;
        st.used[b] = 1;
        st.known.push_back(gen);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int c = queue[head];
            // Products with every currently known element, both orders.
            for (std::size_t i = 0; i < st.known.size(); ++i) {
                int a = st.known[i];
                for (auto [d, fd] :
                     {std::pair{G.mul(a, c), H.mul(st.img[a], st.img[c])},
                      std::pair{G.mul(c, a), H.mul(st.img[c], st.img[a])}}) {
                    if (st.img[d] == -1) {
                        if (st.used[fd]) return false;
                        st.img[d] = fd;
                        st.used[fd] = 1;
                        st.known.push_back(d);
                        queue.push_back(d);
                    } else if (st.img[d] != fd) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void dfs(const State& st, std::size_t level) {
        if (!found.empty() && stop_at_first) return;
        if (level == gens.size()) {
            if (static_cast<int>(st.known.size()) != G.order()) return;
            GroupMap f;
            f.domain_order = G.order();
            f.codomain_order = H.order();
            f.image = st.img;
            if (f.is_bijective() && f.is_homomorphism(G, H))
                found.push_back(std::move(f));
            return;
        }
        for (int b : candidates[level]) {
            State next = st;
            if (extend(next, gens[level], b)) dfs(next, level + 1);
            if (!found.empty() && stop_at_first) return;
        }
    }

    void run() {
        State st;
        st.img.assign(G.order(), -1);
        st.used.assign(H.order(), 0);
        st.img[0] = 0;
        st.used[0] = 1;
        st.known.push_back(0);
        dfs(st, 0);
    }
};

bool same_multiset(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

std::vector<GroupMap> automorphism_group(const GroupTable& G, int cap) {
    if (G.order() > cap) throw TooLarge("group order exceeds cap");
    IsoSearch search(G, G, false);
    search.run();
    std::sort(search.found.begin(), search.found.end(),
              [](const GroupMap& a, const GroupMap& b) {
                  return a.image < b.image;
              });
    return search.found;
}

std::optional<GroupMap> groups_isomorphic(const GroupTable& G,
                                          const GroupTable& H, int cap) {
    if (G.order() > cap || H.order() > cap)
        throw TooLarge("group order exceeds cap");
    if (G.order() != H.order()) return std::nullopt;
    if (G.abelian() != H.abelian()) return std::nullopt;
    if (G.exponent() != H.exponent()) return std::nullopt;
    std::vector<int> og(G.order()), oh(H.order());
    for (int i = 0; i < G.order(); ++i) og[i] = G.elem_order(i);
    for (int i = 0; i < H.order(); ++i) oh[i] = H.elem_order(i);
    if (!same_multiset(og, oh)) return std::nullopt;
    if (!same_multiset(G.class_sizes(), H.class_sizes())) return std::nullopt;

    IsoSearch search(G, H, true);
    search.run();
    if (search.found.empty()) return std::nullopt;
    return search.found.front();
}

// ---------------------------------------------------------------------------
// Abelian structure and characters.

namespace {

// Invariant factors from the solution counts of x^d = e. For the p-part
// of type (l_1 >= l_2 >= ...), #{x : x^(p^k) = e} = p^(sum_i min(k, l_i)),
// so the partition is recovered as a conjugate of the count differences.
std::vector<int> invariant_factors(const GroupTable& G) {
    const int n = G.order();
    std::vector<int> primes;
    {
        int r = n;
        for (int p = 2; p * p <= r; ++p)
            if (r % p == 0) {
                primes.push_back(p);
                while (r % p == 0) r /= p;
            }
        if (r > 1) primes.push_back(r);
    }
    std::vector<std::vector<int>> partitions; // one per prime
    for (int p : primes) {
        std::vector<int> counts; // counts[k] = #{i : lambda_i >= k}
        long long prev = 0;
        for (int k = 1;; ++k) {
            long long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            long long cnt = 0;
            for (int a = 0; a < n; ++a)
                if (pk % G.elem_order(a) == 0) ++cnt;
            long long s = 0;
            long long c = cnt;
            while (c > 1) {
                c /= p;
                ++s;
            }
            if (s == prev) break;
            counts.push_back(static_cast<int>(s - prev));
            prev = s;
        }
        // Conjugate partition.
        std::vector<int> lambda;
        if (!counts.empty()) {
            lambda.assign(counts[0], 0);
            for (std::size_t k = 0; k < counts.size(); ++k)
                for (int i = 0; i < counts[k]; ++i) ++lambda[i];
        }
        partitions.push_back(lambda);
    }
    std::size_t rank = 0;
    for (const auto& l : partitions) rank = std::max(rank, l.size());
    std::vector<int> factors(rank, 1);
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t i = 0; i < partitions[pi].size(); ++i) {
            int pw = 1;
            for (int k = 0; k < partitions[pi][i]; ++k) pw *= primes[pi];
            factors[i] *= pw;
        }
    // Largest first so far; store ascending divisibility chain.
    std::reverse(factors.begin(), factors.end());
    return factors;
}

bool find_basis(const GroupTable& G, const std::vector<int>& factors,
                std::size_t i, std::vector<int>& basis,
                std::vector<int>& subgroup) {
    if (i == factors.size())
        return static_cast<int>(subgroup.size()) == G.order();
    long long target = static_cast<long long>(subgroup.size()) * factors[i];
    for (int b = 1; b < G.order(); ++b) {
        if (G.elem_order(b) != factors[i]) continue;
        basis.push_back(b);
        std::vector<int> sub = G.generated_subgroup(basis);
        if (static_cast<long long>(sub.size()) == target) {
            std::vector<int> saved = std::move(subgroup);
            subgroup = std::move(sub);
            if (find_basis(G, factors, i + 1, basis, subgroup)) return true;
            subgroup = std::move(saved);
        }
        basis.pop_back();
    }
    return false;
}

} // namespace

AbelianDecomposition abelian_decomposition(const GroupTable& G) {
    if (!G.abelian()) throw NotAbelian("group is not abelian");
    AbelianDecomposition d;
    d.factors = invariant_factors(G);

    std::vector<int> subgroup{0};
    if (!find_basis(G, d.factors, 0, d.basis, subgroup))
        throw Error("internal: no basis found for abelian group");

    const std::size_t k = d.factors.size();
    d.coords.assign(G.order(), {});
    std::vector<int> tuple(k, 0);
    for (;;) {
        int g = 0;
        for (std::size_t i = 0; i < k; ++i)
            g = G.mul(g, G.power(d.basis[i], tuple[i]));
        if (!d.coords[g].empty() && g != 0)
            throw Error("internal: abelian decomposition is not direct");
        d.coords[g] = tuple;
        std::size_t i = 0;
        while (i < k && ++tuple[i] == d.factors[i]) tuple[i++] = 0;
        if (i == k) break;
    }
    d.coords[0].assign(k, 0);
    return d;
}

bool AbelianCharacter::trivial() const {
    for (int r : residues)
        if (r != 0) return false;
    return true;
}

AbelianCharacter AbelianCharacter::times(const AbelianCharacter& o) const {
    AbelianCharacter out{factors, residues};
    for (std::size_t i = 0; i < residues.size(); ++i)
        out.residues[i] = (residues[i] + o.residues[i]) % factors[i];
    return out;
}

int AbelianCharacter::phase_at(const std::vector<int>& elem_coords,
                               int exponent) const {
    long long r = 0;
    for (std::size_t i = 0; i < residues.size(); ++i)
        r += static_cast<long long>(residues[i]) * elem_coords[i] *
             (exponent / factors[i]);
    return static_cast<int>(((r % exponent) + exponent) % exponent);
}

std::vector<AbelianCharacter> abelian_characters(const GroupTable& G) {
    AbelianDecomposition d = abelian_decomposition(G);
    std::vector<AbelianCharacter> out;
    out.reserve(G.order());
    const std::size_t k = d.factors.size();
    std::vector<int> tuple(k, 0);
    for (int count = 0; count < G.order(); ++count) {
        out.push_back(AbelianCharacter{d.factors, tuple});
        std::size_t i = 0;
        while (i < k && ++tuple[i] == d.factors[i]) tuple[i++] = 0;
    }
    return out;
}

} // namespace gcm
