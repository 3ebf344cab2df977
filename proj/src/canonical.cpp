#include "gcm/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcm/errors.hpp"

namespace gcm {

namespace {

using Colors = std::vector<std::uint32_t>;
using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct IRSearch {
    const SmallGraph& g;
    std::size_t n;
    std::vector<std::vector<std::uint16_t>> common; // |N(u) ^ N(v)|

    bool have_first = false;
    std::vector<std::uint32_t> lab_first;
    Edges fp_first;
    std::vector<std::vector<std::int64_t>> first_path;

    bool have_best = false;
    std::vector<std::uint32_t> lab_best;
    Edges fp_best;
    std::vector<std::vector<std::int64_t>> best_path;

    std::vector<std::vector<std::int64_t>> cur_path;
    std::vector<std::uint32_t> prefix; // individualized vertices, in order
    std::vector<VertexPermutation> gens;

    explicit IRSearch(const SmallGraph& graph) : g(graph), n(graph.size()) {
        common.assign(n, std::vector<std::uint16_t>(n, 0));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                common[u][v] = common[v][u] =
                    static_cast<std::uint16_t>(g.common_count(u, v));
    }

    // Renumber colors to 0..C-1 keeping their relative order; returns
    // the class count.
    std::uint32_t normalize(Colors& colors) const {
        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) {
                             return colors[a] < colors[b];
                         });
        Colors out(n);
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && colors[order[i]] != colors[order[i - 1]]) ++c;
            out[order[i]] = c;
        }
        colors = std::move(out);
        return c + 1;
    }

    // One refinement pass; signatures are exact sorted vectors, no
    // hashing. Returns true when some class split.
    bool refine_pass(Colors& colors, std::uint32_t& nclasses,
                     bool strong) const {
        std::vector<std::vector<std::uint32_t>> classes(nclasses);
        for (std::size_t v = 0; v < n; ++v) classes[colors[v]].push_back(v);

        std::vector<std::vector<std::int64_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.push_back(colors[v]);
            for (std::uint32_t c = 0; c < nclasses; ++c) {
                std::int64_t cnt = 0;
                for (std::uint32_t w : classes[c])
                    if (g.adjacent(v, w)) ++cnt;
                s.push_back(cnt);
            }
            if (strong) {
                for (std::uint32_t c = 0; c < nclasses; ++c) {
                    std::vector<std::int64_t> cc;
                    cc.reserve(classes[c].size());
                    for (std::uint32_t w : classes[c])
                        if (w != v) cc.push_back(common[v][w]);
                    std::sort(cc.begin(), cc.end());
                    s.insert(s.end(), cc.begin(), cc.end());
                    s.push_back(-1); // class separator
                }
            }
        }

        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) {
                             return sig[a] < sig[b];
                         });
        Colors next(n);
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        bool split = (c + 1) != nclasses;
        colors = std::move(next);
        nclasses = c + 1;
        return split;
    }

    std::uint32_t refine(Colors& colors) const {
        std::uint32_t nclasses = normalize(colors);
        for (;;) {
            while (nclasses < n && refine_pass(colors, nclasses, false)) {
            }
            if (nclasses == n || !refine_pass(colors, nclasses, true)) break;
        }
        return nclasses;
    }

    std::vector<std::int64_t> profile_of(const Colors& colors,
                                         std::uint32_t nclasses) const {
        std::vector<std::int64_t> prof(nclasses, 0);
        for (std::size_t v = 0; v < n; ++v) ++prof[colors[v]];
        return prof;
    }

    Edges fingerprint(const std::vector<std::uint32_t>& lab) const {
        Edges out;
        for (auto [u, v] : g.edges()) {
            std::uint32_t a = lab[u], b = lab[v];
            if (a > b) std::swap(a, b);
            out.emplace_back(a, b);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Derives lab_a^-1 after lab_b as a vertex permutation and records
    // it if it is a genuine automorphism.
    void record_automorphism(const std::vector<std::uint32_t>& lab_a,
                             const std::vector<std::uint32_t>& lab_b) {
        std::vector<std::uint32_t> pos(n);
        for (std::size_t v = 0; v < n; ++v) pos[lab_a[v]] = v;
        std::vector<std::uint32_t> img(n);
        for (std::size_t v = 0; v < n; ++v) img[v] = pos[lab_b[v]];
        VertexPermutation p(std::move(img));
        if (p.is_identity()) return;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return;
        for (const auto& known : gens)
            if (known == p) return;
        gens.push_back(std::move(p));
    }

    void handle_leaf(const Colors& colors) {
        std::vector<std::uint32_t> lab(n);
        for (std::size_t v = 0; v < n; ++v) lab[v] = colors[v];
        Edges fp = fingerprint(lab);

        if (!have_first) {
            have_first = true;
            lab_first = lab;
            fp_first = fp;
            first_path = cur_path;
        } else if (fp == fp_first) {
            record_automorphism(lab_first, lab);
        }

        // The canonical leaf minimizes the pair (invariant path,
        // fingerprint); comparing fingerprints across different paths
        // would make the outcome depend on exploration order.
        if (!have_best || cur_path < best_path ||
            (cur_path == best_path && fp < fp_best)) {
            have_best = true;
            fp_best = fp;
            lab_best = lab;
            best_path = cur_path;
        } else if (fp == fp_best) {
            record_automorphism(lab_best, lab);
        }
    }

    // Vertices reachable from `seed` under the discovered automorphisms
    // that fix the current prefix pointwise.
    void orbit_mark(std::uint32_t seed, std::vector<char>& mark) const {
        std::vector<const VertexPermutation*> applicable;
        for (const auto& p : gens) {
            bool fixes = true;
            for (std::uint32_t b : prefix)
                if (p(b) != b) {
                    fixes = false;
                    break;
                }
            if (fixes) applicable.push_back(&p);
        }
        std::vector<std::uint32_t> queue{seed};
        if (!mark[seed]) mark[seed] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (const auto* p : applicable) {
                std::uint32_t q = (*p)(queue[head]);
                if (!mark[q]) {
                    mark[q] = 1;
                    queue.push_back(q);
                }
            }
    }

    void dfs(Colors colors, std::size_t depth) {
        std::uint32_t nclasses = refine(colors);
        auto prof = profile_of(colors, nclasses);
        cur_path.resize(depth);
        cur_path.push_back(prof);

        if (nclasses == n) {
            handle_leaf(colors);
            return;
        }

        // Branches whose invariant matches the first path survive even
        // when a better branch owns the canonical form: their leaves
        // supply the automorphisms that drive orbit pruning. Path-worse
        // branches beyond that are cut; a path-better branch invalidates
        // the current best, whose prefix no longer lines up for deeper
        // comparisons.
        const bool matches_first = have_first && depth < first_path.size() &&
                                   prof == first_path[depth];
        if (have_best) {
            if (depth >= best_path.size()) {
                if (!matches_first) return;
            } else if (prof > best_path[depth]) {
                if (!matches_first) return;
            } else if (prof < best_path[depth]) {
                have_best = false;
            }
        }

        // Smallest non-singleton cell, earliest color on ties.
        std::vector<std::uint32_t> count(nclasses, 0);
        for (std::size_t v = 0; v < n; ++v) ++count[colors[v]];
        std::uint32_t target = nclasses;
        for (std::uint32_t c = 0; c < nclasses; ++c)
            if (count[c] > 1 && (target == nclasses || count[c] < count[target]))
                target = c;

        std::vector<std::uint32_t> cell;
        for (std::size_t v = 0; v < n; ++v)
            if (colors[v] == target) cell.push_back(static_cast<std::uint32_t>(v));

        std::vector<char> done(n, 0);
        for (std::uint32_t u : cell) {
            if (done[u]) continue;
            orbit_mark(u, done);
            // The individualized vertex becomes a singleton class just
            // before the rest of its cell.
            Colors child(n);
            for (std::size_t v = 0; v < n; ++v) child[v] = 2 * colors[v] + 1;
            child[u] -= 1;
            prefix.push_back(u);
            dfs(std::move(child), depth + 1);
            prefix.pop_back();
        }
    }
};

} // namespace

CanonicalResult canonical_form(const SmallGraph& g, std::size_t cap) {
    if (g.size() > cap) throw TooLarge("graph exceeds canonical-labeling cap");
    IRSearch search(g);
    if (g.size() == 0) return {};
    search.dfs(Colors(g.size(), 0), 0);
    CanonicalResult res;
    res.form.labeling = search.lab_best;
    res.form.edges = search.fp_best;
    res.aut_generators = search.gens;
    return res;
}

mpz_class canonical_aut_order(const SmallGraph& g, std::size_t cap) {
    CanonicalResult res = canonical_form(g, cap);
    if (res.aut_generators.empty()) return 1;
    return group_order(res.aut_generators, g.size());
}

bool small_graphs_isomorphic(const SmallGraph& a, const SmallGraph& b,
                             std::size_t cap) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    CanonicalResult ca = canonical_form(a, cap);
    CanonicalResult cb = canonical_form(b, cap);
    return ca.form.edges == cb.form.edges;
}

} // namespace gcm
