#include "gcm/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "gcm/errors.hpp"

namespace gcm {

VertexPermutation::VertexPermutation(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

VertexPermutation::VertexPermutation(std::vector<std::uint32_t> images,
                                     std::string label)
    : img_(std::move(images)), label_(std::move(label)) {
    std::vector<char> seen(img_.size(), 0);
    for (std::uint32_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw BadParameters("image table is not a permutation");
        seen[v] = 1;
    }
}

bool VertexPermutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

VertexPermutation VertexPermutation::then(const VertexPermutation& next) const {
    std::vector<std::uint32_t> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = next.img_[img_[i]];
    VertexPermutation p;
    p.img_ = std::move(out);
    return p;
}

VertexPermutation VertexPermutation::inverse() const {
    std::vector<std::uint32_t> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = i;
    VertexPermutation p;
    p.img_ = std::move(out);
    return p;
}

mpz_class VertexPermutation::order() const {
    std::vector<char> seen(img_.size(), 0);
    mpz_class ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        unsigned long len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = img_[j];
            ++len;
        }
        mpz_class l(len);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), ord.get_mpz_t(), l.get_mpz_t());
        ord = ord / g * l;
    }
    return ord;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::vector<VertexPermutation> generators,
                     std::size_t degree)
    : degree_(degree) {
    for (auto& g : generators) {
        if (g.size() != degree_)
            throw BadParameters("generator degree mismatch");
        add_strong(std::move(g));
    }
    // Schreier closure to a fixpoint: after any new strong generator the
    // whole chain is reprocessed, so every level ends up verified
    // against the final generator lists. add_strong may reallocate
    // levels_, so no reference into it survives a call.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < levels_.size() && !changed; ++i) {
            for (std::size_t head = 0;
                 head < levels_[i].orbit.size() && !changed; ++head) {
                const std::uint32_t pt = levels_[i].orbit[head];
                VertexPermutation u = transversal(levels_[i], pt);
                for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
                    VertexPermutation sg;
                    {
                        const Level& lv = levels_[i];
                        sg = u.then(lv.gens[gi])
                                 .then(transversal(lv, lv.gens[gi](pt))
                                           .inverse());
                    }
                    if (sg.is_identity()) continue;
                    if (add_strong(std::move(sg))) {
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
}

// Sifts the permutation; a non-identity residue is recorded as a strong
// generator on every level whose base prefix it fixes, growing the
// chain when needed. Returns whether anything was added.
bool PermGroup::add_strong(VertexPermutation p) {
    auto [depth, residue] = sift(std::move(p));
    if (residue.is_identity()) return false;

    if (depth == levels_.size()) {
        // New level; base point from the largest cycle of the residue.
        std::vector<char> seen(degree_, 0);
        std::uint32_t best_point = 0;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < degree_; ++i) {
            if (seen[i]) continue;
            std::size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = 1;
                j = residue(static_cast<std::uint32_t>(j));
                ++len;
            }
            if (len > best_len) {
                best_len = len;
                best_point = static_cast<std::uint32_t>(i);
            }
        }
        Level lv;
        lv.base_point = best_point;
        levels_.push_back(std::move(lv));
        base_.push_back(best_point);
    }

    for (std::size_t i = 0; i <= depth; ++i)
        levels_[i].gens.push_back(residue);
    for (std::size_t i = 0; i < levels_.size(); ++i)
        rebuild_orbit(levels_[i]);
    return true;
}

void PermGroup::rebuild_orbit(Level& lv) const {
    lv.parent.assign(degree_, -1);
    lv.via.assign(degree_, -1);
    lv.orbit.clear();
    lv.orbit.push_back(lv.base_point);
    lv.parent[lv.base_point] = lv.base_point;
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        std::uint32_t p = lv.orbit[head];
        for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
            std::uint32_t q = lv.gens[gi](p);
            if (lv.parent[q] < 0) {
                lv.parent[q] = p;
                lv.via[q] = static_cast<std::int64_t>(gi);
                lv.orbit.push_back(q);
            }
        }
    }
}

VertexPermutation PermGroup::transversal(const Level& lv,
                                         std::uint32_t point) const {
    // Walk the Schreier tree from the point back to the base, composing
    // the generators along the way.
    std::vector<std::size_t> path;
    std::uint32_t p = point;
    while (p != lv.base_point) {
        path.push_back(static_cast<std::size_t>(lv.via[p]));
        p = static_cast<std::uint32_t>(lv.parent[p]);
    }
    VertexPermutation u(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        u = u.then(lv.gens[*it]);
    return u;
}

std::pair<std::size_t, VertexPermutation> PermGroup::sift(
    VertexPermutation p) const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        std::uint32_t image = p(levels_[i].base_point);
        if (levels_[i].parent[image] < 0) return {i, std::move(p)};
        p = p.then(transversal(levels_[i], image).inverse());
    }
    return {levels_.size(), std::move(p)};
}


mpz_class PermGroup::order() const {
    mpz_class ord = 1;
    for (const Level& lv : levels_) ord *= static_cast<long>(lv.orbit.size());
    return ord;
}

bool PermGroup::contains(const VertexPermutation& p) const {
    if (p.size() != degree_) return false;
    auto [lvl, residue] = sift(p);
    (void)lvl;
    return residue.is_identity();
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::uint32_t> orb{point};
    seen[point] = 1;
    for (std::size_t head = 0; head < orb.size(); ++head)
        for (const Level& lv : levels_)
            for (const auto& g : lv.gens) {
                std::uint32_t q = g(orb[head]);
                if (!seen[q]) {
                    seen[q] = 1;
                    orb.push_back(q);
                }
            }
    std::sort(orb.begin(), orb.end());
    return orb;
}

mpz_class group_order(const std::vector<VertexPermutation>& generators,
                      std::size_t degree) {
    return PermGroup(generators, degree).order();
}

} // namespace gcm
