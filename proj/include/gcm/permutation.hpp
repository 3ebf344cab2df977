#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gcm {

// A permutation of [0, n) with an optional display label. Composition
// is written left to right: (p.then(q))(v) = q(p(v)).
class VertexPermutation {
  public:
    VertexPermutation() = default;
    explicit VertexPermutation(std::size_t n);
    explicit VertexPermutation(std::vector<std::uint32_t> images,
                               std::string label = "");

    std::size_t size() const { return img_.size(); }
    std::uint32_t operator()(std::uint32_t v) const { return img_[v]; }
    const std::vector<std::uint32_t>& images() const { return img_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    bool is_identity() const;
    VertexPermutation then(const VertexPermutation& next) const;
    VertexPermutation inverse() const;

    // Order of the permutation (lcm of cycle lengths).
    mpz_class order() const;

    friend bool operator==(const VertexPermutation& a,
                           const VertexPermutation& b) {
        return a.img_ == b.img_;
    }

  private:
    std::vector<std::uint32_t> img_;
    std::string label_;
};

// Base and strong generating set for the group generated by a list of
// permutations; gives the exact order and a membership test. Built
// deterministically: base points are picked greedily from the largest
// orbits, tie-broken by index.
class PermGroup {
  public:
    PermGroup(std::vector<VertexPermutation> generators, std::size_t degree);

    std::size_t degree() const { return degree_; }
    const std::vector<std::uint32_t>& base() const { return base_; }
    mpz_class order() const;
    bool contains(const VertexPermutation& p) const;

    // Orbit of a point under the full group.
    std::vector<std::uint32_t> orbit(std::uint32_t point) const;

  private:
    struct Level {
        std::uint32_t base_point = 0;
        std::vector<VertexPermutation> gens;
        // Schreier tree: parent point and generator index, -1 at root.
        std::vector<std::int64_t> parent;
        std::vector<std::int64_t> via;
        std::vector<std::uint32_t> orbit;
    };

    void rebuild_orbit(Level& lv) const;
    VertexPermutation transversal(const Level& lv, std::uint32_t point) const;
    // Returns the level where sifting stopped, with the residue.
    std::pair<std::size_t, VertexPermutation> sift(VertexPermutation p) const;
    bool add_strong(VertexPermutation p);

    std::size_t degree_ = 0;
    std::vector<std::uint32_t> base_;
    std::vector<Level> levels_;
};

// Order of the group generated by the given permutations.
mpz_class group_order(const std::vector<VertexPermutation>& generators,
                      std::size_t degree);

} // namespace gcm
