#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcm/errors.hpp"

namespace gcm {

// A finite group given by its full multiplication table. Element 0 is
// always the identity; the remaining indices are arbitrary but stable
// for a given build. Immutable after construction and safe to share.
class GroupTable {
  public:
    // Validates the table exhaustively (associativity, identity,
    // two-sided inverses). If the identity is not at index 0 the
    // elements are relabeled so that it is.
    static GroupTable from_table(std::vector<std::vector<int>> mult,
                                 std::vector<std::string> names = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return mult_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int elem_order(int a) const { return elem_orders_[a]; }
    int exponent() const { return exponent_; }
    bool abelian() const { return abelian_; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of the element with the given display name, or -1.
    int index_of(const std::string& name) const;

    int power(int a, int k) const; // a^k, k may be negative

    std::vector<int> center() const;
    int involution_count() const;

    // Size of the conjugacy class of each element.
    const std::vector<int>& class_sizes() const { return class_sizes_; }

    // A small generating sequence, chosen greedily and deterministically.
    const std::vector<int>& generators() const { return generators_; }

    // Subgroup generated by the given elements (sorted element list).
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

  private:
    GroupTable() = default;
    void finish_construction();

    int n_ = 0;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    std::vector<int> elem_orders_;
    std::vector<std::string> names_;
    std::vector<int> class_sizes_;
    std::vector<int> generators_;
    bool abelian_ = false;
    int exponent_ = 1;
};

// Grammar: C<n>, D<n> (order 2n), S<n>, A<n>, Q8, products joined by
// `x` (e.g. C2xC4). Throws ParseError / TooLarge.
GroupTable build_group(const std::string& spec, int cap = 24);

// CSV ingestion: n rows of n comma-separated 0-based indices,
// row i column j = i*j. Throws NotAGroup / TooLarge.
GroupTable build_group_from_csv(const std::string& path, int cap = 24);

// A map between two groups, stored as an image table on element indices.
struct GroupMap {
    int domain_order = 0;
    int codomain_order = 0;
    std::vector<int> image;

    int operator()(int a) const { return image[a]; }
    bool is_homomorphism(const GroupTable& dom, const GroupTable& cod) const;
    bool is_bijective() const;

    static GroupMap identity(int n);
};

// The complete automorphism group of G, found by backtracking on the
// images of a generating sequence with (order, class size) pruning.
// Every returned map is a verified bijective homomorphism; the list is
// deterministic and starts with the identity.
std::vector<GroupMap> automorphism_group(const GroupTable& G, int cap = 24);

// An isomorphism G -> H if one exists.
std::optional<GroupMap> groups_isomorphic(const GroupTable& G,
                                          const GroupTable& H, int cap = 24);

// Decomposition of an abelian group as a direct sum of cyclic groups
// with invariant factors n_1 | n_2 | ... | n_k. basis[i] generates the
// i-th factor and coords[g] are the unique exponents with
// g = prod basis[i]^coords[g][i].
struct AbelianDecomposition {
    std::vector<int> factors;
    std::vector<int> basis;
    std::vector<std::vector<int>> coords;
};

AbelianDecomposition abelian_decomposition(const GroupTable& G);

// A linear character of an abelian group, kept symbolic: one residue
// per invariant factor. The value at g is the root of unity with phase
// sum_i residues[i]*coords[g][i]/factors[i]; no floats are ever formed.
struct AbelianCharacter {
    std::vector<int> factors;
    std::vector<int> residues;

    bool trivial() const;
    AbelianCharacter times(const AbelianCharacter& o) const;

    // Phase of the value at an element with the given coordinates, as a
    // residue modulo `exponent` (the lcm of the factors).
    int phase_at(const std::vector<int>& elem_coords, int exponent) const;
};

// All |G| characters of an abelian G, indexed consistently with the
// element coordinates of abelian_decomposition. Throws NotAbelian.
std::vector<AbelianCharacter> abelian_characters(const GroupTable& G);

} // namespace gcm
