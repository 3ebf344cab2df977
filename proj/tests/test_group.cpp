#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "gcm/group.hpp"

using namespace gcm;

namespace {

// Independent |Aut(G)| oracle: every bijection fixing the identity,
// checked as a homomorphism. Usable up to |G| = 8.
long brute_force_aut_count(const GroupTable& G) {
    const int n = G.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        if (perm[0] != 0) continue;
        bool hom = true;
        for (int a = 0; a < n && hom; ++a)
            for (int b = 0; b < n && hom; ++b)
                if (perm[G.mul(a, b)] != G.mul(perm[a], perm[b])) hom = false;
        if (hom) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::multiset<int> order_multiset(const GroupTable& G) {
    std::multiset<int> out;
    for (int a = 0; a < G.order(); ++a) out.insert(G.elem_order(a));
    return out;
}

} // namespace

TEST_CASE("cyclic groups") {
    GroupTable c2 = build_group("C2");
    CHECK(c2.order() == 2);
    CHECK(c2.exponent() == 2);
    CHECK(c2.abelian());
    CHECK(c2.name(0) == "e");

    GroupTable klein = build_group("C2xC2");
    CHECK(klein.order() == 4);
    CHECK(klein.abelian());
    CHECK(klein.exponent() == 2);
    CHECK(klein.involution_count() == 3);

    GroupTable c6 = build_group("C6");
    CHECK(c6.exponent() == 6);
    CHECK(order_multiset(c6) == std::multiset<int>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("symmetric group vs composition-table oracle") {
    // Build S3 independently from permutations of three points.
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&perms](const std::vector<int>& q) {
        return static_cast<int>(
            std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = index_of(c);
        }
    GroupTable oracle = GroupTable::from_table(table);
    GroupTable s3 = build_group("S3");

    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.abelian());
    CHECK(order_multiset(s3) == std::multiset<int>{1, 2, 2, 2, 3, 3});
    CHECK(order_multiset(oracle) == order_multiset(s3));
    CHECK(groups_isomorphic(oracle, s3).has_value());
}

TEST_CASE("center by brute force") {
    GroupTable s3 = build_group("S3");
    CHECK(s3.center() == std::vector<int>{0});

    GroupTable c4 = build_group("C4");
    CHECK(c4.center().size() == 4);

    GroupTable q8 = build_group("Q8");
    std::vector<int> z = q8.center();
    REQUIRE(z.size() == 2);
    CHECK(q8.name(z[0]) == "e");
    CHECK(q8.name(z[1]) == "-1");

    GroupTable d4 = build_group("D4");
    CHECK(d4.center().size() == 2);
}

TEST_CASE("automorphism groups against the exhaustive oracle") {
    const std::vector<std::pair<std::string, long>> table = {
        {"C2", 1},  {"C3", 2},  {"C4", 2},     {"C2xC2", 6},
        {"C5", 4},  {"S3", 6},  {"C6", 2},     {"C8", 4},
        {"C2xC2xC2", 168},      {"D4", 8},     {"Q8", 24},
    };
    for (const auto& [spec, expected] : table) {
        GroupTable G = build_group(spec);
        auto auts = automorphism_group(G);
        CAPTURE(spec);
        CHECK(static_cast<long>(auts.size()) == expected);
        CHECK(brute_force_aut_count(G) == expected);
        for (const GroupMap& f : auts) {
            CHECK(f.is_bijective());
            CHECK(f.is_homomorphism(G, G));
        }
        // Distinct maps.
        std::set<std::vector<int>> images;
        for (const GroupMap& f : auts) images.insert(f.image);
        CHECK(images.size() == auts.size());
    }
}

TEST_CASE("every automorphism of the order-six non-abelian group is inner") {
    GroupTable s3 = build_group("S3");
    for (const GroupMap& f : automorphism_group(s3)) {
        bool inner = false;
        for (int g = 0; g < 6 && !inner; ++g) {
            bool match = true;
            for (int x = 0; x < 6 && match; ++x)
                match = f(x) == s3.mul(s3.mul(s3.inv(g), x), g);
            inner = match;
        }
        CHECK(inner);
    }
}

TEST_CASE("group axioms hold for every corpus group") {
    for (const char* spec :
         {"C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C8", "C4xC2",
          "C2xC2xC2", "D4", "Q8", "A4", "S4", "D6", "C2xC6"}) {
        GroupTable G = build_group(spec);
        CAPTURE(spec);
        for (int a = 0; a < G.order(); ++a) {
            CHECK(G.mul(0, a) == a);
            CHECK(G.mul(a, 0) == a);
            CHECK(G.mul(a, G.inv(a)) == 0);
            CHECK(G.mul(G.inv(a), a) == 0);
        }
        // Exponent kills everything.
        for (int a = 0; a < G.order(); ++a)
            CHECK(G.power(a, G.exponent()) == 0);
    }
}

TEST_CASE("abelian characters") {
    SUBCASE("C3 has residues 0,1,2") {
        GroupTable c3 = build_group("C3");
        auto chars = abelian_characters(c3);
        REQUIRE(chars.size() == 3);
        std::set<std::vector<int>> residues;
        for (const auto& ch : chars) {
            CHECK(ch.factors == std::vector<int>{3});
            residues.insert(ch.residues);
        }
        CHECK(residues == std::set<std::vector<int>>{{0}, {1}, {2}});
    }
    SUBCASE("C2xC2 has residue pairs over (2,2)") {
        GroupTable klein = build_group("C2xC2");
        auto chars = abelian_characters(klein);
        REQUIRE(chars.size() == 4);
        for (const auto& ch : chars)
            CHECK(ch.factors == std::vector<int>{2, 2});
    }
    SUBCASE("C6 characters form a cyclic group of order 6") {
        GroupTable c6 = build_group("C6");
        auto chars = abelian_characters(c6);
        REQUIRE(chars.size() == 6);
        // Under componentwise addition some character has order 6.
        int max_order = 0;
        for (const auto& ch : chars) {
            if (ch.trivial()) continue;
            AbelianCharacter acc = ch;
            int ord = 1;
            while (!acc.trivial()) {
                acc = acc.times(ch);
                ++ord;
                REQUIRE(ord <= 7);
            }
            max_order = std::max(max_order, ord);
        }
        CHECK(max_order == 6);
    }
    SUBCASE("non-abelian groups are rejected") {
        GroupTable s3 = build_group("S3");
        CHECK_THROWS_AS(abelian_characters(s3), NotAbelian);
    }
}

TEST_CASE("character orthogonality by exact residue counting") {
    for (const char* spec : {"C2", "C3", "C4", "C2xC2", "C6", "C8", "C4xC2",
                             "C2xC2xC2", "C2xC6"}) {
        GroupTable G = build_group(spec);
        CAPTURE(spec);
        AbelianDecomposition dec = abelian_decomposition(G);
        auto chars = abelian_characters(G);
        REQUIRE(static_cast<int>(chars.size()) == G.order());
        const int E = G.exponent();
        for (const auto& ch : chars) {
            std::map<int, int> phase_count;
            for (int g = 0; g < G.order(); ++g)
                ++phase_count[ch.phase_at(dec.coords[g], E)];
            if (ch.trivial()) {
                CHECK(phase_count[0] == G.order());
            } else {
                // Phases must fill a nontrivial cyclic subgroup evenly;
                // that makes the sum over all of G exactly zero, hence
                // -1 over the non-identity elements.
                int g0 = E;
                for (const auto& [r, c] : phase_count) g0 = std::gcd(g0, r);
                const int d = E / g0;
                CHECK(d > 1);
                CHECK(static_cast<int>(phase_count.size()) == d);
                for (const auto& [r, c] : phase_count) {
                    CHECK(r % g0 == 0);
                    CHECK(c == G.order() / d);
                }
            }
        }
    }
}

TEST_CASE("isomorphism testing") {
    CHECK_FALSE(groups_isomorphic(build_group("C4"), build_group("C2xC2")));
    CHECK_FALSE(groups_isomorphic(build_group("S3"), build_group("C6")));
    CHECK_FALSE(groups_isomorphic(build_group("D4"), build_group("Q8")));
    CHECK_FALSE(groups_isomorphic(build_group("C8"), build_group("C4xC2")));

    auto iso = groups_isomorphic(build_group("C6"), build_group("C2xC3"));
    REQUIRE(iso.has_value());
    CHECK(iso->is_bijective());
    CHECK(iso->is_homomorphism(build_group("C6"), build_group("C2xC3")));

    auto d3 = groups_isomorphic(build_group("D3"), build_group("S3"));
    CHECK(d3.has_value());
}

TEST_CASE("spec parsing errors") {
    CHECK_THROWS_AS(build_group("C"), ParseError);
    CHECK_THROWS_AS(build_group("C1"), ParseError);
    CHECK_THROWS_AS(build_group("F7"), ParseError);
    CHECK_THROWS_AS(build_group("C25"), TooLarge);
    CHECK_THROWS_AS(build_group("S5"), TooLarge);
    CHECK_THROWS_AS(build_group("C4xC8"), TooLarge);
    CHECK(build_group("C25", 32).order() == 25);

    // Malformed specs never escape the error taxonomy.
    for (const char* bad :
         {"", "x", "xC2", "C2x", "C2xxC2", "C-3", "C2.5", "Q9", "Q", "S0",
          "A1", "D0", "C 2", "c2", "C999999999999", "C2XC2", "table:"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(build_group(bad), Error);
    }
}

TEST_CASE("table ingestion") {
    const char* path = "c3_table_test.csv";
    {
        std::ofstream out(path);
        out << "0,1,2\n1,2,0\n2,0,1\n";
    }
    GroupTable G = build_group("table:" + std::string(path));
    CHECK(G.order() == 3);
    CHECK(G.exponent() == 3);
    CHECK(groups_isomorphic(G, build_group("C3")).has_value());

    // Identity not at index 0 gets relabeled.
    {
        std::ofstream out(path);
        out << "2,0,1\n0,1,2\n1,2,0\n";
    }
    GroupTable H = build_group_from_csv(path);
    CHECK(H.mul(0, 1) == 1);

    {
        std::ofstream out(path);
        out << "0,1,2\n1,0,0\n2,0,1\n";
    }
    CHECK_THROWS_AS(build_group_from_csv(path), NotAGroup);
    std::remove(path);
}

TEST_CASE("abelian decomposition is a direct sum") {
    for (const char* spec :
         {"C2", "C12", "C2xC4", "C2xC2xC2", "C2xC6", "C3xC3"}) {
        GroupTable G = build_group(spec);
        CAPTURE(spec);
        AbelianDecomposition d = abelian_decomposition(G);
        long long prod = 1;
        for (std::size_t i = 0; i + 1 < d.factors.size(); ++i)
            CHECK(d.factors[i + 1] % d.factors[i] == 0);
        for (int f : d.factors) prod *= f;
        CHECK(prod == G.order());
        CHECK(d.factors.back() == G.exponent());
        // Coordinates reconstruct each element uniquely.
        std::set<std::vector<int>> seen;
        for (int g = 0; g < G.order(); ++g) {
            int rebuilt = 0;
            for (std::size_t i = 0; i < d.factors.size(); ++i)
                rebuilt = G.mul(rebuilt, G.power(d.basis[i], d.coords[g][i]));
            CHECK(rebuilt == g);
            seen.insert(d.coords[g]);
        }
        CHECK(static_cast<int>(seen.size()) == G.order());
    }
}
