#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "resonantia/resonantia.hpp"

using namespace resonantia;

TEST_CASE("the empty pattern and single hexagons are resonant", "[resonance]") {
    const auto g = oracle::c60();
    ResonanceChecker checker(g);
    const auto empty = checker.check(HexPattern{});
    CHECK(empty.resonant);
    REQUIRE(empty.witness);
    CHECK(empty.witness->is_perfect());
    for (int h : g.hexagon_ids()) {
        const auto v = checker.check(HexPattern{{h}});
        CHECK(v.resonant);
        REQUIRE(v.witness);
        CHECK(is_alternating_witness(g, *v.witness, std::vector<int>{h}));
    }
}

TEST_CASE("resonance orders of the classical cages", "[resonance]") {
    // C20 has no hexagons, so every pattern set is empty
    const auto c20 = is_k_resonant(oracle::c20(), 3);
    CHECK(c20.resonant);
    CHECK(!c20.counterexample);

    const auto c60 = is_k_resonant(oracle::c60(), 2);
    CHECK(c60.resonant);
    REQUIRE(c60.witness);
    CHECK(c60.witness->is_perfect());
    CHECK(is_k_resonant(oracle::c60(), 3).resonant);
}

TEST_CASE("invalid patterns are rejected", "[resonance]") {
    const auto g = oracle::c60();
    const auto hexes = g.hexagon_ids();
    int a = hexes[0], b = -1;
    for (int h : hexes)
        if (h != a && faces_share_vertex(g, a, h)) b = h;
    REQUIRE(b >= 0);
    CHECK_THROWS_AS(is_resonant_pattern(g, HexPattern{{std::min(a, b), std::max(a, b)}}), InvalidPattern);
    CHECK_THROWS_AS(is_resonant_pattern(g, HexPattern{{g.pentagon_ids()[0]}}), InvalidPattern);
    CHECK_THROWS_AS(is_resonant_pattern(g, HexPattern{{a, a}}), InvalidPattern);
    CHECK_THROWS_AS(is_resonant_pattern(g, HexPattern{{g.face_count()}}), InvalidPattern);
    CHECK_THROWS_AS(is_k_resonant(g, 0), std::invalid_argument);
}

TEST_CASE("pattern enumeration counts", "[resonance]") {
    CHECK(disjoint_hexagon_patterns(oracle::c20(), 1).empty());
    CHECK(disjoint_hexagon_patterns(oracle::c20(), 0).size() == 1);
    const auto c60 = oracle::c60();
    CHECK(disjoint_hexagon_patterns(c60, 0).size() == 1);
    CHECK(disjoint_hexagon_patterns(c60, 1).size() == 20);
    const auto pairs = disjoint_hexagon_patterns(c60, 2);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    for (const auto& p : pairs) {
        CHECK(p.faces[0] < p.faces[1]);
        CHECK(!faces_share_vertex(c60, p.faces[0], p.faces[1]));
    }
    // each hexagon of C60 touches exactly 3 other hexagons
    CHECK(pairs.size() == 20 * (19 - 3) / 2);
}

TEST_CASE("the smallest exceptional graph", "[resonance]") {
    const auto ex = oracle::lr_free_non2resonant(42);
    REQUIRE(ex.size() == 1);
    const auto& [g, pair] = ex.front();
    CHECK(is_k_resonant(g, 1).resonant);
    const auto v = is_k_resonant(g, 2);
    CHECK(!v.resonant);
    REQUIRE(v.counterexample);
    CHECK(*v.counterexample == pair);
    REQUIRE(v.obstruction);
    CHECK(v.obstruction->deficiency() >= 2);
    CHECK(!is_resonant_pattern(g, pair).resonant);
    for (int h : pair.faces) CHECK(is_resonant_pattern(g, HexPattern{{h}}).resonant);

    const auto masks = oracle::alternating_hexagon_masks(g);
    CHECK(!oracle::resonant_by_definition(g, masks, pair.faces));
}

TEST_CASE("exceptional graphs per order", "[resonance]") {
    const std::vector<std::pair<int, std::size_t>> expected{{40, 0}, {44, 2}, {46, 4}, {48, 4}};
    for (const auto& [n, count] : expected) {
        INFO("n = " << n);
        const auto ex = oracle::lr_free_non2resonant(n);
        CHECK(ex.size() == count);
        for (const auto& [g, pair] : ex) {
            CHECK(pair.faces.size() == 2);
            CHECK(!is_resonant_pattern(g, pair).resonant);
        }
    }
}

TEST_CASE("the counterexample is the first failing pattern", "[resonance]") {
    for (const auto& g : enumerate_isomers(40)) {
        const auto v = is_k_resonant(g, 2);
        if (v.resonant) continue;
        const auto& h = *v.counterexample;
        ResonanceChecker checker(g);
        std::optional<HexPattern> first;
        for (int i = 0; i <= 2 && !first; ++i)
            for (const auto& p : disjoint_hexagon_patterns(g, i))
                if (!checker.resonant(p.faces)) {
                    first = p;
                    break;
                }
        REQUIRE(first);
        CHECK(*first == h);
    }
}

TEST_CASE("deletion test agrees with the definition", "[resonance][oracle]") {
    // every isomer up to 40 vertices, every pattern of at most two hexagons
    std::uint64_t patterns = 0;
    for (int n = 20; n <= 40; n += 2)
        for (const auto& g : enumerate_isomers(n)) {
            const auto masks = oracle::alternating_hexagon_masks(g);
            ResonanceChecker checker(g);
            for (int i = 0; i <= 2; ++i)
                for_each_disjoint_hexagon_pattern(g, i, [&](std::span<const int> f) {
                    ++patterns;
                    const std::vector<int> faces(f.begin(), f.end());
                    const bool fast = checker.resonant(f);
                    REQUIRE(fast == oracle::resonant_by_definition(g, masks, faces));
                    const auto v = checker.check(HexPattern{faces});
                    REQUIRE(v.resonant == fast);
                    if (fast) {
                        REQUIRE(v.witness);
                        CHECK(is_alternating_witness(g, *v.witness, f));
                    } else {
                        CHECK(v.obstruction);
                    }
                    return true;
                });
        }
    CHECK(patterns > 1000);
}

TEST_CASE("sub-patterns of resonant patterns are resonant", "[resonance]") {
    std::mt19937_64 rng(5);
    for (int n : {44, 48}) {
        const auto iso = enumerate_isomers(n);
        for (int trial = 0; trial < 8; ++trial) {
            const auto& g = iso[std::uniform_int_distribution<std::size_t>(0, iso.size() - 1)(rng)];
            ResonanceChecker checker(g);
            int visited = 0;
            for_each_disjoint_hexagon_pattern(g, 3, [&](std::span<const int> f) {
                if (++visited > 300) return false;
                if (!checker.resonant(f)) return true;
                for (int skip = 0; skip < 3; ++skip) {
                    std::vector<int> sub;
                    for (int j = 0; j < 3; ++j)
                        if (j != skip) sub.push_back(f[j]);
                    CHECK(checker.resonant(sub));
                }
                return true;
            });
        }
    }
}
