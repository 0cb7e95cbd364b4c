#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "resonantia/resonantia.hpp"

using namespace resonantia;

namespace {

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

void check_certificates(const SimpleGraph& g) {
    const auto m = max_matching(g);
    REQUIRE(is_matching_of(g, m));
    const auto d = gallai_edmonds(g);
    std::string why;
    INFO(why);
    REQUIRE(verify_decomposition(g, d, &why));
    // Tutte-Berge: deficiency of the decomposition equals the number of
    // vertices left exposed by a maximum matching
    CHECK(d.deficiency() == g.order() - 2 * m.size());
}

}  // namespace

TEST_CASE("small matchings", "[matching]") {
    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    const auto m = max_matching(k2);
    CHECK(m.size() == 1);
    CHECK(m.edges() == std::vector<Edge>{{0, 1}});

    const auto c20 = to_simple_graph(oracle::c20());
    const auto pm = has_perfect_matching(c20);
    CHECK(pm.perfect);
    CHECK(pm.matching.size() == 10);
    CHECK(is_matching_of(c20, pm.matching));

    for (int n : {3, 5, 7, 9}) CHECK(max_matching(cycle(n)).size() <= (n - 1) / 2);
    const auto odd = has_perfect_matching(cycle(7));
    CHECK(!odd.perfect);
    REQUIRE(odd.barrier);
    CHECK(odd.barrier->deficiency() > 0);
}

TEST_CASE("factor-critical graphs", "[matching]") {
    CHECK(is_factor_critical(SimpleGraph(1)));
    CHECK(is_factor_critical(cycle(5)));
    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    CHECK(!is_factor_critical(k2));
    CHECK(!is_factor_critical(cycle(6)));
    SimpleGraph bowtie(5);  // two triangles sharing vertex 0
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}) bowtie.add_edge(a, b);
    CHECK(is_factor_critical(bowtie));
}

TEST_CASE("Gallai-Edmonds examples", "[matching]") {
    SECTION("K2: one vertex in S, one trivial component") {
        SimpleGraph k2(2);
        k2.add_edge(0, 1);
        const auto d = gallai_edmonds(k2);
        CHECK(d.S == std::vector<int>{0});
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0] == std::vector<int>{1});
        CHECK(d.factor_critical[0]);
        CHECK(verify_decomposition(k2, d));
    }
    SECTION("5-cycle: empty S, the whole cycle") {
        const auto g = cycle(5);
        const auto d = gallai_edmonds(g);
        CHECK(d.S.empty());
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].size() == 5);
        CHECK(verify_decomposition(g, d));
    }
    SECTION("star K_{1,3}") {
        SimpleGraph g(4);
        for (int i = 1; i < 4; ++i) g.add_edge(0, i);
        const auto sets = gallai_edmonds_sets(g, std::vector<char>(4, 1));
        CHECK(sets.A == std::vector<int>{0});
        CHECK(sets.D == std::vector<int>{1, 2, 3});
        const auto d = gallai_edmonds(g);
        CHECK(d.S == std::vector<int>{0});
        CHECK(d.deficiency() == 2);
    }
    SECTION("fullerene: every component factor-critical") {
        const auto g = to_simple_graph(oracle::c20());
        const auto d = gallai_edmonds(g);
        CHECK(verify_decomposition(g, d));
        CHECK(d.deficiency() == 0);
    }
}

TEST_CASE("verification rejects broken decompositions", "[matching]") {
    const auto g = cycle(5);
    auto d = gallai_edmonds(g);
    auto broken = d;
    broken.components[0].pop_back();
    CHECK(!verify_decomposition(g, broken));
    broken = d;
    broken.S.push_back(0);
    CHECK(!verify_decomposition(g, broken));

    SimpleGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    GEDecomposition fake;
    fake.components = {{0, 1, 2}};
    fake.factor_critical = {1};
    CHECK(!verify_decomposition(path, fake));  // a 3-path is not factor-critical
}

TEST_CASE("blossom agrees with brute force on every graph up to 7 vertices", "[matching][oracle]") {
    int checked = 0;
    for (int n = 1; n <= 7; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
            const auto g = oracle::graph_from_bits(n, code);
            if (!oracle::connected(g)) continue;
            ++checked;
            const int got = max_matching(g).size();
            if (got != oracle::brute_max_matching(g)) {
                FAIL("n=" << n << " code=" << code << " blossom=" << got);
            }
        }
    }
    // connected labeled graphs on 1..7 vertices (OEIS A001187)
    CHECK(checked == 1 + 1 + 4 + 38 + 728 + 26704 + 1866256);
}

TEST_CASE("blossom agrees with brute force on random graphs up to 16 vertices", "[matching][oracle]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> order(2, 16);
    std::uniform_real_distribution<double> density(0.08, 0.6);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = oracle::random_graph(rng, order(rng), density(rng));
        REQUIRE(max_matching(g).size() == oracle::brute_max_matching(g));
        check_certificates(g);
    }
}

TEST_CASE("hinted matchings reach the same size", "[matching]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(rng, 14, 0.25);
        const auto base = max_matching(g);
        std::vector<char> alive(g.order(), 1);
        alive[trial % g.order()] = 0;
        const auto hinted = max_matching(g, alive, &base);
        const auto fresh = max_matching(g.without(std::vector<int>{trial % g.order()}));
        CHECK(hinted.size() == fresh.size());
        CHECK(hinted.mate[trial % g.order()] == -1);
    }
}

TEST_CASE("F42 minus its failing hexagon pair", "[matching][fullerene]") {
    const auto exceptional = oracle::lr_free_non2resonant(42);
    REQUIRE(exceptional.size() == 1);
    const auto& [f42, pair] = exceptional.front();
    REQUIRE(pair.faces.size() == 2);
    std::vector<int> removed;
    for (int id : pair.faces)
        for (Vertex v : f42.face(id).walk) removed.push_back(v);
    const auto h = to_simple_graph(f42).without(removed);
    const auto pm = has_perfect_matching(h);
    CHECK(!pm.perfect);
    REQUIRE(pm.barrier);
    CHECK(static_cast<int>(pm.barrier->components.size()) >= static_cast<int>(pm.barrier->S.size()) + 2);
    CHECK(verify_decomposition(h, *pm.barrier));
    for (const auto& c : pm.barrier->components)
        if (c.size() >= 3) CHECK(is_two_connected(h.induced(c)));
}

TEST_CASE("factor-critical pieces of fullerene subgraphs are 2-connected", "[matching][fullerene]") {
    // decompositions of F - V(H) for every failing hexagon pair up to 44 vertices
    int nontrivial = 0;
    for (int n = 26; n <= 44; n += 2)
        for (const auto& g : enumerate_isomers(n)) {
            ResonanceChecker checker(g);
            for_each_disjoint_hexagon_pattern(g, 2, [&](std::span<const int> f) {
                if (checker.resonant(f)) return true;
                std::vector<char> alive(g.order(), 1);
                for (int id : f)
                    for (Vertex v : g.face(id).walk) alive[v] = 0;
                const auto& sg = checker.simple_graph();
                const auto d = gallai_edmonds(sg, alive);
                REQUIRE(verify_decomposition(sg, alive, d));
                CHECK(d.deficiency() >= 2);
                for (const auto& c : d.components)
                    if (c.size() >= 3) {
                        ++nontrivial;
                        CHECK(is_two_connected(sg.induced(c)));
                    }
                return true;
            });
        }
    CHECK(nontrivial > 0);
}
