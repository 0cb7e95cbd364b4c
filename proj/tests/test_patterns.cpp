#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "resonantia/resonantia.hpp"

using namespace resonantia;

TEST_CASE("dodecahedron pentagon adjacency is the icosahedron", "[patterns]") {
    const auto g = oracle::c20();
    const auto adj = pentagon_adjacency(g);
    CHECK(adj.nodes.size() == 12);
    CHECK(adj.links.size() == 30);
    CHECK(std::is_sorted(adj.links.begin(), adj.links.end()));
    for (auto [a, b] : adj.links) {
        CHECK(a < b);
        CHECK(adj.linked(b, a));
    }
    CHECK(contains_L(g));
    CHECK(contains_R(g));
    CHECK(has_pentagon_triangle(g));
    CHECK(!is_IPR(g));
}

TEST_CASE("C60 has isolated pentagons and no L or R", "[patterns]") {
    const auto g = oracle::c60();
    CHECK(pentagon_adjacency(g).links.empty());
    CHECK(is_IPR(g));
    CHECK(!contains_L(g));
    CHECK(!contains_R(g));
    CHECK(!has_pentagon_triangle(g));
}

TEST_CASE("nanotube caps contain R", "[patterns][nanotube]") {
    for (int k = 1; k <= 5; ++k) {
        INFO("k = " << k);
        const auto g = construct_nanotube(k);
        const auto r = find_R(g);
        REQUIRE(r);
        CHECK(verify_witness(g, *r));
        CHECK(!is_IPR(g));
    }
}

TEST_CASE("witnesses re-verify and tampered witnesses fail", "[patterns]") {
    const auto g = oracle::c20();
    const auto l = find_L(g);
    REQUIRE(l);
    CHECK(l->kind == PatternKind::kL);
    CHECK(l->faces.size() == 4);
    CHECK(verify_witness(g, *l));
    auto bad = *l;
    std::swap(bad.faces[0], bad.faces[2]);
    CHECK(!verify_witness(g, bad));

    const auto r = find_R(g);
    REQUIRE(r);
    CHECK(std::string(to_string(r->kind)) == "R");
    auto far = *r;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!g.face(r->faces[0]).contains(v)) far.anchor = v;
    CHECK(!verify_witness(g, far));

    const auto c60 = oracle::c60();
    PatternWitness hex{PatternKind::kR, {c60.hexagon_ids()[0], c60.pentagon_ids()[0], c60.pentagon_ids()[1]}, 0};
    CHECK(!verify_witness(c60, hex));
}

TEST_CASE("pattern predicates across the corpus", "[patterns]") {
    int lr_free = 0;
    for (int n = 20; n <= 48; n += 2)
        for (const auto& g : enumerate_isomers(n)) {
            const auto l = find_L(g), r = find_R(g);
            if (l) CHECK(verify_witness(g, *l));
            if (r) CHECK(verify_witness(g, *r));
            CHECK(r.has_value() == has_pentagon_triangle(g));
            CHECK(!is_IPR(g));  // none below 60 vertices
            lr_free += !l && !r;
        }
    CHECK(lr_free > 0);
}
