// Copyright 2026
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "recolor/connectivity.hpp"
#include "recolor/oracle.hpp"
#include "recolor/reconfigure.hpp"

using namespace recolor;

namespace {

std::vector<std::vector<int>> adj_of(const Triangulation& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj[static_cast<size_t>(v)] = g.link(v);
    return adj;
}

// Exhaustive cross-check of the linear-time decision against breadth-first
// search over the full coloring space, witness included.
void cross_check(const std::string& name, const Triangulation& g) {
    INFO(name);
    bool fast = decide_connected(g);
    Oracle oracle(adj_of(g), 4, {}, 200000000ULL);
    bool slow = oracle.reconfig_connected();
    CHECK(fast == slow);
    if (!fast) {
        Coloring w = unbalanced_witness(g);
        CHECK(is_proper(g, w));
        CHECK_FALSE(is_balanced(g, w));
        Coloring three = find_3_coloring(g);
        CHECK_FALSE(oracle.same_component(three.at, w.at).has_value());
    }
}

}  // namespace

TEST_CASE("octahedron detection") {
    CHECK(is_octahedron(Triangulation::octahedron()));
    CHECK_FALSE(is_octahedron(Triangulation::tetrahedron()));
    CHECK_FALSE(is_octahedron(Triangulation::double_wheel(8)));
    CHECK(four_connected(Triangulation::octahedron()));
    CHECK(four_connected(Triangulation::double_wheel(8)));
}

TEST_CASE("piece decomposition: 4-connected graphs are their own piece") {
    Triangulation oct = Triangulation::octahedron();
    PieceDecomposition d = four_connected_pieces(oct);
    CHECK(d.triangles.empty());
    REQUIRE(d.pieces.size() == 1);
    CHECK(is_octahedron(d.pieces[0].tri));
    CHECK(decide_connected(oct));
}

TEST_CASE("piece decomposition: one separating triangle, two pieces") {
    Triangulation oct = Triangulation::octahedron();
    Triangulation glued = Triangulation::glue_along_face(oct, 0, oct, 0);
    PieceDecomposition d = four_connected_pieces(glued);
    REQUIRE(d.triangles.size() == 1);
    REQUIRE(d.pieces.size() == 2);
    for (const Piece& p : d.pieces) CHECK(is_octahedron(p.tri));
    CHECK(decide_connected(glued));
    // vertex maps cover the separating triangle on both sides
    for (const Piece& p : d.pieces) {
        std::set<int> gv(p.to_g.begin(), p.to_g.end());
        for (int x : d.triangles[0]) CHECK(gv.count(x) == 1);
    }
    // both pieces are recorded as neighbors of the triangle
    REQUIRE(d.triangle_pieces.size() == 1);
    CHECK(d.triangle_pieces[0][0] != d.triangle_pieces[0][1]);
}

TEST_CASE("piece decomposition: octahedron glued onto every face") {
    Triangulation oct = Triangulation::octahedron();
    Triangulation center = oct;
    for (const Tri& t : oct.faces()) {
        int f = center.find_face(t[0], t[1], t[2]);
        REQUIRE(f >= 0);
        center = Triangulation::glue_along_face(center, f, oct, 0);
    }
    REQUIRE(center.vertex_count() == 6 + 8 * 3);
    REQUIRE(center.is_even());
    PieceDecomposition d = four_connected_pieces(center);
    CHECK(d.triangles.size() == 8);
    REQUIRE(d.pieces.size() == 9);
    int cap_only = 0;
    for (const Piece& p : d.pieces) {
        CHECK(is_octahedron(p.tri));
        if (p.cap_faces.size() == 8) ++cap_only;
    }
    // the central piece consists of cap faces only
    CHECK(cap_only == 1);
    CHECK(decide_connected(center));
}

TEST_CASE("contraction chains end at the octahedron") {
    Triangulation dw8 = Triangulation::double_wheel(8);
    auto chain = contraction_sequence(dw8);
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].second.kind == ContractionKind::FourContraction);
    CHECK(is_octahedron(chain[0].first));

    auto chain10 = contraction_sequence(Triangulation::double_wheel(10));
    REQUIRE(chain10.size() == 2);
    CHECK(is_octahedron(chain10.back().first));

    CHECK(contraction_sequence(Triangulation::octahedron()).empty());

    Triangulation bs = Triangulation::tetrahedron().barycentric_subdivision();
    auto chain_bs = contraction_sequence(bs);
    REQUIRE(chain_bs.size() == 4);
    CHECK(is_octahedron(chain_bs.back().first));
    for (const auto& [smaller, step] : chain_bs) {
        CHECK(smaller.is_even());
        CHECK(four_connected(smaller));
    }

    // gluing creates a separating triangle, so the chain refuses to start
    Triangulation oct = Triangulation::octahedron();
    CHECK_THROWS_AS(contraction_sequence(Triangulation::glue_along_face(oct, 0, oct, 0)),
                    validation_error);
}

TEST_CASE("lifting colorings through contractions preserves structure") {
    Triangulation dw10 = Triangulation::double_wheel(10);
    auto chain = contraction_sequence(dw10);
    const Triangulation* larger = &dw10;
    for (size_t s = 0; s < chain.size(); ++s) {
        const Triangulation& smaller = chain[s].first;
        Oracle oracle(adj_of(smaller), 4, {}, 200000000ULL);
        for (const auto& vec : oracle.enumerate_colorings()) {
            Coloring c{4, vec};
            Coloring up = lift_coloring(*larger, chain[s].second, c);
            CHECK(is_proper(*larger, up));
            if (!is_balanced(smaller, c)) CHECK_FALSE(is_balanced(*larger, up));
        }
        larger = &chain[s].first;
    }
}

TEST_CASE("splits are inverse contractions") {
    Triangulation oct = Triangulation::octahedron();
    int tried = 0;
    for (int x = 0; x < oct.vertex_count(); ++x) {
        int d = oct.degree(x);
        for (int i = 0; i < d; ++i) {
            for (int gap = 2; gap <= d - 2; ++gap) {
                int j = (i + gap) % d;
                Triangulation big =
                    gap % 2 == 0 ? four_split(oct, x, i, j) : twin_split(oct, x, i, j);
                CHECK(big.is_even());
                auto back = contraction_sequence(big);
                REQUIRE_FALSE(back.empty());
                CHECK(is_octahedron(back.back().first));
                ++tried;
            }
        }
    }
    CHECK(tried == 24);
}

TEST_CASE("seeded expansion is deterministic and stays even") {
    Triangulation oct = Triangulation::octahedron();
    Triangulation a = random_expand(oct, 10, 99);
    Triangulation b = random_expand(oct, 10, 99);
    CHECK(a.vertex_count() == b.vertex_count());
    CHECK(a.faces() == b.faces());
    CHECK(a.is_even());
    Triangulation c = random_expand(oct, 10, 100);
    CHECK((c.vertex_count() != a.vertex_count() || c.faces() != a.faces()));
}

TEST_CASE("fast connectivity decision matches exhaustive search") {
    Triangulation oct = Triangulation::octahedron();
    Triangulation dw8 = Triangulation::double_wheel(8);
    cross_check("octahedron", oct);
    cross_check("double_wheel(8)", dw8);
    cross_check("double_wheel(10)", Triangulation::double_wheel(10));
    cross_check("glued pair", Triangulation::glue_along_face(oct, 0, oct, 0));
    cross_check("dw8+oct", Triangulation::glue_along_face(dw8, 0, oct, 0));
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Triangulation g = random_expand(oct, 2, seed);
        if (g.vertex_count() <= 11) cross_check("expand-" + std::to_string(seed), g);
    }
}

TEST_CASE("witnesses on larger graphs stay honest") {
    Triangulation bs = Triangulation::tetrahedron().barycentric_subdivision();
    CHECK_FALSE(decide_connected(bs));
    Coloring w = unbalanced_witness(bs);
    CHECK(is_proper(bs, w));
    CHECK_FALSE(is_balanced(bs, w));

    Triangulation big = random_expand(Triangulation::octahedron(), 40, 12345);
    CHECK(big.vertex_count() == 105);
    if (!decide_connected(big)) {
        Coloring w2 = unbalanced_witness(big);
        CHECK(is_proper(big, w2));
        CHECK_FALSE(is_balanced(big, w2));
    }
}

TEST_CASE("witness requests on connected graphs are rejected") {
    CHECK_THROWS_AS(unbalanced_witness(Triangulation::octahedron()), validation_error);
    CHECK_THROWS_AS(unbalanced_witness(Triangulation::octahedron_chain(3)), validation_error);
}

TEST_CASE("separating triangle lists are exact") {
    Triangulation oct = Triangulation::octahedron();
    CHECK(separating_triangles(oct).empty());
    Triangulation glued = Triangulation::glue_along_face(oct, 0, oct, 0);
    auto tris = separating_triangles(glued);
    REQUIRE(tris.size() == 1);
    // the separating triple is the glued face's vertex set
    std::set<int> got(tris[0].begin(), tris[0].end());
    std::set<int> expect(oct.face(0).begin(), oct.face(0).end());
    CHECK(got == expect);
    CHECK(separating_triangles(Triangulation::octahedron_chain(5)).size() == 4);
}
