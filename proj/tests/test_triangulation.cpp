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
#include <sstream>

#include "recolor/triangulation.hpp"

using namespace recolor;

TEST_CASE("octahedron invariants") {
    Triangulation g = Triangulation::octahedron();
    REQUIRE(g.vertex_count() == 6);
    REQUIRE(g.edge_count() == 12);
    REQUIRE(g.face_count() == 8);
    REQUIRE(g.is_even());
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
    // Euler characteristic of a sphere
    CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
}

TEST_CASE("rotation systems are consistent link cycles") {
    for (const Triangulation& g :
         {Triangulation::octahedron(), Triangulation::double_wheel(8),
          Triangulation::tetrahedron().barycentric_subdivision()}) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& rot = g.link(v);
            REQUIRE(rot.size() == static_cast<size_t>(g.degree(v)));
            // consecutive link entries close triangles with v
            for (size_t i = 0; i < rot.size(); ++i) {
                int a = rot[i], b = rot[(i + 1) % rot.size()];
                CHECK(g.adjacent(a, b));
                int f = g.face_with_directed_edge(v, a);
                REQUIRE(f >= 0);
                CHECK(g.third_vertex(f, v, a) == b);
                CHECK(g.find_face(v, a, b) == f);
            }
            // star/link edge helpers agree with edge ids
            auto star = g.star_edge_ids(v);
            auto ring = g.link_edge_ids(v);
            REQUIRE(star.size() == rot.size());
            REQUIRE(ring.size() == rot.size());
            for (size_t i = 0; i < rot.size(); ++i) {
                CHECK(star[i] == g.edge_id(v, rot[i]));
                CHECK(ring[i] == g.edge_id(rot[i], rot[(i + 1) % rot.size()]));
            }
        }
    }
}

TEST_CASE("edge endpoints and cofaces line up") {
    Triangulation g = Triangulation::double_wheel(10);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_vertices(e);
        CHECK(g.edge_id(u, v) == e);
        CHECK(g.edge_has_endpoint(e, u));
        CHECK(g.edge_has_endpoint(e, v));
        CHECK(g.other_endpoint(e, u) == v);
        auto [f1, f2] = g.edge_cofaces(e);
        for (int f : {f1, f2}) {
            const Tri& t = g.face(f);
            int hits = 0;
            for (int x : t) hits += (x == u) + (x == v);
            CHECK(hits == 2);
        }
    }
}

TEST_CASE("double wheels") {
    Triangulation g = Triangulation::double_wheel(8);
    REQUIRE(g.vertex_count() == 8);
    REQUIRE(g.face_count() == 12);
    CHECK(g.is_even());
    CHECK(g.degree(6) == 6);
    CHECK(g.degree(7) == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
    CHECK_FALSE(g.adjacent(6, 7));

    // odd vertex count means odd cycle degrees
    CHECK_FALSE(Triangulation::double_wheel(7).is_even());
    CHECK_THROWS_AS(Triangulation::double_wheel(4), validation_error);
}

TEST_CASE("tetrahedron is a valid but odd triangulation") {
    Triangulation g = Triangulation::tetrahedron();
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.face_count() == 4);
    CHECK_FALSE(g.is_even());
}

TEST_CASE("validation rejects broken face lists") {
    // a directed edge appearing twice breaks the double cover
    CHECK_THROWS_AS(Triangulation(4, {{0, 1, 2}, {0, 1, 3}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}),
                    validation_error);
    // repeated vertex in a face
    CHECK_THROWS_AS(Triangulation(4, {{0, 1, 1}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}),
                    validation_error);
    // vertex id out of range
    CHECK_THROWS_AS(Triangulation(4, {{0, 1, 7}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}),
                    validation_error);
    // two disjoint tetrahedra: closed surface but not connected, Euler 4
    std::vector<Tri> two;
    for (const Tri& t : Triangulation::tetrahedron().faces()) {
        two.push_back(t);
        two.push_back({t[0] + 4, t[1] + 4, t[2] + 4});
    }
    CHECK_THROWS_AS(Triangulation(8, two), validation_error);
    // a torus: closed, connected, all links cycles, but Euler 0
    {
        std::vector<Tri> fs;
        auto id = [](int r, int c) { return 3 * ((r + 3) % 3) + ((c + 3) % 3); };
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                fs.push_back({id(r, c), id(r + 1, c), id(r + 1, c + 1)});
                fs.push_back({id(r, c), id(r + 1, c + 1), id(r, c + 1)});
            }
        CHECK_THROWS_AS(Triangulation(9, fs), validation_error);
    }
    // pinched sphere: vertex whose star is two disjoint cones
    {
        // two tetrahedra sharing only vertex 0
        std::vector<Tri> fs = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2},
                               {0, 4, 5}, {0, 5, 6}, {0, 6, 4}, {4, 6, 5}};
        CHECK_THROWS_AS(Triangulation(7, fs), validation_error);
    }
    CHECK_THROWS_AS(Triangulation(3, {{0, 1, 2}}), validation_error);
}

TEST_CASE("gluing two octahedra along a face") {
    Triangulation oct = Triangulation::octahedron();
    Triangulation g = Triangulation::glue_along_face(oct, 0, oct, 0);
    REQUIRE(g.vertex_count() == 9);
    REQUIRE(g.face_count() == 14);
    CHECK(g.is_even());
    CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
    CHECK_THROWS_AS(Triangulation::glue_along_face(oct, 8, oct, 0), validation_error);

    // all three rotations of the glued face give valid even spheres
    for (int r = 1; r < 3; ++r) {
        Triangulation h = Triangulation::glue_along_face(oct, 0, oct, 0, r);
        CHECK(h.vertex_count() == 9);
        CHECK(h.is_even());
    }
}

TEST_CASE("barycentric subdivision") {
    Triangulation t = Triangulation::tetrahedron();
    Triangulation b = t.barycentric_subdivision();
    REQUIRE(b.vertex_count() == 4 + 6 + 4);
    REQUIRE(b.face_count() == 6 * 4);
    CHECK(b.is_even());

    Triangulation oct = Triangulation::octahedron();
    Triangulation bo = oct.barycentric_subdivision();
    CHECK(bo.vertex_count() == 6 + 12 + 8);
    CHECK(bo.face_count() == 48);
    CHECK(bo.is_even());
}

TEST_CASE("octahedron chains") {
    CHECK_THROWS_AS(Triangulation::octahedron_chain(0), validation_error);

    Triangulation one = Triangulation::octahedron_chain(1);
    CHECK(one.vertex_count() == 6);
    CHECK(one.face_count() == 8);

    // two blocks match explicit gluing vertex-for-vertex in size and parity
    Triangulation two = Triangulation::octahedron_chain(2);
    Triangulation oct = Triangulation::octahedron();
    Triangulation glued = Triangulation::glue_along_face(oct, 0, oct, 0);
    CHECK(two.vertex_count() == glued.vertex_count());
    CHECK(two.face_count() == glued.face_count());
    CHECK(two.is_even());

    for (int k : {3, 7, 20}) {
        Triangulation chain = Triangulation::octahedron_chain(k);
        CHECK(chain.vertex_count() == 6 + 3 * (k - 1));
        CHECK(chain.face_count() == 6 * k + 2);
        CHECK(chain.is_even());
        CHECK(chain.vertex_count() - chain.edge_count() + chain.face_count() == 2);
    }
}

TEST_CASE("tri2 round trip") {
    Triangulation g = Triangulation::double_wheel(10);
    std::ostringstream out;
    g.save_tri2(out);
    std::istringstream in(out.str());
    Triangulation h = Triangulation::load_tri2(in);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.faces() == g.faces());

    std::istringstream bad1("tri3 4 4\n");
    CHECK_THROWS_AS(Triangulation::load_tri2(bad1), validation_error);
    std::istringstream bad2("tri2 4 4\n0 1 2\n0 2 3\n");
    CHECK_THROWS_AS(Triangulation::load_tri2(bad2), validation_error);
}

TEST_CASE("json round trip") {
    Triangulation g = Triangulation::octahedron_chain(3);
    nlohmann::ordered_json j = g.to_json();
    CHECK(j.at("dim") == 2);
    CHECK(j.at("vertices") == g.vertex_count());
    Triangulation h = Triangulation::from_json(j);
    CHECK(h.faces() == g.faces());

    nlohmann::json wrong = j;
    wrong["dim"] = 3;
    CHECK_THROWS_AS(Triangulation::from_json(wrong), validation_error);
}
