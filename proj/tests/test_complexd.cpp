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

#include <sstream>

#include "recolor/complexd.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;

namespace {

std::vector<std::vector<int>> adj_of_complex(const ComplexD& k) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(k.vertex_count()));
    for (auto [u, v] : k.skeleton_edges()) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> adj_of(const Triangulation& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj[static_cast<size_t>(v)] = g.link(v);
    return adj;
}

}  // namespace

TEST_CASE("boundary of the 4-simplex") {
    std::vector<std::vector<int>> facets;
    for (int drop = 0; drop < 5; ++drop) {
        std::vector<int> f;
        for (int v = 0; v < 5; ++v)
            if (v != drop) f.push_back(v);
        if (drop % 2 == 1) std::swap(f[0], f[1]);
        facets.push_back(f);
    }
    ComplexD simplex4(3, 5, facets, true);
    CHECK(simplex4.dimension() == 3);
    CHECK(simplex4.facet_count() == 5);
    CHECK_FALSE(simplex4.is_even());

    // flipping one facet breaks orientation coherence
    std::swap(facets[2][0], facets[2][1]);
    CHECK_THROWS_AS(ComplexD(3, 5, facets, true), validation_error);
}

TEST_CASE("complex validation rejects malformed inputs") {
    CHECK_THROWS_AS(ComplexD(1, 4, {{0, 1}}, true), validation_error);
    CHECK_THROWS_AS(ComplexD(2, 3, {{0, 1, 2}}, true), validation_error);
    CHECK_THROWS_AS(ComplexD(2, 6, {}, true), validation_error);
    CHECK_THROWS_AS(ComplexD(2, 6, {{0, 1, 1}, {0, 2, 3}}, true), validation_error);
    CHECK_THROWS_AS(ComplexD(2, 6, {{0, 1, 9}, {0, 2, 3}}, true), validation_error);
    // arity mismatch
    CHECK_THROWS_AS(ComplexD(3, 6, {{0, 1, 2}, {0, 2, 3}}, true), validation_error);
}

TEST_CASE("suspension doubles facets and adds two vertices") {
    Triangulation oct = Triangulation::octahedron();
    ComplexD s_oct = suspend(oct);
    CHECK(s_oct.dimension() == 3);
    CHECK(s_oct.vertex_count() == 8);
    CHECK(s_oct.facet_count() == 16);
    CHECK(s_oct.is_even());

    // a low-color coloring extends by one fresh color on both apexes and is
    // always balanced
    Coloring three = find_3_coloring(oct);
    Coloring c{5, three.at};
    c.at.push_back(3);
    c.at.push_back(3);
    CHECK(is_proper_on_skeleton(s_oct, c));
    CHECK(balance_check_d(s_oct, c));

    ComplexD ss_oct = suspend(s_oct);
    CHECK(ss_oct.dimension() == 4);
    CHECK(ss_oct.vertex_count() == 10);
    CHECK(ss_oct.facet_count() == 32);
    CHECK(ss_oct.is_even());
}

TEST_CASE("2-dimensional complexes mirror triangulations") {
    Triangulation g = Triangulation::double_wheel(8);
    ComplexD k = from_triangulation(g);
    CHECK(k.dimension() == 2);
    CHECK(k.vertex_count() == g.vertex_count());
    CHECK(k.facet_count() == g.face_count());
    CHECK(k.is_even() == g.is_even());
    CHECK(k.skeleton_edges().size() == static_cast<size_t>(g.edge_count()));
}

TEST_CASE("trid round trip") {
    ComplexD s_oct = suspend(Triangulation::octahedron());
    std::ostringstream out;
    save_trid(out, s_oct);
    ComplexD back = load_trid_string(out.str());
    CHECK(back.dimension() == s_oct.dimension());
    CHECK(back.vertex_count() == s_oct.vertex_count());
    CHECK(back.facets() == s_oct.facets());
    CHECK(back.h1_trivial() == s_oct.h1_trivial());

    CHECK_THROWS_AS(load_trid_string("trid 3 5 2 1\n0 1 2 3\n0 1 2 4\n"), validation_error);
    CHECK_THROWS_AS(load_trid_string("tri2 6 8\n"), validation_error);
}

TEST_CASE("joins of even cycles") {
    ComplexD j44 = join_cycles(4, 4);
    CHECK(j44.dimension() == 3);
    CHECK(j44.vertex_count() == 8);
    CHECK(j44.facet_count() == 16);
    CHECK(j44.is_even());

    ComplexD j64 = join_cycles(6, 4);
    CHECK(j64.vertex_count() == 10);
    CHECK(j64.facet_count() == 24);
    CHECK(j64.is_even());

    CHECK_THROWS_AS(join_cycles(5, 4), validation_error);
    CHECK_THROWS_AS(join_cycles(4, 2), validation_error);

    // reference verdicts: a laps-around coloring of the hexagon is stuck, a
    // back-and-forth coloring of the square is movable
    Coloring c64{5, {0, 1, 2, 0, 1, 2, 3, 4, 3, 4}};
    CHECK(is_proper_on_skeleton(j64, c64));
    CHECK_FALSE(balance_check_d(j64, c64));
    Coloring c44{5, {0, 1, 0, 1, 3, 4, 3, 4}};
    CHECK(is_proper_on_skeleton(j44, c44));
    CHECK(balance_check_d(j44, c44));
}

TEST_CASE("balance test input validation in higher dimension") {
    ComplexD j44 = join_cycles(4, 4);
    Coloring wrong_k{4, {0, 1, 0, 1, 2, 3, 2, 3}};
    CHECK_THROWS_AS(balance_check_d(j44, wrong_k), validation_error);
    Coloring improper{5, {0, 0, 0, 1, 3, 4, 3, 4}};
    CHECK_THROWS_AS(balance_check_d(j44, improper), validation_error);
}

TEST_CASE("winding degree of cyclic three-color words") {
    CHECK(winding_degree({0, 1, 2, 0, 1, 2}) == 2);
    CHECK(winding_degree({0, 1, 0, 1}) == 0);
    CHECK(winding_degree({0, 2, 1, 0, 2, 1}) == -2);
    CHECK_THROWS_AS(winding_degree({0, 1, 1, 2}), validation_error);
    // wrapping around repeats the first color
    CHECK_THROWS_AS(winding_degree({0, 1, 2, 0, 1, 2, 0}), validation_error);
    CHECK_THROWS_AS(winding_degree({0, 3, 0, 1}), validation_error);
}

TEST_CASE("dimension-2 balance agrees with the surface test on every coloring") {
    for (const Triangulation& g :
         {Triangulation::octahedron(), Triangulation::double_wheel(8),
          Triangulation::double_wheel(10)}) {
        ComplexD k2 = from_triangulation(g);
        Oracle oracle(adj_of(g), 4, {}, 200000000ULL);
        for (const auto& vec : oracle.enumerate_colorings()) {
            Coloring c{4, vec};
            CHECK(balance_check_d(k2, c) == is_balanced(g, c));
        }
    }
}

TEST_CASE("join balance is zero winding of the free cycle") {
    for (int m : {4, 6}) {
        for (int n : {4, 6}) {
            ComplexD j = join_cycles(m, n);
            // all proper colorings of the first cycle over {0,1,2}
            std::vector<std::vector<int>> mcols;
            std::vector<int> cur(static_cast<size_t>(m), -1);
            auto rec = [&](auto&& self, int i) -> void {
                if (i == m) {
                    if (cur[static_cast<size_t>(m - 1)] != cur[0]) mcols.push_back(cur);
                    return;
                }
                for (int c = 0; c < 3; ++c) {
                    if (i > 0 && cur[static_cast<size_t>(i - 1)] == c) continue;
                    cur[static_cast<size_t>(i)] = c;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
            REQUIRE_FALSE(mcols.empty());
            for (const auto& mc : mcols) {
                for (int phase = 0; phase < 2; ++phase) {
                    Coloring c{5, mc};
                    for (int t = 0; t < n; ++t) c.at.push_back(3 + ((t + phase) % 2));
                    REQUIRE(is_proper_on_skeleton(j, c));
                    CHECK(balance_check_d(j, c) == (winding_degree(mc) == 0));
                }
            }
        }
    }
}

TEST_CASE("suspension preserves reachability verdicts") {
    for (const Triangulation& g :
         {Triangulation::octahedron(), Triangulation::double_wheel(8)}) {
        ComplexD s = suspend(g);
        Oracle base(adj_of(g), 4, {}, 200000000ULL);
        Oracle lifted(adj_of_complex(s), 5, {}, 200000000ULL);
        auto lift = [&](const Coloring& c) {
            Coloring out{5, c.at};
            out.at.push_back(4);
            out.at.push_back(4);
            return out;
        };
        Coloring three = find_3_coloring(g);
        std::vector<Coloring> others;
        if (!decide_connected(g)) others.push_back(unbalanced_witness(g));
        auto all = base.enumerate_colorings();
        for (size_t i = 0; i < all.size(); i += all.size() / 5 + 1)
            others.push_back(Coloring{4, all[i]});
        int yes = 0, no = 0;
        for (const Coloring& beta : others) {
            bool base_yes = base.same_component(three.at, beta.at).has_value();
            Coloring a = lift(three), b = lift(beta);
            REQUIRE(is_proper_on_skeleton(s, a));
            REQUIRE(is_proper_on_skeleton(s, b));
            bool lift_yes = lifted.same_component(a.at, b.at).has_value();
            CHECK(base_yes == lift_yes);
            (base_yes ? yes : no) += 1;
        }
        CHECK(yes > 0);
        if (!decide_connected(g)) CHECK(no > 0);
    }
}
