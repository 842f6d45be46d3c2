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

#include <cstdlib>

#include "recolor/connectivity.hpp"
#include "recolor/coloring.hpp"
#include "recolor/oracle.hpp"
#include "recolor/triangulation.hpp"

using namespace recolor;

namespace {

std::vector<std::vector<int>> adj_of(const Triangulation& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj[static_cast<size_t>(v)] = g.link(v);
    return adj;
}

}  // namespace

TEST_CASE("enumeration is exhaustive and lexicographic") {
    Triangulation g = Triangulation::octahedron();
    Oracle oracle(adj_of(g), 4);
    auto all = oracle.enumerate_colorings();
    REQUIRE(all.size() == 96);
    CHECK(all.front() == std::vector<int>({0, 1, 0, 1, 2, 2}));
    for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
    for (const auto& c : all) CHECK(oracle.proper(c));
}

TEST_CASE("list restrictions prune the enumeration") {
    // a single edge, both endpoints on {0,1}
    Oracle oracle({{1}, {0}}, 4, {{0, 1}, {0, 1}});
    auto all = oracle.enumerate_colorings();
    REQUIRE(all.size() == 2);
    CHECK(all[0] == std::vector<int>({0, 1}));
    CHECK(all[1] == std::vector<int>({1, 0}));
    CHECK_FALSE(oracle.proper({2, 1}));   // outside its list
    CHECK_FALSE(oracle.proper({1, 1}));   // monochromatic edge
    // the two proper states cannot reach each other by single moves
    CHECK_FALSE(oracle.same_component({0, 1}, {1, 0}).has_value());
    CHECK(oracle.component_of({0, 1}).size() == 1);
    CHECK_FALSE(oracle.reconfig_connected());
}

TEST_CASE("shortest paths replay as legal recolorings") {
    Triangulation g = Triangulation::octahedron();
    Oracle oracle(adj_of(g), 4);
    Coloring a = find_3_coloring(g);
    auto all = oracle.enumerate_colorings();
    for (size_t i = 0; i < all.size(); i += 17) {
        auto path = oracle.same_component(a.at, all[i]);
        REQUIRE(path.has_value());
        Coloring cur = a;
        for (const Step& s : *path) cur = apply_single_change(g, cur, s.v, s.c);
        CHECK(cur.at == all[i]);
    }
    CHECK(oracle.same_component(a.at, a.at)->empty());
    CHECK_THROWS_AS(oracle.same_component(a.at, {0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("component membership matches balance on the glued pair") {
    Triangulation g = Triangulation::octahedron_chain(2);
    Oracle oracle(adj_of(g), 4);
    Coloring three = find_3_coloring(g);
    auto comp = oracle.component_of(three.at);
    // this graph's coloring space is one component of 384 states
    CHECK(comp.size() == 384);
    CHECK(oracle.reconfig_connected());
}

TEST_CASE("whole-space connectivity on small instances") {
    Oracle oct(adj_of(Triangulation::octahedron()), 4);
    CHECK(oct.reconfig_connected());
    Oracle dw8(adj_of(Triangulation::double_wheel(8)), 4);
    CHECK_FALSE(dw8.reconfig_connected());
}

TEST_CASE("the reference unbalanced state on the 8-vertex double wheel is isolated") {
    Triangulation g = Triangulation::double_wheel(8);
    Oracle oracle(adj_of(g), 4);
    Coloring w = unbalanced_witness(g);
    REQUIRE(is_proper(g, w));
    REQUIRE_FALSE(is_balanced(g, w));
    // the witness admits no legal move at all
    CHECK(oracle.component_of(w.at).size() == 1);
    Coloring three = find_3_coloring(g);
    CHECK_FALSE(oracle.same_component(three.at, w.at).has_value());
}

TEST_CASE("search budgets abort runaway explorations") {
    Triangulation g = Triangulation::double_wheel(10);
    Oracle tiny(adj_of(g), 4, {}, 5);
    CHECK_THROWS_AS(tiny.reconfig_connected(), budget_exceeded_error);

    Oracle big(adj_of(g), 4, {}, 200000000ULL);
    CHECK_FALSE(big.reconfig_connected());
    CHECK(big.states_visited() > 0);
}

TEST_CASE("the budget default comes from the environment") {
    CHECK(setenv("RECOLOR_ORACLE_BUDGET", "7", 1) == 0);
    CHECK(oracle_budget_from_env() == 7);
    Triangulation g = Triangulation::double_wheel(10);
    Oracle oracle(adj_of(g), 4);  // picks up the tiny budget
    CHECK_THROWS_AS(oracle.reconfig_connected(), budget_exceeded_error);
    CHECK(unsetenv("RECOLOR_ORACLE_BUDGET") == 0);
    CHECK(oracle_budget_from_env() == 50000000ULL);
}

TEST_CASE("oracle rejects malformed inputs") {
    CHECK_THROWS_AS(Oracle({{1}, {0}}, 4, {{0, 1}}), std::invalid_argument);
    Oracle oracle(adj_of(Triangulation::octahedron()), 4);
    CHECK_THROWS_AS(oracle.component_of({0, 0, 0, 0, 0, 0}), std::invalid_argument);
}
