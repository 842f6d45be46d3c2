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

std::vector<Coloring> balanced_colorings(const Triangulation& g) {
    Oracle oracle(adj_of(g), 4, {}, 200000000ULL);
    std::vector<Coloring> out;
    for (const auto& vec : oracle.enumerate_colorings()) {
        Coloring c{4, vec};
        if (is_balanced(g, c)) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

TEST_CASE("sequence round trip") {
    RecolorSequence seq = {{0, 3}, {4, 1}, {2, 0}};
    std::ostringstream out;
    save_sequence(out, seq);
    CHECK(out.str() == "seq 3\n0 3\n4 1\n2 0\n");
    std::istringstream in(out.str());
    CHECK(load_sequence(in) == seq);

    std::istringstream bad1("sq 1\n0 3\n");
    CHECK_THROWS_AS(load_sequence(bad1), validation_error);
    std::istringstream bad2("seq 2\n0 3\n");
    CHECK_THROWS_AS(load_sequence(bad2), validation_error);
}

TEST_CASE("sequence verification catches every failure mode") {
    Triangulation g = Triangulation::octahedron();
    Coloring a = find_3_coloring(g);  // (1, 2, 1, 2, 0, 0) pattern up to labels

    // a legal one-step sequence: some vertex can take color 3
    int v_free = -1;
    for (int v = 0; v < g.vertex_count() && v_free < 0; ++v)
        if (!recolorable_colors(g, a, v).empty()) v_free = v;
    REQUIRE(v_free >= 0);
    int c_free = recolorable_colors(g, a, v_free)[0];
    Coloring b = apply_single_change(g, a, v_free, c_free);
    CHECK(verify_sequence(g, a, {{v_free, c_free}}, b).ok);
    CHECK(verify_sequence(g, a, {}, a).ok);

    VerifyResult r = verify_sequence(g, a, {}, b);
    CHECK_FALSE(r.ok);
    CHECK(r.fail_step == -1);  // replay ends at the wrong coloring

    Coloring improper = a;
    improper[0] = improper[1];
    CHECK_FALSE(verify_sequence(g, improper, {}, improper).ok);

    r = verify_sequence(g, a, {{17, 3}}, b);
    CHECK((!r.ok && r.fail_step == 0));
    r = verify_sequence(g, a, {{0, 9}}, b);
    CHECK((!r.ok && r.fail_step == 0));
    r = verify_sequence(g, a, {{v_free, a[v_free]}}, b);
    CHECK((!r.ok && r.fail_step == 0));  // no-op step
    // recoloring to a neighbor's color
    int bad_color = a[g.link(v_free)[0]];
    r = verify_sequence(g, a, {{v_free, bad_color}}, b);
    CHECK((!r.ok && r.fail_step == 0));
}

TEST_CASE("pairings exist exactly for balanced colorings") {
    Triangulation g = Triangulation::double_wheel(8);
    for (const Coloring& c : balanced_colorings(g)) {
        SignatureState st = SignatureState::compute(g, c);
        NSPairing pi = build_admissible_pairing(g, c, st);
        CHECK(pairing_admissible(g, st, pi));
    }
    Coloring w = unbalanced_witness(g);
    SignatureState st = SignatureState::compute(g, w);
    CHECK_THROWS_AS(build_admissible_pairing(g, w, st), validation_error);
}

TEST_CASE("trail decompositions are laminar and bounded") {
    Triangulation g = Triangulation::double_wheel(10);
    long long f2 = static_cast<long long>(g.face_count()) * g.face_count();
    for (const Coloring& c : balanced_colorings(g)) {
        SignatureState st = SignatureState::compute(g, c);
        NSPairing pi = build_admissible_pairing(g, c, st);
        TrailDecomposition td = trails_and_regions(g, pi);
        CHECK(laminar_family(td.trails));
        CHECK(td.volume() >= 0);
        CHECK(td.volume() <= f2);
        // every nonsingular edge lies on exactly one trail
        std::vector<int> owner(static_cast<size_t>(g.edge_count()), -1);
        for (size_t t = 0; t < td.trails.size(); ++t)
            for (int e : td.trails[t].edges) {
                CHECK(owner[static_cast<size_t>(e)] == -1);
                owner[static_cast<size_t>(e)] = static_cast<int>(t);
            }
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK((owner[static_cast<size_t>(e)] >= 0) == st.edge_nonsingular(e));
    }
    // a 3-coloring has no nonsingular edges and hence no trails
    Coloring three = find_3_coloring(g);
    SignatureState st = SignatureState::compute(g, three);
    NSPairing pi = build_admissible_pairing(g, three, st);
    TrailDecomposition td = trails_and_regions(g, pi);
    CHECK(td.trails.empty());
    CHECK(td.volume() == 0);
    CHECK_THROWS_AS(trails_and_regions(g, pi, 99), validation_error);
}

TEST_CASE("descent reaches a 3-coloring from every balanced start") {
    struct Row {
        Triangulation g;
        int max_len;  // longest descent over all balanced colorings
    };
    std::vector<Row> rows;
    rows.push_back({Triangulation::octahedron(), 1});
    rows.push_back({Triangulation::double_wheel(8), 3});
    rows.push_back({Triangulation::double_wheel(10), 6});
    rows.push_back({Triangulation::octahedron_chain(2), 3});
    rows.push_back({Triangulation::tetrahedron().barycentric_subdivision(), 8});

    for (const Row& row : rows) {
        const Triangulation& g = row.g;
        long long f2 = static_cast<long long>(g.face_count()) * g.face_count();
        int max_len = 0;
        for (const Coloring& c : balanced_colorings(g)) {
            DescentEngine eng(g, c);
            long long vol0 = eng.volume();
            auto moves = eng.run();
            RecolorSequence seq;
            for (const DescentMove& m : moves) seq.push_back({m.v, m.to});
            REQUIRE(verify_sequence(g, c, seq, eng.coloring()).ok);
            CHECK(colors_used(eng.coloring()) <= 3);
            CHECK(static_cast<long long>(seq.size()) <= vol0);
            CHECK(vol0 <= f2);
            max_len = std::max(max_len, static_cast<int>(seq.size()));

            // the non-incremental mode must agree step for step
            auto [seq2, fin2] = descend_to_3coloring(g, c, false);
            CHECK(seq2 == seq);
            CHECK(fin2.at == eng.coloring().at);
        }
        CHECK(max_len == row.max_len);
    }
}

TEST_CASE("descent rejects bad starts") {
    Triangulation g = Triangulation::double_wheel(8);
    Coloring w = unbalanced_witness(g);
    CHECK_THROWS_AS(DescentEngine(g, w), validation_error);
    Coloring improper = find_3_coloring(g);
    improper[0] = improper[g.link(0)[0]];
    CHECK_THROWS_AS(DescentEngine(g, improper), validation_error);
}

TEST_CASE("3-colorings bridge by moving whole color classes") {
    Triangulation g = Triangulation::double_wheel(10);
    Coloring a = find_3_coloring(g);
    // all relabelings of the three classes
    int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perm3) {
        Coloring b = a;
        for (int v = 0; v < g.vertex_count(); ++v) b[v] = p[a[v]];
        RecolorSequence seq = bridge_3colorings(g, a, b);
        CHECK(verify_sequence(g, a, seq, b).ok);
    }
    Coloring four = a;
    four[0] = 3;
    if (is_proper(g, four)) CHECK_THROWS_AS(bridge_3colorings(g, a, four), validation_error);
    Coloring five{5, a.at};
    CHECK_THROWS_AS(bridge_3colorings(g, a, five), validation_error);
}

TEST_CASE("solver statuses") {
    Triangulation g = Triangulation::double_wheel(8);
    std::vector<Coloring> bal = balanced_colorings(g);
    Coloring three = find_3_coloring(g);
    Coloring w = unbalanced_witness(g);
    // a second isolated state: swap two colors everywhere in the witness
    Coloring w2 = w;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (w2[v] == 0) w2[v] = 1;
        else if (w2[v] == 1) w2[v] = 0;
    }
    REQUIRE(w2.at != w.at);
    REQUIRE_FALSE(is_balanced(g, w2));

    SolveResult r = solve(g, three, three);
    CHECK(r.status == SolveStatus::Sequence);
    CHECK(r.steps.empty());

    r = solve(g, three, w);
    CHECK(r.status == SolveStatus::DifferentComponents);

    r = solve(g, w, w2);
    CHECK(r.status == SolveStatus::Undecided);

    SolveOptions opts;
    opts.oracle_fallback = true;
    r = solve(g, w, w2, opts);
    CHECK(r.status == SolveStatus::DifferentComponents);

    // the fallback still finds genuine unbalanced-to-unbalanced paths when
    // they exist: trivially, from a state to itself
    r = solve(g, w, w, opts);
    CHECK(r.status == SolveStatus::Sequence);
    CHECK(r.steps.empty());

    // size guard: with the fallback disabled by vertex bound, stay undecided
    opts.oracle_max_vertices = 4;
    r = solve(g, w, w2, opts);
    CHECK(r.status == SolveStatus::Undecided);

    Coloring improper = three;
    improper[0] = improper[g.link(0)[0]];
    CHECK_THROWS_AS(solve(g, improper, three), validation_error);
    Coloring five{5, three.at};
    CHECK_THROWS_AS(solve(g, five, three), validation_error);
}

TEST_CASE("solved sequences verify and respect the length budget") {
    for (const Triangulation& g :
         {Triangulation::octahedron(), Triangulation::double_wheel(8),
          Triangulation::octahedron_chain(2)}) {
        std::vector<Coloring> bal = balanced_colorings(g);
        long long bound = 4LL * g.vertex_count() * g.vertex_count();
        for (size_t i = 0; i < bal.size(); i += 5) {
            for (size_t j = 0; j < bal.size(); j += 7) {
                SolveResult r = solve(g, bal[i], bal[j]);
                REQUIRE(r.status == SolveStatus::Sequence);
                CHECK(verify_sequence(g, bal[i], r.steps, bal[j]).ok);
                CHECK(static_cast<long long>(r.steps.size()) <= bound);
            }
        }
    }
}
