// Copyright 2026 The recolor authors
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

#ifndef RECOLOR_COLORING_HPP
#define RECOLOR_COLORING_HPP

/* Proper colorings of sphere triangulations and their face signatures.
 *
 * The central tool for 4-colorings is a sign attached to every face: orient
 * the face's color triple as stored (ccw from outside) and compare it with
 * the boundary orientation of the solid color tetrahedron.  Concretely the
 * sign is the parity of the permutation sorting the triple, times -1 when the
 * missing color has odd index.  An edge whose two faces get different signs
 * is "singular"; nonsingular edges carry the common sign.  Recoloring one
 * vertex flips exactly the signs of its star, which makes the signature a
 * sensitive local invariant of the recoloring process: a vertex admits a
 * second color exactly when all edges at it are singular, and a 4-coloring
 * can be walked down to a 3-coloring exactly when every vertex sees equally
 * many + and - faces (the "balanced" condition tested here).
 */

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "triangulation.hpp"

namespace recolor {

// A k-coloring of vertices 0..n-1 with values in 0..k-1.
struct Coloring {
    int k = 0;
    std::vector<int> at;

    int size() const { return static_cast<int>(at.size()); }
    int operator[](int v) const { return at[static_cast<size_t>(v)]; }
    int& operator[](int v) { return at[static_cast<size_t>(v)]; }
    bool operator==(const Coloring& o) const { return k == o.k && at == o.at; }

    // Text format: header "col <k> <nV>" then one line of colors.
    static Coloring load_col(std::istream& in) {
        std::string tag;
        Coloring c;
        int n = 0;
        if (!(in >> tag >> c.k >> n) || tag != "col" || c.k < 1 || n < 0)
            throw validation_error("col: bad header");
        c.at.resize(static_cast<size_t>(n));
        for (int& x : c.at)
            if (!(in >> x)) throw validation_error("col: truncated color list");
        for (int x : c.at)
            if (x < 0 || x >= c.k) throw validation_error("col: color out of range");
        return c;
    }

    void save_col(std::ostream& out) const {
        out << "col " << k << ' ' << at.size() << '\n';
        for (size_t i = 0; i < at.size(); ++i) out << at[i] << (i + 1 == at.size() ? '\n' : ' ');
        if (at.empty()) out << '\n';
    }
};

inline bool is_proper(const Triangulation& g, const Coloring& c) {
    if (c.size() != g.vertex_count()) return false;
    for (int x : c.at)
        if (x < 0 || x >= c.k) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_vertices(e);
        if (c[u] == c[v]) return false;
    }
    return true;
}

// Number of distinct colors actually used.
inline int colors_used(const Coloring& c) {
    std::vector<char> seen(static_cast<size_t>(c.k), 0);
    int used = 0;
    for (int x : c.at)
        if (!seen[static_cast<size_t>(x)]) {
            seen[static_cast<size_t>(x)] = 1;
            ++used;
        }
    return used;
}

// The canonical 3-coloring of an even triangulation: face 0's vertices take
// colors 0,1,2 in stored order and the rest follows by walking the dual —
// across each edge the opposite vertex must repeat the color missing from
// the shared edge, so the extension is forced and deterministic.
inline Coloring find_3_coloring(const Triangulation& g) {
    if (!g.is_even()) throw validation_error("find_3_coloring: triangulation is not even");
    Coloring c;
    c.k = 4;  // embeds into the 4-coloring world; only colors 0..2 occur
    c.at.assign(static_cast<size_t>(g.vertex_count()), -1);
    const Tri& f0 = g.face(0);
    c[f0[0]] = 0;
    c[f0[1]] = 1;
    c[f0[2]] = 2;
    std::vector<char> seen(static_cast<size_t>(g.face_count()), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int f = queue[qi];
        const Tri& t = g.face(f);
        for (int i = 0; i < 3; ++i) {
            int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
            int f2 = g.face_with_directed_edge(v, u);
            if (seen[static_cast<size_t>(f2)]) continue;
            seen[static_cast<size_t>(f2)] = 1;
            int w = g.third_vertex(f2, u, v);
            int missing = 3 - c[u] - c[v];  // colors are 0,1,2 here
            if (c[w] < 0)
                c[w] = missing;
            else if (c[w] != missing)
                throw validation_error("find_3_coloring: propagation conflict (input not even?)");
            queue.push_back(f2);
        }
    }
    if (std::any_of(c.at.begin(), c.at.end(), [](int x) { return x < 0; }))
        throw std::logic_error("find_3_coloring: a vertex was never reached");
    assert(is_proper(g, c));
    return c;
}

// Colors other than c[v] that v could take while keeping the coloring proper.
inline std::vector<int> recolorable_colors(const Triangulation& g, const Coloring& c, int v) {
    std::vector<char> blocked(static_cast<size_t>(c.k), 0);
    blocked[static_cast<size_t>(c[v])] = 1;
    for (int u : g.link(v)) blocked[static_cast<size_t>(c[u])] = 1;
    std::vector<int> out;
    for (int col = 0; col < c.k; ++col)
        if (!blocked[static_cast<size_t>(col)]) out.push_back(col);
    return out;
}

// Recolors a single vertex, checking the move is legal.
inline Coloring apply_single_change(const Triangulation& g, const Coloring& c, int v, int col) {
    if (col < 0 || col >= c.k) throw validation_error("single change: color out of range");
    if (col == c[v]) throw validation_error("single change: color unchanged");
    for (int u : g.link(v))
        if (c[u] == col) throw validation_error("single change: neighbor already has that color");
    Coloring out = c;
    out[v] = col;
    return out;
}

// --- face signatures ---------------------------------------------------------

enum class EdgeClass : std::uint8_t { Singular, PlusNS, MinusNS };

// Sign of one face under a proper 4-coloring: permutation parity of the ccw
// color triple times (-1)^(missing color).
inline int face_sign(const Triangulation& g, const Coloring& c, int f) {
    const Tri& t = g.face(f);
    int a = c[t[0]], b = c[t[1]], d = c[t[2]];
    int missing = 6 - a - b - d;  // 0+1+2+3 = 6
    int inversions = (a > b) + (a > d) + (b > d);
    int sign = (inversions % 2 == 0) ? 1 : -1;
    if (missing % 2 != 0) sign = -sign;
    return sign;
}

// Face signs and edge classes for a proper 4-coloring, kept incrementally
// up to date across single-vertex recolorings.
struct SignatureState {
    std::vector<std::int8_t> face_sign_of;  // by face id, +1 / -1
    std::vector<EdgeClass> edge_class;      // by edge id

    static SignatureState compute(const Triangulation& g, const Coloring& c) {
        SignatureState s;
        s.face_sign_of.resize(static_cast<size_t>(g.face_count()));
        for (int f = 0; f < g.face_count(); ++f)
            s.face_sign_of[static_cast<size_t>(f)] = static_cast<std::int8_t>(face_sign(g, c, f));
        s.edge_class.resize(static_cast<size_t>(g.edge_count()));
        for (int e = 0; e < g.edge_count(); ++e) s.reclassify(g, e);
        return s;
    }

    void reclassify(const Triangulation& g, int e) {
        auto [f1, f2] = g.edge_cofaces(e);
        std::int8_t s1 = face_sign_of[static_cast<size_t>(f1)];
        std::int8_t s2 = face_sign_of[static_cast<size_t>(f2)];
        edge_class[static_cast<size_t>(e)] =
            (s1 != s2) ? EdgeClass::Singular : (s1 > 0 ? EdgeClass::PlusNS : EdgeClass::MinusNS);
    }

    // Updates after vertex v was recolored: all faces of St(v) flip sign, so
    // only edges at v (which keep their class pattern but may swap +/-) and
    // link edges of v (which toggle singular/nonsingular) need reclassifying.
    void apply_single_change(const Triangulation& g, int v) {
        const auto& rot = g.link(v);
        for (size_t i = 0; i < rot.size(); ++i) {
            int f = g.face_with_directed_edge(v, rot[i]);
            face_sign_of[static_cast<size_t>(f)] =
                static_cast<std::int8_t>(-face_sign_of[static_cast<size_t>(f)]);
        }
        for (size_t i = 0; i < rot.size(); ++i) {
            reclassify(g, g.edge_id(v, rot[i]));
            reclassify(g, g.edge_id(rot[i], rot[(i + 1) % rot.size()]));
        }
    }

    bool edge_nonsingular(int e) const {
        return edge_class[static_cast<size_t>(e)] != EdgeClass::Singular;
    }

    // Nonsingular edges incident to v, in rotation order.
    std::vector<int> ns_edges(const Triangulation& g, int v) const {
        std::vector<int> out;
        for (int u : g.link(v)) {
            int e = g.edge_id(v, u);
            if (edge_nonsingular(e)) out.push_back(e);
        }
        return out;
    }

    // A vertex admits a second color (for k = 4) exactly when every edge at
    // it is singular.
    bool vertex_recolorable(const Triangulation& g, int v) const {
        for (int u : g.link(v))
            if (edge_nonsingular(g.edge_id(v, u))) return false;
        return true;
    }

    bool any_nonsingular() const {
        for (EdgeClass ec : edge_class)
            if (ec != EdgeClass::Singular) return true;
        return false;
    }
};

// Per-vertex counts of +1 and -1 faces in the star.
inline std::pair<std::vector<int>, std::vector<int>> star_sign_counts(const Triangulation& g,
                                                                      const Coloring& c) {
    std::vector<int> plus(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> minus(static_cast<size_t>(g.vertex_count()), 0);
    for (int f = 0; f < g.face_count(); ++f) {
        int s = face_sign(g, c, f);
        for (int v : g.face(f)) {
            if (s > 0)
                ++plus[static_cast<size_t>(v)];
            else
                ++minus[static_cast<size_t>(v)];
        }
    }
    return {std::move(plus), std::move(minus)};
}

// The balanced condition: every vertex sees equally many + and - faces.
// For even sphere triangulations this holds exactly when the coloring can be
// transformed into a 3-coloring by single-vertex recolorings.
inline bool is_balanced(const Triangulation& g, const Coloring& c) {
    if (c.k != 4 || !is_proper(g, c))
        throw validation_error("is_balanced: needs a proper 4-coloring");
    auto [plus, minus] = star_sign_counts(g, c);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (plus[static_cast<size_t>(v)] != minus[static_cast<size_t>(v)]) return false;
    return true;
}

} // namespace recolor

#endif // RECOLOR_COLORING_HPP
