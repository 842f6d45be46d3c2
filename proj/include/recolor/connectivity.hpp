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

#ifndef RECOLOR_CONNECTIVITY_HPP
#define RECOLOR_CONNECTIVITY_HPP

/* Deciding whether all 4-colorings of an even sphere triangulation are
 * connected under single-vertex recoloring.
 *
 * The decision runs through the separating triangles: cutting along all of
 * them splits the triangulation into pieces without separating triangles,
 * and the recoloring graph is connected exactly when every piece is the
 * octahedron.  A non-octahedral piece can be contracted step by step (at
 * degree-4 vertices) down to the octahedron; the graph one step before the
 * octahedron always has eight vertices and carries an unbalanced 4-coloring,
 * which lifts back through the contractions and extends across the other
 * pieces, producing an explicit unbalanced witness for the whole graph.
 */

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "triangulation.hpp"

namespace recolor {

// --- separating triangles -------------------------------------------------------

// Lists all 3-cliques that do not bound a face, as sorted vertex triples in
// lexicographic order.  Vertices are processed in descending degree order and
// retired after their turn, so the neighbor-intersection scan stays linear on
// planar graphs (bounded arboricity) even with high-degree vertices.
inline std::vector<Tri> separating_triangles(const Triangulation& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y;
    });
    std::vector<Tri> out;
    std::vector<char> mark(static_cast<size_t>(n), 0);
    std::vector<char> retired(static_cast<size_t>(n), 0);
    for (int u : order) {
        for (int x : g.link(u))
            if (!retired[static_cast<size_t>(x)]) mark[static_cast<size_t>(x)] = 1;
        for (int v : g.link(u)) {
            if (retired[static_cast<size_t>(v)]) continue;
            for (int w : g.link(v)) {
                if (w <= v || retired[static_cast<size_t>(w)] || !mark[static_cast<size_t>(w)])
                    continue;
                if (g.find_face(u, v, w) >= 0) continue;
                Tri t{u, v, w};
                std::sort(t.begin(), t.end());
                out.push_back(t);
            }
        }
        for (int x : g.link(u)) mark[static_cast<size_t>(x)] = 0;
        retired[static_cast<size_t>(u)] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// A triangulation with at least five vertices is 4-connected exactly when it
// has no separating triangle.
inline bool four_connected(const Triangulation& g) {
    return g.vertex_count() >= 5 && separating_triangles(g).empty();
}

// True iff H is the octahedron: six vertices, 4-regular, and non-adjacency
// pairs the vertices perfectly (three antipodal pairs).
inline bool is_octahedron(const Triangulation& h) {
    if (h.vertex_count() != 6) return false;
    for (int v = 0; v < 6; ++v) {
        if (h.degree(v) != 4) return false;
        int opposite = -1;
        for (int u = 0; u < 6; ++u) {
            if (u == v || h.adjacent(u, v)) continue;
            if (opposite != -1) return false;
            opposite = u;
        }
        if (opposite == -1) return false;
    }
    return true;
}

// --- piece decomposition ---------------------------------------------------------

// One piece of the decomposition along all separating triangles: a standalone
// triangulation plus the mapping of its vertices back to the host graph.
struct Piece {
    Triangulation tri;
    std::vector<int> to_g;                      // piece vertex id -> host vertex id
    std::vector<std::array<int, 2>> cap_faces;  // (piece face id, separating-triangle index)
};

struct PieceDecomposition {
    std::vector<Tri> triangles;  // separating triangles, sorted triples in lex order
    std::vector<Piece> pieces;
    // per separating triangle: the indices of the two pieces it bounds
    std::vector<std::array<int, 2>> triangle_pieces;
};

namespace detail {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }

  private:
    std::vector<int> parent_;
};

// Successor of vertex a in the directed cycle p -> q -> r -> p of a sorted
// triple.
inline int triple_successor(const Tri& t, int a) {
    if (a == t[0]) return t[1];
    if (a == t[1]) return t[2];
    return t[0];
}

}  // namespace detail

// Splits G along all separating triangles.  Every separating triangle is a
// closed curve with two sides; the piece on a given side receives a cap face
// standing in for everything on the other side.  Pieces are computed by a
// union-find over faces and triangle-sides: every separating triangle
// through an edge separates the edge's two cofaces, so the triangles through
// one edge are linearly nested between those cofaces (in rotation order at
// an endpoint), and consecutive entries of that chain border the same piece.
// This also recovers pieces that consist of cap faces only, which happens
// when separating triangles tile a region with no faces of its own.
inline PieceDecomposition four_connected_pieces(const Triangulation& g) {
    PieceDecomposition out;
    out.triangles = separating_triangles(g);
    const int nsep = static_cast<int>(out.triangles.size());
    const int nf = g.face_count();

    // union-find elements: faces, then two side-flaps per separating triangle
    // (flap 2*t = the side seen from the directed cycle of the sorted triple,
    // flap 2*t+1 = the other side)
    detail::UnionFind uf(nf + 2 * nsep);

    // index septris and group them by their edges
    std::map<Tri, int> sep_index;
    for (int i = 0; i < nsep; ++i) sep_index[out.triangles[i]] = i;
    std::vector<std::vector<int>> sep_at_edge(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < nsep; ++i) {
        const Tri& t = out.triangles[i];
        sep_at_edge[static_cast<size_t>(g.edge_id(t[0], t[1]))].push_back(i);
        sep_at_edge[static_cast<size_t>(g.edge_id(t[0], t[2]))].push_back(i);
        sep_at_edge[static_cast<size_t>(g.edge_id(t[1], t[2]))].push_back(i);
    }

    auto sorted_tri = [](int x, int y, int z) {
        Tri t{x, y, z};
        std::sort(t.begin(), t.end());
        return t;
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [f1, f2] = g.edge_cofaces(e);
        if (sep_at_edge[static_cast<size_t>(e)].empty()) {
            uf.unite(f1, f2);
            continue;
        }
        // The separating triangles through {a,b} each separate the two
        // cofaces, so they are nested: walking the rotation at a
        // counterclockwise from b meets their third vertices in chain order
        // from the coface over a->b (first corner) to the coface over b->a
        // (last corner).  Consecutive chain entries bound the same piece.
        auto [a, b] = g.edge_vertices(e);  // a < b
        const auto& rot = g.link(a);
        size_t pos_b = 0;
        while (rot[pos_b] != b) ++pos_b;
        int prev = f1;  // coface over a->b
        size_t seen = 0;
        for (size_t s = 1; s < rot.size(); ++s) {
            int z = rot[(pos_b + s) % rot.size()];
            if (!g.adjacent(z, b) || g.find_face(a, b, z) >= 0) continue;
            auto it = sep_index.find(sorted_tri(a, b, z));
            if (it == sep_index.end())
                throw std::logic_error("piece split: triangle neither face nor separating");
            ++seen;
            // flap 0 is the side left of the directed cycle of the sorted
            // triple; at vertex a that side holds the rotation arc from the
            // cycle successor of a to its predecessor, and the side facing
            // the a->b coface holds the arc that starts at b
            int succ = detail::triple_successor(out.triangles[static_cast<size_t>(it->second)], a);
            int toward_prev = nf + 2 * it->second + (succ == b ? 0 : 1);
            int toward_next = nf + 2 * it->second + (succ == b ? 1 : 0);
            uf.unite(prev, toward_prev);
            prev = toward_next;
        }
        if (seen != sep_at_edge[static_cast<size_t>(e)].size())
            throw std::logic_error("piece split: edge chain missed a separating triangle");
        uf.unite(prev, f2);  // coface over b->a
    }

    // gather classes
    std::map<int, int> piece_of_root;
    std::vector<std::vector<int>> piece_faces;  // host face ids
    std::vector<std::vector<int>> piece_flaps;  // flap element ids
    auto class_of = [&](int element) {
        int root = uf.find(element);
        auto it = piece_of_root.find(root);
        if (it != piece_of_root.end()) return it->second;
        int id = static_cast<int>(piece_faces.size());
        piece_of_root[root] = id;
        piece_faces.emplace_back();
        piece_flaps.emplace_back();
        return id;
    };
    for (int f = 0; f < nf; ++f) piece_faces[static_cast<size_t>(class_of(f))].push_back(f);
    for (int flap = 0; flap < 2 * nsep; ++flap)
        piece_flaps[static_cast<size_t>(class_of(nf + flap))].push_back(flap);

    if (piece_faces.size() != static_cast<size_t>(nsep) + 1)
        throw std::logic_error("piece split: piece count does not match triangle count");

    out.triangle_pieces.assign(static_cast<size_t>(nsep), {-1, -1});
    for (size_t p = 0; p < piece_faces.size(); ++p) {
        std::vector<Tri> faces;
        std::vector<std::array<int, 2>> caps;
        for (int f : piece_faces[p]) faces.push_back(g.face(f));
        for (int flap : piece_flaps[p]) {
            int ti = flap / 2;
            const Tri& t = out.triangles[static_cast<size_t>(ti)];
            // the cap replaces the far side: seen from the directed-cycle side
            // (flap 0) the far side held the reversed directed edges
            Tri cap = (flap % 2 == 0) ? Tri{t[1], t[0], t[2]} : Tri{t[0], t[1], t[2]};
            caps.push_back({static_cast<int>(faces.size()), ti});
            faces.push_back(cap);
            out.triangle_pieces[static_cast<size_t>(ti)][static_cast<size_t>(flap % 2)] =
                static_cast<int>(p);
        }
        // dense renumbering of the vertices that occur
        std::vector<int> used;
        for (const Tri& t : faces) used.insert(used.end(), t.begin(), t.end());
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < used.size(); ++i) local[static_cast<size_t>(used[i])] = static_cast<int>(i);
        for (Tri& t : faces)
            for (int& x : t) x = local[static_cast<size_t>(x)];
        Piece piece{Triangulation(static_cast<int>(used.size()), std::move(faces)),
                    std::move(used), std::move(caps)};
        if (!piece.tri.is_even())
            throw std::logic_error("piece split: piece lost evenness");
        out.pieces.push_back(std::move(piece));
    }
    for (const auto& tp : out.triangle_pieces)
        if (tp[0] < 0 || tp[1] < 0 || tp[0] == tp[1])
            throw std::logic_error("piece split: triangle does not bound two pieces");
    return out;
}

// The recoloring graph on 4-colorings of an even sphere triangulation is
// connected exactly when every piece of the decomposition is the octahedron.
inline bool decide_connected(const Triangulation& g) {
    if (!g.is_even()) throw validation_error("decide_connected: triangulation is not even");
    PieceDecomposition dec = four_connected_pieces(g);
    for (const Piece& p : dec.pieces)
        if (!is_octahedron(p.tri)) return false;
    return true;
}

// --- contractions ----------------------------------------------------------------

enum class ContractionKind { FourContraction, TwinContraction };

// One contraction applied to a triangulation, with enough bookkeeping to
// transport colorings back through it.
struct ContractionStep {
    ContractionKind kind = ContractionKind::FourContraction;
    std::vector<int> removed;         // deleted vertices (ids in the larger graph)
    std::array<int, 2> identified{};  // {w1, w3} in the larger graph, merged into one
    std::array<int, 2> hinges{};      // {w2, w4}: the other two link vertices
    int survivor = -1;                // id of the merged vertex in the smaller graph
    std::vector<int> old_of_new;      // smaller vertex id -> larger vertex id (survivor -> w1)
};

namespace detail {

// Rebuilds the face list after deleting `removed` vertices' stars and
// renaming `w_from` to `w_to`; returns the smaller triangulation and the
// vertex maps.  Throws validation_error when the surgery does not produce a
// valid triangulation.
inline std::pair<Triangulation, std::vector<int>> contract_surgery(
    const Triangulation& g, const std::vector<int>& removed, int w_from, int w_to) {
    std::vector<char> dead(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : removed) dead[static_cast<size_t>(v)] = 1;
    std::vector<Tri> faces;
    for (int f = 0; f < g.face_count(); ++f) {
        Tri t = g.face(f);
        bool skip = false;
        for (int x : t) skip = skip || dead[static_cast<size_t>(x)];
        if (skip) continue;
        for (int& x : t)
            if (x == w_from) x = w_to;
        faces.push_back(t);
    }
    std::vector<int> used;
    for (const Tri& t : faces) used.insert(used.end(), t.begin(), t.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < used.size(); ++i) local[static_cast<size_t>(used[i])] = static_cast<int>(i);
    for (Tri& t : faces)
        for (int& x : t) x = local[static_cast<size_t>(x)];
    return {Triangulation(static_cast<int>(used.size()), faces), used};
}

// Sorted intersection of two neighbor lists.
inline std::vector<int> common_neighbors(const Triangulation& g, int a, int b) {
    std::vector<int> na = g.link(a), nb = g.link(b), out;
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

// Tries the contraction at a degree-4 vertex v that merges the opposite link
// vertices w1, w3 (hinges w2, w4).  Returns the smaller triangulation and the
// step record, or nothing when the result would not be a 4-connected even
// triangulation.
inline std::optional<std::pair<Triangulation, ContractionStep>> try_four_contraction(
    const Triangulation& g, int v, int w1, int w2, int w3, int w4) {
    // simplicity: merging w1 and w3 must not create parallel edges
    for (int x : detail::common_neighbors(g, w1, w3))
        if (x != v && x != w2 && x != w4) return std::nullopt;
    int lo = std::min(w1, w3), hi = std::max(w1, w3);
    try {
        auto [tri, old_of_new] = detail::contract_surgery(g, {v}, hi, lo);
        if (!tri.is_even()) return std::nullopt;
        if (!separating_triangles(tri).empty()) return std::nullopt;
        ContractionStep step;
        step.kind = ContractionKind::FourContraction;
        step.removed = {v};
        step.identified = {lo, hi};
        step.hinges = {w2, w4};
        step.old_of_new = old_of_new;
        for (size_t i = 0; i < old_of_new.size(); ++i)
            if (old_of_new[i] == lo) step.survivor = static_cast<int>(i);
        return std::make_pair(std::move(tri), std::move(step));
    } catch (const validation_error&) {
        return std::nullopt;
    }
}

// Tries the contraction that removes an adjacent degree-4 pair u, v with
// common neighbors {w1, w3}, merging w1 and w3.  w2 is the private neighbor
// of u, w4 the private neighbor of v.
inline std::optional<std::pair<Triangulation, ContractionStep>> try_twin_contraction(
    const Triangulation& g, int u, int v) {
    std::vector<int> commons = detail::common_neighbors(g, u, v);
    if (commons.size() != 2) return std::nullopt;
    int w1 = commons[0], w3 = commons[1];
    int w2 = -1, w4 = -1;
    for (int x : g.link(u))
        if (x != v && x != w1 && x != w3) w2 = x;
    for (int x : g.link(v))
        if (x != u && x != w1 && x != w3) w4 = x;
    if (w2 < 0 || w4 < 0 || w2 == w4) return std::nullopt;
    for (int x : detail::common_neighbors(g, w1, w3))
        if (x != u && x != v && x != w2 && x != w4) return std::nullopt;
    int lo = std::min(w1, w3), hi = std::max(w1, w3);
    try {
        auto [tri, old_of_new] = detail::contract_surgery(g, {u, v}, hi, lo);
        if (!tri.is_even()) return std::nullopt;
        if (!separating_triangles(tri).empty()) return std::nullopt;
        ContractionStep step;
        step.kind = ContractionKind::TwinContraction;
        step.removed = {u, v};
        step.identified = {lo, hi};
        step.hinges = {w2, w4};
        step.old_of_new = old_of_new;
        for (size_t i = 0; i < old_of_new.size(); ++i)
            if (old_of_new[i] == lo) step.survivor = static_cast<int>(i);
        return std::make_pair(std::move(tri), std::move(step));
    } catch (const validation_error&) {
        return std::nullopt;
    }
}

// Contracts a 4-connected even triangulation step by step down to the
// octahedron.  Candidates are scanned deterministically: by main vertex id,
// plain contractions before twin contractions, then by the identified pair.
inline std::vector<std::pair<Triangulation, ContractionStep>> contraction_sequence(
    const Triangulation& h) {
    if (!h.is_even() || !four_connected(h))
        throw validation_error("contraction_sequence: needs a 4-connected even triangulation");
    std::vector<std::pair<Triangulation, ContractionStep>> out;
    Triangulation cur = h;
    while (!is_octahedron(cur)) {
        std::optional<std::pair<Triangulation, ContractionStep>> chosen;
        for (int v = 0; v < cur.vertex_count() && !chosen; ++v) {
            if (cur.degree(v) != 4) continue;
            const auto& rot = cur.link(v);
            // candidates at main vertex v, keyed by the identified pair
            struct Cand {
                std::array<int, 4> key;  // pair lo, pair hi, kind rank, twin partner
                int u;                   // twin partner, or -1
                std::array<int, 4> link; // w1..w4 when u == -1
            };
            std::vector<Cand> cands;
            for (int off = 0; off < 2; ++off) {
                std::array<int, 4> w{rot[static_cast<size_t>(off)], rot[static_cast<size_t>(off + 1)],
                                     rot[static_cast<size_t>(off + 2)], rot[static_cast<size_t>((off + 3) % 4)]};
                cands.push_back({{std::min(w[0], w[2]), std::max(w[0], w[2]), 0, -1}, -1, w});
            }
            for (int u : rot) {
                if (u < v || cur.degree(u) != 4) continue;
                std::vector<int> commons = detail::common_neighbors(cur, v, u);
                if (commons.size() != 2) continue;
                cands.push_back({{commons[0], commons[1], 1, u}, u, {}});
            }
            std::sort(cands.begin(), cands.end(),
                      [](const Cand& x, const Cand& y) { return x.key < y.key; });
            for (const Cand& c : cands) {
                chosen = (c.u < 0)
                             ? try_four_contraction(cur, v, c.link[0], c.link[1], c.link[2], c.link[3])
                             : try_twin_contraction(cur, v, c.u);
                if (chosen) break;
            }
        }
        if (!chosen)
            throw std::logic_error("contraction_sequence: no applicable contraction found");
        out.push_back(*chosen);
        cur = out.back().first;
        if (out.size() > static_cast<size_t>(h.vertex_count()))
            throw std::logic_error("contraction_sequence: failed to terminate");
    }
    return out;
}

// Transports a coloring of the contracted graph back to the larger graph:
// the merged vertices copy the survivor's color and each removed vertex takes
// the smallest color not seen on its constraining neighbors.
inline Coloring lift_coloring(const Triangulation& larger, const ContractionStep& step,
                              const Coloring& small) {
    Coloring big;
    big.k = small.k;
    big.at.assign(static_cast<size_t>(larger.vertex_count()), -1);
    for (size_t i = 0; i < step.old_of_new.size(); ++i)
        big[step.old_of_new[i]] = small[static_cast<int>(i)];
    big[step.identified[1]] = small[step.survivor];

    auto smallest_not = [&](std::initializer_list<int> taken) {
        for (int c = 0; c < big.k; ++c)
            if (std::find(taken.begin(), taken.end(), c) == taken.end()) return c;
        throw std::logic_error("lift_coloring: no free color");
    };
    int merged_color = small[step.survivor];
    if (step.kind == ContractionKind::FourContraction) {
        big[step.removed[0]] =
            smallest_not({merged_color, big[step.hinges[0]], big[step.hinges[1]]});
    } else {
        big[step.removed[0]] = smallest_not({merged_color, big[step.hinges[0]]});
        big[step.removed[1]] =
            smallest_not({merged_color, big[step.hinges[1]], big[step.removed[0]]});
    }
    if (!is_proper(larger, big)) throw std::logic_error("lift_coloring: lift is not proper");
    return big;
}

// --- inverse contractions (vertex splitting) -------------------------------------

// Splits vertex x of an even triangulation: the link positions i and j become
// the hinges, the link arc [i..j] stays attached to x, the rest moves to a
// fresh vertex, and a new degree-4 vertex is inserted between them.  The gap
// j-i must be even to preserve evenness.  Inverse of the degree-4
// contraction.
inline Triangulation four_split(const Triangulation& g, int x, int i, int j) {
    const auto& rot = g.link(x);
    int d = static_cast<int>(rot.size());
    int gap = ((j - i) % d + d) % d;
    if (gap < 2 || gap > d - 2 || gap % 2 != 0)
        throw validation_error("four_split: hinge gap must be even and keep both parts >= 2");
    int w1 = x, w3 = g.vertex_count(), v = g.vertex_count() + 1;
    int w2 = rot[static_cast<size_t>(i)], w4 = rot[static_cast<size_t>(j)];
    std::vector<Tri> faces;
    for (int f = 0; f < g.face_count(); ++f) {
        Tri t = g.face(f);
        bool at_x = (t[0] == x || t[1] == x || t[2] == x);
        if (!at_x) {
            faces.push_back(t);
            continue;
        }
        // corner face between rot[s] and rot[s+1]: stays with x for s in
        // [i..j-1] (cyclically), moves to w3 otherwise
        int s = 0;
        for (int sc = 0; sc < d; ++sc) {
            if (g.face_with_directed_edge(x, rot[static_cast<size_t>(sc)]) == f) {
                s = sc;
                break;
            }
        }
        int rel = ((s - i) % d + d) % d;
        if (rel >= gap)
            for (int& y : t)
                if (y == x) y = w3;
        faces.push_back(t);
    }
    faces.push_back({v, w2, w1});
    faces.push_back({v, w1, w4});
    faces.push_back({v, w4, w3});
    faces.push_back({v, w3, w2});
    return Triangulation(g.vertex_count() + 2, faces);
}

// Splits vertex x into two vertices joined through a new adjacent degree-4
// pair; the gap j-i must be odd.  Inverse of the twin contraction.
inline Triangulation twin_split(const Triangulation& g, int x, int i, int j) {
    const auto& rot = g.link(x);
    int d = static_cast<int>(rot.size());
    int gap = ((j - i) % d + d) % d;
    if (gap < 2 || gap > d - 2 || gap % 2 != 1)
        throw validation_error("twin_split: hinge gap must be odd and keep both parts >= 2");
    int w1 = x, w3 = g.vertex_count(), u = g.vertex_count() + 1, v = g.vertex_count() + 2;
    int w2 = rot[static_cast<size_t>(i)], w4 = rot[static_cast<size_t>(j)];
    std::vector<Tri> faces;
    for (int f = 0; f < g.face_count(); ++f) {
        Tri t = g.face(f);
        bool at_x = (t[0] == x || t[1] == x || t[2] == x);
        if (!at_x) {
            faces.push_back(t);
            continue;
        }
        int s = 0;
        for (int sc = 0; sc < d; ++sc) {
            if (g.face_with_directed_edge(x, rot[static_cast<size_t>(sc)]) == f) {
                s = sc;
                break;
            }
        }
        int rel = ((s - i) % d + d) % d;
        if (rel >= gap)
            for (int& y : t)
                if (y == x) y = w3;
        faces.push_back(t);
    }
    faces.push_back({u, w2, w1});
    faces.push_back({u, w1, v});
    faces.push_back({u, v, w3});
    faces.push_back({u, w3, w2});
    faces.push_back({v, w4, w3});
    faces.push_back({v, w1, w4});
    return Triangulation(g.vertex_count() + 3, faces);
}

// Grows an even triangulation by `steps` random vertex splits (seeded, hence
// reproducible).  Useful for producing test corpora of even triangulations.
inline Triangulation random_expand(const Triangulation& g, int steps, std::uint64_t seed) {
    if (!g.is_even()) throw validation_error("random_expand: triangulation is not even");
    std::mt19937_64 rng(seed);
    Triangulation cur = g;
    for (int s = 0; s < steps; ++s) {
        struct Cand {
            int kind;  // 0 = four_split, 1 = twin_split
            int x, i, j;
        };
        std::vector<Cand> cands;
        for (int x = 0; x < cur.vertex_count(); ++x) {
            int d = cur.degree(x);
            for (int i = 0; i < d; ++i) {
                for (int gap = 2; gap <= d - 2; ++gap)
                    cands.push_back({gap % 2 == 0 ? 0 : 1, x, i, (i + gap) % d});
            }
        }
        if (cands.empty()) throw std::logic_error("random_expand: no candidates");
        std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
        const Cand& c = cands[pick(rng)];
        cur = (c.kind == 0) ? four_split(cur, c.x, c.i, c.j) : twin_split(cur, c.x, c.i, c.j);
        if (!cur.is_even()) throw std::logic_error("random_expand: lost evenness");
    }
    return cur;
}

// --- the unbalanced witness -------------------------------------------------------

namespace detail {

// First proper 4-coloring in lexicographic order that violates the balance
// condition; nothing when every proper 4-coloring is balanced.
inline std::optional<Coloring> first_unbalanced_coloring(const Triangulation& g) {
    Coloring c;
    c.k = 4;
    c.at.assign(static_cast<size_t>(g.vertex_count()), -1);
    // iterative lexicographic DFS
    int v = 0;
    while (v >= 0) {
        int start = c[v] + 1;
        c[v] = -1;
        int chosen = -1;
        for (int col = start; col < 4; ++col) {
            bool ok = true;
            for (int u : g.link(v))
                if (u < v && c[u] == col) ok = false;
            if (ok) {
                chosen = col;
                break;
            }
        }
        if (chosen < 0) {
            --v;
            continue;
        }
        c[v] = chosen;
        if (v + 1 == g.vertex_count()) {
            if (!is_balanced(g, c)) return c;
            // keep searching at the last level
        } else {
            ++v;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Builds a proper but unbalanced 4-coloring of an even triangulation whose
// recoloring graph is disconnected (some piece is not the octahedron).  The
// witness is found on a small contracted graph, lifted back through the
// contraction steps, and extended over the remaining pieces by 3-colorings
// matched on the shared triangles.
inline Coloring unbalanced_witness(const Triangulation& g) {
    if (!g.is_even()) throw validation_error("unbalanced_witness: triangulation is not even");
    PieceDecomposition dec = four_connected_pieces(g);
    int start_piece = -1;
    for (size_t p = 0; p < dec.pieces.size(); ++p) {
        if (!is_octahedron(dec.pieces[p].tri)) {
            start_piece = static_cast<int>(p);
            break;
        }
    }
    if (start_piece < 0)
        throw validation_error("unbalanced_witness: every piece is the octahedron");

    // contract the chosen piece to the octahedron; the graph one step before
    // the end has eight vertices and admits an unbalanced coloring
    const Piece& piece = dec.pieces[static_cast<size_t>(start_piece)];
    std::vector<std::pair<Triangulation, ContractionStep>> chain =
        contraction_sequence(piece.tri);
    const Triangulation& penultimate =
        chain.size() >= 2 ? chain[chain.size() - 2].first : piece.tri;
    std::optional<Coloring> cur = detail::first_unbalanced_coloring(penultimate);
    if (!cur)
        throw std::logic_error("unbalanced_witness: contracted graph has no unbalanced coloring");
    for (size_t s = chain.size() - 1; s-- > 0;) {
        const Triangulation& larger = (s == 0) ? piece.tri : chain[s - 1].first;
        cur = lift_coloring(larger, chain[s].second, *cur);
        if (is_balanced(larger, *cur))
            throw std::logic_error("unbalanced_witness: lift lost unbalancedness");
    }
    if (chain.size() == 1 && is_balanced(piece.tri, *cur))
        throw std::logic_error("unbalanced_witness: witness piece coloring is balanced");

    // spread over the piece tree: each crossed triangle fixes a color
    // permutation for the next piece's canonical 3-coloring
    Coloring witness;
    witness.k = 4;
    witness.at.assign(static_cast<size_t>(g.vertex_count()), -1);
    const Piece& wp = dec.pieces[static_cast<size_t>(start_piece)];
    for (int lv = 0; lv < wp.tri.vertex_count(); ++lv) witness[wp.to_g[static_cast<size_t>(lv)]] = (*cur)[lv];

    std::vector<char> done(dec.pieces.size(), 0);
    done[static_cast<size_t>(start_piece)] = 1;
    std::vector<int> queue{start_piece};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int p = queue[qi];
        for (const auto& cap : dec.pieces[static_cast<size_t>(p)].cap_faces) {
            int ti = cap[1];
            int other = dec.triangle_pieces[static_cast<size_t>(ti)][0] == p
                            ? dec.triangle_pieces[static_cast<size_t>(ti)][1]
                            : dec.triangle_pieces[static_cast<size_t>(ti)][0];
            if (done[static_cast<size_t>(other)]) continue;
            done[static_cast<size_t>(other)] = 1;
            queue.push_back(other);
            const Piece& op = dec.pieces[static_cast<size_t>(other)];
            Coloring base = find_3_coloring(op.tri);
            // permutation matching the shared triangle's already-fixed colors
            std::array<int, 4> perm{-1, -1, -1, -1};
            std::array<char, 4> taken{0, 0, 0, 0};
            for (int x : dec.triangles[static_cast<size_t>(ti)]) {
                int lx = -1;
                for (int lv = 0; lv < op.tri.vertex_count(); ++lv)
                    if (op.to_g[static_cast<size_t>(lv)] == x) lx = lv;
                if (lx < 0 || witness[x] < 0)
                    throw std::logic_error("unbalanced_witness: shared triangle mismatch");
                perm[static_cast<size_t>(base[lx])] = witness[x];
                taken[static_cast<size_t>(witness[x])] = 1;
            }
            for (int c = 0; c < 4; ++c) {
                if (perm[static_cast<size_t>(c)] != -1) continue;
                for (int t = 0; t < 4; ++t)
                    if (!taken[static_cast<size_t>(t)]) {
                        perm[static_cast<size_t>(c)] = t;
                        taken[static_cast<size_t>(t)] = 1;
                        break;
                    }
            }
            for (int lv = 0; lv < op.tri.vertex_count(); ++lv) {
                int gv = op.to_g[static_cast<size_t>(lv)];
                int want = perm[static_cast<size_t>(base[lv])];
                if (witness[gv] != -1 && witness[gv] != want)
                    throw std::logic_error("unbalanced_witness: inconsistent merge");
                witness[gv] = want;
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (witness[v] < 0) throw std::logic_error("unbalanced_witness: uncovered vertex");
    if (!is_proper(g, witness)) throw std::logic_error("unbalanced_witness: witness not proper");
    if (is_balanced(g, witness)) throw std::logic_error("unbalanced_witness: witness is balanced");
    return witness;
}

} // namespace recolor

#endif // RECOLOR_CONNECTIVITY_HPP
