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

#ifndef RECOLOR_HARDNESS_HPP
#define RECOLOR_HARDNESS_HPP

/* Reduction from list recoloring on planar gadget graphs to single-vertex
 * recoloring on (k-1)-colorable triangulations: forbidding paths, the gadget
 * class with explicit embeddings, biconnectivization, stellation, frozen
 * gadget search and insertion, and instance suspension for k > 4.
 */

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/complexd.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/triangulation.hpp"

namespace recolor {

// Raised when the bounded frozen-gadget search exhausts its size cap without
// finding a gadget.  The failure is reported, never silently substituted.
struct gadget_search_error : std::runtime_error {
    explicit gadget_search_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool contains(const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Complement of `xs` within the palette {0,1,2,3}, sorted ascending.
inline std::vector<int> complement4(const std::vector<int>& xs) {
    std::vector<int> out;
    for (int c = 0; c < 4; ++c)
        if (!contains(xs, c)) out.push_back(c);
    return out;
}

inline std::vector<int> sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// Next nonblank line of `in`, or false at end of stream.
inline bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

inline std::vector<std::vector<int>> adjacency_of(int n, const std::vector<std::array<int, 2>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& e : edges) {
        adj[static_cast<size_t>(e[0])].push_back(e[1]);
        adj[static_cast<size_t>(e[1])].push_back(e[0]);
    }
    return adj;
}

// Connected-component labels of the graph with vertex `skip` removed
// (skip = -1 removes nothing).  Unreached/removed vertices get label -1.
inline std::vector<int> component_labels(const std::vector<std::vector<int>>& adj, int skip) {
    int n = static_cast<int>(adj.size());
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (s == skip || comp[static_cast<size_t>(s)] >= 0) continue;
        comp[static_cast<size_t>(s)] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<size_t>(v)]) {
                if (u == skip || comp[static_cast<size_t>(u)] >= 0) continue;
                comp[static_cast<size_t>(u)] = next;
                stack.push_back(u);
            }
        }
        ++next;
    }
    return comp;
}

inline bool connected_without(const std::vector<std::vector<int>>& adj, int skip) {
    std::vector<int> comp = component_labels(adj, skip);
    int labels = 0;
    for (size_t v = 0; v < comp.size(); ++v)
        if (static_cast<int>(v) != skip) labels = std::max(labels, comp[v] + 1);
    return labels <= 1;
}

}  // namespace detail

// --- list recoloring instances ----------------------------------------------------

// A list recoloring instance: a simple graph, one color list per vertex drawn
// from {0,1,2,3}, and two list colorings to connect.
//
// Text format:
//   listinst <nV> <nE>
//   <u> <v>                        (nE edge lines)
//   <v>: <c1> <c2> ...             (nV list lines, ascending vertex id)
//   <alpha_0> ... <alpha_{nV-1}>
//   <beta_0> ... <beta_{nV-1}>
struct ListInstance {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> lists;
    std::vector<int> alpha, beta;

    std::vector<std::vector<int>> adjacency() const { return detail::adjacency_of(n, edges); }

    void validate() const {
        if (n < 1) throw validation_error("listinst: need at least one vertex");
        std::set<std::pair<int, int>> seen;
        for (const auto& e : edges) {
            if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n || e[0] == e[1])
                throw validation_error("listinst: bad edge");
            auto key = std::minmax(e[0], e[1]);
            if (!seen.insert(key).second) throw validation_error("listinst: duplicate edge");
        }
        if (static_cast<int>(lists.size()) != n) throw validation_error("listinst: list count mismatch");
        for (const auto& l : lists) {
            if (l.empty()) throw validation_error("listinst: empty list");
            for (size_t i = 0; i < l.size(); ++i) {
                if (l[i] < 0 || l[i] > 3) throw validation_error("listinst: list color out of range");
                if (i > 0 && l[i] <= l[i - 1]) throw validation_error("listinst: list not sorted");
            }
        }
        for (const std::vector<int>* col : {&alpha, &beta}) {
            if (static_cast<int>(col->size()) != n) throw validation_error("listinst: coloring size mismatch");
            for (int v = 0; v < n; ++v)
                if (!detail::contains(lists[static_cast<size_t>(v)], (*col)[static_cast<size_t>(v)]))
                    throw validation_error("listinst: coloring leaves its list");
            for (const auto& e : edges)
                if ((*col)[static_cast<size_t>(e[0])] == (*col)[static_cast<size_t>(e[1])])
                    throw validation_error("listinst: coloring not proper");
        }
    }

    static ListInstance load_listinst(std::istream& in) {
        ListInstance li;
        std::string line, tag;
        int ne = 0;
        if (!detail::next_line(in, line)) throw validation_error("listinst: missing header");
        {
            std::istringstream iss(line);
            if (!(iss >> tag >> li.n >> ne) || tag != "listinst")
                throw validation_error("listinst: bad header");
        }
        for (int i = 0; i < ne; ++i) {
            if (!detail::next_line(in, line)) throw validation_error("listinst: truncated edges");
            std::istringstream iss(line);
            std::array<int, 2> e{};
            if (!(iss >> e[0] >> e[1])) throw validation_error("listinst: bad edge line");
            li.edges.push_back(e);
        }
        li.lists.resize(static_cast<size_t>(li.n));
        for (int v = 0; v < li.n; ++v) {
            if (!detail::next_line(in, line)) throw validation_error("listinst: truncated lists");
            std::istringstream iss(line);
            std::string head;
            if (!(iss >> head) || head != std::to_string(v) + ":")
                throw validation_error("listinst: bad list line for vertex " + std::to_string(v));
            int c;
            while (iss >> c) li.lists[static_cast<size_t>(v)].push_back(c);
        }
        for (std::vector<int>* col : {&li.alpha, &li.beta}) {
            if (!detail::next_line(in, line)) throw validation_error("listinst: missing coloring line");
            std::istringstream iss(line);
            int c;
            while (iss >> c) col->push_back(c);
        }
        li.validate();
        return li;
    }

    void save_listinst(std::ostream& out) const {
        out << "listinst " << n << ' ' << edges.size() << '\n';
        for (const auto& e : edges) out << e[0] << ' ' << e[1] << '\n';
        for (int v = 0; v < n; ++v) {
            out << v << ':';
            for (int c : lists[static_cast<size_t>(v)]) out << ' ' << c;
            out << '\n';
        }
        for (const std::vector<int>* col : {&alpha, &beta}) {
            for (size_t v = 0; v < col->size(); ++v)
                out << (*col)[v] << (v + 1 == col->size() ? '\n' : ' ');
        }
    }
};

// --- forbidding paths ---------------------------------------------------------------

// A seven-vertex path u,p1,...,p5,v with one color list per vertex, built so
// that the endpoint pair (a,b) is exactly the one excluded assignment: a
// (c,d)-endpoint coloring exists iff (c,d) != (a,b), and endpoint recolorings
// can always be staged through the interior without touching the far end.
struct ForbiddingPath {
    std::array<std::vector<int>, 7> lists;  // position 0 = u, 6 = v
    int a = 0, b = 0, c = 0;
};

inline ForbiddingPath forbidding_path(const std::vector<int>& lu, const std::vector<int>& lv,
                                      int a, int b, int c) {
    auto check_list = [](const std::vector<int>& l, const char* which) {
        if (l.empty() || l.size() >= 4) throw validation_error(std::string("forbidding_path: ") + which + " must be a nonempty proper subset of {0,1,2,3}");
        for (size_t i = 0; i < l.size(); ++i) {
            if (l[i] < 0 || l[i] > 3) throw validation_error("forbidding_path: list color out of range");
            if (i > 0 && l[i] <= l[i - 1]) throw validation_error("forbidding_path: list not sorted");
        }
    };
    check_list(lu, "endpoint list");
    check_list(lv, "endpoint list");
    std::vector<int> uni = detail::sorted_unique([&] {
        std::vector<int> all = lu;
        all.insert(all.end(), lv.begin(), lv.end());
        return all;
    }());
    if (uni.size() >= 4) throw validation_error("forbidding_path: endpoint lists must not cover {0,1,2,3}");
    if (!detail::contains(lu, a)) throw validation_error("forbidding_path: a must lie in the first list");
    if (!detail::contains(lv, b)) throw validation_error("forbidding_path: b must lie in the second list");
    if (c < 0 || c > 3 || detail::contains(uni, c))
        throw validation_error("forbidding_path: c must avoid both endpoint lists");

    ForbiddingPath p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.lists[0] = lu;
    p.lists[6] = lv;
    if (a != b) {
        int d = -1;
        for (int x = 0; x < 4; ++x)
            if (x != a && x != b && x != c) d = x;
        p.lists[1] = detail::sorted_unique({a, c});
        p.lists[2] = detail::sorted_unique({a, c});
        p.lists[3] = detail::sorted_unique({a, d});
        p.lists[4] = detail::sorted_unique({c, d});
        p.lists[5] = detail::sorted_unique({b, c});
    } else {
        std::vector<int> rest;
        for (int x = 0; x < 4; ++x)
            if (x != a && x != c) rest.push_back(x);
        int d = rest[0], e = rest[1];
        p.lists[1] = detail::sorted_unique({a, c});
        p.lists[2] = detail::sorted_unique({c, d});
        p.lists[3] = detail::sorted_unique({d, e});
        p.lists[4] = detail::sorted_unique({c, e});
        p.lists[5] = detail::sorted_unique({a, c});
    }
    return p;
}

// --- the gadget input class ---------------------------------------------------------

// Planar input gadget: disjoint triangles and edges covering every vertex,
// all degrees two or three (triangle vertices exactly three), plus an explicit
// embedding given as face walks in which every triangle bounds a face.
//
// Text format:
//   gadgetx <l> <m> <ncross> <nfaces>
//   t <v0> <v1> <v2>               (l lines)
//   s <v0> <v1>                    (m lines)
//   e <u> <v>                      (ncross lines)
//   f <len> <v0> ... <v_{len-1}>   (nfaces closed boundary walks)
struct GadgetX {
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> s_edges;
    std::vector<std::array<int, 2>> cross;
    std::vector<std::vector<int>> faces;

    int vertex_count() const {
        return static_cast<int>(3 * triangles.size() + 2 * s_edges.size());
    }
    int node_count() const { return static_cast<int>(triangles.size() + s_edges.size()); }

    // Node id of the group containing vertex v (triangles first, then edges),
    // and the position of v inside its group line.
    int group_of(int v) const {
        for (size_t i = 0; i < triangles.size(); ++i)
            for (int x : triangles[i])
                if (x == v) return static_cast<int>(i);
        for (size_t j = 0; j < s_edges.size(); ++j)
            for (int x : s_edges[j])
                if (x == v) return static_cast<int>(triangles.size() + j);
        throw validation_error("gadgetx: vertex in no group");
    }
    int label_of(int v) const {
        for (const auto& t : triangles)
            for (int p = 0; p < 3; ++p)
                if (t[static_cast<size_t>(p)] == v) return p;
        for (const auto& s : s_edges)
            for (int p = 0; p < 2; ++p)
                if (s[static_cast<size_t>(p)] == v) return p;
        throw validation_error("gadgetx: vertex in no group");
    }

    std::vector<std::array<int, 2>> all_edges() const {
        std::vector<std::array<int, 2>> es;
        for (const auto& t : triangles) {
            es.push_back({t[0], t[1]});
            es.push_back({t[1], t[2]});
            es.push_back({t[2], t[0]});
        }
        for (const auto& s : s_edges) es.push_back(s);
        for (const auto& e : cross) es.push_back(e);
        return es;
    }

    void validate() const {
        int n = vertex_count();
        if (n < 2) throw validation_error("gadgetx: too few vertices");
        std::vector<int> group(static_cast<size_t>(n), -1);
        auto claim = [&](int v) {
            if (v < 0 || v >= n) throw validation_error("gadgetx: vertex id out of range");
            if (group[static_cast<size_t>(v)] >= 0)
                throw validation_error("gadgetx: groups overlap at vertex " + std::to_string(v));
            group[static_cast<size_t>(v)] = 0;
        };
        for (const auto& t : triangles)
            for (int v : t) claim(v);
        for (const auto& s : s_edges)
            for (int v : s) claim(v);
        for (int v = 0; v < n; ++v)
            if (group[static_cast<size_t>(v)] < 0)
                throw validation_error("gadgetx: vertex covered by no group");

        std::set<std::pair<int, int>> edge_set;
        for (const auto& e : all_edges()) {
            if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n || e[0] == e[1])
                throw validation_error("gadgetx: bad edge");
            if (!edge_set.insert(std::minmax(e[0], e[1])).second)
                throw validation_error("gadgetx: duplicate edge");
        }
        for (const auto& e : cross)
            if (group_of(e[0]) == group_of(e[1]))
                throw validation_error("gadgetx: cross edge inside one group");

        std::vector<int> cross_deg(static_cast<size_t>(n), 0);
        for (const auto& e : cross) {
            ++cross_deg[static_cast<size_t>(e[0])];
            ++cross_deg[static_cast<size_t>(e[1])];
        }
        for (const auto& t : triangles)
            for (int v : t)
                if (cross_deg[static_cast<size_t>(v)] != 1)
                    throw validation_error("gadgetx: triangle vertex must have degree exactly three");
        for (const auto& s : s_edges)
            for (int v : s)
                if (cross_deg[static_cast<size_t>(v)] < 1 || cross_deg[static_cast<size_t>(v)] > 2)
                    throw validation_error("gadgetx: edge vertex must have degree two or three");

        // Embedding: every directed edge on exactly one walk, sphere Euler count,
        // connected, and each triangle bounding one walk.
        std::set<std::pair<int, int>> darts;
        for (const auto& w : faces) {
            if (w.size() < 3) throw validation_error("gadgetx: face walk too short");
            for (size_t i = 0; i < w.size(); ++i) {
                int u = w[i], v = w[(i + 1) % w.size()];
                if (!edge_set.count(std::minmax(u, v)))
                    throw validation_error("gadgetx: face walk step is not an edge");
                if (!darts.insert({u, v}).second)
                    throw validation_error("gadgetx: directed edge on two face walks");
            }
        }
        if (darts.size() != 2 * edge_set.size())
            throw validation_error("gadgetx: face walks do not cover every directed edge");
        int euler = n - static_cast<int>(edge_set.size()) + static_cast<int>(faces.size());
        if (euler != 2) throw validation_error("gadgetx: embedding is not spherical");
        if (!detail::connected_without(detail::adjacency_of(n, all_edges()), -1))
            throw validation_error("gadgetx: graph must be connected");
        for (const auto& t : triangles) {
            bool bounds = false;
            for (const auto& w : faces) {
                if (w.size() != 3) continue;
                std::vector<int> ws(w.begin(), w.end());
                std::sort(ws.begin(), ws.end());
                std::vector<int> ts(t.begin(), t.end());
                std::sort(ts.begin(), ts.end());
                bounds = bounds || ws == ts;
            }
            if (!bounds) throw validation_error("gadgetx: triangle does not bound a face");
        }
    }

    static GadgetX load_gadgetx(std::istream& in) {
        GadgetX x;
        std::string line, tag;
        int l = 0, m = 0, ncross = 0, nfaces = 0;
        if (!detail::next_line(in, line)) throw validation_error("gadgetx: missing header");
        {
            std::istringstream iss(line);
            if (!(iss >> tag >> l >> m >> ncross >> nfaces) || tag != "gadgetx" || l < 0 || m < 0)
                throw validation_error("gadgetx: bad header");
        }
        auto want = [&](const char* kind) {
            if (!detail::next_line(in, line))
                throw validation_error(std::string("gadgetx: truncated ") + kind + " lines");
            return std::istringstream(line);
        };
        for (int i = 0; i < l; ++i) {
            auto iss = want("t");
            std::array<int, 3> t{};
            if (!(iss >> tag >> t[0] >> t[1] >> t[2]) || tag != "t")
                throw validation_error("gadgetx: bad t line");
            x.triangles.push_back(t);
        }
        for (int j = 0; j < m; ++j) {
            auto iss = want("s");
            std::array<int, 2> s{};
            if (!(iss >> tag >> s[0] >> s[1]) || tag != "s")
                throw validation_error("gadgetx: bad s line");
            x.s_edges.push_back(s);
        }
        for (int e = 0; e < ncross; ++e) {
            auto iss = want("e");
            std::array<int, 2> c{};
            if (!(iss >> tag >> c[0] >> c[1]) || tag != "e")
                throw validation_error("gadgetx: bad e line");
            x.cross.push_back(c);
        }
        for (int f = 0; f < nfaces; ++f) {
            auto iss = want("f");
            int len = 0;
            if (!(iss >> tag >> len) || tag != "f" || len < 3)
                throw validation_error("gadgetx: bad f line");
            std::vector<int> w(static_cast<size_t>(len));
            for (int& v : w)
                if (!(iss >> v)) throw validation_error("gadgetx: truncated face walk");
            x.faces.push_back(std::move(w));
        }
        x.validate();
        return x;
    }

    void save_gadgetx(std::ostream& out) const {
        out << "gadgetx " << triangles.size() << ' ' << s_edges.size() << ' ' << cross.size()
            << ' ' << faces.size() << '\n';
        for (const auto& t : triangles) out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
        for (const auto& s : s_edges) out << "s " << s[0] << ' ' << s[1] << '\n';
        for (const auto& e : cross) out << "e " << e[0] << ' ' << e[1] << '\n';
        for (const auto& w : faces) {
            out << "f " << w.size();
            for (int v : w) out << ' ' << v;
            out << '\n';
        }
    }
};

// --- building the list instance graph ------------------------------------------------

// The plane list graph built from a gadget: contracted group nodes come first
// (triangles, then edges), then five interior vertices per cross edge.  Face
// walks carry the embedding; `path_ends[e] = {node_u, node_v, a, b}` records
// the excluded endpoint pair of the path replacing cross edge e, whose
// interior vertices are `path_internal[e]` ordered from the node_u side.
struct BuiltH {
    int n = 0;
    int node_count = 0;
    std::vector<std::vector<int>> lists;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> faces;
    std::vector<std::array<int, 4>> path_ends;
    std::vector<std::array<int, 5>> path_internal;
    std::vector<std::vector<int>> pseudo;  // per node: adjacent nodes, sorted unique

    bool is_node(int v) const { return v >= 0 && v < node_count; }
    std::vector<std::vector<int>> adjacency() const { return detail::adjacency_of(n, edges); }

    // A proper list coloring must stay inside every list and avoid equal
    // colors across every edge.
    bool is_list_coloring(const std::vector<int>& col) const {
        if (static_cast<int>(col.size()) != n) return false;
        for (int v = 0; v < n; ++v)
            if (!detail::contains(lists[static_cast<size_t>(v)], col[static_cast<size_t>(v)])) return false;
        for (const auto& e : edges)
            if (col[static_cast<size_t>(e[0])] == col[static_cast<size_t>(e[1])]) return false;
        return true;
    }
};

inline BuiltH build_H(const GadgetX& x) {
    x.validate();
    BuiltH h;
    h.node_count = x.node_count();
    h.n = h.node_count + 5 * static_cast<int>(x.cross.size());
    h.lists.resize(static_cast<size_t>(h.n));
    h.pseudo.resize(static_cast<size_t>(h.node_count));
    int l = static_cast<int>(x.triangles.size());
    for (int i = 0; i < l; ++i) h.lists[static_cast<size_t>(i)] = {0, 1, 2};
    for (size_t j = 0; j < x.s_edges.size(); ++j) h.lists[static_cast<size_t>(l) + j] = {0, 1};

    for (size_t e = 0; e < x.cross.size(); ++e) {
        int u = x.cross[e][0], v = x.cross[e][1];
        int nu = x.group_of(u), nv = x.group_of(v);
        int a = x.label_of(u), b = x.label_of(v);
        ForbiddingPath fp = forbidding_path(h.lists[static_cast<size_t>(nu)],
                                            h.lists[static_cast<size_t>(nv)], a, b, 3);
        std::array<int, 5> ids{};
        for (int i = 0; i < 5; ++i) {
            ids[static_cast<size_t>(i)] = h.node_count + 5 * static_cast<int>(e) + i;
            h.lists[static_cast<size_t>(ids[static_cast<size_t>(i)])] = fp.lists[static_cast<size_t>(i + 1)];
        }
        h.path_ends.push_back({nu, nv, a, b});
        h.path_internal.push_back(ids);
        h.edges.push_back({nu, ids[0]});
        for (int i = 0; i + 1 < 5; ++i) h.edges.push_back({ids[static_cast<size_t>(i)], ids[static_cast<size_t>(i + 1)]});
        h.edges.push_back({ids[4], nv});
        h.pseudo[static_cast<size_t>(nu)].push_back(nv);
        h.pseudo[static_cast<size_t>(nv)].push_back(nu);
    }
    for (auto& p : h.pseudo) p = detail::sorted_unique(std::move(p));

    // Face walks: keep the cross-edge steps of each input walk and expand each
    // into its node followed by the path interior in traversal direction.
    int dropped = 0;
    for (const auto& w : x.faces) {
        std::vector<int> walk;
        for (size_t i = 0; i < w.size(); ++i) {
            int u = w[i], v = w[(i + 1) % w.size()];
            int e = -1;
            for (size_t c = 0; c < x.cross.size(); ++c)
                if ((x.cross[c][0] == u && x.cross[c][1] == v) || (x.cross[c][0] == v && x.cross[c][1] == u))
                    e = static_cast<int>(c);
            if (e < 0) continue;  // group-internal step
            bool forward = x.cross[static_cast<size_t>(e)][0] == u;
            const auto& ids = h.path_internal[static_cast<size_t>(e)];
            walk.push_back(x.group_of(u));
            for (int i5 = 0; i5 < 5; ++i5)
                walk.push_back(forward ? ids[static_cast<size_t>(i5)] : ids[static_cast<size_t>(4 - i5)]);
        }
        if (walk.empty()) {
            ++dropped;
            continue;
        }
        h.faces.push_back(std::move(walk));
    }
    if (dropped != l) throw std::logic_error("build_H: unexpected empty face walks");
    if (!detail::connected_without(h.adjacency(), -1))
        throw validation_error("build_H: resulting graph is disconnected");

    // The walk set must double-cover the directed edges.
    std::set<std::pair<int, int>> darts;
    for (const auto& w : h.faces)
        for (size_t i = 0; i < w.size(); ++i)
            if (!darts.insert({w[i], w[(i + 1) % w.size()]}).second)
                throw std::logic_error("build_H: directed edge on two walks");
    if (darts.size() != 2 * h.edges.size())
        throw std::logic_error("build_H: walks do not double-cover the edges");
    return h;
}

// --- colorings of the built graph -----------------------------------------------------

// Lexicographically extreme assignment of node colors such that no path's
// excluded endpoint pair is realized; `largest` flips the search order.
inline std::vector<int> extreme_node_coloring(const BuiltH& h, bool largest) {
    std::vector<int> node(static_cast<size_t>(h.node_count), -1);
    auto feasible = [&](int upto) {
        for (const auto& pe : h.path_ends) {
            if (pe[0] > upto || pe[1] > upto) continue;
            if (node[static_cast<size_t>(pe[0])] == pe[2] && node[static_cast<size_t>(pe[1])] == pe[3])
                return false;
        }
        return true;
    };
    std::vector<int> order;
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == h.node_count) return true;
        std::vector<int> cand = h.lists[static_cast<size_t>(v)];
        if (largest) std::reverse(cand.begin(), cand.end());
        for (int c : cand) {
            node[static_cast<size_t>(v)] = c;
            if (feasible(v) && self(self, v + 1)) return true;
        }
        node[static_cast<size_t>(v)] = -1;
        return false;
    };
    if (!rec(rec, 0)) throw validation_error("extreme_node_coloring: no valid node assignment");
    return node;
}

// Extends a node assignment to a full list coloring, choosing the
// lexicographically smallest interior along every path.  Throws when some
// path's excluded pair is realized by the node assignment.
inline std::vector<int> complete_h_coloring(const BuiltH& h, const std::vector<int>& node) {
    if (static_cast<int>(node.size()) != h.node_count)
        throw validation_error("complete_h_coloring: node assignment size mismatch");
    std::vector<int> col(static_cast<size_t>(h.n), -1);
    for (int v = 0; v < h.node_count; ++v) {
        if (!detail::contains(h.lists[static_cast<size_t>(v)], node[static_cast<size_t>(v)]))
            throw validation_error("complete_h_coloring: node color leaves its list");
        col[static_cast<size_t>(v)] = node[static_cast<size_t>(v)];
    }
    for (size_t e = 0; e < h.path_ends.size(); ++e) {
        const auto& pe = h.path_ends[e];
        const auto& ids = h.path_internal[e];
        int cu = node[static_cast<size_t>(pe[0])], cv = node[static_cast<size_t>(pe[1])];
        if (cu == pe[2] && cv == pe[3])
            throw validation_error("complete_h_coloring: node assignment realizes an excluded pair");
        std::array<int, 5> interior{};
        auto rec = [&](auto&& self, int i, int prev) -> bool {
            if (i == 5) return prev != cv;
            for (int c : h.lists[static_cast<size_t>(ids[static_cast<size_t>(i)])]) {
                if (c == prev) continue;
                interior[static_cast<size_t>(i)] = c;
                if (self(self, i + 1, c)) return true;
            }
            return false;
        };
        if (!rec(rec, 0, cu)) throw std::logic_error("complete_h_coloring: path interior infeasible");
        for (int i = 0; i < 5; ++i) col[static_cast<size_t>(ids[static_cast<size_t>(i)])] = interior[static_cast<size_t>(i)];
    }
    if (!h.is_list_coloring(col)) throw std::logic_error("complete_h_coloring: extension not proper");
    return col;
}

inline ListInstance to_list_instance(const BuiltH& h, const std::vector<int>& alpha,
                                     const std::vector<int>& beta) {
    ListInstance li;
    li.n = h.n;
    li.edges = h.edges;
    li.lists = h.lists;
    li.alpha = alpha;
    li.beta = beta;
    li.validate();
    return li;
}

// Checks that a list instance is exactly the built graph (same vertex
// numbering, edges, and lists), so its colorings can be carried over.
inline void check_matches(const BuiltH& h, const ListInstance& li) {
    if (li.n != h.n) throw validation_error("list instance does not match: vertex count");
    auto norm = [](std::vector<std::array<int, 2>> es) {
        for (auto& e : es)
            if (e[0] > e[1]) std::swap(e[0], e[1]);
        std::sort(es.begin(), es.end());
        return es;
    };
    if (norm(li.edges) != norm(h.edges)) throw validation_error("list instance does not match: edges");
    if (li.lists != h.lists) throw validation_error("list instance does not match: lists");
}

// --- biconnectivization ----------------------------------------------------------------

// Eliminates cut vertices by repeatedly picking a node cut vertex and joining
// two of its pseudo-neighbors from different components through a fresh
// degree-2 vertex across a shared face.  New vertices get list {2,3}; the
// given colorings are extended with color 3, which no neighbor list contains.
inline void biconnectivize(BuiltH& h, std::vector<int>& alpha, std::vector<int>& beta) {
    int guard = 4 * static_cast<int>(h.faces.size()) + 4 * h.n + 16;
    while (guard-- > 0) {
        auto adj = h.adjacency();
        int cut = -1;
        for (int v = 0; v < h.node_count && cut < 0; ++v)
            if (!detail::connected_without(adj, v)) cut = v;
        if (cut < 0) {
            for (int v = 0; v < h.n; ++v)
                if (!detail::connected_without(adj, v))
                    throw std::logic_error("biconnectivize: non-node cut vertex remains");
            return;
        }
        std::vector<int> comp = detail::component_labels(adj, cut);
        bool done = false;
        for (size_t fi = 0; fi < h.faces.size() && !done; ++fi) {
            const std::vector<int> w = h.faces[fi];
            for (size_t i = 0; i < w.size() && !done; ++i) {
                if (!detail::contains(h.pseudo[static_cast<size_t>(cut)], w[i])) continue;
                for (size_t j = i + 1; j < w.size() && !done; ++j) {
                    if (w[j] == w[i] || !detail::contains(h.pseudo[static_cast<size_t>(cut)], w[j])) continue;
                    if (comp[static_cast<size_t>(w[i])] == comp[static_cast<size_t>(w[j])]) continue;
                    int u = h.n++;
                    h.lists.push_back({2, 3});
                    alpha.push_back(3);
                    beta.push_back(3);
                    h.edges.push_back({w[i], u});
                    h.edges.push_back({u, w[j]});
                    std::vector<int> w1(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j) + 1);
                    w1.push_back(u);
                    std::vector<int> w2(w.begin() + static_cast<long>(j), w.end());
                    w2.insert(w2.end(), w.begin(), w.begin() + static_cast<long>(i) + 1);
                    w2.push_back(u);
                    h.faces[fi] = std::move(w1);
                    h.faces.push_back(std::move(w2));
                    done = true;
                }
            }
        }
        if (!done) throw std::logic_error("biconnectivize: no splitting face found");
    }
    throw std::logic_error("biconnectivize: did not terminate");
}

// --- stellation --------------------------------------------------------------------------

// The 2-connected plane list graph together with its stellation: one hub per
// face joined to the whole boundary, giving an even sphere triangulation.
struct PreparedPlanar {
    BuiltH h;
    Triangulation gprime;
    std::vector<std::vector<int>> face_walks;  // walk of face i, hub = hub_base + i
    int hub_base = 0;
    std::vector<int> alpha, beta;  // list colorings of h extended over new vertices
};

inline PreparedPlanar prepare_planar(BuiltH h, std::vector<int> alpha, std::vector<int> beta) {
    if (!h.is_list_coloring(alpha) || !h.is_list_coloring(beta))
        throw validation_error("prepare_planar: endpoint colorings must be proper list colorings");
    biconnectivize(h, alpha, beta);
    for (const auto& w : h.faces) {
        std::vector<int> ws = detail::sorted_unique(w);
        if (ws.size() != w.size()) throw std::logic_error("prepare_planar: face walk repeats a vertex");
    }
    int hub_base = h.n;
    std::vector<Tri> tris;
    for (size_t fi = 0; fi < h.faces.size(); ++fi) {
        const auto& w = h.faces[fi];
        int hub = hub_base + static_cast<int>(fi);
        for (size_t i = 0; i < w.size(); ++i)
            tris.push_back({hub, w[i], w[(i + 1) % w.size()]});
    }
    Triangulation gp(h.n + static_cast<int>(h.faces.size()), tris);
    if (!gp.is_even()) throw std::logic_error("prepare_planar: stellation is not even");
    PreparedPlanar p{std::move(h), std::move(gp), {}, hub_base, std::move(alpha), std::move(beta)};
    p.face_walks = p.h.faces;
    return p;
}

inline PreparedPlanar prepare_planar(const GadgetX& x) {
    BuiltH h = build_H(x);
    std::vector<int> a = complete_h_coloring(h, extreme_node_coloring(h, false));
    std::vector<int> b = complete_h_coloring(h, extreme_node_coloring(h, true));
    return prepare_planar(std::move(h), std::move(a), std::move(b));
}

// --- frozen gadgets ------------------------------------------------------------------------

// A coloring is frozen when every vertex sees all other colors among its
// neighbors, so no single-vertex recoloring is possible anywhere.
inline bool is_frozen(const Triangulation& g, const Coloring& c) {
    if (c.size() != g.vertex_count()) return false;
    if (!is_proper(g, c)) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (int u : g.link(v)) seen.insert(c[u]);
        if (static_cast<int>(seen.size()) != c.k - 1) return false;
    }
    return true;
}

// First frozen k-coloring in the deterministic search order (vertices in id
// order, colors ascending, new colors introduced in increasing order), or
// nothing if the triangulation has none.
inline std::optional<Coloring> find_frozen_coloring(const Triangulation& g, int k = 5) {
    int n = g.vertex_count();
    std::vector<int> col(static_cast<size_t>(n), -1);
    // Prunes partial assignments: a vertex whose uncolored neighbors cannot
    // supply its missing colors can never become frozen.
    auto viable = [&](int upto) {
        for (int u = 0; u <= upto; ++u) {
            std::set<int> seen{col[static_cast<size_t>(u)]};
            int open = 0;
            for (int w : g.link(u)) {
                if (w <= upto)
                    seen.insert(col[static_cast<size_t>(w)]);
                else
                    ++open;
            }
            if (k - static_cast<int>(seen.size()) > open) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        int limit = std::min(k - 1, used);  // color used+0 introduces a new color
        for (int c = 0; c <= limit; ++c) {
            bool clash = false;
            for (int w : g.link(v)) clash = clash || (w < v && col[static_cast<size_t>(w)] == c);
            if (clash) continue;
            col[static_cast<size_t>(v)] = c;
            if (viable(v) && self(self, v + 1, std::max(used, c + 1))) return true;
            col[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    Coloring out{k, col};
    if (!is_frozen(g, out)) throw std::logic_error("find_frozen_coloring: search returned a non-frozen coloring");
    return out;
}

// Canonical form of a triangulation: the lexicographically smallest
// breadth-first code over all starting directed edges and both senses of each
// vertex rotation.  Equal codes identify combinatorially isomorphic
// triangulations (up to reflection).
inline std::string canonical_code(const Triangulation& g) {
    int n = g.vertex_count();
    std::vector<int> best;
    for (int su = 0; su < n; ++su) {
        for (int sv : g.link(su)) {
            for (int dir : {1, -1}) {
                std::vector<int> label(static_cast<size_t>(n), -1), ref(static_cast<size_t>(n), -1);
                std::vector<int> order;
                label[static_cast<size_t>(su)] = 0;
                ref[static_cast<size_t>(su)] = sv;
                order.push_back(su);
                label[static_cast<size_t>(sv)] = 1;
                ref[static_cast<size_t>(sv)] = su;
                order.push_back(sv);
                std::vector<int> code;
                int next = 2;
                for (size_t qi = 0; qi < order.size(); ++qi) {
                    int x = order[qi];
                    const auto& rot = g.link(x);
                    int d = static_cast<int>(rot.size());
                    int start = 0;
                    for (int i = 0; i < d; ++i)
                        if (rot[static_cast<size_t>(i)] == ref[static_cast<size_t>(x)]) start = i;
                    for (int s = 0; s < d; ++s) {
                        int w = rot[static_cast<size_t>(((start + dir * s) % d + d) % d)];
                        if (label[static_cast<size_t>(w)] < 0) {
                            label[static_cast<size_t>(w)] = next++;
                            ref[static_cast<size_t>(w)] = x;
                            order.push_back(w);
                        }
                        code.push_back(label[static_cast<size_t>(w)]);
                    }
                    code.push_back(-1);
                }
                if (best.empty() || code < best) best = std::move(code);
            }
        }
    }
    std::ostringstream oss;
    for (int x : best) oss << x << ',';
    return oss.str();
}

// All even triangulations reachable by one vertex split, skipping splits that
// would create parallel edges.
inline std::vector<Triangulation> even_expansions(const Triangulation& g) {
    std::vector<Triangulation> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        int d = g.degree(x);
        for (int i = 0; i < d; ++i) {
            for (int gap = 2; gap <= d - 2; ++gap) {
                int j = (i + gap) % d;
                try {
                    out.push_back(gap % 2 == 0 ? four_split(g, x, i, j) : twin_split(g, x, i, j));
                } catch (const validation_error&) {
                    continue;
                }
            }
        }
    }
    return out;
}

inline int gadget_cap_from_env() {
    const char* s = std::getenv("RECOLOR_GADGET_CAP");
    if (!s) return 14;
    int v = std::atoi(s);
    if (v < 6) throw validation_error("RECOLOR_GADGET_CAP must be at least 6");
    return v;
}

// An even sphere triangulation carrying a frozen 5-coloring, with vertices
// 0,1,2 forming its distinguished boundary triangle (stored as face 0).
// Permuting colors yields a frozen coloring for any proper boundary triple.
struct FrozenGadget {
    Triangulation j;
    Coloring base;  // frozen; base[0..2] are the boundary colors
    std::map<std::array<int, 3>, Coloring> table;

    Coloring frozen_for(int c1, int c2, int c3) const {
        if (c1 == c2 || c1 == c3 || c2 == c3 || c1 < 0 || c2 < 0 || c3 < 0 || c1 > 4 || c2 > 4 || c3 > 4)
            throw validation_error("frozen_for: boundary colors must be three distinct colors in 0..4");
        auto it = table.find({c1, c2, c3});
        if (it != table.end()) return it->second;
        std::array<int, 5> perm{};
        perm.fill(-1);
        std::array<bool, 5> taken{};
        perm[static_cast<size_t>(base[0])] = c1;
        perm[static_cast<size_t>(base[1])] = c2;
        perm[static_cast<size_t>(base[2])] = c3;
        taken[static_cast<size_t>(c1)] = taken[static_cast<size_t>(c2)] = taken[static_cast<size_t>(c3)] = true;
        for (int s = 0; s < 5; ++s) {
            if (perm[static_cast<size_t>(s)] >= 0) continue;
            for (int t = 0; t < 5; ++t)
                if (!taken[static_cast<size_t>(t)]) {
                    perm[static_cast<size_t>(s)] = t;
                    taken[static_cast<size_t>(t)] = true;
                    break;
                }
        }
        Coloring out{5, std::vector<int>(static_cast<size_t>(j.vertex_count()))};
        for (int v = 0; v < j.vertex_count(); ++v) out[v] = perm[static_cast<size_t>(base[v])];
        return out;
    }
};

namespace detail {

// Relabels a found gadget so that its face 0 becomes the vertex triple
// (0, 1, 2) in stored orientation, with remaining labels breadth-first.
inline FrozenGadget normalize_gadget(const Triangulation& g, const Coloring& col) {
    int n = g.vertex_count();
    std::vector<int> label(static_cast<size_t>(n), -1);
    Tri f0 = g.face(0);
    std::vector<int> order{f0[0], f0[1], f0[2]};
    for (int i = 0; i < 3; ++i) label[static_cast<size_t>(f0[static_cast<size_t>(i)])] = i;
    int next = 3;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        for (int w : g.link(order[qi])) {
            if (label[static_cast<size_t>(w)] >= 0) continue;
            label[static_cast<size_t>(w)] = next++;
            order.push_back(w);
        }
    }
    std::vector<Tri> faces;
    for (int f = 0; f < g.face_count(); ++f) {
        Tri t = g.face(f);
        for (int& v : t) v = label[static_cast<size_t>(v)];
        faces.push_back(t);
    }
    std::vector<int> base(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) base[static_cast<size_t>(label[static_cast<size_t>(v)])] = col[v];
    FrozenGadget fg{Triangulation(n, faces), Coloring{5, base}, {}};
    if (fg.j.face(0) != Tri{0, 1, 2}) throw std::logic_error("normalize_gadget: boundary face misplaced");
    if (!is_frozen(fg.j, fg.base)) throw std::logic_error("normalize_gadget: coloring lost frozenness");
    return fg;
}

}  // namespace detail

// Bounded search for a frozen gadget: enumerate even triangulations grown
// from the octahedron by vertex splits, level by vertex count, deduplicated
// by canonical code, and return the first (in level, then code order) that
// admits a frozen 5-coloring.  Throws gadget_search_error when the cap is
// exhausted.
inline FrozenGadget run_gadget_search(int cap = gadget_cap_from_env()) {
    Triangulation oct = Triangulation::octahedron();
    std::map<int, std::map<std::string, Triangulation>> levels;
    std::set<std::string> seen;
    std::string c0 = canonical_code(oct);
    levels[oct.vertex_count()].emplace(c0, oct);
    seen.insert(c0);
    for (auto lit = levels.begin(); lit != levels.end(); lit = levels.upper_bound(lit->first)) {
        if (lit->first > cap) break;
        for (const auto& [code, g] : lit->second) {
            if (std::optional<Coloring> col = find_frozen_coloring(g))
                return detail::normalize_gadget(g, *col);
            for (const Triangulation& child : even_expansions(g)) {
                if (child.vertex_count() > cap) continue;
                std::string cc = canonical_code(child);
                if (seen.insert(cc).second) levels[child.vertex_count()].emplace(cc, child);
            }
        }
    }
    throw gadget_search_error("frozen gadget search exhausted cap " + std::to_string(cap) +
                              " without finding a frozen 5-colorable even triangulation");
}

namespace detail {

// Cached result of run_gadget_search(14): the first even triangulation in
// level/canonical order that admits a frozen 5-coloring (10 vertices, found
// in milliseconds; the octahedron and both 8- and 9-vertex levels admit
// none).  Re-derived and compared by the test suite.
inline const std::vector<Tri>& frozen_fixture_faces() {
    static const std::vector<Tri> faces = {
        {0, 1, 2}, {0, 2, 5}, {0, 5, 6}, {0, 6, 3}, {9, 2, 8}, {9, 5, 2}, {9, 6, 5}, {9, 8, 6},
        {7, 2, 1}, {7, 3, 6}, {7, 6, 8}, {7, 8, 2}, {4, 0, 3}, {4, 3, 7}, {4, 7, 1}, {4, 1, 0}};
    return faces;
}

inline const std::vector<int>& frozen_fixture_coloring() {
    static const std::vector<int> col = {3, 2, 0, 0, 4, 1, 2, 1, 3, 4};
    return col;
}

}  // namespace detail

// The cached frozen gadget, verified on construction; `required_triples` are
// validated and their frozen colorings tabulated.
inline FrozenGadget frozen_gadget(const std::vector<std::array<int, 3>>& required_triples = {}) {
    const auto& faces = detail::frozen_fixture_faces();
    const auto& col = detail::frozen_fixture_coloring();
    if (faces.empty()) throw std::logic_error("frozen_gadget: fixture missing");
    FrozenGadget fg{Triangulation(static_cast<int>(col.size()), faces), Coloring{5, col}, {}};
    if (!fg.j.is_even()) throw std::logic_error("frozen_gadget: fixture is not even");
    if (fg.j.face(0) != Tri{0, 1, 2}) throw std::logic_error("frozen_gadget: fixture boundary misplaced");
    if (!is_frozen(fg.j, fg.base)) throw std::logic_error("frozen_gadget: fixture coloring not frozen");
    for (const auto& t : required_triples) fg.table.emplace(t, fg.frozen_for(t[0], t[1], t[2]));
    return fg;
}

// --- the reduction -----------------------------------------------------------------------

// A single-vertex recoloring instance produced by the reduction: a
// (k-1)-colorable triangulation of the (k-2)-sphere with two (k+1)-colorings
// that are connected by recolorings iff the source list instance was.  For
// k = 4 the two-dimensional triangulation is also kept directly.
struct ReducedInstance {
    int k = 4;
    ComplexD complex;
    std::optional<Triangulation> tri;
    Coloring alpha, beta;
    int h_vertex_count = 0;  // image of the list graph inside the complex
};

// One suspension step: two apexes joined to everything, both colored with the
// next color, which leaves them frozen and preserves reachability.
inline ReducedInstance suspend_instance(const ReducedInstance& inst) {
    int new_k = inst.k + 1;
    std::set<int> used(inst.alpha.at.begin(), inst.alpha.at.end());
    std::set<int> used_b(inst.beta.at.begin(), inst.beta.at.end());
    for (int c = 0; c <= inst.k; ++c)
        if (!used.count(c) || !used_b.count(c))
            throw std::logic_error("suspend_instance: base coloring misses a color, apexes would be loose");
    ComplexD sc = suspend(inst.complex);
    auto lift = [&](const Coloring& c) {
        Coloring out{new_k + 1, c.at};
        out.at.push_back(new_k);
        out.at.push_back(new_k);
        return out;
    };
    ReducedInstance out{new_k, sc, std::nullopt, lift(inst.alpha), lift(inst.beta), inst.h_vertex_count};
    if (!is_proper_on_skeleton(out.complex, out.alpha) || !is_proper_on_skeleton(out.complex, out.beta))
        throw std::logic_error("suspend_instance: lifted coloring not proper");
    return out;
}

inline ReducedInstance reduce_instance(const PreparedPlanar& p, int k = 4,
                                       const FrozenGadget& gadget = frozen_gadget()) {
    if (k < 4) throw validation_error("reduce_instance: k must be at least 4");
    const BuiltH& h = p.h;
    const Triangulation& jg = gadget.j;
    int jn = jg.vertex_count();
    int base = p.gprime.vertex_count();
    std::vector<Tri> faces;
    std::vector<int> acol(static_cast<size_t>(base), -1), bcol(static_cast<size_t>(base), -1);
    for (int v = 0; v < h.n; ++v) {
        acol[static_cast<size_t>(v)] = p.alpha[static_cast<size_t>(v)];
        bcol[static_cast<size_t>(v)] = p.beta[static_cast<size_t>(v)];
    }
    for (int v = h.n; v < base; ++v) acol[static_cast<size_t>(v)] = bcol[static_cast<size_t>(v)] = 4;

    struct FaceRecord {
        int y, z, w1, w2, w1c, w2c;
    };
    std::vector<FaceRecord> records;
    int blocks = 0;
    for (size_t fi = 0; fi < p.face_walks.size(); ++fi) {
        const auto& w = p.face_walks[fi];
        int hub = p.hub_base + static_cast<int>(fi);
        int m = static_cast<int>(w.size());
        int istar = static_cast<int>(std::min_element(w.begin(), w.end()) - w.begin());
        if (!h.is_node(w[static_cast<size_t>(istar)]))
            throw std::logic_error("reduce_instance: face walk contains no node");
        int w1_first = -1, w2_prev = -1;
        for (int t = 0; t < m; ++t) {
            int y = w[static_cast<size_t>((istar + t) % m)];
            int z = w[static_cast<size_t>((istar + t + 1) % m)];
            const auto& ly = h.lists[static_cast<size_t>(y)];
            const auto& lz = h.lists[static_cast<size_t>(z)];
            int w1c, w2c;
            if (t == 0) {
                w1c = (ly == std::vector<int>{0, 1}) ? 2 : 3;
                if (ly.size() == 3 && ly != std::vector<int>{0, 1, 2})
                    throw std::logic_error("reduce_instance: start vertex is not a node");
            } else if (ly.size() == 2) {
                w1c = -1;
                for (int cnd = 0; cnd < 4 && w1c < 0; ++cnd)
                    if (!detail::contains(ly, cnd) && cnd != w2_prev) w1c = cnd;
            } else {
                w1c = 3;
            }
            if (t == m - 1 && lz.size() == 2) {
                std::vector<int> comp = detail::complement4(lz);
                if (!detail::contains(comp, w1_first) && w1_first >= 0)
                    throw std::logic_error("reduce_instance: boundary chain does not close");
                w2c = comp[0] == w1_first ? comp[1] : comp[0];
            } else if (lz.size() == 2) {
                w2c = -1;
                for (int cnd = 0; cnd < 4 && w2c < 0; ++cnd)
                    if (!detail::contains(lz, cnd) && cnd != w1c) w2c = cnd;
            } else {
                w2c = 3;
                if (t == m - 1 && w1_first != 3)
                    throw std::logic_error("reduce_instance: boundary chain does not close");
            }
            if (w1c < 0 || w2c < 0 || w1c == w2c || detail::contains(ly, w1c) || detail::contains(lz, w2c))
                throw std::logic_error("reduce_instance: no admissible boundary colors");
            if (t == 0) w1_first = w1c;
            w2_prev = w2c;

            int nb = base + blocks++ * jn;
            int w1 = nb, w2 = nb + 1, w3 = nb + 2;
            int x = hub;
            faces.push_back({x, y, w1});
            faces.push_back({y, w3, w1});
            faces.push_back({y, z, w3});
            faces.push_back({z, w2, w3});
            faces.push_back({z, x, w2});
            faces.push_back({x, w1, w2});
            for (int f = 1; f < jg.face_count(); ++f) {
                Tri tf = jg.face(f);
                for (int& v : tf) v = nb + v;
                faces.push_back(tf);
            }
            Coloring fz = gadget.frozen_for(w1c, w2c, 4);
            for (int jv = 0; jv < jn; ++jv) {
                acol.push_back(fz[jv]);
                bcol.push_back(fz[jv]);
            }
            records.push_back({y, z, w1, w2, w1c, w2c});
        }
    }

    int total = base + blocks * jn;
    Triangulation g(total, faces);
    if (!g.is_even()) throw std::logic_error("reduce_instance: output is not even");
    find_3_coloring(g);
    Coloring alpha{5, acol}, beta{5, bcol};
    if (!is_proper(g, alpha) || !is_proper(g, beta))
        throw std::logic_error("reduce_instance: output coloring not proper");

    // The list graph keeps its colors; every added vertex is colored the same
    // way in both colorings and is frozen; boundary colors avoid the lists of
    // the vertices they face; and each list vertex sees exactly the complement
    // of its list on its added neighbors.
    for (int v = 0; v < h.n; ++v) {
        if (alpha[v] != p.alpha[static_cast<size_t>(v)] || beta[v] != p.beta[static_cast<size_t>(v)])
            throw std::logic_error("reduce_instance: list-graph colors changed");
    }
    for (int v = h.n; v < total; ++v)
        if (alpha[v] != beta[v]) throw std::logic_error("reduce_instance: colorings differ off the list graph");
    for (const auto& r : records) {
        if (detail::contains(h.lists[static_cast<size_t>(r.y)], r.w1c) ||
            detail::contains(h.lists[static_cast<size_t>(r.z)], r.w2c))
            throw std::logic_error("reduce_instance: boundary color hits a facing list");
        if (alpha[r.w1] != r.w1c || alpha[r.w2] != r.w2c || alpha[r.w2 + 1] != 4)
            throw std::logic_error("reduce_instance: gadget boundary colors misplaced");
    }
    for (int v = h.n; v < total; ++v) {
        std::set<int> seen;
        for (int u : g.link(v)) seen.insert(alpha[u]);
        if (static_cast<int>(seen.size()) != 4 || seen.count(alpha[v]))
            throw std::logic_error("reduce_instance: added vertex is not frozen");
    }
    for (int v = 0; v < h.n; ++v) {
        std::set<int> outside;
        for (int u : g.link(v))
            if (u >= h.n) outside.insert(alpha[u]);
        std::set<int> want{4};
        for (int cnd : detail::complement4(h.lists[static_cast<size_t>(v)])) want.insert(cnd);
        if (outside != want)
            throw std::logic_error("reduce_instance: added neighbors do not realize the list complement");
    }

    ReducedInstance out{4, from_triangulation(g), std::move(g), std::move(alpha), std::move(beta), h.n};
    while (out.k < k) out = suspend_instance(out);
    return out;
}

// Full pipeline from a gadget: build the list graph, take the
// lexicographically extreme pair of list colorings, make it 2-connected,
// stellate, and insert frozen gadgets.
inline ReducedInstance reduce(const GadgetX& x, int k = 4) {
    return reduce_instance(prepare_planar(x), k);
}

inline ReducedInstance reduce(const GadgetX& x, const ListInstance& li, int k = 4) {
    BuiltH h = build_H(x);
    li.validate();
    check_matches(h, li);
    std::vector<int> a = li.alpha, b = li.beta;
    return reduce_instance(prepare_planar(std::move(h), std::move(a), std::move(b)), k);
}

}  // namespace recolor

#endif  // RECOLOR_HARDNESS_HPP
