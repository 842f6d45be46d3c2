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

#ifndef RECOLOR_TRIANGULATION_HPP
#define RECOLOR_TRIANGULATION_HPP

/* Oriented triangulations of the 2-sphere.
 *
 * A triangulation is stored as a list of triangles whose vertex order is
 * counterclockwise as seen from outside the sphere.  The face list is the
 * source of truth; adjacency, edge tables and vertex rotations are derived
 * caches rebuilt on construction.  Construction validates that the input is
 * a coherently oriented, simple, connected closed surface with Euler
 * characteristic 2 and a single face cycle around every vertex, so every
 * successfully constructed object really is a sphere triangulation.
 */

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace recolor {

// Raised when an input file or face list fails structural validation.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Tri = std::array<int, 3>;

namespace detail {

// Packs an ordered vertex pair into a hashable key.  Vertex ids stay well
// below 2^31, so a 64-bit key is collision-free.
inline std::uint64_t directed_key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

} // namespace detail

class Triangulation {
public:
    Triangulation(int vertex_count, std::vector<Tri> faces)
        : n_(vertex_count), faces_(std::move(faces)) {
        build_and_validate();
    }

    // --- basic queries -----------------------------------------------------

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<Tri>& faces() const { return faces_; }
    const Tri& face(int f) const { return faces_[static_cast<size_t>(f)]; }

    int degree(int v) const { return static_cast<int>(rotation_[static_cast<size_t>(v)].size()); }

    // Neighbors of v in counterclockwise cyclic order, canonically rotated to
    // start at the smallest neighbor id.
    const std::vector<int>& link(int v) const { return rotation_[static_cast<size_t>(v)]; }

    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

    // Id of the undirected edge {u,v}, or -1.
    int edge_id(int u, int v) const {
        auto it = edge_ids_.find(detail::directed_key(std::min(u, v), std::max(u, v)));
        return it == edge_ids_.end() ? -1 : it->second;
    }

    // Endpoints of edge e with u < v.
    std::array<int, 2> edge_vertices(int e) const { return edges_[static_cast<size_t>(e)]; }

    // The two faces on either side of edge e = {u,v} (u < v): first the face
    // whose boundary traverses u->v, then the face traversing v->u.
    std::array<int, 2> edge_cofaces(int e) const { return edge_faces_[static_cast<size_t>(e)]; }

    // Face whose boundary contains the directed edge u->v, or -1.
    int face_with_directed_edge(int u, int v) const {
        auto it = directed_face_.find(detail::directed_key(u, v));
        return it == directed_face_.end() ? -1 : it->second;
    }

    // The vertex of face f other than u and v.
    int third_vertex(int f, int u, int v) const {
        for (int x : faces_[static_cast<size_t>(f)])
            if (x != u && x != v) return x;
        assert(false && "u, v not an edge of f");
        return -1;
    }

    int other_endpoint(int e, int v) const {
        auto [a, b] = edges_[static_cast<size_t>(e)];
        return a == v ? b : a;
    }

    bool edge_has_endpoint(int e, int v) const {
        auto [a, b] = edges_[static_cast<size_t>(e)];
        return a == v || b == v;
    }

    // Face with vertex set {a,b,c} in any order, or -1.
    int find_face(int a, int b, int c) const {
        int f = face_with_directed_edge(a, b);
        if (f >= 0 && third_vertex(f, a, b) == c) return f;
        f = face_with_directed_edge(b, a);
        if (f >= 0 && third_vertex(f, a, b) == c) return f;
        return -1;
    }

    // All vertex degrees even; equivalent to 3-colorability for sphere
    // triangulations.
    bool is_even() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) % 2 != 0) return false;
        return true;
    }

    // Edge ids of the link cycle of v, in rotation order: entry i is the edge
    // {link(v)[i], link(v)[i+1]}.
    std::vector<int> link_edge_ids(int v) const {
        const auto& rot = link(v);
        std::vector<int> out(rot.size());
        for (size_t i = 0; i < rot.size(); ++i) {
            int id = edge_id(rot[i], rot[(i + 1) % rot.size()]);
            assert(id >= 0);
            out[i] = id;
        }
        return out;
    }

    // Edge ids incident to v, in rotation order: entry i is {v, link(v)[i]}.
    std::vector<int> star_edge_ids(int v) const {
        const auto& rot = link(v);
        std::vector<int> out(rot.size());
        for (size_t i = 0; i < rot.size(); ++i) {
            int id = edge_id(v, rot[i]);
            assert(id >= 0);
            out[i] = id;
        }
        return out;
    }

    // Faces incident to v in rotation order: entry i is the face
    // (v, link(v)[i], link(v)[i+1]).
    std::vector<int> star_faces(int v) const {
        const auto& rot = link(v);
        std::vector<int> out(rot.size());
        for (size_t i = 0; i < rot.size(); ++i) {
            int f = face_with_directed_edge(v, rot[i]);
            assert(f >= 0);
            out[i] = f;
        }
        return out;
    }

    // --- generators ----------------------------------------------------------

    static Triangulation tetrahedron() {
        return Triangulation(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    }

    // Double wheel on n >= 5 vertices: a cycle 0..n-3 plus two apexes n-2
    // (above, faces oriented with the cycle) and n-1 (below).  Even, hence
    // 3-colorable, exactly when n is even.  double_wheel(6) is the octahedron.
    static Triangulation double_wheel(int n) {
        if (n < 5) throw validation_error("double_wheel: need at least 5 vertices");
        int m = n - 2;
        std::vector<Tri> fs;
        fs.reserve(2 * static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) fs.push_back({n - 2, i, (i + 1) % m});
        for (int i = 0; i < m; ++i) fs.push_back({n - 1, (i + 1) % m, i});
        return Triangulation(n, std::move(fs));
    }

    static Triangulation octahedron() { return double_wheel(6); }

    // Chain of `k` octahedra, each glued onto a face of the previous one.
    // Equivalent to repeated glue_along_face but built as one face list so
    // construction stays linear in k.
    static Triangulation octahedron_chain(int k) {
        if (k < 1) throw validation_error("octahedron_chain: need at least one block");
        std::vector<Tri> faces;
        faces.reserve(8 * static_cast<size_t>(k));
        int g0 = 0, g1 = 1, g2 = 2, g3 = 3, g4 = 4, g5 = 5;
        int next = 6;
        for (int i = 0; i < k; ++i) {
            if (i > 0) {
                int p1 = g1, p4 = g4, p0 = g0;
                g0 = p1;
                g1 = p4;
                g5 = p0;
                g2 = next++;
                g3 = next++;
                g4 = next++;
            }
            // faces of this block, minus the one the next block replaces
            if (i + 1 == k) faces.push_back({g4, g0, g1});
            faces.push_back({g4, g1, g2});
            faces.push_back({g4, g2, g3});
            faces.push_back({g4, g3, g0});
            if (i == 0) faces.push_back({g5, g1, g0});
            faces.push_back({g5, g2, g1});
            faces.push_back({g5, g3, g2});
            faces.push_back({g5, g0, g3});
        }
        return Triangulation(next, std::move(faces));
    }

    // --- surgery ---------------------------------------------------------------

    // Glues g2 onto g1 along the given faces: both faces are removed and their
    // boundary triangles identified so orientations stay coherent.  With
    // f1 = (a,b,c) and f2 = (x,y,z), vertex x is identified with b, y with a
    // and z with c (after cyclically rotating f2 by `rotation` first).
    // Vertices of g2 are renumbered deterministically: glued ones take the g1
    // ids, the rest follow in ascending g2 order starting at g1.vertex_count().
    static Triangulation glue_along_face(const Triangulation& g1, int f1,
                                         const Triangulation& g2, int f2,
                                         int rotation = 0) {
        if (f1 < 0 || f1 >= g1.face_count() || f2 < 0 || f2 >= g2.face_count())
            throw validation_error("glue_along_face: face index out of range");
        Tri a = g1.face(f1);
        Tri b = g2.face(f2);
        std::rotate(b.begin(), b.begin() + ((rotation % 3) + 3) % 3, b.end());
        std::vector<int> remap(static_cast<size_t>(g2.vertex_count()), -1);
        remap[static_cast<size_t>(b[0])] = a[1];
        remap[static_cast<size_t>(b[1])] = a[0];
        remap[static_cast<size_t>(b[2])] = a[2];
        int next = g1.vertex_count();
        for (int v = 0; v < g2.vertex_count(); ++v)
            if (remap[static_cast<size_t>(v)] < 0) remap[static_cast<size_t>(v)] = next++;
        std::vector<Tri> fs;
        fs.reserve(static_cast<size_t>(g1.face_count() + g2.face_count() - 2));
        for (int f = 0; f < g1.face_count(); ++f)
            if (f != f1) fs.push_back(g1.face(f));
        for (int f = 0; f < g2.face_count(); ++f) {
            if (f == f2) continue;
            Tri t = g2.face(f);
            fs.push_back({remap[static_cast<size_t>(t[0])], remap[static_cast<size_t>(t[1])],
                          remap[static_cast<size_t>(t[2])]});
        }
        return Triangulation(next, std::move(fs));
    }

    // Barycentric subdivision.  New vertex ids: originals first, then one per
    // edge in edge-id order, then one per face in face-id order.  Always even.
    Triangulation barycentric_subdivision() const {
        int ne = edge_count(), nf = face_count();
        auto mid = [&](int u, int v) { return n_ + edge_id(u, v); };
        std::vector<Tri> fs;
        fs.reserve(6 * static_cast<size_t>(nf));
        for (int f = 0; f < nf; ++f) {
            const Tri& t = faces_[static_cast<size_t>(f)];
            int c = n_ + ne + f;
            for (int i = 0; i < 3; ++i) {
                int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
                fs.push_back({u, mid(u, v), c});
                fs.push_back({mid(u, v), v, c});
            }
        }
        return Triangulation(n_ + ne + nf, std::move(fs));
    }

    // --- serialization --------------------------------------------------------

    // Text format: header "tri2 <nV> <nF>" followed by one face per line.
    static Triangulation load_tri2(std::istream& in) {
        std::string tag;
        int n = 0, nf = 0;
        if (!(in >> tag >> n >> nf) || tag != "tri2")
            throw validation_error("tri2: bad header");
        std::vector<Tri> fs(static_cast<size_t>(nf));
        for (auto& t : fs)
            if (!(in >> t[0] >> t[1] >> t[2]))
                throw validation_error("tri2: truncated face list");
        return Triangulation(n, std::move(fs));
    }

    void save_tri2(std::ostream& out) const {
        out << "tri2 " << n_ << ' ' << faces_.size() << '\n';
        for (const Tri& t : faces_) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }

    // JSON mirror with fixed key order {dim, vertices, faces}.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["dim"] = 2;
        j["vertices"] = n_;
        j["faces"] = faces_;
        return j;
    }

    static Triangulation from_json(const nlohmann::json& j) {
        if (!j.contains("dim") || j["dim"].get<int>() != 2)
            throw validation_error("json triangulation: dim must be 2");
        std::vector<Tri> fs = j.at("faces").get<std::vector<Tri>>();
        return Triangulation(j.at("vertices").get<int>(), std::move(fs));
    }

private:
    void build_and_validate() {
        if (n_ < 4) throw validation_error("triangulation: need at least 4 vertices");
        if (faces_.size() < 4) throw validation_error("triangulation: need at least 4 faces");

        directed_face_.reserve(faces_.size() * 6);
        edge_ids_.reserve(faces_.size() * 3);

        for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
            const Tri& t = faces_[static_cast<size_t>(f)];
            for (int x : t)
                if (x < 0 || x >= n_) throw validation_error("triangulation: vertex id out of range");
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
                throw validation_error("triangulation: face with repeated vertex");
            for (int i = 0; i < 3; ++i) {
                int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
                // Each directed edge may appear in exactly one face; a second
                // occurrence means the orientation is not coherent (or the
                // complex pinches through a doubled edge).
                if (!directed_face_.emplace(detail::directed_key(u, v), f).second)
                    throw validation_error("triangulation: directed edge appears twice "
                                           "(orientation not coherent)");
            }
        }

        // Pair up directed edges into undirected ones.
        for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
            const Tri& t = faces_[static_cast<size_t>(f)];
            for (int i = 0; i < 3; ++i) {
                int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
                if (u > v) continue;
                auto rev = directed_face_.find(detail::directed_key(v, u));
                if (rev == directed_face_.end())
                    throw validation_error("triangulation: boundary edge (no opposite face)");
                int id = static_cast<int>(edges_.size());
                edges_.push_back({u, v});
                edge_faces_.push_back({f, rev->second});
                edge_ids_.emplace(detail::directed_key(u, v), id);
            }
        }
        // Every directed edge must have found its partner.
        if (directed_face_.size() != 2 * edges_.size())
            throw validation_error("triangulation: unmatched directed edge");

        // Euler characteristic of the sphere.
        long long euler = static_cast<long long>(n_) - static_cast<long long>(edges_.size()) +
                          static_cast<long long>(faces_.size());
        if (euler != 2) throw validation_error("triangulation: Euler characteristic is not 2");

        // Rotation around each vertex: in a ccw face (v,a,b), neighbor b
        // follows neighbor a.  The successor map must form one single cycle,
        // otherwise the surface is pinched at v.
        std::vector<std::unordered_map<int, int>> succ(static_cast<size_t>(n_));
        for (const Tri& t : faces_)
            for (int i = 0; i < 3; ++i) {
                int v = t[static_cast<size_t>(i)], a = t[static_cast<size_t>((i + 1) % 3)],
                    b = t[static_cast<size_t>((i + 2) % 3)];
                succ[static_cast<size_t>(v)].emplace(a, b);
            }
        rotation_.assign(static_cast<size_t>(n_), {});
        for (int v = 0; v < n_; ++v) {
            auto& s = succ[static_cast<size_t>(v)];
            if (s.empty()) throw validation_error("triangulation: isolated vertex");
            int start = s.begin()->first;
            for (const auto& kv : s) start = std::min(start, kv.first);
            auto& rot = rotation_[static_cast<size_t>(v)];
            rot.reserve(s.size());
            int cur = start;
            do {
                rot.push_back(cur);
                auto it = s.find(cur);
                if (it == s.end()) throw validation_error("triangulation: broken vertex rotation");
                cur = it->second;
            } while (cur != start && rot.size() <= s.size());
            if (rot.size() != s.size())
                throw validation_error("triangulation: vertex link is not a single cycle");
        }

        // Connectivity over the vertex graph (BFS from vertex 0).
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : rotation_[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != n_) throw validation_error("triangulation: not connected");
    }

    int n_;
    std::vector<Tri> faces_;
    std::vector<std::array<int, 2>> edges_;       // undirected, u < v, id = index
    std::vector<std::array<int, 2>> edge_faces_;  // [face of u->v, face of v->u]
    std::unordered_map<std::uint64_t, int> edge_ids_;
    std::unordered_map<std::uint64_t, int> directed_face_;
    std::vector<std::vector<int>> rotation_;      // ccw neighbor cycles
};

} // namespace recolor

#endif // RECOLOR_TRIANGULATION_HPP
