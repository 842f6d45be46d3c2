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

#ifndef RECOLOR_COMPLEXD_HPP
#define RECOLOR_COMPLEXD_HPP

/* Oriented simplicial d-complexes (d >= 2): validation, suspension and
 * join-of-cycles generators, and the generalized per-corank-2-simplex balance
 * test for (d+2)-colorings.  Only the balance decision is provided in high
 * dimension; recoloring-sequence synthesis stays two-dimensional.
 */

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "triangulation.hpp"

namespace recolor {

namespace detail {

// +1 for an even permutation distance from ascending order, -1 for odd.
inline int sort_parity_sign(std::vector<int> t) {
    int inversions = 0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// A closed oriented pseudo-manifold of dimension d given by its facets, each
// an ordered (d+1)-tuple.  Validation checks that every (d-1)-simplex lies in
// exactly two facets with opposite induced orientations, that the link of
// every (d-2)-simplex is a single cycle, and that the facet adjacency graph
// is connected.  The h1_trivial flag declares (untested) that the manifold
// has trivial (d-1)-st mod-2 homology, the scope in which the balance test
// decides component membership.
class ComplexD {
  public:
    ComplexD(int dimension, int vertex_count, std::vector<std::vector<int>> facets,
             bool h1_trivial = true)
        : d_(dimension), n_(vertex_count), h1_trivial_(h1_trivial), facets_(std::move(facets)) {
        validate();
    }

    int dimension() const { return d_; }
    int vertex_count() const { return n_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<int>& facet(int f) const { return facets_[static_cast<size_t>(f)]; }
    bool h1_trivial() const { return h1_trivial_; }

    // All stars of (d-2)-simplices have even size; for d=2 this is the
    // all-degrees-even condition.
    bool is_even() const { return even_; }

    // Sorted (d-2)-simplices and the facets containing each, in facet order.
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& corank2_stars() const {
        return corank2_stars_;
    }

    // Edges of the 1-skeleton (sorted pairs, each once).
    std::vector<std::array<int, 2>> skeleton_edges() const {
        std::vector<std::array<int, 2>> out;
        for (const auto& f : facets_)
            for (size_t i = 0; i < f.size(); ++i)
                for (size_t j = i + 1; j < f.size(); ++j)
                    out.push_back({std::min(f[i], f[j]), std::max(f[i], f[j])});
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    void validate() {
        if (d_ < 2) throw validation_error("complex: dimension must be at least 2");
        if (n_ <= d_ + 1) throw validation_error("complex: too few vertices");
        if (facets_.empty()) throw validation_error("complex: no facets");
        for (const auto& f : facets_) {
            if (static_cast<int>(f.size()) != d_ + 1)
                throw validation_error("complex: facet arity mismatch");
            for (int v : f)
                if (v < 0 || v >= n_) throw validation_error("complex: vertex id out of range");
            std::vector<int> s = f;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw validation_error("complex: facet repeats a vertex");
        }

        // ridges: exactly two facets each, opposite induced orientations
        std::map<std::vector<int>, std::vector<std::pair<int, int>>> ridges;  // -> (facet, sign)
        for (size_t fi = 0; fi < facets_.size(); ++fi) {
            const auto& f = facets_[fi];
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> r;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) r.push_back(f[i]);
                int sign = detail::sort_parity_sign(r) * (drop % 2 == 0 ? 1 : -1);
                std::sort(r.begin(), r.end());
                ridges[r].push_back({static_cast<int>(fi), sign});
            }
        }
        for (const auto& [r, uses] : ridges) {
            if (uses.size() != 2)
                throw validation_error("complex: a (d-1)-simplex is not in exactly two facets");
            if (uses[0].second == uses[1].second)
                throw validation_error("complex: incoherent facet orientations");
        }

        // facet adjacency connectivity through ridges
        {
            std::vector<int> comp(facets_.size(), -1);
            std::vector<std::vector<int>> adj(facets_.size());
            for (const auto& [r, uses] : ridges) {
                adj[static_cast<size_t>(uses[0].first)].push_back(uses[1].first);
                adj[static_cast<size_t>(uses[1].first)].push_back(uses[0].first);
            }
            std::vector<int> queue{0};
            comp[0] = 0;
            for (size_t qi = 0; qi < queue.size(); ++qi)
                for (int o : adj[static_cast<size_t>(queue[qi])])
                    if (comp[static_cast<size_t>(o)] < 0) {
                        comp[static_cast<size_t>(o)] = 0;
                        queue.push_back(o);
                    }
            if (queue.size() != facets_.size())
                throw validation_error("complex: facet graph is disconnected");
        }

        // (d-2)-simplices: single-cycle links; record stars and evenness
        std::map<std::vector<int>, std::vector<int>> stars;
        for (size_t fi = 0; fi < facets_.size(); ++fi) {
            const auto& f = facets_[fi];
            for (size_t i = 0; i < f.size(); ++i) {
                for (size_t j = i + 1; j < f.size(); ++j) {
                    std::vector<int> sigma;
                    for (size_t t = 0; t < f.size(); ++t)
                        if (t != i && t != j) sigma.push_back(f[t]);
                    std::sort(sigma.begin(), sigma.end());
                    stars[sigma].push_back(static_cast<int>(fi));
                }
            }
        }
        even_ = true;
        for (const auto& [sigma, fs] : stars) {
            // link edges: the two vertices of each star facet outside sigma
            std::map<int, std::vector<int>> link;
            for (int fi : fs) {
                std::vector<int> rest;
                for (int v : facets_[static_cast<size_t>(fi)])
                    if (!std::binary_search(sigma.begin(), sigma.end(), v)) rest.push_back(v);
                if (rest.size() != 2) throw validation_error("complex: malformed star");
                link[rest[0]].push_back(rest[1]);
                link[rest[1]].push_back(rest[0]);
            }
            for (const auto& [v, nb] : link)
                if (nb.size() != 2)
                    throw validation_error("complex: link of a (d-2)-simplex is not a cycle");
            // connectivity of the link: walk from the first vertex
            int start = link.begin()->first;
            int prev = -1, at = start;
            size_t visited = 0;
            do {
                const auto& nb = link[at];
                int nxt = (nb[0] == prev) ? nb[1] : nb[0];
                prev = at;
                at = nxt;
                ++visited;
                if (visited > link.size()) break;
            } while (at != start);
            if (visited != link.size())
                throw validation_error("complex: link of a (d-2)-simplex is not a single cycle");
            if (fs.size() % 2 != 0) even_ = false;
            corank2_stars_.push_back({sigma, fs});
        }
    }

    int d_;
    int n_;
    bool h1_trivial_;
    bool even_ = false;
    std::vector<std::vector<int>> facets_;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> corank2_stars_;
};

// --- construction -----------------------------------------------------------------

// A sphere triangulation as a 2-complex.
inline ComplexD from_triangulation(const Triangulation& g) {
    std::vector<std::vector<int>> facets;
    facets.reserve(static_cast<size_t>(g.face_count()));
    for (const Tri& t : g.faces()) facets.push_back({t[0], t[1], t[2]});
    return ComplexD(2, g.vertex_count(), std::move(facets), true);
}

// Suspension: joins K with two new apex vertices.  Facets double: each base
// facet extends by apex a keeping its orientation and by apex b with the
// orientation reversed.  Evenness is preserved.
inline ComplexD suspend(const ComplexD& k) {
    int a = k.vertex_count(), b = k.vertex_count() + 1;
    std::vector<std::vector<int>> facets;
    facets.reserve(2 * k.facets().size());
    for (const auto& f : k.facets()) {
        std::vector<int> fa = f;
        fa.push_back(a);
        facets.push_back(std::move(fa));
        std::vector<int> fb = f;
        std::swap(fb[0], fb[1]);
        fb.push_back(b);
        facets.push_back(std::move(fb));
    }
    return ComplexD(k.dimension() + 1, k.vertex_count() + 2, std::move(facets), k.h1_trivial());
}

inline ComplexD suspend(const Triangulation& g) { return suspend(from_triangulation(g)); }

// The join of two cycles C_m and C_n (m, n even and >= 4): a 3-sphere whose
// facets pair every edge of one cycle with every edge of the other.  Vertex
// ids: the C_m cycle is 0..m-1, the C_n cycle is m..m+n-1.
inline ComplexD join_cycles(int m, int n) {
    if (m < 4 || n < 4 || m % 2 != 0 || n % 2 != 0)
        throw validation_error("join_cycles: cycle lengths must be even and at least 4");
    std::vector<std::vector<int>> facets;
    facets.reserve(static_cast<size_t>(m) * static_cast<size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            facets.push_back({i, (i + 1) % m, m + j, m + (j + 1) % n});
    return ComplexD(3, m + n, std::move(facets), true);
}

// --- the generalized balance test ---------------------------------------------------

// True iff the coloring assigns distinct colors from {0..k-1} to the vertices
// of every facet (equivalently, is proper on the 1-skeleton).
inline bool is_proper_on_skeleton(const ComplexD& k, const Coloring& c) {
    if (static_cast<int>(c.at.size()) != k.vertex_count()) return false;
    for (int v = 0; v < k.vertex_count(); ++v)
        if (c[v] < 0 || c[v] >= c.k) return false;
    for (const auto& f : k.facets())
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j)
                if (c[f[i]] == c[f[j]]) return false;
    return true;
}

// Sign of a facet under a (d+2)-coloring: the parity of the permutation
// sorting the facet's color tuple, times (-1)^(the missing color).
inline int facet_sign_d(const ComplexD& k, const Coloring& c, int f) {
    const auto& fv = k.facet(f);
    std::vector<int> cols;
    cols.reserve(fv.size());
    int sum = 0;
    for (int v : fv) {
        cols.push_back(c[v]);
        sum += c[v];
    }
    int palette_sum = (c.k * (c.k - 1)) / 2;
    int missing = palette_sum - sum;
    int sign = detail::sort_parity_sign(std::move(cols));
    return missing % 2 == 0 ? sign : -sign;
}

// The balance test for (d+2)-colorings of an even complex: around every
// (d-2)-simplex the star must contain as many +1 facets as -1 facets.  On
// manifolds with trivial (d-1)-st mod-2 homology this decides whether the
// coloring can be recolored down to d+1 colors.
inline bool balance_check_d(const ComplexD& k, const Coloring& c) {
    if (c.k != k.dimension() + 2)
        throw validation_error("balance_check_d: palette must have d+2 colors");
    if (!is_proper_on_skeleton(k, c))
        throw validation_error("balance_check_d: coloring is not proper on the 1-skeleton");
    if (!k.is_even()) throw validation_error("balance_check_d: complex is not even");
    std::vector<int> sign_of(static_cast<size_t>(k.facet_count()), 0);
    for (int f = 0; f < k.facet_count(); ++f) sign_of[static_cast<size_t>(f)] = facet_sign_d(k, c, f);
    for (const auto& [sigma, fs] : k.corank2_stars()) {
        int total = 0;
        for (int f : fs) total += sign_of[static_cast<size_t>(f)];
        if (total != 0) return false;
    }
    return true;
}

// Net number of forward laps of a cyclic color sequence over {0,1,2} around
// the cycle 0 -> 1 -> 2 -> 0; each forward step counts +1/3, each backward
// step -1/3.
inline int winding_degree(const std::vector<int>& cycle) {
    if (cycle.size() < 2) throw validation_error("winding_degree: need at least two entries");
    int total = 0;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (a < 0 || a > 2 || b < 0 || b > 2)
            throw validation_error("winding_degree: colors must be in {0,1,2}");
        if (a == b) throw validation_error("winding_degree: repeated consecutive colors");
        total += ((b - a) % 3 + 3) % 3 == 1 ? 1 : -1;
    }
    if (total % 3 != 0) throw std::logic_error("winding_degree: total not divisible by 3");
    return total / 3;
}

// --- TRID serialization --------------------------------------------------------------

// Format: `trid <d> <nV> <nFacets> <h1_trivial:0|1>` then one facet per line.
inline ComplexD load_trid(std::istream& in) {
    std::string tag;
    int d = 0, nv = 0, nf = 0, flag = 0;
    if (!(in >> tag >> d >> nv >> nf >> flag) || tag != "trid")
        throw validation_error("trid: bad header");
    if (nf <= 0) throw validation_error("trid: bad facet count");
    std::vector<std::vector<int>> facets(static_cast<size_t>(nf), std::vector<int>(static_cast<size_t>(d + 1)));
    for (auto& f : facets)
        for (int& v : f)
            if (!(in >> v)) throw validation_error("trid: truncated facet list");
    return ComplexD(d, nv, std::move(facets), flag != 0);
}

inline ComplexD load_trid_string(const std::string& text) {
    std::istringstream in(text);
    return load_trid(in);
}

inline void save_trid(std::ostream& out, const ComplexD& k) {
    out << "trid " << k.dimension() << ' ' << k.vertex_count() << ' ' << k.facet_count() << ' '
        << (k.h1_trivial() ? 1 : 0) << '\n';
    for (const auto& f : k.facets()) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
}

} // namespace recolor

#endif // RECOLOR_COMPLEXD_HPP
