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

#ifndef RECOLOR_RECONFIGURE_HPP
#define RECOLOR_RECONFIGURE_HPP

/* Constructive reconfiguration between 4-colorings of an even sphere
 * triangulation.
 *
 * A balanced 4-coloring can be walked down to a 3-coloring by single-vertex
 * recolorings.  The walk is organized around the nonsingular edges: at every
 * vertex they are matched into sign-mixed noncrossing pairs, the pairs chain
 * the nonsingular edges into closed trails, and each trail encloses a region
 * of faces relative to a fixed outer face.  Recoloring the apex of a face
 * just inside an innermost trail shrinks the total enclosed volume by the
 * apex degree, so repeating the move terminates in a 3-coloring.  Two
 * 3-colorings of the same graph differ by a permutation of the color
 * classes, realized by whole-class moves through the currently unused
 * color.  Concatenating descent, class moves, and a reversed descent yields
 * an explicit sequence between any two balanced colorings.
 */

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "oracle.hpp"
#include "triangulation.hpp"

namespace recolor {

// One single-vertex recoloring: vertex v takes color c.
struct RecolorStep {
    int v = -1;
    int c = -1;
    bool operator==(const RecolorStep& o) const { return v == o.v && c == o.c; }
};

using RecolorSequence = std::vector<RecolorStep>;

// Text format: header "seq <nSteps>" then one "v c" line per step.
inline void save_sequence(std::ostream& out, const RecolorSequence& seq) {
    out << "seq " << seq.size() << '\n';
    for (const RecolorStep& s : seq) out << s.v << ' ' << s.c << '\n';
}

inline RecolorSequence load_sequence(std::istream& in) {
    std::string tag;
    long long n = 0;
    if (!(in >> tag >> n) || tag != "seq" || n < 0) throw validation_error("seq: bad header");
    RecolorSequence seq(static_cast<size_t>(n));
    for (RecolorStep& s : seq)
        if (!(in >> s.v >> s.c)) throw validation_error("seq: truncated step list");
    return seq;
}

// Replays seq from `start`; reports the first violation if any.
struct VerifyResult {
    bool ok = false;
    int fail_step = -1;  // -1 means the failure is not tied to a step
    std::string reason;
    explicit operator bool() const { return ok; }
};

inline VerifyResult verify_sequence(const Triangulation& g, const Coloring& start,
                                    const RecolorSequence& seq, const Coloring& target) {
    if (!is_proper(g, start)) return {false, -1, "start coloring is not proper"};
    Coloring cur = start;
    for (size_t i = 0; i < seq.size(); ++i) {
        const RecolorStep& s = seq[i];
        int idx = static_cast<int>(i);
        if (s.v < 0 || s.v >= g.vertex_count()) return {false, idx, "vertex out of range"};
        if (s.c < 0 || s.c >= cur.k) return {false, idx, "color out of range"};
        if (s.c == cur[s.v]) return {false, idx, "step does not change the vertex"};
        for (int u : g.link(s.v))
            if (cur[u] == s.c) return {false, idx, "step makes the coloring improper"};
        cur[s.v] = s.c;
    }
    if (cur.k != target.k || cur.at != target.at)
        return {false, -1, "replay does not end at the target coloring"};
    return {true, -1, ""};
}

// --- NS-pairings --------------------------------------------------------------

// Per-vertex partition of the nonsingular edges at that vertex into pairs.
class NSPairing {
  public:
    using Pair = std::array<int, 2>;  // edge ids, stored with smaller id first

    NSPairing() = default;
    explicit NSPairing(int vertex_count) : at_(static_cast<size_t>(vertex_count)) {}

    const std::vector<Pair>& pairs_at(int v) const { return at_[static_cast<size_t>(v)]; }

    int partner(int v, int e) const {
        for (const Pair& p : at_[static_cast<size_t>(v)]) {
            if (p[0] == e) return p[1];
            if (p[1] == e) return p[0];
        }
        return -1;
    }

    void add_pair(int v, int e1, int e2) {
        if (e1 > e2) std::swap(e1, e2);
        at_[static_cast<size_t>(v)].push_back({e1, e2});
    }

    // Removes the pair containing e at v, returning the partner (-1 if e is
    // unpaired there).
    int pop_pair_with(int v, int e) {
        auto& vec = at_[static_cast<size_t>(v)];
        for (size_t i = 0; i < vec.size(); ++i) {
            if (vec[i][0] == e || vec[i][1] == e) {
                int other = (vec[i][0] == e) ? vec[i][1] : vec[i][0];
                vec[i] = vec.back();
                vec.pop_back();
                return other;
            }
        }
        return -1;
    }

    long long pair_count() const {
        long long n = 0;
        for (const auto& vec : at_) n += static_cast<long long>(vec.size());
        return n;
    }

  private:
    std::vector<std::vector<Pair>> at_;
};

// Matches the nonsingular edges at every vertex into sign-mixed noncrossing
// pairs by a parenthesis scan of the rotation order: a run of equal signs is
// stacked, an opposite sign closes with the most recent open edge.  Requires
// a balanced coloring (equal counts of each sign at every vertex); otherwise
// a vertex is left with unmatched edges and an error is raised.
inline NSPairing build_admissible_pairing(const Triangulation& g, const Coloring& c,
                                          const SignatureState& st) {
    (void)c;
    NSPairing pi(g.vertex_count());
    std::vector<std::pair<int, int>> stack;  // (edge id, sign)
    for (int v = 0; v < g.vertex_count(); ++v) {
        stack.clear();
        for (int u : g.link(v)) {
            int e = g.edge_id(v, u);
            EdgeClass ec = st.edge_class[static_cast<size_t>(e)];
            if (ec == EdgeClass::Singular) continue;
            int sign = (ec == EdgeClass::PlusNS) ? 1 : -1;
            if (!stack.empty() && stack.back().second != sign) {
                pi.add_pair(v, stack.back().first, e);
                stack.pop_back();
            } else {
                stack.emplace_back(e, sign);
            }
        }
        if (!stack.empty())
            throw validation_error("build_admissible_pairing: unbalanced coloring at vertex " +
                                   std::to_string(v));
    }
    return pi;
}

// Checks the two pairing invariants plus coverage; meant for tests and
// internal sanity checks, not for hot paths.
inline bool pairing_admissible(const Triangulation& g, const SignatureState& st,
                               const NSPairing& pi) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.link(v);
        // rotation index of every edge at v
        std::vector<int> eids;
        for (size_t i = 0; i < rot.size(); ++i) eids.push_back(g.edge_id(v, rot[i]));
        auto index_of = [&](int e) {
            for (size_t i = 0; i < eids.size(); ++i)
                if (eids[i] == e) return static_cast<int>(i);
            return -1;
        };
        int paired = 0;
        for (const NSPairing::Pair& p : pi.pairs_at(v)) {
            EdgeClass c1 = st.edge_class[static_cast<size_t>(p[0])];
            EdgeClass c2 = st.edge_class[static_cast<size_t>(p[1])];
            if (c1 == EdgeClass::Singular || c2 == EdgeClass::Singular) return false;
            if (c1 == c2) return false;  // sign-mixed requirement
            if (index_of(p[0]) < 0 || index_of(p[1]) < 0) return false;
            paired += 2;
        }
        int ns = 0;
        for (int e : eids) ns += st.edge_class[static_cast<size_t>(e)] != EdgeClass::Singular;
        if (paired != ns) return false;  // every NS edge in exactly one pair
        // noncrossing: no two pairs interleave in the cyclic rotation order
        const auto& pairs = pi.pairs_at(v);
        for (size_t i = 0; i < pairs.size(); ++i) {
            for (size_t j = i + 1; j < pairs.size(); ++j) {
                int a = index_of(pairs[i][0]), b = index_of(pairs[i][1]);
                int x = index_of(pairs[j][0]), y = index_of(pairs[j][1]);
                if (a > b) std::swap(a, b);
                bool x_in = (x > a && x < b), y_in = (y > a && y < b);
                if (x_in != y_in) return false;
            }
        }
    }
    return true;
}

// --- closed trails and enclosed regions ---------------------------------------

// A closed trail of nonsingular edges together with the faces it encloses.
// `edges` is the cyclic traversal rotated to start at the smallest edge id
// and oriented so the second id is the smaller of the two possibilities;
// `inside` is sorted ascending.
struct Trail {
    std::vector<int> edges;
    std::vector<int> inside;
};

struct TrailDecomposition {
    std::vector<Trail> trails;
    int f_out = 0;
    long long volume() const {
        long long v = 0;
        for (const Trail& t : trails) v += static_cast<long long>(t.inside.size());
        return v;
    }
};

namespace detail {

// Rotates a cyclic edge sequence to its canonical form: smallest id first,
// direction chosen to make the full sequence lexicographically smallest.
inline std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
    size_t n = cyc.size();
    size_t k = static_cast<size_t>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> fwd(n), bwd(n);
    for (size_t i = 0; i < n; ++i) {
        fwd[i] = cyc[(k + i) % n];
        bwd[i] = cyc[(k + n - i) % n];
    }
    return (bwd < fwd) ? bwd : fwd;
}

// Follows pairings from edge e0 until the walk closes; returns the edge ids
// in traversal order.
inline std::vector<int> trace_trail(const Triangulation& g, const NSPairing& pi, int e0) {
    std::vector<int> seq;
    auto [a, b] = g.edge_vertices(e0);
    int start_at = std::min(a, b);
    int e = e0, at = start_at;
    do {
        seq.push_back(e);
        int w = g.other_endpoint(e, at);
        int nxt = pi.partner(w, e);
        if (nxt < 0)
            throw std::logic_error("trail tracing: pairing does not cover a nonsingular edge");
        e = nxt;
        at = w;
        if (seq.size() > static_cast<size_t>(g.edge_count()))
            throw std::logic_error("trail tracing: walk does not close");
    } while (!(e == e0 && at == start_at));
    return seq;
}

// Checkerboard side classification: every face gets a parity relative to
// f_out by a dual-graph walk that flips when crossing a trail edge.  A closed
// trail leaves even vertex degrees, so the parity is consistent; the region
// enclosed by the trail is the set of faces with parity opposite to f_out.
inline std::vector<int> checkerboard_inside(const Triangulation& g,
                                            const std::vector<int>& trail_edges, int f_out) {
    std::vector<char> on_trail(static_cast<size_t>(g.edge_count()), 0);
    for (int e : trail_edges) on_trail[static_cast<size_t>(e)] = 1;
    std::vector<std::int8_t> side(static_cast<size_t>(g.face_count()), -1);
    std::vector<int> queue{f_out};
    side[static_cast<size_t>(f_out)] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int f = queue[qi];
        const Tri& t = g.face(f);
        for (int i = 0; i < 3; ++i) {
            int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
            int eid = g.edge_id(u, v);
            int f2 = g.face_with_directed_edge(v, u);
            std::int8_t want = static_cast<std::int8_t>(
                side[static_cast<size_t>(f)] ^ (on_trail[static_cast<size_t>(eid)] ? 1 : 0));
            std::int8_t& cur = side[static_cast<size_t>(f2)];
            if (cur < 0) {
                cur = want;
                queue.push_back(f2);
            } else if (cur != want) {
                throw std::logic_error("checkerboard classification: inconsistent sides");
            }
        }
    }
    std::vector<int> inside;
    for (int f = 0; f < g.face_count(); ++f)
        if (side[static_cast<size_t>(f)] == 1) inside.push_back(f);
    return inside;
}

}  // namespace detail

// Traces all closed trails induced by the pairing and computes each trail's
// enclosed face set relative to f_out.
inline TrailDecomposition trails_and_regions(const Triangulation& g, const NSPairing& pi,
                                             int f_out = 0) {
    if (f_out < 0 || f_out >= g.face_count())
        throw validation_error("trails_and_regions: outer face out of range");
    TrailDecomposition out;
    out.f_out = f_out;
    std::vector<char> claimed(static_cast<size_t>(g.edge_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const NSPairing::Pair& p : pi.pairs_at(v)) {
            for (int e : p) {
                if (claimed[static_cast<size_t>(e)]) continue;
                Trail t;
                t.edges = detail::canonical_cycle(detail::trace_trail(g, pi, e));
                for (int te : t.edges) claimed[static_cast<size_t>(te)] = 1;
                t.inside = detail::checkerboard_inside(g, t.edges, f_out);
                out.trails.push_back(std::move(t));
            }
        }
    }
    std::sort(out.trails.begin(), out.trails.end(),
              [](const Trail& a, const Trail& b) { return a.edges[0] < b.edges[0]; });
    return out;
}

// True iff every two sets are nested or disjoint.  Quadratic; used by tests.
inline bool laminar_family(const std::vector<Trail>& trails) {
    for (size_t i = 0; i < trails.size(); ++i) {
        for (size_t j = i + 1; j < trails.size(); ++j) {
            const auto& a = trails[i].inside;
            const auto& b = trails[j].inside;
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (!common.empty() && common.size() != a.size() && common.size() != b.size())
                return false;
        }
    }
    return true;
}

// --- descent -------------------------------------------------------------------

// One recoloring performed by the descent, with enough information to replay
// it in either direction.
struct DescentMove {
    int v = -1;
    int from = -1;
    int to = -1;
};

// Stateful walk from a balanced 4-coloring down to a 3-coloring.  The default
// mode maintains signatures, pairings, trails, and regions incrementally
// across steps; the recompute mode rebuilds them from scratch after every
// step and exists for differential testing.
class DescentEngine {
  public:
    DescentEngine(const Triangulation& g, Coloring start, bool incremental = true)
        : g_(g), col_(std::move(start)), incremental_(incremental) {
        if (col_.k != 4 || !is_proper(g_, col_))
            throw validation_error("descent: needs a proper 4-coloring");
        if (!is_balanced(g_, col_)) throw validation_error("descent: coloring is unbalanced");
        edge_trail_.assign(static_cast<size_t>(g_.edge_count()), -1);
        rebuild_all();
    }

    bool finished() const { return live_count_ == 0; }
    const Coloring& coloring() const { return col_; }
    const SignatureState& signature() const { return sig_; }
    const NSPairing& pairing() const { return pairing_; }

    std::vector<const Trail*> trails() const {
        std::vector<const Trail*> out;
        for (size_t i = 0; i < slots_.size(); ++i)
            if (alive_[i]) out.push_back(&slots_[i]);
        return out;
    }

    long long volume() const {
        long long v = 0;
        for (size_t i = 0; i < slots_.size(); ++i)
            if (alive_[i]) v += static_cast<long long>(slots_[i].inside.size());
        return v;
    }

    // Performs one descent move and returns it.
    DescentMove advance() {
        if (finished()) throw std::logic_error("descent: already finished");
        size_t best = pick_innermost();
        const Trail trail = slots_[best];  // copy: the slot is released below

        int e0 = trail.edges[0];
        auto [f1, f2] = g_.edge_cofaces(e0);
        bool f1_in = std::binary_search(trail.inside.begin(), trail.inside.end(), f1);
        int f_in = f1_in ? f1 : f2;
        if (!f1_in && !std::binary_search(trail.inside.begin(), trail.inside.end(), f2))
            throw std::logic_error("descent: trail edge has no enclosed coface");
        auto [u1, u2] = g_.edge_vertices(e0);
        int v0 = g_.third_vertex(f_in, u1, u2);

        std::vector<int> alts = recolorable_colors(g_, col_, v0);
        if (alts.size() != 1)
            throw std::logic_error("descent: selected vertex lacks a unique alternative color");
        DescentMove mv{v0, col_[v0], alts[0]};

        if (incremental_) {
            step_incrementally(best, trail, v0, mv.to);
        } else {
            col_[v0] = mv.to;
            rebuild_all();
        }
        if (++steps_done_ >
            4LL * g_.vertex_count() * g_.vertex_count() + 64)
            throw std::logic_error("descent: step budget exceeded (no progress?)");
        return mv;
    }

    std::vector<DescentMove> run() {
        std::vector<DescentMove> moves;
        while (!finished()) moves.push_back(advance());
        return moves;
    }

  private:
    size_t pick_innermost() const {
        size_t best = slots_.size();
        for (size_t i = 0; i < slots_.size(); ++i) {
            if (!alive_[i]) continue;
            if (best == slots_.size() || region_key(slots_[i]) < region_key(slots_[best])) best = i;
        }
        return best;
    }

    static std::array<long long, 3> region_key(const Trail& t) {
        return {static_cast<long long>(t.inside.size()), t.inside.empty() ? -1 : t.inside[0],
                t.edges[0]};
    }

    void add_trail(Trail t) {
        size_t id = slots_.size();
        slots_.push_back(std::move(t));
        alive_.push_back(1);
        for (int e : slots_[id].edges) edge_trail_[static_cast<size_t>(e)] = static_cast<int>(id);
        ++live_count_;
    }

    void rebuild_all() {
        sig_ = SignatureState::compute(g_, col_);
        pairing_ = build_admissible_pairing(g_, col_, sig_);
        slots_.clear();
        alive_.clear();
        live_count_ = 0;
        std::fill(edge_trail_.begin(), edge_trail_.end(), -1);
        TrailDecomposition dec = trails_and_regions(g_, pairing_, 0);
        for (Trail& t : dec.trails) add_trail(std::move(t));
    }

    // The incremental step: flip the signature over the star of v0, patch the
    // pairing at each neighbor by the four-case table, and retrace only the
    // trails touching the replaced one.  The replaced trail's region minus
    // the star of v0 is exactly the union of the new trails' regions, so the
    // side classification can run restricted to that face set.
    void step_incrementally(size_t dead_id, const Trail& trail, int v0, int new_color) {
        const std::vector<int>& rot = g_.link(v0);
        std::vector<int> link_eids = g_.link_edge_ids(v0);
        std::vector<int> star = g_.star_faces(v0);
        std::sort(star.begin(), star.end());

        // sanity: the star lies inside the replaced region, and every
        // nonsingular link edge belongs to the replaced trail
        for (int f : star)
            if (!std::binary_search(trail.inside.begin(), trail.inside.end(), f))
                throw std::logic_error("descent: star face escapes the innermost region");
        for (int e : link_eids)
            if (sig_.edge_nonsingular(e) && edge_trail_[static_cast<size_t>(e)] !=
                                                static_cast<int>(dead_id))
                throw std::logic_error("descent: nonsingular link edge outside innermost trail");

        col_[v0] = new_color;
        sig_.apply_single_change(g_, v0);

        // pairing update at every neighbor of v0: its two link edges toggled
        size_t d = rot.size();
        for (size_t i = 0; i < d; ++i) {
            int v = rot[i];
            int u = rot[(i + d - 1) % d];
            int w = rot[(i + 1) % d];
            int e_u = g_.edge_id(v, u);
            int e_w = g_.edge_id(v, w);
            int pu = pairing_.pop_pair_with(v, e_u);
            if (pu == e_w) continue;  // the pair was exactly the toggled two: both died
            int pw = pairing_.pop_pair_with(v, e_w);
            if (pu < 0 && pw < 0) {
                pairing_.add_pair(v, e_u, e_w);  // both newly nonsingular
            } else if (pu >= 0 && pw < 0) {
                pairing_.add_pair(v, pu, e_w);  // e_u died, e_w born: partner carries over
            } else if (pu < 0 && pw >= 0) {
                pairing_.add_pair(v, pw, e_u);
            } else {
                pairing_.add_pair(v, pu, pw);  // both died; their partners close up
            }
        }

        // release the replaced trail
        alive_[dead_id] = 0;
        --live_count_;
        for (int e : trail.edges) edge_trail_[static_cast<size_t>(e)] = -1;

        // the face set available to the new trails
        std::vector<int> region_u;
        std::set_difference(trail.inside.begin(), trail.inside.end(), star.begin(), star.end(),
                            std::back_inserter(region_u));

        // retrace starting from surviving trail edges and reborn link edges
        std::vector<int> seeds = trail.edges;
        seeds.insert(seeds.end(), link_eids.begin(), link_eids.end());
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        std::vector<int> covered;  // union of the new regions, for the exactness check
        for (int e : seeds) {
            if (!sig_.edge_nonsingular(e) || edge_trail_[static_cast<size_t>(e)] >= 0) continue;
            Trail t;
            t.edges = detail::canonical_cycle(detail::trace_trail(g_, pairing_, e));
            t.inside = restricted_inside(region_u, t.edges);
            covered.insert(covered.end(), t.inside.begin(), t.inside.end());
            add_trail(std::move(t));
        }
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        if (covered != region_u)
            throw std::logic_error("descent: new regions do not tile the shrunk region");
    }

    // Side classification restricted to a face set whose exterior is known to
    // be entirely outside the trail: seed every face that touches the
    // exterior, then spread parity inside.
    std::vector<int> restricted_inside(const std::vector<int>& region_u,
                                       const std::vector<int>& trail_edges) {
        ++epoch_;
        if (epoch_mark_.size() != static_cast<size_t>(g_.face_count())) {
            epoch_mark_.assign(static_cast<size_t>(g_.face_count()), 0);
            side_.assign(static_cast<size_t>(g_.face_count()), -1);
        }
        if (edge_epoch_.size() != static_cast<size_t>(g_.edge_count()))
            edge_epoch_.assign(static_cast<size_t>(g_.edge_count()), 0);
        for (int f : region_u) epoch_mark_[static_cast<size_t>(f)] = epoch_;
        for (int e : trail_edges) edge_epoch_[static_cast<size_t>(e)] = epoch_;

        auto in_u = [&](int f) { return epoch_mark_[static_cast<size_t>(f)] == epoch_; };
        auto on_trail = [&](int e) { return edge_epoch_[static_cast<size_t>(e)] == epoch_; };

        std::vector<int> queue;
        for (int f : region_u) side_[static_cast<size_t>(f)] = -1;
        for (int f : region_u) {
            const Tri& t = g_.face(f);
            for (int i = 0; i < 3; ++i) {
                int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
                int f2 = g_.face_with_directed_edge(v, u);
                if (in_u(f2)) continue;
                std::int8_t want = on_trail(g_.edge_id(u, v)) ? 1 : 0;
                std::int8_t& cur = side_[static_cast<size_t>(f)];
                if (cur < 0) {
                    cur = want;
                    queue.push_back(f);
                } else if (cur != want) {
                    throw std::logic_error("restricted classification: inconsistent seeds");
                }
            }
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int f = queue[qi];
            const Tri& t = g_.face(f);
            for (int i = 0; i < 3; ++i) {
                int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
                int f2 = g_.face_with_directed_edge(v, u);
                if (!in_u(f2)) continue;
                std::int8_t want = static_cast<std::int8_t>(
                    side_[static_cast<size_t>(f)] ^ (on_trail(g_.edge_id(u, v)) ? 1 : 0));
                std::int8_t& cur = side_[static_cast<size_t>(f2)];
                if (cur < 0) {
                    cur = want;
                    queue.push_back(f2);
                } else if (cur != want) {
                    throw std::logic_error("restricted classification: inconsistent sides");
                }
            }
        }
        std::vector<int> inside;
        for (int f : region_u) {
            if (side_[static_cast<size_t>(f)] < 0)
                throw std::logic_error("restricted classification: unreachable face");
            if (side_[static_cast<size_t>(f)] == 1) inside.push_back(f);
        }
        return inside;  // region_u is sorted, so inside is sorted
    }

    const Triangulation& g_;
    Coloring col_;
    bool incremental_;
    SignatureState sig_;
    NSPairing pairing_;
    std::vector<Trail> slots_;
    std::vector<char> alive_;
    std::vector<int> edge_trail_;
    int live_count_ = 0;
    long long steps_done_ = 0;
    // scratch for restricted_inside
    std::vector<std::uint32_t> epoch_mark_;
    std::vector<std::uint32_t> edge_epoch_;
    std::vector<std::int8_t> side_;
    std::uint32_t epoch_ = 0;
};

// Walks a balanced 4-coloring to a 3-coloring; returns the steps and the
// final coloring.
inline std::pair<RecolorSequence, Coloring> descend_to_3coloring(const Triangulation& g,
                                                                 const Coloring& start,
                                                                 bool incremental = true) {
    DescentEngine eng(g, start, incremental);
    RecolorSequence seq;
    for (const DescentMove& m : eng.run()) seq.push_back({m.v, m.to});
    return {std::move(seq), eng.coloring()};
}

// --- bridging two 3-colorings ---------------------------------------------------

// An even sphere triangulation has a unique partition into three color
// classes, so two 3-colorings differ by a permutation of class colors.  The
// permutation is realized by moving whole classes into the currently unused
// color; each vertex move is proper because a class is an independent set and
// the target color is unused.
inline RecolorSequence bridge_3colorings(const Triangulation& g, const Coloring& a,
                                         const Coloring& b) {
    if (a.k != 4 || b.k != 4 || a.size() != g.vertex_count() || b.size() != g.vertex_count())
        throw validation_error("bridge: needs two 4-palette colorings of the graph");
    if (!is_proper(g, a) || !is_proper(g, b)) throw validation_error("bridge: improper coloring");
    if (colors_used(a) > 3 || colors_used(b) > 3)
        throw validation_error("bridge: inputs must use at most 3 colors");

    // classes keyed by their color in `a`; target = color in `b`
    std::array<int, 4> target{-1, -1, -1, -1};
    std::array<int, 4> source{-1, -1, -1, -1};  // reverse map for the partition check
    for (int v = 0; v < g.vertex_count(); ++v) {
        int ca = a[v], cb = b[v];
        if (target[static_cast<size_t>(ca)] == -1) target[static_cast<size_t>(ca)] = cb;
        if (source[static_cast<size_t>(cb)] == -1) source[static_cast<size_t>(cb)] = ca;
        if (target[static_cast<size_t>(ca)] != cb || source[static_cast<size_t>(cb)] != ca)
            throw std::logic_error("bridge: colorings do not share the class partition");
    }

    std::array<std::vector<int>, 4> members;
    for (int v = 0; v < g.vertex_count(); ++v) members[static_cast<size_t>(a[v])].push_back(v);

    std::array<int, 4> cur = {0, 1, 2, 3};  // cur[class] = current color; class keyed by a-color
    std::array<char, 4> used{0, 0, 0, 0};
    for (int c = 0; c < 4; ++c)
        if (target[static_cast<size_t>(c)] != -1) used[static_cast<size_t>(c)] = 1;
    int free_color = -1;
    for (int c = 0; c < 4; ++c)
        if (!used[static_cast<size_t>(c)]) free_color = c;
    if (free_color < 0) throw std::logic_error("bridge: no unused color in a 3-coloring");

    RecolorSequence seq;
    for (int guard = 0; guard < 8; ++guard) {
        int pick = -1;
        // prefer the class whose destination is the free color
        for (int c = 0; c < 4; ++c) {
            if (target[static_cast<size_t>(c)] == -1) continue;
            if (cur[static_cast<size_t>(c)] != target[static_cast<size_t>(c)] &&
                target[static_cast<size_t>(c)] == free_color) {
                pick = c;
                break;
            }
        }
        if (pick < 0) {
            for (int c = 0; c < 4; ++c) {
                if (target[static_cast<size_t>(c)] == -1) continue;
                if (cur[static_cast<size_t>(c)] != target[static_cast<size_t>(c)]) {
                    pick = c;
                    break;
                }
            }
        }
        if (pick < 0) return seq;  // everything placed
        for (int v : members[static_cast<size_t>(pick)]) seq.push_back({v, free_color});
        std::swap(cur[static_cast<size_t>(pick)], free_color);
    }
    throw std::logic_error("bridge: class moves did not converge");
}

// --- the partial solver ---------------------------------------------------------

enum class SolveStatus { Sequence = 0, DifferentComponents = 2, Undecided = 3 };

struct SolveOptions {
    bool oracle_fallback = false;   // exact search when both inputs are unbalanced
    int oracle_max_vertices = 14;   // fallback only below this size
    std::uint64_t oracle_budget = 0;  // 0: environment default
};

struct SolveResult {
    SolveStatus status = SolveStatus::Undecided;
    RecolorSequence steps;
};

// Decides reachability between two 4-colorings by single-vertex recolorings
// whenever at least one of them is balanced; optionally falls back to
// exhaustive search on small graphs otherwise.
inline SolveResult solve(const Triangulation& g, const Coloring& a, const Coloring& b,
                         const SolveOptions& opts = {}) {
    if (a.k != 4 || b.k != 4) throw validation_error("solve: palettes must have 4 colors");
    if (a.size() != g.vertex_count() || b.size() != g.vertex_count())
        throw validation_error("solve: coloring size mismatch");
    if (!is_proper(g, a) || !is_proper(g, b)) throw validation_error("solve: improper coloring");
    if (a == b) return {SolveStatus::Sequence, {}};

    bool ba = is_balanced(g, a);
    bool bb = is_balanced(g, b);
    if (ba != bb) return {SolveStatus::DifferentComponents, {}};
    if (ba && bb) {
        DescentEngine down_a(g, a);
        std::vector<DescentMove> ma = down_a.run();
        DescentEngine down_b(g, b);
        std::vector<DescentMove> mb = down_b.run();
        RecolorSequence seq;
        for (const DescentMove& m : ma) seq.push_back({m.v, m.to});
        for (const RecolorStep& s : bridge_3colorings(g, down_a.coloring(), down_b.coloring()))
            seq.push_back(s);
        for (auto it = mb.rbegin(); it != mb.rend(); ++it) seq.push_back({it->v, it->from});
        return {SolveStatus::Sequence, std::move(seq)};
    }

    if (opts.oracle_fallback && g.vertex_count() <= opts.oracle_max_vertices) {
        std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) adj[static_cast<size_t>(v)] = g.link(v);
        std::uint64_t budget = opts.oracle_budget ? opts.oracle_budget : oracle_budget_from_env();
        try {
            Oracle oracle(adj, 4, {}, budget);
            std::optional<std::vector<Step>> path = oracle.same_component(a.at, b.at);
            if (!path) return {SolveStatus::DifferentComponents, {}};
            RecolorSequence seq;
            for (const Step& s : *path) seq.push_back({s.v, s.c});
            return {SolveStatus::Sequence, std::move(seq)};
        } catch (const budget_exceeded_error&) {
            return {SolveStatus::Undecided, {}};
        }
    }
    return {SolveStatus::Undecided, {}};
}

} // namespace recolor

#endif // RECOLOR_RECONFIGURE_HPP
