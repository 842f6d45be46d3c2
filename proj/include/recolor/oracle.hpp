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

#ifndef RECOLOR_ORACLE_HPP
#define RECOLOR_ORACLE_HPP

/* Brute-force reconfiguration oracle.
 *
 * Ground truth for small instances: enumerates proper (list-)colorings of an
 * arbitrary graph and explores the reconfiguration graph whose edges are
 * single-vertex recolorings.  Everything is deterministic: colorings are
 * produced in lexicographic order, breadth-first searches expand vertices in
 * ascending id and colors in ascending value.  All searches charge visited
 * states against an explicit budget and refuse (by throwing) when it is
 * exhausted, so a caller can never mistake "too big" for an answer.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace recolor {

struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default number of search states an oracle call may visit before refusing.
// Overridable through the RECOLOR_ORACLE_BUDGET environment variable.
inline std::uint64_t oracle_budget_from_env() {
    const char* s = std::getenv("RECOLOR_ORACLE_BUDGET");
    if (s != nullptr) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return 50'000'000ULL;
}

// A recoloring step: vertex v takes color c.
struct Step {
    int v;
    int c;
};

class Oracle {
public:
    // `adj` is an adjacency list over vertices 0..n-1; `lists` restricts the
    // palette per vertex (empty = every vertex may use all of 0..k-1).
    Oracle(std::vector<std::vector<int>> adj, int k,
           std::vector<std::vector<int>> lists = {},
           std::uint64_t budget = oracle_budget_from_env())
        : adj_(std::move(adj)), k_(k), budget_(budget) {
        size_t n = adj_.size();
        if (lists.empty()) {
            std::vector<int> full(static_cast<size_t>(k_));
            for (int c = 0; c < k_; ++c) full[static_cast<size_t>(c)] = c;
            lists_.assign(n, full);
        } else {
            if (lists.size() != n) throw std::invalid_argument("oracle: lists/adjacency size mismatch");
            lists_ = std::move(lists);
        }
    }

    int k() const { return k_; }
    std::uint64_t states_visited() const { return states_; }

    bool proper(const std::vector<int>& coloring) const {
        size_t n = adj_.size();
        if (coloring.size() != n) return false;
        for (size_t v = 0; v < n; ++v) {
            bool allowed = false;
            for (int c : lists_[v]) allowed = allowed || c == coloring[v];
            if (!allowed) return false;
            for (int u : adj_[v])
                if (coloring[static_cast<size_t>(u)] == coloring[v]) return false;
        }
        return true;
    }

    // All proper list-colorings, lexicographic in (vertex 0, vertex 1, ...).
    std::vector<std::vector<int>> enumerate_colorings() {
        std::vector<std::vector<int>> out;
        std::vector<int> partial(adj_.size(), -1);
        enumerate_rec(0, partial, out);
        return out;
    }

    // Breadth-first reachability between two proper colorings.  Returns the
    // shortest recoloring sequence if they are in the same component.
    std::optional<std::vector<Step>> same_component(const std::vector<int>& from,
                                                    const std::vector<int>& to) {
        if (!proper(from) || !proper(to))
            throw std::invalid_argument("oracle: endpoint coloring not proper");
        if (from == to) return std::vector<Step>{};
        std::unordered_map<std::string, std::pair<std::string, Step>> parent;
        std::deque<std::string> queue;
        std::string start = key(from), goal = key(to);
        parent.emplace(start, std::make_pair(std::string(), Step{-1, -1}));
        queue.push_back(start);
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            charge();
            std::vector<int> coloring = unkey(cur);
            for (size_t v = 0; v < adj_.size(); ++v) {
                int old = coloring[v];
                for (int c : lists_[v]) {
                    if (c == old || !move_ok(coloring, static_cast<int>(v), c)) continue;
                    coloring[v] = c;
                    std::string nxt = key(coloring);
                    coloring[v] = old;
                    if (parent.find(nxt) != parent.end()) continue;
                    parent.emplace(nxt, std::make_pair(cur, Step{static_cast<int>(v), c}));
                    if (nxt == goal) return backtrack(parent, goal);
                    queue.push_back(nxt);
                }
            }
        }
        return std::nullopt;
    }

    // True when the whole reconfiguration graph is a single component.
    bool reconfig_connected() {
        std::vector<std::vector<int>> all = enumerate_colorings();
        if (all.size() <= 1) return true;
        std::unordered_map<std::string, char> seen;
        std::deque<std::vector<int>> queue;
        seen.emplace(key(all[0]), 1);
        queue.push_back(all[0]);
        size_t reached = 1;
        while (!queue.empty()) {
            std::vector<int> coloring = queue.front();
            queue.pop_front();
            charge();
            for (size_t v = 0; v < adj_.size(); ++v) {
                int old = coloring[v];
                for (int c : lists_[v]) {
                    if (c == old || !move_ok(coloring, static_cast<int>(v), c)) continue;
                    coloring[v] = c;
                    if (seen.emplace(key(coloring), 1).second) {
                        ++reached;
                        queue.push_back(coloring);
                    }
                    coloring[v] = old;
                }
            }
        }
        return reached == all.size();
    }

    // Component of `from`, as the set of reachable colorings.
    std::vector<std::vector<int>> component_of(const std::vector<int>& from) {
        if (!proper(from)) throw std::invalid_argument("oracle: coloring not proper");
        std::unordered_map<std::string, char> seen;
        std::deque<std::vector<int>> queue;
        std::vector<std::vector<int>> out{from};
        seen.emplace(key(from), 1);
        queue.push_back(from);
        while (!queue.empty()) {
            std::vector<int> coloring = queue.front();
            queue.pop_front();
            charge();
            for (size_t v = 0; v < adj_.size(); ++v) {
                int old = coloring[v];
                for (int c : lists_[v]) {
                    if (c == old || !move_ok(coloring, static_cast<int>(v), c)) continue;
                    coloring[v] = c;
                    if (seen.emplace(key(coloring), 1).second) {
                        out.push_back(coloring);
                        queue.push_back(coloring);
                    }
                    coloring[v] = old;
                }
            }
        }
        return out;
    }

private:
    void charge() {
        if (++states_ > budget_)
            throw budget_exceeded_error("oracle: state budget exceeded (" +
                                        std::to_string(budget_) + " states)");
    }

    bool move_ok(const std::vector<int>& coloring, int v, int c) const {
        for (int u : adj_[static_cast<size_t>(v)])
            if (coloring[static_cast<size_t>(u)] == c) return false;
        return true;
    }

    void enumerate_rec(size_t v, std::vector<int>& partial, std::vector<std::vector<int>>& out) {
        charge();
        if (v == adj_.size()) {
            out.push_back(partial);
            return;
        }
        for (int c : lists_[v]) {
            bool ok = true;
            for (int u : adj_[v])
                if (static_cast<size_t>(u) < v && partial[static_cast<size_t>(u)] == c) ok = false;
            if (!ok) continue;
            partial[v] = c;
            enumerate_rec(v + 1, partial, out);
            partial[v] = -1;
        }
    }

    std::string key(const std::vector<int>& coloring) const {
        std::string s(coloring.size(), '\0');
        for (size_t i = 0; i < coloring.size(); ++i) s[i] = static_cast<char>(coloring[i]);
        return s;
    }

    std::vector<int> unkey(const std::string& s) const {
        std::vector<int> c(s.size());
        for (size_t i = 0; i < s.size(); ++i) c[i] = static_cast<int>(s[i]);
        return c;
    }

    std::vector<Step> backtrack(
        const std::unordered_map<std::string, std::pair<std::string, Step>>& parent,
        const std::string& goal) const {
        std::vector<Step> steps;
        std::string cur = goal;
        while (true) {
            const auto& pr = parent.at(cur);
            if (pr.second.v < 0) break;
            steps.push_back(pr.second);
            cur = pr.first;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    }

    std::vector<std::vector<int>> adj_;
    int k_;
    std::vector<std::vector<int>> lists_;
    std::uint64_t budget_;
    std::uint64_t states_ = 0;
};

} // namespace recolor

#endif // RECOLOR_ORACLE_HPP
