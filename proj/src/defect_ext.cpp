// Copyright 2026 The ellclique Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "ellclique/defect_ext.hpp"

#include <algorithm>

#include "ellclique/clique_dp.hpp"

namespace ellclique {

IntraCellFailureSet intra_failures(const HardwareGraph &g) { return {g.failed_intra_couplers()}; }

void for_each_minimal_vertex_cover(std::span<const Coupler> edges,
                                   const std::function<void(const std::vector<ChimeraCoord> &)> &visit, int cap) {
    if (int(edges.size()) > cap)
        throw cap_exceeded(std::to_string(edges.size()) + " failed intra-cell couplers exceed the cover cap of " +
                           std::to_string(cap));
    std::vector<ChimeraCoord> verts;
    for (auto &[a, b] : edges) {
        if (!is_intra_cell(a, b)) throw std::invalid_argument("failure set holds a non intra-cell coupler");
        verts.push_back(a);
        verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto id = [&](const ChimeraCoord &q) {
        return std::size_t(std::lower_bound(verts.begin(), verts.end(), q) - verts.begin());
    };
    const std::size_t V = verts.size();
    std::vector<std::vector<std::size_t>> adj(V);
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (auto &[a, b] : edges) {
        auto i = id(a), j = id(b);
        if (i == j) continue;
        adj[i].push_back(j);
        adj[j].push_back(i);
        es.emplace_back(i, j);
    }

    // branch on an endpoint v of the first uncovered edge: v in the cover, or
    // v out and all its neighbours in; distinct leaves give distinct sets
    enum : char { Unknown, In, Out };
    std::vector<char> state(V, Unknown);
    auto recurse = [&](auto &&self) -> void {
        auto open = std::find_if(es.begin(), es.end(), [&](auto &e) { return state[e.first] != In && state[e.second] != In; });
        if (open == es.end()) {
            std::vector<ChimeraCoord> cover;
            for (std::size_t v = 0; v < V; ++v) {
                if (state[v] != In) continue;
                bool needed = std::any_of(adj[v].begin(), adj[v].end(), [&](std::size_t w) { return state[w] != In; });
                if (!needed) return;
                cover.push_back(verts[v]);
            }
            visit(cover);
            return;
        }
        std::size_t v = state[open->first] == Unknown ? open->first : open->second;
        state[v] = In;
        self(self);
        state[v] = Out;
        std::vector<std::size_t> forced;
        bool feasible = true;
        for (auto w : adj[v]) {
            if (state[w] == Out) feasible = false;
            if (state[w] == Unknown) {
                state[w] = In;
                forced.push_back(w);
            }
        }
        if (feasible) self(self);
        for (auto w : forced) state[w] = Unknown;
        state[v] = Unknown;
    };
    recurse(recurse);
}

std::vector<std::vector<ChimeraCoord>> minimal_vertex_covers(const IntraCellFailureSet &f, int cap) {
    std::vector<std::vector<ChimeraCoord>> out;
    for_each_minimal_vertex_cover(f.edges, [&](const std::vector<ChimeraCoord> &c) { out.push_back(c); }, cap);
    std::sort(out.begin(), out.end());
    return out;
}

IntraFailureResult embed_with_intra_failures(const HardwareGraph &g, std::optional<int> n, int cap) {
    auto failures = intra_failures(g);
    IntraFailureResult result;
    result.t = failures.t();
    bool have = false;
    for (auto &cover : minimal_vertex_covers(failures, cap)) {
        auto reduced = apply_defects(g, cover);
        auto e = n ? native_clique_embed(reduced, *n) : best_native_clique(reduced);
        ++result.covers_tried;
        if (!have || result.embedding.yield() < e.yield()) {
            have = true;
            result.embedding = std::move(e);
            result.winning_cover = cover;
        }
    }
    return result;
}

}  // namespace ellclique
