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

#pragma once
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ellclique/embedding.hpp"
#include "ellclique/oracle.hpp"

// Failed intra-cell couplers break the assumption that any two ells meeting
// in a cell are coupled there. Deleting a vertex cover of the failed
// couplers restores it, so the engine runs once per minimal cover and the
// best result wins. Cost is exponential only in t, the number of failures.
//
// Cover vertices are removed from the whole graph, wires included. Keeping
// them usable inside wire interiors might recover a little yield; that
// variant is not implemented.

namespace ellclique {

struct IntraCellFailureSet {
    std::vector<Coupler> edges;

    int t() const { return int(edges.size()); }
};

/// The failed intra-cell couplers of g with both endpoints live.
IntraCellFailureSet intra_failures(const HardwareGraph &g);

/// Visits every inclusion-minimal vertex cover of `edges` exactly once, each
/// sorted canonically. Throws cap_exceeded if there are more than `cap`
/// edges, and std::invalid_argument if an edge is not intra-cell.
void for_each_minimal_vertex_cover(std::span<const Coupler> edges,
                                   const std::function<void(const std::vector<ChimeraCoord> &)> &visit,
                                   int cap = 20);
/// All minimal covers, sorted.
std::vector<std::vector<ChimeraCoord>> minimal_vertex_covers(const IntraCellFailureSet &f, int cap = 20);

struct IntraFailureResult {
    NativeCliqueEmbedding embedding;
    int t = 0;
    std::size_t covers_tried = 0;
    std::vector<ChimeraCoord> winning_cover;
};

/// Runs native_clique_embed(n), or best_native_clique when n is empty, on g
/// minus each minimal cover of its failed intra-cell couplers and keeps the
/// first best. With no failures this is a single plain run.
IntraFailureResult embed_with_intra_failures(const HardwareGraph &g, std::optional<int> n = std::nullopt,
                                             int cap = 20);

}  // namespace ellclique
