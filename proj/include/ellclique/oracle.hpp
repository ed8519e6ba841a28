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
#include <cstdint>
#include <set>
#include <stdexcept>

#include "ellclique/embedding.hpp"
#include "ellclique/word_codec.hpp"

// Brute-force references for the dynamic program and the word codec. They
// share only the topology and max_bundle with the engine; nothing here
// touches working rectangles.

namespace ellclique {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    int best_yield = 0;
    BlockCliqueEmbedding witness;
    DirectionWord word;
    GridOffset offset;
    std::uint64_t instances_examined = 0;
};

/// Scores every block clique embedding with n blocks by summing max_bundle
/// sizes and keeps the first maximum in enumeration order. Throws
/// cap_exceeded when there are more than `cap` embeddings.
OracleResult brute_force_best(const HardwareGraph &g, int n, std::uint64_t cap = 10'000'000);

struct SearchLimits {
    int max_cells = 25;
    int max_n = 4;
};

/// Every set of n ell blocks with n cells each that pairwise intersect in a
/// single cell, horizontal arm against vertical arm, found by direct
/// constraint search. Blocks in each result are sorted by height. Throws
/// cap_exceeded outside `limits`.
std::set<BlockCliqueEmbedding> exhaustive_block_search(const ChimeraShape &shape, int n, SearchLimits limits = {});

}  // namespace ellclique
