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
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ellclique/embedding.hpp"

// JSON file formats. Coordinates are written 1-indexed as [x,y,u,k]; cells as [x,y].
//
// graph:     {"shape": {"M":8,"N":8,"L":4},
//             "dead_qubits": [[x,y,u,k], ...],
//             "dead_couplers": [[[x,y,u,k],[x,y,u,k]], ...]}
// embedding: {"n": 4,
//             "chains": [[[x,y,u,k], ...], ...],
//             "blocks": [{"corner":[x,y], "cells":[[x,y], ...]}, ...]}
//
// Arrays are in canonical order so that equal inputs give identical bytes.

namespace ellclique {

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const HardwareGraph &g);
HardwareGraph graph_from_json(const nlohmann::json &j);

nlohmann::json to_json(const NativeCliqueEmbedding &e);
/// Chains are matched to blocks by shape; throws format_error when a chain is
/// not an ell or fits none of the listed blocks.
NativeCliqueEmbedding embedding_from_json(const nlohmann::json &j);

/// Top-level object with one array element per line.
std::string dump(const nlohmann::json &j);

HardwareGraph read_graph(const std::string &path);
NativeCliqueEmbedding read_embedding(const std::string &path);
void write_text(const std::string &path, const std::string &text);

}  // namespace ellclique
