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

#include "ellclique/oracle.hpp"

#include <algorithm>

namespace ellclique {

OracleResult brute_force_best(const HardwareGraph &g, int n, std::uint64_t cap) {
    auto stream = enumerate_block_embeddings(g.shape(), n);
    if (stream.size() > cap)
        throw cap_exceeded("oracle search space " + std::to_string(stream.size()) + " exceeds cap " +
                           std::to_string(cap));
    OracleResult result;
    bool have = false;
    while (auto item = stream.next()) {
        ++result.instances_examined;
        int score = 0;
        for (auto &b : item->blocks.blocks) score += max_bundle(g, b).size();
        if (!have || score > result.best_yield) {
            have = true;
            result.best_yield = score;
            result.witness = item->blocks;
            result.word = item->word;
            result.offset = item->offset;
        }
    }
    return result;
}

std::set<BlockCliqueEmbedding> exhaustive_block_search(const ChimeraShape &shape, int n, SearchLimits limits) {
    if (shape.M * shape.N > limits.max_cells || n > limits.max_n)
        throw cap_exceeded("exhaustive block search limited to " + std::to_string(limits.max_cells) +
                           " cells and n <= " + std::to_string(limits.max_n));
    if (n < 1) throw std::invalid_argument("n must be positive");

    // every n-cell block anywhere in the grid, any corner orientation
    std::vector<EllBlock> blocks;
    for (int h = 1; h <= n; ++h) {
        const int w = n - h + 1;
        for (int cy = 1; cy <= shape.N; ++cy)
            for (int cx = 1; cx <= shape.M; ++cx)
                for (int east = 0; east < 2; ++east)
                    for (int north = 0; north < 2; ++north) {
                        EllBlock b({cx, cy}, w, h, east != 0, north != 0);
                        if (b.fits(shape)) blocks.push_back(b);
                    }
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());

    const std::size_t B = blocks.size();
    std::vector<char> ok(B * B, 0);
    for (std::size_t i = 0; i < B; ++i)
        for (std::size_t j = i + 1; j < B; ++j) ok[i * B + j] = ok[j * B + i] = properly_intersect(blocks[i], blocks[j]);

    std::set<BlockCliqueEmbedding> found;
    std::vector<std::size_t> chosen;
    auto extend = [&](auto &&self, std::size_t from) -> void {
        if (int(chosen.size()) == n) {
            BlockCliqueEmbedding e;
            for (auto i : chosen) e.blocks.push_back(blocks[i]);
            std::stable_sort(e.blocks.begin(), e.blocks.end(),
                             [](const EllBlock &a, const EllBlock &b) { return a.height() < b.height(); });
            found.insert(std::move(e));
            return;
        }
        for (std::size_t c = from; c < B; ++c) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t i) { return ok[i * B + c] != 0; }))
                continue;
            chosen.push_back(c);
            self(self, c + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    return found;
}

}  // namespace ellclique
