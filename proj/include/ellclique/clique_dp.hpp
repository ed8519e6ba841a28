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
#include <functional>
#include <optional>
#include <vector>

#include "ellclique/embedding.hpp"

// Dynamic program over working rectangles.
//
// Placing block clique embedding blocks in order of height, the cells touched
// by horizontal arms but no vertical arm form a rectangle. After placing i
// blocks of an n-block embedding it has height i and width n-i. A block of
// height i takes rectangle r_to(block) (height i-1) to r_from(block) (height
// i), so the best partial embedding ending in each rectangle only depends on
// the best ones for rectangles one row shorter. Each rectangle has at most
// four blocks entering and four leaving it.
//
// Bundle sizes come from a table of intact wire counts per line segment, so
// each relaxation is O(1) and one run is O(L N M^2 + L M N^2 + n M N).

namespace ellclique {

struct WorkingRect {
    int x0 = 1, x1 = 0;
    int y0 = 1, y1 = 0;

    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
    friend bool operator==(const WorkingRect &, const WorkingRect &) = default;
};

/// Rectangle in effect right after `block` is placed. Needs height < size.
WorkingRect r_from(const EllBlock &block);
/// Rectangle that must be in effect right before `block` is placed. Needs height >= 2.
WorkingRect r_to(const EllBlock &block);

/// Calls f for every block of `n` cells and height `height` that fits the
/// shape, corners in row-major order, then corner-east, then corner-north.
void for_each_block(const ChimeraShape &shape, int n, int height, const std::function<void(const EllBlock &)> &f);

struct DpEntry {
    int best_size = 0;
    std::optional<EllBlock> back_ref;
};

/// |max_bundle(g, block)| for every n-cell block in O(1), from intact wire
/// counts over every horizontal and vertical segment of cells. Corners with a
/// failed intra-cell coupler fall back to max_bundle.
class BundleSizeTable {
  public:
    BundleSizeTable(const HardwareGraph &g, int n);

    int n() const { return n_; }
    int operator()(const EllBlock &block) const;
    /// Intact horizontal wires in row y over columns [x0, x1].
    int horizontal(int y, int x0, int x1) const {
        return h_[(std::size_t(y - 1) * M_ + std::size_t(x0 - 1)) * M_ + std::size_t(x1 - 1)];
    }
    /// Intact vertical wires in column x over rows [y0, y1].
    int vertical(int x, int y0, int y1) const {
        return v_[(std::size_t(x - 1) * N_ + std::size_t(y0 - 1)) * N_ + std::size_t(y1 - 1)];
    }

  private:
    HardwareGraph g_;
    int n_;
    std::size_t M_, N_;
    std::vector<std::uint16_t> h_, v_;
};

/// Throws std::invalid_argument unless 2 <= n <= min(M,N).
BundleSizeTable build_bundle_size_table(const HardwareGraph &g, int n);

/// A maximum-yield native clique embedding with chains of n+1 qubits.
/// Requires no failed intra-cell couplers between live qubits (see
/// defect_ext.hpp); throws std::invalid_argument otherwise or when n is out
/// of range. Ties go to the first block in for_each_block order.
NativeCliqueEmbedding native_clique_embed(const HardwareGraph &g, int n);

/// Yield of native_clique_embed without materializing the bundles.
int native_clique_yield(const HardwareGraph &g, int n);

/// Best embedding over every n in 2..min(M,N); ties go to the smaller n.
NativeCliqueEmbedding best_native_clique(const HardwareGraph &g);

/// Unrefined transcription of the dynamic program: whole partial embeddings
/// are stored per rectangle, starting empty and replaced only on strict
/// improvement, and bundles come from max_bundle rather than the line table.
/// O(L n^2 M N) per call. Kept as a differential-testing partner for the
/// engine above; when the best yield is 0 it may hold fewer than n bundles.
NativeCliqueEmbedding native_clique_embed_naive(const HardwareGraph &g, int n);

}  // namespace ellclique
