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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellclique/embedding.hpp"

// Block clique embeddings of n blocks are in bijection with words
//
//     {E,W} x {NE,NW,SE,SW}^(n-2) x {N,S}
//
// where symbol i names the compass direction of corner i from the center
// cell X_1 ∩ X_n. Reading the word left to right builds the embedding one
// block at a time inside a shrinking "working rectangle" (see clique_dp.hpp).
// In a grid larger than n x n every embedding is a translate of one confined
// to an n x n box; GridOffset carries that translation.

namespace ellclique {

// Declaration order is the lexicographic order used by enumeration.
enum class Direction : std::uint8_t { E, W, NE, NW, SE, SW, N, S };

inline bool points_north(Direction d) { return d == Direction::NE || d == Direction::NW || d == Direction::N; }
inline bool points_east(Direction d) { return d == Direction::E || d == Direction::NE || d == Direction::SE; }
const char *to_string(Direction d);

class DirectionWord {
  public:
    DirectionWord() = default;
    /// Throws std::invalid_argument unless the symbols are a well-formed word.
    explicit DirectionWord(std::vector<Direction> symbols);
    /// Parses the dotted form, e.g. "E.NE.SW.S".
    static DirectionWord parse(std::string_view text);

    int n() const { return int(symbols_.size()); }
    const std::vector<Direction> &symbols() const { return symbols_; }
    Direction operator[](int i) const { return symbols_[std::size_t(i)]; }
    std::string str() const;

    friend auto operator<=>(const DirectionWord &, const DirectionWord &) = default;
    friend bool operator==(const DirectionWord &, const DirectionWord &) = default;

  private:
    std::vector<Direction> symbols_;
};

struct GridOffset {
    int dx = 0;
    int dy = 0;
    friend auto operator<=>(const GridOffset &, const GridOffset &) = default;
    friend bool operator==(const GridOffset &, const GridOffset &) = default;
};

/// The block clique embedding named by `w`, translated by `offset`. Throws
/// std::invalid_argument on a negative offset.
BlockCliqueEmbedding word_to_blocks(const DirectionWord &w, GridOffset offset = {});
/// As above; also throws std::out_of_range if the result leaves `shape`.
BlockCliqueEmbedding word_to_blocks(const DirectionWord &w, GridOffset offset, const ChimeraShape &shape);

/// Inverse of word_to_blocks. Throws std::invalid_argument if `b` violates
/// the block clique invariants.
std::pair<DirectionWord, GridOffset> blocks_to_word(const BlockCliqueEmbedding &b);

/// Number of words of length n, 4^(n-1).
std::uint64_t word_count(int n);
/// The i-th word of length n in lexicographic order.
DirectionWord word_at(int n, std::uint64_t i);

struct EnumeratedEmbedding {
    DirectionWord word;
    GridOffset offset;
    BlockCliqueEmbedding blocks;
};

/// Single-pass stream over every block clique embedding with n blocks in a
/// shape: words in lexicographic order, each followed by its translates in
/// row-major offset order.
class BlockEmbeddingStream {
  public:
    BlockEmbeddingStream(const ChimeraShape &shape, int n);

    std::optional<EnumeratedEmbedding> next();
    /// Total number of items, 4^(n-1) (M-n+1) (N-n+1).
    std::uint64_t size() const { return words_ * std::uint64_t(nx_) * std::uint64_t(ny_); }

  private:
    int n_;
    int nx_, ny_;
    std::uint64_t words_;
    std::uint64_t word_ = 0;
    int dx_ = 0, dy_ = 0;
    std::optional<std::pair<DirectionWord, BlockCliqueEmbedding>> current_;
};

/// Throws std::invalid_argument unless 2 <= n <= min(M,N).
BlockEmbeddingStream enumerate_block_embeddings(const ChimeraShape &shape, int n);

}  // namespace ellclique
