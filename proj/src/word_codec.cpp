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

#include "ellclique/word_codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellclique {

const char *to_string(Direction d) {
    switch (d) {
    case Direction::E: return "E";
    case Direction::W: return "W";
    case Direction::NE: return "NE";
    case Direction::NW: return "NW";
    case Direction::SE: return "SE";
    case Direction::SW: return "SW";
    case Direction::N: return "N";
    case Direction::S: return "S";
    }
    return "?";
}

DirectionWord::DirectionWord(std::vector<Direction> symbols) : symbols_(std::move(symbols)) {
    const std::size_t n = symbols_.size();
    if (n < 2) throw std::invalid_argument("direction word needs at least 2 symbols");
    auto first_ok = [](Direction d) { return d == Direction::E || d == Direction::W; };
    auto last_ok = [](Direction d) { return d == Direction::N || d == Direction::S; };
    auto mid_ok = [](Direction d) {
        return d == Direction::NE || d == Direction::NW || d == Direction::SE || d == Direction::SW;
    };
    if (!first_ok(symbols_.front())) throw std::invalid_argument("direction word must start with E or W");
    if (!last_ok(symbols_.back())) throw std::invalid_argument("direction word must end with N or S");
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (!mid_ok(symbols_[i]))
            throw std::invalid_argument("inner direction word symbols must be NE, NW, SE or SW");
}

DirectionWord DirectionWord::parse(std::string_view text) {
    std::vector<Direction> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto dot = text.find('.', pos);
        auto tok = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        std::optional<Direction> d;
        for (auto c : {Direction::E, Direction::W, Direction::NE, Direction::NW, Direction::SE, Direction::SW,
                       Direction::N, Direction::S})
            if (tok == to_string(c)) d = c;
        if (!d) throw std::invalid_argument("unknown direction symbol '" + std::string(tok) + "'");
        out.push_back(*d);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return DirectionWord(std::move(out));
}

std::string DirectionWord::str() const {
    std::string s;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) s += '.';
        s += to_string(symbols_[i]);
    }
    return s;
}

BlockCliqueEmbedding word_to_blocks(const DirectionWord &w, GridOffset offset) {
    if (offset.dx < 0 || offset.dy < 0) throw std::invalid_argument("grid offset must be non-negative");
    const int n = w.n();
    int south = 0;
    for (int i = 1; i < n; ++i) south += int(!points_north(w[i]));

    BlockCliqueEmbedding b;
    const bool east1 = w[0] == Direction::E;
    const int y1 = 1 + south;
    b.blocks.emplace_back(Cell{east1 ? n : 1, y1}, n, 1, east1, false);

    // working rectangle [x, x'] x [y, y']
    int x = east1 ? 1 : 2, xr = east1 ? n - 1 : n;
    int y = y1, yr = y1;
    for (int i = 1; i < n; ++i) {
        const bool north = points_north(w[i]);
        const bool east = points_east(w[i]);
        Cell corner{east ? xr : x, north ? yr + 1 : y - 1};
        b.blocks.emplace_back(corner, xr - x + 1, yr - y + 2, east, north);
        if (east)
            --xr;
        else
            ++x;
        if (north)
            ++yr;
        else
            --y;
    }
    for (auto &blk : b.blocks) blk = blk.translated(offset.dx, offset.dy);
    return b;
}

BlockCliqueEmbedding word_to_blocks(const DirectionWord &w, GridOffset offset, const ChimeraShape &shape) {
    if (offset.dx + w.n() > shape.M || offset.dy + w.n() > shape.N)
        throw std::out_of_range("grid offset places the embedding outside the graph");
    return word_to_blocks(w, offset);
}

std::pair<DirectionWord, GridOffset> blocks_to_word(const BlockCliqueEmbedding &b) {
    auto problems = block_clique_violations(b);
    if (!problems.empty()) throw std::invalid_argument("not a block clique embedding: " + problems.front());
    const int n = b.n();
    const auto &blocks = b.blocks;
    // center = X_1 ∩ X_n
    const int cx = blocks.back().corner().x;
    const int cy = blocks.front().corner().y;

    std::vector<Direction> symbols;
    symbols.push_back(blocks.front().corner().x > cx ? Direction::E : Direction::W);
    for (int i = 1; i + 1 < n; ++i) {
        Cell c = blocks[std::size_t(i)].corner();
        bool north = c.y > cy, east = c.x > cx;
        symbols.push_back(north ? (east ? Direction::NE : Direction::NW) : (east ? Direction::SE : Direction::SW));
    }
    symbols.push_back(blocks.back().corner().y > cy ? Direction::N : Direction::S);

    int xmin = blocks.front().h_first(), ymin = blocks.front().v_first();
    for (auto &blk : blocks) {
        xmin = std::min(xmin, blk.h_first());
        ymin = std::min(ymin, blk.v_first());
    }
    DirectionWord w(std::move(symbols));
    GridOffset off{xmin - 1, ymin - 1};
    if (word_to_blocks(w, off) != b) throw std::invalid_argument("block clique embedding does not decode to a word");
    return {w, off};
}

std::uint64_t word_count(int n) {
    if (n < 2 || n > 32) throw std::invalid_argument("word length out of range");
    return std::uint64_t{1} << (2 * (n - 1));
}

DirectionWord word_at(int n, std::uint64_t i) {
    if (i >= word_count(n)) throw std::out_of_range("word index out of range");
    std::vector<Direction> symbols(static_cast<std::size_t>(n));
    symbols.back() = (i & 1) ? Direction::S : Direction::N;
    i >>= 1;
    static constexpr Direction mid[4] = {Direction::NE, Direction::NW, Direction::SE, Direction::SW};
    for (int k = n - 2; k >= 1; --k) {
        symbols[std::size_t(k)] = mid[i & 3];
        i >>= 2;
    }
    symbols.front() = (i & 1) ? Direction::W : Direction::E;
    return DirectionWord(std::move(symbols));
}

BlockEmbeddingStream::BlockEmbeddingStream(const ChimeraShape &shape, int n)
    : n_(n), nx_(shape.M - n + 1), ny_(shape.N - n + 1), words_(0) {
    if (n < 2 || n > std::min(shape.M, shape.N))
        throw std::invalid_argument("block count n must satisfy 2 <= n <= min(M,N)");
    words_ = word_count(n);
}

std::optional<EnumeratedEmbedding> BlockEmbeddingStream::next() {
    if (word_ >= words_) return std::nullopt;
    if (!current_) {
        auto w = word_at(n_, word_);
        auto blocks = word_to_blocks(w);
        current_.emplace(std::move(w), std::move(blocks));
    }
    EnumeratedEmbedding item{current_->first, {dx_, dy_}, current_->second};
    for (auto &blk : item.blocks.blocks) blk = blk.translated(dx_, dy_);
    if (++dx_ == nx_) {
        dx_ = 0;
        if (++dy_ == ny_) {
            dy_ = 0;
            ++word_;
            current_.reset();
        }
    }
    return item;
}

BlockEmbeddingStream enumerate_block_embeddings(const ChimeraShape &shape, int n) {
    return BlockEmbeddingStream(shape, n);
}

}  // namespace ellclique
