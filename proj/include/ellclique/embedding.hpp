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
#include <compare>
#include <string>
#include <vector>

#include "ellclique/topology.hpp"

namespace ellclique {

/// A unit cell. Ordered like ChimeraCoord: row first, then column.
struct Cell {
    int x = 1;
    int y = 1;

    friend constexpr auto operator<=>(const Cell &a, const Cell &b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
    friend constexpr bool operator==(const Cell &, const Cell &) = default;
};

enum class Orientation { Horizontal, Vertical };

/// Same-track qubits along a contiguous line of cells. `start` is the
/// west-most (horizontal) or south-most (vertical) cell.
struct Wire {
    Orientation orientation = Orientation::Horizontal;
    Cell start;
    int length = 1;
    int track = 1;

    ChimeraCoord qubit(int i) const {
        return orientation == Orientation::Horizontal ? ChimeraCoord{start.x + i, start.y, 0, track}
                                                      : ChimeraCoord{start.x, start.y + i, 1, track};
    }
    std::vector<ChimeraCoord> qubits() const;
    friend bool operator==(const Wire &, const Wire &) = default;
};

/// Intact iff every qubit is live and each of the length-1 couplers along it is live.
bool is_intact(const HardwareGraph &g, const Wire &w);

/// The cells of an ell together with its corner. The horizontal arm lies in
/// the corner's row, the vertical arm in the corner's column, and the corner
/// sits at one end of each. Width/height count cells including the corner.
/// For width 1 (height 1) the east (north) flag is normalized to false.
class EllBlock {
  public:
    EllBlock() = default;
    EllBlock(Cell corner, int width, int height, bool corner_east, bool corner_north);

    /// Parses an explicit cell set. Throws std::invalid_argument if the cells
    /// do not form an ell cornered at `corner`.
    static EllBlock from_cells(Cell corner, const std::vector<Cell> &cells);

    Cell corner() const { return corner_; }
    int width() const { return width_; }
    int height() const { return height_; }
    int size() const { return width_ + height_ - 1; }
    bool corner_east() const { return east_; }
    bool corner_north() const { return north_; }

    int h_first() const { return east_ ? corner_.x - width_ + 1 : corner_.x; }
    int h_last() const { return east_ ? corner_.x : corner_.x + width_ - 1; }
    int v_first() const { return north_ ? corner_.y - height_ + 1 : corner_.y; }
    int v_last() const { return north_ ? corner_.y : corner_.y + height_ - 1; }

    bool in_horizontal_arm(Cell c) const { return c.y == corner_.y && c.x >= h_first() && c.x <= h_last(); }
    bool in_vertical_arm(Cell c) const { return c.x == corner_.x && c.y >= v_first() && c.y <= v_last(); }
    bool contains(Cell c) const { return in_horizontal_arm(c) || in_vertical_arm(c); }
    bool fits(const ChimeraShape &s) const {
        return s.contains_cell(h_first(), v_first()) && s.contains_cell(h_last(), v_last());
    }

    /// Cells in canonical order.
    std::vector<Cell> cells() const;
    EllBlock translated(int dx, int dy) const {
        return EllBlock({corner_.x + dx, corner_.y + dy}, width_, height_, east_, north_);
    }

    friend auto operator<=>(const EllBlock &, const EllBlock &) = default;
    friend bool operator==(const EllBlock &, const EllBlock &) = default;

  private:
    Cell corner_;
    int width_ = 1;
    int height_ = 1;
    bool east_ = false;
    bool north_ = false;
};

std::string to_string(const EllBlock &b);

/// Edges between an ell of `a` and a disjoint ell of `b`: one for every
/// shared cell holding a horizontal arm of one and a vertical arm of the
/// other. Equal blocks give 2 (both in the corner); a proper pair gives 1.
int cross_edge_count(const EllBlock &a, const EllBlock &b);
/// Exactly one shared cell, lying in the horizontal arm of one block and the
/// vertical arm of the other and in no other arm. A corner lies in both arms.
bool properly_intersect(const EllBlock &a, const EllBlock &b);

/// A horizontal and a vertical wire joined in the corner cell.
struct Ell {
    Wire horizontal;
    Wire vertical;

    Cell corner() const;
    EllBlock block() const;
    int size() const { return horizontal.length + vertical.length; }
    /// Qubits in canonical order.
    std::vector<ChimeraCoord> qubits() const;
    /// The couplers making the ell a path: both wires plus the corner coupler.
    std::vector<Coupler> internal_couplers() const;
    friend bool operator==(const Ell &, const Ell &) = default;
};

/// The ell occupying `block` on the given horizontal and vertical tracks.
Ell make_ell(const EllBlock &block, int h_track, int v_track);
/// Recovers an ell from its qubits. Throws std::invalid_argument if the set
/// is not an ell (one horizontal wire and one vertical wire sharing a cell).
Ell ell_from_qubits(std::vector<ChimeraCoord> qubits);

struct EllBundle {
    EllBlock block;
    std::vector<Ell> ells;  // sorted by horizontal track

    int size() const { return int(ells.size()); }
};

/// n ell blocks; blocks[i] has height i+1 and width n-i.
struct BlockCliqueEmbedding {
    std::vector<EllBlock> blocks;

    int n() const { return int(blocks.size()); }
    friend auto operator<=>(const BlockCliqueEmbedding &, const BlockCliqueEmbedding &) = default;
    friend bool operator==(const BlockCliqueEmbedding &, const BlockCliqueEmbedding &) = default;
};

/// Empty when `b` satisfies every block clique invariant: n >= 2 blocks of n
/// cells, block i of height i+1, pairwise proper intersections, and corners
/// forming a permutation of the occupied rows and columns.
std::vector<std::string> block_clique_violations(const BlockCliqueEmbedding &b);

/// Bundles filling a block clique embedding; bundles[i] sits in block i.
/// Empty bundles are allowed.
struct NativeCliqueEmbedding {
    int n = 0;
    std::vector<EllBundle> bundles;

    int yield() const;
    BlockCliqueEmbedding skeleton() const;
    /// Chains ordered by bundle height, then horizontal track.
    std::vector<Ell> chains() const;
};

/// Intact wires spanning `length` cells from `start` in the given
/// orientation, one per intact track, sorted by track. Throws
/// std::out_of_range if the line leaves the grid.
std::vector<Wire> max_wires_in_line(const HardwareGraph &g, Orientation o, Cell start, int length);

/// A maximum bundle in `block`: intact wires of both arms matched through
/// live corner couplers, ascending track order on both sides. Throws
/// std::out_of_range if the block leaves the grid.
EllBundle max_bundle(const HardwareGraph &g, const EllBlock &block);

/// Fills each block of `b` with max_bundle.
NativeCliqueEmbedding materialize(const HardwareGraph &g, const BlockCliqueEmbedding &b);

enum class ViolationKind {
    ChainBroken,      // dead qubit or disconnected chain
    ChainOverlap,     // two chains share a qubit
    MissingCoupling,  // no live edge between two chains
    ChainLength,      // chain length differs from n+1
    BundleStructure,  // wrong edge count or placement between two chains
};
const char *to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int chain_a = -1;
    int chain_b = -1;
    std::string detail;
};

struct ValidationReport {
    int chains = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    int count(ViolationKind k) const;
};

/// Checks that `e` is a clique minor of g with the native structure. Every
/// violation is listed; chain indices refer to e.chains().
ValidationReport validate_embedding(const HardwareGraph &g, const NativeCliqueEmbedding &e);

/// The classic triangle clique in C_{M,M,L}: block i has its corner on the
/// diagonal at (i,i), a vertical arm down to row 1 and a horizontal arm east
/// to column M; tracks are paired k-to-k. Throws std::invalid_argument unless
/// M = N >= 2.
NativeCliqueEmbedding triangle_embedding(const ChimeraShape &shape);

/// The same embedding on rotate90(g) for a graph g of the given shape.
NativeCliqueEmbedding rotate90(const ChimeraShape &shape, const NativeCliqueEmbedding &e);

/// Chains of `e` (valid on the defect-free graph of g's shape) that remain
/// usable in g: intact chains, with chains lacking a live edge to another
/// survivor removed greedily until the survivors are pairwise coupled.
int surviving_chains(const HardwareGraph &g, const NativeCliqueEmbedding &e);

}  // namespace ellclique
