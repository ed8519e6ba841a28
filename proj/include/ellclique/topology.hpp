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
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ellclique {

/// Qubit address in a Chimera graph. All fields are 1-indexed except the
/// orientation bit: u = 0 for horizontal qubits, u = 1 for vertical qubits.
struct ChimeraCoord {
    int x = 1;  // cell column, 1..M
    int y = 1;  // cell row, 1..N
    int u = 0;  // orientation
    int k = 1;  // track, 1..L

    // canonical order is lexicographic on (y, x, u, k)
    friend constexpr auto operator<=>(const ChimeraCoord &a, const ChimeraCoord &b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        if (auto c = a.x <=> b.x; c != 0) return c;
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.k <=> b.k;
    }
    friend constexpr bool operator==(const ChimeraCoord &, const ChimeraCoord &) = default;
};

std::string to_string(const ChimeraCoord &q);

using Coupler = std::pair<ChimeraCoord, ChimeraCoord>;

struct ChimeraShape {
    int M = 1;  // width in cells
    int N = 1;  // height in cells
    int L = 1;  // tracks per orientation per cell

    bool valid() const { return M >= 1 && N >= 1 && L >= 1; }
    std::size_t num_qubits() const { return std::size_t(2) * M * N * L; }
    std::size_t num_ideal_couplers() const {
        return std::size_t(M) * N * L * L + std::size_t(M - 1) * N * L + std::size_t(M) * (N - 1) * L;
    }
    bool contains(const ChimeraCoord &q) const {
        return q.x >= 1 && q.x <= M && q.y >= 1 && q.y <= N && (q.u == 0 || q.u == 1) && q.k >= 1 && q.k <= L;
    }
    bool contains_cell(int x, int y) const { return x >= 1 && x <= M && y >= 1 && y <= N; }

    friend bool operator==(const ChimeraShape &, const ChimeraShape &) = default;
};

/// True iff a and b are adjacent in the defect-free Chimera graph of `shape`.
bool is_ideal_edge(const ChimeraShape &shape, const ChimeraCoord &a, const ChimeraCoord &b);

/// Ideal Chimera neighbours of q, in canonical order.
std::vector<ChimeraCoord> ideal_neighbors(const ChimeraShape &shape, const ChimeraCoord &q);

/// Intra-cell coupler: both endpoints in the same cell with opposite orientation.
inline bool is_intra_cell(const ChimeraCoord &a, const ChimeraCoord &b) {
    return a.x == b.x && a.y == b.y && a.u != b.u;
}

/// A Chimera graph with defects. Immutable: defects are applied by building a
/// new graph. Adjacency is arithmetic on coordinates; only the defect sets are
/// stored. The explicit coupler set holds failures between two live qubits;
/// couplers touching a dead qubit are dead implicitly.
class HardwareGraph {
  public:
    HardwareGraph() = default;
    explicit HardwareGraph(ChimeraShape shape);

    const ChimeraShape &shape() const { return shape_; }

    /// Linear index in canonical coordinate order. Requires a valid coordinate.
    std::size_t index(const ChimeraCoord &q) const {
        return ((std::size_t(q.y - 1) * shape_.M + std::size_t(q.x - 1)) * 2 + std::size_t(q.u)) * shape_.L +
               std::size_t(q.k - 1);
    }
    ChimeraCoord coord(std::size_t index) const;

    bool is_live(const ChimeraCoord &q) const { return shape_.contains(q) && !dead_[index(q)]; }
    bool is_live_edge(const ChimeraCoord &a, const ChimeraCoord &b) const;

    std::size_t num_live_qubits() const { return shape_.num_qubits() - num_dead_; }
    std::size_t num_live_couplers() const;

    /// Dead qubits in canonical order.
    std::vector<ChimeraCoord> dead_qubits() const;
    /// Explicitly failed couplers between live qubits, each pair ordered and
    /// the list sorted canonically.
    std::vector<Coupler> dead_couplers() const;
    /// Failed intra-cell couplers with both endpoints live.
    std::vector<Coupler> failed_intra_couplers() const;
    bool has_intra_failures() const { return num_intra_failures_ > 0; }
    /// True iff some intra-cell coupler in cell (x,y) failed between live qubits.
    bool cell_has_intra_failure(int x, int y) const;

    friend bool operator==(const HardwareGraph &a, const HardwareGraph &b) {
        return a.shape_ == b.shape_ && a.dead_ == b.dead_ && a.dead_couplers_ == b.dead_couplers_;
    }

  private:
    friend HardwareGraph apply_defects(const HardwareGraph &, std::span<const ChimeraCoord>,
                                       std::span<const Coupler>);

    void rebuild_caches();

    ChimeraShape shape_{};
    std::vector<std::uint8_t> dead_;
    std::size_t num_dead_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> dead_couplers_;
    std::vector<std::uint8_t> intra_failure_cells_;
    std::size_t num_intra_failures_ = 0;
};

/// Defect-free Chimera graph. Throws std::invalid_argument on a zero dimension.
HardwareGraph build_chimera(const ChimeraShape &shape);

/// Returns g with the listed qubits and couplers removed. Idempotent.
/// Throws std::out_of_range for coordinates outside the shape and
/// std::invalid_argument for pairs that are not ideal Chimera edges.
HardwareGraph apply_defects(const HardwareGraph &g, std::span<const ChimeraCoord> qubits,
                            std::span<const Coupler> couplers = {});

/// Quarter-turn image: shape (M,N,L) becomes (N,M,L), cell (x,y) goes to
/// (N+1-y, x) and the orientation bit flips.
ChimeraCoord rotate90(const ChimeraShape &shape, const ChimeraCoord &q);
HardwareGraph rotate90(const HardwareGraph &g);

/// Every ideal coupler of the shape, endpoints ordered, in canonical order.
std::vector<Coupler> ideal_couplers(const ChimeraShape &shape);

}  // namespace ellclique
