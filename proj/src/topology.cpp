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

#include "ellclique/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellclique {

std::string to_string(const ChimeraCoord &q) {
    return "(" + std::to_string(q.x) + "," + std::to_string(q.y) + "," + std::to_string(q.u) + "," +
           std::to_string(q.k) + ")";
}

bool is_ideal_edge(const ChimeraShape &shape, const ChimeraCoord &a, const ChimeraCoord &b) {
    if (!shape.contains(a) || !shape.contains(b)) return false;
    if (is_intra_cell(a, b)) return true;
    if (a.u != b.u || a.k != b.k) return false;
    if (a.u == 0) return a.y == b.y && (a.x - b.x == 1 || b.x - a.x == 1);
    return a.x == b.x && (a.y - b.y == 1 || b.y - a.y == 1);
}

std::vector<ChimeraCoord> ideal_neighbors(const ChimeraShape &s, const ChimeraCoord &q) {
    std::vector<ChimeraCoord> out;
    out.reserve(std::size_t(s.L) + 2);
    if (q.u == 0) {
        if (q.x > 1) out.push_back({q.x - 1, q.y, 0, q.k});
        if (q.x < s.M) out.push_back({q.x + 1, q.y, 0, q.k});
    } else {
        if (q.y > 1) out.push_back({q.x, q.y - 1, 1, q.k});
        if (q.y < s.N) out.push_back({q.x, q.y + 1, 1, q.k});
    }
    for (int k = 1; k <= s.L; ++k) out.push_back({q.x, q.y, 1 - q.u, k});
    std::sort(out.begin(), out.end());
    return out;
}

HardwareGraph::HardwareGraph(ChimeraShape shape) : shape_(shape) {
    if (!shape.valid()) throw std::invalid_argument("chimera shape dimensions must be positive");
    dead_.assign(shape.num_qubits(), 0);
    intra_failure_cells_.assign(std::size_t(shape.M) * shape.N, 0);
}

ChimeraCoord HardwareGraph::coord(std::size_t index) const {
    ChimeraCoord q;
    q.k = int(index % shape_.L) + 1;
    index /= shape_.L;
    q.u = int(index % 2);
    index /= 2;
    q.x = int(index % shape_.M) + 1;
    q.y = int(index / shape_.M) + 1;
    return q;
}

bool HardwareGraph::is_live_edge(const ChimeraCoord &a, const ChimeraCoord &b) const {
    if (!is_ideal_edge(shape_, a, b)) return false;
    auto ia = index(a), ib = index(b);
    if (dead_[ia] || dead_[ib]) return false;
    if (dead_couplers_.empty()) return true;
    return !dead_couplers_.contains(std::minmax(ia, ib));
}

std::size_t HardwareGraph::num_live_couplers() const {
    std::size_t count = 0;
    for (auto &[a, b] : ideal_couplers(shape_))
        if (is_live_edge(a, b)) ++count;
    return count;
}

std::vector<ChimeraCoord> HardwareGraph::dead_qubits() const {
    std::vector<ChimeraCoord> out;
    out.reserve(num_dead_);
    for (std::size_t i = 0; i < dead_.size(); ++i)
        if (dead_[i]) out.push_back(coord(i));
    return out;
}

std::vector<Coupler> HardwareGraph::dead_couplers() const {
    std::vector<Coupler> out;
    out.reserve(dead_couplers_.size());
    for (auto &[a, b] : dead_couplers_) out.emplace_back(coord(a), coord(b));
    return out;
}

std::vector<Coupler> HardwareGraph::failed_intra_couplers() const {
    std::vector<Coupler> out;
    for (auto &[a, b] : dead_couplers_) {
        auto qa = coord(a), qb = coord(b);
        if (is_intra_cell(qa, qb)) out.emplace_back(qa, qb);
    }
    return out;
}

bool HardwareGraph::cell_has_intra_failure(int x, int y) const {
    if (!shape_.contains_cell(x, y)) return false;
    return intra_failure_cells_[std::size_t(y - 1) * shape_.M + std::size_t(x - 1)] != 0;
}

void HardwareGraph::rebuild_caches() {
    num_dead_ = std::size_t(std::count(dead_.begin(), dead_.end(), std::uint8_t{1}));
    std::fill(intra_failure_cells_.begin(), intra_failure_cells_.end(), std::uint8_t{0});
    num_intra_failures_ = 0;
    for (auto &[a, b] : dead_couplers_) {
        auto qa = coord(a), qb = coord(b);
        if (is_intra_cell(qa, qb)) {
            intra_failure_cells_[std::size_t(qa.y - 1) * shape_.M + std::size_t(qa.x - 1)] = 1;
            ++num_intra_failures_;
        }
    }
}

HardwareGraph build_chimera(const ChimeraShape &shape) { return HardwareGraph(shape); }

HardwareGraph apply_defects(const HardwareGraph &g, std::span<const ChimeraCoord> qubits,
                            std::span<const Coupler> couplers) {
    const auto &shape = g.shape();
    for (auto &q : qubits)
        if (!shape.contains(q)) throw std::out_of_range("dead qubit " + to_string(q) + " outside the graph");
    for (auto &[a, b] : couplers) {
        if (!shape.contains(a) || !shape.contains(b))
            throw std::out_of_range("dead coupler endpoint outside the graph: " + to_string(a) + "-" + to_string(b));
        if (!is_ideal_edge(shape, a, b))
            throw std::invalid_argument("not a chimera coupler: " + to_string(a) + "-" + to_string(b));
    }

    HardwareGraph out = g;
    for (auto &q : qubits) out.dead_[out.index(q)] = 1;
    for (auto &[a, b] : couplers) out.dead_couplers_.insert(std::minmax(out.index(a), out.index(b)));
    // failures touching a dead qubit are implied, not stored
    std::erase_if(out.dead_couplers_, [&](const auto &p) { return out.dead_[p.first] || out.dead_[p.second]; });
    out.rebuild_caches();
    return out;
}

ChimeraCoord rotate90(const ChimeraShape &shape, const ChimeraCoord &q) {
    return ChimeraCoord{shape.N + 1 - q.y, q.x, 1 - q.u, q.k};
}

HardwareGraph rotate90(const HardwareGraph &g) {
    const auto &s = g.shape();
    HardwareGraph base(ChimeraShape{s.N, s.M, s.L});
    std::vector<ChimeraCoord> qubits;
    for (auto &q : g.dead_qubits()) qubits.push_back(rotate90(s, q));
    std::vector<Coupler> couplers;
    for (auto &[a, b] : g.dead_couplers()) couplers.emplace_back(rotate90(s, a), rotate90(s, b));
    return apply_defects(base, qubits, couplers);
}

std::vector<Coupler> ideal_couplers(const ChimeraShape &s) {
    std::vector<Coupler> out;
    out.reserve(s.num_ideal_couplers());
    for (int y = 1; y <= s.N; ++y)
        for (int x = 1; x <= s.M; ++x)
            for (int k = 1; k <= s.L; ++k) {
                for (int k2 = 1; k2 <= s.L; ++k2) out.push_back({{x, y, 0, k}, {x, y, 1, k2}});
                if (x < s.M) out.push_back({{x, y, 0, k}, {x + 1, y, 0, k}});
                if (y < s.N) out.push_back({{x, y, 1, k}, {x, y + 1, 1, k}});
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ellclique
