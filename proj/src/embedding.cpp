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

#include "ellclique/embedding.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ellclique {

std::vector<ChimeraCoord> Wire::qubits() const {
    std::vector<ChimeraCoord> out;
    out.reserve(std::size_t(length));
    for (int i = 0; i < length; ++i) out.push_back(qubit(i));
    return out;
}

bool is_intact(const HardwareGraph &g, const Wire &w) {
    for (int i = 0; i < w.length; ++i) {
        if (!g.is_live(w.qubit(i))) return false;
        if (i > 0 && !g.is_live_edge(w.qubit(i - 1), w.qubit(i))) return false;
    }
    return true;
}

EllBlock::EllBlock(Cell corner, int width, int height, bool corner_east, bool corner_north)
    : corner_(corner), width_(width), height_(height), east_(corner_east && width > 1),
      north_(corner_north && height > 1) {
    if (width < 1 || height < 1) throw std::invalid_argument("ell block arms must have at least one cell");
}

EllBlock EllBlock::from_cells(Cell corner, const std::vector<Cell> &cells) {
    std::set<Cell> all(cells.begin(), cells.end());
    if (!all.contains(corner)) throw std::invalid_argument("ell block cells do not contain the corner");
    int xlo = corner.x, xhi = corner.x, ylo = corner.y, yhi = corner.y;
    for (auto &c : all) {
        if (c.y == corner.y) {
            xlo = std::min(xlo, c.x);
            xhi = std::max(xhi, c.x);
        } else if (c.x == corner.x) {
            ylo = std::min(ylo, c.y);
            yhi = std::max(yhi, c.y);
        } else {
            throw std::invalid_argument("ell block cell off the corner's row and column");
        }
    }
    if (xlo != corner.x && xhi != corner.x) throw std::invalid_argument("ell block corner inside horizontal arm");
    if (ylo != corner.y && yhi != corner.y) throw std::invalid_argument("ell block corner inside vertical arm");
    EllBlock b(corner, xhi - xlo + 1, yhi - ylo + 1, xhi == corner.x, yhi == corner.y);
    if (std::size_t(b.size()) != all.size()) throw std::invalid_argument("ell block arms are not contiguous");
    return b;
}

std::vector<Cell> EllBlock::cells() const {
    std::vector<Cell> out;
    out.reserve(std::size_t(size()));
    for (int x = h_first(); x <= h_last(); ++x) out.push_back({x, corner_.y});
    for (int y = v_first(); y <= v_last(); ++y)
        if (y != corner_.y) out.push_back({corner_.x, y});
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const EllBlock &b) {
    std::string s = "corner(" + std::to_string(b.corner().x) + "," + std::to_string(b.corner().y) + ") ";
    s += "w" + std::to_string(b.width()) + " h" + std::to_string(b.height());
    s += b.corner_north() ? " N" : " S";
    s += b.corner_east() ? "E" : "W";
    return s;
}

int cross_edge_count(const EllBlock &a, const EllBlock &b) {
    int edges = 0;
    for (auto &c : a.cells()) {
        if (!b.contains(c)) continue;
        edges += int(a.in_horizontal_arm(c) && b.in_vertical_arm(c));
        edges += int(a.in_vertical_arm(c) && b.in_horizontal_arm(c));
    }
    return edges;
}

bool properly_intersect(const EllBlock &a, const EllBlock &b) {
    std::optional<Cell> shared;
    for (auto &c : a.cells()) {
        if (!b.contains(c)) continue;
        if (shared) return false;
        shared = c;
    }
    if (!shared) return false;
    // horizontal in exactly one block and vertical in exactly the other, so
    // no two wires of the same orientation meet
    const bool ha = a.in_horizontal_arm(*shared), va = a.in_vertical_arm(*shared);
    const bool hb = b.in_horizontal_arm(*shared), vb = b.in_vertical_arm(*shared);
    return (ha && !va && vb && !hb) || (va && !ha && hb && !vb);
}

Cell Ell::corner() const { return {vertical.start.x, horizontal.start.y}; }

EllBlock Ell::block() const {
    Cell c = corner();
    bool east = horizontal.length > 1 && c.x == horizontal.start.x + horizontal.length - 1;
    bool north = vertical.length > 1 && c.y == vertical.start.y + vertical.length - 1;
    return EllBlock(c, horizontal.length, vertical.length, east, north);
}

std::vector<ChimeraCoord> Ell::qubits() const {
    auto out = horizontal.qubits();
    auto v = vertical.qubits();
    out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coupler> Ell::internal_couplers() const {
    std::vector<Coupler> out;
    for (int i = 1; i < horizontal.length; ++i) out.emplace_back(horizontal.qubit(i - 1), horizontal.qubit(i));
    for (int i = 1; i < vertical.length; ++i) out.emplace_back(vertical.qubit(i - 1), vertical.qubit(i));
    Cell c = corner();
    out.emplace_back(ChimeraCoord{c.x, c.y, 0, horizontal.track}, ChimeraCoord{c.x, c.y, 1, vertical.track});
    return out;
}

Ell make_ell(const EllBlock &block, int h_track, int v_track) {
    Ell e;
    e.horizontal = Wire{Orientation::Horizontal, {block.h_first(), block.corner().y}, block.width(), h_track};
    e.vertical = Wire{Orientation::Vertical, {block.corner().x, block.v_first()}, block.height(), v_track};
    return e;
}

Ell ell_from_qubits(std::vector<ChimeraCoord> qubits) {
    std::sort(qubits.begin(), qubits.end(), [](const ChimeraCoord &a, const ChimeraCoord &b) {
        return std::tie(a.u, a.k, a.y, a.x) < std::tie(b.u, b.k, b.y, b.x);
    });
    auto split = std::find_if(qubits.begin(), qubits.end(), [](const ChimeraCoord &q) { return q.u == 1; });
    if (split == qubits.begin() || split == qubits.end())
        throw std::invalid_argument("chain needs both horizontal and vertical qubits to be an ell");

    std::vector<ChimeraCoord> h(qubits.begin(), split), v(split, qubits.end());
    std::sort(h.begin(), h.end(), [](auto &a, auto &b) { return a.x < b.x; });
    std::sort(v.begin(), v.end(), [](auto &a, auto &b) { return a.y < b.y; });
    for (std::size_t i = 1; i < h.size(); ++i)
        if (h[i].y != h[0].y || h[i].k != h[0].k || h[i].x != h[0].x + int(i))
            throw std::invalid_argument("horizontal qubits of chain do not form a wire");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].x != v[0].x || v[i].k != v[0].k || v[i].y != v[0].y + int(i))
            throw std::invalid_argument("vertical qubits of chain do not form a wire");

    Ell e;
    e.horizontal = Wire{Orientation::Horizontal, {h.front().x, h.front().y}, int(h.size()), h.front().k};
    e.vertical = Wire{Orientation::Vertical, {v.front().x, v.front().y}, int(v.size()), v.front().k};
    Cell c = e.corner();
    bool h_end = c.x == h.front().x || c.x == h.back().x;
    bool v_end = c.y == v.front().y || c.y == v.back().y;
    bool h_in = c.x >= h.front().x && c.x <= h.back().x;
    bool v_in = c.y >= v.front().y && c.y <= v.back().y;
    if (!(h_end && v_end && h_in && v_in)) throw std::invalid_argument("chain wires do not meet end to end");
    return e;
}

std::vector<std::string> block_clique_violations(const BlockCliqueEmbedding &b) {
    std::vector<std::string> out;
    const int n = b.n();
    if (n < 2) {
        out.push_back("block clique embedding needs at least 2 blocks");
        return out;
    }
    std::set<int> corner_cols, corner_rows, cols, rows;
    for (int i = 0; i < n; ++i) {
        const auto &blk = b.blocks[std::size_t(i)];
        if (blk.size() != n) out.push_back("block " + std::to_string(i) + " has " + std::to_string(blk.size()) + " cells");
        if (blk.height() != i + 1)
            out.push_back("block " + std::to_string(i) + " has height " + std::to_string(blk.height()));
        corner_cols.insert(blk.corner().x);
        corner_rows.insert(blk.corner().y);
        for (auto &c : blk.cells()) {
            cols.insert(c.x);
            rows.insert(c.y);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!properly_intersect(b.blocks[std::size_t(i)], b.blocks[std::size_t(j)]))
                out.push_back("blocks " + std::to_string(i) + " and " + std::to_string(j) + " do not intersect properly");
    if (int(corner_cols.size()) != n || int(corner_rows.size()) != n || corner_cols != cols || corner_rows != rows)
        out.push_back("corners do not form a permutation of the occupied rows and columns");
    return out;
}

int NativeCliqueEmbedding::yield() const {
    int total = 0;
    for (auto &b : bundles) total += b.size();
    return total;
}

BlockCliqueEmbedding NativeCliqueEmbedding::skeleton() const {
    BlockCliqueEmbedding b;
    for (auto &bundle : bundles) b.blocks.push_back(bundle.block);
    return b;
}

std::vector<Ell> NativeCliqueEmbedding::chains() const {
    std::vector<Ell> out;
    for (auto &b : bundles) out.insert(out.end(), b.ells.begin(), b.ells.end());
    return out;
}

std::vector<Wire> max_wires_in_line(const HardwareGraph &g, Orientation o, Cell start, int length) {
    const auto &s = g.shape();
    Cell last = o == Orientation::Horizontal ? Cell{start.x + length - 1, start.y} : Cell{start.x, start.y + length - 1};
    if (length < 1 || !s.contains_cell(start.x, start.y) || !s.contains_cell(last.x, last.y))
        throw std::out_of_range("line of cells leaves the grid");
    std::vector<Wire> out;
    for (int k = 1; k <= s.L; ++k) {
        Wire w{o, start, length, k};
        if (is_intact(g, w)) out.push_back(w);
    }
    return out;
}

EllBundle max_bundle(const HardwareGraph &g, const EllBlock &block) {
    if (!block.fits(g.shape())) throw std::out_of_range("ell block " + to_string(block) + " leaves the grid");
    const Cell c = block.corner();
    auto hs = max_wires_in_line(g, Orientation::Horizontal, {block.h_first(), c.y}, block.width());
    auto vs = max_wires_in_line(g, Orientation::Vertical, {c.x, block.v_first()}, block.height());

    auto coupled = [&](std::size_t h, std::size_t v) {
        return g.is_live_edge({c.x, c.y, 0, hs[h].track}, {c.x, c.y, 1, vs[v].track});
    };

    // greedy ascending pass, then augmenting paths for what it missed; on a
    // complete corner the greedy pass is already maximum
    std::vector<int> match_h(hs.size(), -1), match_v(vs.size(), -1);
    for (std::size_t h = 0; h < hs.size(); ++h)
        for (std::size_t v = 0; v < vs.size(); ++v)
            if (match_v[v] < 0 && coupled(h, v)) {
                match_h[h] = int(v);
                match_v[v] = int(h);
                break;
            }
    std::vector<char> seen;
    auto augment = [&](auto &&self, std::size_t h) -> bool {
        for (std::size_t v = 0; v < vs.size(); ++v) {
            if (seen[v] || !coupled(h, v)) continue;
            seen[v] = 1;
            if (match_v[v] < 0 || self(self, std::size_t(match_v[v]))) {
                match_h[h] = int(v);
                match_v[v] = int(h);
                return true;
            }
        }
        return false;
    };
    for (std::size_t h = 0; h < hs.size(); ++h) {
        if (match_h[h] >= 0) continue;
        seen.assign(vs.size(), 0);
        augment(augment, h);
    }

    EllBundle bundle{block, {}};
    for (std::size_t h = 0; h < hs.size(); ++h)
        if (match_h[h] >= 0) bundle.ells.push_back(make_ell(block, hs[h].track, vs[std::size_t(match_h[h])].track));
    return bundle;
}

NativeCliqueEmbedding materialize(const HardwareGraph &g, const BlockCliqueEmbedding &b) {
    NativeCliqueEmbedding e;
    e.n = b.n();
    for (auto &blk : b.blocks) e.bundles.push_back(max_bundle(g, blk));
    return e;
}

const char *to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::ChainBroken: return "chain-broken";
    case ViolationKind::ChainOverlap: return "chain-overlap";
    case ViolationKind::MissingCoupling: return "missing-coupling";
    case ViolationKind::ChainLength: return "chain-length";
    case ViolationKind::BundleStructure: return "bundle-structure";
    }
    return "unknown";
}

int ValidationReport::count(ViolationKind k) const {
    return int(std::count_if(violations.begin(), violations.end(), [k](const Violation &v) { return v.kind == k; }));
}

namespace {

struct PairEdges {
    int ideal = 0;
    int live = 0;
    std::vector<Cell> cells;  // cell of each ideal edge; inter-cell edges record no cell
    int inter_cell = 0;
};

// Ideal and live edge counts between every pair of chains (i < j), computed by
// walking neighbours of each owned qubit. Shared qubits belong to the first
// chain that claims them; `overlaps` collects those collisions.
std::vector<PairEdges> chain_pair_edges(const HardwareGraph &g, const std::vector<std::vector<ChimeraCoord>> &chains,
                                        std::vector<std::pair<int, int>> *overlaps) {
    const auto &s = g.shape();
    const std::size_t C = chains.size();
    std::vector<int> owner(s.num_qubits(), -1);
    for (std::size_t i = 0; i < C; ++i)
        for (auto &q : chains[i]) {
            if (!s.contains(q)) continue;
            int &o = owner[g.index(q)];
            if (o >= 0 && o != int(i)) {
                if (overlaps) overlaps->emplace_back(o, int(i));
            } else {
                o = int(i);
            }
        }
    std::vector<PairEdges> pairs(C * C);
    for (std::size_t i = 0; i < C; ++i)
        for (auto &q : chains[i]) {
            if (!s.contains(q) || owner[g.index(q)] != int(i)) continue;
            for (auto &p : ideal_neighbors(s, q)) {
                int j = owner[g.index(p)];
                if (j <= int(i)) continue;
                auto &pe = pairs[i * C + std::size_t(j)];
                ++pe.ideal;
                pe.live += int(g.is_live_edge(q, p));
                if (is_intra_cell(q, p))
                    pe.cells.push_back({q.x, q.y});
                else
                    ++pe.inter_cell;
            }
        }
    return pairs;
}

bool chain_connected(const HardwareGraph &g, const std::vector<ChimeraCoord> &chain) {
    if (chain.empty()) return true;
    std::vector<char> reached(chain.size(), 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < chain.size(); ++b)
            if (!reached[b] && g.is_live_edge(chain[a], chain[b])) {
                reached[b] = 1;
                stack.push_back(b);
            }
    }
    return std::all_of(reached.begin(), reached.end(), [](char r) { return r != 0; });
}

}  // namespace

ValidationReport validate_embedding(const HardwareGraph &g, const NativeCliqueEmbedding &e) {
    ValidationReport report;
    std::vector<Ell> ells;
    std::vector<int> bundle_of;
    for (std::size_t b = 0; b < e.bundles.size(); ++b)
        for (auto &ell : e.bundles[b].ells) {
            ells.push_back(ell);
            bundle_of.push_back(int(b));
        }
    const int C = int(ells.size());
    report.chains = C;
    std::vector<std::vector<ChimeraCoord>> chains;
    for (auto &ell : ells) chains.push_back(ell.qubits());

    auto add = [&](ViolationKind k, int a, int b, std::string detail) {
        report.violations.push_back({k, a, b, std::move(detail)});
    };

    for (int i = 0; i < C; ++i) {
        const auto &chain = chains[std::size_t(i)];
        std::vector<std::string> dead;
        for (auto &q : chain)
            if (!g.is_live(q)) dead.push_back(to_string(q));
        if (!dead.empty()) {
            std::string d = "dead or missing qubits:";
            for (auto &s : dead) d += " " + s;
            add(ViolationKind::ChainBroken, i, -1, d);
        } else if (!chain_connected(g, chain)) {
            add(ViolationKind::ChainBroken, i, -1, "chain is not connected by live couplers");
        }
        if (int(chain.size()) != e.n + 1)
            add(ViolationKind::ChainLength, i, -1,
                "chain has " + std::to_string(chain.size()) + " qubits, expected " + std::to_string(e.n + 1));
        const auto &block = e.bundles[std::size_t(bundle_of[std::size_t(i)])].block;
        if (ells[std::size_t(i)].block() != block)
            add(ViolationKind::BundleStructure, i, -1, "chain does not occupy its bundle's block " + to_string(block));
    }

    std::vector<std::pair<int, int>> overlaps;
    auto pairs = chain_pair_edges(g, chains, &overlaps);
    std::sort(overlaps.begin(), overlaps.end());
    overlaps.erase(std::unique(overlaps.begin(), overlaps.end()), overlaps.end());
    for (auto &[a, b] : overlaps) add(ViolationKind::ChainOverlap, a, b, "chains share a qubit");

    for (int i = 0; i < C; ++i)
        for (int j = i + 1; j < C; ++j) {
            const auto &pe = pairs[std::size_t(i) * std::size_t(C) + std::size_t(j)];
            if (pe.live == 0) add(ViolationKind::MissingCoupling, i, j, "no live coupler between chains");

            const auto &bi = e.bundles[std::size_t(bundle_of[std::size_t(i)])].block;
            const auto &bj = e.bundles[std::size_t(bundle_of[std::size_t(j)])].block;
            bool same = bundle_of[std::size_t(i)] == bundle_of[std::size_t(j)];
            int expected = same ? 2 : 1;
            bool placed = pe.inter_cell == 0;
            for (auto &c : pe.cells) {
                if (same)
                    placed = placed && c == bi.corner();
                else
                    placed = placed && bi.contains(c) && bj.contains(c);
            }
            if (pe.ideal != expected || !placed)
                add(ViolationKind::BundleStructure, i, j,
                    std::string(same ? "same-bundle" : "cross-bundle") + " chains joined by " +
                        std::to_string(pe.ideal) + " couplers" + (placed ? "" : " outside the shared cell") +
                        ", expected " + std::to_string(expected));
        }
    return report;
}

NativeCliqueEmbedding triangle_embedding(const ChimeraShape &shape) {
    if (shape.M != shape.N) throw std::invalid_argument("triangle embedding needs a square grid");
    if (shape.M < 2 || shape.L < 1) throw std::invalid_argument("triangle embedding needs M >= 2");
    const int M = shape.M;
    NativeCliqueEmbedding e;
    e.n = M;
    for (int i = 1; i <= M; ++i) {
        EllBlock block({i, i}, M - i + 1, i, false, true);
        EllBundle bundle{block, {}};
        for (int k = 1; k <= shape.L; ++k) bundle.ells.push_back(make_ell(block, k, k));
        e.bundles.push_back(std::move(bundle));
    }
    return e;
}

NativeCliqueEmbedding rotate90(const ChimeraShape &shape, const NativeCliqueEmbedding &e) {
    auto turn = [&](Cell c) { return Cell{shape.N + 1 - c.y, c.x}; };
    NativeCliqueEmbedding out;
    out.n = e.n;
    for (auto &b : e.bundles) {
        std::vector<Cell> cells;
        for (auto c : b.block.cells()) cells.push_back(turn(c));
        EllBundle rb{EllBlock::from_cells(turn(b.block.corner()), cells), {}};
        for (auto &ell : b.ells) {
            std::vector<ChimeraCoord> qs;
            for (auto &q : ell.qubits()) qs.push_back(rotate90(shape, q));
            rb.ells.push_back(ell_from_qubits(std::move(qs)));
        }
        std::sort(rb.ells.begin(), rb.ells.end(),
                  [](const Ell &a, const Ell &b) { return a.horizontal.track < b.horizontal.track; });
        out.bundles.push_back(std::move(rb));
    }
    // heights and widths swap; keep bundles ordered by height
    std::stable_sort(out.bundles.begin(), out.bundles.end(),
                     [](const EllBundle &a, const EllBundle &b) { return a.block.height() < b.block.height(); });
    return out;
}

int surviving_chains(const HardwareGraph &g, const NativeCliqueEmbedding &e) {
    auto ells = e.chains();
    const std::size_t C = ells.size();
    std::vector<std::vector<ChimeraCoord>> chains;
    std::vector<char> alive(C, 1);
    for (std::size_t i = 0; i < C; ++i) {
        chains.push_back(ells[i].qubits());
        for (auto &q : chains.back())
            if (!g.is_live(q)) alive[i] = 0;
        for (auto &[a, b] : ells[i].internal_couplers())
            if (!g.is_live_edge(a, b)) alive[i] = 0;
    }
    auto pairs = chain_pair_edges(g, chains, nullptr);
    auto linked = [&](std::size_t i, std::size_t j) {
        return i < j ? pairs[i * C + j].live > 0 : pairs[j * C + i].live > 0;
    };
    for (;;) {
        std::size_t worst = C;
        int worst_missing = 0;
        for (std::size_t i = 0; i < C; ++i) {
            if (!alive[i]) continue;
            int missing = 0;
            for (std::size_t j = 0; j < C; ++j)
                if (j != i && alive[j] && !linked(i, j)) ++missing;
            if (missing > 0 && missing >= worst_missing) {
                worst = i;
                worst_missing = missing;
            }
        }
        if (worst == C) break;
        alive[worst] = 0;
    }
    return int(std::count(alive.begin(), alive.end(), char{1}));
}

}  // namespace ellclique
