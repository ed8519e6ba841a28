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

#include "ellclique/clique_dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellclique {

WorkingRect r_from(const EllBlock &b) {
    if (b.height() >= b.size()) throw std::domain_error("r_from needs a block wider than one cell");
    WorkingRect r;
    r.x0 = b.corner_east() ? b.h_first() : b.h_first() + 1;
    r.x1 = b.corner_east() ? b.h_last() - 1 : b.h_last();
    r.y0 = b.v_first();
    r.y1 = b.v_last();
    return r;
}

WorkingRect r_to(const EllBlock &b) {
    if (b.height() < 2) throw std::domain_error("r_to needs a block of height at least 2");
    WorkingRect r;
    r.x0 = b.h_first();
    r.x1 = b.h_last();
    r.y0 = b.corner_north() ? b.v_first() : b.v_first() + 1;
    r.y1 = b.corner_north() ? b.v_last() - 1 : b.v_last();
    return r;
}

void for_each_block(const ChimeraShape &s, int n, int height, const std::function<void(const EllBlock &)> &f) {
    const int width = n - height + 1;
    if (height < 1 || width < 1) return;
    for (int cy = 1; cy <= s.N; ++cy)
        for (int cx = 1; cx <= s.M; ++cx)
            for (int east = 0; east < (width > 1 ? 2 : 1); ++east)
                for (int north = 0; north < (height > 1 ? 2 : 1); ++north) {
                    EllBlock b({cx, cy}, width, height, east != 0, north != 0);
                    if (b.fits(s)) f(b);
                }
}

namespace {

void check_n(const ChimeraShape &s, int n) {
    if (n < 2 || n > std::min(s.M, s.N))
        throw std::invalid_argument("chain parameter n must satisfy 2 <= n <= min(M,N), got " + std::to_string(n));
}

void check_induced(const HardwareGraph &g) {
    if (g.has_intra_failures())
        throw std::invalid_argument(
            "graph has failed intra-cell couplers between live qubits; use embed_with_intra_failures");
}

// Partial-embedding table, one stage per rectangle height 1..n-1, indexed by
// the rectangle's lower-left cell.
class RectTable {
  public:
    RectTable(const ChimeraShape &s, int n) : M_(std::size_t(s.M)), stages_(std::size_t(n)) {
        for (auto &st : stages_) st.assign(std::size_t(s.M) * std::size_t(s.N), DpEntry{});
    }
    DpEntry &at(const WorkingRect &r) {
        return stages_[std::size_t(r.height())][std::size_t(r.y0 - 1) * M_ + std::size_t(r.x0 - 1)];
    }

  private:
    std::size_t M_;
    std::vector<std::vector<DpEntry>> stages_;
};

struct DpSolution {
    int best_size = 0;
    std::vector<EllBlock> blocks;  // by height
};

DpSolution solve(const ChimeraShape &s, int n, const BundleSizeTable &size) {
    RectTable table(s, n);
    for (int i = 1; i < n; ++i) {
        for_each_block(s, n, i, [&](const EllBlock &b) {
            int candidate = size(b) + (i > 1 ? table.at(r_to(b)).best_size : 0);
            DpEntry &e = table.at(r_from(b));
            // an unset entry takes any block so every rectangle keeps a
            // complete back-reference chain, even at size 0
            if (!e.back_ref || e.best_size < candidate) {
                e.best_size = candidate;
                e.back_ref = b;
            }
        });
    }

    std::optional<EllBlock> last;
    int best = 0;
    for_each_block(s, n, n, [&](const EllBlock &b) {
        int candidate = size(b) + table.at(r_to(b)).best_size;
        if (!last || best < candidate) {
            best = candidate;
            last = b;
        }
    });
    if (!last) throw std::logic_error("no final block fits the graph");

    DpSolution sol;
    sol.best_size = best;
    sol.blocks.resize(std::size_t(n));
    sol.blocks[std::size_t(n - 1)] = *last;
    for (int i = n - 1; i >= 1; --i) {
        const DpEntry &e = table.at(r_to(sol.blocks[std::size_t(i)]));
        if (!e.back_ref) throw std::logic_error("working rectangle without a back-reference");
        sol.blocks[std::size_t(i - 1)] = *e.back_ref;
    }
    return sol;
}

}  // namespace

BundleSizeTable::BundleSizeTable(const HardwareGraph &g, int n)
    : g_(g), n_(n), M_(std::size_t(g.shape().M)), N_(std::size_t(g.shape().N)) {
    const auto &s = g.shape();
    check_n(s, n);
    h_.assign(N_ * M_ * M_, 0);
    v_.assign(M_ * N_ * N_, 0);
    for (int y = 1; y <= s.N; ++y)
        for (int k = 1; k <= s.L; ++k)
            for (int a = 1; a <= s.M; ++a) {
                if (!g.is_live({a, y, 0, k})) continue;
                for (int b = a;; ++b) {
                    ++h_[(std::size_t(y - 1) * M_ + std::size_t(a - 1)) * M_ + std::size_t(b - 1)];
                    if (b == s.M || !g.is_live_edge({b, y, 0, k}, {b + 1, y, 0, k})) break;
                }
            }
    for (int x = 1; x <= s.M; ++x)
        for (int k = 1; k <= s.L; ++k)
            for (int a = 1; a <= s.N; ++a) {
                if (!g.is_live({x, a, 1, k})) continue;
                for (int b = a;; ++b) {
                    ++v_[(std::size_t(x - 1) * N_ + std::size_t(a - 1)) * N_ + std::size_t(b - 1)];
                    if (b == s.N || !g.is_live_edge({x, b, 1, k}, {x, b + 1, 1, k})) break;
                }
            }
}

int BundleSizeTable::operator()(const EllBlock &b) const {
    const Cell c = b.corner();
    if (g_.cell_has_intra_failure(c.x, c.y)) return max_bundle(g_, b).size();
    return std::min(horizontal(c.y, b.h_first(), b.h_last()), vertical(c.x, b.v_first(), b.v_last()));
}

BundleSizeTable build_bundle_size_table(const HardwareGraph &g, int n) { return BundleSizeTable(g, n); }

int native_clique_yield(const HardwareGraph &g, int n) {
    check_n(g.shape(), n);
    check_induced(g);
    BundleSizeTable size(g, n);
    return solve(g.shape(), n, size).best_size;
}

NativeCliqueEmbedding native_clique_embed(const HardwareGraph &g, int n) {
    check_n(g.shape(), n);
    check_induced(g);
    BundleSizeTable size(g, n);
    auto sol = solve(g.shape(), n, size);
    auto e = materialize(g, BlockCliqueEmbedding{sol.blocks});
    if (e.yield() != sol.best_size) throw std::logic_error("bundle table disagrees with materialized bundles");
    return e;
}

NativeCliqueEmbedding best_native_clique(const HardwareGraph &g) {
    const auto &s = g.shape();
    if (std::min(s.M, s.N) < 2) throw std::invalid_argument("clique search needs min(M,N) >= 2");
    NativeCliqueEmbedding best;
    for (int n = 2; n <= std::min(s.M, s.N); ++n) {
        auto e = native_clique_embed(g, n);
        if (best.n == 0 || best.yield() < e.yield()) best = std::move(e);
    }
    return best;
}

NativeCliqueEmbedding native_clique_embed_naive(const HardwareGraph &g, int n) {
    const auto &s = g.shape();
    check_n(s, n);
    check_induced(g);

    struct Partial {
        int norm = 0;
        std::vector<EllBlock> blocks;
    };
    // rectangles keyed by (height, x0, y0); width is implied by height
    auto key = [&](const WorkingRect &r) {
        return (std::size_t(r.height()) * std::size_t(s.N) + std::size_t(r.y0 - 1)) * std::size_t(s.M) +
               std::size_t(r.x0 - 1);
    };
    std::vector<Partial> partial(std::size_t(n) * std::size_t(s.N) * std::size_t(s.M));
    auto extend = [&](const EllBlock &b) {
        Partial p;
        if (b.height() > 1) p = partial[key(r_to(b))];
        p.norm += max_bundle(g, b).size();
        p.blocks.push_back(b);
        return p;
    };

    for (int i = 1; i <= n - 1; ++i) {
        for_each_block(s, n, i, [&](const EllBlock &b) {
            auto candidate = extend(b);
            auto &slot = partial[key(r_from(b))];
            if (slot.norm < candidate.norm) slot = std::move(candidate);
        });
    }
    Partial best;
    for_each_block(s, n, n, [&](const EllBlock &b) {
        auto candidate = extend(b);
        if (best.norm < candidate.norm) best = std::move(candidate);
    });

    NativeCliqueEmbedding e;
    e.n = n;
    for (auto &b : best.blocks) e.bundles.push_back(max_bundle(g, b));
    return e;
}

}  // namespace ellclique
