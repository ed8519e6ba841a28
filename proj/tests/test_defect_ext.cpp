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


#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "ellclique/clique_dp.hpp"
#include "ellclique/defect_ext.hpp"
#include "support.hpp"

using namespace ellclique;

namespace {

using Cover = std::vector<ChimeraCoord>;

// Minimal covers by scanning every subset of the touched vertices.
std::set<Cover> covers_by_subsets(const std::vector<Coupler> &edges) {
    std::set<ChimeraCoord> vs;
    for (auto &[a, b] : edges) vs.insert({a, b});
    std::vector<ChimeraCoord> verts(vs.begin(), vs.end());
    const std::size_t V = verts.size();
    auto covers = [&](std::uint32_t mask) {
        for (auto &[a, b] : edges) {
            auto ia = std::size_t(std::find(verts.begin(), verts.end(), a) - verts.begin());
            auto ib = std::size_t(std::find(verts.begin(), verts.end(), b) - verts.begin());
            if (!((mask >> ia) & 1) && !((mask >> ib) & 1)) return false;
        }
        return true;
    };
    std::set<Cover> out;
    for (std::uint32_t mask = 0; mask < (1u << V); ++mask) {
        if (!covers(mask)) continue;
        bool minimal = true;
        for (std::size_t v = 0; v < V; ++v)
            if (((mask >> v) & 1) && covers(mask & ~(1u << v))) minimal = false;
        if (!minimal) continue;
        Cover c;
        for (std::size_t v = 0; v < V; ++v)
            if ((mask >> v) & 1) c.push_back(verts[v]);
        out.insert(c);
    }
    return out;
}

std::set<Cover> as_set(const std::vector<Cover> &v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("minimal vertex covers") {
    const ChimeraCoord a{1, 1, 0, 1}, b{1, 1, 1, 1}, c{1, 1, 0, 2};
    SUBCASE("no failures") {
        auto covers = minimal_vertex_covers({});
        REQUIRE(covers.size() == 1);
        CHECK(covers[0].empty());
    }
    SUBCASE("one edge") {
        auto covers = minimal_vertex_covers({{{a, b}}});
        CHECK(covers == std::vector<Cover>{{a}, {b}});
    }
    SUBCASE("path of two edges") {
        std::vector<Coupler> path{{a, b}, {c, b}};
        auto covers = minimal_vertex_covers({path});
        CHECK(as_set(covers) == std::set<Cover>{{b}, {a, c}});
        CHECK(as_set(covers) == covers_by_subsets(path));
    }
    SUBCASE("random failure sets against subset scan") {
        std::mt19937_64 rng(4);
        auto intra = [](const Coupler &e) { return is_intra_cell(e.first, e.second); };
        std::vector<Coupler> pool;
        for (auto &e : ideal_couplers({2, 1, 3})) if (intra(e)) pool.push_back(e);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Coupler> edges;
            std::sample(pool.begin(), pool.end(), std::back_inserter(edges), std::size_t(trial % 9), rng);
            auto covers = minimal_vertex_covers({edges});
            CHECK(covers.size() == as_set(covers).size());
            CHECK(as_set(covers) == covers_by_subsets(edges));
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(minimal_vertex_covers({{{a, {2, 1, 0, 1}}}}), std::invalid_argument);
        std::vector<Coupler> many;
        for (auto &e : ideal_couplers({3, 1, 2}))
            if (is_intra_cell(e.first, e.second)) many.push_back(e);
        CHECK(many.size() == 12);
        CHECK_THROWS_AS(minimal_vertex_covers({many}, 11), cap_exceeded);
        CHECK_NOTHROW(minimal_vertex_covers({many}, 12));
    }
}

TEST_CASE("no failures gives the plain engine's answer") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = testing::random_induced({6, 6, 4}, rng, 0.0, 0.1);
        auto r = embed_with_intra_failures(g);
        auto e = best_native_clique(g);
        CHECK(r.t == 0);
        CHECK(r.covers_tried == 1);
        CHECK(r.winning_cover.empty());
        CHECK(r.embedding.n == e.n);
        CHECK(r.embedding.skeleton() == e.skeleton());
        CHECK(r.embedding.chains() == e.chains());
        auto rn = embed_with_intra_failures(g, 4);
        CHECK(rn.embedding.chains() == native_clique_embed(g, 4).chains());
    }
}

TEST_CASE("one failed corner coupler") {
    ChimeraShape s{4, 4, 2};
    std::vector<ChimeraCoord> dead{{4, 2, 1, 2}};
    auto base = apply_defects(build_chimera(s), dead);
    const ChimeraCoord a{2, 2, 0, 1}, b{2, 2, 1, 1};
    std::vector<Coupler> failed{{a, b}};
    auto g = apply_defects(base, {}, failed);
    CHECK(intra_failures(g).t() == 1);
    CHECK_THROWS_AS(best_native_clique(g), std::invalid_argument);

    auto r = embed_with_intra_failures(g);
    CHECK(r.t == 1);
    CHECK(r.covers_tried == 2);
    std::vector<ChimeraCoord> just_a{a}, just_b{b}, both{a, b};
    int ya = best_native_clique(apply_defects(g, just_a)).yield();
    int yb = best_native_clique(apply_defects(g, just_b)).yield();
    int yab = best_native_clique(apply_defects(g, both)).yield();
    CHECK(r.embedding.yield() == std::max(ya, yb));
    CHECK(r.embedding.yield() >= yab);
    CHECK(r.winning_cover == (ya >= yb ? just_a : just_b));
    CHECK(validate_embedding(g, r.embedding).ok());
}

TEST_CASE("outputs are valid on the true graph") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        ChimeraShape s{5, 5, 1 + trial % 4};
        auto g = testing::random_induced(s, rng, 0.0, 0.15);
        g = testing::fail_couplers(g, std::size_t(1 + trial % 4), testing::Family::intra, rng);
        g = testing::fail_couplers(g, std::size_t(trial % 3), testing::Family::inter, rng);
        auto r = embed_with_intra_failures(g);
        CHECK(r.t == int(g.failed_intra_couplers().size()));
        CHECK(r.covers_tried == minimal_vertex_covers(intra_failures(g)).size());
        auto report = validate_embedding(g, r.embedding);
        CHECK(report.ok());
        CHECK(block_clique_violations(r.embedding.skeleton()).empty());
        // every cover gives a lower bound; the winner is the best of them
        for (auto &cover : minimal_vertex_covers(intra_failures(g)))
            CHECK(r.embedding.yield() >= best_native_clique(apply_defects(g, cover)).yield());
    }
}

TEST_CASE("cap on the failure count") {
    std::mt19937_64 rng(3);
    auto g = testing::fail_couplers(build_chimera({3, 3, 2}), 5, testing::Family::intra, rng);
    CHECK_THROWS_AS(embed_with_intra_failures(g, std::nullopt, 4), cap_exceeded);
    CHECK_NOTHROW(embed_with_intra_failures(g, 2, 5));
}
