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

#include "ellclique/topology.hpp"
#include "support.hpp"

using namespace ellclique;

namespace {

// Edge set straight from the three coupler families, without is_ideal_edge.
std::set<std::pair<ChimeraCoord, ChimeraCoord>> edge_families(const ChimeraShape &s) {
    std::set<std::pair<ChimeraCoord, ChimeraCoord>> out;
    auto add = [&](ChimeraCoord a, ChimeraCoord b) { out.insert(std::minmax(a, b)); };
    for (int x = 1; x <= s.M; ++x)
        for (int y = 1; y <= s.N; ++y)
            for (int k = 1; k <= s.L; ++k) {
                if (x < s.M) add({x, y, 0, k}, {x + 1, y, 0, k});
                if (y < s.N) add({x, y, 1, k}, {x, y + 1, 1, k});
                for (int j = 1; j <= s.L; ++j) add({x, y, 0, k}, {x, y, 1, j});
            }
    return out;
}

}  // namespace

TEST_CASE("vertex and edge counts") {
    for (ChimeraShape s : {ChimeraShape{2, 2, 2}, ChimeraShape{1, 1, 3}, ChimeraShape{3, 2, 4}, ChimeraShape{8, 8, 4}}) {
        auto g = build_chimera(s);
        auto edges = edge_families(s);
        CHECK(g.num_live_qubits() == s.num_qubits());
        CHECK(g.num_live_couplers() == edges.size());
        CHECK(s.num_ideal_couplers() == edges.size());
        auto listed = ideal_couplers(s);
        CHECK(std::set<Coupler>(listed.begin(), listed.end()) == edges);
    }
    CHECK(ChimeraShape{2, 2, 2}.num_qubits() == 16);
    CHECK(ChimeraShape{2, 2, 2}.num_ideal_couplers() == 24);
    CHECK(ChimeraShape{8, 8, 4}.num_qubits() == 512);
}

TEST_CASE("single cell is complete bipartite") {
    const int L = 3;
    ChimeraShape s{1, 1, L};
    auto g = build_chimera(s);
    CHECK(g.num_live_couplers() == std::size_t(L * L));
    for (int a = 1; a <= L; ++a)
        for (int b = 1; b <= L; ++b) {
            CHECK(g.is_live_edge({1, 1, 0, a}, {1, 1, 1, b}));
            if (a != b) CHECK_FALSE(g.is_live_edge({1, 1, 0, a}, {1, 1, 0, b}));
        }
}

TEST_CASE("coupler predicates") {
    ChimeraShape s{3, 3, 2};
    CHECK(is_ideal_edge(s, {1, 1, 0, 1}, {1, 1, 1, 2}));
    CHECK(is_ideal_edge(s, {1, 1, 0, 1}, {2, 1, 0, 1}));
    CHECK_FALSE(is_ideal_edge(s, {1, 1, 0, 1}, {1, 2, 0, 1}));
    CHECK_FALSE(is_ideal_edge(s, {1, 1, 1, 1}, {2, 1, 1, 1}));
    CHECK_FALSE(is_ideal_edge(s, {1, 1, 0, 1}, {2, 1, 0, 2}));
    CHECK_FALSE(is_ideal_edge(s, {1, 1, 0, 1}, {1, 1, 0, 1}));
    CHECK_FALSE(is_ideal_edge(s, {3, 1, 0, 1}, {4, 1, 0, 1}));
    auto nb = ideal_neighbors(s, {2, 2, 0, 1});
    CHECK(nb.size() == 4);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
}

TEST_CASE("index and coord are inverse in canonical order") {
    auto g = build_chimera({3, 2, 2});
    for (std::size_t i = 0; i < g.shape().num_qubits(); ++i) {
        CHECK(g.index(g.coord(i)) == i);
        if (i) CHECK(g.coord(i - 1) < g.coord(i));
    }
}

TEST_CASE("invalid shape") {
    CHECK_THROWS_AS(build_chimera({0, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_chimera({2, 2, 0}), std::invalid_argument);
}

TEST_CASE("apply_defects") {
    auto g = build_chimera({2, 2, 2});
    SUBCASE("nothing deleted") { CHECK(apply_defects(g, {}) == g); }
    SUBCASE("whole cell") {
        std::vector<ChimeraCoord> cell{{1, 1, 0, 1}, {1, 1, 0, 2}, {1, 1, 1, 1}, {1, 1, 1, 2}};
        auto h = apply_defects(g, cell);
        CHECK(h.num_live_qubits() == 12);
        CHECK_FALSE(h.is_live_edge({1, 1, 0, 1}, {2, 1, 0, 1}));
        CHECK(h.dead_qubits() == cell);
    }
    SUBCASE("out of range") {
        std::vector<ChimeraCoord> q{{3, 1, 0, 1}};
        CHECK_THROWS_AS(apply_defects(g, q), std::out_of_range);
        std::vector<Coupler> c{{{1, 1, 0, 1}, {1, 1, 1, 3}}};
        CHECK_THROWS_AS(apply_defects(g, {}, c), std::out_of_range);
    }
    SUBCASE("not a coupler") {
        std::vector<Coupler> c{{{1, 1, 0, 1}, {1, 2, 0, 1}}};
        CHECK_THROWS_AS(apply_defects(g, {}, c), std::invalid_argument);
    }
    SUBCASE("dead couplers") {
        std::vector<Coupler> c{{{2, 1, 0, 1}, {1, 1, 0, 1}}, {{1, 1, 0, 2}, {1, 1, 1, 1}}};
        auto h = apply_defects(g, {}, c);
        CHECK(h.num_live_qubits() == 16);
        CHECK(h.num_live_couplers() == 22);
        CHECK_FALSE(h.is_live_edge({1, 1, 0, 1}, {2, 1, 0, 1}));
        CHECK(h.has_intra_failures());
        CHECK(h.cell_has_intra_failure(1, 1));
        CHECK_FALSE(h.cell_has_intra_failure(2, 1));
        CHECK(h.failed_intra_couplers().size() == 1);
        // the failure disappears once an endpoint dies
        std::vector<ChimeraCoord> q{{1, 1, 1, 1}};
        auto k = apply_defects(h, q);
        CHECK_FALSE(k.has_intra_failures());
        CHECK(k.dead_couplers().size() == 1);
    }
}

TEST_CASE("26 deletions leave 486 live qubits") {
    std::mt19937_64 rng(11);
    auto g = sample_defective_graph({8, 8, 4}, 26, rng());
    CHECK(g.num_live_qubits() == 486);
}

TEST_CASE("rotate90") {
    SUBCASE("shape transposes") {
        auto g = rotate90(build_chimera({2, 3, 2}));
        CHECK(g.shape() == ChimeraShape{3, 2, 2});
        CHECK(g == build_chimera({3, 2, 2}));
    }
    SUBCASE("maps every coupler to a coupler") {
        for (ChimeraShape s : {ChimeraShape{4, 4, 2}, ChimeraShape{3, 5, 3}}) {
            ChimeraShape r{s.N, s.M, s.L};
            std::set<Coupler> image;
            for (auto &[a, b] : ideal_couplers(s)) {
                auto ra = rotate90(s, a), rb = rotate90(s, b);
                CHECK(r.contains(ra));
                CHECK(is_ideal_edge(r, ra, rb));
                image.insert(std::minmax(ra, rb));
            }
            CHECK(image.size() == r.num_ideal_couplers());
        }
    }
    SUBCASE("dead qubit example") {
        ChimeraShape s{4, 4, 2};
        std::vector<ChimeraCoord> q{{1, 2, 0, 1}};
        auto g = rotate90(apply_defects(build_chimera(s), q));
        auto dead = g.dead_qubits();
        REQUIRE(dead.size() == 1);
        CHECK(dead[0].u == 1);
        CHECK(dead[0] == ChimeraCoord{3, 1, 1, 1});
    }
    SUBCASE("four turns are the identity") {
        std::mt19937_64 rng(5);
        auto g = testing::random_induced({3, 5, 2}, rng, 0.1, 0.3);
        g = testing::fail_couplers(g, 4, testing::Family::any, rng);
        auto h = rotate90(rotate90(rotate90(rotate90(g))));
        CHECK(h == g);
        CHECK_FALSE(rotate90(g) == g);
    }
}
