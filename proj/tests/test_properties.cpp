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

#include "ellclique/clique_dp.hpp"
#include "ellclique/oracle.hpp"
#include "support.hpp"

using namespace ellclique;

namespace {

ChimeraShape random_shape(std::mt19937_64 &rng, int max_side, int max_L) {
    std::uniform_int_distribution<int> side(2, max_side), tracks(1, max_L);
    return {side(rng), side(rng), tracks(rng)};
}

}  // namespace

TEST_CASE("yield never exceeds L min(M,N)") {
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = random_shape(rng, 9, 4);
        auto g = testing::random_induced(s, rng, 0.0, 0.2);
        auto e = best_native_clique(g);
        CHECK(e.yield() <= s.L * std::min(s.M, s.N));
        CHECK(validate_embedding(g, e).ok());
        auto skel = e.skeleton();
        CHECK(block_clique_violations(skel).empty());
        std::set<int> heights;
        for (auto &b : skel.blocks) heights.insert(b.height());
        CHECK(int(heights.size()) == e.n);
    }
}

TEST_CASE("more defects never help") {
    std::mt19937_64 rng(1002);
    for (int trial = 0; trial < 40; ++trial) {
        auto s = random_shape(rng, 7, 3);
        auto g = testing::random_induced(s, rng, 0.0, 0.1);
        auto h = testing::random_induced(s, rng, 0.0, 0.1);
        std::vector<ChimeraCoord> extra = h.dead_qubits();
        auto worse = testing::fail_couplers(apply_defects(g, extra), 2, testing::Family::inter, rng);
        for (int n = 2; n <= std::min(s.M, s.N); ++n) CHECK(native_clique_yield(worse, n) <= native_clique_yield(g, n));
        // an embedding of the damaged graph is still an embedding of the original
        CHECK(validate_embedding(g, best_native_clique(worse)).ok());
    }
}

TEST_CASE("rotation invariance on rectangles") {
    std::mt19937_64 rng(1003);
    for (int trial = 0; trial < 40; ++trial) {
        auto s = random_shape(rng, 7, 3);
        auto g = testing::random_induced(s, rng, 0.0, 0.25);
        int y = best_native_clique(g).yield();
        auto r = g;
        for (int turn = 1; turn < 4; ++turn) {
            r = rotate90(r);
            CHECK(best_native_clique(r).yield() == y);
        }
    }
}

TEST_CASE("engine equals oracle on random shapes") {
    std::mt19937_64 rng(1004);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = random_shape(rng, 5, 3);
        auto g = testing::random_induced(s, rng, 0.0, 0.35);
        for (int n = 2; n <= std::min(s.M, s.N); ++n) {
            int dp = native_clique_yield(g, n);
            REQUIRE(dp == brute_force_best(g, n).best_yield);
            REQUIRE(dp == native_clique_embed_naive(g, n).yield());
        }
    }
}
