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

#include "ellclique/oracle.hpp"
#include "support.hpp"

using namespace ellclique;

namespace {

std::set<BlockCliqueEmbedding> enumerated(const ChimeraShape &s, int n) {
    std::set<BlockCliqueEmbedding> out;
    auto stream = enumerate_block_embeddings(s, n);
    while (auto item = stream.next()) out.insert(item->blocks);
    return out;
}

}  // namespace

TEST_CASE("brute force on small graphs") {
    auto g = build_chimera({3, 3, 2});
    auto r = brute_force_best(g, 3);
    CHECK(r.best_yield == 6);
    CHECK(r.instances_examined == 16);
    CHECK(word_to_blocks(r.word, r.offset) == r.witness);
    // first maximum in enumeration order
    CHECK(r.word.str() == "E.NE.N");
    CHECK(r.offset == GridOffset{0, 0});

    std::vector<ChimeraCoord> all;
    for (std::size_t i = 0; i < g.shape().num_qubits(); ++i) all.push_back(g.coord(i));
    CHECK(brute_force_best(apply_defects(g, all), 2).best_yield == 0);

    CHECK_THROWS_AS(brute_force_best(g, 3, 15), cap_exceeded);
    CHECK_NOTHROW(brute_force_best(g, 3, 16));
    CHECK_THROWS_AS(brute_force_best(g, 4), std::invalid_argument);
}

TEST_CASE("witness scores the best yield") {
    std::mt19937_64 rng(8);
    ChimeraShape s{5, 4, 2};
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testing::random_induced(s, rng, 0.05, 0.3);
        for (int n = 2; n <= 4; ++n) {
            auto r = brute_force_best(g, n);
            CHECK(r.instances_examined == enumerate_block_embeddings(s, n).size());
            int total = 0;
            for (auto &b : r.witness.blocks) total += max_bundle(g, b).size();
            CHECK(total == r.best_yield);
            CHECK(word_to_blocks(r.word, r.offset) == r.witness);
        }
    }
}

TEST_CASE("exhaustive search, small grids") {
    auto two = exhaustive_block_search({2, 2, 1}, 2);
    CHECK(two.size() == 4);
    CHECK(two == enumerated({2, 2, 1}, 2));
    auto three = exhaustive_block_search({3, 3, 1}, 2);
    CHECK(three.size() == 16);
    CHECK(three.size() == 4 * (3 - 2 + 1) * (3 - 2 + 1));
    CHECK(three == enumerated({3, 3, 1}, 2));
    CHECK(exhaustive_block_search({3, 3, 1}, 3) == enumerated({3, 3, 1}, 3));
    // too small for any embedding
    CHECK(exhaustive_block_search({1, 3, 1}, 2).empty());
}

TEST_CASE("count law including the translation factor") {
    SearchLimits wide{64, 4};
    for (int n = 2; n <= 4; ++n)
        for (int M = n; M <= n + 2; ++M)
            for (int N = n; N <= n + 2; ++N) {
                ChimeraShape s{M, N, 1};
                auto found = exhaustive_block_search(s, n, wide);
                for (auto &b : found) CHECK(block_clique_violations(b).empty());
                CHECK(found.size() == word_count(n) * std::uint64_t(M - n + 1) * std::uint64_t(N - n + 1));
                CHECK(found == enumerated(s, n));
            }
}

TEST_CASE("search limits") {
    CHECK_THROWS_AS(exhaustive_block_search({6, 5, 1}, 2), cap_exceeded);
    CHECK_THROWS_AS(exhaustive_block_search({5, 5, 1}, 5), cap_exceeded);
    CHECK_THROWS_AS(exhaustive_block_search({3, 3, 1}, 0), std::invalid_argument);
}
