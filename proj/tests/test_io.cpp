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

#include <cstdio>
#include <fstream>
#include <random>

#include "ellclique/clique_dp.hpp"
#include "ellclique/io.hpp"
#include "support.hpp"

using namespace ellclique;
using nlohmann::json;

namespace {

std::string temp_path(const char *name) { return std::string(P_tmpdir) + "/ellclique_test_" + name; }

}  // namespace

TEST_CASE("graph round trip") {
    std::mt19937_64 rng(6);
    auto g = testing::random_induced({5, 4, 3}, rng, 0.1, 0.2);
    g = testing::fail_couplers(g, 3, testing::Family::any, rng);
    auto j = to_json(g);
    CHECK(j["shape"]["M"] == 5);
    CHECK(j["dead_qubits"].size() == g.dead_qubits().size());
    CHECK(graph_from_json(j) == g);
    CHECK(graph_from_json(json::parse(dump(j))) == g);

    auto path = temp_path("graph.json");
    write_text(path, dump(j));
    CHECK(read_graph(path) == g);
    std::remove(path.c_str());
}

TEST_CASE("embedding round trip") {
    std::mt19937_64 rng(9);
    auto g = testing::random_induced({6, 6, 4}, rng, 0.1, 0.2);
    auto e = best_native_clique(g);
    e.bundles[0].ells.clear();  // empty bundles survive the trip
    auto back = embedding_from_json(to_json(e));
    CHECK(back.n == e.n);
    CHECK(back.skeleton() == e.skeleton());
    CHECK(back.chains() == e.chains());
    CHECK(dump(to_json(back)) == dump(to_json(e)));
}

TEST_CASE("dump layout") {
    json j{{"b", json::array({1, 2})}, {"a", 3}, {"c", json::array()}};
    CHECK(dump(j) == "{\n  \"a\": 3,\n  \"b\": [\n    1,\n    2\n  ],\n  \"c\": []\n}\n");
    CHECK(dump(json::array({1})) == "[1]\n");
    auto t = dump(to_json(triangle_embedding({4, 4, 4})));
    CHECK(t == dump(to_json(triangle_embedding({4, 4, 4}))));
    CHECK(json::parse(t)["chains"].size() == 16);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"dead_qubits": []})")), format_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"shape": {"M": 2, "N": 2}})")), format_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"shape": {"M": "x", "N": 2, "L": 1}})")), format_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"shape": {"M": 2, "N": 2, "L": 1}, "dead_qubits": [[1, 1, 0]]})")),
                    format_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"shape": {"M": 2, "N": 2, "L": 1}, "dead_couplers": [[[1,1,0,1]]]})")),
                    format_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"shape": {"M": 2, "N": 2, "L": 1}, "dead_qubits": [[3, 1, 0, 1]]})")),
                    std::out_of_range);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"shape": {"M": 0, "N": 2, "L": 1}})")), std::invalid_argument);

    CHECK_THROWS_AS(embedding_from_json(json::parse(R"({"n": 2, "blocks": []})")), format_error);
    // chain not shaped like an ell
    CHECK_THROWS_AS(
        embedding_from_json(json::parse(R"({"n": 2, "blocks": [], "chains": [[[1,1,0,1],[2,1,0,1]]]})")),
        format_error);
    // chain whose block is not listed
    CHECK_THROWS_AS(embedding_from_json(json::parse(
                        R"({"n": 1, "blocks": [], "chains": [[[1,1,0,1],[1,1,1,1]]]})")),
                    format_error);
    CHECK_THROWS_AS(embedding_from_json(json::parse(
                        R"({"n": 2, "blocks": [{"corner": [1,1], "cells": [[1,1],[2,2]]}], "chains": []})")),
                    format_error);

    auto path = temp_path("bad.json");
    write_text(path, "{ not json");
    CHECK_THROWS_AS(read_graph(path), format_error);
    CHECK_THROWS_AS(read_embedding(path), format_error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_graph(temp_path("missing.json")), std::runtime_error);
    CHECK_THROWS_AS(write_text("/nonexistent-dir/x.json", "{}"), std::runtime_error);
}
