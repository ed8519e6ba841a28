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

#include "ellclique/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ellclique {

using nlohmann::json;

namespace {

json coord_json(const ChimeraCoord &q) { return json::array({q.x, q.y, q.u, q.k}); }
json cell_json(const Cell &c) { return json::array({c.x, c.y}); }

ChimeraCoord coord_from(const json &j) {
    if (!j.is_array() || j.size() != 4) throw format_error("qubit must be [x,y,u,k], got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

Cell cell_from(const json &j) {
    if (!j.is_array() || j.size() != 2) throw format_error("cell must be [x,y], got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) throw format_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

json to_json(const HardwareGraph &g) {
    const auto &s = g.shape();
    json j;
    j["shape"] = {{"M", s.M}, {"N", s.N}, {"L", s.L}};
    j["dead_qubits"] = json::array();
    for (auto &q : g.dead_qubits()) j["dead_qubits"].push_back(coord_json(q));
    j["dead_couplers"] = json::array();
    for (auto &[a, b] : g.dead_couplers()) j["dead_couplers"].push_back(json::array({coord_json(a), coord_json(b)}));
    return j;
}

HardwareGraph graph_from_json(const json &j) {
    try {
        const auto &sj = field(j, "shape");
        ChimeraShape shape{field(sj, "M").get<int>(), field(sj, "N").get<int>(), field(sj, "L").get<int>()};
        std::vector<ChimeraCoord> qubits;
        if (j.contains("dead_qubits"))
            for (auto &q : j.at("dead_qubits")) qubits.push_back(coord_from(q));
        std::vector<Coupler> couplers;
        if (j.contains("dead_couplers"))
            for (auto &c : j.at("dead_couplers")) {
                if (!c.is_array() || c.size() != 2) throw format_error("coupler must be a pair of qubits");
                couplers.emplace_back(coord_from(c[0]), coord_from(c[1]));
            }
        return apply_defects(build_chimera(shape), qubits, couplers);
    } catch (const json::exception &e) {
        throw format_error(std::string("malformed graph file: ") + e.what());
    }
}

json to_json(const NativeCliqueEmbedding &e) {
    json j;
    j["n"] = e.n;
    j["chains"] = json::array();
    for (auto &ell : e.chains()) {
        json chain = json::array();
        for (auto &q : ell.qubits()) chain.push_back(coord_json(q));
        j["chains"].push_back(std::move(chain));
    }
    j["blocks"] = json::array();
    for (auto &b : e.bundles) {
        json cells = json::array();
        for (auto &c : b.block.cells()) cells.push_back(cell_json(c));
        j["blocks"].push_back({{"corner", cell_json(b.block.corner())}, {"cells", std::move(cells)}});
    }
    return j;
}

NativeCliqueEmbedding embedding_from_json(const json &j) {
    try {
        NativeCliqueEmbedding e;
        e.n = field(j, "n").get<int>();
        for (auto &bj : field(j, "blocks")) {
            std::vector<Cell> cells;
            for (auto &c : field(bj, "cells")) cells.push_back(cell_from(c));
            e.bundles.push_back({EllBlock::from_cells(cell_from(field(bj, "corner")), cells), {}});
        }
        for (auto &cj : field(j, "chains")) {
            std::vector<ChimeraCoord> qubits;
            for (auto &q : cj) qubits.push_back(coord_from(q));
            Ell ell = ell_from_qubits(qubits);
            auto block = ell.block();
            auto it = std::find_if(e.bundles.begin(), e.bundles.end(), [&](const EllBundle &b) { return b.block == block; });
            if (it == e.bundles.end()) throw format_error("chain at " + to_string(block) + " matches no listed block");
            it->ells.push_back(ell);
        }
        return e;
    } catch (const json::exception &ex) {
        throw format_error(std::string("malformed embedding file: ") + ex.what());
    } catch (const std::invalid_argument &ex) {
        throw format_error(std::string("malformed embedding file: ") + ex.what());
    }
}

std::string dump(const json &j) {
    if (!j.is_object()) return j.dump() + "\n";
    std::string out = "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += "  " + json(it.key()).dump() + ": ";
        const auto &v = it.value();
        if (v.is_array() && !v.empty()) {
            out += "[\n";
            for (std::size_t k = 0; k < v.size(); ++k) out += "    " + v[k].dump() + (k + 1 < v.size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += v.dump();
        }
        out += i + 1 < j.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

HardwareGraph read_graph(const std::string &path) {
    try {
        return graph_from_json(json::parse(slurp(path)));
    } catch (const json::exception &e) {
        throw format_error(path + ": " + e.what());
    }
}

NativeCliqueEmbedding read_embedding(const std::string &path) {
    try {
        return embedding_from_json(json::parse(slurp(path)));
    } catch (const json::exception &e) {
        throw format_error(path + ": " + e.what());
    }
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace ellclique
