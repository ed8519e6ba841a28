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

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellclique/ellclique.hpp"

using namespace ellclique;
using nlohmann::json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text(path, text);
}

json coord_json(const ChimeraCoord &q) { return json::array({q.x, q.y, q.u, q.k}); }

json blocks_json(const BlockCliqueEmbedding &b) {
    json out = json::array();
    for (auto &blk : b.blocks) {
        json cells = json::array();
        for (auto &c : blk.cells()) cells.push_back(json::array({c.x, c.y}));
        out.push_back({{"corner", json::array({blk.corner().x, blk.corner().y})}, {"cells", std::move(cells)}});
    }
    return out;
}

// Random failed couplers among the live ones, optionally only intra-cell.
std::vector<Coupler> pick_couplers(const HardwareGraph &g, std::size_t count, bool intra_only, std::mt19937_64 &rng) {
    std::vector<Coupler> pool, picked;
    for (auto &c : ideal_couplers(g.shape()))
        if (g.is_live_edge(c.first, c.second) && (!intra_only || is_intra_cell(c.first, c.second)))
            pool.push_back(c);
    if (count > pool.size()) throw usage_error("not enough live couplers to fail " + std::to_string(count));
    std::sample(pool.begin(), pool.end(), std::back_inserter(picked), count, rng);
    return picked;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Native clique minors in defective Chimera graphs"};
    app.require_subcommand(1);

    // generate
    auto *gen = app.add_subcommand("generate", "Write a Chimera graph with random defects");
    ChimeraShape gshape{4, 0, 4};
    std::size_t gdead = 0, gcouplers = 0, gintra = 0;
    double grate = 0;
    std::uint64_t gseed = 0;
    std::string gout;
    gen->add_option("--M", gshape.M, "Grid width in cells")->required()->check(CLI::PositiveNumber);
    gen->add_option("--N", gshape.N, "Grid height in cells (default M)")->check(CLI::PositiveNumber);
    gen->add_option("--L", gshape.L, "Tracks per orientation")->check(CLI::PositiveNumber);
    auto *gdead_opt = gen->add_option("--dead", gdead, "Number of dead qubits");
    gen->add_option("--rate", grate, "Fraction of dead qubits")->check(CLI::Range(0.0, 1.0))->excludes(gdead_opt);
    gen->add_option("--dead-couplers", gcouplers, "Number of failed couplers between live qubits");
    gen->add_option("--intra-failures", gintra, "Number of failed intra-cell couplers between live qubits");
    gen->add_option("--seed", gseed, "Random seed");
    gen->add_option("--out", gout, "Output path (default stdout)");

    // embed
    auto *emb = app.add_subcommand("embed", "Find a maximum native clique embedding");
    std::string egraph, eout, ereport, eintra = "off";
    std::optional<int> en;
    int ecap = 20;
    emb->add_option("--graph", egraph, "Graph JSON")->required()->check(CLI::ExistingFile);
    auto *en_opt = emb->add_option("--n", en, "Number of blocks (chains have n+1 qubits)");
    emb->add_flag("--sweep", "Try every n and keep the best (default)")->excludes(en_opt);
    emb->add_option("--out", eout, "Embedding JSON path (default stdout)");
    emb->add_option("--report", ereport, "Report JSON path");
    emb->add_option("--intra-failures", eintra, "How to handle failed intra-cell couplers")
        ->check(CLI::IsMember({"off", "auto"}));
    emb->add_option("--cover-cap", ecap, "Largest failed intra-cell coupler count to branch on");

    // oracle
    auto *orc = app.add_subcommand("oracle", "Brute-force the best block clique embedding");
    std::string ograph;
    int on = 2;
    std::uint64_t ocap = 10'000'000;
    orc->add_option("--graph", ograph, "Graph JSON")->required()->check(CLI::ExistingFile);
    orc->add_option("--n", on, "Number of blocks")->required();
    orc->add_option("--cap", ocap, "Maximum number of embeddings to examine");

    // enumerate
    auto *enu = app.add_subcommand("enumerate", "List the block clique embeddings of a grid");
    int uM = 0, uN = 0, un = 2;
    std::uint64_t ulimit = 0;
    bool ucount = false, ublocks = false;
    enu->add_option("--M", uM, "Grid width in cells")->required()->check(CLI::PositiveNumber);
    enu->add_option("--N", uN, "Grid height in cells (default M)")->check(CLI::PositiveNumber);
    enu->add_option("--n", un, "Number of blocks")->required();
    enu->add_option("--limit", ulimit, "Stop after this many (0 = all)");
    enu->add_flag("--count", ucount, "Only print the total");
    enu->add_flag("--blocks", ublocks, "Print the blocks of each embedding as JSON lines");

    // validate
    auto *val = app.add_subcommand("validate", "Check an embedding against a graph");
    std::string vgraph, vemb;
    val->add_option("--graph", vgraph, "Graph JSON")->required()->check(CLI::ExistingFile);
    val->add_option("--embedding", vemb, "Embedding JSON")->required()->check(CLI::ExistingFile);

    // triangle
    auto *tri = app.add_subcommand("triangle", "Write the triangle clique embedding of C(M,M,L)");
    int tM = 0, tL = 4, trot = 0;
    std::string tout;
    tri->add_option("--M", tM, "Grid size in cells")->required();
    tri->add_option("--L", tL, "Tracks per orientation")->check(CLI::PositiveNumber);
    tri->add_option("--rotate", trot, "Quarter turns to apply")->check(CLI::Range(0, 3));
    tri->add_option("--out", tout, "Output path (default stdout)");

    // yield
    auto *yld = app.add_subcommand("yield", "Monte-Carlo clique yield experiment");
    ExperimentConfig ycfg;
    std::string yout, yagg, ysvg;
    bool ytiming = false;
    yld->add_option("--sizes", ycfg.sizes, "Grid sizes N")->required()->delimiter(',');
    yld->add_option("--L", ycfg.L, "Tracks per orientation");
    yld->add_option("--rates", ycfg.rates, "Qubit failure rates")->required()->delimiter(',');
    yld->add_option("--trials", ycfg.trials, "Trials per (N, rate)");
    yld->add_option("--seed", ycfg.seed, "Base seed");
    yld->add_option("--threads", ycfg.threads, "Worker threads (0 = all cores)");
    yld->add_option("--out", yout, "Per-trial CSV path (default stdout)");
    yld->add_option("--aggregate", yagg, "Quartile CSV path");
    yld->add_option("--svg", ysvg, "Quartile plot path");
    yld->add_flag("--timing", ytiming, "Record wall-clock runtimes (output is then not reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*gen) {
            if (gshape.N == 0) gshape.N = gshape.M;
            auto g = build_chimera(gshape);
            std::mt19937_64 rng(gseed);
            std::size_t dead = gen->count("--rate") ? dead_count(gshape, grate) : gdead;
            if (dead > gshape.num_qubits()) throw usage_error("more dead qubits than qubits");
            g = sample_defective_graph(gshape, dead, gseed);
            std::vector<Coupler> failed = pick_couplers(g, gintra, true, rng);
            g = apply_defects(g, {}, failed);
            failed = pick_couplers(g, gcouplers, false, rng);
            g = apply_defects(g, {}, failed);
            emit(gout, dump(to_json(g)));
        } else if (*emb) {
            auto g = read_graph(egraph);
            auto start = std::chrono::steady_clock::now();
            NativeCliqueEmbedding e;
            json report;
            if (eintra == "auto") {
                auto r = embed_with_intra_failures(g, en, ecap);
                e = std::move(r.embedding);
                report["t"] = r.t;
                report["covers_tried"] = r.covers_tried;
                report["winning_cover"] = json::array();
                for (auto &q : r.winning_cover) report["winning_cover"].push_back(coord_json(q));
            } else {
                if (g.has_intra_failures())
                    throw usage_error("graph has failed intra-cell couplers; rerun with --intra-failures auto");
                e = en ? native_clique_embed(g, *en) : best_native_clique(g);
            }
            auto stop = std::chrono::steady_clock::now();
            emit(eout, dump(to_json(e)));
            report["yield"] = e.yield();
            report["n"] = e.n;
            report["bundle_sizes"] = json::array();
            for (auto &b : e.bundles) report["bundle_sizes"].push_back(b.size());
            report["wall_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
            if (!ereport.empty()) write_text(ereport, dump(report));
            if (!eout.empty() && eout != "-") std::cout << "yield " << e.yield() << " n " << e.n << "\n";
        } else if (*orc) {
            auto g = read_graph(ograph);
            auto r = brute_force_best(g, on, ocap);
            json out;
            out["best_yield"] = r.best_yield;
            out["word"] = r.word.str();
            out["offset"] = json::array({r.offset.dx, r.offset.dy});
            out["witness"] = blocks_json(r.witness);
            out["instances_examined"] = r.instances_examined;
            std::cout << dump(out);
        } else if (*enu) {
            if (uN == 0) uN = uM;
            auto stream = enumerate_block_embeddings({uM, uN, 1}, un);
            if (ucount) {
                std::cout << stream.size() << "\n";
            } else {
                std::uint64_t printed = 0;
                while (auto item = stream.next()) {
                    if (ulimit && printed++ == ulimit) break;
                    if (ublocks)
                        std::cout << json{{"word", item->word.str()},
                                          {"offset", json::array({item->offset.dx, item->offset.dy})},
                                          {"blocks", blocks_json(item->blocks)}}
                                         .dump()
                                  << "\n";
                    else
                        std::cout << item->word.str() << ' ' << item->offset.dx << ' ' << item->offset.dy << "\n";
                }
            }
        } else if (*val) {
            auto g = read_graph(vgraph);
            auto e = read_embedding(vemb);
            auto r = validate_embedding(g, e);
            json out;
            out["ok"] = r.ok();
            out["chains"] = r.chains;
            out["violations"] = json::array();
            for (auto &v : r.violations)
                out["violations"].push_back(
                    {{"kind", to_string(v.kind)}, {"chain_a", v.chain_a}, {"chain_b", v.chain_b}, {"detail", v.detail}});
            std::cout << dump(out);
            return r.ok() ? 0 : 1;
        } else if (*tri) {
            ChimeraShape s{tM, tM, tL};
            auto e = triangle_embedding(s);
            for (int i = 0; i < trot; ++i) e = rotate90(s, e);
            emit(tout, dump(to_json(e)));
        } else if (*yld) {
            auto records = run_experiment(ycfg);
            emit(yout, records_csv(records, ytiming));
            auto rows = aggregate(records);
            if (!yagg.empty()) write_text(yagg, aggregate_csv(rows));
            if (!ysvg.empty()) write_text(ysvg, aggregate_svg(rows));
        }
    } catch (const std::exception &e) {
        const char *kind = dynamic_cast<const format_error *>(&e)       ? "format_error"
                           : dynamic_cast<const usage_error *>(&e)      ? "usage_error"
                           : dynamic_cast<const cap_exceeded *>(&e)     ? "cap_exceeded"
                           : dynamic_cast<const std::invalid_argument *>(&e) ? "invalid_argument"
                           : dynamic_cast<const std::out_of_range *>(&e)     ? "out_of_range"
                                                                             : "error";
        std::cerr << json{{"error", {{"kind", kind}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
