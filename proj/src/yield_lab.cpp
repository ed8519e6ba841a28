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

#include "ellclique/yield_lab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ellclique/clique_dp.hpp"
#include "ellclique/embedding.hpp"

namespace ellclique {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, int N, double rate, int trial) {
    std::uint64_t h = mix64(base);
    h = mix64(h ^ std::uint64_t(std::uint32_t(N)));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(rate));
    return mix64(h ^ std::uint64_t(std::uint32_t(trial)));
}

std::size_t dead_count(const ChimeraShape &shape, double rate) {
    return std::size_t(std::llround(rate * double(shape.num_qubits())));
}

HardwareGraph sample_defective_graph(const ChimeraShape &shape, std::size_t dead, std::uint64_t seed) {
    HardwareGraph g = build_chimera(shape);
    if (dead > shape.num_qubits()) throw std::invalid_argument("more dead qubits than qubits");
    std::vector<std::size_t> all(shape.num_qubits()), picked;
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(picked), dead, rng);
    std::vector<ChimeraCoord> qubits;
    qubits.reserve(picked.size());
    for (auto i : picked) qubits.push_back(g.coord(i));
    return apply_defects(g, qubits);
}

std::vector<YieldRecord> run_experiment(const ExperimentConfig &cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (cfg.L < 1) throw std::invalid_argument("L must be at least 1");
    for (auto r : cfg.rates)
        if (!(r >= 0 && r <= 1)) throw std::invalid_argument("failure rates must lie in [0,1]");
    for (auto N : cfg.sizes)
        if (N < 2) throw std::invalid_argument("grid sizes must be at least 2");

    std::vector<YieldRecord> records;
    for (auto N : cfg.sizes)
        for (auto rate : cfg.rates)
            for (int t = 0; t < cfg.trials; ++t) {
                YieldRecord r;
                r.N = N;
                r.L = cfg.L;
                r.rate = rate;
                r.trial = t;
                r.seed = trial_seed(cfg.seed, N, rate, t);
                records.push_back(r);
            }

    auto run_one = [](YieldRecord &r) {
        ChimeraShape shape{r.N, r.N, r.L};
        auto g = sample_defective_graph(shape, dead_count(shape, r.rate), r.seed);
        auto start = std::chrono::steady_clock::now();
        auto e = best_native_clique(g);
        auto stop = std::chrono::steady_clock::now();
        if (!validate_embedding(g, e).ok())
            throw std::logic_error("invalid embedding for N=" + std::to_string(r.N) + " seed=" + std::to_string(r.seed));
        r.n = e.n;
        r.yield = e.yield();
        r.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    };

    unsigned threads = cfg.threads > 0 ? unsigned(cfg.threads) : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1) {
        for (auto &r : records) run_one(r);
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < records.size();) run_one(records[i]);
            } catch (...) {
                errors[w] = std::current_exception();
                next = records.size();
            }
        });
    for (auto &t : pool) t.join();
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
    return records;
}

Quartiles quartiles(std::vector<int> values) {
    if (values.empty()) throw std::invalid_argument("cannot summarize an empty cell");
    std::sort(values.begin(), values.end());
    auto at = [&](double p) { return values[std::size_t(std::floor(double(values.size() - 1) * p))]; };
    return {values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

std::vector<QuartileRow> aggregate(const std::vector<YieldRecord> &records) {
    std::map<std::tuple<std::string, int, int, double>, std::vector<int>> cells;
    for (auto &r : records) cells[{r.family, r.N, r.L, r.rate}].push_back(r.yield);
    std::vector<QuartileRow> rows;
    for (auto &[key, yields] : cells) {
        auto q = quartiles(yields);
        QuartileRow row;
        std::tie(row.family, row.N, row.L, row.rate) = key;
        row.min = q.min;
        row.q1 = q.q1;
        row.median = q.median;
        row.q3 = q.q3;
        row.max = q.max;
        row.trials = int(yields.size());
        rows.push_back(row);
    }
    return rows;
}

std::string format_rate(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", rate);
    return buf;
}

std::string records_csv(const std::vector<YieldRecord> &records, bool timing) {
    std::ostringstream out;
    out << "family,N,L,rate,trial,seed,n,yield,runtime_ms\n";
    for (auto &r : records) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", timing ? r.runtime_ms : 0.0);
        out << r.family << ',' << r.N << ',' << r.L << ',' << format_rate(r.rate) << ',' << r.trial << ',' << r.seed
            << ',' << r.n << ',' << r.yield << ',' << ms << '\n';
    }
    return out.str();
}

std::string aggregate_csv(const std::vector<QuartileRow> &rows) {
    std::ostringstream out;
    out << "family,N,L,rate,min,q1,median,q3,max,trials\n";
    for (auto &r : rows)
        out << r.family << ',' << r.N << ',' << r.L << ',' << format_rate(r.rate) << ',' << r.min << ',' << r.q1
            << ',' << r.median << ',' << r.q3 << ',' << r.max << ',' << r.trials << '\n';
    return out.str();
}

std::string aggregate_svg(const std::vector<QuartileRow> &rows) {
    const double W = 640, H = 420, left = 60, right = 150, top = 20, bottom = 50;
    int nmin = 0, nmax = 1, ymax = 1;
    if (!rows.empty()) {
        nmin = rows.front().N;
        nmax = rows.front().N;
    }
    for (auto &r : rows) {
        nmin = std::min(nmin, r.N);
        nmax = std::max(nmax, r.N);
        ymax = std::max(ymax, r.max);
    }
    if (nmax == nmin) ++nmax;
    auto px = [&](double n) { return left + (n - nmin) / double(nmax - nmin) * (W - left - right); };
    auto py = [&](double y) { return H - bottom - y / double(ymax) * (H - top - bottom); };

    std::map<std::pair<std::string, double>, std::vector<const QuartileRow *>> series;
    for (auto &r : rows) series[{r.family, r.rate}].push_back(&r);

    static const char *palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << W - right << "\" y2=\"" << py(0)
      << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << left << "\" y2=\"" << top
      << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">N</text>\n";
    s << "<text x=\"15\" y=\"" << (top + H - bottom) / 2 << "\" transform=\"rotate(-90 15 " << (top + H - bottom) / 2
      << ")\" text-anchor=\"middle\">clique yield</text>\n";
    s << "<text x=\"" << left - 5 << "\" y=\"" << py(ymax) + 4 << "\" text-anchor=\"end\">" << ymax << "</text>\n";
    s << "<text x=\"" << left - 5 << "\" y=\"" << py(0) + 4 << "\" text-anchor=\"end\">0</text>\n";
    for (auto &r : rows)
        s << "<text x=\"" << px(r.N) << "\" y=\"" << py(0) + 18 << "\" text-anchor=\"middle\">" << r.N << "</text>\n";

    std::size_t idx = 0;
    for (auto &[key, pts] : series) {
        const char *color = palette[idx % std::size(palette)];
        s << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
        for (auto *p : pts) s << px(p->N) << ',' << py(p->q3) << ' ';
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) s << px((*it)->N) << ',' << py((*it)->q1) << ' ';
        s << "\"/>\n<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (auto *p : pts) s << px(p->N) << ',' << py(p->median) << ' ';
        s << "\"/>\n";
        s << "<text x=\"" << W - right + 10 << "\" y=\"" << top + 20 * double(idx + 1) << "\" fill=\"" << color
          << "\">" << key.first << " rate " << format_rate(key.second) << "</text>\n";
        ++idx;
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace ellclique
