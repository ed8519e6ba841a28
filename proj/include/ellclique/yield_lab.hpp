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

#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "ellclique/topology.hpp"

// Monte-Carlo clique yield: for square C_{N,N,L} grids with a fraction of
// qubits deleted uniformly at random, record the largest native clique.

namespace ellclique {

struct ExperimentConfig {
    std::vector<int> sizes;    // N values, square grids
    int L = 4;
    std::vector<double> rates; // fraction of qubits deleted, in [0,1]
    int trials = 1;
    std::uint64_t seed = 0;
    int threads = 1;           // 0 = hardware concurrency
};

struct YieldRecord {
    std::string family = "ell";
    int N = 0;
    int L = 0;
    double rate = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int yield = 0;
    double runtime_ms = 0;
};

/// Seed of one trial, a fixed mix of (base, N, rate, trial).
std::uint64_t trial_seed(std::uint64_t base, int N, double rate, int trial);

/// round(rate * 2 M N L)
std::size_t dead_count(const ChimeraShape &shape, double rate);

/// Defect-free graph with `dead` qubits deleted, chosen uniformly without
/// replacement by a generator seeded with `seed`.
HardwareGraph sample_defective_graph(const ChimeraShape &shape, std::size_t dead, std::uint64_t seed);

/// One record per (N, rate, trial), ordered by N, then rate, then trial.
/// Every embedding is checked with validate_embedding before it is counted.
/// Throws std::invalid_argument on a malformed config.
std::vector<YieldRecord> run_experiment(const ExperimentConfig &cfg);

struct QuartileRow {
    std::string family;
    int N = 0;
    int L = 0;
    double rate = 0;
    int min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    int trials = 0;
};

struct Quartiles {
    int min, q1, median, q3, max;
};
/// Order statistics at index floor((count-1) p), so even counts take the
/// lower middle element as median. Throws std::invalid_argument when empty.
Quartiles quartiles(std::vector<int> values);

/// One row per (family, N, L, rate), sorted by that key.
std::vector<QuartileRow> aggregate(const std::vector<YieldRecord> &records);

/// family,N,L,rate,trial,seed,n,yield,runtime_ms. Runtimes are written as 0
/// unless `timing` is set, so repeated runs produce identical bytes.
std::string records_csv(const std::vector<YieldRecord> &records, bool timing = false);
/// family,N,L,rate,min,q1,median,q3,max,trials
std::string aggregate_csv(const std::vector<QuartileRow> &rows);
/// Self-contained SVG: median yield against N per rate, with the Q1-Q3 band shaded.
std::string aggregate_svg(const std::vector<QuartileRow> &rows);

std::string format_rate(double rate);

}  // namespace ellclique
