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
#include <algorithm>
#include <random>
#include <vector>

#include "ellclique/ellclique.hpp"

namespace ellclique::testing {

// Uniform random qubit deletions at a rate drawn from [lo, hi].
inline HardwareGraph random_induced(const ChimeraShape &s, std::mt19937_64 &rng, double lo, double hi) {
    std::uniform_real_distribution<double> rate(lo, hi);
    return sample_defective_graph(s, dead_count(s, rate(rng)), rng());
}

enum class Family { any, intra, inter };

// Random failed couplers among the live ones.
inline HardwareGraph fail_couplers(const HardwareGraph &g, std::size_t count, Family family, std::mt19937_64 &rng) {
    std::vector<Coupler> pool, picked;
    for (auto &c : ideal_couplers(g.shape())) {
        bool intra = is_intra_cell(c.first, c.second);
        if (!g.is_live_edge(c.first, c.second)) continue;
        if ((family == Family::intra && !intra) || (family == Family::inter && intra)) continue;
        pool.push_back(c);
    }
    std::sample(pool.begin(), pool.end(), std::back_inserter(picked), std::min(count, pool.size()), rng);
    return apply_defects(g, {}, picked);
}

}  // namespace ellclique::testing
