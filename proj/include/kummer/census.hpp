/*
   Copyright 2026 the cubic-kummer authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KUMMER_CENSUS_HPP
#define KUMMER_CENSUS_HPP

#include <iosfwd>
#include <stdexcept>

#include "kummer/classifier.hpp"

namespace kummer {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Chains (x_0, ..., x_i) over F_{q^ext} with x_{j+1}^3 = x_j f(x_j). These
/// affine chain counts are a desk-scale proxy for the splitting behavior of
/// the tower; they are not rational-place counts at ramified or singular
/// x-values.
struct LevelData {
    unsigned level = 0;
    unsigned long long extension_degree_over_F0 = 1;  // 3^level
    unsigned ext = 1;
    unsigned long long chain_count = 0;
};

/// Exact value chain_count / 3^level, kept as a reduced fraction.
struct RationalValue {
    unsigned long long num = 0;
    unsigned long long den = 1;
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

RationalValue splitting_estimator(const LevelData& data);

struct ChainOptions {
    unsigned ext = 1;
    unsigned long long budget = 10'000'000;  // bound on q^ext * 3^level
    bool parallel = true;
};

RationalValue splitting_estimator(const TowerSpec& spec, unsigned level,
                                  const ChainOptions& opts = {});

/// Counts for every level 0..max_level in one dynamic-programming sweep
/// over the field; the per-element inner loops run under OpenMP when
/// enabled. Throws budget_error when q^ext * 3^max_level exceeds the budget.
std::vector<LevelData> count_chain_levels(const TowerSpec& spec,
                                          unsigned max_level,
                                          const ChainOptions& opts = {});

LevelData count_chains(const TowerSpec& spec, unsigned level,
                       const ChainOptions& opts = {});

/// Serial reference implementation: depth-first chain extension via cube
/// roots, kept independent of the bucketed kernel for testing and
/// benchmarking.
unsigned long long count_chains_reference(const TowerSpec& spec, unsigned level,
                                          unsigned ext);

/// One census row per valid (b, c) pair.
struct CensusRow {
    FieldElement b, c;
    Classification cls;
    long long genus = 0;
    long long deg_diff_x = 0;
    long long deg_diff_y = 0;
    std::set<int> N;
    bool tame_over_y = true;
    CriterionVerdict verdict;
    std::vector<unsigned long long> chains;  // levels 0..L
};

struct CensusOptions {
    unsigned levels = 1;
    unsigned ext = 1;
    unsigned long long chain_budget = 10'000'000;
    CriterionOptions criterion;
    bool parallel = true;
};

/// Sweeps all (b, c) != (0, 0) in b-major canonical order. Rows are
/// computed concurrently (immutable inputs, indexed output slots) and
/// returned in deterministic order.
std::vector<CensusRow> run_census(const FiniteField& field,
                                  const CensusOptions& opts = {});

/// CSV with the fixed column set
/// q,b,c,class,genus,degDiffX,degDiffY,N,criterion,d,chains_L0..chains_LL;
/// rows are emitted to the stream one at a time in census order.
void census_to_csv(std::ostream& os, const FiniteField& field,
                   const std::vector<CensusRow>& rows, unsigned levels);

}  // namespace kummer

#endif
