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

#include "kummer/census.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kummer {

namespace {

unsigned long long checked_budget(std::uint64_t q, unsigned ext, unsigned level,
                                  unsigned long long budget) {
    unsigned long long cost = 1;
    for (unsigned i = 0; i < ext; ++i) {
        if (cost > budget / q) throw budget_error("chain budget exceeded");
        cost *= q;
    }
    const unsigned long long qe = cost;
    for (unsigned i = 0; i < level; ++i) {
        if (cost > budget / 3) throw budget_error("chain budget exceeded");
        cost *= 3;
    }
    return qe;
}

}  // namespace

RationalValue splitting_estimator(const LevelData& data) {
    RationalValue v{data.chain_count, data.extension_degree_over_F0};
    unsigned long long g = std::gcd(v.num, v.den);
    if (g > 1) {
        v.num /= g;
        v.den /= g;
    }
    return v;
}

RationalValue splitting_estimator(const TowerSpec& spec, unsigned level,
                                  const ChainOptions& opts) {
    return splitting_estimator(count_chains(spec, level, opts));
}

std::vector<LevelData> count_chain_levels(const TowerSpec& spec,
                                          unsigned max_level,
                                          const ChainOptions& opts) {
    const FiniteField& F = *spec.field;
    if (opts.ext < 1) throw std::invalid_argument("ext must be >= 1");
    const unsigned long long qe =
        checked_budget(F.size(), opts.ext, max_level, opts.budget);

    const FiniteField& E = extension_field(F, opts.ext);
    const std::size_t n = static_cast<std::size_t>(qe);
    const FieldElement be = embed(spec.b, E);
    const FieldElement ce = embed(spec.c, E);

    // u(x) and x^3 for every element, by enumeration index
    std::vector<std::uint64_t> u_idx(n), cube_idx(n);
    const bool par = opts.parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement x = E.element_at(i);
        FieldElement ux = x * (x * x + be * x + ce);
        u_idx[i] = ux.index();
        cube_idx[i] = (x * x * x).index();
    }

    // CSR buckets of the preimages of u
    std::vector<std::uint32_t> bucket_count(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++bucket_count[u_idx[i] + 1];
    for (std::size_t i = 0; i < n; ++i) bucket_count[i + 1] += bucket_count[i];
    std::vector<std::uint32_t> bucket_items(n);
    {
        std::vector<std::uint32_t> cursor(bucket_count.begin(), bucket_count.end() - 1);
        for (std::size_t i = 0; i < n; ++i) {
            bucket_items[cursor[u_idx[i]]++] = static_cast<std::uint32_t>(i);
        }
    }

    std::vector<LevelData> out;
    out.reserve(max_level + 1);
    std::vector<unsigned long long> D(n, 1), next(n, 0);
    unsigned long long ext_deg = 1;
    for (unsigned level = 0; level <= max_level; ++level) {
        if (level > 0) {
            // chains ending in w extend chains ending in any preimage of w^3
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
            for (std::size_t w = 0; w < n; ++w) {
                const std::uint64_t key = cube_idx[w];
                unsigned long long acc = 0;
                for (std::uint32_t k = bucket_count[key]; k < bucket_count[key + 1]; ++k) {
                    acc += D[bucket_items[k]];
                }
                next[w] = acc;
            }
            D.swap(next);
            ext_deg *= 3;
        }
        unsigned long long total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : total) if (par)
#endif
        for (std::size_t i = 0; i < n; ++i) total += D[i];
        out.push_back(LevelData{level, ext_deg, opts.ext, total});
    }
    return out;
}

LevelData count_chains(const TowerSpec& spec, unsigned level,
                       const ChainOptions& opts) {
    return count_chain_levels(spec, level, opts).back();
}

namespace {

unsigned long long dfs_chains(const FiniteField& E, const Poly& u,
                              const FieldElement& x, unsigned remaining) {
    if (remaining == 0) return 1;
    unsigned long long total = 0;
    for (const FieldElement& z : cube_roots(u.eval(x))) {
        total += dfs_chains(E, u, z, remaining - 1);
    }
    return total;
}

}  // namespace

unsigned long long count_chains_reference(const TowerSpec& spec, unsigned level,
                                          unsigned ext) {
    const FiniteField& E = extension_field(*spec.field, ext);
    const FieldElement be = embed(spec.b, E);
    const FieldElement ce = embed(spec.c, E);
    Poly u(E, {E.zero(), ce, be, E.one()});
    unsigned long long total = 0;
    for (std::uint64_t i = 0; i < E.size(); ++i) {
        total += dfs_chains(E, u, E.element_at(i), level);
    }
    return total;
}

std::vector<CensusRow> run_census(const FiniteField& field,
                                  const CensusOptions& opts) {
    if (!field.q_mod3_is_1()) {
        throw std::invalid_argument("census field needs q = 1 mod 3");
    }
    const std::uint64_t q = field.size();

    // b-major order over all (b, c) != (0, 0)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(q * q - 1);
    for (std::uint64_t bi = 0; bi < q; ++bi) {
        for (std::uint64_t ci = 0; ci < q; ++ci) {
            if (bi == 0 && ci == 0) continue;
            pairs.emplace_back(bi, ci);
        }
    }

    // the shared memo tables (irreducibles, embeddings) are warmed once so
    // the parallel rows only read them
    {
        TowerSpec warm = TowerSpec::make(field, field.zero(), field.one());
        (void)check_criterion(warm, opts.criterion);
        ChainOptions copts{opts.ext, opts.chain_budget, false};
        (void)count_chain_levels(warm, opts.levels, copts);
    }

    std::vector<CensusRow> rows(pairs.size());
    const bool par = opts.parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        FieldElement b = field.element_at(pairs[i].first);
        FieldElement c = field.element_at(pairs[i].second);
        TowerSpec spec = TowerSpec::make(field, b, c);
        CensusRow row;
        row.b = b;
        row.c = c;
        row.cls = classify(spec);
        BasicField bf = BasicField::make(field, b, c);
        RamificationReport rep = analyze(bf);
        row.genus = rep.genus;
        row.deg_diff_x = updivisor_degree(rep.diff_x);
        row.deg_diff_y = updivisor_degree(rep.yside.diff);
        row.N = rep.N;
        row.tame_over_y = rep.yside.tame;
        row.verdict = check_criterion(spec, opts.criterion);
        ChainOptions copts{opts.ext, opts.chain_budget, false};
        for (const LevelData& ld : count_chain_levels(spec, opts.levels, copts)) {
            row.chains.push_back(ld.chain_count);
        }
        rows[i] = std::move(row);
    }
    return rows;
}

namespace {

// RFC 4180 quoting; extension-field coefficients contain commas
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string join_N(const std::set<int>& N) {
    std::string s;
    for (int n : N) {
        if (!s.empty()) s += ';';
        s += std::to_string(n);
    }
    return s;
}

std::string verdict_cell(const CriterionVerdict& v) {
    if (v.infinite_genus) return "infinite_genus";
    switch (v.reason) {
        case NotApplicableReason::NotGalois: return "not_applicable:not_galois";
        case NotApplicableReason::HReducible: return "not_applicable:h_reducible";
        case NotApplicableReason::SearchExhausted:
            return "not_applicable:search_exhausted";
    }
    return "not_applicable";
}

}  // namespace

void census_to_csv(std::ostream& os, const FiniteField& field,
                   const std::vector<CensusRow>& rows, unsigned levels) {
    os << "q,b,c,class,genus,degDiffX,degDiffY,N,criterion,d";
    for (unsigned l = 0; l <= levels; ++l) os << ",chains_L" << l;
    os << "\n";
    for (const CensusRow& row : rows) {
        os << field.size() << ',' << csv_cell(row.b.str()) << ','
           << csv_cell(row.c.str()) << ',' << row.cls.tag_str() << ','
           << row.genus << ',' << row.deg_diff_x << ',' << row.deg_diff_y << ','
           << join_N(row.N) << ',' << verdict_cell(row.verdict) << ',';
        if (row.verdict.infinite_genus) os << row.verdict.d;
        for (unsigned long long cnt : row.chains) os << ',' << cnt;
        os << "\n";
    }
}

}  // namespace kummer
