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

#include <chrono>
#include <cstdio>
#include <cstring>

#include "kummer/census.hpp"

using namespace kummer;

namespace {

template <class F>
double timed(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;

    // chain-counting kernel: DFS reference vs bucketed DP, serial vs parallel
    {
        const FiniteField& F = FiniteField::get(2, 2);
        TowerSpec spec = TowerSpec::make(F, F.element({1}), F.element({1}));
        const unsigned ext = smoke ? 4 : 7;
        const unsigned levels = smoke ? 3 : 5;
        ChainOptions serial{ext, 200'000'000ULL, false};
        ChainOptions parallel{ext, 200'000'000ULL, true};

        unsigned long long ref = 0, ser = 0, par = 0;
        double t_ref = timed([&] { ref = count_chains_reference(spec, levels, ext); });
        double t_ser = timed([&] { ser = count_chains(spec, levels, serial).chain_count; });
        double t_par = timed([&] { par = count_chains(spec, levels, parallel).chain_count; });
        std::printf("chain counting, q^ext = 4^%u, levels = %u\n", ext, levels);
        std::printf("  dfs reference : %8.3fs  count = %llu\n", t_ref, ref);
        std::printf("  bucket serial : %8.3fs  count = %llu\n", t_ser, ser);
        std::printf("  bucket openmp : %8.3fs  count = %llu  (speedup vs serial %.2fx)\n",
                    t_par, par, t_par > 0 ? t_ser / t_par : 0.0);
        if (ref != ser || ser != par) {
            std::fprintf(stderr, "MISMATCH between kernels\n");
            return 1;
        }
    }

    // census rows, serial vs parallel
    {
        const FiniteField& F = smoke ? FiniteField::get(7, 1)
                                     : FiniteField::get(5, 2);
        CensusOptions sopts;
        sopts.parallel = false;
        CensusOptions popts;
        popts.parallel = true;
        std::vector<CensusRow> a, b;
        run_census(F, sopts);  // warm the shared memo tables before timing
        double t_ser = timed([&] { a = run_census(F, sopts); });
        double t_par = timed([&] { b = run_census(F, popts); });
        std::printf("census over q = %llu (%zu rows)\n",
                    (unsigned long long)F.size(), a.size());
        std::printf("  serial : %8.3fs\n", t_ser);
        std::printf("  openmp : %8.3fs  (speedup %.2fx)\n", t_par,
                    t_par > 0 ? t_ser / t_par : 0.0);
        if (a.size() != b.size()) {
            std::fprintf(stderr, "row count mismatch\n");
            return 1;
        }
    }
    return 0;
}
