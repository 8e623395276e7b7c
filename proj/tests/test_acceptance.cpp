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

// End-to-end acceptance suite. Each case checks one acceptance criterion at
// its stated tolerance and prints a single PASS/FAIL line. Two criteria
// (parity law, criterion-soundness wiring) encode a claim that exact
// computation refutes for roughly half of the irreducible polynomials in odd
// characteristic; they are kept as stated and report their counterexamples.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <sstream>

#include "kummer/serialize.hpp"

using namespace kummer;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                             - t0)
            .count();
    }
};

void report(int id, const std::string& name, bool pass, double secs,
            const std::string& note = "") {
    std::printf("ACCEPTANCE C%02d %-34s %s (%.2fs)%s%s\n", id, name.c_str(),
                pass ? "PASS" : "FAIL", secs, note.empty() ? "" : ": ",
                note.c_str());
    std::fflush(stdout);
}

const std::vector<std::pair<std::uint64_t, unsigned>> kSweepFields = {
    {2, 2}, {7, 1}, {13, 1}, {2, 4}, {19, 1}, {5, 2}};  // q = 4,7,13,16,19,25

std::vector<BasicField> irreducible_cases(const FiniteField& F) {
    std::vector<BasicField> out;
    for (std::uint64_t bi = 0; bi < F.size(); ++bi) {
        for (std::uint64_t ci = 0; ci < F.size(); ++ci) {
            if (bi == 0 && ci == 0) continue;
            FieldElement b = F.element_at(bi), c = F.element_at(ci);
            Poly f(F, {c, b, F.one()});
            if (roots_in_field(f).empty()) out.push_back(BasicField::make(F, b, c));
        }
    }
    return out;
}

std::vector<BasicField> all_valid(const FiniteField& F) {
    std::vector<BasicField> out;
    for (std::uint64_t bi = 0; bi < F.size(); ++bi) {
        for (std::uint64_t ci = 0; ci < F.size(); ++ci) {
            if (bi == 0 && ci == 0) continue;
            out.push_back(BasicField::make(F, F.element_at(bi), F.element_at(ci)));
        }
    }
    return out;
}

std::string bc_str(const BasicField& bf) {
    std::ostringstream os;
    os << "q=" << bf.field->size() << " b=" << bf.b.str() << " c=" << bf.c.str();
    return os.str();
}

}  // namespace

TEST_CASE("C1 irreducible-case genus and x-side different") {
    Timer timer;
    bool pass = true;
    std::string note;
    int cases = 0;
    for (auto [p, r] : kSweepFields) {
        const FiniteField& F = FiniteField::get(p, r);
        for (const BasicField& bf : irreducible_cases(F)) {
            ++cases;
            bool ok = genus(bf) == 1;
            UpDivisor d = different_over_x(bf);
            auto q1 = places_above_x(bf, Place::finite(Poly::variable(F)));
            auto q2 = places_above_x(bf, Place::finite(bf.f));
            UpDivisor expected;
            ok = ok && q1.size() == 1 && q2.size() == 1;
            if (ok) {
                updivisor_add(expected, q1[0], 2);
                updivisor_add(expected, q2[0], 2);
                ok = d == expected && q1[0].degree() == 1 && q2[0].degree() == 2
                     && q1[0].e == 3 && q2[0].e == 3;
            }
            if (!ok && pass) {
                pass = false;
                note = "first failure at " + bc_str(bf);
            }
        }
    }
    double secs = timer.seconds();
    if (pass) note = std::to_string(cases) + " irreducible cases, all 2Q1+2Q2 with genus 1";
    bool in_time = secs < 10.0;
    report(1, "irreducible-case genus", pass && in_time, secs, note);
    CHECK(pass);
    CHECK(in_time);
}

TEST_CASE("C2 parity law for N and the support degrees") {
    Timer timer;
    int cases = 0, violations = 0;
    std::string first;
    for (auto [p, r] : kSweepFields) {
        const FiniteField& F = FiniteField::get(p, r);
        for (const BasicField& bf : irreducible_cases(F)) {
            ++cases;
            YsideAnalysis ys = different_over_y(bf);
            bool ok = true;
            for (const YsidePlace& rec : ys.support) {
                if (rec.deg_below_y % 2 == 0) ok = false;
                if (rec.Q.degree() != 1 && rec.Q.degree() != 3) ok = false;
            }
            if (!ok) {
                ++violations;
                if (first.empty()) {
                    std::ostringstream os;
                    os << bc_str(bf) << " has N = {";
                    bool sep = false;
                    for (int n : degree_set_N(bf)) {
                        if (sep) os << ',';
                        os << n;
                        sep = true;
                    }
                    os << "}";
                    first = os.str();
                }
            }
        }
    }
    double secs = timer.seconds();
    bool pass = violations == 0 && secs < 30.0;
    std::string note = violations == 0
        ? std::to_string(cases) + " irreducible cases, all odd"
        : std::to_string(violations) + "/" + std::to_string(cases)
              + " irreducible cases violate the parity claim; first: " + first
              + " (even degrees occur whenever f + x f' is irreducible over "
                "F_q; the claim holds in characteristic 2)";
    report(2, "parity law", pass, secs, note);
    CHECK(violations == 0);
    CHECK(secs < 30.0);
}

TEST_CASE("C3 criterion soundness wiring") {
    Timer timer;
    int mismatches = 0, cases = 0;
    std::string first;
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 2}, {7, 1}, {13, 1}, {2, 4}}) {
        const FiniteField& F = FiniteField::get(p, r);
        for (std::uint64_t bi = 0; bi < F.size(); ++bi) {
            for (std::uint64_t ci = 0; ci < F.size(); ++ci) {
                if (bi == 0 && ci == 0) continue;
                ++cases;
                TowerSpec spec = TowerSpec::make(F, F.element_at(bi),
                                                 F.element_at(ci));
                bool irr = classify(spec).tag
                           == ClassTag::IrreducibleInfiniteGenus;
                CriterionVerdict v = check_criterion(spec);
                bool fires_d2 = v.infinite_genus && v.d == 2;
                if (irr != fires_d2) {
                    ++mismatches;
                    if (first.empty()) {
                        first = "q=" + std::to_string(F.size()) + " b="
                                + spec.b.str() + " c=" + spec.c.str()
                                + (irr ? " (irreducible but criterion "
                                         "not applicable: even N)"
                                       : " (criterion fired on reducible f)");
                    }
                }
            }
        }
    }
    double secs = timer.seconds();
    bool pass = mismatches == 0 && secs < 60.0;
    std::string note = mismatches == 0
        ? std::to_string(cases) + " towers, equivalence exact"
        : std::to_string(mismatches) + "/" + std::to_string(cases)
              + " mismatches; first: " + first;
    report(3, "criterion soundness wiring", pass, secs, note);
    CHECK(mismatches == 0);
    CHECK(secs < 60.0);
}

TEST_CASE("C4 Hurwitz cross-consistency") {
    Timer timer;
    bool pass = true;
    std::string note;
    int cases = 0;
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 2}, {7, 1}, {13, 1}}) {
        const FiniteField& F = FiniteField::get(p, r);
        for (const BasicField& bf : all_valid(F)) {
            ++cases;
            long long g = genus(bf);
            long long deg_y = updivisor_degree(different_over_y(bf).diff);
            if (g != (deg_y - 4) / 2 || (deg_y - 4) % 2 != 0) {
                if (pass) note = "first failure at " + bc_str(bf);
                pass = false;
            }
        }
    }
    double secs = timer.seconds();
    if (pass) note = std::to_string(cases) + " towers, both sides agree";
    report(4, "Hurwitz cross-consistency", pass, secs, note);
    CHECK(pass);
}

TEST_CASE("C5 divisor identities") {
    Timer timer;
    bool pass = true;
    std::string note;
    int cases = 0;
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 2}, {7, 1}, {13, 1}}) {
        const FiniteField& F = FiniteField::get(p, r);
        RationalFunction one = RationalFunction::from_poly(Poly::constant(F.one()));
        RationalFunction x = RationalFunction::from_poly(Poly::variable(F));
        for (const BasicField& bf : all_valid(F)) {
            ++cases;
            Poly upr = bf.u.derivative();
            if (F.characteristic() != 2) upr = upr * F.element({3}).inverse();
            RationalFunction zg = RationalFunction::from_poly(upr);
            bool ok = pole_updivisor(bf, one, 1) == pole_updivisor(bf, x, 0)
                      && updivisor_degree(principal_updivisor(bf, x, 0)) == 0
                      && updivisor_degree(principal_updivisor(bf, one, 1)) == 0
                      && updivisor_degree(principal_updivisor(bf, zg, -2)) == 0;
            if (!ok) {
                if (pass) note = "first failure at " + bc_str(bf);
                pass = false;
            }
        }
    }
    double secs = timer.seconds();
    if (pass) note = std::to_string(cases) + " towers, (y)inf = (x)inf and deg 0";
    report(5, "divisor identities", pass, secs, note);
    CHECK(pass);
}

TEST_CASE("C6 downstairs oracle equivalence") {
    Timer timer;
    int unsound = 0, extras = 0, cases = 0;
    std::string detail;
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 2}, {7, 1}}) {
        const FiniteField& F = FiniteField::get(p, r);
        for (const BasicField& bf : all_valid(F)) {
            ++cases;
            OracleComparison cmp = compare_yside_oracle(bf, 3);
            unsound += cmp.support_without_flag;
            if (!cmp.oracle_only.empty()) {
                extras += static_cast<int>(cmp.oracle_only.size());
                // index-divisor caveat: a flagged-but-unramified place means
                // the equation order is not maximal there; reported, never
                // silently dropped
                for (const Poly& g : cmp.oracle_only) {
                    std::printf("  C06 note: %s flags g(y) = %s without a "
                                "ramified place above (index divisor)\n",
                                bc_str(bf).c_str(), g.str("y").c_str());
                }
            }
        }
    }
    double secs = timer.seconds();
    bool pass = unsound == 0 && secs < 120.0;
    std::string note = std::to_string(cases) + " towers, "
                       + std::to_string(extras) + " oracle-only flags, "
                       + std::to_string(unsound) + " unflagged ramified places";
    report(6, "downstairs oracle equivalence", pass, secs, note);
    CHECK(unsound == 0);
    CHECK(secs < 120.0);
}

TEST_CASE("C7 class census over F_7") {
    Timer timer;
    const FiniteField& F7 = FiniteField::get(7, 1);
    CensusOptions opts;
    std::vector<CensusRow> rows = run_census(F7, opts);
    int irr = 0, t1 = 0, t2 = 0, t3 = 0;
    for (const CensusRow& row : rows) {
        switch (row.cls.tag) {
            case ClassTag::IrreducibleInfiniteGenus: ++irr; break;
            case ClassTag::Type1: ++t1; break;
            case ClassTag::Type2: ++t2; break;
            case ClassTag::Type3: ++t3; break;
            default: break;
        }
    }
    bool pass = rows.size() == 48 && irr == 21 && t1 == 15 && t2 == 6 && t3 == 6;
    double secs = timer.seconds();
    std::ostringstream os;
    os << "rows=" << rows.size() << " irreducible=" << irr << " type1=" << t1
       << " type2=" << t2 << " type3=" << t3;
    report(7, "class census over F_7", pass, secs, os.str());
    CHECK(pass);
}

TEST_CASE("C8 quadratic-residue sweep") {
    Timer timer;
    MawuReport rep = verify_mawu(10000);
    double secs = timer.seconds();
    bool pass = rep.clean() && secs < 5.0;
    report(8, "prime sweep (-1/3 a square)", pass, secs,
           std::to_string(rep.primes_checked) + " primes, "
               + std::to_string(rep.violations_mod3.size()
                                + rep.violations_square.size())
               + " violations");
    CHECK(rep.clean());
    CHECK(secs < 5.0);
}

TEST_CASE("C9 chain-count laws") {
    Timer timer;
    bool pass = true;
    std::string note;

    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 2}, {7, 1}, {13, 1}}) {
        const FiniteField& F = FiniteField::get(p, r);
        for (unsigned ext = 1; ext <= 2; ++ext) {
            TowerSpec spec = TowerSpec::make(F, F.zero(), F.one());
            ChainOptions opts{ext, 10'000'000, true};
            unsigned long long qe = 1;
            for (unsigned i = 0; i < ext; ++i) qe *= F.size();
            if (count_chains(spec, 0, opts).chain_count != qe) {
                pass = false;
                note = "level-0 count != q^ext";
            }
        }
    }

    const FiniteField& F4 = FiniteField::get(2, 2);
    for (const BasicField& bf : all_valid(F4)) {
        TowerSpec spec = TowerSpec::make(F4, bf.b, bf.c);
        auto levels = count_chain_levels(spec, 4);
        for (std::size_t i = 1; i < levels.size(); ++i) {
            if (levels[i].chain_count > 3 * levels[i - 1].chain_count) {
                pass = false;
                note = "growth bound violated at " + bc_str(bf);
            }
        }
    }

    TowerSpec s41 = TowerSpec::make(F4, F4.element({1}), F4.element({1}));
    for (const LevelData& ld : count_chain_levels(s41, 4)) {
        if (splitting_estimator(ld).num == 0) {
            pass = false;
            note = "estimator vanished for (4,1,1) at level "
                   + std::to_string(ld.level);
        }
    }

    double secs = timer.seconds();
    bool in_time = secs < 30.0;
    if (pass && note.empty()) {
        note = "level-0 = q^ext, growth <= 3x, estimator positive to level 4";
    }
    report(9, "chain-count laws", pass && in_time, secs, note);
    CHECK(pass);
    CHECK(in_time);
}

TEST_CASE("C10 determinism of census and analyze") {
    Timer timer;
    const FiniteField& F7 = FiniteField::get(7, 1);

    auto census_bytes = [&](bool parallel) {
        set_factor_seed(0);
        CensusOptions opts;
        opts.parallel = parallel;
        std::vector<CensusRow> rows = run_census(F7, opts);
        std::ostringstream csv;
        census_to_csv(csv, F7, rows, opts.levels);
        return csv.str() + "\n---\n" + census_to_json(F7, rows).dump();
    };
    std::string run1 = census_bytes(true);
    std::string run2 = census_bytes(true);
    std::string run3 = census_bytes(false);

    auto analyze_bytes = [&] {
        set_factor_seed(0);
        BasicField bf = BasicField::make(F7, F7.zero(), F7.one());
        return to_json(analyze(bf)).dump();
    };
    std::string a1 = analyze_bytes();
    std::string a2 = analyze_bytes();

    bool pass = run1 == run2 && run1 == run3 && a1 == a2;
    double secs = timer.seconds();
    report(10, "byte-identical reruns", pass, secs,
           pass ? "census (parallel and serial) and analyze stable"
                : "outputs differ between runs");
    CHECK(pass);
}
