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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kummer/serialize.hpp"

namespace {

using namespace kummer;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonArgs {
    std::string field_spec;
    std::string b_text, c_text;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    std::uint64_t max_q = FiniteField::kDefaultMaxQ;
    unsigned max_witness_degree = 4;
    unsigned max_d = 4;
    unsigned long long chain_budget = 10'000'000;
    unsigned levels = 1;
    unsigned ext = 1;
    bool serial = false;
    std::uint64_t mawu_limit = 10000;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw io_error("cannot open output file " + out_path);
    os << text;
    if (!os) throw io_error("write failed for " + out_path);
}

TowerSpec parse_spec(const CommonArgs& args) {
    const FiniteField& F = parse_field_spec(args.field_spec, args.max_q);
    return TowerSpec::make(F, parse_element(F, args.b_text),
                           parse_element(F, args.c_text));
}

std::string classification_text(const Classification& cls,
                                const CriterionVerdict* verdict) {
    std::ostringstream os;
    os << cls.tag_str() << '\n';
    if (cls.alpha) os << "alpha = " << cls.alpha->str() << '\n';
    if (cls.beta) os << "beta = " << cls.beta->str() << '\n';
    switch (cls.tag) {
        case ClassTag::Type1:
            os << "shape: y^3 = x(x+alpha)(x+beta)\n";
            break;
        case ClassTag::Type2:
            os << "shape: y^3 = x^2(x+alpha)\n";
            break;
        case ClassTag::Type3:
            os << "shape: y^3 = x(x+alpha)^2\n";
            break;
        case ClassTag::IrreducibleInfiniteGenus:
            os << "f is irreducible over F_q\n";
            break;
        case ClassTag::Invalid:
            os << "reason: " << cls.reason << '\n';
            break;
    }
    if (cls.tag == ClassTag::Type1 || cls.tag == ClassTag::Type2
        || cls.tag == ClassTag::Type3) {
        os << "note: good candidate (necessary condition only; goodness is "
              "not asserted)\n";
    }
    if (verdict) {
        if (verdict->infinite_genus) {
            os << "criterion: infinite_genus, d=" << verdict->d << ", witness "
               << verdict->witness->str() << ", N={";
            bool first = true;
            for (int n : verdict->N) {
                if (!first) os << ',';
                os << n;
                first = false;
            }
            os << "}\n";
        } else {
            os << "criterion: not_applicable (" << reason_str(verdict->reason)
               << "; this never asserts finite genus)\n";
        }
    }
    return os.str();
}

int cmd_classify(const CommonArgs& args) {
    TowerSpec spec = parse_spec(args);
    Classification cls = classify(spec);
    std::optional<CriterionVerdict> verdict;
    if (cls.tag == ClassTag::IrreducibleInfiniteGenus) {
        verdict = check_criterion(spec,
                                  CriterionOptions{args.max_d,
                                                   args.max_witness_degree});
    }
    if (args.format == "json") {
        Json j;
        j["classification"] = to_json(cls);
        if (verdict) j["criterion"] = to_json(*verdict);
        emit(j.dump(), args.out_path);
    } else {
        emit(classification_text(cls, verdict ? &*verdict : nullptr),
             args.out_path);
    }
    return cls.tag == ClassTag::Invalid ? 2 : 0;
}

std::string report_text(const RamificationReport& rep) {
    std::ostringstream os;
    os << "q = " << rep.bf.field->size() << ", f = " << rep.bf.f.str()
       << ", u = " << rep.bf.u.str() << '\n';
    os << "genus = " << rep.genus << '\n';
    os << "Diff(F/F_q(x)) = " << updivisor_str(rep.diff_x) << "   (degree "
       << updivisor_degree(rep.diff_x) << ")\n";
    os << "Diff(F/F_q(y)) = " << updivisor_str(rep.yside.diff) << "   (degree "
       << updivisor_degree(rep.yside.diff) << ")\n";
    os << "N = {";
    bool first = true;
    for (int n : rep.N) {
        if (!first) os << ',';
        os << n;
        first = false;
    }
    os << "}\n";
    os << "galois_over_x = " << (rep.galois_over_x ? "true" : "false") << '\n';
    os << "tame_over_y = " << (rep.yside.tame ? "true" : "false") << '\n';
    if (!rep.yside.wild_suspects.empty()) {
        os << "wild places:";
        for (const UpPlace& Q : rep.yside.wild_suspects) os << ' ' << Q.str();
        os << '\n';
    }
    return os.str();
}

int cmd_analyze(const CommonArgs& args) {
    TowerSpec spec = parse_spec(args);
    Classification cls = classify(spec);
    if (cls.tag == ClassTag::Invalid) {
        emit("invalid: " + cls.reason, args.out_path);
        return 2;
    }
    BasicField bf = BasicField::make(*spec.field, spec.b, spec.c);
    RamificationReport rep = analyze(bf);
    if (args.format == "json") {
        emit(to_json(rep).dump(), args.out_path);
    } else {
        emit(report_text(rep), args.out_path);
    }
    return 0;
}

int cmd_census(const CommonArgs& args) {
    const FiniteField& F = parse_field_spec(args.field_spec, args.max_q);
    if (!F.q_mod3_is_1()) {
        emit("invalid: q is not congruent to 1 mod 3", args.out_path);
        return 2;
    }
    CensusOptions opts;
    opts.levels = args.levels;
    opts.ext = args.ext;
    opts.chain_budget = args.chain_budget;
    opts.criterion = CriterionOptions{args.max_d, args.max_witness_degree};
    opts.parallel = !args.serial;
    std::vector<CensusRow> rows = run_census(F, opts);
    if (args.format == "json") {
        emit(census_to_json(F, rows).dump(), args.out_path);
    } else {
        std::ostringstream os;
        census_to_csv(os, F, rows, opts.levels);
        emit(os.str(), args.out_path);
    }
    return 0;
}

int cmd_count(const CommonArgs& args) {
    TowerSpec spec = parse_spec(args);
    if (!spec.field->q_mod3_is_1() || (spec.b.is_zero() && spec.c.is_zero())) {
        emit("invalid: not a tower spec (q must be 1 mod 3 and (b,c) != (0,0))",
             args.out_path);
        return 2;
    }
    ChainOptions opts{args.ext, args.chain_budget, !args.serial};
    std::vector<LevelData> levels = count_chain_levels(spec, args.levels, opts);
    if (args.format == "json") {
        Json arr = Json::array();
        for (const LevelData& ld : levels) arr.push_back(to_json(ld));
        emit(arr.dump(), args.out_path);
    } else if (args.format == "csv") {
        std::ostringstream os;
        os << "level,extension_degree,ext,chain_count,estimator_num,estimator_den\n";
        for (const LevelData& ld : levels) {
            RationalValue est = splitting_estimator(ld);
            os << ld.level << ',' << ld.extension_degree_over_F0 << ','
               << ld.ext << ',' << ld.chain_count << ',' << est.num << ','
               << est.den << '\n';
        }
        emit(os.str(), args.out_path);
    } else {
        std::ostringstream os;
        os << "chains over F_(q^" << args.ext << "), levels 0.." << args.levels
           << " (affine chain counts, a proxy for the splitting rate)\n";
        for (const LevelData& ld : levels) {
            RationalValue est = splitting_estimator(ld);
            os << "level " << ld.level << ": count = " << ld.chain_count
               << ", count/3^level = " << est.num << '/' << est.den << '\n';
        }
        emit(os.str(), args.out_path);
    }
    return 0;
}

int cmd_verify_mawu(const CommonArgs& args) {
    MawuReport rep = verify_mawu(args.mawu_limit);
    if (args.format == "json") {
        emit(to_json(rep).dump(), args.out_path);
    } else {
        std::ostringstream os;
        os << "primes p <= " << rep.limit << " with p = 1,7 (mod 12): "
           << rep.primes_checked << " checked, "
           << rep.violations_mod3.size() + rep.violations_square.size()
           << " violations\n";
        os << "claims: p = 1 mod 3 and -3^(-1) is a square mod p\n";
        for (auto p : rep.violations_mod3) os << "violation (mod 3): " << p << '\n';
        for (auto p : rep.violations_square) os << "violation (square): " << p << '\n';
        emit(os.str(), args.out_path);
    }
    return 0;
}

void add_common_output(CLI::App* cmd, CommonArgs& args,
                       const std::string& formats) {
    cmd->add_option("--format", args.format, "output format: " + formats)
        ->capture_default_str()
        ->envname("KUMMER_FORMAT");
    cmd->add_option("--out", args.out_path, "write output to a file (default stdout)");
    cmd->add_option("--seed", args.seed,
                    "seed for randomized factorization internals")
        ->capture_default_str()
        ->envname("KUMMER_SEED");
    cmd->add_option("--max-q", args.max_q, "largest allowed field size")
        ->capture_default_str()
        ->envname("KUMMER_MAX_Q");
}

void add_field(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--field", args.field_spec,
                    "field spec p or p^r, e.g. 7 or 2^2")
        ->required();
}

void add_bc(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--b", args.b_text,
                    "coefficient b (integer, or c0,c1,... for extensions)")
        ->required();
    cmd->add_option("--c", args.c_text, "coefficient c, same syntax as --b")
        ->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic Kummer towers y^3 = x(x^2+bx+c): classification, "
                 "ramification analysis, census sweeps, chain counting"};
    app.require_subcommand(1);
    app.footer("Options marked with an environment variable can also be set "
               "via the KUMMER_ prefix, e.g. KUMMER_SEED=1.");

    CommonArgs args;
    int (*action)(const CommonArgs&) = nullptr;

    CLI::App* c1 = app.add_subcommand(
        "classify", "classify (q, b, c) into the three candidate shapes or "
                    "the irreducible case, with the infinite-genus criterion");
    add_field(c1, args);
    add_bc(c1, args);
    add_common_output(c1, args, "text|json");
    c1->add_option("--max-witness-degree", args.max_witness_degree,
                   "bound on the witness place degree in the criterion search")
        ->capture_default_str()
        ->envname("KUMMER_MAX_WITNESS_DEGREE");
    c1->add_option("--max-d", args.max_d, "bound on d in the criterion search")
        ->capture_default_str();
    c1->callback([&] { action = cmd_classify; });

    CLI::App* c2 = app.add_subcommand(
        "analyze", "exact ramification report for the basic function field: "
                   "different divisors, genus, ramified downstairs degrees");
    add_field(c2, args);
    add_bc(c2, args);
    add_common_output(c2, args, "text|json");
    c2->callback([&] { action = cmd_analyze; });

    CLI::App* c3 = app.add_subcommand(
        "census", "sweep all (b, c) over the field and emit one row per tower");
    add_field(c3, args);
    add_common_output(c3, args, "csv|json");
    c3->add_option("--levels", args.levels, "chain-count levels 0..L per row")
        ->capture_default_str();
    c3->add_option("--ext", args.ext, "count chains over F_(q^ext)")
        ->capture_default_str();
    c3->add_option("--chain-budget", args.chain_budget,
                   "bound on q^ext * 3^levels per row")
        ->capture_default_str()
        ->envname("KUMMER_CHAIN_BUDGET");
    c3->add_option("--max-witness-degree", args.max_witness_degree,
                   "criterion witness degree bound")
        ->capture_default_str();
    c3->add_flag("--serial", args.serial, "disable the parallel row kernel");
    c3->callback([&] { action = cmd_census; });
    c3->get_option("--format")->default_str("csv");

    CLI::App* c4 = app.add_subcommand(
        "count", "count chains (x_0..x_L) with x_{i+1}^3 = x_i f(x_i) and the "
                 "splitting-rate estimator");
    add_field(c4, args);
    add_bc(c4, args);
    add_common_output(c4, args, "text|json|csv");
    c4->add_option("--levels", args.levels, "largest level L")
        ->capture_default_str();
    c4->add_option("--ext", args.ext, "count over F_(q^ext)")
        ->capture_default_str();
    c4->add_option("--chain-budget", args.chain_budget,
                   "bound on q^ext * 3^levels")
        ->capture_default_str()
        ->envname("KUMMER_CHAIN_BUDGET");
    c4->add_flag("--serial", args.serial, "disable the parallel kernel");
    c4->callback([&] { action = cmd_count; });

    CLI::App* c5 = app.add_subcommand(
        "verify-mawu", "sweep primes p = 1,7 (mod 12) checking p = 1 mod 3 "
                       "and that -3^(-1) is a square mod p");
    c5->add_option("--limit", args.mawu_limit, "largest prime checked")
        ->capture_default_str();
    add_common_output(c5, args, "text|json");
    c5->callback([&] { action = cmd_verify_mawu; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    set_factor_seed(args.seed);
    try {
        return action(args);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
