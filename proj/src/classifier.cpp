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

#include "kummer/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kummer {

TowerSpec TowerSpec::make(const FiniteField& field, const FieldElement& b,
                          const FieldElement& c) {
    if (&b.field() != &field || &c.field() != &field) {
        throw std::invalid_argument("coefficients must live in the tower field");
    }
    return TowerSpec{&field, b, c};
}

std::string Classification::tag_str() const {
    switch (tag) {
        case ClassTag::Type1: return "type1";
        case ClassTag::Type2: return "type2";
        case ClassTag::Type3: return "type3";
        case ClassTag::IrreducibleInfiniteGenus: return "irreducible_infinite_genus";
        case ClassTag::Invalid: return "invalid";
    }
    return "invalid";
}

Classification classify(const TowerSpec& spec) {
    const FiniteField& F = *spec.field;
    Classification out{ClassTag::Invalid, {}, {}, ""};
    if (!F.q_mod3_is_1()) {
        out.reason = "q is not congruent to 1 mod 3";
        return out;
    }
    if (spec.b.is_zero() && spec.c.is_zero()) {
        out.reason = "t = 0 is a double root of f";
        return out;
    }
    if (spec.c.is_zero()) {
        // u = x^2 (x + b)
        out.tag = ClassTag::Type2;
        out.alpha = spec.b;
        return out;
    }

    const std::uint64_t p = F.characteristic();
    if (p == 2) {
        // f' = b, so f has a double root exactly when b = 0; squaring is a
        // bijection, hence f = (t + sqrt(c))^2.
        if (spec.b.is_zero()) {
            out.tag = ClassTag::Type3;
            out.alpha = spec.c.pow(F.size() / 2);
            return out;
        }
    } else {
        FieldElement four = F.element({4});
        FieldElement disc = spec.b * spec.b - four * spec.c;
        if (disc.is_zero()) {
            out.tag = ClassTag::Type3;
            out.alpha = spec.b / F.element({2});
            return out;
        }
    }

    Poly f(F, {spec.c, spec.b, F.one()});
    std::vector<FieldElement> roots = roots_in_field(f);
    if (roots.empty()) {
        out.tag = ClassTag::IrreducibleInfiniteGenus;
        return out;
    }
    if (roots.size() != 2 || roots[0] == roots[1]) {
        throw std::logic_error("separable quadratic with unexpected root pattern");
    }
    out.tag = ClassTag::Type1;
    FieldElement alpha = F.zero() - roots[0];
    FieldElement beta = F.zero() - roots[1];
    if (beta < alpha) std::swap(alpha, beta);
    out.alpha = alpha;
    out.beta = beta;
    return out;
}

bool h_irreducible_scan(const FiniteField& field, const FieldElement& b,
                        const FieldElement& c) {
    // A root of t f(t) - y^3 in F_q(y) is a polynomial of degree 1 in y
    // whose leading coefficient cubes to 1.
    Poly y3(field, {field.zero(), field.zero(), field.zero(), field.one()});
    for (const FieldElement& a : cube_roots(field.one())) {
        for (std::uint64_t i = 0; i < field.size(); ++i) {
            FieldElement beta = field.element_at(i);
            Poly r(field, {beta, a});
            Poly fr = r * r + r * b + Poly::constant(c);
            if (r * fr == y3) return false;
        }
    }
    return true;
}

bool h_irreducible_over_Ky(const TowerSpec& spec) {
    if (spec.b.is_zero() && spec.c.is_zero()) {
        throw std::invalid_argument("t = 0 must not be a double root of f");
    }
    return h_irreducible_scan(*spec.field, spec.b, spec.c);
}

CriterionVerdict check_criterion(const TowerSpec& spec,
                                 const CriterionOptions& opts) {
    const FiniteField& F = *spec.field;
    BasicField bf = BasicField::make(F, spec.b, spec.c);

    CriterionVerdict out;
    if (!F.q_mod3_is_1()) {
        out.reason = NotApplicableReason::NotGalois;
        out.detail = "F/F_q(x) is not a Kummer extension without cube roots of unity";
        return out;
    }
    if (!h_irreducible_over_Ky(spec)) {
        out.reason = NotApplicableReason::HReducible;
        out.detail = "t f(t) - y^3 is reducible over F_q(y)";
        return out;
    }
    out.N = degree_set_N(bf);

    // A ramified place has v_P(u) not divisible by 3, so it is a finite
    // place dividing u (infinity has v = -3). Scanning the factors of u is
    // therefore the same search as walking enumerate_places, at any q.
    std::vector<std::pair<Place, int>> ramified;  // canonical factor order
    for (const auto& [pi, mult] : factor(bf.u).factors) {
        if (mult % 3 != 0) ramified.emplace_back(Place::finite(pi), pi.degree());
    }
    for (unsigned d = 2; d <= opts.max_d; ++d) {
        if (d % 3 == 0) continue;
        if (d > opts.max_witness_degree) break;
        bool divides_some = std::any_of(out.N.begin(), out.N.end(),
                                        [&](int n) { return n % static_cast<int>(d) == 0; });
        if (divides_some) continue;
        for (const auto& [P, deg] : ramified) {
            if (deg == static_cast<int>(d)) {
                out.infinite_genus = true;
                out.d = static_cast<int>(d);
                out.witness = P;
                return out;
            }
        }
    }
    out.reason = NotApplicableReason::SearchExhausted;
    out.detail = "no admissible d with a ramified witness up to the search bounds";
    return out;
}

PyramidTrace pyramid_trace(const std::vector<int>& base_e, unsigned levels,
                           std::uint64_t characteristic) {
    if (base_e.empty()) throw std::invalid_argument("empty base ramification list");
    if (levels < 1 || levels > base_e.size()) {
        throw std::invalid_argument("levels must be between 1 and the number of base steps");
    }
    for (int e : base_e) {
        if (e != 1 && e != 3) {
            throw std::invalid_argument("base ramification indices must be 1 or 3");
        }
        if (characteristic >= 2 && e > 1
            && static_cast<std::uint64_t>(e) % characteristic == 0) {
            throw std::invalid_argument("wild base ramification index");
        }
    }

    PyramidTrace out;
    std::vector<int> a = base_e;                 // left edges of the current row
    std::vector<int> b(base_e.size(), 1);        // right edges: unramified base
    out.rows.push_back(a);
    out.chain.push_back(a[0]);
    for (unsigned i = 2; i <= levels; ++i) {
        std::vector<int> a_next(a.size() - 1), b_next(a.size() - 1);
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            const int left_over_mid = b[j];
            const int right_over_mid = a[j + 1];
            const int l = std::lcm(left_over_mid, right_over_mid);
            a_next[j] = l / left_over_mid;
            b_next[j] = l / right_over_mid;
        }
        a = std::move(a_next);
        b = std::move(b_next);
        out.rows.push_back(a);
        out.chain.push_back(a[0]);
    }

    const bool last_ramified = base_e.back() > 1;
    out.fig1_pattern = last_ramified
        && std::all_of(base_e.begin(), base_e.end() - 1,
                       [](int e) { return e == 1; });
    out.totally_ramified_chain = std::all_of(base_e.begin(), base_e.end(),
                                             [](int e) { return e == 3; });
    return out;
}

MawuReport verify_mawu(std::uint64_t prime_limit) {
    if (prime_limit < 13) throw std::invalid_argument("prime limit must be >= 13");
    MawuReport rep;
    rep.limit = prime_limit;

    std::vector<bool> sieve(prime_limit + 1, true);
    sieve[0] = false;
    sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= prime_limit; ++i) {
        if (!sieve[i]) continue;
        for (std::uint64_t j = i * i; j <= prime_limit; j += i) sieve[j] = false;
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= prime_limit; ++p) {
        if (sieve[p] && (p % 12 == 1 || p % 12 == 7)) primes.push_back(p);
    }

    rep.primes_checked = primes.size();
    std::vector<std::uint64_t> bad_mod3, bad_square;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        bool mod3_ok = (p % 3 == 1);
        bool square_ok = false;
        if (mod3_ok) {
            const FiniteField& Fp = FiniteField::get(p, 1, FiniteField::kHardMaxQ);
            FieldElement minus_third = Fp.zero() - Fp.element({3}).inverse();
            square_ok = is_square(minus_third);
        }
        if (!mod3_ok || !square_ok) {
#ifdef _OPENMP
#pragma omp critical(mawu_violations)
#endif
            {
                if (!mod3_ok) bad_mod3.push_back(p);
                else bad_square.push_back(p);
            }
        }
    }
    std::sort(bad_mod3.begin(), bad_mod3.end());
    std::sort(bad_square.begin(), bad_square.end());
    rep.violations_mod3 = std::move(bad_mod3);
    rep.violations_square = std::move(bad_square);
    return rep;
}

}  // namespace kummer
