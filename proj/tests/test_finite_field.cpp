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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "kummer/finite_field.hpp"

using namespace kummer;

namespace {

// Exhaustive cube table: index of a -> sorted indices of all z with z^3 = a.
std::map<std::uint64_t, std::vector<std::uint64_t>> cube_table(const FiniteField& F) {
    std::map<std::uint64_t, std::vector<std::uint64_t>> table;
    for (std::uint64_t i = 0; i < F.size(); ++i) {
        FieldElement z = F.element_at(i);
        table[(z * z * z).index()].push_back(i);
    }
    return table;
}

std::vector<std::uint64_t> sorted_indices(const std::vector<FieldElement>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& e : v) out.push_back(e.index());
    std::sort(out.begin(), out.end());
    return out;
}

// 109 - 1 = 4 * 27 exercises a deep 3-Sylow subgroup in the cube-root path
const std::vector<std::pair<std::uint64_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {13, 1}, {19, 1}, {109, 1},
    {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

}  // namespace

TEST_CASE("field construction and determinism") {
    const FiniteField& F7 = FiniteField::get(7, 1);
    CHECK(F7.size() == 7);
    CHECK(F7.modulus().empty());

    const FiniteField& F4 = FiniteField::get(2, 2);
    CHECK(F4.size() == 4);
    // exhaustive: t^2 + t + 1 is the only irreducible monic quadratic over F_2
    {
        int irreducible_count = 0;
        std::vector<std::uint64_t> only;
        for (std::uint64_t c0 = 0; c0 < 2; ++c0) {
            for (std::uint64_t c1 = 0; c1 < 2; ++c1) {
                bool has_root = false;
                for (std::uint64_t x = 0; x < 2; ++x) {
                    if ((x * x + c1 * x + c0) % 2 == 0) has_root = true;
                }
                if (!has_root) {
                    ++irreducible_count;
                    only = {c0, c1, 1};
                }
            }
        }
        CHECK(irreducible_count == 1);
        CHECK(F4.modulus() == only);
        CHECK(F4.modulus() == std::vector<std::uint64_t>{1, 1, 1});
    }

    CHECK_THROWS_AS(FiniteField::get(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::get(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::get(2, 40), std::invalid_argument);  // over default bound

    // interning: repeated construction yields the same object and encodings
    CHECK(&FiniteField::get(2, 2) == &F4);
    CHECK(FiniteField::find_canonical_modulus(2, 2) == F4.modulus());
    CHECK(FiniteField::find_canonical_modulus(2, 4)
          == FiniteField::find_canonical_modulus(2, 4));
}

TEST_CASE("q mod 3 predicate") {
    CHECK(FiniteField::get(7, 1).q_mod3_is_1());
    CHECK(FiniteField::get(2, 2).q_mod3_is_1());
    CHECK_FALSE(FiniteField::get(5, 1).q_mod3_is_1());
}

TEST_CASE("element arithmetic basics") {
    const FiniteField& F7 = FiniteField::get(7, 1);
    CHECK(F7.element({2}).inverse() == F7.element({4}));
    CHECK((F7.element({3}) + F7.element({5})).index() == 1);
    CHECK((F7.element({3}) * F7.element({5})).index() == 1);
    CHECK_THROWS_AS(F7.zero().inverse(), std::domain_error);

    const FiniteField& F9 = FiniteField::get(3, 2);
    // field axioms, exhaustively over the 81 pairs
    for (std::uint64_t i = 0; i < 9; ++i) {
        FieldElement a = F9.element_at(i);
        CHECK(a.index() == i);
        for (std::uint64_t j = 0; j < 9; ++j) {
            FieldElement b = F9.element_at(j);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            for (std::uint64_t k = 0; k < 9; ++k) {
                FieldElement c = F9.element_at(k);
                CHECK(a * c + b * c == (a + b) * c);
            }
        }
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == F9.one());
        }
    }

    // elements of different fields must not mix
    CHECK_THROWS_AS(F7.one() + F9.one(), std::invalid_argument);
}

TEST_CASE("unit group order") {
    for (auto [p, r] : kSmallFields) {
        const FiniteField& F = FiniteField::get(p, r);
        for (std::uint64_t i = 1; i < F.size(); ++i) {
            CHECK(F.element_at(i).pow(F.size() - 1).is_one());
        }
    }
}

TEST_CASE("cube roots against the exhaustive table") {
    const FiniteField& F7 = FiniteField::get(7, 1);
    CHECK(sorted_indices(cube_roots(F7.zero())) == std::vector<std::uint64_t>{0});
    CHECK(sorted_indices(cube_roots(F7.one()))
          == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(cube_roots(F7.element({3})).empty());

    for (auto [p, r] : kSmallFields) {
        const FiniteField& F = FiniteField::get(p, r);
        auto table = cube_table(F);
        std::uint64_t total = 0;
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            FieldElement a = F.element_at(i);
            auto roots = cube_roots(a);
            for (const auto& z : roots) CHECK(z * z * z == a);
            std::vector<std::uint64_t> expected;
            if (auto it = table.find(i); it != table.end()) expected = it->second;
            CHECK(sorted_indices(roots) == expected);
            if (F.size() % 3 == 1 && !a.is_zero()) {
                CHECK((roots.size() == 0 || roots.size() == 3));
            } else {
                CHECK(roots.size() <= 1);
            }
            total += roots.size();
        }
        CHECK(total == F.size());
    }
}

TEST_CASE("squares against the exhaustive table") {
    const FiniteField& F13 = FiniteField::get(13, 1);
    CHECK(is_square(F13.element({4})));  // 2^2
    CHECK(is_square(F13.zero()));
    const FiniteField& F7 = FiniteField::get(7, 1);
    CHECK_FALSE(is_square(F7.element({3})));

    for (auto [p, r] : kSmallFields) {
        const FiniteField& F = FiniteField::get(p, r);
        std::vector<bool> sq(F.size(), false);
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            FieldElement z = F.element_at(i);
            sq[(z * z).index()] = true;
        }
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            CHECK(is_square(F.element_at(i)) == sq[i]);
        }
    }
}

TEST_CASE("multiplicative order") {
    const FiniteField& F7 = FiniteField::get(7, 1);
    CHECK(mul_order(F7.one()) == 1);
    CHECK(mul_order(F7.element({3})) == 6);
    CHECK_THROWS_AS(mul_order(F7.zero()), std::domain_error);

    for (auto [p, r] : kSmallFields) {
        const FiniteField& F = FiniteField::get(p, r);
        for (std::uint64_t i = 1; i < F.size(); ++i) {
            FieldElement a = F.element_at(i);
            std::uint64_t o = mul_order(a);
            CHECK((F.size() - 1) % o == 0);
            CHECK(a.pow(o).is_one());
            // exhaustive minimality
            FieldElement acc = a;
            for (std::uint64_t k = 1; k < o; ++k) {
                CHECK_FALSE(acc.is_one());
                acc = acc * a;
            }
        }
    }
}

TEST_CASE("primitive cube root of unity") {
    for (auto [p, r] : kSmallFields) {
        const FiniteField& F = FiniteField::get(p, r);
        if (!F.q_mod3_is_1()) {
            CHECK_THROWS_AS(primitive_cube_root(F), std::invalid_argument);
            continue;
        }
        FieldElement w = primitive_cube_root(F);
        CHECK_FALSE(w.is_one());
        CHECK((w * w * w).is_one());
    }
}

TEST_CASE("boundary-sized fields under the default bound") {
    // the largest binary field and the largest prime field below 2^20
    const FiniteField& F = FiniteField::get(2, 20);
    CHECK(F.size() == (std::uint64_t(1) << 20));
    FieldElement a = F.element_at(123456);
    CHECK(a.pow(F.size() - 1).is_one());
    for (const FieldElement& z : cube_roots(a)) CHECK(z * z * z == a);

    const FiniteField& Fp = FiniteField::get(999983, 1);
    FieldElement b = Fp.element({54321});
    CHECK(b.pow(Fp.size() - 1).is_one());
    CHECK(b * b.inverse() == Fp.one());
    auto roots = cube_roots(b);
    for (const FieldElement& z : roots) CHECK(z * z * z == b);
    CHECK(is_square(b * b));
}

TEST_CASE("parsing") {
    CHECK(&parse_field_spec("7") == &FiniteField::get(7, 1));
    CHECK(&parse_field_spec("2^2") == &FiniteField::get(2, 2));
    CHECK_THROWS_AS(parse_field_spec("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("6"), std::invalid_argument);

    const FiniteField& F4 = FiniteField::get(2, 2);
    CHECK(parse_element(F4, "1,1").index() == 3);
    CHECK(parse_element(F4, "1").is_one());
    CHECK(parse_element(F4, "1,1").str() == "1,1");
    CHECK_THROWS_AS(parse_element(F4, "1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(F4, "a"), std::invalid_argument);
}
