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

#ifndef KUMMER_KUMMER_BASIC_HPP
#define KUMMER_KUMMER_BASIC_HPP

#include <optional>
#include <set>

#include "kummer/rational_places.hpp"

namespace kummer {

/// The basic function field F = F_q(x, y) with y^3 = u(x), u = x(x^2+bx+c).
/// Valid only for q = 1 mod 3 and (b, c) != (0, 0); both conditions are
/// checked by make(). The degree-3 extension F / F_q(x) is then Galois: the
/// constant field contains the cube roots of unity and u is never a cube.
struct BasicField {
    const FiniteField* field;
    FieldElement b, c;
    Poly f;  // x^2 + b x + c
    Poly u;  // x f(x)

    static BasicField make(const FiniteField& field, const FieldElement& b,
                           const FieldElement& c);
    std::uint64_t q() const { return field->size(); }
};

/// Place of F described by its x-side data: the place below, the
/// ramification index and inertia degree over F_q(x), and (for a split
/// unramified place) the cube root of the unit part of u in the residue
/// field of the place below, which identifies the place within its fiber.
struct UpPlace {
    Place below;
    int e;
    int f;
    std::optional<FieldElement> witness;

    int degree() const { return f * below.degree(); }
    bool operator==(const UpPlace& o) const;
    bool operator<(const UpPlace& o) const;
    std::string str() const;
};

using UpDivisor = std::map<UpPlace, long long>;

void updivisor_add(UpDivisor& d, const UpPlace& Q, long long coeff);
long long updivisor_degree(const UpDivisor& d);
std::string updivisor_str(const UpDivisor& d);

/// The fiber of F above a place of F_q(x). e = 3 / gcd(3, v_P(u)); a
/// ramified place is alone in its fiber with f = 1, an unramified fiber is
/// read off the factorization of T^3 - wbar over the residue field: three
/// rational points when the unit part is a cube there, one inert place of
/// inertia degree 3 otherwise.
std::vector<UpPlace> places_above_x(const BasicField& bf, const Place& P);

/// Diff(F / F_q(x)): coefficient e - 1 = 2 at each ramified place (tame,
/// char != 3).
UpDivisor different_over_x(const BasicField& bf);

/// Genus of F from the Hurwitz formula over the x-line:
/// g = -2 + deg Diff(F/F_q(x)) / 2.
long long genus(const BasicField& bf);

/// Valuation at Q of the monomial element g(x) y^k of F.
long long up_valuation(const BasicField& bf, const UpPlace& Q,
                       const RationalFunction& g, long long y_exp);

/// Principal divisor of g(x) y^k in F; always degree 0.
UpDivisor principal_updivisor(const BasicField& bf, const RationalFunction& g,
                              long long y_exp);

/// Pole divisor (nonnegative part of -v).
UpDivisor pole_updivisor(const BasicField& bf, const RationalFunction& g,
                         long long y_exp);

/// A place of F in the support of Diff(F / F_q(y)) together with the data
/// of the place of F_q(y) below it. deg_below_y is 1 when y has a zero or
/// pole at Q; otherwise it is the degree of the residue of y over F_q.
struct YsidePlace {
    UpPlace Q;
    long long diff_coeff;
    long long v_y;
    int deg_below_y;
    bool below_is_infinite;
    const FiniteField* residue_field;  // set when v_y >= 0
    std::optional<FieldElement> y_residue;
};

struct YsideAnalysis {
    UpDivisor diff;  // Diff(F / F_q(y))
    std::vector<YsidePlace> support;
    bool tame;  // every exponent consistent with tame ramification
    std::vector<UpPlace> wild_suspects;
};

/// Diff(F / F_q(y)) computed from the differential identity
///   Diff = 2 (y)_inf + (u'(x))_F - 2 (y)_F + Diff(F/F_q(x)) - 2 (x)_inf,
/// evaluated place by place as UpDivisors. Verifies (y)_inf = (x)_inf, that
/// every coefficient is >= 0, and that the total degree matches the genus;
/// violations throw std::logic_error since they indicate an internal bug.
/// Exponents that cannot be tame (greater than 2, or equal to 1 in
/// characteristic 2) are reported as wild suspects, not errors.
YsideAnalysis different_over_y(const BasicField& bf);

/// Degrees of the places of F_q(y) ramified in F, read off the support of
/// Diff(F / F_q(y)).
std::set<int> degree_set_N(const BasicField& bf);

struct RamificationReport {
    BasicField bf;
    UpDivisor diff_x;
    long long genus;
    YsideAnalysis yside;
    std::set<int> N;
    bool galois_over_x;
};

RamificationReport analyze(const BasicField& bf);

/// Downstairs cross-check: for every monic irreducible g(y) of degree at
/// most max_degree, reduce phi(t) = t f(t) - ybar^3 over F_q[y]/(g) and flag
/// the place when the reduction has a repeated factor. Ramified places are
/// always flagged; the converse can fail at index divisors, so the flags are
/// a cross-check rather than ground truth.
std::vector<Poly> yside_oracle(const BasicField& bf, unsigned max_degree);

struct OracleComparison {
    std::vector<Poly> flagged;      // oracle flags up to max_degree
    std::vector<Poly> oracle_only;  // flagged, no ramified place found above
    int support_without_flag;       // ramified but unflagged: soundness breach
};

OracleComparison compare_yside_oracle(const BasicField& bf, unsigned max_degree);

}  // namespace kummer

#endif
