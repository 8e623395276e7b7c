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

#include "kummer/kummer_basic.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer {

BasicField BasicField::make(const FiniteField& field, const FieldElement& b,
                            const FieldElement& c) {
    if (!field.q_mod3_is_1()) {
        throw std::invalid_argument("tower field needs q = 1 mod 3");
    }
    if (&b.field() != &field || &c.field() != &field) {
        throw std::invalid_argument("coefficients must live in the tower field");
    }
    if (b.is_zero() && c.is_zero()) {
        throw std::invalid_argument("t = 0 must not be a double root of f");
    }
    Poly f(field, {c, b, field.one()});
    Poly u(field, {field.zero(), c, b, field.one()});
    return BasicField{&field, b, c, f, u};
}

bool UpPlace::operator==(const UpPlace& o) const {
    if (!(below == o.below) || e != o.e || f != o.f) return false;
    if (witness.has_value() != o.witness.has_value()) return false;
    return !witness || *witness == *o.witness;
}

bool UpPlace::operator<(const UpPlace& o) const {
    if (below != o.below) return below < o.below;
    if (e != o.e) return e < o.e;
    if (f != o.f) return f < o.f;
    if (witness.has_value() != o.witness.has_value()) return !witness.has_value();
    if (!witness) return false;
    return witness->index() < o.witness->index();
}

std::string UpPlace::str() const {
    std::string s = "Q(" + below.str();
    if (witness) s += "; w=" + witness->str();
    s += ")";
    return s;
}

void updivisor_add(UpDivisor& d, const UpPlace& Q, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = d.emplace(Q, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) d.erase(it);
    }
}

long long updivisor_degree(const UpDivisor& d) {
    long long total = 0;
    for (const auto& [Q, c] : d) total += c * Q.degree();
    return total;
}

std::string updivisor_str(const UpDivisor& d) {
    if (d.empty()) return "0";
    std::string s;
    for (const auto& [Q, c] : d) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += std::to_string(c) + "*";
        s += Q.str();
    }
    return s;
}

namespace {

long long valuation_of_u(const BasicField& bf, const Place& P) {
    if (P.is_infinity()) return -bf.u.degree();
    return remove_all_factors(bf.u, P.poly()).first;
}

// Residue of the unit part of u at an unramified place, as an element of
// the residue field. The residue field of a finite place of degree d is
// realized as GF(p, r*d) through the canonical embedding; at infinity the
// unit part of a monic u is 1.
FieldElement unit_part_residue(const BasicField& bf, const Place& P) {
    if (P.is_infinity()) return bf.u.leading_coeff();
    Poly u1 = remove_all_factors(bf.u, P.poly()).second;
    const FiniteField& E =
        extension_field(*bf.field, static_cast<unsigned>(P.degree()));
    FieldElement x0 = canonical_root(P.poly(), E);
    return embed_poly(u1, E).eval(x0);
}

}  // namespace

std::vector<UpPlace> places_above_x(const BasicField& bf, const Place& P) {
    const long long v = valuation_of_u(bf, P);
    if (((v % 3) + 3) % 3 != 0) {
        return {UpPlace{P, 3, 1, std::nullopt}};
    }
    std::vector<FieldElement> roots = cube_roots(unit_part_residue(bf, P));
    if (roots.size() == 3) {
        std::vector<UpPlace> out;
        out.reserve(3);
        for (const auto& s : roots) out.push_back(UpPlace{P, 1, 1, s});
        return out;
    }
    return {UpPlace{P, 1, 3, std::nullopt}};
}

UpDivisor different_over_x(const BasicField& bf) {
    UpDivisor d;
    for (const auto& [pi, mult] : factor(bf.u).factors) {
        if (mult % 3 == 0) continue;
        Place P = Place::finite(pi);
        auto above = places_above_x(bf, P);
        if (above.size() != 1 || above[0].e != 3) {
            throw std::logic_error("ramified fiber is not a single place");
        }
        updivisor_add(d, above[0], above[0].e - 1);
    }
    // v_inf(u) = -3, so infinity never ramifies for a cubic u
    return d;
}

long long genus(const BasicField& bf) {
    const long long deg = updivisor_degree(different_over_x(bf));
    if (deg % 2 != 0) throw std::logic_error("odd different degree");
    return -2 + deg / 2;
}

long long up_valuation(const BasicField& bf, const UpPlace& Q,
                       const RationalFunction& g, long long y_exp) {
    if (g.is_zero()) throw std::domain_error("valuation of the zero element");
    const long long v_g = valuation(g, Q.below);
    const long long v_u = valuation_of_u(bf, Q.below);
    const long long vy_times3 = Q.e * v_u;
    if (vy_times3 % 3 != 0) throw std::logic_error("v_Q(y) is not an integer");
    return Q.e * v_g + y_exp * (vy_times3 / 3);
}

namespace {

// Places of F_q(x) that can carry a nonzero valuation of g(x) y^k or enter
// the different computation: the support of g, the zeros of u, infinity,
// and (when requested) the zeros of u'.
std::set<Place> candidate_places(const BasicField& bf, const RationalFunction& g,
                                 bool include_uprime) {
    std::set<Place> out;
    out.insert(Place::infinity(*bf.field));
    for (const auto& [pi, mult] : factor(bf.u).factors) {
        (void)mult;
        out.insert(Place::finite(pi));
    }
    if (!g.is_zero()) {
        for (const auto& [pi, mult] : factor(g.numerator()).factors) {
            (void)mult;
            if (pi.degree() > 0) out.insert(Place::finite(pi));
        }
        for (const auto& [pi, mult] : factor(g.denominator()).factors) {
            (void)mult;
            if (pi.degree() > 0) out.insert(Place::finite(pi));
        }
    }
    if (include_uprime) {
        for (const auto& [pi, mult] : factor(bf.u.derivative()).factors) {
            (void)mult;
            if (pi.degree() > 0) out.insert(Place::finite(pi));
        }
    }
    return out;
}

}  // namespace

UpDivisor principal_updivisor(const BasicField& bf, const RationalFunction& g,
                              long long y_exp) {
    UpDivisor d;
    for (const Place& P : candidate_places(bf, g, false)) {
        for (const UpPlace& Q : places_above_x(bf, P)) {
            updivisor_add(d, Q, up_valuation(bf, Q, g, y_exp));
        }
    }
    return d;
}

UpDivisor pole_updivisor(const BasicField& bf, const RationalFunction& g,
                         long long y_exp) {
    UpDivisor d;
    for (const Place& P : candidate_places(bf, g, false)) {
        for (const UpPlace& Q : places_above_x(bf, P)) {
            long long v = up_valuation(bf, Q, g, y_exp);
            if (v < 0) updivisor_add(d, Q, -v);
        }
    }
    return d;
}

YsideAnalysis different_over_y(const BasicField& bf) {
    const FiniteField& F = *bf.field;
    const std::uint64_t q = F.size();
    Poly uprime = bf.u.derivative();
    if (uprime.is_zero() || uprime.degree() != 2) {
        throw std::logic_error("u' must be quadratic away from characteristic 3");
    }
    RationalFunction one = RationalFunction::from_poly(Poly::constant(F.one()));
    RationalFunction x_fn = RationalFunction::from_poly(Poly::variable(F));
    RationalFunction uprime_fn = RationalFunction::from_poly(uprime);

    if (!(pole_updivisor(bf, one, 1) == pole_updivisor(bf, x_fn, 0))) {
        throw std::logic_error("pole divisors of y and x disagree");
    }

    UpDivisor diffx = different_over_x(bf);

    YsideAnalysis out;
    out.tame = true;

    std::set<Place> candidates = candidate_places(bf, uprime_fn, true);
    for (const Place& P : candidates) {
        for (const UpPlace& Q : places_above_x(bf, P)) {
            const long long vy = up_valuation(bf, Q, one, 1);
            const long long vx = up_valuation(bf, Q, x_fn, 0);
            const long long vup = up_valuation(bf, Q, uprime_fn, 0);
            long long coeff = 2 * std::max<long long>(0, -vy) + vup - 2 * vy
                              - 2 * std::max<long long>(0, -vx);
            auto it = diffx.find(Q);
            if (it != diffx.end()) coeff += it->second;
            if (coeff < 0) {
                throw std::logic_error("negative coefficient in Diff(F/F_q(y)) at "
                                       + Q.str());
            }
            if (coeff == 0) continue;

            updivisor_add(out.diff, Q, coeff);

            YsidePlace rec{Q, coeff, vy, 0, vy < 0, nullptr, std::nullopt};
            if (vy > 0) {
                rec.deg_below_y = 1;  // the zero of y
                rec.residue_field = &F;
                rec.y_residue = F.zero();
            } else if (vy < 0) {
                rec.deg_below_y = 1;  // the pole of y
            } else if (Q.f == 1) {
                const FiniteField& E = P.is_infinity()
                    ? F
                    : extension_field(F, static_cast<unsigned>(P.degree()));
                rec.residue_field = &E;
                rec.y_residue = *Q.witness;
                rec.deg_below_y =
                    static_cast<int>(frobenius_orbit_size(*Q.witness, q));
            } else {
                // Inert fiber: the residue of y generates the cubic
                // extension of the residue field below. Everything is
                // recomputed through the direct F_q embedding into the big
                // field so that later coefficient embeddings (the oracle
                // match) see the same copy of F_q; the three cube roots are
                // conjugate over the subfield, so any fixed choice is a
                // valid coordinate for the residue.
                const FiniteField& E3 =
                    extension_field(F, 3 * static_cast<unsigned>(P.degree()));
                Poly u1 = remove_all_factors(bf.u, P.poly()).second;
                FieldElement x0 = canonical_root(P.poly(), E3);
                FieldElement w3 = embed_poly(u1, E3).eval(x0);
                std::vector<FieldElement> roots = cube_roots(w3);
                if (roots.empty()) {
                    throw std::logic_error("unit part is not a cube in the "
                                           "inert residue field");
                }
                rec.residue_field = &E3;
                rec.y_residue = roots.front();
                rec.deg_below_y =
                    static_cast<int>(frobenius_orbit_size(roots.front(), q));
            }

            const bool impossible_tame =
                coeff > 2 || (coeff == 1 && F.characteristic() == 2);
            if (impossible_tame) {
                out.tame = false;
                out.wild_suspects.push_back(Q);
            }
            out.support.push_back(rec);
        }
    }

    if (updivisor_degree(out.diff) != 2 * genus(bf) + 4) {
        throw std::logic_error("Diff(F/F_q(y)) degree inconsistent with the genus");
    }
    return out;
}

std::set<int> degree_set_N(const BasicField& bf) {
    std::set<int> N;
    for (const YsidePlace& rec : different_over_y(bf).support) {
        N.insert(rec.deg_below_y);
    }
    return N;
}

namespace {

bool galois_over_x(const BasicField& bf) {
    // q = 1 mod 3 supplies the cube roots of unity; v_{P_x}(u) in {1, 2}
    // keeps u from being a cube, so the Kummer extension has full degree 3.
    long long v = remove_all_factors(bf.u, Poly::variable(*bf.field)).first;
    return bf.field->q_mod3_is_1() && v % 3 != 0;
}

}  // namespace

RamificationReport analyze(const BasicField& bf) {
    RamificationReport rep{bf,          different_over_x(bf), genus(bf),
                           different_over_y(bf), {},          galois_over_x(bf)};
    for (const YsidePlace& rec : rep.yside.support) {
        rep.N.insert(rec.deg_below_y);
    }
    return rep;
}

std::vector<Poly> yside_oracle(const BasicField& bf, unsigned max_degree) {
    const FiniteField& F = *bf.field;
    std::vector<Poly> flagged;
    for (unsigned d = 1; d <= max_degree; ++d) {
        const FiniteField& K = extension_field(F, d);
        for (const Poly& g : monic_irreducibles(F, d)) {
            FieldElement ybar = canonical_root(g, K);
            Poly phi = embed_poly(bf.u, K)
                       - Poly::constant(ybar * ybar * ybar);
            Poly der = phi.derivative();
            bool repeated = der.is_zero() || gcd(phi, der).degree() > 0;
            if (repeated) flagged.push_back(g);
        }
    }
    return flagged;
}

OracleComparison compare_yside_oracle(const BasicField& bf, unsigned max_degree) {
    OracleComparison cmp;
    cmp.flagged = yside_oracle(bf, max_degree);
    cmp.support_without_flag = 0;

    YsideAnalysis ys = different_over_y(bf);
    std::vector<const YsidePlace*> finite_records;
    for (const YsidePlace& rec : ys.support) {
        if (!rec.below_is_infinite && rec.deg_below_y <= static_cast<int>(max_degree)) {
            finite_records.push_back(&rec);
        }
    }

    auto matches = [](const Poly& g, const YsidePlace& rec) {
        if (!rec.residue_field || !rec.y_residue) return false;
        if (g.degree() != rec.deg_below_y) return false;
        return embed_poly(g, *rec.residue_field).eval(*rec.y_residue).is_zero();
    };

    for (const Poly& g : cmp.flagged) {
        bool found = false;
        for (const YsidePlace* rec : finite_records) {
            if (matches(g, *rec)) {
                found = true;
                break;
            }
        }
        if (!found) cmp.oracle_only.push_back(g);
    }
    for (const YsidePlace* rec : finite_records) {
        bool found = false;
        for (const Poly& g : cmp.flagged) {
            if (matches(g, *rec)) {
                found = true;
                break;
            }
        }
        if (!found) ++cmp.support_without_flag;
    }
    return cmp;
}

}  // namespace kummer
