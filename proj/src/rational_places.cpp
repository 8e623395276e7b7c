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

#include "kummer/rational_places.hpp"

#include <stdexcept>

namespace kummer {

Place::Place(const FiniteField& field, std::optional<Poly> pi)
    : field_(&field), pi_(std::move(pi)) {}

Place Place::infinity(const FiniteField& field) {
    return Place(field, std::nullopt);
}

Place Place::finite(Poly pi) {
    if (pi.degree() < 1 || !pi.is_monic() || !is_irreducible(pi)) {
        throw std::invalid_argument("finite place needs a monic irreducible polynomial");
    }
    const FiniteField& F = pi.field();
    return Place(F, std::move(pi));
}

const Poly& Place::poly() const {
    if (!pi_) throw std::domain_error("the place at infinity has no polynomial");
    return *pi_;
}

int Place::degree() const { return pi_ ? pi_->degree() : 1; }

bool Place::operator==(const Place& o) const {
    if (field_ != o.field_) return false;
    if (is_infinity() != o.is_infinity()) return false;
    return is_infinity() || *pi_ == *o.pi_;
}

bool Place::operator<(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return is_infinity();
    if (is_infinity()) return false;
    return pi_->canonical_less(*o.pi_);
}

std::string Place::str() const { return pi_ ? pi_->str() : "inf"; }

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field().one());
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElement lead = den_.leading_coeff();
    if (!lead.is_one()) {
        FieldElement inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::from_poly(Poly numerator) {
    const FiniteField& F = numerator.field();
    return RationalFunction(std::move(numerator), Poly::constant(F.one()));
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

void divisor_add(Divisor& d, const Place& P, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = d.emplace(P, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) d.erase(it);
    }
}

long long divisor_degree(const Divisor& d) {
    long long total = 0;
    for (const auto& [P, c] : d) total += c * P.degree();
    return total;
}

long long valuation(const RationalFunction& g, const Place& P) {
    if (g.is_zero()) throw std::domain_error("valuation of the zero function");
    if (P.is_infinity()) {
        return g.denominator().degree() - g.numerator().degree();
    }
    const int vn = remove_all_factors(g.numerator(), P.poly()).first;
    const int vd = remove_all_factors(g.denominator(), P.poly()).first;
    return vn - vd;
}

Divisor principal_divisor(const RationalFunction& g) {
    if (g.is_zero()) throw std::domain_error("divisor of the zero function");
    Divisor d;
    for (const auto& [pi, mult] : factor(g.numerator()).factors) {
        if (pi.degree() > 0) divisor_add(d, Place::finite(pi), mult);
    }
    for (const auto& [pi, mult] : factor(g.denominator()).factors) {
        if (pi.degree() > 0) divisor_add(d, Place::finite(pi), -mult);
    }
    divisor_add(d, Place::infinity(g.field()),
                g.denominator().degree() - g.numerator().degree());
    return d;
}

std::vector<Place> enumerate_places(const FiniteField& field, unsigned max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    std::vector<Place> out;
    out.push_back(Place::infinity(field));
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (const Poly& pi : monic_irreducibles(field, d)) {
            out.push_back(Place(field, pi));
        }
    }
    return out;
}

}  // namespace kummer
