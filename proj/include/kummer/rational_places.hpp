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

#ifndef KUMMER_RATIONAL_PLACES_HPP
#define KUMMER_RATIONAL_PLACES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummer/polynomial.hpp"

namespace kummer {

/// Place of the rational function field F_q(x): either the place attached
/// to a monic irreducible polynomial or the place at infinity. The place at
/// infinity is modeled explicitly because the analysis tracks it by name.
class Place {
  public:
    static Place infinity(const FiniteField& field);
    static Place finite(Poly pi);  // pi must be monic irreducible

    bool is_infinity() const { return !pi_.has_value(); }
    const Poly& poly() const;
    int degree() const;
    const FiniteField& field() const { return *field_; }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    /// Infinity sorts first, then ascending canonical polynomial order.
    bool operator<(const Place& o) const;

    std::string str() const;

  private:
    Place(const FiniteField& field, std::optional<Poly> pi);
    // enumeration draws from the memoized irreducible tables and skips the
    // per-construction irreducibility check
    friend std::vector<Place> enumerate_places(const FiniteField&, unsigned);
    const FiniteField* field_;
    std::optional<Poly> pi_;
};

/// Quotient of polynomials kept in reduced form with monic denominator, so
/// the representation is unique.
class RationalFunction {
  public:
    RationalFunction(Poly numerator, Poly denominator);
    static RationalFunction from_poly(Poly numerator);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    const FiniteField& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    std::string str(const std::string& var = "x") const;

  private:
    Poly num_, den_;
};

/// Formal integer combination of places; zero coefficients are never stored.
using Divisor = std::map<Place, long long>;

void divisor_add(Divisor& d, const Place& P, long long coeff);
long long divisor_degree(const Divisor& d);

/// v_P(g). At a finite place: multiplicity in the numerator minus the
/// denominator; at infinity: deg(den) - deg(num).
long long valuation(const RationalFunction& g, const Place& P);

/// Divisor of all nonzero valuations; always has degree 0.
Divisor principal_divisor(const RationalFunction& g);

/// Infinity followed by all finite places of degree <= max_degree in
/// canonical order.
std::vector<Place> enumerate_places(const FiniteField& field, unsigned max_degree);

}  // namespace kummer

#endif
