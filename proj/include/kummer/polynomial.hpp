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

#ifndef KUMMER_POLYNOMIAL_HPP
#define KUMMER_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kummer/finite_field.hpp"

namespace kummer {

/// Dense univariate polynomial over a FiniteField, coefficients stored
/// low-degree-first with no trailing zeros. The zero polynomial has an empty
/// coefficient vector; degree() reports -1 for it.
class Poly {
  public:
    explicit Poly(const FiniteField& field) : field_(&field) {}
    Poly(const FiniteField& field, std::vector<FieldElement> coeffs);

    /// Polynomial with small-integer coefficients (each taken mod p).
    static Poly from_ints(const FiniteField& field,
                          const std::vector<std::uint64_t>& coeffs);
    static Poly constant(const FieldElement& a);
    static Poly variable(const FiniteField& field);  // the monomial t

    const FiniteField& field() const { return *field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monic() const;

    /// Coefficient of t^i; zero beyond the degree.
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement leading_coeff() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& s) const;

    /// Euclidean division; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }

    bool divides(const Poly& other) const;

    Poly monic() const;
    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    Poly pow_mod(std::uint64_t e, const Poly& modulus) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Canonical total order: by degree, then coefficients compared
    /// low-degree-first; matches the modulus-selection convention.
    bool canonical_less(const Poly& o) const;

    /// Stable identity for use in map keys and memo tables.
    std::vector<std::uint64_t> key() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    const FiniteField* field_;
    std::vector<FieldElement> coeffs_;
};

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const {
        return a.canonical_less(b);
    }
};

Poly gcd(const Poly& a, const Poly& b);

/// Complete factorization into monic irreducibles: unit * prod(f_i^m_i)
/// reconstructs the input. Factors are pairwise distinct and sorted
/// canonically.
struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Poly, int>> factors;
};

Factorization factor(const Poly& f);
bool is_irreducible(const Poly& f);

/// Roots in the coefficient field with multiplicities, sorted.
std::vector<FieldElement> roots_in_field(const Poly& f);

FieldElement resultant(const Poly& f, const Poly& g);
FieldElement discriminant(const Poly& f);

/// (multiplicity of pi in f, cofactor with all pi factors removed).
std::pair<int, Poly> remove_all_factors(const Poly& f, const Poly& pi);

/// Every monic irreducible of degree exactly d, canonical order. The result
/// is memoized per (field, d) and owned by the module.
const std::vector<Poly>& monic_irreducibles(const FiniteField& field, unsigned d);

/// All monic irreducibles of degree <= max_degree, ascending degree then
/// canonical order, each exactly once.
std::vector<Poly> monic_irreducibles_up_to(const FiniteField& field,
                                           unsigned max_degree);

/// Seed for the randomized equal-degree splitting step; per-call generators
/// are derived from it and the input polynomial, so factorizations are
/// reproducible regardless of call order or threading. Default 0.
void set_factor_seed(std::uint64_t seed);
std::uint64_t factor_seed();

// --- canonical embeddings between fields of the same characteristic ---

/// GF(p, r*times) for base = GF(p, r).
const FiniteField& extension_field(const FiniteField& base, unsigned times);

/// Canonical embedding GF(p,r) -> GF(p,k), r | k: the generator of the
/// source maps to the smallest root of the source modulus in the target.
FieldElement embed(const FieldElement& a, const FiniteField& target);

/// Coefficient-wise embedding.
Poly embed_poly(const Poly& f, const FiniteField& target);

/// Smallest root of f in the target field after embedding the coefficients;
/// throws std::invalid_argument if f has no root there. Memoized.
FieldElement canonical_root(const Poly& f, const FiniteField& target);

/// Smallest n >= 1 with a^(q0^n) = a, i.e. the degree of a over the
/// subfield of size q0.
unsigned frobenius_orbit_size(const FieldElement& a, std::uint64_t q0);

}  // namespace kummer

#endif
