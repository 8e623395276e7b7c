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

#ifndef KUMMER_FINITE_FIELD_HPP
#define KUMMER_FINITE_FIELD_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace kummer {

class FieldElement;

/// Exact arithmetic in GF(p^r). Instances are immutable and interned: for a
/// given (p, r) there is exactly one FiniteField object for the lifetime of
/// the process, so fields can be compared and shared by pointer. The modulus
/// (for r > 1) is the lexicographically smallest monic irreducible of degree
/// r over F_p, coefficients compared low-degree-first, which makes element
/// encodings reproducible across runs and machines.
class FiniteField {
  public:
    /// Default bound on q for user-facing construction; exhaustive
    /// operations stay tractable below it.
    static constexpr std::uint64_t kDefaultMaxQ = std::uint64_t(1) << 20;

    /// Absolute ceiling: q must fit comfortably in 64-bit arithmetic.
    static constexpr std::uint64_t kHardMaxQ = std::uint64_t(1) << 62;

    /// Returns the interned field GF(p^r). Throws std::invalid_argument if p
    /// is not prime, r < 1, or p^r exceeds max_q.
    static const FiniteField& get(std::uint64_t p, unsigned r,
                                  std::uint64_t max_q = kDefaultMaxQ);

    std::uint64_t characteristic() const { return p_; }
    unsigned extension_degree() const { return r_; }
    std::uint64_t size() const { return q_; }

    /// Modulus coefficients, low-degree-first, length r + 1; empty for r = 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool q_mod3_is_1() const { return q_ % 3 == 1; }

    FieldElement zero() const;
    FieldElement one() const;

    /// Element with the given coefficient vector (low-degree-first, length
    /// at most r; entries reduced mod p).
    FieldElement element(const std::vector<std::uint64_t>& coeffs) const;

    /// Element number i in the canonical enumeration, 0 <= i < q. The
    /// coefficients are the base-p digits of i, low digit first, so index 0
    /// is zero and index 1 is one.
    FieldElement element_at(std::uint64_t index) const;

    /// Stand-alone modulus search, exposed so the deterministic-choice rule
    /// can be tested without going through the intern table.
    static std::vector<std::uint64_t> find_canonical_modulus(std::uint64_t p,
                                                             unsigned r);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

  private:
    FiniteField(std::uint64_t p, unsigned r);

    std::uint64_t p_;
    unsigned r_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
};

/// Element of a FiniteField, represented by its coefficient vector over F_p
/// in the polynomial basis. Arithmetic between elements of different fields
/// throws std::invalid_argument.
class FieldElement {
  public:
    FieldElement() : field_(nullptr) {}
    FieldElement(const FiniteField& field, std::vector<std::uint64_t> coeffs);

    const FiniteField& field() const { return *field_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    /// Position in the canonical element enumeration (base-p digits).
    std::uint64_t index() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Canonical total order: enumeration index. Only for same-field values.
    bool operator<(const FieldElement& o) const;

    /// "7" for prime fields, "c0,c1,..." for extension fields.
    std::string str() const;

  private:
    const FiniteField* field_;
    std::vector<std::uint64_t> c_;
};

/// All z with z^3 = a. For q = 1 mod 3 the result has size 0 or 3 for
/// nonzero a and size 1 for a = 0; otherwise cubing is a bijection and the
/// result is a singleton. Returned in canonical element order.
std::vector<FieldElement> cube_roots(const FieldElement& a);

/// Euler criterion for odd q; every element is a square in characteristic 2.
bool is_square(const FieldElement& a);

/// Multiplicative order of a nonzero element; throws on zero.
std::uint64_t mul_order(const FieldElement& a);

/// A fixed primitive cube root of unity; requires q = 1 mod 3.
FieldElement primitive_cube_root(const FiniteField& field);

/// Parses "p^r" or "p" as used by the CLI, e.g. "2^2" or "7".
const FiniteField& parse_field_spec(const std::string& spec,
                                    std::uint64_t max_q
                                    = FiniteField::kDefaultMaxQ);

/// Parses an element given as "c" or "c0,c1,...".
FieldElement parse_element(const FiniteField& field, const std::string& text);

bool is_prime_u64(std::uint64_t n);

}  // namespace kummer

#endif
