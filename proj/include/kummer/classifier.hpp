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

#ifndef KUMMER_CLASSIFIER_HPP
#define KUMMER_CLASSIFIER_HPP

#include "kummer/kummer_basic.hpp"

namespace kummer {

/// Input data of a tower y^3 = x(x^2 + bx + c) over F_q.
struct TowerSpec {
    const FiniteField* field;
    FieldElement b, c;

    static TowerSpec make(const FiniteField& field, const FieldElement& b,
                          const FieldElement& c);
};

/// Outcome of the shape classification of x^2 + bx + c. Types 1-3 are the
/// candidate shapes for good asymptotic behavior (a necessary condition
/// only, never a guarantee); an irreducible f forces infinite genus.
enum class ClassTag { Type1, Type2, Type3, IrreducibleInfiniteGenus, Invalid };

struct Classification {
    ClassTag tag;
    std::optional<FieldElement> alpha;  // Type1/2/3
    std::optional<FieldElement> beta;   // Type1
    std::string reason;                 // Invalid
    std::string tag_str() const;
};

/// Shape of the tower equation:
///   Type1: y^3 = x(x+alpha)(x+beta), alpha != beta, both nonzero
///   Type2: y^3 = x^2(x+alpha), alpha nonzero
///   Type3: y^3 = x(x+alpha)^2, alpha nonzero
///   IrreducibleInfiniteGenus: f irreducible over F_q
/// The cases are mutually exclusive and exhaustive on valid input.
Classification classify(const TowerSpec& spec);

enum class NotApplicableReason { NotGalois, HReducible, SearchExhausted };

/// Infinite-genus criterion outcome. NotApplicable means the hypotheses
/// could not be established within the search bounds; it never asserts
/// finite genus.
struct CriterionVerdict {
    bool infinite_genus = false;
    int d = 0;
    std::optional<Place> witness;
    std::set<int> N;
    NotApplicableReason reason = NotApplicableReason::SearchExhausted;
    std::string detail;
};

struct CriterionOptions {
    unsigned max_d = 4;               // largest degree d tried
    unsigned max_witness_degree = 4;  // witness place search bound
};

/// Looks for d >= 2 with gcd(d, 3) = 1 such that no element of N is
/// divisible by d, together with a ramified place of F_q(x) of degree d;
/// combined with the Galois property of F/F_q(x) and the irreducibility of
/// t f(t) - y^3 over F_q(y) this forces infinite tower genus.
CriterionVerdict check_criterion(const TowerSpec& spec,
                                 const CriterionOptions& opts = {});

/// Irreducibility of phi(t) = t f(t) - y^3 over F_q(y). A root in F_q(y)
/// would be integral over F_q[y] and of degree exactly 1, with leading
/// coefficient a cube root of unity, so only those linear candidates are
/// scanned.
bool h_irreducible_over_Ky(const TowerSpec& spec);

/// The candidate scan itself, without input validation: used to document
/// why (b, c) = (0, 0) must be excluded (x = y solves y^3 = x^3).
bool h_irreducible_scan(const FiniteField& field, const FieldElement& b,
                        const FieldElement& c);

/// Ramification indices propagated through the pyramid of subfield
/// composita by the tame Abhyankar rule e = lcm of the two indices below.
/// Base step j carries index base_e[j] on its left edge; right edges are
/// unramified, which is the situation the propagation models.
struct PyramidTrace {
    /// rows[i-1][j] = index of the level-i node over its lower-left parent.
    std::vector<std::vector<int>> rows;
    /// Leftmost-path indices, i.e. the steps F_i over F_{i-1}.
    std::vector<int> chain;
    bool fig1_pattern;            // all base steps 1 except a final step > 1
    bool totally_ramified_chain;  // every base step = 3
};

PyramidTrace pyramid_trace(const std::vector<int>& base_e, unsigned levels,
                           std::uint64_t characteristic);

/// Sweep over primes p <= limit with p = 1 or 7 mod 12, checking that
/// p = 1 mod 3 and that -3^{-1} is a square mod p. Expected: no violations,
/// which is what invalidates the quadratic-nonresidue step the criterion of
/// MaWu05 relied on.
struct MawuReport {
    std::uint64_t limit = 0;
    std::uint64_t primes_checked = 0;
    std::vector<std::uint64_t> violations_mod3;
    std::vector<std::uint64_t> violations_square;
    bool clean() const {
        return violations_mod3.empty() && violations_square.empty();
    }
};

MawuReport verify_mawu(std::uint64_t prime_limit);

}  // namespace kummer

#endif
