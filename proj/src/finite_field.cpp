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

#include "kummer/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kummer {
namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b)
                                      % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) result = mulmod_u64(result, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return result;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    return powmod_u64(a % p, p - 2, p);
}

// Inverse of a modulo m (gcd(a, m) = 1, m not necessarily prime).
std::uint64_t invmod_general(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 quot = r / newr;
        __int128 tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

// --- dense polynomials over F_p, low-degree-first, used only for the
// --- modulus search (the full Poly type lives above this module)

using Raw = std::vector<std::uint64_t>;

void raw_trim(Raw& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mul(const Raw& a, const Raw& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Raw out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + mulmod_u64(a[i], b[j], p)) % p;
        }
    }
    raw_trim(out);
    return out;
}

// a mod m, m monic of degree >= 1
Raw raw_mod(Raw a, const Raw& m, std::uint64_t p) {
    raw_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i < dm; ++i) {
                std::uint64_t sub = mulmod_u64(lead, m[i], p);
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
        a.pop_back();
        raw_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Raw raw_powmod(Raw base, std::uint64_t e, const Raw& m, std::uint64_t p) {
    Raw result{1};
    base = raw_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) result = raw_mod(raw_mul(result, base, p), m, p);
        base = raw_mod(raw_mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

Raw raw_gcd(Raw a, Raw b, std::uint64_t p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        std::uint64_t inv = invmod_u64(b.back(), p);
        Raw bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bm[i] = mulmod_u64(b[i], inv, p);
        Raw r = raw_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = invmod_u64(a.back(), p);
        for (auto& c : a) c = mulmod_u64(c, inv, p);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test: g (monic, degree k) is irreducible over F_p iff
// t^(p^k) = t mod g and gcd(t^(p^(k/l)) - t, g) = 1 for every prime l | k.
bool raw_is_irreducible(const Raw& g, std::uint64_t p) {
    const std::size_t k = g.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;

    // frob[i] = t^(p^i) mod g, built by repeated p-th powers: the p-power
    // map is a ring endomorphism of F_p[t]/(g) fixing F_p.
    std::vector<Raw> frob(k + 1);
    frob[0] = Raw{0, 1};
    for (std::size_t i = 1; i <= k; ++i) {
        frob[i] = raw_powmod(frob[i - 1], p, g, p);
    }
    Raw t{0, 1};
    if (frob[k] != raw_mod(t, g, p)) return false;
    for (std::uint64_t l : prime_factors_u64(k)) {
        Raw diff = frob[k / l];
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        raw_trim(diff);
        Raw d = raw_gcd(g, diff, p);
        if (!(d.size() == 1 && d[0] == 1)) return false;
    }
    return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned r, std::uint64_t limit) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (q > limit / p) return 0;  // overflow marker
        q *= p;
    }
    return q;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> FiniteField::find_canonical_modulus(std::uint64_t p,
                                                               unsigned r) {
    if (r < 2) return {};
    // Scan monic degree-r candidates in ascending lexicographic order of
    // (c_0, c_1, ..., c_{r-1}); irreducibles are dense enough that the scan
    // terminates quickly. c_0 = 0 would be divisible by t, so start at 1.
    std::vector<std::uint64_t> digits(r, 0);
    digits[0] = 1;
    for (;;) {
        Raw cand(digits.begin(), digits.end());
        cand.push_back(1);
        if (raw_is_irreducible(cand, p)) {
            return {cand.begin(), cand.end()};
        }
        // odometer with c_0 as the most significant position
        int pos = static_cast<int>(r) - 1;
        while (pos >= 0) {
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("no irreducible modulus found");
    }
}

FiniteField::FiniteField(std::uint64_t p, unsigned r) : p_(p), r_(r) {
    q_ = checked_pow(p, r, kHardMaxQ);
    modulus_ = find_canonical_modulus(p, r);
}

const FiniteField& FiniteField::get(std::uint64_t p, unsigned r,
                                    std::uint64_t max_q) {
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("characteristic " + std::to_string(p)
                                    + " is not prime");
    }
    std::uint64_t q = checked_pow(p, r, std::min(max_q, kHardMaxQ));
    if (q == 0) {
        throw std::invalid_argument("field size p^r exceeds the configured bound");
    }

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>,
                    std::unique_ptr<FiniteField>>
        registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, r);
    auto it = registry.find(key);
    if (it == registry.end()) {
        it = registry.emplace(key, std::unique_ptr<FiniteField>(
                                       new FiniteField(p, r)))
                 .first;
    }
    return *it->second;
}

FieldElement FiniteField::zero() const {
    return FieldElement(*this, std::vector<std::uint64_t>(r_, 0));
}

FieldElement FiniteField::one() const {
    std::vector<std::uint64_t> c(r_, 0);
    c[0] = 1;
    return FieldElement(*this, c);
}

FieldElement FiniteField::element(const std::vector<std::uint64_t>& coeffs) const {
    if (coeffs.size() > r_) {
        throw std::invalid_argument("coefficient vector longer than extension degree");
    }
    std::vector<std::uint64_t> c(r_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % p_;
    return FieldElement(*this, c);
}

FieldElement FiniteField::element_at(std::uint64_t index) const {
    if (index >= q_) throw std::invalid_argument("element index out of range");
    std::vector<std::uint64_t> c(r_, 0);
    for (unsigned i = 0; i < r_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return FieldElement(*this, c);
}

FieldElement::FieldElement(const FiniteField& field,
                           std::vector<std::uint64_t> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
    if (c_.size() != field.extension_degree()) {
        throw std::invalid_argument("bad coefficient vector length");
    }
    for (auto& x : c_) x %= field.characteristic();
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return x == 0; });
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return false;
    }
    return true;
}

std::uint64_t FieldElement::index() const {
    std::uint64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        idx = idx * field_->characteristic() + c_[i];
    }
    return idx;
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field()) {
        throw std::invalid_argument("elements belong to different fields");
    }
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<std::uint64_t> c(c_.size());
    const std::uint64_t p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + o.c_[i]) % p;
    return FieldElement(*field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<std::uint64_t> c(c_.size());
    const std::uint64_t p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + p - o.c_[i]) % p;
    return FieldElement(*field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<std::uint64_t> c(c_.size());
    const std::uint64_t p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (p - c_[i]) % p;
    return FieldElement(*field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    const std::uint64_t p = field_->characteristic();
    if (field_->extension_degree() == 1) {
        return FieldElement(*field_, {mulmod_u64(c_[0], o.c_[0], p)});
    }
    Raw prod = raw_mul(Raw(c_.begin(), c_.end()), Raw(o.c_.begin(), o.c_.end()), p);
    Raw mod(field_->modulus().begin(), field_->modulus().end());
    prod = raw_mod(std::move(prod), mod, p);
    prod.resize(field_->extension_degree(), 0);
    return FieldElement(*field_, std::vector<std::uint64_t>(prod.begin(), prod.end()));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement result = field_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return pow(field_->size() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    require_same_field(*this, o);
    return index() < o.index();
}

std::string FieldElement::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    return os.str();
}

bool is_square(const FieldElement& a) {
    const FiniteField& F = a.field();
    if (F.characteristic() == 2) return true;
    if (a.is_zero()) return true;
    return a.pow((F.size() - 1) / 2).is_one();
}

std::uint64_t mul_order(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("order of zero");
    const std::uint64_t n = a.field().size() - 1;
    std::uint64_t order = n;
    for (std::uint64_t l : prime_factors_u64(n)) {
        while (order % l == 0 && a.pow(order / l).is_one()) order /= l;
    }
    return order;
}

namespace {

// First element g (canonical order) with g^((q-1)/3) != 1; exists whenever
// q = 1 mod 3.
FieldElement cube_nonresidue(const FiniteField& F) {
    const std::uint64_t n = F.size() - 1;
    for (std::uint64_t i = 2; i < F.size(); ++i) {
        FieldElement g = F.element_at(i);
        if (!g.pow(n / 3).is_one()) return g;
    }
    throw std::logic_error("no cube non-residue found");
}

}  // namespace

FieldElement primitive_cube_root(const FiniteField& field) {
    if (!field.q_mod3_is_1()) {
        throw std::invalid_argument("field has no primitive cube root of unity");
    }
    return cube_nonresidue(field).pow((field.size() - 1) / 3);
}

std::vector<FieldElement> cube_roots(const FieldElement& a) {
    const FiniteField& F = a.field();
    if (a.is_zero()) return {F.zero()};
    const std::uint64_t q = F.size();
    const std::uint64_t n = q - 1;

    if (q % 3 == 0) {
        // characteristic 3: cubing is the Frobenius, hence bijective
        std::uint64_t e = 1;
        for (unsigned i = 0; i + 1 < F.extension_degree(); ++i) e *= 3;
        return {a.pow(e)};
    }
    if (n % 3 != 0) {
        // q = 2 mod 3: cubing is a bijection of the unit group
        return {a.pow(invmod_general(3, n))};
    }

    // q = 1 mod 3; cube roots exist iff a^(n/3) = 1
    if (!a.pow(n / 3).is_one()) return {};

    std::uint64_t v = 0, m = n;
    while (m % 3 == 0) {
        m /= 3;
        ++v;
    }
    std::uint64_t pow3v = 1;
    for (std::uint64_t i = 0; i < v; ++i) pow3v *= 3;

    // split a into its 3-Sylow and cofactor components
    const std::uint64_t mu = invmod_general(m % pow3v, pow3v);
    const std::uint64_t e_A = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(m) * mu) % n);
    FieldElement a_A = a.pow(e_A);
    FieldElement a_B = a.pow((n + 1 - e_A) % n);
    FieldElement root_B =
        (m == 1) ? F.one() : a_B.pow(invmod_general(3, m));

    FieldElement theta = cube_nonresidue(F).pow(m);  // order exactly 3^v
    FieldElement omega = theta.pow(pow3v / 3);
    FieldElement omega2 = omega * omega;

    // base-3 discrete log of a_A with respect to theta
    std::uint64_t k = 0;
    std::uint64_t pow3i = 1;
    for (std::uint64_t i = 0; i < v; ++i) {
        FieldElement c = (a_A * theta.pow((pow3v - k) % pow3v))
                             .pow(pow3v / (3 * pow3i));
        std::uint64_t digit;
        if (c.is_one()) {
            digit = 0;
        } else if (c == omega) {
            digit = 1;
        } else if (c == omega2) {
            digit = 2;
        } else {
            throw std::logic_error("cube root discrete log out of range");
        }
        k += digit * pow3i;
        pow3i *= 3;
    }
    if (k % 3 != 0) throw std::logic_error("cube residue has non-cube Sylow part");

    FieldElement s = theta.pow(k / 3) * root_B;
    if (!(s * s * s == a)) throw std::logic_error("cube root verification failed");

    std::vector<FieldElement> roots{s, s * omega, s * omega2};
    std::sort(roots.begin(), roots.end());
    return roots;
}

const FiniteField& parse_field_spec(const std::string& spec, std::uint64_t max_q) {
    std::size_t caret = spec.find('^');
    std::uint64_t p = 0;
    unsigned r = 1;
    try {
        if (caret == std::string::npos) {
            p = std::stoull(spec);
        } else {
            p = std::stoull(spec.substr(0, caret));
            unsigned long rv = std::stoul(spec.substr(caret + 1));
            r = static_cast<unsigned>(rv);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field spec '" + spec + "', expected p or p^r");
    }
    return FiniteField::get(p, r, max_q);
}

FieldElement parse_element(const FiniteField& field, const std::string& text) {
    std::vector<std::uint64_t> coeffs;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        try {
            coeffs.push_back(std::stoull(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad element coefficient '" + tok + "'");
        }
    }
    if (coeffs.empty()) throw std::invalid_argument("empty element literal");
    return field.element(coeffs);
}

}  // namespace kummer
