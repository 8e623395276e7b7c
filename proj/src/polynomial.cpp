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

#include "kummer/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kummer {

namespace {

std::vector<std::uint64_t> small_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::atomic<std::uint64_t> g_factor_seed{0};

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
    return h;
}

}  // namespace

void set_factor_seed(std::uint64_t seed) { g_factor_seed.store(seed); }
std::uint64_t factor_seed() { return g_factor_seed.load(); }

Poly::Poly(const FiniteField& field, std::vector<FieldElement> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (&c.field() != field_) {
            throw std::invalid_argument("coefficient from a different field");
        }
    }
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_ints(const FiniteField& field,
                     const std::vector<std::uint64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field.element({v}));
    return Poly(field, std::move(c));
}

Poly Poly::constant(const FieldElement& a) {
    return Poly(a.field(), std::vector<FieldElement>{a});
}

Poly Poly::variable(const FiniteField& field) {
    return Poly(field, {field.zero(), field.one()});
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

bool Poly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

FieldElement Poly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

FieldElement Poly::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElement> c;
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) + o.coeff(i));
    return Poly(*field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FieldElement> c;
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) - o.coeff(i));
    return Poly(*field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*field_);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1,
                                field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return Poly(*field_, std::move(c));
}

Poly Poly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * s);
    return Poly(*field_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero() || degree() < divisor.degree()) {
        return {Poly(*field_), *this};
    }
    const FieldElement inv_lead = divisor.leading_coeff().inverse();
    std::vector<FieldElement> rem = coeffs_;
    std::vector<FieldElement> quot(degree() - divisor.degree() + 1,
                                   field_->zero());
    const int db = divisor.degree();
    for (int i = degree(); i >= db; --i) {
        FieldElement c = rem[i] * inv_lead;
        if (c.is_zero()) continue;
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) {
            rem[i - db + j] = rem[i - db + j] - c * divisor.coeffs_[j];
        }
    }
    return {Poly(*field_, std::move(quot)), Poly(*field_, std::move(rem))};
}

bool Poly::divides(const Poly& other) const {
    return other.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return *this * leading_coeff().inverse();
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(*field_);
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        FieldElement n = field_->zero();
        const FieldElement one = field_->one();
        for (std::size_t k = 0; k < i % field_->characteristic(); ++k) n = n + one;
        // i mod p copies of coeffs_[i]
        c.push_back(coeffs_[i] * n);
    }
    return Poly(*field_, std::move(c));
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Poly Poly::pow_mod(std::uint64_t e, const Poly& modulus) const {
    if (modulus.degree() < 1) throw std::domain_error("modulus must have degree >= 1");
    Poly result = Poly::constant(field_->one()) % modulus;
    Poly base = *this % modulus;
    while (e) {
        if (e & 1) result = (result * base) % modulus;
        base = (base * base) % modulus;
        e >>= 1;
    }
    return result;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

bool Poly::canonical_less(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) {
        return coeffs_.size() < o.coeffs_.size();
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::uint64_t a = coeffs_[i].index();
        const std::uint64_t b = o.coeffs_[i].index();
        if (a != b) return a < b;
    }
    return false;
}

std::vector<std::uint64_t> Poly::key() const {
    std::vector<std::uint64_t> k;
    k.reserve(coeffs_.size());
    for (const auto& c : coeffs_) k.push_back(c.index());
    return k;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    const bool ext = field_->extension_degree() > 1;
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FieldElement c = coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool show_coeff = (i == 0) || !c.is_one();
        if (show_coeff) {
            if (ext) {
                os << '(' << c.str() << ')';
            } else {
                os << c.str();
            }
            if (i > 0) os << '*';
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

namespace {

// Inverse Frobenius on coefficients: for f = g(t^p) returns the unique g1
// with g1^p = f.
Poly pth_root(const Poly& f) {
    const FiniteField& F = f.field();
    const std::uint64_t p = F.characteristic();
    std::uint64_t inv_frob_exp = 1;
    for (unsigned i = 0; i + 1 < F.extension_degree(); ++i) inv_frob_exp *= p;
    std::vector<FieldElement> c;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); i += p) {
        c.push_back(f.coeff(i).pow(inv_frob_exp));
    }
    return Poly(F, std::move(c));
}

std::uint64_t derive_seed(const Poly& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv_mix(h, g_factor_seed.load());
    h = fnv_mix(h, g.field().characteristic());
    h = fnv_mix(h, g.field().extension_degree());
    for (auto v : g.key()) h = fnv_mix(h, v + 1);
    return h;
}

Poly random_poly(const FiniteField& F, int max_degree, std::mt19937_64& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i <= max_degree; ++i) {
        c.push_back(F.element_at(rng() % F.size()));
    }
    return Poly(F, std::move(c));
}

// Equal-degree splitting: g is a squarefree monic product of irreducibles of
// degree d. Exponentiation by (Q^d-1)/2 is done as a product of q-power
// Frobenius twists of h^((Q-1)/2), which keeps every exponent within 64 bits.
void edf(const Poly& g, unsigned d, std::mt19937_64& rng,
         std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g.monic());
        return;
    }
    const FiniteField& F = g.field();
    const std::uint64_t Q = F.size();
    for (;;) {
        Poly h = random_poly(F, g.degree() - 1, rng);
        if (h.is_zero()) continue;
        Poly common = gcd(h, g);
        Poly split(F);
        if (common.degree() > 0 && common.degree() < g.degree()) {
            split = common;
        } else if (F.characteristic() == 2) {
            unsigned m = 0;
            for (std::uint64_t t = Q; t > 1; t >>= 1) ++m;
            Poly s = h % g;
            Poly acc = s;
            for (unsigned i = 1; i < d * m; ++i) {
                s = (s * s) % g;
                acc = acc + s;
            }
            split = gcd(acc, g);
        } else {
            Poly w = h.pow_mod((Q - 1) / 2, g);
            Poly cur = w;
            Poly acc = w;
            for (unsigned i = 1; i < d; ++i) {
                cur = cur.pow_mod(Q, g);
                acc = (acc * cur) % g;
            }
            Poly one = Poly::constant(F.one());
            split = gcd(acc - one, g);
        }
        if (split.degree() > 0 && split.degree() < g.degree()) {
            edf(split, d, rng, out);
            edf(g / split, d, rng, out);
            return;
        }
    }
}

// Distinct-degree decomposition of a squarefree monic polynomial followed by
// equal-degree splitting.
std::vector<Poly> factor_squarefree(const Poly& s) {
    const FiniteField& F = s.field();
    std::vector<Poly> out;
    if (s.degree() <= 0) return out;
    if (s.degree() == 1) {
        out.push_back(s.monic());
        return out;
    }
    // root scan keeps the degree <= 2 case transparent at desk scale
    if (s.degree() == 2 && F.size() <= 4096) {
        std::vector<FieldElement> roots;
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            FieldElement x = F.element_at(i);
            if (s.eval(x).is_zero()) roots.push_back(x);
        }
        if (roots.empty()) {
            out.push_back(s.monic());
        } else {
            for (const auto& r : roots) {
                out.push_back(Poly(F, {F.zero() - r, F.one()}));
            }
        }
        return out;
    }

    std::mt19937_64 rng(derive_seed(s));
    const std::uint64_t Q = F.size();
    Poly work = s.monic();
    Poly t = Poly::variable(F);
    Poly h = t % work;
    unsigned d = 0;
    while (work.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = h.pow_mod(Q, work);
        Poly g = gcd(h - t, work);
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            work = work / g;
            h = h % work;
        }
    }
    if (work.degree() > 0) out.push_back(work.monic());
    return out;
}

}  // namespace

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    const FiniteField& F = f.field();
    Factorization result{f.leading_coeff(), {}};
    if (f.degree() == 0) return result;

    const Poly fc = f.monic();
    std::set<Poly, PolyLess> irreducibles;
    Poly work = fc;
    while (work.degree() > 0) {
        Poly d = work.derivative();
        if (d.is_zero()) {
            work = pth_root(work);
            continue;
        }
        Poly sq = work / gcd(work, d);
        for (const Poly& pi : factor_squarefree(sq)) irreducibles.insert(pi);
        for (const Poly& pi : irreducibles) {
            while (pi.divides(work)) work = work / pi;
        }
    }

    Poly check = Poly::constant(F.one());
    for (const Poly& pi : irreducibles) {
        auto [mult, rest] = remove_all_factors(fc, pi);
        (void)rest;
        result.factors.emplace_back(pi, mult);
        for (int i = 0; i < mult; ++i) check = check * pi;
    }
    if (!(check == fc)) throw std::logic_error("factorization does not reconstruct input");
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    const unsigned k = static_cast<unsigned>(f.degree());
    if (k == 1) return true;
    const FiniteField& F = f.field();
    const std::uint64_t Q = F.size();
    const Poly fm = f.monic();
    const Poly t = Poly::variable(F);

    std::vector<Poly> frob(k + 1, Poly(F));
    frob[0] = t % fm;
    for (unsigned i = 1; i <= k; ++i) frob[i] = frob[i - 1].pow_mod(Q, fm);
    if (!(frob[k] == t % fm)) return false;
    for (std::uint64_t l : small_prime_factors(k)) {
        Poly d = gcd(frob[k / l] - t, fm);
        if (!d.is_one()) return false;
    }
    return true;
}

std::vector<FieldElement> roots_in_field(const Poly& f) {
    std::vector<FieldElement> roots;
    for (const auto& [pi, mult] : factor(f).factors) {
        if (pi.degree() == 1) {
            FieldElement r = f.field().zero() - pi.coeff(0);
            for (int i = 0; i < mult; ++i) roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

FieldElement resultant(const Poly& f, const Poly& g) {
    const FiniteField& F = f.field();
    if (f.is_zero() || g.is_zero()) return F.zero();
    if (f.degree() == 0) return f.leading_coeff().pow(g.degree());
    if (g.degree() == 0) return g.leading_coeff().pow(f.degree());

    FieldElement res = F.one();
    Poly a = f, b = g;
    while (b.degree() > 0) {
        Poly r = a % b;
        if (r.is_zero()) return F.zero();
        const int da = a.degree(), db = b.degree(), dr = r.degree();
        if ((static_cast<long long>(da) * db) % 2 == 1) res = F.zero() - res;
        res = res * b.leading_coeff().pow(da - dr);
        a = b;
        b = r;
    }
    return res * b.leading_coeff().pow(a.degree());
}

FieldElement discriminant(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    const FiniteField& F = f.field();
    Poly fp = f.derivative();
    if (fp.is_zero()) return F.zero();
    FieldElement r = resultant(f, fp);
    const int n = f.degree();
    if ((static_cast<long long>(n) * (n - 1) / 2) % 2 == 1) r = F.zero() - r;
    return r / f.leading_coeff();
}

std::pair<int, Poly> remove_all_factors(const Poly& f, const Poly& pi) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    int mult = 0;
    Poly rest = f;
    for (;;) {
        auto [q, r] = rest.divmod(pi);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
    }
    return {mult, rest};
}

namespace {

// index of a monic polynomial of known degree in canonical order: the
// coefficient tuple (c_0, ..., c_{d-1}) read with c_0 most significant
std::uint64_t monic_index(const Poly& f, unsigned d, std::uint64_t q) {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < d; ++i) idx = idx * q + f.coeff(i).index();
    return idx;
}

Poly monic_from_index(const FiniteField& F, unsigned d, std::uint64_t idx) {
    // the least significant digit of idx is the coefficient of t^(d-1)
    std::vector<FieldElement> c(d + 1, F.one());
    for (unsigned i = d; i-- > 0;) {
        c[i] = F.element_at(idx % F.size());
        idx /= F.size();
    }
    return Poly(F, std::move(c));
}

}  // namespace

const std::vector<Poly>& monic_irreducibles(const FiniteField& field, unsigned d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    const std::uint64_t q = field.size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (total > (std::uint64_t(1) << 26) / q) {
            throw std::invalid_argument("irreducible enumeration too large");
        }
        total *= q;
    }

    // lower-degree tables are needed for the product sieve; build them
    // before taking the lock
    for (unsigned k = 1; k <= d / 2; ++k) monic_irreducibles(field, k);

    static std::mutex mu;
    static std::map<std::pair<const FiniteField*, unsigned>, std::vector<Poly>>
        memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&field, d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<Poly> out;
    if (d == 1) {
        for (std::uint64_t i = 0; i < q; ++i) {
            out.push_back(Poly(field, {field.element_at(i), field.one()}));
        }
    } else {
        // every reducible monic of degree d is an irreducible of degree
        // k <= d/2 times a monic of degree d - k
        std::vector<bool> reducible(total, false);
        for (unsigned k = 1; k <= d / 2; ++k) {
            const auto& low = memo.at(std::make_pair(&field, k));
            std::uint64_t cof = 1;
            for (unsigned i = 0; i < d - k; ++i) cof *= q;
            for (const Poly& g : low) {
                for (std::uint64_t h = 0; h < cof; ++h) {
                    Poly prod = g * monic_from_index(field, d - k, h);
                    reducible[monic_index(prod, d, q)] = true;
                }
            }
        }
        for (std::uint64_t i = 0; i < total; ++i) {
            if (!reducible[i]) out.push_back(monic_from_index(field, d, i));
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

std::vector<Poly> monic_irreducibles_up_to(const FiniteField& field,
                                           unsigned max_degree) {
    std::vector<Poly> out;
    for (unsigned d = 1; d <= max_degree; ++d) {
        const auto& table = monic_irreducibles(field, d);
        out.insert(out.end(), table.begin(), table.end());
    }
    return out;
}

// --- embeddings ---

const FiniteField& extension_field(const FiniteField& base, unsigned times) {
    if (times < 1) throw std::invalid_argument("extension multiple must be >= 1");
    return FiniteField::get(base.characteristic(),
                            base.extension_degree() * times,
                            FiniteField::kHardMaxQ);
}

namespace {

// Image of the source generator in the target field, memoized per pair.
FieldElement generator_image(const FiniteField& src, const FiniteField& dst) {
    static std::mutex mu;
    static std::map<std::pair<const FiniteField*, const FiniteField*>,
                    FieldElement>
        memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&src, &dst);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const FiniteField& Fp = FiniteField::get(src.characteristic(), 1,
                                             FiniteField::kHardMaxQ);
    Poly mod = Poly::from_ints(Fp, src.modulus());
    FieldElement tau = canonical_root(mod, dst);
    memo.emplace(key, tau);
    return tau;
}

}  // namespace

FieldElement embed(const FieldElement& a, const FiniteField& target) {
    const FiniteField& src = a.field();
    if (&src == &target) return a;
    if (src.characteristic() != target.characteristic()
        || target.extension_degree() % src.extension_degree() != 0) {
        throw std::invalid_argument("no canonical embedding between these fields");
    }
    if (src.extension_degree() == 1) {
        return target.element({a.coeffs()[0]});
    }
    FieldElement tau = generator_image(src, target);
    FieldElement acc = target.zero();
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * tau + target.element({c[i]});
    }
    return acc;
}

Poly embed_poly(const Poly& f, const FiniteField& target) {
    if (&f.field() == &target) return f;
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(embed(x, target));
    return Poly(target, std::move(c));
}

FieldElement canonical_root(const Poly& f, const FiniteField& target) {
    static std::mutex mu;
    static std::map<std::tuple<const FiniteField*, const FiniteField*,
                               std::vector<std::uint64_t>>,
                    FieldElement>
        memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(std::make_tuple(&f.field(), &target, f.key()));
        if (it != memo.end()) return it->second;
    }
    Poly fe = embed_poly(f, target);
    std::vector<FieldElement> roots = roots_in_field(fe);
    if (roots.empty()) {
        throw std::invalid_argument("polynomial has no root in the target field");
    }
    FieldElement best = roots.front();
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_tuple(&f.field(), &target, f.key()), best);
    return best;
}

unsigned frobenius_orbit_size(const FieldElement& a, std::uint64_t q0) {
    FieldElement b = a.pow(q0);
    unsigned n = 1;
    while (!(b == a)) {
        b = b.pow(q0);
        ++n;
        if (n > 256) throw std::logic_error("frobenius orbit did not close");
    }
    return n;
}

}  // namespace kummer
