#include "iaf/finfield.hpp"

#include <algorithm>
#include <sstream>

namespace iaf::finfield {
namespace {

using Poly = std::vector<Residue>;  // little-endian, not necessarily monic

std::uint64_t mod_p(std::int64_t v, std::uint64_t p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m);
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

// c += a*b over F_p, schoolbook.
Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = static_cast<Residue>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return c;
}

// Remainder of f modulo the monic polynomial m.
Poly poly_rem(Poly f, const Poly& m, std::uint64_t p) {
    const int dm = degree(m);
    trim(f);
    while (degree(f) >= dm) {
        const std::uint64_t c = f.back();
        const std::size_t shift = f.size() - m.size();
        if (c != 0) {
            for (std::size_t j = 0; j + 1 < m.size(); ++j) {
                std::uint64_t t = static_cast<std::uint64_t>(m[j]) * c % p;
                f[shift + j] = static_cast<Residue>((f[shift + j] + p - t) % p);
            }
        }
        f.pop_back();
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    return poly_rem(poly_mul(a, b, p), m, p);
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // p is prime, a != 0: Fermat.
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        std::uint64_t lc_inv = inv_mod_p(b.back(), p);
        Poly bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            bm[i] = static_cast<Residue>(static_cast<std::uint64_t>(b[i]) * lc_inv % p);
        a = poly_rem(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// x^(p^k) mod m via k successive Frobenius powers.
Poly frobenius_power(const Poly& m, std::uint64_t p, unsigned k) {
    Poly x = {0, 1};
    Poly t = poly_rem(x, m, p);
    for (unsigned i = 0; i < k; ++i) {
        // t <- t^p mod m
        Poly r = {1};
        Poly base = t;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) r = poly_mulmod(r, base, m, p);
            base = poly_mulmod(base, base, m, p);
            e >>= 1;
        }
        t = std::move(r);
    }
    return t;
}

bool poly_equal(Poly a, Poly b) {
    trim(a);
    trim(b);
    return a == b;
}

// Distinct prime factors of n, ascending.
std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
            out.push_back(r);
            while (n % r == 0) n /= r;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's criterion: monic f of degree n is irreducible over F_p iff
// x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const int n = degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;

    Poly x = {0, 1};
    Poly xq = frobenius_power(f, p, static_cast<unsigned>(n));
    if (!poly_equal(xq, poly_rem(x, f, p))) return false;

    for (const unsigned r : prime_factors(static_cast<unsigned>(n))) {
        Poly d = frobenius_power(f, p, static_cast<unsigned>(n) / r);
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<Residue>((d[1] + p - 1) % p);  // subtract x
        if (degree(poly_gcd(d, f, p)) > 0) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> factor_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned n = 0;
        std::uint64_t t = q;
        while (t % p == 0) {
            t /= p;
            ++n;
        }
        if (t != 1) return std::nullopt;
        return std::make_pair(p, n);
    }
    return std::make_pair(q, 1u);  // q itself is prime
}

Field Field::make(std::uint64_t p, unsigned n) {
    if (n == 0) fail("DegreeZero", "extension degree must be >= 1");
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > kMaxQ / p) fail("Overflow", "p^n exceeds the supported range 2^20");
        q *= p;
    }
    if (q > kMaxQ) fail("Overflow", "p^n exceeds the supported range 2^20");

    Field f;
    f.p_ = p;
    f.n_ = n;
    f.q_ = q;

    if (n == 1) {
        f.modulus_ = {0, 1};  // X
        return f;
    }

    // Least monic irreducible of degree n, low-degree-first lexicographic:
    // c0 is the most significant digit of the search counter.
    std::vector<Residue> coeffs(n, 0);
    for (std::uint64_t counter = 0;; ++counter) {
        std::uint64_t t = counter;
        for (unsigned i = 0; i < n; ++i) {
            coeffs[n - 1 - i] = static_cast<Residue>(t % p);
            t /= p;
        }
        if (t != 0) break;  // exhausted (cannot happen: irreducibles exist)

        Poly cand(coeffs.begin(), coeffs.end());
        cand.push_back(1);  // monic

        bool ok;
        // degree 2 and 3: irreducible iff no root in F_p
        if (n <= 3) {
            ok = true;
            for (std::uint64_t a = 0; a < p && ok; ++a) {
                std::uint64_t v = 0, xp = 1;
                for (const Residue c : cand) {
                    v = (v + c * xp) % p;
                    xp = xp * a % p;
                }
                if (v == 0) ok = false;
            }
        } else {
            ok = is_irreducible(cand, p);
        }
        if (ok) {
            f.modulus_.assign(cand.begin(), cand.end());
            return f;
        }
    }
    fail("Overflow", "no irreducible modulus found");  // unreachable
}

void Field::check(const FieldElement& a) const {
    if (a.coeffs.size() != n_) fail("FieldMismatch", "element has wrong coefficient count");
    for (const Residue c : a.coeffs)
        if (c >= p_) fail("FieldMismatch", "coefficient out of range");
}

FieldElement Field::zero() const { return FieldElement{std::vector<Residue>(n_, 0)}; }

FieldElement Field::one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement Field::from_integer(std::int64_t v) const {
    FieldElement e = zero();
    e.coeffs[0] = static_cast<Residue>(mod_p(v, p_));
    return e;
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= q_) fail("FieldMismatch", "element index out of range");
    FieldElement e = zero();
    for (unsigned i = 0; i < n_; ++i) {
        e.coeffs[i] = static_cast<Residue>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t Field::index_of(const FieldElement& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (unsigned i = n_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement c = zero();
    for (unsigned i = 0; i < n_; ++i)
        c.coeffs[i] = static_cast<Residue>((static_cast<std::uint64_t>(a.coeffs[i]) + b.coeffs[i]) % p_);
    return c;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement c = zero();
    for (unsigned i = 0; i < n_; ++i)
        c.coeffs[i] = static_cast<Residue>((static_cast<std::uint64_t>(a.coeffs[i]) + p_ - b.coeffs[i]) % p_);
    return c;
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement c = zero();
    for (unsigned i = 0; i < n_; ++i)
        c.coeffs[i] = static_cast<Residue>((p_ - a.coeffs[i]) % p_);
    return c;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    Poly prod = poly_mul(Poly(a.coeffs.begin(), a.coeffs.end()),
                         Poly(b.coeffs.begin(), b.coeffs.end()), p_);
    Poly r = poly_rem(std::move(prod), Poly(modulus_.begin(), modulus_.end()), p_);
    FieldElement c = zero();
    for (std::size_t i = 0; i < r.size(); ++i) c.coeffs[i] = r[i];
    return c;
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    check(a);
    FieldElement r = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) fail("ZeroInverse", "0 has no multiplicative inverse");
    return pow(a, q_ - 2);
}

bool Field::is_zero(const FieldElement& a) const {
    check(a);
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Residue c) { return c == 0; });
}

bool Field::is_nonzero_square(const FieldElement& a) const {
    if (is_zero(a)) return false;
    if (p_ == 2) return true;  // Frobenius is bijective in characteristic 2
    return pow(a, (q_ - 1) / 2) == one();
}

std::optional<FieldElement> Field::sqrt_of_minus_one() const {
    if (p_ == 2) return one();  // -1 = 1
    if (q_ % 4 == 3) return std::nullopt;
    const FieldElement minus_one = neg(one());
    for (std::uint64_t idx = 1; idx < q_; ++idx) {
        FieldElement a = element(idx);
        if (mul(a, a) == minus_one) return a;
    }
    return std::nullopt;  // unreachable for q % 4 == 1
}

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint64_t idx = 0; idx < q_; ++idx) out.push_back(element(idx));
    return out;
}

std::string Field::to_string(const FieldElement& a) const {
    check(a);
    if (n_ == 1) return std::to_string(a.coeffs[0]);
    std::string s;
    for (unsigned i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += std::to_string(a.coeffs[i]);
    }
    return s;
}

FieldElement Field::parse(const std::string& text) const {
    std::vector<Residue> coeffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        long long v = std::stoll(part, &pos);
        if (pos != part.size()) fail("FieldMismatch", "bad element text: " + text);
        coeffs.push_back(static_cast<Residue>(mod_p(v, p_)));
    }
    if (coeffs.empty() || coeffs.size() > n_)
        fail("FieldMismatch", "bad element text: " + text);
    coeffs.resize(n_, 0);
    return FieldElement{std::move(coeffs)};
}

std::string Field::q_string() const {
    if (n_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(n_);
}

}  // namespace iaf::finfield
