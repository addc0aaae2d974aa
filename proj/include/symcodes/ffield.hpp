#pragma once
// Exact arithmetic in the prime field F_p, plus the two F_{p^f} facts the
// rest of the library needs: squareness of a prime-field element in the
// extension, and canonical square roots in F_p itself.  Extension fields
// are never materialised as value types.
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symcodes {

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Field descriptor F_q with q = p^f.  Arithmetic in this library is always
// carried out in the prime field; f only influences classification logic.
struct FieldSpec {
    uint32_t p = 0;
    uint32_t f = 1;

    void validate() const {
        if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p = " + std::to_string(p) + " is not prime");
        if (p >= (1u << 31)) throw std::invalid_argument("FieldSpec: p must be < 2^31");
        if (f < 1) throw std::invalid_argument("FieldSpec: f must be >= 1");
    }
    bool operator==(const FieldSpec&) const = default;
};

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    base %= mod;
    uint64_t r = 1 % mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// One element of F_p.  Values carry their modulus; mixing moduli is a usage
// error and throws rather than silently reducing.
struct Fp {
    uint32_t v = 0;
    uint32_t p = 0;

    Fp() = default;
    Fp(int64_t value, uint32_t prime) : p(prime) {
        if (prime < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        int64_t m = value % static_cast<int64_t>(prime);
        if (m < 0) m += prime;
        v = static_cast<uint32_t>(m);
    }

    bool operator==(const Fp&) const = default;

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        uint64_t s = static_cast<uint64_t>(a.v) + b.v;
        return Fp::raw(s >= a.p ? static_cast<uint32_t>(s - a.p) : static_cast<uint32_t>(s), a.p);
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        return Fp::raw(a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p);
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        return Fp::raw(static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % a.p), a.p);
    }
    Fp operator-() const { return Fp::raw(v ? p - v : 0, p); }

    static Fp raw(uint32_t v, uint32_t p) {
        Fp x;
        x.v = v;
        x.p = p;
        return x;
    }
    void check(const Fp& o) const {
        if (p != o.p) throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p) + " and " + std::to_string(o.p));
    }
};

// Multiplicative inverse by Fermat; a = 0 has none.
inline Fp inverse(Fp a) {
    if (a.v == 0) throw std::domain_error("Fp: 0 has no inverse mod " + std::to_string(a.p));
    return Fp::raw(static_cast<uint32_t>(pow_mod(a.v, a.p - 2, a.p)), a.p);
}

inline Fp operator/(Fp a, Fp b) { return a * inverse(b); }

// Is the prime-field element a = v mod p a square inside F_{p^f}?
// a = 0 is a square; for even f every prime-field element is (the squaring
// map on F_{p^2} covers F_p); for odd f squareness in the extension agrees
// with squareness in F_p, decided by the Euler criterion a^((p-1)/2).
inline bool is_square(Fp a, const FieldSpec& spec) {
    spec.validate();
    if (a.p != spec.p) throw std::invalid_argument("is_square: element modulus does not match field");
    if (a.v == 0) return true;
    if (spec.f % 2 == 0) return true;
    if (a.p == 2) return true;
    return pow_mod(a.v, (a.p - 1) / 2, a.p) == 1;
}

namespace detail {

// Tonelli-Shanks, see https://en.wikipedia.org/wiki/Tonelli%E2%80%93Shanks_algorithm.
// Requires p odd prime and a a nonzero quadratic residue.
inline uint32_t tonelli_shanks(uint32_t a, uint32_t p) {
    uint32_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    if (s == 1) return static_cast<uint32_t>(pow_mod(a, (p + 1) / 4, p));
    uint32_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;  // any non-residue will do
    uint64_t m = s;
    uint64_t c = pow_mod(z, q, p);
    uint64_t t = pow_mod(a, q, p);
    uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        uint64_t b = c;
        for (uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return static_cast<uint32_t>(r);
}

}  // namespace detail

// Canonical square root in F_p: the root r with r <= p - r.  Throws
// std::domain_error for non-residues.  Small moduli are handled by direct
// search, large ones by Tonelli-Shanks.
inline Fp sqrt_mod(Fp a) {
    if (a.v == 0) return a;
    if (a.p == 2) return a;
    if (pow_mod(a.v, (a.p - 1) / 2, a.p) != 1)
        throw std::domain_error("sqrt_mod: " + std::to_string(a.v) + " is not a square mod " + std::to_string(a.p));
    uint32_t r;
    if (a.p < 1000) {
        r = 0;
        for (uint32_t x = 1; x < a.p; ++x)
            if (static_cast<uint64_t>(x) * x % a.p == a.v) { r = x; break; }
    } else {
        r = detail::tonelli_shanks(a.v, a.p);
    }
    return Fp::raw(r <= a.p - r ? r : a.p - r, a.p);
}

}  // namespace symcodes
