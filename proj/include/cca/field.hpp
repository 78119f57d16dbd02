#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cca {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [&](uint64_t a, uint64_t b) -> uint64_t {
        return (uint64_t)((unsigned __int128)a * b % n);
    };
    auto powmod = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Exact rational coefficients. Elements are always canonical (reduced,
// positive denominator); mpq_class maintains that on its own.
struct Rationals {
    using Elem = mpq_class;

    static constexpr uint64_t characteristic() { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_digits(const std::string& ds) const { return Elem(mpz_class(ds)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    bool is_negative(const Elem& a) const { return a < 0; }
    Elem abs(const Elem& a) const { return a < 0 ? Elem(-a) : a; }
};

// Prime field F_p, elements stored as canonical representatives in [0, p).
struct PrimeField {
    using Elem = uint64_t;

    uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(uint64_t prime) : p(prime) {
        if (!is_prime_u64(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    }

    uint64_t characteristic() const { return p; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long r = v % (long)p;
        if (r < 0) r += (long)p;
        return (Elem)r;
    }
    Elem from_digits(const std::string& ds) const {
        mpz_class z(ds);
        mpz_class r = z % (unsigned long)p;
        if (r < 0) r += (unsigned long)p;
        return r.get_ui();
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (Elem)((unsigned __int128)a * b % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid
        int64_t t = 0, nt = 1;
        int64_t r = (int64_t)p, nr = (int64_t)a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += (int64_t)p;
        return (Elem)t;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1 % p; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }
    bool is_negative(Elem) const { return false; }
    Elem abs(Elem a) const { return a; }
};

} // namespace cca
