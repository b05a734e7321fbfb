#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fermat/core.hpp"

namespace fermat {

/// Element of a prime field, stored as the least nonnegative residue.
struct FieldElement {
    std::uint64_t value = 0;

    friend bool operator==(FieldElement a, FieldElement b) { return a.value == b.value; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.value != b.value; }
};

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    if (m % 3 == 0) return m == 3;
    for (std::uint64_t d = 5; d * d <= m; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

/// F_p chosen so that it carries n distinct n-th roots of unity
/// (p prime, p = 1 mod n).
class PrimeField {
public:
    PrimeField(std::uint64_t p, unsigned n) : p_(p), n_(n) {
        if (!is_prime(p)) throw error("modulus " + std::to_string(p) + " is not prime");
        if (n == 0 || (p - 1) % n != 0)
            throw error("prime " + std::to_string(p) + " is not 1 mod " + std::to_string(n));
        if (p % n == 0 && n > 1) throw error("prime divides n");
    }

    std::uint64_t modulus() const { return p_; }
    unsigned n() const { return n_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement element(std::uint64_t v) const { return {v % p_}; }
    FieldElement element_of_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return {static_cast<std::uint64_t>(r)};
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        std::uint64_t s = a.value + b.value;
        if (s >= p_) s -= p_;
        return {s};
    }
    FieldElement sub(FieldElement a, FieldElement b) const {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
    FieldElement mul(FieldElement a, FieldElement b) const {
        // widen-then-reduce keeps word-sized moduli exact
        return {static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a.value) * b.value) % p_)};
    }
    FieldElement pow(FieldElement a, std::uint64_t e) const {
        FieldElement r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    FieldElement inv(FieldElement a) const {
        if (a.value == 0) throw error("division by zero in F_p");
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_ && a.n_ == b.n_;
    }

private:
    std::uint64_t p_;
    unsigned n_;
};

/// Smallest prime p >= floor with p = 1 (mod n).  Exists by Dirichlet;
/// the default floor keeps small binomial coefficients nonzero mod p.
inline std::uint64_t choose_prime(unsigned n, std::uint64_t floor = 10000) {
    if (n < 2) throw error("choose_prime requires n >= 2");
    std::uint64_t p = std::max<std::uint64_t>(floor, 2);
    // align upward to p = 1 (mod n)
    while (p % n != 1 % n) ++p;
    while (!is_prime(p)) p += n;
    return p;
}

/// All n solutions of r^n = 1 in the field, sorted ascending (contains 1).
inline std::vector<FieldElement> nth_roots(const PrimeField& field) {
    const std::uint64_t p = field.modulus();
    const unsigned n = field.n();
    // find a primitive root of F_p* (p is small; trial factor p-1)
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    std::uint64_t g = 2;
    for (;; ++g) {
        bool primitive = true;
        for (std::uint64_t q : prime_factors) {
            if (field.pow({g}, (p - 1) / q).value == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) break;
    }
    FieldElement omega = field.pow({g}, (p - 1) / n);
    std::vector<FieldElement> roots;
    FieldElement r = field.one();
    for (unsigned i = 0; i < n; ++i) {
        roots.push_back(r);
        r = field.mul(r, omega);
    }
    std::sort(roots.begin(), roots.end(),
              [](FieldElement a, FieldElement b) { return a.value < b.value; });
    return roots;
}

}  // namespace fermat
