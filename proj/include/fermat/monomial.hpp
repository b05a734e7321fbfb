#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "fermat/core.hpp"

namespace fermat {

inline constexpr int max_vars = 4;  // x, y, z plus one elimination variable

/// Exponent vector.  Rings here never exceed max_vars variables.
struct Monomial {
    std::array<std::uint16_t, max_vars> e{};
    std::uint8_t nvars = 0;

    static Monomial unit(unsigned nvars) {
        Monomial m;
        m.nvars = static_cast<std::uint8_t>(nvars);
        return m;
    }
    static Monomial var(unsigned i, unsigned nvars, unsigned power = 1) {
        Monomial m = unit(nvars);
        m.e[i] = static_cast<std::uint16_t>(power);
        return m;
    }

    int degree() const {
        int d = 0;
        for (unsigned i = 0; i < nvars; ++i) d += e[i];
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.nvars == b.nvars && a.e == b.e;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (unsigned i = 0; i < a.nvars; ++i)
            r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
        return r;
    }

    bool divides(const Monomial& other) const {
        for (unsigned i = 0; i < nvars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    /// Quotient this / d (caller guarantees divisibility).
    Monomial quotient_by(const Monomial& d) const {
        Monomial r = *this;
        for (unsigned i = 0; i < nvars; ++i)
            r.e[i] = static_cast<std::uint16_t>(e[i] - d.e[i]);
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (unsigned i = 0; i < a.nvars; ++i)
            r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool coprime_with(const Monomial& b) const {
        for (unsigned i = 0; i < nvars; ++i)
            if (e[i] && b.e[i]) return false;
        return true;
    }
};

struct MonomialOrder {
    enum class Kind { grevlex, lex, block_elimination };
    Kind kind = Kind::grevlex;
    unsigned front_block = 0;  // variables 0..front_block-1 are eliminated first

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder elimination(unsigned front) { return {Kind::block_elimination, front}; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.front_block == b.front_block;
    }

    /// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case Kind::lex:
            return lex_cmp(a, b, 0, a.nvars);
        case Kind::grevlex:
            return grevlex_cmp(a, b, 0, a.nvars);
        case Kind::block_elimination: {
            int c = grevlex_cmp(a, b, 0, front_block);
            if (c != 0) return c;
            return grevlex_cmp(a, b, front_block, a.nvars);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    static int lex_cmp(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
        for (unsigned i = lo; i < hi; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
    static int grevlex_cmp(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
        int da = 0, db = 0;
        for (unsigned i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        // equal degree: last nonzero entry of a-b negative means a greater
        for (unsigned i = hi; i-- > lo;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned i = 0; i < m.nvars; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace fermat
