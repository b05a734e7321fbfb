#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermat/hilbert.hpp"
#include "fermat/matrix.hpp"

namespace fermat {

namespace detail {

inline std::uint64_t binomial_u64(unsigned a, unsigned b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    unsigned __int128 acc = 1;
    for (unsigned i = 1; i <= b; ++i) {
        acc = acc * (a - b + i) / i;
        if (acc > static_cast<unsigned __int128>(~std::uint64_t{0}))
            throw error("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

inline long long choose2(long long m) { return m * (m - 1) / 2; }

/// C(a, b) as a field element, rejecting primes that annihilate it.
inline FieldElement binomial_elem(const PrimeField& F, unsigned a, unsigned b) {
    FieldElement c = F.element(binomial_u64(a, b));
    if (c.value == 0)
        throw error("binomial C(" + std::to_string(a) + "," + std::to_string(b) +
                    ") vanishes mod p; prime too small");
    return c;
}

}  // namespace detail

/// All objects attached to one Fermat configuration: the parameter n, the
/// ring over a chosen prime field, the pencil forms f, g, h, the ideal
/// I = (xf, yg, zh) and the four components of its symbolic-power
/// decomposition.  Immutable after construction; construction verifies
/// f + g + h = 0 and that I equals the fourfold intersection.
class FermatContext {
public:
    FermatContext(unsigned n, std::uint64_t prime) : n_(n) {
        if (n < 2) throw error("fermat context requires n >= 2");
        ring_ = Ring::make({"x", "y", "z"}, PrimeField(prime, n));
        x_ = Polynomial::variable(ring_, 0);
        y_ = Polynomial::variable(ring_, 1);
        z_ = Polynomial::variable(ring_, 2);
        f_ = pow(y_, n) - pow(z_, n);
        g_ = pow(z_, n) - pow(x_, n);
        h_ = pow(x_, n) - pow(y_, n);
        if (!(f_ + g_ + h_).is_zero()) throw error("f + g + h != 0");
        I_ = Ideal(ring_, {x_ * f_, y_ * g_, z_ * h_});
        pencil_ = Ideal(ring_, {f_, g_});
        coords_[0] = Ideal(ring_, {x_, y_});
        coords_[1] = Ideal(ring_, {y_, z_});
        coords_[2] = Ideal(ring_, {z_, x_});
        Ideal decomposition =
            intersect(intersect(intersect(pencil_, coords_[0]), coords_[1]), coords_[2]);
        if (!equal(decomposition, I_))
            throw error("I does not match its fourfold decomposition over p = " +
                        std::to_string(prime));
    }

    static FermatContext with_auto_prime(unsigned n) {
        return FermatContext(n, choose_prime(n));
    }

    unsigned n() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    std::uint64_t prime() const { return ring_->field().modulus(); }
    const Polynomial& f() const { return f_; }
    const Polynomial& g() const { return g_; }
    const Polynomial& h() const { return h_; }
    const Polynomial& x() const { return x_; }
    const Polynomial& y() const { return y_; }
    const Polynomial& z() const { return z_; }
    const Ideal& ideal() const { return I_; }
    const Ideal& pencil() const { return pencil_; }
    const Ideal& coord(unsigned i) const { return coords_[i]; }

    /// I^(m) as the fourfold intersection of (f,g)^m with the m-th powers
    /// of the three coordinate ideals, folded left to right.
    Ideal symbolic_power(unsigned m) const {
        if (m < 1) throw error("symbolic power requires m >= 1");
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = symbolic_cache_.find(m);
            if (it != symbolic_cache_.end()) return it->second;
        }
        Ideal result = power(pencil_, m);
        for (const Ideal& c : coords_) result = intersect(result, power(c, m));
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = symbolic_cache_.emplace(m, result);
        return it->second;
    }

    void require_block_machinery() const {
        if (n_ < 3) throw error("this construction requires n >= 3");
    }

private:
    unsigned n_;
    RingPtr ring_;
    Polynomial x_, y_, z_, f_, g_, h_;
    Ideal I_, pencil_;
    std::array<Ideal, 3> coords_;
    mutable std::mutex mu_;
    mutable std::map<unsigned, Ideal> symbolic_cache_;
};

// ---------------------------------------------------------------------------
// block matrices
// ---------------------------------------------------------------------------

/// (t+1) x t bidiagonal block: -b on the diagonal, a below it.
inline PolyMatrix block_H(const Polynomial& a, const Polynomial& b, unsigned t) {
    if (t < 1) throw shape_error("block_H requires t >= 1");
    PolyMatrix m(a.ring(), t + 1, t);
    for (unsigned c = 0; c < t; ++c) {
        m.set(c, c, -b);
        m.set(c + 1, c, a);
    }
    return m;
}

/// t x t block: a on the diagonal, -b on the superdiagonal and in the corner.
inline PolyMatrix block_C(const Polynomial& a, const Polynomial& b, unsigned t) {
    if (t < 2) throw shape_error("block_C requires t >= 2");
    PolyMatrix m(a.ring(), t, t);
    for (unsigned i = 0; i < t; ++i) m.set(i, i, a);
    for (unsigned i = 0; i + 1 < t; ++i) m.set(i, i + 1, -b);
    m.set(t - 1, 0, -b);
    return m;
}

/// Column (j+1) x 1 of binomial coefficients C(j, 0..j) as field constants.
/// Rejects primes too small to keep every entry nonzero.
inline PolyMatrix vector_E(unsigned j, const RingPtr& ring) {
    PolyMatrix m(ring, j + 1, 1);
    for (unsigned i = 0; i <= j; ++i)
        m.set(i, 0, Polynomial::constant(ring, detail::binomial_elem(ring->field(), j, i)));
    return m;
}

namespace detail {

inline FieldElement sign_of(const PrimeField& F, unsigned exponent) {
    return exponent % 2 == 0 ? F.one() : F.neg(F.one());
}

/// The explicit S_1, S_2, S_3 columns, each of height k(n-3)+1.
inline std::vector<Polynomial> explicit_S(const FermatContext& ctx, unsigned k, unsigned j) {
    const unsigned n = ctx.n();
    const unsigned t0 = k * (n - 3);
    const PrimeField& F = ctx.ring()->field();
    std::vector<Polynomial> s(t0 + 1, Polynomial::zero(ctx.ring()));
    if (j == 1) {
        // (-1)^{k(n-3)} x f e_{n-2}
        s[n - 3] = (ctx.x() * ctx.f()).scaled(sign_of(F, t0));
    } else if (j == 2) {
        // zeros above, then (-1)^{(k-1)(n-3)} y g E_{n-3}
        FieldElement sg = sign_of(F, (k - 1) * (n - 3));
        for (unsigned i = 0; i <= n - 3; ++i) {
            FieldElement c = F.mul(sg, binomial_elem(F, n - 3, i));
            s[t0 - (n - 3) + i] = (ctx.y() * ctx.g()).scaled(c);
        }
    } else if (j == 3) {
        // (-1)^{n-3} z h E_{(k-1)(n-3)}, then zeros below
        unsigned e = (k - 1) * (n - 3);
        FieldElement sg = sign_of(F, n - 3);
        for (unsigned i = 0; i <= e; ++i) {
            FieldElement c = F.mul(sg, binomial_elem(F, e, i));
            s[i] = (ctx.z() * ctx.h()).scaled(c);
        }
    } else {
        throw error("explicit_S handles only j <= 3");
    }
    return s;
}

struct CaseIndex {
    unsigned i;  // j = 3i + r
    unsigned r;  // 1 <= r <= 3
};

inline CaseIndex split_j(unsigned j) { return {(j - 1) / 3, (j - 1) % 3 + 1}; }

/// Determinant target for det [X_{j-3} | S_j], 4 <= j <= 3k.
inline Polynomial s_target(const FermatContext& ctx, unsigned k, unsigned j) {
    const unsigned n = ctx.n();
    auto [i, r] = split_j(j);
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();
    switch (r) {
    case 1:
        return pow(f, (k - 1 - i) * (n - 3) + 2 * i) * pow(g, (i + 1) * (n - 2) - 2) *
               pow(ctx.x(), i * n + 1);
    case 2:
        return pow(g, (k - 1 - i) * (n - 3) + 2 * i) * pow(h, (i + 1) * (n - 2) - 1) *
               pow(ctx.y(), i * n + 1);
    default:
        return pow(f, (i + 1) * (n - 2) - 1) * pow(h, (k - 1 - i) * (n - 3) + 2 * i + 1) *
               pow(ctx.z(), i * n + 1);
    }
}

inline PolyMatrix diagonal_block(const FermatContext& ctx, unsigned r) {
    switch (r) {
    case 1: return block_C(ctx.x(), ctx.y(), ctx.n());
    case 2: return block_C(ctx.y(), ctx.z(), ctx.n());
    default: return block_C(ctx.z(), ctx.x(), ctx.n());
    }
}

}  // namespace detail

/// One step of the recursive chain: the matrix X_j together with the
/// verified determinant identity behind its S column (for j >= 4).
struct XjStep {
    unsigned j;
    PolyMatrix matrix;
    std::optional<Polynomial> lifted_target;  // det [X_{j-3} | S_j], re-verified
};

/// Builds X_0 .. X_jmax.  For j >= 4 the S_j column is realized
/// constructively by lifting the prescribed determinant target against the
/// maximal minors of X_{j-3}; the resulting determinant is recomputed
/// exactly and must match, otherwise the construction refuses to proceed.
inline std::vector<XjStep> build_Xj_chain(const FermatContext& ctx, unsigned k, unsigned jmax) {
    ctx.require_block_machinery();
    if (k < 1) throw error("build_Xj requires k >= 1");
    if (jmax > 3 * k) throw error("build_Xj requires j <= 3k");
    const unsigned n = ctx.n();
    const unsigned t0 = k * (n - 3);
    const RingPtr& R = ctx.ring();

    std::vector<XjStep> chain;
    PolyMatrix X0 = t0 == 0 ? PolyMatrix(R, 1, 0) : block_H(ctx.f(), ctx.g(), t0);
    chain.push_back({0, X0, std::nullopt});

    for (unsigned j = 1; j <= jmax; ++j) {
        auto [i, r] = detail::split_j(j);
        const PolyMatrix& prev = chain[j - 1].matrix;

        std::vector<Polynomial> s;
        std::optional<Polynomial> verified;
        if (j <= 3) {
            s = detail::explicit_S(ctx, k, j);
        } else {
            const PolyMatrix& anchor = chain[j - 3].matrix;
            Polynomial target = detail::s_target(ctx, k, j);
            std::vector<Polynomial> minors = maximal_minors(anchor);
            Certificate cert = lift(target, minors);
            const unsigned m = anchor.cols();
            s.assign(anchor.rows(), Polynomial::zero(R));
            for (unsigned l = 0; l < anchor.rows(); ++l) {
                // cofactor signs along the appended column
                s[l] = (l + m) % 2 == 0 ? cert.coefficients[l] : -cert.coefficients[l];
            }
            Polynomial det = determinant(anchor.with_appended_column(s));
            if (det != target)
                throw paper_refuting("det [X_" + std::to_string(j - 3) + " | S_" +
                                     std::to_string(j) + "] does not match its target");
            verified = target;
        }

        PolyMatrix Z = detail::diagonal_block(ctx, r);
        PolyMatrix X(R, prev.rows() + n, prev.cols() + n);
        for (unsigned rr = 0; rr < prev.rows(); ++rr)
            for (unsigned cc = 0; cc < prev.cols(); ++cc) X.set(rr, cc, prev.at(rr, cc));
        for (unsigned l = 0; l < s.size(); ++l) X.set(l, prev.cols(), s[l]);
        for (unsigned rr = 0; rr < n; ++rr)
            for (unsigned cc = 0; cc < n; ++cc)
                X.set(prev.rows() + rr, prev.cols() + cc, Z.at(rr, cc));
        chain.push_back({j, std::move(X), std::move(verified)});
    }
    return chain;
}

inline PolyMatrix build_Xj(const FermatContext& ctx, unsigned k, unsigned j) {
    if (j < 1) throw error("build_Xj requires j >= 1");
    return build_Xj_chain(ctx, k, j).back().matrix;
}

/// The Hilbert-Burch block matrix presenting I^(n) at k = 1 (same as X_3
/// of the chain, built directly from its U, V, W description).
inline PolyMatrix build_X3(const FermatContext& ctx, unsigned k) {
    ctx.require_block_machinery();
    if (k < 1) throw error("build_X3 requires k >= 1");
    const unsigned n = ctx.n();
    const unsigned t0 = k * (n - 3);
    const RingPtr& R = ctx.ring();
    const PrimeField& F = R->field();
    PolyMatrix X(R, t0 + 3 * n + 1, t0 + 3 * n);

    for (unsigned c = 0; c < t0; ++c) {
        X.set(c, c, -ctx.g());
        X.set(c + 1, c, ctx.f());
    }
    // U: first column is (-1)^{k(n-3)} x f e_{n-2}
    X.set(n - 3, t0, (ctx.x() * ctx.f()).scaled(detail::sign_of(F, t0)));
    // V: bottom n-2 entries of the first column are (-1)^{(k-1)(n-3)} y g E_{n-3}
    {
        FieldElement sg = detail::sign_of(F, (k - 1) * (n - 3));
        for (unsigned i = 0; i <= n - 3; ++i) {
            FieldElement c = F.mul(sg, detail::binomial_elem(F, n - 3, i));
            X.set(t0 - (n - 3) + i, t0 + n, (ctx.y() * ctx.g()).scaled(c));
        }
    }
    // W: top (k-1)(n-3)+1 entries of the first column are (-1)^{n-3} z h E_{(k-1)(n-3)}
    {
        unsigned e = (k - 1) * (n - 3);
        FieldElement sg = detail::sign_of(F, n - 3);
        for (unsigned i = 0; i <= e; ++i) {
            FieldElement c = F.mul(sg, detail::binomial_elem(F, e, i));
            X.set(i, t0 + 2 * n, (ctx.z() * ctx.h()).scaled(c));
        }
    }
    const Polynomial vars[3][2] = {{ctx.x(), ctx.y()}, {ctx.y(), ctx.z()}, {ctx.z(), ctx.x()}};
    for (unsigned b = 0; b < 3; ++b) {
        PolyMatrix C = block_C(vars[b][0], vars[b][1], n);
        for (unsigned rr = 0; rr < n; ++rr)
            for (unsigned cc = 0; cc < n; ++cc)
                X.set(t0 + 1 + b * n + rr, t0 + b * n + cc, C.at(rr, cc));
    }
    return X;
}

/// The primed variant with H(f,g)_{n-4} on top (n >= 4), whose minors cut
/// out the (n-1)-st symbolic power.
inline PolyMatrix build_X3_prime(const FermatContext& ctx) {
    if (ctx.n() < 4) throw error("build_X3_prime requires n >= 4");
    const unsigned n = ctx.n();
    const unsigned t0 = n - 4;
    const RingPtr& R = ctx.ring();
    const PrimeField& F = R->field();
    PolyMatrix X(R, t0 + 3 * n + 1, t0 + 3 * n);

    for (unsigned c = 0; c < t0; ++c) {
        X.set(c, c, -ctx.g());
        X.set(c + 1, c, ctx.f());
    }
    // U': (-1)^{n-4} f e_{n-3}
    X.set(n - 4, t0, ctx.f().scaled(detail::sign_of(F, n - 4)));
    // V': g E_{n-4};  W': h E_{n-4}
    for (unsigned i = 0; i <= t0; ++i) {
        FieldElement c = detail::binomial_elem(F, t0, i);
        X.set(i, t0 + n, ctx.g().scaled(c));
        X.set(i, t0 + 2 * n, ctx.h().scaled(c));
    }
    const Polynomial vars[3][2] = {{ctx.x(), ctx.y()}, {ctx.y(), ctx.z()}, {ctx.z(), ctx.x()}};
    for (unsigned b = 0; b < 3; ++b) {
        PolyMatrix C = block_C(vars[b][0], vars[b][1], n);
        for (unsigned rr = 0; rr < n; ++rr)
            for (unsigned cc = 0; cc < n; ++cc)
                X.set(t0 + 1 + b * n + rr, t0 + b * n + cc, C.at(rr, cc));
    }
    return X;
}

// ---------------------------------------------------------------------------
// generator families
// ---------------------------------------------------------------------------

namespace detail {

/// a^i b^{t-i} monomial generators of (a, b)^t for two ring variables.
inline std::vector<Polynomial> two_var_power(const Polynomial& a, const Polynomial& b,
                                             unsigned t) {
    std::vector<Polynomial> out;
    for (unsigned i = 0; i <= t; ++i) out.push_back(pow(a, i) * pow(b, t - i));
    return out;
}

}  // namespace detail

/// The literal minimal generating family of I^(kn):
/// (fgh)^k (f,g)^{(n-3)k} plus the three cyclic monomial-multiple
/// families; count k(n-3) + 1 + 3kn.
inline std::vector<Polynomial> thm_generators(const FermatContext& ctx, unsigned k) {
    ctx.require_block_machinery();
    if (k < 1) throw error("thm_generators requires k >= 1");
    const unsigned n = ctx.n();
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();
    const Polynomial &x = ctx.x(), &y = ctx.y(), &z = ctx.z();

    std::vector<Polynomial> gens;
    Polynomial fgh_k = pow(f * g * h, k);
    for (const Polynomial& m : detail::two_var_power(f, g, (n - 3) * k))
        gens.push_back(fgh_k * m);
    for (unsigned i = 1; i <= k; ++i) {
        Polynomial pre1 = pow(f, (k - i) * (n - 2) + 2 * i) * pow(g, k + i * (n - 3)) *
                          pow(h, k - i) * pow(x, (i - 1) * n + 1);
        for (const Polynomial& m : detail::two_var_power(x, y, n - 1)) gens.push_back(pre1 * m);
        Polynomial pre2 = pow(f, k - i) * pow(g, (k - i) * (n - 2) + 2 * i) *
                          pow(h, k + i * (n - 3)) * pow(y, (i - 1) * n + 1);
        for (const Polynomial& m : detail::two_var_power(y, z, n - 1)) gens.push_back(pre2 * m);
        Polynomial pre3 = pow(f, k + i * (n - 3)) * pow(g, k - i) *
                          pow(h, (k - i) * (n - 2) + 2 * i) * pow(z, (i - 1) * n + 1);
        for (const Polynomial& m : detail::two_var_power(z, x, n - 1)) gens.push_back(pre3 * m);
    }
    return gens;
}

/// The compact rewriting of the same family: each cyclic block is a common
/// factor times the (k-1)-st power of a two-element ideal.
inline std::vector<Polynomial> compact_generators(const FermatContext& ctx, unsigned k) {
    ctx.require_block_machinery();
    if (k < 1) throw error("compact_generators requires k >= 1");
    const unsigned n = ctx.n();
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();
    const Polynomial &x = ctx.x(), &y = ctx.y(), &z = ctx.z();

    std::vector<Polynomial> gens;
    Polynomial fgh_k = pow(f * g * h, k);
    for (const Polynomial& m : detail::two_var_power(f, g, (n - 3) * k))
        gens.push_back(fgh_k * m);

    struct Block {
        Polynomial v, other, common, p1, p2;
    };
    const Block blocks[3] = {
        {x, y, pow(g, n - 2) * pow(f, 2), pow(f, n - 2) * g * h, pow(g, n - 2) * f * f * pow(x, n)},
        {y, z, pow(h, n - 2) * pow(g, 2), f * pow(g, n - 2) * h, pow(h, n - 2) * g * g * pow(y, n)},
        {z, x, pow(f, n - 2) * pow(h, 2), g * f * pow(h, n - 2), pow(f, n - 2) * h * h * pow(z, n)}};
    for (const Block& b : blocks) {
        for (unsigned s = 0; s + 1 <= k; ++s) {
            Polynomial factor = b.v * b.common * pow(b.p1, k - 1 - s) * pow(b.p2, s);
            for (const Polynomial& m : detail::two_var_power(b.v, b.other, n - 1))
                gens.push_back(factor * m);
        }
    }
    return gens;
}

// ---------------------------------------------------------------------------
// recursive chain ideals
// ---------------------------------------------------------------------------

/// I(X_j) by the generator-list recursion (no minors computed).
inline Ideal recursion_ideal(const FermatContext& ctx, unsigned k, unsigned j) {
    ctx.require_block_machinery();
    if (k < 1 || j > 3 * k) throw error("recursion_ideal requires k >= 1 and 0 <= j <= 3k");
    const unsigned n = ctx.n();
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();

    std::vector<Polynomial> gens;
    unsigned t0 = k * (n - 3);
    if (t0 == 0) {
        gens.push_back(Polynomial::constant(ctx.ring(), std::uint64_t{1}));
    } else {
        for (const Polynomial& m : detail::two_var_power(f, g, t0)) gens.push_back(m);
    }
    for (unsigned jj = 1; jj <= j; ++jj) {
        auto [i, r] = detail::split_j(jj);
        Polynomial mult = r == 1 ? h : (r == 2 ? f : g);
        std::vector<Polynomial> next;
        for (const Polynomial& p : gens) next.push_back(mult * p);
        Polynomial pre;
        std::vector<Polynomial> family;
        if (r == 1) {
            pre = pow(f, (k - 1 - i) * (n - 3) + 2 * i + 1) * pow(g, (i + 1) * (n - 2) - 1) *
                  pow(ctx.x(), i * n + 1);
            family = detail::two_var_power(ctx.x(), ctx.y(), n - 1);
        } else if (r == 2) {
            pre = pow(g, (k - 1 - i) * (n - 3) + 2 * i + 1) * pow(h, (i + 1) * (n - 2)) *
                  pow(ctx.y(), i * n + 1);
            family = detail::two_var_power(ctx.y(), ctx.z(), n - 1);
        } else {
            pre = pow(f, (i + 1) * (n - 2)) * pow(h, (k - 1 - i) * (n - 3) + 2 * i + 2) *
                  pow(ctx.z(), i * n + 1);
            family = detail::two_var_power(ctx.z(), ctx.x(), n - 1);
        }
        for (const Polynomial& m : family) next.push_back(pre * m);
        gens = std::move(next);
    }
    return Ideal(ctx.ring(), std::move(gens));
}

/// The fat-point intersection ideal matching X_j, built independently from
/// powers and intersections of the decomposition components.
inline Ideal chain_intersection_ideal(const FermatContext& ctx, unsigned k, unsigned j) {
    ctx.require_block_machinery();
    if (k < 1 || j < 1 || j > 3 * k) throw error("chain_intersection_ideal requires 1 <= j <= 3k");
    const unsigned n = ctx.n();
    auto [i, r] = detail::split_j(j);
    unsigned e_pencil = k * (n - 3) + j;
    unsigned e_xy = (i + 1) * n;
    unsigned e_yz = (r >= 2 ? i + 1 : i) * n;
    unsigned e_zx = (r >= 3 ? i + 1 : i) * n;

    Ideal result = power(ctx.pencil(), e_pencil);
    const unsigned exps[3] = {e_xy, e_yz, e_zx};
    for (unsigned b = 0; b < 3; ++b) {
        if (exps[b] == 0) continue;
        result = intersect(result, power(ctx.coord(b), exps[b]));
    }
    return result;
}

/// The four-summand generator ideal of X_3.
inline Ideal x3_summand_ideal(const FermatContext& ctx, unsigned k) {
    ctx.require_block_machinery();
    const unsigned n = ctx.n();
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();
    std::vector<Polynomial> gens;
    Polynomial fgh = f * g * h;
    for (const Polynomial& m : detail::two_var_power(f, g, k * (n - 3))) gens.push_back(fgh * m);
    Polynomial p1 = pow(f, (k - 1) * (n - 3) + 2) * pow(g, n - 2) * ctx.x();
    for (const Polynomial& m : detail::two_var_power(ctx.x(), ctx.y(), n - 1))
        gens.push_back(p1 * m);
    Polynomial p2 = pow(g, (k - 1) * (n - 3) + 2) * pow(h, n - 2) * ctx.y();
    for (const Polynomial& m : detail::two_var_power(ctx.y(), ctx.z(), n - 1))
        gens.push_back(p2 * m);
    Polynomial p3 = pow(f, n - 2) * pow(h, (k - 1) * (n - 3) + 2) * ctx.z();
    for (const Polynomial& m : detail::two_var_power(ctx.z(), ctx.x(), n - 1))
        gens.push_back(p3 * m);
    return Ideal(ctx.ring(), std::move(gens));
}

/// The four-summand generator ideal of the primed matrix (n >= 4).
inline Ideal x3_prime_summand_ideal(const FermatContext& ctx) {
    if (ctx.n() < 4) throw error("x3_prime_summand_ideal requires n >= 4");
    const unsigned n = ctx.n();
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();
    std::vector<Polynomial> gens;
    Polynomial fgh = f * g * h;
    for (const Polynomial& m : detail::two_var_power(f, g, n - 4)) gens.push_back(fgh * m);
    Polynomial p1 = pow(f, 2) * pow(g, n - 3);
    for (const Polynomial& m : detail::two_var_power(ctx.x(), ctx.y(), n - 1))
        gens.push_back(p1 * m);
    Polynomial p2 = pow(g, 2) * pow(h, n - 3);
    for (const Polynomial& m : detail::two_var_power(ctx.y(), ctx.z(), n - 1))
        gens.push_back(p2 * m);
    Polynomial p3 = pow(f, n - 3) * pow(h, 2);
    for (const Polynomial& m : detail::two_var_power(ctx.z(), ctx.x(), n - 1))
        gens.push_back(p3 * m);
    return Ideal(ctx.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// predictions
// ---------------------------------------------------------------------------

enum class ResolutionKind { ordinary, symbolic_x, x3prime };

/// Closed-form multiplicity of R/I(X_j) along the chain.
inline long long predicted_multiplicity_xj(unsigned n, unsigned k, unsigned j) {
    auto [i, r] = detail::split_j(j);
    long long K = static_cast<long long>(k) * (n - 3);
    long long base = static_cast<long long>(n) * n * detail::choose2(K + j + 1);
    long long lo = detail::choose2(static_cast<long long>(i) * n + 1);
    long long hi = detail::choose2(static_cast<long long>(i + 1) * n + 1);
    switch (r) {
    case 1: return base + 2 * lo + hi;
    case 2: return base + lo + 2 * hi;
    default: return base + 3 * hi;
    }
}

/// The claimed resolution shifts for the three families (ordinary powers,
/// the X_j chain, the primed matrix), with regularity, generator count and
/// multiplicity derived from them.
inline PredictedResolution predicted_resolution(const FermatContext& ctx, ResolutionKind kind,
                                                unsigned a, unsigned b = 0) {
    const unsigned n = ctx.n();
    PredictedResolution pred;
    auto add = [&](int step, int shift, int rank) {
        if (rank > 0) pred.shifts[step][shift] += rank;
    };
    switch (kind) {
    case ResolutionKind::ordinary: {
        unsigned r = a;
        if (r < 1) throw error("ordinary power requires r >= 1");
        if (r == 1) {
            add(0, n + 1, 3);
            add(1, 2 * n, 1);
            add(1, n + 3, 1);
        } else {
            add(0, r * (n + 1), static_cast<int>(detail::binomial_u64(r + 2, 2)));
            add(1, r * (n + 1) + n - 1, static_cast<int>(detail::binomial_u64(r + 1, 2)));
            add(1, r * (n + 1) + 2, static_cast<int>(detail::binomial_u64(r + 1, 2)));
            add(2, (r + 1) * (n + 1), static_cast<int>(detail::binomial_u64(r, 2)));
        }
        break;
    }
    case ResolutionKind::symbolic_x: {
        ctx.require_block_machinery();
        unsigned k = a, j = b;
        if (k < 1 || j < 1 || j > 3 * k) throw error("symbolic_x requires 1 <= j <= 3k");
        auto [i, r] = detail::split_j(j);
        int K = static_cast<int>(k * (n - 3));
        add(0, n * (K + static_cast<int>(j)), K + 1);
        add(1, n * (K + static_cast<int>(j) + 1), K);
        for (unsigned l = 1; l <= i; ++l) {
            add(0, n * (K + static_cast<int>(j + l)), 3 * static_cast<int>(n));
            add(1, n * (K + static_cast<int>(j + l)) + 1, 3 * static_cast<int>(n));
        }
        add(0, n * (K + static_cast<int>(j + i + 1)), static_cast<int>(r * n));
        add(1, n * (K + static_cast<int>(j + i + 1)) + 1, static_cast<int>(r * n));
        break;
    }
    case ResolutionKind::x3prime: {
        if (n < 4) throw error("x3prime prediction requires n >= 4");
        int nn = static_cast<int>(n) * static_cast<int>(n);
        add(0, nn - static_cast<int>(n), static_cast<int>(n) - 3);
        add(0, nn - 1, 3 * static_cast<int>(n));
        add(1, nn, 4 * static_cast<int>(n) - 4);
        break;
    }
    }
    return pred;
}

// ---------------------------------------------------------------------------
// reductions and syzygies
// ---------------------------------------------------------------------------

/// The displayed homogeneous minimal reduction J of I^(n).
inline Ideal reduction_ideal(const FermatContext& ctx) {
    ctx.require_block_machinery();
    const unsigned n = ctx.n();
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();
    if (n == 3) {
        Polynomial second = g * pow(f, 2) * pow(ctx.x(), n) + h * pow(g, 2) * pow(ctx.y(), n) +
                            f * pow(h, 2) * pow(ctx.z(), n);
        return Ideal(ctx.ring(), {f * g * h, second});
    }
    Polynomial third = pow(g, n - 2) * pow(f, 2) * pow(ctx.x(), n) +
                       pow(h, n - 2) * pow(g, 2) * pow(ctx.y(), n) +
                       pow(f, n - 2) * pow(h, 2) * pow(ctx.z(), n);
    return Ideal(ctx.ring(), {pow(f, n - 2) * g * h, f * pow(g, n - 2) * h, third});
}

namespace detail {

/// Coefficient-vector syzygies sum P_i gen_i = 0 with deg P_i = delta,
/// as flat vectors over (monomials of degree delta) x 3 blocks.
inline std::vector<std::vector<std::uint64_t>> syzygy_space(const FermatContext& ctx,
                                                            unsigned delta) {
    const RingPtr& R = ctx.ring();
    const PrimeField& F = R->field();
    const Polynomial gens[3] = {ctx.x() * ctx.f(), ctx.y() * ctx.g(), ctx.z() * ctx.h()};
    const unsigned d_out = delta + ctx.n() + 1;

    auto cols_mons = monomials_of_degree(3, static_cast<int>(delta));
    auto rows_mons = monomials_of_degree(3, static_cast<int>(d_out));
    std::unordered_map<Monomial, std::size_t, MonomialHash> row_index;
    for (std::size_t i = 0; i < rows_mons.size(); ++i) row_index.emplace(rows_mons[i], i);

    // transpose view: build the equation matrix row by row (one row per
    // output monomial) from columns (block, coefficient monomial)
    std::size_t ncols = 3 * cols_mons.size();
    std::vector<std::vector<std::uint64_t>> mat(rows_mons.size(),
                                                std::vector<std::uint64_t>(ncols, 0));
    for (unsigned blk = 0; blk < 3; ++blk) {
        for (std::size_t c = 0; c < cols_mons.size(); ++c) {
            for (const Term& t : gens[blk].terms()) {
                Monomial m = t.m * cols_mons[c];
                mat[row_index.at(m)][blk * cols_mons.size() + c] = t.c.value;
            }
        }
    }
    auto null_basis = nullspace_mod_p(F, mat, ncols);
    return null_basis;
}

inline std::array<Polynomial, 3> vector_to_columns(const FermatContext& ctx, unsigned delta,
                                                   const std::vector<std::uint64_t>& v) {
    auto mons = monomials_of_degree(3, static_cast<int>(delta));
    std::array<Polynomial, 3> out = {Polynomial::zero(ctx.ring()), Polynomial::zero(ctx.ring()),
                                     Polynomial::zero(ctx.ring())};
    for (unsigned blk = 0; blk < 3; ++blk)
        for (std::size_t c = 0; c < mons.size(); ++c) {
            std::uint64_t coeff = v[blk * mons.size() + c];
            if (coeff)
                out[blk] = out[blk] + Polynomial::from_monomial(ctx.ring(), mons[c], {coeff});
        }
    return out;
}

}  // namespace detail

/// The 3x2 Hilbert-Burch presentation of I, found by graded linear algebra:
/// a syzygy column in coefficient degree 2 and one in degree n-1, verified
/// to regenerate I through its maximal minors.
inline PolyMatrix syzygy_matrix(const FermatContext& ctx) {
    const unsigned n = ctx.n();
    if (n < 2) throw error("syzygy_matrix requires n >= 2");
    const unsigned d0 = 2, d1 = n - 1;

    auto low = detail::syzygy_space(ctx, std::min(d0, d1));
    auto high = detail::syzygy_space(ctx, std::max(d0, d1));
    if (low.empty() || high.empty())
        throw paper_refuting("no syzygy found in the stated coefficient degrees");

    std::vector<std::array<Polynomial, 3>> low_cols, high_cols;
    for (const auto& v : low) low_cols.push_back(detail::vector_to_columns(ctx, std::min(d0, d1), v));
    for (const auto& v : high)
        high_cols.push_back(detail::vector_to_columns(ctx, std::max(d0, d1), v));

    for (const auto& pcol : low_cols) {
        for (const auto& qcol : high_cols) {
            PolyMatrix m(ctx.ring(), 3, 2);
            for (unsigned r = 0; r < 3; ++r) {
                m.set(r, 0, d0 <= d1 ? pcol[r] : qcol[r]);
                m.set(r, 1, d0 <= d1 ? qcol[r] : pcol[r]);
            }
            std::vector<Polynomial> minors;
            minors.reserve(3);
            bool nonzero = true;
            for (unsigned r = 0; r < 3; ++r) {
                PolyMatrix sub(ctx.ring(), 2, 2);
                unsigned rr = 0;
                for (unsigned s = 0; s < 3; ++s) {
                    if (s == r) continue;
                    sub.set(rr, 0, m.at(s, 0));
                    sub.set(rr, 1, m.at(s, 1));
                    ++rr;
                }
                minors.push_back(determinant(sub));
                if (minors.back().is_zero()) nonzero = false;
            }
            if (!nonzero) continue;
            if (equal(Ideal(ctx.ring(), minors), ctx.ideal())) return m;
        }
    }
    throw paper_refuting("no syzygy pair in the stated degrees regenerates I (Hilbert-Burch)");
}

// ---------------------------------------------------------------------------
// convenience
// ---------------------------------------------------------------------------

/// First minimal generator of I^(3) outside I^2, if any (the witness of the
/// non-containment I^(3) not in I^2).
inline std::optional<Polynomial> noncontainment_witness(const FermatContext& ctx) {
    Ideal i3 = ctx.symbolic_power(3);
    Ideal i2 = power(ctx.ideal(), 2);
    for (const Polynomial& gen : minimal_generators(i3))
        if (!member(gen, i2)) return gen;
    return std::nullopt;
}

}  // namespace fermat
