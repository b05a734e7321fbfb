#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fermat/groebner.hpp"
#include "fermat/linalg.hpp"

namespace fermat {

namespace detail {

/// Map a polynomial into a ring with possibly different variables, matching
/// variables by name.  Dropped variables must not occur in any monomial.
inline Polynomial map_to_ring(const Polynomial& p, const RingPtr& target) {
    const Ring& src = *p.ring();
    std::vector<int> dest(src.nvars(), -1);
    for (unsigned i = 0; i < src.nvars(); ++i) dest[i] = target->var_index(src.var_name(i));
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        Monomial m = Monomial::unit(target->nvars());
        for (unsigned i = 0; i < src.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (dest[i] < 0)
                throw error("variable " + src.var_name(i) + " does not map into target ring");
            m.e[static_cast<unsigned>(dest[i])] = t.m.e[i];
        }
        terms.push_back({m, t.c});
    }
    return Polynomial(target, std::move(terms));
}

inline bool canonical_poly_less(const Polynomial& a, const Polynomial& b) {
    const MonomialOrder& ord = a.ring()->order();
    std::size_t n = std::min(a.terms().size(), b.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.compare(a.terms()[i].m, b.terms()[i].m);
        if (c != 0) return c > 0;  // larger monomial first
        if (a.terms()[i].c.value != b.terms()[i].c.value)
            return a.terms()[i].c.value < b.terms()[i].c.value;
    }
    return a.terms().size() < b.terms().size();
}

inline void dedup_polys(std::vector<Polynomial>& v) {
    std::sort(v.begin(), v.end(), canonical_poly_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline std::vector<Monomial> monomials_of_degree(unsigned nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    // lexicographic enumeration over exponent tuples summing to d
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, unsigned i, int rest) -> void {
        if (i + 1 == nvars) {
            e[i] = rest;
            Monomial mm = Monomial::unit(nvars);
            for (unsigned k = 0; k < nvars; ++k) mm.e[k] = static_cast<std::uint16_t>(e[k]);
            out.push_back(mm);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            e[i] = v;
            self(self, i + 1, rest - v);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, d);
    return out;
}

}  // namespace detail

/// Homogeneous ideal: generator list plus lazily cached reduced Groebner
/// bases per monomial order.  Logically immutable; copies share the cache.
class Ideal {
public:
    Ideal() = default;

    Ideal(RingPtr ring, std::vector<Polynomial> gens) : d_(std::make_shared<Data>()) {
        d_->ring = std::move(ring);
        for (Polynomial& g : gens) {
            if (!g.ring()->same_as(*d_->ring)) throw ring_mismatch();
            if (!g.is_zero()) d_->gens.push_back(std::move(g));
        }
        detail::dedup_polys(d_->gens);
    }

    const RingPtr& ring() const { return d_->ring; }
    const std::vector<Polynomial>& generators() const { return d_->gens; }
    bool is_zero_ideal() const { return d_->gens.empty(); }

    bool gens_homogeneous() const {
        for (const Polynomial& g : d_->gens)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    /// Reduced Groebner basis under the ring's own order (cached).
    const std::vector<Polynomial>& basis() const {
        return *basis_shared(d_->ring->order());
    }

    /// Reduced basis under an arbitrary order; polynomials live in a ring
    /// that carries that order.
    std::shared_ptr<const std::vector<Polynomial>> basis_shared(const MonomialOrder& order) const {
        auto key = std::make_pair(static_cast<int>(order.kind), order.front_block);
        {
            std::lock_guard<std::mutex> lock(d_->mu);
            auto it = d_->cache.find(key);
            if (it != d_->cache.end()) return it->second;
        }
        std::shared_ptr<const std::vector<Polynomial>> computed;
        if (d_->gens.empty()) {
            computed = std::make_shared<std::vector<Polynomial>>();
        } else if (order == d_->ring->order()) {
            computed = std::make_shared<std::vector<Polynomial>>(reduced_groebner(d_->gens));
        } else {
            std::vector<std::string> names;
            for (unsigned i = 0; i < d_->ring->nvars(); ++i) names.push_back(d_->ring->var_name(i));
            RingPtr view = Ring::make(names, d_->ring->field(), order);
            std::vector<Polynomial> moved;
            for (const Polynomial& g : d_->gens) moved.push_back(detail::map_to_ring(g, view));
            computed = std::make_shared<std::vector<Polynomial>>(reduced_groebner(moved));
        }
        std::lock_guard<std::mutex> lock(d_->mu);
        auto [it, inserted] = d_->cache.emplace(key, computed);
        return it->second;
    }

    /// Installs a precomputed reduced basis (used by intersect, whose
    /// elimination output is already a reduced basis of the result).
    void install_basis(const MonomialOrder& order, std::vector<Polynomial> basis) const {
        auto key = std::make_pair(static_cast<int>(order.kind), order.front_block);
        std::lock_guard<std::mutex> lock(d_->mu);
        d_->cache.emplace(key, std::make_shared<std::vector<Polynomial>>(std::move(basis)));
    }

private:
    struct Data {
        RingPtr ring;
        std::vector<Polynomial> gens;
        mutable std::mutex mu;
        mutable std::map<std::pair<int, unsigned>,
                         std::shared_ptr<const std::vector<Polynomial>>>
            cache;
    };
    std::shared_ptr<Data> d_;
};

inline Ideal make_ideal(RingPtr ring, std::vector<Polynomial> gens) {
    return Ideal(std::move(ring), std::move(gens));
}

/// Reduced basis under the given order; the polynomials live in a ring
/// carrying that order.
inline std::shared_ptr<const std::vector<Polynomial>> groebner(const Ideal& a,
                                                               const MonomialOrder& order) {
    return a.basis_shared(order);
}

inline Ideal unit_ideal(RingPtr ring) {
    Polynomial one = Polynomial::constant(ring, std::uint64_t{1});
    return Ideal(ring, {one});
}

inline bool is_unit_ideal(const Ideal& a) {
    const auto& b = a.basis();
    return b.size() == 1 && b.front().degree() == 0;
}

inline bool member(const Polynomial& f, const Ideal& a) {
    if (!f.ring()->same_as(*a.ring())) throw ring_mismatch();
    if (f.is_zero()) return true;
    const auto& b = a.basis();
    if (b.empty()) return false;
    return normal_form(f, b).is_zero();
}

inline bool equal(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw ring_mismatch();
    const auto& ba = a.basis();
    const auto& bb = b.basis();
    if (ba.size() != bb.size()) return false;
    for (std::size_t i = 0; i < ba.size(); ++i)
        if (ba[i] != bb[i]) return false;
    return true;
}

inline bool contains(const Ideal& outer, const Ideal& inner) {
    for (const Polynomial& g : inner.generators())
        if (!member(g, outer)) return false;
    return true;
}

inline Ideal sum(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw ring_mismatch();
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal product(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw ring_mismatch();
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Polynomial& f : a.generators())
        for (const Polynomial& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal power(const Ideal& a, unsigned m) {
    if (m < 1) throw error("ideal power requires exponent >= 1");
    Ideal r = a;
    for (unsigned i = 1; i < m; ++i) r = product(r, a);
    return r;
}

/// a intersect b by the auxiliary-variable method: adjoin t, form
/// t*a + (1-t)*b, eliminate t with a block order.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw ring_mismatch();
    const RingPtr& base = a.ring();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal(base, {});
    if (is_unit_ideal(a)) return b;
    if (is_unit_ideal(b)) return a;

    std::string tname = "t";
    for (const char* cand : {"t", "u", "s", "w", "_t"}) {
        if (base->var_index(cand) < 0) {
            tname = cand;
            break;
        }
    }
    std::vector<std::string> names{tname};
    for (unsigned i = 0; i < base->nvars(); ++i) names.push_back(base->var_name(i));
    RingPtr ext = Ring::make(names, base->field(), MonomialOrder::elimination(1));

    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, std::uint64_t{1}) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.generators()) gens.push_back(t * detail::map_to_ring(f, ext));
    for (const Polynomial& g : b.generators())
        gens.push_back(one_minus_t * detail::map_to_ring(g, ext));

    std::vector<Polynomial> gb = reduced_groebner(gens);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb)
        if (g.leading_term().m.e[0] == 0)  // elimination order: t-free lead => t-free
            kept.push_back(detail::map_to_ring(g, base));

    Ideal result(base, kept);
    // the t-free slice of the elimination basis is already a reduced basis
    // of the intersection under the back-block order
    if (base->order() == MonomialOrder::grevlex() && !kept.empty()) {
        std::sort(kept.begin(), kept.end(), [&](const Polynomial& x, const Polynomial& y) {
            return base->order().greater(x.leading_term().m, y.leading_term().m);
        });
        result.install_basis(base->order(), std::move(kept));
    }
    return result;
}

/// colon(a, f) = { g : g*f in a }, via (a intersect (f)) / f.
inline Ideal colon(const Ideal& a, const Polynomial& f) {
    if (f.is_zero()) throw error("colon by the zero polynomial");
    Ideal af = intersect(a, Ideal(a.ring(), {f}));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : af.generators()) gens.push_back(exact_div(g, f));
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal colon_ideal(const Ideal& a, const Ideal& b) {
    if (b.generators().empty()) throw error("colon by the zero ideal");
    std::optional<Ideal> acc;
    for (const Polynomial& g : b.generators()) {
        Ideal c = colon(a, g);
        acc = acc ? intersect(*acc, c) : c;
    }
    return *acc;
}

/// Saturation a : b^inf.
inline Ideal saturate(const Ideal& a, const Ideal& b) {
    Ideal current = a;
    for (int iter = 0; iter < 64; ++iter) {
        Ideal next = colon_ideal(current, b);
        if (equal(next, current)) return current;
        current = next;
    }
    throw non_stabilization("saturation did not stabilize within 64 colon iterations");
}

/// Saturation with respect to the irrelevant ideal of all ring variables.
inline Ideal saturate(const Ideal& a) {
    std::vector<Polynomial> vars;
    for (unsigned i = 0; i < a.ring()->nvars(); ++i)
        vars.push_back(Polynomial::variable(a.ring(), i));
    return saturate(a, Ideal(a.ring(), std::move(vars)));
}

/// Membership certificate: target = sum coefficients[i] * generators[i],
/// re-verifiable by plain polynomial arithmetic.
struct Certificate {
    Polynomial target;
    std::vector<Polynomial> coefficients;

    bool verify(const std::vector<Polynomial>& gens) const {
        if (gens.size() != coefficients.size()) return false;
        Polynomial acc = Polynomial::zero(target.ring());
        for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + coefficients[i] * gens[i];
        return acc == target;
    }
};

/// Expresses f in terms of `gens` by tracking the division expression
/// through Buchberger; throws not_member when f is outside the ideal.
inline Certificate lift(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw error("lift against an empty generator list");
    std::vector<std::vector<Polynomial>> reprs;
    std::vector<Polynomial> G = buchberger(gens, 0, &reprs);
    std::vector<Polynomial> quots;
    Polynomial r = normal_form(f, G, &quots);
    if (!r.is_zero()) throw not_member();
    Certificate cert{f, std::vector<Polynomial>(gens.size(), Polynomial::zero(f.ring()))};
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (quots[k].is_zero()) continue;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (!reprs[k][j].is_zero())
                cert.coefficients[j] = cert.coefficients[j] + quots[k] * reprs[k][j];
    }
    if (!cert.verify(gens)) throw error("lift certificate failed re-verification");
    return cert;
}

/// Dimension of the degree-d graded piece of the ideal.
inline int graded_dim(const Ideal& a, int d) {
    if (!a.gens_homogeneous()) throw error("graded_dim requires a homogeneous ideal");
    if (d < 0) return 0;
    const auto& basis = a.basis();
    auto mons = detail::monomials_of_degree(a.ring()->nvars(), d);
    int nonstandard = 0;
    for (const Monomial& m : mons) {
        for (const Polynomial& g : basis) {
            if (g.leading_term().m.divides(m)) {
                ++nonstandard;
                break;
            }
        }
    }
    return nonstandard;
}

/// Degrees of a minimal homogeneous generating set, with multiplicity:
/// count at degree d is dim a_d - dim (R_1 * a_{d-1}), certified by exact
/// rank computations over the coefficient field.
inline std::map<int, int> minimal_generator_degrees(const Ideal& a) {
    if (!a.gens_homogeneous()) throw error("minimal_generator_degrees requires a homogeneous ideal");
    const auto& basis = a.basis();
    std::map<int, int> out;
    if (basis.empty()) return out;
    const RingPtr& ring = a.ring();
    const PrimeField& F = ring->field();
    const unsigned nv = ring->nvars();

    int lo = basis.front().degree(), hi = basis.front().degree();
    for (const Polynomial& g : basis) {
        lo = std::min(lo, g.degree());
        hi = std::max(hi, g.degree());
    }

    for (int d = lo; d <= hi; ++d) {
        auto mons_d = detail::monomials_of_degree(nv, d);
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
        index.reserve(mons_d.size());
        for (std::size_t i = 0; i < mons_d.size(); ++i) index.emplace(mons_d[i], i);

        auto nonstandard = [&](const Monomial& m) {
            for (const Polynomial& g : basis)
                if (g.leading_term().m.divides(m)) return true;
            return false;
        };
        int dim_d = 0;
        for (const Monomial& m : mons_d)
            if (nonstandard(m)) ++dim_d;

        // span of R_1 * a_{d-1}: variable multiples of the triangular basis
        // { m - NF(m) : m nonstandard of degree d-1 }
        EchelonBasis ech(F, mons_d.size());
        for (const Monomial& m : detail::monomials_of_degree(nv, d - 1)) {
            if (!nonstandard(m)) continue;
            Polynomial b =
                Polynomial::from_monomial(ring, m, F.one()) -
                normal_form(Polynomial::from_monomial(ring, m, F.one()), basis);
            for (unsigned v = 0; v < nv; ++v) {
                Monomial xv = Monomial::var(v, nv);
                std::vector<std::uint64_t> row(mons_d.size(), 0);
                for (const Term& t : b.terms()) row[index.at(t.m * xv)] = t.c.value;
                ech.insert(std::move(row));
            }
        }
        int count = dim_d - static_cast<int>(ech.rank());
        if (count > 0) out[d] = count;
    }
    return out;
}

/// A minimal generating set extracted greedily (ascending degree) from the
/// reduced basis; counts agree with minimal_generator_degrees.
inline std::vector<Polynomial> minimal_generators(const Ideal& a) {
    std::vector<Polynomial> candidates = a.basis();
    const MonomialOrder& ord = a.ring()->order();
    std::sort(candidates.begin(), candidates.end(),
              [&](const Polynomial& x, const Polynomial& y) {
                  if (x.degree() != y.degree()) return x.degree() < y.degree();
                  return ord.less(x.leading_term().m, y.leading_term().m);
              });
    std::vector<Polynomial> kept;
    std::vector<Polynomial> running_gb;
    for (const Polynomial& g : candidates) {
        Polynomial r = running_gb.empty() ? g : normal_form(g, running_gb);
        if (r.is_zero()) continue;
        kept.push_back(g);
        running_gb.push_back(detail::make_monic(r));
        running_gb = buchberger(running_gb, running_gb.size() - 1);
    }
    return kept;
}

inline int alpha(const Ideal& a) {
    const auto& basis = a.basis();
    if (basis.empty()) throw error("alpha of the zero ideal");
    int d = basis.front().degree();
    for (const Polynomial& g : basis) d = std::min(d, g.degree());
    return d;
}

inline int beta(const Ideal& a) {
    auto degs = minimal_generator_degrees(a);
    if (degs.empty()) throw error("beta of the zero ideal");
    return degs.rbegin()->first;
}

}  // namespace fermat
