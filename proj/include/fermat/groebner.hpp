#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fermat/polynomial.hpp"

namespace fermat {

namespace detail {

struct MonomialGreater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using WorkMap = std::map<Monomial, std::uint64_t, MonomialGreater>;

inline WorkMap to_work(const Polynomial& p) {
    WorkMap w(MonomialGreater{&p.ring()->order()});
    for (const Term& t : p.terms()) w.emplace(t.m, t.c.value);
    return w;
}

/// work -= (c * m) * g, erasing cancelled entries.
inline void subtract_multiple(WorkMap& work, const PrimeField& F, const Monomial& m,
                              FieldElement c, const Polynomial& g) {
    for (const Term& t : g.terms()) {
        Monomial key = t.m * m;
        auto it = work.find(key);
        std::uint64_t delta = F.mul(c, t.c).value;
        if (it == work.end()) {
            if (delta != 0) work.emplace(key, F.neg({delta}).value);
        } else {
            std::uint64_t v = F.sub({it->second}, {delta}).value;
            if (v == 0) work.erase(it);
            else it->second = v;
        }
    }
}

}  // namespace detail

/// Full normal form of f against a list of monic polynomials.  When
/// `quotients` is non-null it receives q_i with  f = sum q_i basis_i + r.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              std::vector<Polynomial>* quotients = nullptr) {
    const RingPtr& ring = f.ring();
    const PrimeField& F = ring->field();
    if (quotients) quotients->assign(basis.size(), Polynomial::zero(ring));
    detail::WorkMap work = detail::to_work(f);
    std::vector<Term> result;
    while (!work.empty()) {
        auto lead = *work.begin();
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Polynomial& g = basis[i];
            if (g.is_zero()) continue;
            const Monomial& lm = g.leading_term().m;
            if (!lm.divides(lead.first)) continue;
            Monomial qm = lead.first.quotient_by(lm);
            FieldElement qc = {lead.second};  // basis is monic
            detail::subtract_multiple(work, F, qm, qc, g);
            if (quotients)
                (*quotients)[i] = (*quotients)[i] + Polynomial::from_monomial(ring, qm, qc);
            reduced = true;
            break;
        }
        if (!reduced) {
            result.push_back({lead.first, {lead.second}});
            work.erase(work.begin());
        }
    }
    return Polynomial(ring, std::move(result));
}

namespace detail {

inline Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    const PrimeField& F = p.ring()->field();
    FieldElement lc = p.leading_term().c;
    return lc.value == 1 ? p : p.scaled(F.inv(lc));
}

struct CritPair {
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const CritPair& a, const CritPair& b) const {
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace detail

/// Buchberger with normal selection and the coprime/chain criteria.  Monic
/// output, not inter-reduced.  Elements before `known_prefix` are assumed to
/// already form a Groebner basis (their mutual pairs are skipped).
/// `reprs`, when non-null, tracks each basis element as a combination of the
/// input generators.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                          std::size_t known_prefix = 0,
                                          std::vector<std::vector<Polynomial>>* reprs = nullptr) {
    if (gens.empty()) throw error("groebner basis of an empty generator list");
    const RingPtr& ring = gens.front().ring();
    const PrimeField& F = ring->field();
    const MonomialOrder& ord = ring->order();

    std::vector<Polynomial> G;
    if (reprs) reprs->clear();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Polynomial& g = gens[i];
        if (!g.ring()->same_as(*ring)) throw ring_mismatch();
        if (g.is_zero()) continue;
        FieldElement lc_inv = F.inv(g.leading_term().c);
        G.push_back(g.scaled(lc_inv));
        if (reprs) {
            std::vector<Polynomial> row(gens.size(), Polynomial::zero(ring));
            row[i] = Polynomial::constant(ring, lc_inv);
            reprs->push_back(std::move(row));
        }
    }
    if (G.empty()) throw error("groebner basis of the zero ideal");

    std::set<detail::CritPair, detail::PairLess> pairs(detail::PairLess{&ord});
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pair = [&](std::size_t i, std::size_t j) {
        pairs.insert({lcm(G[i].leading_term().m, G[j].leading_term().m), i, j});
        pending.emplace(i, j);
    };
    for (std::size_t j = 1; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!(j < known_prefix)) add_pair(i, j);

    while (!pairs.empty()) {
        detail::CritPair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        pending.erase({pr.i, pr.j});

        const Monomial& li = G[pr.i].leading_term().m;
        const Monomial& lj = G[pr.j].leading_term().m;
        if (li.coprime_with(lj)) continue;  // product criterion
        bool chained = false;               // chain criterion
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].leading_term().m.divides(pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (!pending.count({key1.first, key1.second}) &&
                !pending.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        Monomial u = pr.lcm.quotient_by(li);
        Monomial v = pr.lcm.quotient_by(lj);
        Polynomial s = G[pr.i].times_term(u, F.one()) - G[pr.j].times_term(v, F.one());
        std::vector<Polynomial> quots;
        Polynomial r = normal_form(s, G, reprs ? &quots : nullptr);
        if (r.is_zero()) continue;

        FieldElement lc_inv = F.inv(r.leading_term().c);
        if (reprs) {
            std::vector<Polynomial> row(gens.size(), Polynomial::zero(ring));
            for (std::size_t c = 0; c < gens.size(); ++c) {
                Polynomial acc = (*reprs)[pr.i][c].times_term(u, F.one()) -
                                 (*reprs)[pr.j][c].times_term(v, F.one());
                for (std::size_t k = 0; k < G.size(); ++k)
                    if (!quots[k].is_zero())
                        acc = acc - quots[k] * (*reprs)[k][c];
                row[c] = acc.scaled(lc_inv);
            }
            reprs->push_back(std::move(row));
        }
        G.push_back(r.scaled(lc_inv));
        for (std::size_t i = 0; i + 1 < G.size(); ++i) add_pair(i, G.size() - 1);
    }
    return G;
}

/// Reduced Groebner basis: minimal leading terms, fully inter-reduced, monic,
/// sorted with the largest leading term first.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G) {
    if (G.empty()) return G;
    const MonomialOrder& ord = G.front().ring()->order();
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term().m, b.leading_term().m);
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& g : G) {
        bool redundant = false;
        for (const Polynomial& h : minimal)
            if (h.leading_term().m.divides(g.leading_term().m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    std::vector<Polynomial> out(minimal.size(), Polynomial::zero(G.front().ring()));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out[i] = detail::make_monic(normal_form(minimal[i], others));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.leading_term().m, b.leading_term().m);
    });
    return out;
}

inline std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens) {
    return reduce_basis(buchberger(gens));
}

}  // namespace fermat
