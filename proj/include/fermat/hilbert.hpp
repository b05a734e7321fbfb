#pragma once

#include <array>
#include <map>
#include <vector>

#include "fermat/ideal.hpp"

namespace fermat {

/// Hilbert function values of R/a and the series numerator N(t) with
/// HS(R/a) = N(t)/(1-t)^3, both exact.
struct HilbertProfile {
    std::vector<long long> values;     // HF(R/a, d) for d = 0..values.size()-1
    std::vector<long long> numerator;  // N(t), trailing zeros trimmed
    bool stabilized = false;           // HF constant over the last degrees computed
};

namespace detail {

inline constexpr int hilbert_degree_cap = 512;

inline long long count_standard(const std::vector<Monomial>& lts, unsigned nvars, int d) {
    long long count = 0;
    for (const Monomial& m : monomials_of_degree(nvars, d)) {
        bool standard = true;
        for (const Monomial& lt : lts) {
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        }
        if (standard) ++count;
    }
    return count;
}

}  // namespace detail

inline HilbertProfile hilbert_profile(const Ideal& a) {
    if (!a.gens_homogeneous()) throw error("hilbert data requires a homogeneous ideal");
    const unsigned nv = a.ring()->nvars();
    if (nv != 3) throw error("hilbert series normalization assumes 3 variables");
    std::vector<Monomial> lts;
    for (const Polynomial& g : a.basis()) lts.push_back(g.leading_term().m);

    // the numerator degree is bounded by deg lcm(leading terms), via the
    // Taylor resolution of the leading-term ideal
    int lcm_deg = 0;
    for (unsigned v = 0; v < nv; ++v) {
        int mx = 0;
        for (const Monomial& m : lts) mx = std::max(mx, static_cast<int>(m.e[v]));
        lcm_deg += mx;
    }
    int top = lcm_deg + 3;
    if (top > detail::hilbert_degree_cap)
        throw non_stabilization("hilbert computation exceeds the degree cap without stabilizing");

    HilbertProfile profile;
    profile.values.reserve(top + 1);
    for (int d = 0; d <= top; ++d)
        profile.values.push_back(detail::count_standard(lts, nv, d));

    auto hf = [&](int d) -> long long { return d < 0 ? 0 : profile.values[d]; };
    std::vector<long long> num(top + 1, 0);
    for (int d = 0; d <= top; ++d)
        num[d] = hf(d) - 3 * hf(d - 1) + 3 * hf(d - 2) - hf(d - 3);
    for (int d = lcm_deg + 1; d <= top; ++d)
        if (num[d] != 0)
            throw non_stabilization("hilbert numerator support exceeds its theoretical bound");
    while (!num.empty() && num.back() == 0) num.pop_back();
    profile.numerator = std::move(num);
    profile.stabilized = top >= 2 && profile.values[top] == profile.values[top - 1] &&
                         profile.values[top - 1] == profile.values[top - 2];
    return profile;
}

/// HF(R/a, d): degree-d standard monomial count.
inline long long hilbert_function(const Ideal& a, int d) {
    if (d < 0) return 0;
    if (!a.gens_homogeneous()) throw error("hilbert data requires a homogeneous ideal");
    std::vector<Monomial> lts;
    for (const Polynomial& g : a.basis()) lts.push_back(g.leading_term().m);
    return detail::count_standard(lts, a.ring()->nvars(), d);
}

inline std::vector<long long> numerator(const Ideal& a) { return hilbert_profile(a).numerator; }

/// The stabilized Hilbert-function value (requires a stabilized profile).
inline long long stabilized_hilbert_value(const Ideal& a) {
    HilbertProfile p = hilbert_profile(a);
    if (!p.stabilized)
        throw non_stabilization("hilbert function did not stabilize below the computed horizon");
    return p.values.back();
}

/// Multiplicity e(R/a) = N''(1)/2 for a dimension-1 graded quotient.
inline long long multiplicity(const Ideal& a) {
    std::vector<long long> n = numerator(a);
    long long at1 = 0, d1 = 0, d2 = 0;
    for (std::size_t d = 0; d < n.size(); ++d) {
        at1 += n[d];
        d1 += static_cast<long long>(d) * n[d];
        d2 += static_cast<long long>(d) * (static_cast<long long>(d) - 1) * n[d];
    }
    if (at1 != 0 || d1 != 0)
        throw error("multiplicity requires dim(R/a) = 1: N(1) = " + std::to_string(at1) +
                    ", N'(1) = " + std::to_string(d1));
    return d2 / 2;
}

/// Graded Betti data of a perfect codimension-2 ideal (Hilbert-Burch shape).
struct BettiData {
    std::map<int, int> generator_shifts;
    std::map<int, int> syzygy_shifts_1;
    std::map<int, int> syzygy_shifts_2;  // empty for perfect codim-2 ideals
};

inline BettiData betti_codim2(const Ideal& a) {
    std::map<int, int> gens = minimal_generator_degrees(a);
    std::vector<long long> num = numerator(a);

    // syzygy shifts are the positive part of N(t) - 1 + sum t^{a_i}
    std::map<int, long long> syz;
    for (std::size_t d = 0; d < num.size(); ++d)
        if (num[d] != 0) syz[static_cast<int>(d)] += num[d];
    syz[0] -= 1;
    for (auto [d, c] : gens) syz[d] += c;

    BettiData out;
    out.generator_shifts = gens;
    long long total_gens = 0, total_syz = 0;
    for (auto [d, c] : gens) total_gens += c;
    for (auto [d, c] : syz) {
        if (c == 0) continue;
        if (c < 0)
            throw not_perfect_codim2("recovered syzygy multiset has a negative count at degree " +
                                     std::to_string(d));
        out.syzygy_shifts_1[d] = static_cast<int>(c);
        total_syz += c;
    }
    if (total_syz != total_gens - 1)
        throw not_perfect_codim2("recovered syzygy count " + std::to_string(total_syz) +
                                 " != generators - 1 = " + std::to_string(total_gens - 1));
    return out;
}

/// Claimed shifts of a minimal free resolution, by homological degree
/// (0 = generators of the ideal, then first and second syzygies).
struct PredictedResolution {
    std::array<std::map<int, int>, 3> shifts;

    long long generator_count() const {
        long long n = 0;
        for (auto [d, c] : shifts[0]) n += c;
        return n;
    }

    /// max over homological degree i of (shift - i), generators at i = 0.
    int regularity() const {
        int reg = 0;
        for (int i = 0; i < 3; ++i)
            for (auto [d, c] : shifts[i]) reg = std::max(reg, d - i);
        return reg;
    }

    std::vector<long long> numerator() const {
        int top = 0;
        for (int i = 0; i < 3; ++i)
            for (auto [d, c] : shifts[i]) top = std::max(top, d);
        std::vector<long long> num(top + 1, 0);
        num[0] = 1;
        int sign = -1;
        for (int i = 0; i < 3; ++i, sign = -sign)
            for (auto [d, c] : shifts[i]) num[d] += sign * c;
        while (!num.empty() && num.back() == 0) num.pop_back();
        return num;
    }

    /// e = N''(1)/2 of the predicted numerator (valid when the claimed
    /// resolution describes a dimension-1 quotient).
    long long multiplicity() const {
        std::vector<long long> num = numerator();
        long long at1 = 0, d1 = 0, d2 = 0;
        for (std::size_t d = 0; d < num.size(); ++d) {
            at1 += num[d];
            d1 += static_cast<long long>(d) * num[d];
            d2 += static_cast<long long>(d) * (static_cast<long long>(d) - 1) * num[d];
        }
        if (at1 != 0 || d1 != 0) throw error("predicted resolution is not dimension 1");
        return d2 / 2;
    }
};

/// True iff the computed numerator matches the predicted resolution's Euler
/// form AND the minimal generator degrees match homological degree 0.
inline bool numerator_consistent(const Ideal& a, const PredictedResolution& predicted) {
    if (numerator(a) != predicted.numerator()) return false;
    return minimal_generator_degrees(a) == predicted.shifts[0];
}

/// Regularity of the ideal from exact Betti data (perfect codim-2 path).
inline int regularity(const Ideal& a) {
    BettiData b = betti_codim2(a);
    int reg = 0;
    for (auto [d, c] : b.generator_shifts) reg = std::max(reg, d);
    for (auto [d, c] : b.syzygy_shifts_1) reg = std::max(reg, d - 1);
    return reg;
}

/// Regularity via a caller-supplied resolution, accepted only after the
/// numerator-consistency check passes.
inline int regularity(const Ideal& a, const PredictedResolution& predicted) {
    if (!numerator_consistent(a, predicted))
        throw error("claimed resolution is inconsistent with the computed hilbert data");
    return predicted.regularity();
}

}  // namespace fermat
