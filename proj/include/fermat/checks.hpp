#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fermat/fermat.hpp"

namespace fermat {

enum class CheckStatus { pass, fail, skip, paper_discrepancy };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    default: return "paper-discrepancy";
    }
}

struct CheckParams {
    unsigned n = 0;
    std::optional<unsigned> k, r, m, j, t;

    std::string key() const {
        std::ostringstream os;
        os << "n=" << n;
        if (k) os << ",k=" << *k;
        if (r) os << ",r=" << *r;
        if (m) os << ",m=" << *m;
        if (j) os << ",j=" << *j;
        if (t) os << ",t=" << *t;
        return os.str();
    }
};

struct CheckResult {
    std::string check_id;
    CheckParams params;
    std::uint64_t prime1 = 0, prime2 = 0;
    CheckStatus status = CheckStatus::skip;
    std::string details;
    std::int64_t wall_ms = 0;
};

struct Report {
    std::string version;
    std::vector<std::pair<unsigned, std::pair<std::uint64_t, std::uint64_t>>> fields;
    std::vector<CheckResult> results;

    int count(CheckStatus s) const {
        int c = 0;
        for (const CheckResult& r : results)
            if (r.status == s) ++c;
        return c;
    }
};

/// Outcome of one check under one prime.
struct Outcome {
    CheckStatus status = CheckStatus::pass;
    std::string details;
};

namespace checks_detail {

inline std::string fmt_degrees(const std::map<int, int>& degs) {
    std::ostringstream os;
    bool first = true;
    for (auto [d, c] : degs) {
        if (!first) os << " ";
        first = false;
        os << d << "^" << c;
    }
    return os.str();
}

inline Outcome ok(std::string details) { return {CheckStatus::pass, std::move(details)}; }
inline Outcome bad(std::string details) { return {CheckStatus::fail, std::move(details)}; }
inline Outcome discrepancy(std::string details) {
    return {CheckStatus::paper_discrepancy, std::move(details)};
}

// --- C1: det C(a,b)_t = a^t - b^t --------------------------------------
inline Outcome c1_detC(const FermatContext& ctx, const CheckParams& p) {
    unsigned t = *p.t;
    Polynomial det = determinant(block_C(ctx.x(), ctx.y(), t));
    Polynomial expected = pow(ctx.x(), t) - pow(ctx.y(), t);
    if (det != expected) return bad("det C(x,y)_" + std::to_string(t) + " != x^t - y^t");
    return ok("det C(x,y)_" + std::to_string(t) + " = x^" + std::to_string(t) + " - y^" +
              std::to_string(t));
}

// --- C2: I_t(H(a,b)_t) = (a,b)^t ----------------------------------------
inline Outcome c2_minorsH(const FermatContext& ctx, const CheckParams& p) {
    unsigned t = *p.t;
    Ideal minors(ctx.ring(), maximal_minors(block_H(ctx.x(), ctx.y(), t)));
    Ideal expected = power(Ideal(ctx.ring(), {ctx.x(), ctx.y()}), t);
    if (!equal(minors, expected))
        return bad("maximal minors of H(x,y)_" + std::to_string(t) + " != (x,y)^t");
    return ok("minors of H(x,y)_" + std::to_string(t) + " generate (x,y)^" + std::to_string(t));
}

// --- C3: the three bordered-determinant families -------------------------
inline Outcome c3_threedet(const FermatContext& ctx, const CheckParams& p) {
    unsigned t = *p.t;
    const Polynomial &f = ctx.f(), &g = ctx.g(), &h = ctx.h();
    const PrimeField& F = ctx.ring()->field();
    PolyMatrix H = block_H(f, g, t);
    int verified = 0;
    for (unsigned j = 1; j <= t + 1; ++j) {
        std::vector<Polynomial> col(t + 1, Polynomial::zero(ctx.ring()));
        col[j - 1] = Polynomial::constant(ctx.ring(), std::uint64_t{1});
        Polynomial expected =
            (pow(f, t - j + 1) * pow(g, j - 1)).scaled(detail::sign_of(F, t));
        if (determinant(H.with_appended_column(col)) != expected)
            return bad("det [H|e_j] mismatch at t=" + std::to_string(t) +
                       ", j=" + std::to_string(j));
        ++verified;
    }
    for (unsigned j = 0; j <= t; ++j) {
        std::vector<Polynomial> col(t + 1, Polynomial::zero(ctx.ring()));
        for (unsigned i = 0; i <= j; ++i)
            col[t - j + i] =
                Polynomial::constant(ctx.ring(), detail::binomial_u64(j, i));
        Polynomial expected = (pow(g, t - j) * pow(h, j)).scaled(detail::sign_of(F, t - j));
        if (determinant(H.with_appended_column(col)) != expected)
            return bad("det [H|(0;E_j)] mismatch at t=" + std::to_string(t) +
                       ", j=" + std::to_string(j));
        ++verified;
    }
    for (unsigned j = 0; j <= t; ++j) {
        std::vector<Polynomial> col(t + 1, Polynomial::zero(ctx.ring()));
        for (unsigned i = 0; i <= j; ++i)
            col[i] = Polynomial::constant(ctx.ring(), detail::binomial_u64(j, i));
        Polynomial expected = (pow(f, t - j) * pow(h, j)).scaled(detail::sign_of(F, t - j));
        if (determinant(H.with_appended_column(col)) != expected)
            return bad("det [H|(E_j;0)] mismatch at t=" + std::to_string(t) +
                       ", j=" + std::to_string(j));
        ++verified;
    }
    return ok(std::to_string(verified) + " bordered determinants verified at t=" +
              std::to_string(t));
}

// --- C4: X_3 minors = summand ideal = intersection; numerator matches ----
inline Outcome c4_x3(const FermatContext& ctx, const CheckParams& p) {
    unsigned k = *p.k;
    PolyMatrix X = build_X3(ctx, k);
    Ideal minors(ctx.ring(), maximal_minors(X));
    if (!equal(minors, x3_summand_ideal(ctx, k)))
        return bad("minors of X_3 differ from the four-summand generator ideal");
    if (!equal(minors, chain_intersection_ideal(ctx, k, 3)))
        return bad("minors of X_3 differ from the fourfold intersection");
    PredictedResolution pred = predicted_resolution(ctx, ResolutionKind::symbolic_x, k, 3);
    if (!numerator_consistent(minors, pred))
        return bad("hilbert numerator inconsistent with the claimed X_3 resolution");
    return ok("X_3 is " + std::to_string(X.rows()) + "x" + std::to_string(X.cols()) +
              "; minors match both descriptions; numerator matches shifts " +
              fmt_degrees(pred.shifts[0]));
}

// --- C5: generator families agree with the symbolic power ---------------
inline Outcome c5_gens(const FermatContext& ctx, const CheckParams& p) {
    unsigned k = *p.k;
    unsigned n = ctx.n();
    auto thm = thm_generators(ctx, k);
    auto compact = compact_generators(ctx, k);
    Ideal thm_ideal(ctx.ring(), thm);
    if (!equal(thm_ideal, Ideal(ctx.ring(), compact)))
        return bad("literal family and compact family generate different ideals");
    if (!equal(thm_ideal, ctx.symbolic_power(n * k)))
        return bad("generator family does not generate the kn-th symbolic power");
    std::size_t expected = static_cast<std::size_t>(k) * (n - 3) + 1 + 3u * k * n;
    if (thm.size() != expected)
        return bad("family size " + std::to_string(thm.size()) + " != k(n-3)+3kn+1");
    // the proof's stated cardinality kn+1 disagrees with the realized family
    // and with the resolution ranks; flagged, never silently passed
    unsigned stated = k * n + 1;
    return discrepancy("families coincide with I^(" + std::to_string(n * k) + "); size " +
                       std::to_string(thm.size()) + " = k(n-3)+3kn+1 matches resolution ranks, "
                       "while the stated count kn+1 = " + std::to_string(stated) +
                       " does not (catalogued text slip)");
}

// --- C6: recursion chain and lifted S columns ----------------------------
inline Outcome c6_recursion(const FermatContext& ctx, const CheckParams& p) {
    unsigned k = *p.k;
    for (unsigned j = 1; j <= 3 * k; ++j) {
        if (!equal(recursion_ideal(ctx, k, j), chain_intersection_ideal(ctx, k, j)))
            return bad("recursion ideal differs from the intersection at j=" + std::to_string(j));
    }
    std::vector<XjStep> chain;
    try {
        chain = build_Xj_chain(ctx, k, 3 * k);
    } catch (const paper_refuting& e) {
        return bad(std::string("S-column construction refuted: ") + e.what());
    }
    // re-extract each lifted S column from X_j and recompute its bordered
    // determinant from scratch
    int lifted = 0;
    for (unsigned j = 4; j <= 3 * k; ++j) {
        if (!chain[j].lifted_target)
            return bad("missing determinant target record at j=" + std::to_string(j));
        const PolyMatrix& anchor = chain[j - 3].matrix;
        unsigned s_col = chain[j - 1].matrix.cols();
        std::vector<Polynomial> s;
        s.reserve(anchor.rows());
        for (unsigned l = 0; l < anchor.rows(); ++l) s.push_back(chain[j].matrix.at(l, s_col));
        if (determinant(anchor.with_appended_column(s)) != *chain[j].lifted_target)
            return bad("re-verified determinant disagrees with its target at j=" +
                       std::to_string(j));
        ++lifted;
    }
    Ideal minors(ctx.ring(), maximal_minors(chain[3 * k].matrix));
    if (!equal(minors, ctx.symbolic_power(ctx.n() * k)))
        return bad("minors of X_" + std::to_string(3 * k) + " differ from I^(" +
                   std::to_string(ctx.n() * k) + ")");
    return ok("recursion chain j=1.." + std::to_string(3 * k) + " matches intersections; " +
              std::to_string(lifted) + " lifted S columns re-verified by exact determinants; "
              "minors of X_" + std::to_string(3 * k) + " generate I^(" +
              std::to_string(ctx.n() * k) + ")");
}

// --- C7: resolutions of ordinary powers ----------------------------------
inline Outcome c7_reg_ordinary(const FermatContext& ctx, const CheckParams& p) {
    unsigned r = *p.r;
    unsigned n = ctx.n();
    Ideal Ir = power(ctx.ideal(), r);
    PredictedResolution pred = predicted_resolution(ctx, ResolutionKind::ordinary, r);
    if (!numerator_consistent(Ir, pred))
        return bad("numerator inconsistent with the claimed resolution of I^" + std::to_string(r));
    long long mu = pred.generator_count();
    long long expected_mu = static_cast<long long>(detail::binomial_u64(r + 2, 2));
    if (mu != expected_mu)
        return bad("minimal generator count " + std::to_string(mu) + " != C(r+2,2)");
    int reg = pred.regularity();
    if (r == 1) {
        int computed = regularity(Ir);  // exact path: I is perfect
        if (computed != reg) return bad("exact and resolution regularity disagree for I");
        int published = 2 * static_cast<int>(n);
        if (computed == published)
            return ok("reg(I) = " + std::to_string(computed));
        return discrepancy("reg(I) computed " + std::to_string(computed) +
                           " under the max(shift - index) convention; published value " +
                           std::to_string(published) + " (catalogued convention mismatch)");
    }
    int published = static_cast<int>(r * n + r + n - 1);
    if (reg != published)
        return bad("reg(I^" + std::to_string(r) + ") = " + std::to_string(reg) + " != rn+r+n-1");
    return ok("resolution of I^" + std::to_string(r) + " verified; mu = C(r+2,2) = " +
              std::to_string(mu) + "; reg = " + std::to_string(reg));
}

// --- C8: regularity of symbolic powers -----------------------------------

/// m lies in the proven range iff m = a*n + b*(n-1) with a, b >= 0.
inline bool in_reg_semigroup(unsigned n, unsigned m) {
    for (unsigned a = 0; a * n <= m; ++a)
        if ((m - a * n) % (n - 1) == 0) return true;
    return false;
}

inline Outcome c8_reg_symbolic(const FermatContext& ctx, const CheckParams& p) {
    unsigned n = ctx.n();
    unsigned m = *p.m;
    int expected = static_cast<int>(m * (n + 1));

    std::string route;
    if (n >= 4 && m == n - 1) {
        // the primed block matrix presents I^(n-1); cross-check both routes
        PolyMatrix X = build_X3_prime(ctx);
        Ideal minors(ctx.ring(), maximal_minors(X));
        if (!equal(minors, ctx.symbolic_power(n - 1)))
            return bad("minors of X_3' differ from I^(" + std::to_string(n - 1) + ")");
        int reg_via_matrix = regularity(minors);
        if (reg_via_matrix != static_cast<int>(n * n - 1))
            return bad("reg via X_3' = " + std::to_string(reg_via_matrix) + " != n^2 - 1");
        route = "via X_3' minors and directly, both ";
    }
    Ideal sm = ctx.symbolic_power(m);
    int reg = regularity(sm);

    if (in_reg_semigroup(n, m)) {
        if (reg != expected)
            return bad("reg(I^(" + std::to_string(m) + ")) = " + std::to_string(reg) +
                       " != m(n+1) = " + std::to_string(expected));
        return ok("reg(I^(" + std::to_string(m) + ")) " + route + "= " + std::to_string(reg) +
                  " = m(n+1)");
    }
    // outside the semigroup <n, n-1> the linear formula is only conjectured
    // (stated for m >= n-2); report without gating
    if (reg != expected)
        return discrepancy("conjectured range m >= n-2: reg(I^(" + std::to_string(m) +
                           ")) computed " + std::to_string(reg) + ", conjectured m(n+1) = " +
                           std::to_string(expected) + " (boundary case fails, matching the "
                           "n=3, m=1 overshoot of the stated range)");
    return ok("reg(I^(" + std::to_string(m) + ")) = " + std::to_string(reg) +
              " = m(n+1) (conjectured range, holds)");
}

// --- C9: Veronese power equality ------------------------------------------
inline Outcome c9_veronese(const FermatContext& ctx, const CheckParams& p) {
    unsigned k = *p.k;
    unsigned n = ctx.n();
    Ideal lhs = ctx.symbolic_power(n * k);
    Ideal rhs = power(ctx.symbolic_power(n), k);
    if (!equal(lhs, rhs))
        return bad("I^(" + std::to_string(n * k) + ") != (I^(" + std::to_string(n) + "))^" +
                   std::to_string(k));
    return ok("I^(" + std::to_string(n * k) + ") = (I^(" + std::to_string(n) + "))^" +
              std::to_string(k) + " exactly");
}

// --- C10: non-containment I^(3) not in I^2 --------------------------------
inline Outcome c10_noncontainment(const FermatContext& ctx, const CheckParams&) {
    auto witness = noncontainment_witness(ctx);
    if (!witness)
        return bad("every minimal generator of I^(3) lies in I^2");
    return ok("witness of degree " + std::to_string(witness->degree()) +
              " outside I^2: " + render_signed(*witness));
}

// --- C11: reduction number one ---------------------------------------------
inline Outcome c11_reduction(const FermatContext& ctx, const CheckParams&) {
    unsigned n = ctx.n();
    Ideal J = reduction_ideal(ctx);
    Ideal In = ctx.symbolic_power(n);
    if (!contains(In, J)) return bad("J is not contained in I^(" + std::to_string(n) + ")");
    if (!equal(product(J, In), ctx.symbolic_power(2 * n)))
        return bad("J * I^(" + std::to_string(n) + ") != I^(" + std::to_string(2 * n) + ")");
    return ok("J subset of I^(" + std::to_string(n) + ") and J*I^(" + std::to_string(n) +
              ") = I^(" + std::to_string(2 * n) + "): reduction number 1");
}

// --- C12: alpha and beta -----------------------------------------------------
inline Outcome c12_alphabeta(const FermatContext& ctx, const CheckParams& p) {
    unsigned k = *p.k;
    unsigned n = ctx.n();
    Ideal snk = ctx.symbolic_power(n * k);
    int a = alpha(snk);
    if (a != static_cast<int>(n * n * k))
        return bad("alpha(I^(" + std::to_string(n * k) + ")) = " + std::to_string(a) +
                   " != n^2 k");
    std::string detail = "alpha(I^(" + std::to_string(n * k) + ")) = " + std::to_string(a);
    if (k == 1) {
        int b = beta(snk);
        if (b != static_cast<int>(n * n + n))
            return bad("beta(I^(" + std::to_string(n) + ")) = " + std::to_string(b) +
                       " != n^2 + n");
        detail += "; beta = " + std::to_string(b);
    }
    return ok(detail + " as predicted");
}

// --- C13: multiplicity case formulas ----------------------------------------
inline Outcome c13_multiplicity(const FermatContext& ctx, const CheckParams& p) {
    unsigned k = *p.k;
    unsigned n = ctx.n();
    std::ostringstream os;
    for (unsigned j = 1; j <= 3 * k; ++j) {
        Ideal ideal_j = chain_intersection_ideal(ctx, k, j);
        long long computed = multiplicity(ideal_j);
        long long stable = stabilized_hilbert_value(ideal_j);
        long long predicted = predicted_multiplicity_xj(n, k, j);
        if (computed != predicted || stable != predicted)
            return bad("multiplicity at j=" + std::to_string(j) + ": numerator " +
                       std::to_string(computed) + ", stabilized " + std::to_string(stable) +
                       ", formula " + std::to_string(predicted));
        if (j > 1) os << " ";
        os << "j=" << j << ":" << computed;
    }
    return ok("multiplicities match the case formulas and stabilized values (" + os.str() + ")");
}

// --- C14: syzygy degrees and Rees bidegrees ---------------------------------
inline Outcome c14_syzygy(const FermatContext& ctx, const CheckParams&) {
    unsigned n = ctx.n();
    auto deg2 = detail::syzygy_space(ctx, 2);
    std::size_t expected2 = n == 3 ? 2 : 1;
    if (deg2.size() != expected2)
        return bad("degree-2 syzygy space has dimension " + std::to_string(deg2.size()));
    if (n != 3) {
        auto degn1 = detail::syzygy_space(ctx, n - 1);
        std::size_t expected_hi =
            1 + static_cast<std::size_t>(detail::binomial_u64(n - 1, 2));
        if (degn1.size() != expected_hi)
            return bad("degree-(n-1) syzygy space has dimension " + std::to_string(degn1.size()) +
                       " != 1 + dim R_{n-3} = " + std::to_string(expected_hi));
    }
    PolyMatrix syz = syzygy_matrix(ctx);
    (void)syz;
    unsigned d = n + 1;
    return ok("syzygy degrees {2, " + std::to_string(n - 1) + "}; d_0 + d_1 = " +
              std::to_string(2 + n - 1) + " = deg I = " + std::to_string(d) +
              "; derived Rees bidegrees (" + std::to_string(n + 3) + ",1), (" +
              std::to_string(2 * n) + ",1)");
}

// --- C15: Hilbert-Burch recovery --------------------------------------------
inline Outcome c15_hilbert_burch(const FermatContext& ctx, const CheckParams&) {
    PolyMatrix syz = syzygy_matrix(ctx);
    Ideal minors(ctx.ring(), maximal_minors(syz));
    if (!equal(minors, ctx.ideal()))
        return bad("maximal minors of the syzygy matrix do not regenerate I");
    return ok("maximal minors of the 3x2 syzygy matrix regenerate I");
}

}  // namespace checks_detail

// ---------------------------------------------------------------------------
// the registry
// ---------------------------------------------------------------------------

struct SuiteConfig {
    std::vector<unsigned> ns = {3};
    std::vector<unsigned> ks = {1};
    std::optional<std::pair<std::uint64_t, std::uint64_t>> primes;  // auto per n if absent
    enum class Selection { all, quick, by_ids };
    Selection selection = Selection::all;
    std::vector<std::string> ids;
    unsigned threads = 0;  // 0: FERMAT_THREADS env or 1
    bool timing = false;
};

struct RegistryEntry {
    std::string id;
    std::string claim;
    std::string required_params;  // subset of "krmjt", besides n
    std::function<std::vector<CheckParams>(const SuiteConfig&)> grid;
    std::function<Outcome(const FermatContext&, const CheckParams&)> run;
};

namespace checks_detail {

/// Parameter envelopes that keep the full suite at desk scale: symbolic
/// powers beyond I^(8) (n = 5 with k = 2, or 2n = 10) are skipped.
inline bool heavy_pair(unsigned n, unsigned k) { return n >= 5 && k >= 2; }

inline std::vector<CheckParams> grid_nt(const SuiteConfig& cfg, unsigned tlo, unsigned thi,
                                        unsigned nmax = 99) {
    std::vector<CheckParams> out;
    for (unsigned n : cfg.ns) {
        if (n < 3 || n > nmax) continue;
        for (unsigned t = tlo; t <= thi; ++t) {
            CheckParams p;
            p.n = n;
            p.t = t;
            out.push_back(p);
        }
    }
    return out;
}

inline std::vector<CheckParams> grid_nk(const SuiteConfig& cfg, bool skip_heavy = true) {
    std::vector<CheckParams> out;
    for (unsigned n : cfg.ns) {
        if (n < 3) continue;
        for (unsigned k : cfg.ks) {
            if (skip_heavy && heavy_pair(n, k)) continue;
            CheckParams p;
            p.n = n;
            p.k = k;
            out.push_back(p);
        }
    }
    return out;
}

inline std::vector<CheckParams> grid_n(const SuiteConfig& cfg) {
    std::vector<CheckParams> out;
    for (unsigned n : cfg.ns) {
        if (n < 3) continue;
        CheckParams p;
        p.n = n;
        out.push_back(p);
    }
    return out;
}

}  // namespace checks_detail

inline const std::vector<RegistryEntry>& check_registry() {
    using namespace checks_detail;
    static const std::vector<RegistryEntry> registry = {
        {"C1-detC", "det C(a,b)_t = a^t - b^t for 2 <= t <= 6", "t",
         [](const SuiteConfig& c) { return grid_nt(c, 2, 6); }, c1_detC},
        {"C2-minorsH", "maximal minors of H(a,b)_t generate (a,b)^t for 1 <= t <= 5", "t",
         [](const SuiteConfig& c) { return grid_nt(c, 1, 5); }, c2_minorsH},
        {"C3-threedet", "the three bordered determinant families for t <= 4", "t",
         [](const SuiteConfig& c) { return grid_nt(c, 1, 4, 5); }, c3_threedet},
        {"C4-X3", "X_3 minors equal the summand ideal and the fourfold intersection", "k",
         [](const SuiteConfig& c) { return grid_nk(c); }, c4_x3},
        {"C5-gens", "the generator families present the kn-th symbolic power", "k",
         [](const SuiteConfig& c) { return grid_nk(c); }, c5_gens},
        {"C6-recursion", "recursion ideals match intersections; S columns verified", "k",
         [](const SuiteConfig& c) { return grid_nk(c); }, c6_recursion},
        {"C7-reg-ordinary", "resolutions and regularity of ordinary powers", "r",
         [](const SuiteConfig& c) {
             std::vector<CheckParams> out;
             for (unsigned n : c.ns) {
                 if (n < 3) continue;
                 for (unsigned r = 1; r <= 3; ++r) {
                     CheckParams p;
                     p.n = n;
                     p.r = r;
                     out.push_back(p);
                 }
             }
             return out;
         },
         c7_reg_ordinary},
        {"C8-reg-symbolic", "regularity of symbolic powers is m(n+1)", "m",
         [](const SuiteConfig& c) {
             std::vector<CheckParams> out;
             for (unsigned n : c.ns) {
                 if (n < 3) continue;
                 std::vector<unsigned> ms;
                 if (n == 3) ms = {2, 3, 4, 5, 6};
                 else if (n == 4) ms = {2, 3, 4, 5};  // n-2 .. n+1: explores the
                                                      // conjectured range as well
                 else ms = {n - 2, n - 1, n};
                 for (unsigned m : ms) {
                     CheckParams p;
                     p.n = n;
                     p.m = m;
                     out.push_back(p);
                 }
             }
             return out;
         },
         c8_reg_symbolic},
        {"C9-veronese", "I^(nk) = (I^(n))^k", "k",
         [](const SuiteConfig& c) {
             std::vector<CheckParams> out;
             for (unsigned n : c.ns) {
                 if (n < 3 || checks_detail::heavy_pair(n, 2)) continue;
                 CheckParams p;
                 p.n = n;
                 p.k = 2;
                 out.push_back(p);
             }
             return out;
         },
         c9_veronese},
        {"C10-noncontainment", "some minimal generator of I^(3) lies outside I^2", "",
         [](const SuiteConfig& c) { return grid_n(c); }, c10_noncontainment},
        {"C11-reduction", "J I^(n) = I^(2n) and J subset of I^(n)", "",
         [](const SuiteConfig& c) {
             std::vector<CheckParams> out;
             for (unsigned n : c.ns) {
                 if (n < 3 || n >= 5) continue;  // I^(2n) at n >= 5 is out of budget
                 CheckParams p;
                 p.n = n;
                 out.push_back(p);
             }
             return out;
         },
         c11_reduction},
        {"C12-alphabeta", "alpha(I^(nk)) = n^2 k and beta(I^(n)) = n^2 + n", "k",
         [](const SuiteConfig& c) { return grid_nk(c); }, c12_alphabeta},
        {"C13-multiplicity", "multiplicity case formulas along the recursion chain", "k",
         [](const SuiteConfig& c) { return grid_nk(c); }, c13_multiplicity},
        {"C14-syzygy", "syzygy degrees {2, n-1} and the derived Rees bidegrees", "",
         [](const SuiteConfig& c) { return grid_n(c); }, c14_syzygy},
        {"C15-hilbert-burch", "minors of the syzygy matrix regenerate I", "",
         [](const SuiteConfig& c) { return grid_n(c); }, c15_hilbert_burch},
    };
    return registry;
}

// ---------------------------------------------------------------------------
// runner
// ---------------------------------------------------------------------------

namespace checks_detail {

class ContextCache {
public:
    std::shared_ptr<const FermatContext> get(unsigned n, std::uint64_t p) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, p);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto ctx = std::make_shared<const FermatContext>(n, p);
        cache_.emplace(key, ctx);
        return ctx;
    }

private:
    std::mutex mu_;
    std::map<std::pair<unsigned, std::uint64_t>, std::shared_ptr<const FermatContext>> cache_;
};

inline Outcome run_guarded(const RegistryEntry& entry, const FermatContext& ctx,
                           const CheckParams& p) {
    try {
        return entry.run(ctx, p);
    } catch (const paper_refuting& e) {
        return {CheckStatus::fail, std::string("refuted: ") + e.what()};
    } catch (const std::exception& e) {
        return {CheckStatus::fail, std::string("error: ") + e.what()};
    }
}

}  // namespace checks_detail

inline std::pair<std::uint64_t, std::uint64_t> default_primes(unsigned n) {
    std::uint64_t p1 = choose_prime(n);
    std::uint64_t p2 = choose_prime(n, p1 + 1);
    return {p1, p2};
}

/// Executes one registry check under both primes; pass requires agreement.
inline CheckResult run_check(const std::string& check_id, const CheckParams& params,
                             std::optional<std::pair<std::uint64_t, std::uint64_t>> primes =
                                 std::nullopt,
                             bool timing = false) {
    const RegistryEntry* entry = nullptr;
    for (const RegistryEntry& e : check_registry())
        if (e.id == check_id) entry = &e;
    if (!entry) throw error("unknown check id: " + check_id);
    if (params.n < 2) throw error("check parameters must include n");
    for (char c : entry->required_params) {
        bool present = (c == 'k' && params.k) || (c == 'r' && params.r) ||
                       (c == 'm' && params.m) || (c == 'j' && params.j) ||
                       (c == 't' && params.t);
        if (!present)
            throw error("check " + check_id + " requires parameter " + std::string(1, c));
    }

    auto [p1, p2] = primes ? *primes : default_primes(params.n);
    CheckResult result;
    result.check_id = check_id;
    result.params = params;
    result.prime1 = p1;
    result.prime2 = p2;

    auto start = std::chrono::steady_clock::now();
    Outcome o1, o2;
    try {
        static checks_detail::ContextCache cache;
        auto ctx1 = cache.get(params.n, p1);
        auto ctx2 = cache.get(params.n, p2);
        o1 = checks_detail::run_guarded(*entry, *ctx1, params);
        o2 = checks_detail::run_guarded(*entry, *ctx2, params);
    } catch (const std::exception& e) {
        // e.g. an unusable explicit prime; recorded, never aborts a suite
        auto stop = std::chrono::steady_clock::now();
        result.status = CheckStatus::fail;
        result.details = std::string("context error: ") + e.what();
        if (timing)
            result.wall_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        return result;
    }
    auto stop = std::chrono::steady_clock::now();

    if (o1.status != o2.status) {
        result.status = CheckStatus::fail;
        result.details = "prime disagreement: p=" + std::to_string(p1) + " -> [" +
                         to_string(o1.status) + "] " + o1.details + " | p=" + std::to_string(p2) +
                         " -> [" + to_string(o2.status) + "] " + o2.details;
    } else if (o1.details != o2.details) {
        // same verdict, prime-dependent detail text (e.g. rendered residues)
        result.status = o1.status;
        result.details = "p=" + std::to_string(p1) + ": " + o1.details + " | p=" +
                         std::to_string(p2) + ": " + o2.details;
    } else {
        result.status = o1.status;
        result.details = o1.details + " (agrees under p=" + std::to_string(p1) + " and p=" +
                         std::to_string(p2) + ")";
    }
    if (timing)
        result.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return result;
}

/// Runs a selection of checks over parameter ranges.  Independent checks may
/// execute concurrently; the report ordering is fixed by the registry.
inline Report run_suite(SuiteConfig cfg) {
    if (cfg.selection == SuiteConfig::Selection::quick) {
        cfg.ns = {3};
        cfg.ks = {1};
    }

    struct Task {
        const RegistryEntry* entry;
        CheckParams params;
    };
    std::vector<Task> tasks;
    for (const RegistryEntry& entry : check_registry()) {
        if (cfg.selection == SuiteConfig::Selection::by_ids) {
            bool wanted = false;
            for (const std::string& id : cfg.ids)
                if (id == entry.id) wanted = true;
            if (!wanted) continue;
        }
        for (CheckParams& p : entry.grid(cfg)) tasks.push_back({&entry, std::move(p)});
    }

    unsigned threads = cfg.threads;
    if (threads == 0) {
        if (const char* env = std::getenv("FERMAT_THREADS")) {
            int v = std::atoi(env);
            if (v > 0) threads = static_cast<unsigned>(v);
        }
        if (threads == 0) threads = 1;
    }
    threads = std::min<unsigned>(threads, tasks.size() ? tasks.size() : 1);

    std::vector<CheckResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            results[i] = run_check(tasks[i].entry->id, tasks[i].params, cfg.primes, cfg.timing);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    Report report;
    report.version = tool_version;
    for (unsigned n : cfg.ns) {
        auto [p1, p2] = cfg.primes ? *cfg.primes : default_primes(n);
        report.fields.push_back({n, {p1, p2}});
    }
    report.results = std::move(results);
    return report;
}

}  // namespace fermat
