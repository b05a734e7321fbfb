#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fermat/field.hpp"
#include "fermat/monomial.hpp"

namespace fermat {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring K[vars] over a prime field with a fixed monomial order.
class Ring {
public:
    Ring(std::vector<std::string> vars, PrimeField field, MonomialOrder order)
        : vars_(std::move(vars)), field_(std::move(field)), order_(order) {
        if (vars_.size() > max_vars) throw error("too many ring variables");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw error("duplicate ring variable " + vars_[i]);
        if (order.kind == MonomialOrder::Kind::block_elimination &&
            (order.front_block == 0 || order.front_block >= vars_.size()))
            throw error("elimination order must split the variables into two nonempty blocks");
    }

    static RingPtr make(std::vector<std::string> vars, PrimeField field,
                        MonomialOrder order = MonomialOrder::grevlex()) {
        return std::make_shared<Ring>(std::move(vars), std::move(field), order);
    }

    unsigned nvars() const { return static_cast<unsigned>(vars_.size()); }
    const std::string& var_name(unsigned i) const { return vars_[i]; }
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }
    const PrimeField& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    bool same_as(const Ring& other) const {
        return this == &other ||
               (vars_ == other.vars_ && field_ == other.field_ && order_ == other.order_);
    }

private:
    std::vector<std::string> vars_;
    PrimeField field_;
    MonomialOrder order_;
};

struct Term {
    Monomial m;
    FieldElement c;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Terms must be distinct monomials with nonzero coefficients; sorts them.
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        const MonomialOrder& ord = ring_->order();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, FieldElement c) {
        Polynomial p(ring);
        if (c.value != 0) p.terms_.push_back({Monomial::unit(ring->nvars()), c});
        return p;
    }
    static Polynomial constant(RingPtr ring, std::uint64_t c) {
        FieldElement fc = ring->field().element(c);
        return constant(std::move(ring), fc);
    }
    static Polynomial variable(RingPtr ring, unsigned i, unsigned power = 1) {
        Polynomial p(ring);
        if (power == 0) return constant(std::move(p.ring_), std::uint64_t{1});
        p.terms_.push_back({Monomial::var(i, ring->nvars(), power), ring->field().one()});
        return p;
    }
    static Polynomial from_monomial(RingPtr ring, const Monomial& m,
                                    FieldElement c) {
        Polynomial p(std::move(ring));
        if (c.value != 0) p.terms_.push_back({m, c});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading_term() const {
        if (terms_.empty()) throw error("zero polynomial has no leading term");
        return terms_.front();
    }

    int degree() const {  // max total degree; -1 for the zero polynomial
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().m.degree();
        for (const Term& t : terms_)
            if (t.m.degree() != d) return false;
        return true;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        return merge(a, b, true);
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        const PrimeField& F = a.ring_->field();
        for (Term& t : r.terms_) t.c = F.neg(t.c);
        return r;
    }

    Polynomial scaled(FieldElement c) const {
        const PrimeField& F = ring_->field();
        if (c.value == 0) return zero(ring_);
        Polynomial r = *this;
        for (Term& t : r.terms_) t.c = F.mul(t.c, c);
        return r;
    }

    /// this * (c * m), no reallocation of the term structure.
    Polynomial times_term(const Monomial& m, FieldElement c) const {
        const PrimeField& F = ring_->field();
        if (c.value == 0) return zero(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back({t.m * m, F.mul(t.c, c)});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.ring_);
        int dsum = a.degree() + b.degree();
        if (dsum > degree_cap()) throw degree_cap_exceeded(dsum, degree_cap());
        const PrimeField& F = a.ring_->field();
        std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& ta : a.terms_) {
            for (const Term& tb : b.terms_) {
                Monomial m = ta.m * tb.m;
                auto [it, inserted] = acc.try_emplace(m, 0);
                it->second = F.add({it->second}, F.mul(ta.c, tb.c)).value;
            }
        }
        Polynomial r(a.ring_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, {c}});
        const MonomialOrder& ord = a.ring_->order();
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });
        return r;
    }

    friend Polynomial pow(const Polynomial& a, unsigned e) {
        Polynomial r = constant(a.ring_, std::uint64_t{1});
        for (unsigned i = 0; i < e; ++i) r = r * a;
        return r;
    }

private:
    static void check_rings(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_ || !b.ring_ || !a.ring_->same_as(*b.ring_)) throw ring_mismatch();
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        const PrimeField& F = a.ring_->field();
        const MonomialOrder& ord = a.ring_->order();
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ord.compare(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const Term& t = b.terms_[j++];
                r.terms_.push_back({t.m, subtract ? F.neg(t.c) : t.c});
            } else {
                FieldElement s = subtract ? F.sub(a.terms_[i].c, b.terms_[j].c)
                                          : F.add(a.terms_[i].c, b.terms_[j].c);
                if (s.value != 0) r.terms_.push_back({a.terms_[i].m, s});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const Term& t = b.terms_[j];
            r.terms_.push_back({t.m, subtract ? F.neg(t.c) : t.c});
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// q with q*b == a; throws not_divisible when b does not divide a exactly.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error("division by the zero polynomial");
    if (!a.ring()->same_as(*b.ring())) throw ring_mismatch();
    const PrimeField& F = a.ring()->field();
    Polynomial rem = a;
    Polynomial q = Polynomial::zero(a.ring());
    const Term& lb = b.leading_term();
    FieldElement lb_inv = F.inv(lb.c);
    while (!rem.is_zero()) {
        const Term& lr = rem.leading_term();
        if (!lb.m.divides(lr.m)) throw not_divisible();
        Monomial qm = lr.m.quotient_by(lb.m);
        FieldElement qc = F.mul(lr.c, lb_inv);
        q = q + Polynomial::from_monomial(a.ring(), qm, qc);
        rem = rem - b.times_term(qm, qc);
    }
    return q;
}

// ---------------------------------------------------------------------------
// text grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
// whitespace insignificant; canonical rendering uses descending monomial
// order and least nonnegative residues (so it never emits '-').
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring)
        : s_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial result = Polynomial::zero(ring_);
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        for (;;) {
            Polynomial t = parse_term();
            result = negate ? result - t : result + t;
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = take();
            if (c == '+') negate = false;
            else if (c == '-') negate = true;
            else throw parse_error(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
        return result;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Polynomial parse_term() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("expected term", pos_);
        Polynomial t = Polynomial::constant(ring_, std::uint64_t{1});
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t = Polynomial::constant(ring_, parse_uint());
            have_factor = true;
        } else {
            t = t * parse_factor();
            have_factor = true;
        }
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            t = t * parse_factor();
        }
        if (!have_factor) throw parse_error("empty term", pos_);
        return t;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos_ >= s_.size() || !is_name_start(peek()))
            throw parse_error("expected variable", pos_);
        std::size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() && is_name_char(peek())) name.push_back(take());
        int idx = ring_->var_index(name);
        if (idx < 0) throw parse_error("unknown variable '" + name + "'", start);
        unsigned power = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw parse_error("expected exponent", pos_);
            power = static_cast<unsigned>(parse_uint());
        }
        return Polynomial::variable(ring_, static_cast<unsigned>(idx), power);
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected number", pos_);
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + static_cast<std::uint64_t>(take() - '0');
        return v;
    }

    static bool is_name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse(const std::string& text, RingPtr ring) {
    return detail::PolyParser(text, std::move(ring)).parse();
}

inline std::string render(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Ring& R = *p.ring();
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        if (!first) out += " + ";
        first = false;
        bool is_const = t.m.degree() == 0;
        if (is_const || t.c.value != 1) {
            out += std::to_string(t.c.value);
            if (!is_const) out += "*";
        }
        bool first_factor = true;
        for (unsigned i = 0; i < R.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!first_factor) out += "*";
            first_factor = false;
            out += R.var_name(i);
            if (t.m.e[i] > 1) out += "^" + std::to_string(t.m.e[i]);
        }
    }
    return out;
}

/// Display form with balanced residues (coefficients above p/2 shown as
/// negative); not part of the canonical round-trip grammar.
inline std::string render_signed(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Ring& R = *p.ring();
    const std::uint64_t mod = R.field().modulus();
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        bool negative = t.c.value > mod / 2;
        std::uint64_t mag = negative ? mod - t.c.value : t.c.value;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        bool is_const = t.m.degree() == 0;
        if (is_const || mag != 1) {
            out += std::to_string(mag);
            if (!is_const) out += "*";
        }
        bool first_factor = true;
        for (unsigned i = 0; i < R.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!first_factor) out += "*";
            first_factor = false;
            out += R.var_name(i);
            if (t.m.e[i] > 1) out += "^" + std::to_string(t.m.e[i]);
        }
    }
    return out;
}

}  // namespace fermat
