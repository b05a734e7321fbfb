#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fermat/ideal.hpp"

using namespace fermat;

namespace {

RingPtr test_ring() { return Ring::make({"x", "y", "z"}, PrimeField(10009, 3)); }

Ideal from_strings(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* s : gens) v.push_back(parse(s, R));
    return Ideal(R, std::move(v));
}

struct FermatGens {
    Polynomial f, g, h;
    Ideal I;
};

FermatGens fermat_ideal(const RingPtr& R, unsigned n) {
    std::string N = std::to_string(n);
    Polynomial f = parse("y^" + N + " - z^" + N, R);
    Polynomial g = parse("z^" + N + " - x^" + N, R);
    Polynomial h = parse("x^" + N + " - y^" + N, R);
    Ideal I(R, {parse("x", R) * f, parse("y", R) * g, parse("z", R) * h});
    return {f, g, h, I};
}

}  // namespace

TEST_CASE("sum, product and power on toy ideals") {
    RingPtr R = test_ring();
    Ideal xy = from_strings(R, {"x", "y"});
    CHECK(equal(power(xy, 2), from_strings(R, {"x^2", "x*y", "y^2"})));
    CHECK(equal(product(from_strings(R, {"x"}), from_strings(R, {"y"})),
                from_strings(R, {"x*y"})));
    CHECK_THROWS_AS(power(xy, 0), error);
}

TEST_CASE("power is additive in the exponent") {
    RingPtr R = test_ring();
    Ideal a = from_strings(R, {"x^2 - y*z", "x*y - z^2"});
    CHECK(equal(power(a, 3), product(power(a, 1), power(a, 2))));
    CHECK(equal(power(a, 4), product(power(a, 2), power(a, 2))));
}

TEST_CASE("intersections of principal and monomial ideals") {
    RingPtr R = test_ring();
    CHECK(equal(intersect(from_strings(R, {"x"}), from_strings(R, {"y"})),
                from_strings(R, {"x*y"})));

    Ideal a = from_strings(R, {"x^2", "y"});
    Ideal b = from_strings(R, {"x"});
    Ideal c = intersect(a, b);
    CHECK(equal(c, from_strings(R, {"x^2", "x*y"})));
    // confirmed by membership both ways and by graded dimension counts
    CHECK(contains(a, c));
    CHECK(contains(b, c));
    for (int d = 0; d <= 4; ++d) {
        int expected = 0;
        for (const Monomial& m : detail::monomials_of_degree(3, d)) {
            bool in_a = m.e[0] >= 2 || m.e[1] >= 1;
            bool in_b = m.e[0] >= 1;
            if (in_a && in_b) ++expected;
        }
        CHECK(graded_dim(c, d) == expected);
    }
}

TEST_CASE("product is contained in the intersection") {
    RingPtr R = test_ring();
    Ideal a = from_strings(R, {"x^2", "y - z"});
    Ideal b = from_strings(R, {"x + y", "z^2"});
    Ideal p = product(a, b);
    Ideal i = intersect(a, b);
    CHECK(contains(a, i));
    CHECK(contains(b, i));
    CHECK(contains(i, p));
}

TEST_CASE("the fourfold decomposition recovers I at m = 1") {
    RingPtr R = test_ring();
    auto [f, g, h, I] = fermat_ideal(R, 3);
    Ideal pencil(R, {f, g});
    Ideal c1 = from_strings(R, {"x", "y"});
    Ideal c2 = from_strings(R, {"y", "z"});
    Ideal c3 = from_strings(R, {"z", "x"});
    Ideal inter = intersect(intersect(intersect(pencil, c1), c2), c3);
    CHECK(equal(inter, I));
}

TEST_CASE("the cached basis installed by intersect matches a fresh computation") {
    RingPtr R = test_ring();
    auto [f, g, h, I] = fermat_ideal(R, 3);
    Ideal a = power(Ideal(R, {f, g}), 2);
    Ideal b = power(from_strings(R, {"x", "y"}), 2);
    Ideal c = intersect(a, b);
    Ideal fresh(R, c.generators());  // recomputes the basis from scratch
    const auto& installed = c.basis();
    const auto& recomputed = fresh.basis();
    REQUIRE(installed.size() == recomputed.size());
    for (std::size_t i = 0; i < installed.size(); ++i) CHECK(installed[i] == recomputed[i]);
}

TEST_CASE("intersection is associative over the decomposition components") {
    // fold the four components of the symbolic-power decomposition in
    // different association orders; the result must not depend on it
    for (unsigned n : {3u, 4u}) {
        RingPtr R = Ring::make({"x", "y", "z"}, PrimeField(choose_prime(n), n));
        auto [f, g, h, I] = fermat_ideal(R, n);
        for (unsigned m : {1u, 2u, 3u}) {
            if (n == 4 && m == 3) continue;  // covered by the fermat suite at scale
            Ideal p0 = power(Ideal(R, {f, g}), m);
            Ideal p1 = power(from_strings(R, {"x", "y"}), m);
            Ideal p2 = power(from_strings(R, {"y", "z"}), m);
            Ideal p3 = power(from_strings(R, {"z", "x"}), m);
            Ideal left = intersect(intersect(intersect(p0, p1), p2), p3);
            Ideal right = intersect(p0, intersect(p1, intersect(p2, p3)));
            Ideal paired = intersect(intersect(p0, p2), intersect(p1, p3));
            CHECK(equal(left, right));
            CHECK(equal(left, paired));
        }
    }
}

TEST_CASE("intersection dimensions obey inclusion-exclusion") {
    // dim (a n b)_d = dim a_d + dim b_d - dim (a+b)_d, checked on random
    // homogeneous ideals; this exercises the elimination route against
    // graded linear algebra that never touches the auxiliary variable
    RingPtr R = test_ring();
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> deg(1, 3), nterms(1, 3);
    std::uniform_int_distribution<std::uint64_t> coeff(1, 10008);
    auto random_homogeneous = [&](int d) {
        Polynomial p = Polynomial::zero(R);
        for (int t = 0, k = nterms(rng); t < k; ++t) {
            std::uniform_int_distribution<int> split(0, d);
            int a = split(rng);
            std::uniform_int_distribution<int> split2(0, d - a);
            int b = split2(rng);
            Monomial m = Monomial::unit(3);
            m.e[0] = static_cast<std::uint16_t>(a);
            m.e[1] = static_cast<std::uint16_t>(b);
            m.e[2] = static_cast<std::uint16_t>(d - a - b);
            p = p + Polynomial::from_monomial(R, m, {coeff(rng)});
        }
        return p.is_zero() ? Polynomial::variable(R, 0, d) : p;
    };
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> ga, gb;
        for (int i = 0; i < 2; ++i) ga.push_back(random_homogeneous(deg(rng)));
        for (int i = 0; i < 2; ++i) gb.push_back(random_homogeneous(deg(rng)));
        Ideal a(R, ga), b(R, gb);
        Ideal both = intersect(a, b);
        Ideal either = sum(a, b);
        CHECK(contains(a, both));
        CHECK(contains(b, both));
        for (int d = 0; d <= 8; ++d)
            CHECK(graded_dim(both, d) == graded_dim(a, d) + graded_dim(b, d) -
                                             graded_dim(either, d));
    }
}

TEST_CASE("colon and saturation") {
    RingPtr R = test_ring();
    CHECK(equal(colon(from_strings(R, {"x*y"}), parse("x", R)), from_strings(R, {"y"})));

    Ideal m = from_strings(R, {"x", "y", "z"});

    // x*(x,y,z): one colon sweep reaches (x) and stabilizes
    Ideal a = from_strings(R, {"x^2", "x*y", "x*z"});
    CHECK(equal(saturate(a, m), from_strings(R, {"x"})));

    // x*(x,y) has no component supported at the irrelevant ideal, so
    // saturation leaves it unchanged
    Ideal b = from_strings(R, {"x^2", "x*y"});
    CHECK(equal(saturate(b, m), b));
    CHECK(equal(colon(b, parse("y", R)), from_strings(R, {"x"})));
}

TEST_CASE("graded dimensions and minimal generator degrees") {
    RingPtr R = test_ring();
    CHECK(graded_dim(from_strings(R, {"x", "y", "z"}), 1) == 3);
    CHECK(graded_dim(Ideal(R, {}), 2) == 0);

    auto [f, g, h, I] = fermat_ideal(R, 3);
    auto degs = minimal_generator_degrees(I);
    REQUIRE(degs.size() == 1);
    CHECK(degs.at(4) == 3);

    auto mingens = minimal_generators(I);
    CHECK(mingens.size() == 3);
    for (const Polynomial& p : mingens) CHECK(p.degree() == 4);
}

TEST_CASE("alpha and beta") {
    RingPtr R = test_ring();
    Ideal a = from_strings(R, {"x^2", "x*y", "y^4"});
    CHECK(alpha(a) == 2);
    CHECK(beta(a) == 4);
}
