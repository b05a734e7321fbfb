#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fermat/matrix.hpp"

using namespace fermat;

namespace {

RingPtr test_ring() { return Ring::make({"x", "y", "z"}, PrimeField(10009, 3)); }

// oracle: naive cofactor expansion along the first row
Polynomial cofactor_det(const PolyMatrix& m) {
    const unsigned n = m.rows();
    if (n == 1) return m.at(0, 0);
    Polynomial acc = Polynomial::zero(m.ring());
    for (unsigned c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(m.ring(), n - 1, n - 1);
        for (unsigned r = 1; r < n; ++r)
            for (unsigned cc = 0, j = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor.at(r - 1, j++) = m.at(r, cc);
            }
        Polynomial term = m.at(0, c) * cofactor_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Polynomial random_entry(const RingPtr& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 2);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<std::uint64_t> coeff(0, R->field().modulus() - 1);
    Polynomial p = Polynomial::zero(R);
    for (int i = 0, k = nterms(rng); i < k; ++i) {
        Monomial m = Monomial::unit(R->nvars());
        for (unsigned v = 0; v < R->nvars(); ++v) m.e[v] = static_cast<std::uint16_t>(exp(rng));
        p = p + Polynomial::from_monomial(R, m, {coeff(rng)});
    }
    return p;
}

}  // namespace

TEST_CASE("determinant of explicit small matrices") {
    RingPtr R = test_ring();
    Polynomial x = parse("x", R), y = parse("y", R);

    // C(x,y)_3 circulant-like block
    PolyMatrix c3(R, 3, 3);
    c3.set(0, 0, x); c3.set(0, 1, -y);
    c3.set(1, 1, x); c3.set(1, 2, -y);
    c3.set(2, 0, -y); c3.set(2, 2, x);
    CHECK(determinant(c3) == parse("x^3 - y^3", R));

    // [H(f,g)_1 | e_1] with rows (-g, 1), (f, 0) has determinant -f
    Polynomial f = parse("y^3 - z^3", R), g = parse("z^3 - x^3", R);
    PolyMatrix m(R, 2, 2);
    m.set(0, 0, -g); m.set(0, 1, Polynomial::constant(R, std::uint64_t{1}));
    m.set(1, 0, f);
    CHECK(determinant(m) == -f);

    PolyMatrix one(R, 1, 1);
    one.set(0, 0, parse("x*y + z", R));
    CHECK(determinant(one) == parse("x*y + z", R));

    PolyMatrix rect(R, 2, 3);
    CHECK_THROWS_AS(determinant(rect), shape_error);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    RingPtr R = test_ring();
    std::mt19937_64 rng(23);
    for (unsigned n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            PolyMatrix m(R, n, n);
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = 0; c < n; ++c) m.set(r, c, random_entry(R, rng));
            CHECK(determinant(m) == cofactor_det(m));
        }
    }
}

TEST_CASE("determinant is alternating and multilinear in rows") {
    RingPtr R = test_ring();
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix m(R, 3, 3);
        for (unsigned r = 0; r < 3; ++r)
            for (unsigned c = 0; c < 3; ++c) m.set(r, c, random_entry(R, rng));
        PolyMatrix swapped = m;
        for (unsigned c = 0; c < 3; ++c) {
            Polynomial t = swapped.at(0, c);
            swapped.set(0, c, swapped.at(1, c));
            swapped.set(1, c, t);
        }
        CHECK(determinant(swapped) == -determinant(m));

        PolyMatrix scaled = m;
        Polynomial s = parse("x + 2*y", R);
        for (unsigned c = 0; c < 3; ++c) scaled.set(2, c, s * m.at(2, c));
        CHECK(determinant(scaled) == s * determinant(m));
    }
}

TEST_CASE("maximal minors in row-deletion order") {
    RingPtr R = test_ring();
    Polynomial x = parse("x", R), y = parse("y", R);

    // H(x,y)_2 is 3x2 with -y on the diagonal and x below
    PolyMatrix h2(R, 3, 2);
    h2.set(0, 0, -y);
    h2.set(1, 0, x); h2.set(1, 1, -y);
    h2.set(2, 1, x);
    auto minors = maximal_minors(h2);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == parse("x^2", R));
    CHECK(minors[1] == -(x * y));
    CHECK(minors[2] == parse("y^2", R));

    // H(x,y)_1
    PolyMatrix h1(R, 2, 1);
    h1.set(0, 0, -y);
    h1.set(1, 0, x);
    auto minors1 = maximal_minors(h1);
    REQUIRE(minors1.size() == 2);
    CHECK(minors1[0] == x);
    CHECK(minors1[1] == -y);

    PolyMatrix square(R, 2, 2);
    CHECK_THROWS_AS(maximal_minors(square), shape_error);
}
