#include <catch2/catch_amalgamated.hpp>

#include "fermat/hilbert.hpp"

using namespace fermat;

namespace {

RingPtr test_ring() { return Ring::make({"x", "y", "z"}, PrimeField(10009, 3)); }

Ideal from_strings(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* s : gens) v.push_back(parse(s, R));
    return Ideal(R, std::move(v));
}

Ideal fermat_ideal(const RingPtr& R, unsigned n) {
    std::string N = std::to_string(n);
    Polynomial f = parse("y^" + N + " - z^" + N, R);
    Polynomial g = parse("z^" + N + " - x^" + N, R);
    Polynomial h = parse("x^" + N + " - y^" + N, R);
    return Ideal(R, {parse("x", R) * f, parse("y", R) * g, parse("z", R) * h});
}

}  // namespace

TEST_CASE("hilbert function basics") {
    RingPtr R = test_ring();
    CHECK(hilbert_function(Ideal(R, {}), 2) == 6);
    CHECK(hilbert_function(from_strings(R, {"x", "y", "z"}), 1) == 0);
    Ideal I = fermat_ideal(R, 3);
    for (int d = 4; d <= 8; ++d) CHECK(hilbert_function(I, d) == 12);
}

TEST_CASE("series numerators") {
    RingPtr R = test_ring();
    CHECK(numerator(Ideal(R, {})) == std::vector<long long>{1});
    CHECK(numerator(from_strings(R, {"x"})) == std::vector<long long>{1, -1});
    CHECK(numerator(fermat_ideal(R, 3)) == std::vector<long long>{1, 0, 0, 0, -3, 0, 2});
}

TEST_CASE("multiplicity equals N''(1)/2 and the stabilized value") {
    RingPtr R = test_ring();
    Ideal I = fermat_ideal(R, 3);
    CHECK(multiplicity(I) == 12);
    CHECK(stabilized_hilbert_value(I) == 12);

    // (f,g)^2 for n=3: 9 pencil points each with local multiplicity 3
    Ideal pencil = from_strings(R, {"y^3 - z^3", "z^3 - x^3"});
    Ideal p2 = power(pencil, 2);
    CHECK(multiplicity(p2) == 27);
    CHECK(stabilized_hilbert_value(p2) == 27);

    CHECK_THROWS_AS(multiplicity(from_strings(R, {"x"})), error);
}

TEST_CASE("multiplicity of pencil powers follows the linearity formula") {
    for (unsigned n : {3u, 4u}) {
        RingPtr R = Ring::make({"x", "y", "z"}, PrimeField(choose_prime(n), n));
        std::string N = std::to_string(n);
        Ideal pencil = Ideal(R, {parse("y^" + N + " - z^" + N, R),
                                 parse("z^" + N + " - x^" + N, R)});
        for (unsigned m : {1u, 2u}) {
            long long expected = static_cast<long long>(n) * n * (m + 1) * m / 2;
            Ideal pm = power(pencil, m);
            CHECK(multiplicity(pm) == expected);
            CHECK(stabilized_hilbert_value(pm) == expected);
        }
    }
}

TEST_CASE("betti data for perfect codimension-2 ideals") {
    RingPtr R = test_ring();
    Ideal I = fermat_ideal(R, 3);
    BettiData b = betti_codim2(I);
    CHECK(b.generator_shifts == std::map<int, int>{{4, 3}});
    CHECK(b.syzygy_shifts_1 == std::map<int, int>{{6, 2}});
    CHECK(b.syzygy_shifts_2.empty());

    // I^2 is not perfect: its numerator cannot be explained by two steps
    CHECK_THROWS_AS(betti_codim2(power(I, 2)), not_perfect_codim2);
}

TEST_CASE("betti data regenerates the numerator") {
    RingPtr R = test_ring();
    Ideal I = fermat_ideal(R, 3);
    BettiData b = betti_codim2(I);
    PredictedResolution pred;
    pred.shifts[0] = b.generator_shifts;
    pred.shifts[1] = b.syzygy_shifts_1;
    CHECK(numerator_consistent(I, pred));
}

TEST_CASE("numerator consistency against claimed resolutions") {
    RingPtr R = test_ring();
    Ideal I = fermat_ideal(R, 3);

    PredictedResolution r1;
    r1.shifts[0] = {{4, 3}};
    r1.shifts[1] = {{6, 2}};
    CHECK(numerator_consistent(I, r1));

    PredictedResolution wrong;
    wrong.shifts[0] = {{4, 3}};
    wrong.shifts[1] = {{5, 2}};
    CHECK_FALSE(numerator_consistent(I, wrong));

    PredictedResolution r2;
    r2.shifts[0] = {{8, 6}};
    r2.shifts[1] = {{10, 6}};
    r2.shifts[2] = {{12, 1}};
    CHECK(numerator_consistent(power(I, 2), r2));
}

TEST_CASE("regularity, alpha, beta on the base ideal") {
    RingPtr R = test_ring();
    Ideal I = fermat_ideal(R, 3);
    CHECK(regularity(I) == 5);  // max(4, 6-1) under the fixed convention
    CHECK(alpha(I) == 4);
    CHECK(beta(I) == 4);

    PredictedResolution r2;
    r2.shifts[0] = {{8, 6}};
    r2.shifts[1] = {{10, 6}};
    r2.shifts[2] = {{12, 1}};
    CHECK(regularity(power(I, 2), r2) == 10);
}

TEST_CASE("a consistent resolution reproduces the hilbert function") {
    RingPtr R = test_ring();
    auto dimR = [](int e) -> long long { return e < 0 ? 0 : (e + 2) * (e + 1) / 2; };

    Ideal I = fermat_ideal(R, 3);
    PredictedResolution r2;
    r2.shifts[0] = {{8, 6}};
    r2.shifts[1] = {{10, 6}};
    r2.shifts[2] = {{12, 1}};
    Ideal I2 = power(I, 2);
    REQUIRE(numerator_consistent(I2, r2));
    for (int d = 0; d <= 14; ++d) {
        long long euler = dimR(d);
        int sign = -1;
        for (int step = 0; step < 3; ++step, sign = -sign)
            for (auto [s, c] : r2.shifts[step]) euler += sign * c * dimR(d - s);
        CHECK(hilbert_function(I2, d) == euler);
    }
}

TEST_CASE("dimension-1 numerators vanish to second order at 1") {
    RingPtr R = test_ring();
    for (const Ideal& a : {fermat_ideal(R, 3), power(fermat_ideal(R, 3), 2),
                           from_strings(R, {"x^2", "x*y", "y^3"})}) {
        auto n = numerator(a);
        long long at1 = 0, d1 = 0;
        for (std::size_t d = 0; d < n.size(); ++d) {
            at1 += n[d];
            d1 += static_cast<long long>(d) * n[d];
        }
        CHECK(at1 == 0);
        CHECK(d1 == 0);
    }
}
