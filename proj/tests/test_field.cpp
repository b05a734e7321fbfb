#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fermat/field.hpp"

using namespace fermat;

namespace {

// independent oracle: linear sweep with trial division
std::uint64_t smallest_admissible_prime(unsigned n, std::uint64_t floor) {
    for (std::uint64_t p = floor;; ++p) {
        if (p < 2) continue;
        bool prime = p >= 2;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime && p % n == 1 % n) return p;
    }
}

}  // namespace

TEST_CASE("choose_prime picks the smallest admissible prime") {
    CHECK(choose_prime(3, 2) == 7);
    CHECK(choose_prime(2, 2) == 3);
    CHECK(choose_prime(3, 10000) == smallest_admissible_prime(3, 10000));
    CHECK(choose_prime(3, 10000) == 10009);
    for (unsigned n : {2u, 3u, 4u, 5u, 6u})
        CHECK(choose_prime(n, 10000) == smallest_admissible_prime(n, 10000));
}

TEST_CASE("nth_roots returns exactly the n roots of unity") {
    PrimeField f13(13, 3);
    auto roots = nth_roots(f13);
    std::set<std::uint64_t> values;
    for (auto r : roots) values.insert(r.value);
    CHECK(values == std::set<std::uint64_t>{1, 3, 9});

    PrimeField f7(7, 3);
    auto roots7 = nth_roots(f7);
    values.clear();
    for (auto r : roots7) values.insert(r.value);
    CHECK(values == std::set<std::uint64_t>{1, 2, 4});

    CHECK_THROWS_AS(PrimeField(5, 3), error);
}

TEST_CASE("roots satisfy r^n = 1 and include 1") {
    for (unsigned n : {3u, 4u, 5u}) {
        PrimeField F(choose_prime(n), n);
        auto roots = nth_roots(F);
        REQUIRE(roots.size() == n);
        bool has_one = false;
        std::set<std::uint64_t> distinct;
        for (auto r : roots) {
            CHECK(F.pow(r, n).value == 1);
            distinct.insert(r.value);
            if (r.value == 1) has_one = true;
        }
        CHECK(has_one);
        CHECK(distinct.size() == n);

        // some root is primitive: its order is exactly n
        bool primitive_found = false;
        for (auto r : roots) {
            bool primitive = true;
            for (unsigned m = 1; m < n; ++m)
                if (F.pow(r, m).value == 1) primitive = false;
            primitive_found |= primitive;
        }
        CHECK(primitive_found);
    }
}

TEST_CASE("field axioms hold on random triples") {
    PrimeField F(10009, 3);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.modulus() - 1);
    for (int i = 0; i < 500; ++i) {
        FieldElement a{dist(rng)}, b{dist(rng)}, c{dist(rng)};
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.add(a, F.neg(a)).value == 0);
        if (a.value != 0) CHECK(F.mul(a, F.inv(a)).value == 1);
        CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
    }
}
