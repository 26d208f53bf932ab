#include "identgb/modp.hpp"

#include <doctest.h>

#include <random>

using namespace identgb;

TEST_CASE("field arithmetic mod small and large primes") {
    for (std::uint32_t p : {7u, 101u, 11863279u, 2147483647u}) {
        Fp f(p);
        CHECK(f.add(p - 1, 1) == 0);
        CHECK(f.sub(0, 1) == p - 1);
        CHECK(f.mul(p - 1, p - 1) == f.mul(1, 1)); // (-1)^2 = 1
        std::mt19937_64 rng(p);
        for (int i = 0; i < 50; ++i) {
            std::uint32_t a = 1 + rng() % (p - 1);
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.pow(a, p - 1) == 1); // Fermat
        }
    }
}

TEST_CASE("rational reduction mod p") {
    Fp f(11863279);
    CHECK(f.from_rat(mpq_class(3, 4)) == f.div(3, 4));
    CHECK(f.from_int(mpz_class("321051405657994059048")) == 1507672);
    CHECK(f.from_int(mpz_class(-1)) == 11863278);
}

TEST_CASE("primality testing") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(7));
    CHECK(is_prime_u32(101));
    CHECK(is_prime_u32(11863279));
    CHECK(is_prime_u32(2147483647));
    CHECK(!is_prime_u32(1));
    CHECK(!is_prime_u32(0));
    CHECK(!is_prime_u32(91));        // 7 * 13
    CHECK(!is_prime_u32(11863281));  // divisible by 3
    CHECK(!is_prime_u32(3215031751u)); // strong pseudoprime to bases 2,3,5,7
}
