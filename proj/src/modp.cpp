#include "identgb/modp.hpp"

namespace identgb {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return a * b % n; };
    // Bases 2, 7, 61 decide primality for all n < 4.76e9.
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = 1, base = a % n, e = d;
        while (e > 0) {
            if (e & 1u) x = mulmod(x, base);
            base = mulmod(base, base);
            e >>= 1u;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace identgb
