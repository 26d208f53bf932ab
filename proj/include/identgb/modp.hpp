#ifndef IDENTGB_MODP_HPP
#define IDENTGB_MODP_HPP

#include "identgb/errors.hpp"

#include <gmpxx.h>

#include <cstdint>

namespace identgb {

/// Arithmetic in F_p for a prime p < 2^31; residues live in [0, p).
class Fp {
  public:
    explicit Fp(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31)) throw invariant_error("prime must be in [2, 2^31)");
    }

    std::uint32_t prime() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t base = a % p_, acc = 1;
        while (e > 0) {
            if (e & 1u) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1u;
        }
        return static_cast<std::uint32_t>(acc);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw invariant_error("inverse of 0 mod p");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a % p_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (r != 1) throw invariant_error("modulus is not prime: gcd != 1 in inverse");
        if (t < 0) t += p_;
        return static_cast<std::uint32_t>(t);
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t from_int(const mpz_class& z) const {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r.get_ui());
    }

    std::uint32_t from_rat(const mpq_class& q) const {
        std::uint32_t n = from_int(q.get_num());
        std::uint32_t d = from_int(q.get_den());
        if (d == 0) throw invariant_error("rational with denominator divisible by p");
        return div(n, d);
    }

  private:
    std::uint32_t p_;
};

/// Deterministic Miller-Rabin for the 32-bit range.
bool is_prime_u32(std::uint32_t n);

} // namespace identgb

#endif
