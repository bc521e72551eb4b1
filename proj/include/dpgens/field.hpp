#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpgens {

bool is_prime_u32(std::uint32_t n);
// Distinct primes in (2^30, 2^31) drawn from a generator seeded with `seed`.
std::vector<std::uint32_t> pick_primes(std::uint64_t seed, int count);

// Arithmetic modulo a prime p < 2^31.
struct ModField {
    using Elem = std::uint32_t;
    std::uint32_t p;

    explicit ModField(std::uint32_t prime) : p(prime) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
    }
    Elem inv(Elem a) const;
    // Nothing when the denominator vanishes modulo p.
    std::optional<Elem> from_rational(const mpq_class& q) const;
    std::string name() const { return "mod " + std::to_string(p); }
};

struct RationalField {
    using Elem = mpq_class;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    std::optional<Elem> from_rational(const mpq_class& q) const { return q; }
    std::string name() const { return "exact"; }
};

}  // namespace dpgens
