#include "dpgens/field.hpp"

#include <random>
#include <stdexcept>

namespace dpgens {

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Bases 2, 7, 61 are deterministic below 4,759,123,141.
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint32_t> pick_primes(std::uint64_t seed, int count) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
    std::vector<std::uint32_t> out;
    while (static_cast<int>(out.size()) < count) {
        std::uint32_t c = dist(gen) | 1u;
        while (!is_prime_u32(c)) c += 2;
        if (c >= (1u << 31)) continue;
        bool repeat = false;
        for (auto q : out) repeat = repeat || q == c;
        if (!repeat) out.push_back(c);
    }
    return out;
}

ModField::Elem ModField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return static_cast<Elem>(powmod(a, p - 2, p));
}

std::optional<ModField::Elem> ModField::from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    if (den == 0) return std::nullopt;
    Elem n = static_cast<Elem>(num.get_ui());
    Elem d = static_cast<Elem>(den.get_ui());
    return mul(n, inv(d));
}

}  // namespace dpgens
