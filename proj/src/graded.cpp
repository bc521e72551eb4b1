#include "dpgens/graded.hpp"

#include <limits>

namespace dpgens {

std::uint64_t monomial_count(int n, int d) {
    if (d < 0 || n < 0) return 0;
    if (n == 0) return d == 0 ? 1 : 0;
    // C(n+d-1, d) computed incrementally; each prefix is itself a binomial.
    unsigned __int128 r = 1;
    for (int i = 1; i <= d; ++i) {
        r = r * static_cast<unsigned>(n - 1 + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

GradedBasis::GradedBasis(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0) throw std::invalid_argument("negative size in GradedBasis");
    std::uint64_t total = monomial_count(n, d);
    if (total > std::numeric_limits<std::uint32_t>::max())
        throw std::length_error("graded piece too large to index");
    size_ = static_cast<std::uint32_t>(total);
    table_.assign(static_cast<std::size_t>(n + 1) * (d + 1), 0);
    for (int m = 0; m <= n; ++m)
        for (int e = 0; e <= d; ++e) table_[m * (d + 1) + e] = monomial_count(m, e);
}

// Monomials are ordered first by the exponent of the last variable (smaller
// first), then recursively on the remaining variables.
std::uint32_t GradedBasis::index(const int* exps) const {
    std::uint64_t r = 0;
    int rem = d_;
    for (int m = n_; m >= 2; --m) {
        int a = exps[m - 1];
        for (int j = 0; j < a; ++j) r += count(m - 1, rem - j);
        rem -= a;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t GradedBasis::index(const Monomial& mono) const {
    if (mono.degree() != d_) throw std::invalid_argument("monomial degree does not match the basis");
    std::vector<int> e = mono.dense(n_);
    return index(e.data());
}

void GradedBasis::exponents(std::uint32_t idx, int* out) const {
    if (idx >= size_) throw std::out_of_range("monomial index out of range");
    std::uint64_t r = idx;
    int rem = d_;
    for (int m = n_; m >= 2; --m) {
        int a = 0;
        while (r >= count(m - 1, rem - a)) {
            r -= count(m - 1, rem - a);
            ++a;
        }
        out[m - 1] = a;
        rem -= a;
    }
    if (n_ >= 1) out[0] = rem;
}

std::vector<int> GradedBasis::exponents(std::uint32_t idx) const {
    std::vector<int> out(n_, 0);
    exponents(idx, out.data());
    return out;
}

Monomial GradedBasis::monomial(std::uint32_t idx) const { return Monomial::from_dense(exponents(idx)); }

}  // namespace dpgens
