#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpgens/polynomial.hpp"

namespace dpgens {

// Thrown when a graded piece exceeds the configured column cap.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int n, int d, std::uint64_t columns, std::uint64_t cap)
        : std::runtime_error("degree " + std::to_string(d) + " in " + std::to_string(n) + " variables needs " +
                             std::to_string(columns) + " columns, cap is " + std::to_string(cap)),
          n(n), d(d), columns(columns), cap(cap) {}
    int n, d;
    std::uint64_t columns, cap;
};

// Number of monomials of degree d in n variables, saturating at UINT64_MAX.
std::uint64_t monomial_count(int n, int d);

// Degree-d monomials in n variables; index 0 is the grevlex-largest.
class GradedBasis {
public:
    GradedBasis(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    std::uint32_t size() const { return size_; }

    // exps[i] is the exponent of x_{i+1}; entries must sum to d.
    std::uint32_t index(const int* exps) const;
    std::uint32_t index(const std::vector<int>& exps) const { return index(exps.data()); }
    std::uint32_t index(const Monomial& m) const;
    void exponents(std::uint32_t idx, int* out) const;
    std::vector<int> exponents(std::uint32_t idx) const;
    Monomial monomial(std::uint32_t idx) const;

private:
    // count(m, e): monomials of degree e in m variables.
    std::uint64_t count(int m, int e) const { return table_[m * (d_ + 1) + e]; }
    int n_, d_;
    std::uint32_t size_;
    std::vector<std::uint64_t> table_;
};

}  // namespace dpgens
