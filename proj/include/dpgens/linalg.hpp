#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dpgens/gensets.hpp"
#include "dpgens/graded.hpp"
#include "dpgens/polynomial.hpp"

namespace dpgens {

// Row m * g of a span matrix, with g given by its index in the generator list.
struct SpanRow {
    std::size_t generator = 0;
    Monomial multiplier;
    std::vector<std::pair<std::uint32_t, Rational>> entries;  // column, nonzero coefficient
};

struct SpanMatrix {
    int n = 0;
    int d = 0;
    GradedBasis basis{0, 0};
    std::vector<SpanRow> rows;
};

// Rows m * g for every generator g with deg g <= d and every monomial m of
// degree d - deg g. Throws BudgetExceeded above `column_cap` columns.
SpanMatrix span_matrix(const std::vector<Polynomial>& gens, int n, int d, std::uint64_t column_cap = 600000);
SpanMatrix span_matrix(const GeneratorSet& G, int d, std::uint64_t column_cap = 600000);

// Coefficient rows of arbitrary homogeneous polynomials of degree d.
std::vector<std::vector<std::pair<std::uint32_t, Rational>>> coefficient_rows(const std::vector<Polynomial>& polys,
                                                                              const GradedBasis& basis);

enum class RankMode { exact, modular };

struct RankResult {
    std::size_t rank = 0;
    bool exact = true;
    std::vector<std::uint32_t> primes;       // modular mode only
    std::vector<std::size_t> per_prime;      // rank modulo each prime
};

// Sparse Gaussian elimination, columns taken sparsest first. Modular mode
// returns the largest rank over the primes, a lower bound for the exact one.
RankResult rank(const std::vector<std::vector<std::pair<std::uint32_t, Rational>>>& rows, std::uint32_t columns,
                RankMode mode, std::uint64_t seed = 1);
RankResult rank(const SpanMatrix& M, RankMode mode, std::uint64_t seed = 1);

struct Certificate {
    struct Term {
        std::size_t generator = 0;
        Monomial multiplier;
        Rational coef;
    };
    std::vector<Term> terms;
};

// An explicit combination f = sum coef * multiplier * g over the rows of M,
// or nothing when f is outside the row space. Exact arithmetic throughout.
std::optional<Certificate> express(const SpanMatrix& M, const Polynomial& f);

// sum coef * multiplier * gens[generator]
Polynomial expand(const Certificate& c, const std::vector<Polynomial>& gens);

}  // namespace dpgens
