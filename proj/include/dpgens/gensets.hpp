#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dpgens/partition.hpp"
#include "dpgens/polynomial.hpp"

namespace dpgens {

// Rule tags:
//   "e"            e_r(S), degree r, subset S
//   "power"        x_i^a, subset {i}
//   "pair_power"   (x_i x_j)^a
//   "pair_sym"     (x_i + x_j)(x_i x_j)^a
//   "triple_power" (x_i x_j x_k)^a
//   "m(...)"       m_mu(S) for the partition in parentheses
//   "h"            h_r(S)
struct LabeledGenerator {
    Polynomial poly;
    int degree = 0;
    int column = 0;
    std::string rule;
    std::optional<VarSet> subset;
};

struct GeneratorSet {
    Partition partition;
    std::string builder;
    int n = 0;
    std::vector<LabeledGenerator> generators;

    std::size_t size() const { return generators.size(); }
    int max_degree() const;
    // Sorts by (degree, column, subset, rule) and checks for repeats.
    void canonicalize();
    // Number of generators per column, indexed by column.
    std::vector<long> column_counts() const;
};

GeneratorSet reading_process(const Filling& f);
GeneratorSet tanisaki(const Partition& lambda);
GeneratorSet first_reduction(const Partition& lambda);
GeneratorSet principal_reduction(const Partition& lambda, bool power_form = false);
GeneratorSet column_elimination(const Partition& lambda);

enum class Family {
    rectangle,         // (u^l)
    near_rectangle,    // (u^a,(u-1)^c)
    two_column,        // (2^a,1^c)
    two_row,           // (u,v)
    hooked_single,     // (u^a,(u-1)^c,1), u >= 3, g = a+c > 1
    hooked_double,     // (u^a,(u-1)^c,1,1), u >= 4, g = a+c+1 > 2
    partial_rectangle  // leading h >= 3 columns of equal height
};

struct FamilyMatch {
    Family family;
    int u = 0;
    int a = 0;
    int c = 0;
    int g = 0;  // also the number of equal leading columns for partial_rectangle
    std::string name() const;
};

std::optional<FamilyMatch> match_family(const Partition& lambda);
std::optional<GeneratorSet> family_set(const Partition& lambda);

struct AlgorithmStep {
    int column = 0;
    int b = 0;
    std::vector<Partition> U;
    int kase = 0;  // 1, 2 or 3
    std::size_t added = 0;
};

struct AlgorithmState {
    enum class Status { running, stopped_case3, completed };
    int k = 0;
    std::vector<Partition> L;
    GeneratorSet G;
    Status status = Status::running;
    std::vector<AlgorithmStep> trace;
};

AlgorithmState algorithm_g(const Partition& lambda);

struct CountRow {
    int column = 0;
    int height = 0;
    std::optional<int> b;  // top-cell entry when the column is labeled
    mpz_class principal;
    mpz_class eliminated;
    std::optional<mpz_class> family;  // absent when the family theorem drops the column
};

struct WeymanCount {
    int i = 0;
    int p = 0;
    mpz_class V, V_tilde, U, U_tilde;
};

struct CountTable {
    Partition partition;
    std::vector<CountRow> rows;
    std::vector<WeymanCount> weyman;
    std::optional<std::string> family;
    mpz_class principal_total, eliminated_total;
    std::optional<mpz_class> family_total;
};

CountTable count_table(const Partition& lambda);

mpz_class binomial(long n, long k);

}  // namespace dpgens
