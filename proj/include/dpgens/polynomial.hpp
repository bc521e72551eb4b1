#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpgens {

using Rational = mpq_class;

// Sorted set of 1-based variable indices inside {1..n}.
class VarSet {
public:
    VarSet() = default;
    VarSet(int n, std::vector<int> indices);
    static VarSet full(int n);

    int ambient() const { return n_; }
    int size() const { return static_cast<int>(idx_.size()); }
    const std::vector<int>& indices() const { return idx_; }
    bool contains(int i) const;
    VarSet without(int i) const;
    VarSet without(const VarSet& other) const;
    VarSet complement() const;
    std::string str() const;  // "{1,3,4}"

    friend bool operator==(const VarSet&, const VarSet&) = default;
    friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.idx_ <=> b.idx_;
    }

private:
    int n_ = 0;
    std::vector<int> idx_;
};

// All k-subsets of {1..n} in lexicographic order.
std::vector<VarSet> k_subsets(int n, int k);

class Monomial {
public:
    Monomial() = default;
    // (variable, exponent) pairs; zero exponents are dropped, repeats merged.
    explicit Monomial(std::vector<std::pair<int, int>> factors);
    static Monomial var(int i, int e = 1);
    // dense[i] is the exponent of x_{i+1}
    static Monomial from_dense(const std::vector<int>& dense);

    int degree() const { return deg_; }
    int exponent(int var) const;
    const std::vector<std::pair<int, int>>& factors() const { return f_; }
    int max_var() const { return f_.empty() ? 0 : f_.back().first; }
    std::vector<int> dense(int n) const;
    bool is_one() const { return f_.empty(); }
    bool square_free() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial operator/(const Monomial& other) const;  // requires divides

    // Type of the monomial: the exponents sorted decreasingly.
    std::vector<int> type() const;

    std::string str() const;  // "x1^2*x3", "1"

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<int, int>> f_;
    int deg_ = 0;
};

// Graded reverse lexicographic order with x_1 > x_2 > ... .
int grevlex_compare(const Monomial& a, const Monomial& b);
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct Term {
    Monomial mono;
    Rational coef;
};

// Terms are kept sorted decreasingly in grevlex, with nonzero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Monomial& m, const Rational& c = 1);
    explicit Polynomial(const Rational& c);
    static Polynomial from_terms(std::vector<Term> terms);  // any order, merges repeats

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial or when not homogeneous.
    int degree() const;
    bool is_homogeneous() const;
    int max_var() const;
    Rational coefficient(const Monomial& m) const;
    const Monomial& leading_monomial() const { return terms_.front().mono; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator*(const Monomial& m) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    bool all_coefficients_one() const;

    std::string str() const;                    // "x1^2*x3 + 2*x2"
    static Polynomial parse(std::string_view);  // inverse of str

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Sets every variable outside S to zero.
Polynomial evaluate_subset(const Polynomial& f, const VarSet& S);
// Applies the permutation i -> perm[i-1] to the variables.
Polynomial permute(const Polynomial& f, const std::vector<int>& perm);

}  // namespace dpgens
