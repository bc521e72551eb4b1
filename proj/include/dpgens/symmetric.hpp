#pragma once

#include <vector>

#include "dpgens/partition.hpp"
#include "dpgens/polynomial.hpp"

namespace dpgens {

// Elementary symmetric polynomial of degree r in the variables of S.
Polynomial e(int r, const VarSet& S);
// Complete homogeneous symmetric polynomial of degree r in S.
Polynomial h(int r, const VarSet& S);
// Monomial symmetric polynomial of type mu in S.
Polynomial m(const Partition& mu, const VarSet& S);
// Power sum x_{i_1}^r + ... over S.
Polynomial power_sum(int r, const VarSet& S);

// { e_r(S) : S a k-subset of {1..n} } in lexicographic subset order.
std::vector<Polynomial> e_family(int r, int k, int n);

}  // namespace dpgens
