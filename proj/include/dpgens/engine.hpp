#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dpgens/field.hpp"
#include "dpgens/graded.hpp"

namespace dpgens {

template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

struct DegreeStats {
    int degree = 0;
    std::uint64_t columns = 0;     // dim R_d
    std::uint64_t covered = 0;     // leading monomials reached from I_{d-1}
    std::uint64_t syzygies = 0;    // extra rows needed to span R_1 I_{d-1}
    std::uint64_t dim_shifted = 0; // dim R_1 I_{d-1}
    std::uint64_t dim_ideal = 0;   // dim I_d
    std::uint64_t new_generators = 0;
    double seconds = 0;
};

using ProgressFn = std::function<void(const std::string&)>;

// Degree-by-degree echelon form of a homogeneous ideal. The state for degree
// d is an echelon basis of I_d with distinct leading monomials; moving to
// d+1 multiplies it by the variables, keeps one product per new leading
// monomial, and adds only the products that are not already forced to be
// dependent because the two multipliers share a leading monomial one degree
// lower.
template <class F>
class GradedEngine {
public:
    GradedEngine(int n, F field);
    ~GradedEngine();
    GradedEngine(GradedEngine&&) noexcept;
    GradedEngine& operator=(GradedEngine&&) noexcept;

    int n() const;
    int degree() const;
    const F& field() const;
    const GradedBasis& basis() const;

    // Moves to degree()+1 and adds `gens`, given over that degree's basis.
    // When `keep` is false the new degree is only measured: contains() and
    // further advance() calls are no longer possible.
    DegreeStats advance(const std::vector<SparseVec<F>>& gens, bool keep = true);

    // Whether a degree()-form lies in the current piece.
    bool contains(const SparseVec<F>& f) const;
    std::uint64_t dim() const;

    void set_progress(ProgressFn fn);

private:
    struct State;
    std::unique_ptr<State> st_;
};

extern template class GradedEngine<ModField>;
extern template class GradedEngine<RationalField>;

}  // namespace dpgens
