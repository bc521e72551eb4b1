#include "dpgens/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dpgens/field.hpp"

namespace dpgens {

namespace {

template <class Elem>
using SparseRow = std::vector<std::pair<std::uint32_t, Elem>>;

// out = a - c * b, both sorted by position.
template <class F>
SparseRow<typename F::Elem> sub_scaled(const F& f, const SparseRow<typename F::Elem>& a, const typename F::Elem& c,
                                       const SparseRow<typename F::Elem>& b) {
    SparseRow<typename F::Elem> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, f.neg(f.mul(c, b[j].second)));
            ++j;
        } else {
            auto v = f.sub(a[i].second, f.mul(c, b[j].second));
            if (!f.is_zero(v)) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Row echelon form built one row at a time. Positions are column ranks in
// the elimination order, so the leading entry is the first one.
template <class F>
class Eliminator {
public:
    using Elem = typename F::Elem;
    Eliminator(F f, std::uint32_t columns, bool track) : f_(std::move(f)), pivot_(columns, -1), track_(track) {}

    // Reduces `row`; stores it when it is independent. `combo` expresses the
    // row in terms of original rows and is only used when tracking.
    bool insert(SparseRow<Elem> row, SparseRow<Elem> combo = {}) {
        reduce(row, combo);
        if (row.empty()) return false;
        Elem inv = f_.inv(row.front().second);
        for (auto& e : row) e.second = f_.mul(e.second, inv);
        for (auto& e : combo) e.second = f_.mul(e.second, inv);
        pivot_[row.front().first] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(std::move(row));
        if (track_) combos_.push_back(std::move(combo));
        return true;
    }
    // Afterwards row is zero iff it was in the span; combo then satisfies
    // row_before = -combo . originals (up to the initial combo contents).
    void reduce(SparseRow<Elem>& row, SparseRow<Elem>& combo) const {
        std::size_t k = 0;
        while (k < row.size()) {
            std::int32_t p = pivot_[row[k].first];
            if (p < 0) {
                ++k;
                continue;
            }
            Elem c = row[k].second;
            SparseRow<Elem> head(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k));
            SparseRow<Elem> tail(row.begin() + static_cast<std::ptrdiff_t>(k), row.end());
            tail = sub_scaled(f_, tail, c, rows_[p]);
            head.insert(head.end(), tail.begin(), tail.end());
            row = std::move(head);
            if (track_) combo = sub_scaled(f_, combo, c, combos_[p]);
        }
    }
    std::size_t rank() const { return rows_.size(); }
    const F& field() const { return f_; }

private:
    F f_;
    std::vector<std::int32_t> pivot_;
    std::vector<SparseRow<Elem>> rows_;
    std::vector<SparseRow<Elem>> combos_;
    bool track_;
};

std::vector<std::uint32_t> column_order(const std::vector<std::vector<std::pair<std::uint32_t, Rational>>>& rows,
                                        std::uint32_t columns) {
    std::vector<std::uint32_t> count(columns, 0);
    for (const auto& r : rows)
        for (const auto& e : r) ++count[e.first];
    std::vector<std::uint32_t> order(columns);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return count[a] < count[b]; });
    std::vector<std::uint32_t> rank_of(columns);
    for (std::uint32_t k = 0; k < columns; ++k) rank_of[order[k]] = k;
    return rank_of;
}

template <class F>
std::optional<SparseRow<typename F::Elem>> convert(const F& f, const std::vector<std::pair<std::uint32_t, Rational>>& r,
                                                   const std::vector<std::uint32_t>& rank_of) {
    SparseRow<typename F::Elem> out;
    out.reserve(r.size());
    for (const auto& [col, q] : r) {
        auto v = f.from_rational(q);
        if (!v) return std::nullopt;
        if (!f.is_zero(*v)) out.emplace_back(rank_of[col], *v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

std::vector<std::vector<std::pair<std::uint32_t, Rational>>> coefficient_rows(const std::vector<Polynomial>& polys,
                                                                              const GradedBasis& basis) {
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<std::pair<std::uint32_t, Rational>> row;
        for (const auto& t : p.terms()) row.emplace_back(basis.index(t.mono), t.coef);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(row));
    }
    return out;
}

SpanMatrix span_matrix(const std::vector<Polynomial>& gens, int n, int d, std::uint64_t column_cap) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::uint64_t cols = monomial_count(n, d);
    if (cols > column_cap) throw BudgetExceeded(n, d, cols, column_cap);
    SpanMatrix M;
    M.n = n;
    M.d = d;
    M.basis = GradedBasis(n, d);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].is_zero()) continue;
        int k = gens[g].degree();
        if (k < 0) throw std::invalid_argument("span_matrix needs homogeneous generators");
        if (k > d) continue;
        GradedBasis mult(n, d - k);
        for (std::uint32_t m = 0; m < mult.size(); ++m) {
            SpanRow row;
            row.generator = g;
            row.multiplier = mult.monomial(m);
            for (const auto& t : gens[g].terms())
                row.entries.emplace_back(M.basis.index(t.mono * row.multiplier), t.coef);
            std::sort(row.entries.begin(), row.entries.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            M.rows.push_back(std::move(row));
        }
    }
    return M;
}

SpanMatrix span_matrix(const GeneratorSet& G, int d, std::uint64_t column_cap) {
    std::vector<Polynomial> gens;
    gens.reserve(G.size());
    for (const auto& g : G.generators) gens.push_back(g.poly);
    return span_matrix(gens, G.n, d, column_cap);
}

RankResult rank(const std::vector<std::vector<std::pair<std::uint32_t, Rational>>>& rows, std::uint32_t columns,
                RankMode mode, std::uint64_t seed) {
    auto rank_of = column_order(rows, columns);
    RankResult res;
    if (mode == RankMode::exact) {
        Eliminator<RationalField> el(RationalField{}, columns, false);
        for (const auto& r : rows) el.insert(*convert(el.field(), r, rank_of));
        res.rank = el.rank();
        return res;
    }
    res.exact = false;
    res.primes = pick_primes(seed, 2);
    for (std::size_t i = 0; i < res.primes.size(); ++i) {
        ModField f(res.primes[i]);
        Eliminator<ModField> el(f, columns, false);
        bool ok = true;
        for (const auto& r : rows) {
            auto v = convert(f, r, rank_of);
            if (!v) {
                ok = false;
                break;
            }
            el.insert(std::move(*v));
        }
        if (!ok) {
            // A denominator vanished; draw a replacement prime.
            res.primes[i] = pick_primes(seed + 1000003 * (i + 1), 1).front();
            --i;
            continue;
        }
        res.per_prime.push_back(el.rank());
    }
    res.rank = *std::max_element(res.per_prime.begin(), res.per_prime.end());
    return res;
}

RankResult rank(const SpanMatrix& M, RankMode mode, std::uint64_t seed) {
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;
    rows.reserve(M.rows.size());
    for (const auto& r : M.rows) rows.push_back(r.entries);
    return rank(rows, M.basis.size(), mode, seed);
}

std::optional<Certificate> express(const SpanMatrix& M, const Polynomial& f) {
    if (!f.is_zero() && f.degree() != M.d) return std::nullopt;
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;
    for (const auto& r : M.rows) rows.push_back(r.entries);
    auto rank_of = column_order(rows, M.basis.size());
    RationalField Q;
    Eliminator<RationalField> el(Q, M.basis.size(), true);
    for (std::size_t i = 0; i < rows.size(); ++i)
        el.insert(*convert(Q, rows[i], rank_of), {{static_cast<std::uint32_t>(i), Rational(1)}});
    auto target = *convert(Q, coefficient_rows({f}, M.basis).front(), rank_of);
    SparseRow<Rational> combo;
    el.reduce(target, combo);
    if (!target.empty()) return std::nullopt;
    // f - (-combo) . rows = 0
    Certificate c;
    for (const auto& [row, coef] : combo) {
        if (sgn(coef) == 0) continue;
        c.terms.push_back({M.rows[row].generator, M.rows[row].multiplier, -coef});
    }
    return c;
}

Polynomial expand(const Certificate& c, const std::vector<Polynomial>& gens) {
    std::vector<Term> terms;
    for (const auto& t : c.terms)
        for (const auto& gt : gens.at(t.generator).terms()) terms.push_back({gt.mono * t.multiplier, gt.coef * t.coef});
    return Polynomial::from_terms(std::move(terms));
}

}  // namespace dpgens
