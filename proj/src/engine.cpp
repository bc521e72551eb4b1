#include "dpgens/engine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace dpgens {

namespace {

// Bump allocator for row entries; storage lives as long as the arena.
template <class T>
class Arena {
public:
    T* alloc(std::size_t count) {
        if (chunks_.empty() || used_ + count > chunks_.back().size()) {
            // Chunks grow geometrically so small problems stay small.
            next_ = std::min<std::size_t>(std::max<std::size_t>(next_ * 2, 1024), (std::size_t{64} << 20) / sizeof(T));
            chunks_.emplace_back(std::max(next_, count));
            used_ = 0;
        }
        T* out = chunks_.back().data() + used_;
        used_ += count;
        return out;
    }

private:
    std::size_t next_ = 0;
    std::size_t used_ = 0;
    std::vector<std::vector<T>> chunks_;
};

// A row over the tail coordinates. Dense rows hold entries start..width-1;
// sparse rows hold nnz (position, value) pairs in increasing position.
template <class Elem>
struct RowRef {
    std::uint32_t pivot = 0;
    std::uint32_t start = 0;
    std::uint32_t nnz = 0;
    const Elem* val = nullptr;
    const std::uint32_t* idx = nullptr;  // null for dense rows
    bool zero() const { return nnz == 0; }
};

template <class Elem, class Fn>
void for_each_entry(const RowRef<Elem>& r, std::size_t width, const Elem& zero, Fn&& fn) {
    if (r.nnz == 0) return;
    if (r.idx) {
        for (std::uint32_t k = 0; k < r.nnz; ++k) fn(r.idx[k], r.val[k]);
    } else {
        for (std::size_t j = r.start; j < width; ++j)
            if (r.val[j - r.start] != zero) fn(static_cast<std::uint32_t>(j), r.val[j - r.start]);
    }
}

template <class Elem>
struct RowStore {
    Arena<Elem> vals;
    Arena<std::uint32_t> idxs;
};

template <class F>
struct Acc;

// Lazy reduction: entries stay below K = p * floor(2^63 / p) and are only
// brought into [0, p) when read.
template <>
struct Acc<ModField> {
    using Elem = ModField::Elem;
    explicit Acc(const ModField& f) : p(f.p), K(static_cast<std::uint64_t>(f.p) * ((std::uint64_t{1} << 63) / f.p)) {}
    std::uint64_t p, K;
    std::vector<std::uint64_t> a;
    std::vector<Elem> scratch;

    void reset(std::size_t w) { a.assign(w, 0); }
    void add(std::size_t j, Elem v) {
        std::uint64_t s = a[j] + v;
        a[j] = std::min(s, s - K);
    }
    // a -= t * row
    void sub_row(const RowRef<Elem>& r, Elem t) {
        if (r.nnz == 0) return;
        const std::uint64_t c = p - t;
        const std::uint64_t k = K;
        std::uint64_t* __restrict out = a.data();
        if (r.idx) {
            for (std::uint32_t q = 0; q < r.nnz; ++q) {
                std::uint64_t s = out[r.idx[q]] + c * r.val[q];
                out[r.idx[q]] = std::min(s, s - k);
            }
            return;
        }
        const Elem* __restrict v = r.val - r.start;
        const std::size_t w = a.size();
        for (std::size_t j = r.start; j < w; ++j) {
            std::uint64_t s = out[j] + c * v[j];
            out[j] = std::min(s, s - k);
        }
    }
    Elem value(std::size_t j) const { return static_cast<Elem>(a[j] % p); }
    void clear(std::size_t j) { a[j] = 0; }
    // Stores acc[from..] * scale as a row, sparse when that is smaller.
    RowRef<Elem> extract(RowStore<Elem>& store, std::uint32_t pivot, std::size_t from, Elem scale) {
        RowRef<Elem> r;
        r.pivot = pivot;
        r.start = static_cast<std::uint32_t>(from);
        const std::size_t w = a.size();
        scratch.resize(w > from ? w - from : 0);
        std::uint32_t nnz = 0;
        for (std::size_t j = from; j < w; ++j) {
            Elem v = static_cast<Elem>(a[j] % p);
            if (scale != 1) v = static_cast<Elem>(static_cast<std::uint64_t>(v) * scale % p);
            scratch[j - from] = v;
            nnz += v != 0;
        }
        r.nnz = nnz;
        if (nnz == 0) return r;
        if (2 * std::size_t{nnz} < w - from) {
            Elem* val = store.vals.alloc(nnz);
            std::uint32_t* idx = store.idxs.alloc(nnz);
            std::uint32_t q = 0;
            for (std::size_t j = from; j < w; ++j)
                if (scratch[j - from]) {
                    val[q] = scratch[j - from];
                    idx[q++] = static_cast<std::uint32_t>(j);
                }
            r.val = val;
            r.idx = idx;
        } else {
            Elem* val = store.vals.alloc(w - from);
            std::copy(scratch.begin(), scratch.end(), val);
            r.val = val;
        }
        return r;
    }
};

// Exact rows are always sparse.
template <>
struct Acc<RationalField> {
    using Elem = mpq_class;
    explicit Acc(const RationalField&) {}
    std::vector<mpq_class> a;
    std::vector<std::uint32_t> touched;
    std::vector<char> mark;

    void reset(std::size_t w) {
        if (a.size() != w) {
            a.assign(w, mpq_class(0));
            mark.assign(w, 0);
            touched.clear();
            return;
        }
        for (std::uint32_t j : touched) {
            a[j] = 0;
            mark[j] = 0;
        }
        touched.clear();
    }
    void touch(std::uint32_t j) {
        if (!mark[j]) {
            mark[j] = 1;
            touched.push_back(j);
        }
    }
    void add(std::size_t j, const Elem& v) {
        touch(static_cast<std::uint32_t>(j));
        a[j] += v;
    }
    void sub_row(const RowRef<Elem>& r, const Elem& t) {
        for (std::uint32_t q = 0; q < r.nnz; ++q) {
            touch(r.idx[q]);
            a[r.idx[q]] -= t * r.val[q];
        }
    }
    Elem value(std::size_t j) const { return a[j]; }
    void clear(std::size_t j) { a[j] = 0; }
    RowRef<Elem> extract(RowStore<Elem>& store, std::uint32_t pivot, std::size_t from, const Elem& scale) {
        RowRef<Elem> r;
        r.pivot = pivot;
        r.start = static_cast<std::uint32_t>(from);
        std::sort(touched.begin(), touched.end());
        std::uint32_t nnz = 0;
        for (std::uint32_t j : touched)
            if (j >= from && sgn(a[j]) != 0) ++nnz;
        r.nnz = nnz;
        if (nnz == 0) return r;
        Elem* val = store.vals.alloc(nnz);
        std::uint32_t* idx = store.idxs.alloc(nnz);
        std::uint32_t q = 0;
        for (std::uint32_t j : touched)
            if (j >= from && sgn(a[j]) != 0) {
                val[q] = a[j] * scale;
                idx[q++] = j;
            }
        r.val = val;
        r.idx = idx;
        return r;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

template <class F>
struct GradedEngine<F>::State {
    using Elem = typename F::Elem;
    using Row = RowRef<Elem>;

    int n;
    F f;
    int d = 0;
    bool alive = true;
    GradedBasis basis;
    GradedBasis prev_basis;
    std::vector<char> prev_pivot;
    std::vector<std::int32_t> row_of;    // monomial -> row, -1 if not a leading monomial
    std::vector<std::uint32_t> U;        // monomials without a covering product, ascending
    std::vector<std::int32_t> upos;      // monomial -> position in U, -1 if covered
    std::vector<std::int32_t> epos_row;  // U position -> row whose pivot sits there
    std::vector<Row> rows;               // tails over U, pivot entry excluded
    std::unique_ptr<RowStore<Elem>> store;
    ProgressFn progress;

    State(int n_, F f_) : n(n_), f(std::move(f_)), basis(n_, 0), prev_basis(n_, 0) {
        row_of.assign(1, -1);
        U.assign(1, 0);
        upos.assign(1, 0);
        epos_row.assign(1, -1);
        store = std::make_unique<RowStore<Elem>>();
    }
};

template <class F>
GradedEngine<F>::GradedEngine(int n, F field) {
    if (n < 1) throw std::invalid_argument("engine needs at least one variable");
    st_ = std::make_unique<State>(n, std::move(field));
}
template <class F>
GradedEngine<F>::~GradedEngine() = default;
template <class F>
GradedEngine<F>::GradedEngine(GradedEngine&&) noexcept = default;
template <class F>
GradedEngine<F>& GradedEngine<F>::operator=(GradedEngine&&) noexcept = default;

template <class F>
int GradedEngine<F>::n() const { return st_->n; }
template <class F>
int GradedEngine<F>::degree() const { return st_->d; }
template <class F>
const F& GradedEngine<F>::field() const { return st_->f; }
template <class F>
const GradedBasis& GradedEngine<F>::basis() const { return st_->basis; }
template <class F>
std::uint64_t GradedEngine<F>::dim() const { return st_->rows.size(); }
template <class F>
void GradedEngine<F>::set_progress(ProgressFn fn) { st_->progress = std::move(fn); }

template <class F>
DegreeStats GradedEngine<F>::advance(const std::vector<SparseVec<F>>& gens, bool keep) {
    using Elem = typename F::Elem;
    using Row = RowRef<Elem>;
    State& s = *st_;
    if (!s.alive) throw std::logic_error("engine state was dropped");
    auto t0 = std::chrono::steady_clock::now();
    const int n = s.n;
    const int D = s.d + 1;
    GradedBasis B(n, D);
    const std::uint32_t M = B.size();
    const Elem zero = s.f.zero();

    DegreeStats stats;
    stats.degree = D;
    stats.columns = M;

    // Covers of every degree-D monomial, and the extra products that may
    // still be independent.
    struct Syz {
        std::uint32_t c;
        int var;
        std::int32_t row;
    };
    std::vector<std::int32_t> cover_row(M, -1);
    std::vector<std::int8_t> cover_var(M, -1);
    std::vector<Syz> syz;
    {
        std::vector<int> e(n), cand_var;
        std::vector<std::int32_t> cand_row;
        for (std::uint32_t c = 0; c < M; ++c) {
            B.exponents(c, e.data());
            cand_var.clear();
            cand_row.clear();
            for (int i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                --e[i];
                std::int32_t r = s.row_of[s.basis.index(e.data())];
                ++e[i];
                if (r >= 0) {
                    cand_var.push_back(i);
                    cand_row.push_back(r);
                }
            }
            const int k = static_cast<int>(cand_var.size());
            if (k == 0) continue;
            auto sparser = [&](int a, int b) { return s.rows[cand_row[a]].nnz < s.rows[cand_row[b]].nnz; };
            if (k == 1) {
                cover_row[c] = cand_row[0];
                cover_var[c] = static_cast<std::int8_t>(cand_var[0]);
                continue;
            }
            UnionFind uf(k);
            if (D >= 3) {
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b) {
                        --e[cand_var[a]];
                        --e[cand_var[b]];
                        if (s.prev_pivot[s.prev_basis.index(e.data())]) uf.unite(a, b);
                        ++e[cand_var[a]];
                        ++e[cand_var[b]];
                    }
            }
            // Sparsest member of each component; the overall sparsest covers c.
            std::vector<int> best(k, -1);
            int cover = 0;
            for (int a = 0; a < k; ++a) {
                int root = uf.find(a);
                if (best[root] < 0 || sparser(a, best[root])) best[root] = a;
                if (sparser(a, cover)) cover = a;
            }
            cover_row[c] = cand_row[cover];
            cover_var[c] = static_cast<std::int8_t>(cand_var[cover]);
            int cover_root = uf.find(cover);
            for (int a = 0; a < k; ++a)
                if (best[a] >= 0 && a != cover_root)
                    syz.push_back({c, cand_var[best[a]], cand_row[best[a]]});
        }
    }

    std::vector<std::uint32_t> U2;
    std::vector<std::int32_t> upos2(M, -1);
    for (std::uint32_t c = 0; c < M; ++c)
        if (cover_row[c] < 0) {
            upos2[c] = static_cast<std::int32_t>(U2.size());
            U2.push_back(c);
        }
    const std::size_t W = U2.size();
    stats.covered = M - W;
    stats.syzygies = syz.size();

    // Products of the old tail coordinates with each variable.
    std::vector<std::uint32_t> mul(s.U.size() * n);
    {
        std::vector<int> e(n);
        for (std::size_t u = 0; u < s.U.size(); ++u) {
            s.basis.exponents(s.U[u], e.data());
            for (int i = 0; i < n; ++i) {
                ++e[i];
                mul[u * n + i] = B.index(e.data());
                --e[i];
            }
        }
    }

    auto store = std::make_unique<RowStore<Elem>>();
    std::vector<Row> crow(M);  // reduced covering product for covered monomials
    Acc<F> acc(s.f);
    const std::size_t oldW = s.U.size();

    // acc += x_var * (tail of old row r), rewritten over U2.
    auto push_product = [&](std::int32_t r, int var) {
        for_each_entry(s.rows[r], oldW, zero, [&](std::uint32_t u, const Elem& t) {
            std::uint32_t m = mul[std::size_t{u} * n + var];
            std::int32_t q = upos2[m];
            if (q >= 0) {
                acc.add(q, t);
            } else {
                acc.sub_row(crow[m], t);
            }
        });
    };

    auto last_report = t0;
    auto report = [&](const std::string& what, std::size_t done, std::size_t total) {
        if (!s.progress) return;
        auto now = std::chrono::steady_clock::now();
        if (std::chrono::duration<double>(now - last_report).count() < 5.0) return;
        last_report = now;
        s.progress("degree " + std::to_string(D) + ": " + what + " " + std::to_string(done) + "/" +
                   std::to_string(total) + " (" + std::to_string(static_cast<long>(seconds_since(t0))) + "s)");
    };

    {
        std::size_t done = 0, total = M - W;
        std::size_t pos = W;  // first U2 position whose monomial exceeds c
        for (std::uint32_t c = M; c-- > 0;) {
            while (pos > 0 && U2[pos - 1] > c) --pos;
            if (cover_row[c] < 0) continue;
            acc.reset(W);
            push_product(cover_row[c], cover_var[c]);
            crow[c] = acc.extract(*store, c, pos, s.f.one());
            if ((++done & 255) == 0) report("covered", done, total);
        }
    }

    // Echelon rows over U2 (pivot entry implicit).
    std::vector<std::int32_t> epos_row(W, -1);
    std::vector<Row> erow;
    auto insert = [&]() -> bool {
        for (std::size_t j = 0; j < W; ++j) {
            Elem v = acc.value(j);
            if (s.f.is_zero(v)) continue;
            acc.clear(j);
            std::int32_t r = epos_row[j];
            if (r >= 0) {
                acc.sub_row(erow[r], v);
                continue;
            }
            epos_row[j] = static_cast<std::int32_t>(erow.size());
            erow.push_back(acc.extract(*store, U2[j], j + 1, s.f.inv(v)));
            return true;
        }
        return false;
    };

    for (std::size_t k = 0; k < syz.size(); ++k) {
        const Syz& z = syz[k];
        acc.reset(W);
        push_product(z.row, z.var);
        acc.sub_row(crow[z.c], s.f.one());
        insert();
        if ((k & 63) == 0) report("syzygies", k, syz.size());
    }
    stats.dim_shifted = (M - W) + erow.size();

    for (const auto& g : gens) {
        acc.reset(W);
        for (const auto& [idx, coef] : g) {
            if (idx >= M) throw std::out_of_range("generator index outside the graded piece");
            if (s.f.is_zero(coef)) continue;
            std::int32_t q = upos2[idx];
            if (q >= 0) {
                acc.add(q, coef);
            } else {
                acc.sub_row(crow[idx], coef);
            }
        }
        if (insert()) ++stats.new_generators;
    }
    stats.dim_ideal = (M - W) + erow.size();

    if (keep) {
        std::vector<Row> rows;
        rows.reserve(stats.dim_ideal);
        std::vector<std::int32_t> row_of(M, -1);
        for (std::uint32_t c = 0; c < M; ++c)
            if (cover_row[c] >= 0) {
                row_of[c] = static_cast<std::int32_t>(rows.size());
                rows.push_back(crow[c]);
            }
        for (std::size_t j = 0; j < W; ++j)
            if (epos_row[j] >= 0) {
                const Row& r = erow[epos_row[j]];
                epos_row[j] = static_cast<std::int32_t>(rows.size());
                row_of[r.pivot] = epos_row[j];
                rows.push_back(r);
            }
        s.prev_pivot.assign(s.basis.size(), 0);
        for (std::uint32_t m = 0; m < s.basis.size(); ++m) s.prev_pivot[m] = s.row_of[m] >= 0;
        s.prev_basis = s.basis;
        s.basis = B;
        s.row_of = std::move(row_of);
        s.U = std::move(U2);
        s.upos = std::move(upos2);
        s.epos_row = std::move(epos_row);
        s.rows = std::move(rows);
        s.store = std::move(store);
    } else {
        s.alive = false;
        s.rows.clear();
        s.store.reset();
    }
    s.d = D;
    stats.seconds = seconds_since(t0);
    return stats;
}

template <class F>
bool GradedEngine<F>::contains(const SparseVec<F>& f) const {
    const State& s = *st_;
    if (!s.alive) throw std::logic_error("engine state was dropped");
    const std::size_t W = s.U.size();
    Acc<F> acc(s.f);
    acc.reset(W);
    for (const auto& [idx, coef] : f) {
        if (idx >= s.basis.size()) throw std::out_of_range("form index outside the graded piece");
        if (s.f.is_zero(coef)) continue;
        std::int32_t q = s.upos[idx];
        if (q >= 0) {
            acc.add(q, coef);
        } else {
            acc.sub_row(s.rows[s.row_of[idx]], coef);
        }
    }
    for (std::size_t j = 0; j < W; ++j) {
        auto v = acc.value(j);
        if (s.f.is_zero(v)) continue;
        std::int32_t r = s.epos_row[j];
        if (r < 0) return false;
        acc.clear(j);
        acc.sub_row(s.rows[r], v);
    }
    return true;
}

template class GradedEngine<ModField>;
template class GradedEngine<RationalField>;

}  // namespace dpgens
