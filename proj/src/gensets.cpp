#include "dpgens/gensets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "dpgens/symmetric.hpp"

namespace dpgens {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int GeneratorSet::max_degree() const {
    int d = 0;
    for (const auto& g : generators) d = std::max(d, g.degree);
    return d;
}

void GeneratorSet::canonicalize() {
    auto key = [](const LabeledGenerator& g) {
        std::vector<int> sub = g.subset ? g.subset->indices() : std::vector<int>{};
        return std::make_tuple(g.degree, g.column, sub, g.rule);
    };
    std::stable_sort(generators.begin(), generators.end(),
                     [&](const LabeledGenerator& a, const LabeledGenerator& b) { return key(a) < key(b); });
    for (std::size_t i = 1; i < generators.size(); ++i) {
        const auto& a = generators[i - 1];
        const auto& b = generators[i];
        if (a.rule == b.rule && a.degree == b.degree && a.subset == b.subset && a.column == b.column)
            throw std::logic_error("repeated generator " + a.rule + " " +
                                   (a.subset ? a.subset->str() : std::string()));
    }
}

std::vector<long> GeneratorSet::column_counts() const {
    std::vector<long> out;
    for (const auto& g : generators) {
        if (g.column >= static_cast<int>(out.size())) out.resize(g.column + 1, 0);
        ++out[g.column];
    }
    return out;
}

namespace {

void add_e(GeneratorSet& G, int r, const VarSet& S, int column) {
    if (r < 1 || r > S.size()) return;
    G.generators.push_back({e(r, S), r, column, "e", S});
}

void add_e_family(GeneratorSet& G, int r, int k, int column) {
    if (r < 1 || r > k) return;
    for (const auto& S : k_subsets(G.n, k)) add_e(G, r, S, column);
}

void add_powers(GeneratorSet& G, int a, int column) {
    for (int i = 1; i <= G.n; ++i)
        G.generators.push_back({Polynomial(Monomial::var(i, a)), a, column, "power", VarSet(G.n, {i})});
}

GeneratorSet start(const Partition& lambda, const std::string& builder) {
    GeneratorSet G;
    G.partition = lambda;
    G.builder = builder;
    G.n = lambda.size();
    return G;
}

bool is_one_column(const Partition& lambda) { return !lambda.empty() && lambda[1] == 1; }

// Subset of size n - |J| obtained by deleting J.
VarSet drop(const VarSet& J) { return J.complement(); }

}  // namespace

GeneratorSet reading_process(const Filling& f) {
    GeneratorSet G;
    G.builder = "reading";
    if (f.columns() == 0) return G;
    G.n = f.bottom(0);
    for (int c = 0; c < f.columns(); ++c) {
        int k = f.bottom(c);
        for (int r : f.column_top_down(c)) add_e_family(G, r, k, c);
    }
    G.canonicalize();
    return G;
}

GeneratorSet tanisaki(const Partition& lambda) {
    GeneratorSet G = start(lambda, "tanisaki");
    const int n = G.n;
    std::vector<int> d = delta(lambda);
    for (int k = 1; k <= n; ++k)
        for (int r = std::max(1, k - d[k - 1] + 1); r <= k; ++r) add_e_family(G, r, k, n - k);
    G.canonicalize();
    return G;
}

GeneratorSet first_reduction(const Partition& lambda) {
    GeneratorSet G = start(lambda, "first");
    if (lambda.empty()) return G;
    const int n = G.n;
    const int l1 = lambda[1];
    Filling rf = regular_filling(lambda);
    // M: square-free monomials of degree n - l1 + 1, read from the last column.
    add_e_family(G, n - l1 + 1, n - l1 + 1, l1 - 1);
    // E: e_1(n) .. e_{l-1}(n)
    for (int r = 1; r < lambda.length(); ++r) add_e(G, r, VarSet::full(n), 0);
    // K: entries strictly above the bottom cell of columns with bottom k < n.
    for (int c = 1; c < rf.columns(); ++c) {
        int k = rf.bottom(c);
        for (int row = 1; row < rf.height(c); ++row) add_e_family(G, rf.at(row, c), k, c);
    }
    G.canonicalize();
    return G;
}

GeneratorSet principal_reduction(const Partition& lambda, bool power_form) {
    GeneratorSet G = start(lambda, power_form ? "principal_power" : "principal");
    if (lambda.empty()) return G;
    const int n = G.n;
    TopCellData td = top_cells(lambda);
    for (int r = 1; r < lambda.length(); ++r) add_e(G, r, VarSet::full(n), 0);
    if (is_one_column(lambda)) add_e(G, n, VarSet::full(n), 0);
    for (int j = 1; j <= td.t; ++j) {
        if (j == 1 && power_form) add_powers(G, td.b[0], 1);
        else add_e_family(G, td.b[j - 1], n - j, j);
    }
    if (td.b_s) add_e_family(G, *td.b_s, n - td.s, td.s);
    G.canonicalize();
    return G;
}

GeneratorSet column_elimination(const Partition& lambda) {
    if (lambda.empty() || lambda.length() == 1 || is_one_column(lambda)) {
        GeneratorSet G = principal_reduction(lambda, true);
        G.builder = "columns";
        return G;
    }
    GeneratorSet G = start(lambda, "columns");
    const int n = G.n;
    TopCellData td = top_cells(lambda);
    for (int r = 1; r < lambda.length(); ++r) add_e(G, r, VarSet::full(n), 0);
    if (td.t >= 1) add_powers(G, td.b[0], 1);
    for (int k = 2; k <= td.t; ++k) {
        std::vector<int> special(k);
        for (int i = 0; i < k; ++i) special[i] = i + 2;
        VarSet J_special(n, special);
        for (const auto& J : k_subsets(n, k)) {
            if (J.contains(1) || J == J_special) continue;
            add_e(G, td.b[k - 1], drop(J), k);
        }
    }
    if (td.b_s) {
        const int s = td.s, t = td.t;
        for (const auto& J : k_subsets(n, s)) {
            bool dropped = t >= 1;
            for (int i = 1; dropped && i <= s - t; ++i) dropped = J.contains(i);
            if (dropped) continue;
            add_e(G, *td.b_s, drop(J), s);
        }
    }
    G.canonicalize();
    return G;
}

std::string FamilyMatch::name() const {
    switch (family) {
        case Family::rectangle: return "rectangle";
        case Family::near_rectangle: return "near_rectangle";
        case Family::two_column: return "two_column";
        case Family::two_row: return "two_row";
        case Family::hooked_single: return "hooked_single";
        case Family::hooked_double: return "hooked_double";
        case Family::partial_rectangle: return "partial_rectangle";
    }
    return "unknown";
}

namespace {

// (u^a,(u-1)^c) with a >= 1 and c >= 0.
bool near_rect(const std::vector<int>& parts, int& u, int& a, int& c) {
    if (parts.empty()) return false;
    u = parts.front();
    a = 0, c = 0;
    for (int p : parts) {
        if (p == u && c == 0) ++a;
        else if (p == u - 1 && p >= 1) ++c;
        else return false;
    }
    return true;
}

}  // namespace

std::optional<FamilyMatch> match_family(const Partition& lambda) {
    if (lambda.empty()) return std::nullopt;
    const auto& parts = lambda.parts();
    const int l = lambda.length();
    int u, a, c;
    if (near_rect(parts, u, a, c)) {
        if (c == 0) return FamilyMatch{Family::rectangle, u, a, 0, a};
        if (l == 2) return FamilyMatch{Family::two_row, parts[0], parts[1], 0, 0};
        if (u == 2) return FamilyMatch{Family::two_column, u, a, c, a + c};
        return FamilyMatch{Family::near_rectangle, u, a, c, a + c};
    }
    if (l == 2) return FamilyMatch{Family::two_row, parts[0], parts[1], 0, 0};
    if (l >= 3 && parts[l - 1] == 1) {
        std::vector<int> head(parts.begin(), parts.end() - 1);
        if (near_rect(head, u, a, c) && u >= 3 && a + c > 1)
            return FamilyMatch{Family::hooked_single, u, a, c, a + c};
        if (parts[l - 2] == 1) {
            std::vector<int> head2(parts.begin(), parts.end() - 2);
            if (near_rect(head2, u, a, c) && u >= 4 && a + c + 1 > 2)
                return FamilyMatch{Family::hooked_double, u, a, c, a + c + 1};
        }
    }
    const int h = parts.back();
    if (h >= 3) return FamilyMatch{Family::partial_rectangle, 0, 0, 0, h};
    return std::nullopt;
}

std::optional<GeneratorSet> family_set(const Partition& lambda) {
    auto fm = match_family(lambda);
    if (!fm) return std::nullopt;
    GeneratorSet G = start(lambda, "family");
    const int n = G.n;
    const VarSet all = VarSet::full(n);
    auto pairs = [&](int column, const std::string& rule, auto make) {
        for (const auto& S : k_subsets(n, 2)) {
            int i = S.indices()[0], j = S.indices()[1];
            Polynomial p = make(i, j);
            G.generators.push_back({p, p.degree(), column, rule, S});
        }
    };
    switch (fm->family) {
        case Family::rectangle:
        case Family::near_rectangle:
        case Family::two_column: {
            const int g = fm->family == Family::rectangle ? lambda.length() : fm->g;
            for (int r = 1; r < g; ++r) add_e(G, r, all, 0);
            add_powers(G, g, 1);
            break;
        }
        case Family::two_row: {
            add_e(G, 1, all, 0);
            add_powers(G, 2, 1);
            add_e_family(G, fm->a + 1, fm->a + 1, lambda[1] - 1);
            break;
        }
        case Family::hooked_single: {
            const int g = fm->g;
            for (int r = 1; r <= g; ++r) add_e(G, r, all, 0);
            add_powers(G, g + 1, 1);
            pairs(2, "pair_power", [&](int i, int j) {
                return Polynomial(Monomial({{i, g}, {j, g}}));
            });
            break;
        }
        case Family::hooked_double: {
            const int g = fm->g;
            for (int r = 1; r <= g; ++r) add_e(G, r, all, 0);
            add_powers(G, g + 1, 1);
            pairs(2, "pair_sym", [&](int i, int j) {
                return Polynomial(Monomial({{i, g}, {j, g - 1}})) + Polynomial(Monomial({{i, g - 1}, {j, g}}));
            });
            for (const auto& S : k_subsets(n, 3)) {
                const auto& ix = S.indices();
                Polynomial p(Monomial({{ix[0], g - 1}, {ix[1], g - 1}, {ix[2], g - 1}}));
                G.generators.push_back({p, 3 * (g - 1), 3, "triple_power", S});
            }
            break;
        }
        case Family::partial_rectangle: {
            GeneratorSet base = column_elimination(lambda);
            for (auto& gen : base.generators)
                if (gen.column < 2 || gen.column > fm->g) G.generators.push_back(std::move(gen));
            break;
        }
    }
    G.builder = "family:" + fm->name();
    G.canonicalize();
    return G;
}

AlgorithmState algorithm_g(const Partition& lambda) {
    AlgorithmState st;
    st.G = start(lambda, "algorithm");
    if (lambda.empty()) {
        st.status = AlgorithmState::Status::completed;
        return st;
    }
    const int n = st.G.n;
    for (int r = 1; r < lambda.length(); ++r) add_e(st.G, r, VarSet::full(n), 0);
    // A single column has no labeled columns; its bottom entry n is read too.
    if (is_one_column(lambda)) add_e(st.G, n, VarSet::full(n), 0);
    auto labeled = top_cells(lambda).labeled();
    st.status = AlgorithmState::Status::completed;
    for (std::size_t idx = 0; idx < labeled.size(); ++idx) {
        auto [k, bk] = labeled[idx];
        st.k = k;
        AlgorithmStep step;
        step.column = k;
        step.b = bk;
        for_each_partition(bk, k, [&](const Partition& mu) {
            for (const auto& nu : st.L)
                if (contains(nu, mu)) return;
            step.U.push_back(mu);
        });
        std::size_t before = st.G.generators.size();
        if (step.U.size() == 1) {
            step.kase = 1;
            const Partition& theta = step.U.front();
            st.L.push_back(theta);
            for (const auto& S : k_subsets(n, k))
                st.G.generators.push_back({m(theta, S), bk, k, "m(" + theta.str() + ")", S});
        } else if (step.U.empty()) {
            step.kase = 2;
        } else {
            step.kase = 3;
            for (std::size_t j = idx; j < labeled.size(); ++j) {
                auto [l, bl] = labeled[j];
                for (const auto& S : k_subsets(n, l)) st.G.generators.push_back({h(bl, S), bl, l, "h", S});
            }
            st.status = AlgorithmState::Status::stopped_case3;
        }
        step.added = st.G.generators.size() - before;
        st.trace.push_back(std::move(step));
        if (st.status == AlgorithmState::Status::stopped_case3) break;
    }
    st.G.canonicalize();
    return st;
}

CountTable count_table(const Partition& lambda) {
    CountTable ct;
    ct.partition = lambda;
    if (lambda.empty()) return ct;
    const long n = lambda.size();
    Partition conj = conjugate(lambda);
    TopCellData td = top_cells(lambda);
    auto fm = match_family(lambda);
    if (fm) ct.family = fm->name();

    const bool special = lambda.length() == 1 || is_one_column(lambda);
    // Column 0.
    {
        CountRow row;
        row.column = 0;
        row.height = conj[1];
        long c0 = lambda.length() - 1 + (is_one_column(lambda) ? 1 : 0);
        row.principal = c0;
        row.eliminated = c0;
        ct.rows.push_back(row);
    }
    for (int k = 1; k < conj.length(); ++k) {
        CountRow row;
        row.column = k;
        row.height = conj[k + 1];
        if (k <= td.t) {
            row.b = td.b[k - 1];
            row.principal = binomial(n, k);
            row.eliminated = k == 1 ? mpz_class(n) : binomial(n - 1, k) - 1;
        } else if (td.b_s && k == td.s) {
            row.b = *td.b_s;
            row.principal = binomial(n, td.s);
            row.eliminated = (td.t >= 1 && !special) ? binomial(n, td.s) - binomial(n - td.s + td.t, td.t)
                                                     : binomial(n, td.s);
        } else {
            row.principal = 0;
            row.eliminated = 0;
        }
        ct.rows.push_back(row);
    }
    for (const auto& r : ct.rows) {
        ct.principal_total += r.principal;
        ct.eliminated_total += r.eliminated;
    }
    if (fm) {
        // Per-column sizes of family_set, computed without building it.
        std::map<int, mpz_class> fam;
        switch (fm->family) {
            case Family::rectangle:
                fam[0] = lambda.length() - 1;
                fam[1] = n;
                break;
            case Family::near_rectangle:
            case Family::two_column:
                fam[0] = fm->g - 1;
                fam[1] = n;
                break;
            case Family::two_row:
                fam[0] = 1;
                fam[1] = n;
                fam[lambda[1] - 1] += binomial(n, fm->a + 1);
                break;
            case Family::hooked_single:
                fam[0] = fm->g;
                fam[1] = n;
                fam[2] = binomial(n, 2);
                break;
            case Family::hooked_double:
                fam[0] = fm->g;
                fam[1] = n;
                fam[2] = binomial(n, 2);
                fam[3] = binomial(n, 3);
                break;
            case Family::partial_rectangle:
                for (const auto& r : ct.rows)
                    if (r.column < 2 || r.column > fm->g) fam[r.column] = r.eliminated;
                break;
        }
        mpz_class total = 0;
        for (auto& r : ct.rows) {
            auto it = fam.find(r.column);
            if (it != fam.end()) r.family = it->second;
        }
        for (auto& [col, v] : fam) total += v;
        ct.family_total = total;
    }
    for (auto [i, p] : td.labeled()) {
        WeymanCount w;
        w.i = i;
        w.p = p;
        w.V_tilde = binomial(n, i);
        w.V = w.V_tilde * w.V_tilde;
        mpz_class prev = binomial(n, i - 1);
        w.U = w.V - prev * prev;
        w.U_tilde = w.V_tilde - prev;
        ct.weyman.push_back(w);
    }
    return ct;
}

}  // namespace dpgens
