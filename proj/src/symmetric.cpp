#include "dpgens/symmetric.hpp"

#include <functional>

namespace dpgens {

Polynomial e(int r, const VarSet& S) {
    if (r < 0 || r > S.size()) return {};
    std::vector<Term> terms;
    const auto& idx = S.indices();
    std::vector<std::pair<int, int>> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) {
            terms.push_back({Monomial(cur), 1});
            return;
        }
        int need = r - static_cast<int>(cur.size());
        for (int i = from; i + need <= S.size(); ++i) {
            cur.emplace_back(idx[i], 1);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return Polynomial::from_terms(std::move(terms));
}

Polynomial h(int r, const VarSet& S) {
    if (r < 0) return {};
    if (r == 0) return Polynomial(Rational(1));
    std::vector<Term> terms;
    const auto& idx = S.indices();
    std::vector<std::pair<int, int>> cur;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (left == 0) {
            terms.push_back({Monomial(cur), 1});
            return;
        }
        if (i == S.size()) return;
        if (i == S.size() - 1) {
            cur.emplace_back(idx[i], left);
            rec(i + 1, 0);
            cur.pop_back();
            return;
        }
        for (int a = left; a >= 0; --a) {
            if (a) cur.emplace_back(idx[i], a);
            rec(i + 1, left - a);
            if (a) cur.pop_back();
        }
    };
    rec(0, r);
    return Polynomial::from_terms(std::move(terms));
}

Polynomial m(const Partition& mu, const VarSet& S) {
    if (mu.length() > S.size()) return {};
    if (mu.empty()) return Polynomial(Rational(1));
    // Distinct part values with multiplicities.
    std::vector<std::pair<int, int>> avail;
    for (int p : mu.parts()) {
        if (!avail.empty() && avail.back().first == p) ++avail.back().second;
        else avail.emplace_back(p, 1);
    }
    std::vector<Term> terms;
    const auto& idx = S.indices();
    std::vector<std::pair<int, int>> cur;
    int remaining = mu.length();
    std::function<void(int)> rec = [&](int i) {
        if (remaining == 0) {
            terms.push_back({Monomial(cur), 1});
            return;
        }
        if (S.size() - i < remaining) return;
        rec(i + 1);
        for (auto& [value, count] : avail) {
            if (!count) continue;
            --count, --remaining;
            cur.emplace_back(idx[i], value);
            rec(i + 1);
            cur.pop_back();
            ++count, ++remaining;
        }
    };
    rec(0);
    return Polynomial::from_terms(std::move(terms));
}

Polynomial power_sum(int r, const VarSet& S) {
    std::vector<Term> terms;
    for (int i : S.indices()) terms.push_back({Monomial::var(i, r), 1});
    return Polynomial::from_terms(std::move(terms));
}

std::vector<Polynomial> e_family(int r, int k, int n) {
    std::vector<Polynomial> out;
    if (r > k) return out;
    for (const auto& S : k_subsets(n, k)) out.push_back(e(r, S));
    return out;
}

}  // namespace dpgens
