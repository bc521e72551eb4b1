#include "dpgens/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "dpgens/partition.hpp"

namespace dpgens {

VarSet::VarSet(int n, std::vector<int> indices) : n_(n), idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
        throw std::invalid_argument("repeated variable in VarSet");
    if (!idx_.empty() && (idx_.front() < 1 || idx_.back() > n_))
        throw std::invalid_argument("variable index outside 1..n");
}

VarSet VarSet::full(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return VarSet(n, std::move(v));
}

bool VarSet::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

VarSet VarSet::without(int i) const {
    std::vector<int> v;
    for (int j : idx_)
        if (j != i) v.push_back(j);
    return VarSet(n_, std::move(v));
}

VarSet VarSet::without(const VarSet& other) const {
    std::vector<int> v;
    std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                        std::back_inserter(v));
    return VarSet(n_, std::move(v));
}

VarSet VarSet::complement() const { return full(n_).without(*this); }

std::string VarSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(idx_[i]);
    }
    return out + "}";
}

std::vector<VarSet> k_subsets(int n, int k) {
    std::vector<VarSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.emplace_back(n, cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Monomial::Monomial(std::vector<std::pair<int, int>> factors) {
    std::sort(factors.begin(), factors.end());
    for (auto [v, e] : factors) {
        if (v < 1) throw std::invalid_argument("variable index must be positive");
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!f_.empty() && f_.back().first == v) f_.back().second += e;
        else f_.emplace_back(v, e);
        deg_ += e;
    }
}

Monomial Monomial::var(int i, int e) { return Monomial({{i, e}}); }

Monomial Monomial::from_dense(const std::vector<int>& dense) {
    std::vector<std::pair<int, int>> f;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i]) f.emplace_back(static_cast<int>(i) + 1, dense[i]);
    return Monomial(std::move(f));
}

int Monomial::exponent(int var) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), std::make_pair(var, 0));
    return (it != f_.end() && it->first == var) ? it->second : 0;
}

std::vector<int> Monomial::dense(int n) const {
    std::vector<int> out(n, 0);
    for (auto [v, e] : f_) {
        if (v > n) throw std::out_of_range("monomial uses a variable beyond n");
        out[v - 1] = e;
    }
    return out;
}

bool Monomial::square_free() const {
    return std::all_of(f_.begin(), f_.end(), [](auto ve) { return ve.second == 1; });
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    for (auto [v, e] : f_) {
        while (j < other.f_.size() && other.f_[j].first < v) ++j;
        if (j == other.f_.size() || other.f_[j].first != v || other.f_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) r.f_.push_back(f_[i++]);
        else if (i == f_.size() || o.f_[j].first < f_[i].first) r.f_.push_back(o.f_[j++]);
        else {
            r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
            ++i, ++j;
        }
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    std::vector<std::pair<int, int>> f;
    for (auto [v, e] : f_) f.emplace_back(v, e - o.exponent(v));
    return Monomial(std::move(f));
}

std::vector<int> Monomial::type() const {
    std::vector<int> t;
    for (auto [v, e] : f_) t.push_back(e);
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string out;
    for (auto [v, e] : f_) {
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(v);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    // Scan from the last variable: the first difference decides, and the
    // smaller exponent there belongs to the larger monomial.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.rbegin(), ib = fb.rbegin();
    while (ia != fa.rend() || ib != fb.rend()) {
        int va = ia != fa.rend() ? ia->first : 0;
        int vb = ib != fb.rend() ? ib->first : 0;
        if (va != vb) return va > vb ? -1 : 1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    return 0;
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.push_back({m, c});
}

Polynomial::Polynomial(const Rational& c) : Polynomial(Monomial(), c) {}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef == 0) p.terms_.pop_back();
        } else if (t.coef != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.front().mono.degree();
    return terms_.back().mono.degree() == d ? d : -1;
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || degree() >= 0; }

int Polynomial::max_var() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.mono.max_var());
    return m;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
        return grevlex_compare(t.mono, x) > 0;
    });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return 0;
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : grevlex_compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, negate_b ? Rational(-b[j].coef) : b[j].coef});
            ++j;
        } else {
            Rational s = negate_b ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
            if (s != 0) out.push_back({a[i].mono, s});
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.terms_ = merge_add(terms_, o.terms_, false);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r;
    r.terms_ = merge_add(terms_, o.terms_, true);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the order.
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) all.push_back({a.mono * b.mono, a.coef * b.coef});
    return from_terms(std::move(all));
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

bool Polynomial::all_coefficients_one() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef == 1; });
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rational c = t.coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (i == 0) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (t.mono.is_one()) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + '*';
            out += t.mono.str();
        }
    }
    return out;
}

Polynomial Polynomial::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto digits = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected digits", start);
        return std::string(text.substr(start, pos - start));
    };
    std::vector<Term> terms;
    skip();
    if (pos < text.size() && text[pos] == '0') {
        std::size_t save = pos;
        ++pos;
        skip();
        if (pos == text.size()) return {};
        pos = save;
    }
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) {
            if (first) throw ParseError("empty polynomial", pos);
            break;
        }
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", pos);
        }
        first = false;
        Rational coef = 1;
        std::vector<std::pair<int, int>> factors;
        bool have_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string num = digits();
            std::string den = "1";
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = digits();
            }
            coef = Rational(num + "/" + den);
            coef.canonicalize();
            have_factor = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                have_factor = false;
            } else {
                terms.push_back({Monomial(), neg ? Rational(-coef) : coef});
                continue;
            }
        }
        while (true) {
            skip();
            if (pos >= text.size() || text[pos] != 'x') {
                if (!have_factor) throw ParseError("expected a variable", pos);
                break;
            }
            ++pos;
            int v = std::stoi(digits());
            int e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                e = std::stoi(digits());
            }
            factors.emplace_back(v, e);
            have_factor = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                have_factor = false;
            } else {
                break;
            }
        }
        terms.push_back({Monomial(std::move(factors)), neg ? Rational(-coef) : coef});
    }
    return from_terms(std::move(terms));
}

Polynomial evaluate_subset(const Polynomial& f, const VarSet& S) {
    std::vector<Term> kept;
    for (const auto& t : f.terms()) {
        bool ok = std::all_of(t.mono.factors().begin(), t.mono.factors().end(),
                              [&](auto ve) { return S.contains(ve.first); });
        if (ok) kept.push_back(t);
    }
    return Polynomial::from_terms(std::move(kept));
}

Polynomial permute(const Polynomial& f, const std::vector<int>& perm) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<std::pair<int, int>> fac;
        for (auto [v, e] : t.mono.factors()) fac.emplace_back(perm.at(v - 1), e);
        out.push_back({Monomial(std::move(fac)), t.coef});
    }
    return Polynomial::from_terms(std::move(out));
}

}  // namespace dpgens
