#include "dpgens/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dpgens {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::exact: return "exact";
        case Mode::modular: return "modular";
        case Mode::automatic: return "auto";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "exact") return Mode::exact;
    if (s == "modular") return Mode::modular;
    if (s == "auto") return Mode::automatic;
    throw std::invalid_argument("unknown mode '" + s + "' (exact, modular, auto)");
}

std::string Backend::str() const {
    if (exact) return "exact";
    std::string s = "modular(";
    for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
    return s + ")";
}

Backend resolve_backend(const VerifyConfig& cfg, int n, int max_degree) {
    Backend b;
    b.exact = cfg.mode == Mode::exact ||
              (cfg.mode == Mode::automatic && monomial_count(n, std::max(max_degree, 0)) <= cfg.exact_auto_limit);
    if (!b.exact) b.primes = pick_primes(cfg.seed, std::max(cfg.primes, 1));
    return b;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::confirms: return "confirms";
        case Verdict::counterexample: return "counterexample";
        case Verdict::not_applicable: return "not_applicable";
        case Verdict::refused: return "refused";
    }
    return "?";
}

std::string cell_verdict_name(CellVerdict v) {
    switch (v) {
        case CellVerdict::needed: return "needed";
        case CellVerdict::redundant: return "redundant";
        case CellVerdict::partial: return "partial";
    }
    return "?";
}

std::uint64_t GradedReport::beta(int d) const {
    for (const auto& r : degrees)
        if (r.degree == d) return r.beta;
    return 0;
}

namespace {

bool is_monomial(const Polynomial& p) { return p.size() == 1; }

// Monomial generators with their degrees, for divisibility tests.
struct MonomialIndex {
    std::vector<std::pair<Monomial, std::size_t>> monos;  // monomial, generator index
    explicit MonomialIndex(const std::vector<Polynomial>& gens) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (is_monomial(gens[i])) monos.emplace_back(gens[i].terms().front().mono, i);
    }
    // A monomial generator other than `self` with degree <= max_deg dividing m.
    std::optional<std::pair<Monomial, std::size_t>> divisor(const Monomial& m, int max_deg,
                                                            std::size_t self = static_cast<std::size_t>(-1)) const {
        for (const auto& [mono, idx] : monos)
            if (idx != self && mono.degree() <= max_deg && mono.divides(m)) return std::make_pair(mono, idx);
        return std::nullopt;
    }
};

bool absorbed_by(const Polynomial& f, const MonomialIndex& mi, std::size_t self = static_cast<std::size_t>(-1)) {
    if (f.is_zero()) return true;
    int d = f.degree();
    for (const auto& t : f.terms())
        if (!mi.divisor(t.mono, d, self)) return false;
    return true;
}

template <class F>
std::optional<SparseVec<F>> to_sparse(const F& f, const Polynomial& p, const GradedBasis& basis) {
    SparseVec<F> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        auto v = f.from_rational(t.coef);
        if (!v) return std::nullopt;
        out.emplace_back(basis.index(t.mono), *v);
    }
    return out;
}

void check_homogeneous(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() < 0) throw std::invalid_argument("generators must be homogeneous");
        if (g.degree() == 0) throw std::invalid_argument("constant generators are not supported");
    }
}

std::vector<Polynomial> polys_of(const GeneratorSet& G) {
    std::vector<Polynomial> out;
    out.reserve(G.size());
    for (const auto& g : G.generators) out.push_back(g.poly);
    return out;
}

void check_budget(int n, int d, const VerifyConfig& cfg) {
    std::uint64_t cols = monomial_count(n, d);
    if (cols > cfg.column_cap) throw BudgetExceeded(n, d, cols, cfg.column_cap);
}

// Ideal generated by a fixed list, advanced one degree at a time.
template <class F>
class Tower {
public:
    Tower(int n, F f, const std::vector<Polynomial>& gens, const std::vector<bool>& skip, const VerifyConfig& cfg)
        : eng_(n, f), f_(std::move(f)), gens_(gens), skip_(skip), cfg_(cfg) {
        if (cfg.progress) eng_.set_progress(cfg.progress);
    }
    DegreeStats advance(bool keep) {
        int D = eng_.degree() + 1;
        check_budget(eng_.n(), D, cfg_);
        GradedBasis B(eng_.n(), D);
        std::vector<SparseVec<F>> batch;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (skip_[i] || gens_[i].is_zero() || gens_[i].degree() != D) continue;
            auto v = to_sparse(f_, gens_[i], B);
            if (!v) throw std::domain_error("a coefficient denominator vanishes modulo " + f_.name());
            batch.push_back(std::move(*v));
        }
        return eng_.advance(batch, keep);
    }
    void advance_to(int d) {
        while (eng_.degree() < d) advance(true);
    }
    bool contains(const Polynomial& p) {
        advance_to(p.degree());
        auto v = to_sparse(f_, p, eng_.basis());
        if (!v) throw std::domain_error("a coefficient denominator vanishes modulo " + f_.name());
        return eng_.contains(*v);
    }
    int degree() const { return eng_.degree(); }

private:
    GradedEngine<F> eng_;
    F f_;
    const std::vector<Polynomial>& gens_;
    const std::vector<bool>& skip_;
    const VerifyConfig& cfg_;
};

template <class F>
std::vector<DegreeStats> run_degrees(int n, F f, const std::vector<Polynomial>& gens, const std::vector<bool>& skip,
                                     int target, const VerifyConfig& cfg, std::optional<std::string>& refusal) {
    Tower<F> tower(n, std::move(f), gens, skip, cfg);
    std::vector<DegreeStats> out;
    for (int D = 1; D <= target; ++D) {
        try {
            out.push_back(tower.advance(D < target));
        } catch (const BudgetExceeded& e) {
            refusal = e.what();
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<bool> absorbed_generators(const std::vector<Polynomial>& gens) {
    MonomialIndex mi(gens);
    std::vector<bool> out(gens.size(), false);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Polynomial& g = gens[i];
        if (g.is_zero()) {
            out[i] = true;
            continue;
        }
        if (is_monomial(g)) {
            // Only strictly smaller monomials, or an identical earlier copy.
            const Monomial& m = g.terms().front().mono;
            for (const auto& [mono, idx] : mi.monos)
                if (idx != i && mono.divides(m) && (mono.degree() < m.degree() || idx < i)) {
                    out[i] = true;
                    break;
                }
            continue;
        }
        out[i] = absorbed_by(g, mi, i);
    }
    return out;
}

GradedReport betti_counts(const GeneratorSet& G, int max_d, const VerifyConfig& cfg) {
    auto gens = polys_of(G);
    check_homogeneous(gens);
    auto skip = absorbed_generators(gens);
    GradedReport rep;
    rep.partition = G.partition.str();
    rep.builder = G.builder;
    rep.n = G.n;
    rep.seed = cfg.seed;
    int dstar = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        rep.max_generator_degree = std::max(rep.max_generator_degree, gens[i].degree());
        if (!skip[i]) dstar = std::max(dstar, gens[i].degree());
    }
    int last = max_d >= 0 ? std::min(max_d, rep.max_generator_degree) : rep.max_generator_degree;
    int target = std::min(last, dstar);
    rep.backend = resolve_backend(cfg, G.n, target);

    std::vector<DegreeStats> stats;
    std::vector<bool> disagree;
    if (rep.backend.exact) {
        stats = run_degrees(G.n, RationalField{}, gens, skip, target, cfg, rep.refusal);
        disagree.assign(stats.size(), false);
    } else {
        std::vector<std::vector<DegreeStats>> runs;
        for (auto p : rep.backend.primes) runs.push_back(run_degrees(G.n, ModField(p), gens, skip, target, cfg, rep.refusal));
        std::size_t len = runs.front().size();
        for (const auto& r : runs) len = std::min(len, r.size());
        for (std::size_t k = 0; k < len; ++k) {
            std::size_t best = 0;
            bool differ = false;
            for (std::size_t j = 1; j < runs.size(); ++j) {
                if (runs[j][k].dim_ideal != runs[0][k].dim_ideal || runs[j][k].dim_shifted != runs[0][k].dim_shifted)
                    differ = true;
                if (runs[j][k].dim_ideal > runs[best][k].dim_ideal) best = j;
            }
            DegreeStats s = runs[best][k];
            s.seconds = 0;
            for (const auto& r : runs) s.seconds += r[k].seconds;
            stats.push_back(s);
            disagree.push_back(differ);
        }
    }

    std::map<int, std::pair<std::uint64_t, std::uint64_t>> counts;  // degree -> (generators, absorbed)
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        auto& c = counts[gens[i].degree()];
        ++c.first;
        if (skip[i]) ++c.second;
    }
    for (std::size_t k = 0; k < stats.size(); ++k) {
        DegreeRow row;
        row.degree = stats[k].degree;
        row.columns = stats[k].columns;
        row.generators = counts[row.degree].first;
        row.absorbed = counts[row.degree].second;
        row.computed = true;
        row.dim_ideal = stats[k].dim_ideal;
        row.dim_shifted = stats[k].dim_shifted;
        row.beta = stats[k].new_generators;
        row.primes_disagree = disagree[k];
        row.seconds = stats[k].seconds;
        rep.primes_disagree = rep.primes_disagree || disagree[k];
        rep.total += row.beta;
        rep.degrees.push_back(row);
    }
    rep.computed_through = static_cast<int>(stats.size());
    if (!rep.refusal) {
        for (int d = target + 1; d <= last; ++d) {
            DegreeRow row;
            row.degree = d;
            row.columns = monomial_count(G.n, d);
            row.generators = counts[d].first;
            row.absorbed = counts[d].second;
            rep.degrees.push_back(row);
        }
    }
    rep.complete = !rep.refusal && rep.computed_through >= dstar;
    return rep;
}

MembershipResult membership(const Polynomial& f, const GeneratorSet& G, const VerifyConfig& cfg,
                            std::size_t certificate_rows) {
    auto gens = polys_of(G);
    check_homogeneous(gens);
    MembershipResult res;
    if (f.is_zero()) {
        res.member = res.certified = true;
        res.certificate = Certificate{};
        return res;
    }
    if (f.degree() < 0) throw std::invalid_argument("membership needs a homogeneous polynomial");
    const int d = f.degree();

    MonomialIndex mi(gens);
    if (absorbed_by(f, mi)) {
        Certificate c;
        for (const auto& t : f.terms()) {
            auto div = *mi.divisor(t.mono, d);
            c.terms.push_back({div.second, t.mono / div.first, t.coef});
        }
        res.member = res.certified = true;
        res.certificate = std::move(c);
        return res;
    }

    auto skip = absorbed_generators(gens);
    res.backend = resolve_backend(cfg, G.n, d);
    if (res.backend.exact) {
        Tower<RationalField> t(G.n, RationalField{}, gens, skip, cfg);
        res.member = t.contains(f);
        res.certified = true;
    } else {
        res.member = true;
        for (auto p : res.backend.primes) {
            Tower<ModField> t(G.n, ModField(p), gens, skip, cfg);
            if (!t.contains(f)) {
                res.member = false;
                break;
            }
        }
    }
    if (res.member && certificate_rows > 0) {
        std::uint64_t rows = 0;
        for (const auto& g : gens)
            if (!g.is_zero() && g.degree() <= d) rows += monomial_count(G.n, d - g.degree());
        if (rows <= certificate_rows) {
            auto M = span_matrix(gens, G.n, d, cfg.column_cap);
            if (auto c = express(M, f); c && expand(*c, gens) == f) {
                res.certificate = std::move(c);
                res.certified = true;
            }
        }
    }
    return res;
}

namespace {

struct Pending {
    bool first_in_second;
    std::size_t index;
    int degree;
};

// Memberships that need linear algebra, ordered for a single pass.
std::vector<Pending> pending_checks(const std::vector<Polynomial>& from, const std::vector<Polynomial>& into,
                                    bool first_in_second, std::uint64_t& absorbed) {
    MonomialIndex mi(into);
    std::vector<Pending> out;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (absorbed_by(from[i], mi)) {
            ++absorbed;
            continue;
        }
        out.push_back({first_in_second, i, from[i].degree()});
    }
    std::stable_sort(out.begin(), out.end(), [](const Pending& a, const Pending& b) { return a.degree < b.degree; });
    return out;
}

// First pending check that fails, if any.
template <class F>
std::optional<Pending> first_failure(const F& f, int n, const std::vector<Polynomial>& from,
                                     const std::vector<Polynomial>& into, const std::vector<Pending>& todo,
                                     const VerifyConfig& cfg) {
    auto skip = absorbed_generators(into);
    Tower<F> t(n, f, into, skip, cfg);
    for (const auto& p : todo)
        if (!t.contains(from[p.index])) return p;
    return std::nullopt;
}

}  // namespace

EqualityResult ideal_equal(const GeneratorSet& A, const GeneratorSet& B, const VerifyConfig& cfg) {
    if (A.n != B.n) throw std::invalid_argument("generating sets live in different rings");
    auto ga = polys_of(A), gb = polys_of(B);
    check_homogeneous(ga);
    check_homogeneous(gb);
    EqualityResult res;
    auto ab = pending_checks(ga, gb, true, res.absorbed);
    auto ba = pending_checks(gb, ga, false, res.absorbed);
    for (const auto& p : ab) res.max_degree = std::max(res.max_degree, p.degree);
    for (const auto& p : ba) res.max_degree = std::max(res.max_degree, p.degree);
    res.backend = resolve_backend(cfg, A.n, res.max_degree);

    auto run = [&](const auto& field) -> std::optional<Pending> {
        if (auto f = first_failure(field, A.n, ga, gb, ab, cfg)) return f;
        return first_failure(field, A.n, gb, ga, ba, cfg);
    };
    std::optional<Pending> fail;
    if (res.backend.exact) {
        fail = run(RationalField{});
    } else {
        // Keep the earliest failure over all primes so the report does not
        // depend on which prime noticed it.
        auto key = [](const Pending& p) { return std::make_tuple(!p.first_in_second, p.degree, p.index); };
        for (auto p : res.backend.primes) {
            auto f = run(ModField(p));
            if (f && (!fail || key(*f) < key(*fail))) fail = f;
        }
    }
    res.checked = ab.size() + ba.size();
    res.equal = !fail;
    res.certified = res.backend.exact;
    if (fail) {
        const GeneratorSet& src = fail->first_in_second ? A : B;
        res.failure = EqualityFailure{fail->first_in_second, fail->index, src.generators[fail->index]};
    }
    return res;
}

bool in_counterexample_family(const Partition& lambda) {
    auto m = match_family(lambda);
    if (!m) return false;
    int columns = lambda[1];
    if (m->family == Family::hooked_single) return columns >= 4;
    if (m->family == Family::hooked_double) return columns >= 5;
    return false;
}

ConjectureVerdict check_conjecture(const Partition& lambda, const VerifyConfig& cfg) {
    ConjectureVerdict v;
    v.partition = lambda;
    const int n = lambda.size();
    const int ell = lambda.length();
    auto cells = conjectured_cells(lambda);
    std::map<int, mpz_class> cell_total;
    for (auto [i, p] : cells) {
        CellResult c;
        c.i = i;
        c.p = p;
        c.predicted = binomial(n, i) - binomial(n, i - 1);
        cell_total[p] += c.predicted;
        v.cells.push_back(c);
    }
    for (const auto& c : v.cells)
        if (c.predicted < 0) {
            v.verdict = Verdict::not_applicable;
            v.note = "cell (" + std::to_string(c.i) + "," + std::to_string(c.p) + ") has n < 2i, no count is predicted";
            return v;
        }

    v.report = betti_counts(tanisaki(lambda), -1, cfg);
    if (v.report.refusal) {
        v.verdict = Verdict::refused;
        v.note = *v.report.refusal;
        return v;
    }
    for (const auto& row : v.report.degrees) {
        DegreeComparison dc;
        dc.degree = row.degree;
        dc.predicted = (row.degree <= ell ? 1 : 0);
        if (auto it = cell_total.find(row.degree); it != cell_total.end()) dc.predicted += it->second;
        dc.actual = row.beta;
        if (mpz_class(std::to_string(dc.actual)) > dc.predicted) v.excess_degrees.push_back(dc.degree);
        v.degrees.push_back(dc);
    }
    bool short_cell = false;
    for (auto& c : v.cells) {
        mpz_class extra = mpz_class(std::to_string(v.report.beta(c.p))) - (c.p <= ell ? 1 : 0);
        if (extra >= cell_total[c.p]) {
            c.verdict = CellVerdict::needed;
        } else {
            c.verdict = extra <= 0 ? CellVerdict::redundant : CellVerdict::partial;
            short_cell = true;
        }
    }
    v.verdict = short_cell ? Verdict::counterexample : Verdict::confirms;
    return v;
}

std::vector<ConjectureVerdict> scan(int n, const VerifyConfig& cfg, int jobs) {
    auto parts = partitions_of(n, n);
    std::vector<ConjectureVerdict> out(parts.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t k; (k = next++) < parts.size();) {
            try {
                out[k] = check_conjecture(parts[k], cfg);
            } catch (const std::exception& e) {
                out[k].partition = parts[k];
                out[k].verdict = Verdict::refused;
                out[k].note = e.what();
            }
        }
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(parts.size())));
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace dpgens
