#include "dpgens/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dpgens {

namespace {

std::string cell_key(int row, int col) { return std::to_string(row) + "," + std::to_string(col); }

std::string zstr(const mpz_class& z) { return z.get_str(); }

json zjson(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

// Right-aligned columns separated by two spaces.
std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) w[c] = head[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) s += "  ";
            s += std::string(w[c] - r[c].size(), ' ') + r[c];
        }
        os << s << '\n';
    };
    line(head);
    std::size_t total = 0;
    for (auto x : w) total += x;
    os << std::string(total + 2 * (w.size() - 1), '-') << '\n';
    for (const auto& r : rows) line(r);
    return os.str();
}

json subset_json(const std::optional<VarSet>& s) {
    if (!s) return nullptr;
    return s->indices();
}

std::string status_name(AlgorithmState::Status s) {
    switch (s) {
        case AlgorithmState::Status::running: return "running";
        case AlgorithmState::Status::stopped_case3: return "stopped_case3";
        case AlgorithmState::Status::completed: return "completed";
    }
    return "?";
}

json backend_json(const Backend& b) {
    json j;
    j["arithmetic"] = b.exact ? "exact" : "modular";
    j["primes"] = b.primes;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Filling& f) {
    json j;
    j["shape"] = to_json(f.shape());
    json e = json::object();
    for (const auto& [cell, v] : f.entries()) e[cell_key(cell.row, cell.col)] = v;
    j["entries"] = std::move(e);
    return j;
}

Filling filling_from_json(const json& j) {
    Partition shape(j.at("shape").get<std::vector<int>>());
    Partition conj = conjugate(shape);
    std::vector<std::vector<int>> cols(conj.length());
    for (int c = 0; c < conj.length(); ++c) cols[c].assign(conj[c + 1], 0);
    const auto& e = j.at("entries");
    std::size_t seen = 0;
    for (auto it = e.begin(); it != e.end(); ++it) {
        const std::string& key = it.key();
        auto comma = key.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad cell key " + key);
        int r = std::stoi(key.substr(0, comma));
        int c = std::stoi(key.substr(comma + 1));
        if (c < 0 || c >= conj.length() || r < 0 || r >= conj[c + 1])
            throw std::invalid_argument("cell outside the shape: " + key);
        cols[c][r] = it.value().get<int>();
        ++seen;
    }
    if (seen != static_cast<std::size_t>(shape.size())) throw std::invalid_argument("missing cells");
    return Filling(shape, std::move(cols));
}

json to_json(const WeymanDiagram& w, const std::vector<std::pair<int, int>>& marked) {
    json j;
    j["n"] = w.n();
    json cols = json::array();
    for (int i = 0; i < w.columns(); ++i) cols.push_back({{"column", i}, {"top", w.top(i)}, {"bottom", w.bottom(i)}});
    j["columns"] = std::move(cols);
    json m = json::array();
    for (auto [i, p] : marked) m.push_back(cell_key(p, i));
    j["marked"] = std::move(m);
    return j;
}

Filling parse_filling_ascii(const std::string& text) {
    std::vector<std::vector<int>> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("non-numeric entry in filling");
        if (!row.empty()) lines.push_back(std::move(row));
    }
    std::reverse(lines.begin(), lines.end());
    std::vector<int> shape;
    for (const auto& r : lines) shape.push_back(static_cast<int>(r.size()));
    Partition sh(shape);
    Partition conj = conjugate(sh);
    std::vector<std::vector<int>> cols(conj.length());
    for (int c = 0; c < conj.length(); ++c)
        for (int r = 0; r < conj[c + 1]; ++r) cols[c].push_back(lines[r][c]);
    return Filling(sh, std::move(cols));
}

json to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        json ex = json::array();
        for (auto [v, e] : t.mono.factors()) ex.push_back({v, e});
        terms.push_back({{"coef", t.coef.get_str()}, {"exponents", std::move(ex)}});
    }
    return terms;
}

Polynomial polynomial_from_json(const json& j) {
    std::vector<Term> terms;
    for (const auto& t : j) {
        std::vector<std::pair<int, int>> f;
        for (const auto& ve : t.at("exponents")) f.emplace_back(ve.at(0).get<int>(), ve.at(1).get<int>());
        mpq_class c(t.at("coef").get<std::string>());
        c.canonicalize();
        terms.push_back({Monomial(std::move(f)), c});
    }
    return Polynomial::from_terms(std::move(terms));
}

json to_json(const GeneratorSet& G) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["partition"] = to_json(G.partition);
    j["builder"] = G.builder;
    j["n"] = G.n;
    j["size"] = G.size();
    json cc = json::array();
    for (long c : G.column_counts()) cc.push_back(c);
    j["column_counts"] = std::move(cc);
    json gens = json::array();
    for (const auto& g : G.generators) {
        json x;
        x["rule"] = g.rule;
        x["column"] = g.column;
        x["degree"] = g.degree;
        x["subset"] = subset_json(g.subset);
        x["polynomial"] = g.poly.str();
        gens.push_back(std::move(x));
    }
    j["generators"] = std::move(gens);
    return j;
}

GeneratorSet generator_set_from_json(const json& j) {
    GeneratorSet G;
    G.partition = Partition(j.at("partition").get<std::vector<int>>());
    G.builder = j.at("builder").get<std::string>();
    G.n = j.at("n").get<int>();
    for (const auto& x : j.at("generators")) {
        LabeledGenerator g;
        g.rule = x.at("rule").get<std::string>();
        g.column = x.at("column").get<int>();
        g.degree = x.at("degree").get<int>();
        if (!x.at("subset").is_null()) g.subset = VarSet(G.n, x.at("subset").get<std::vector<int>>());
        g.poly = Polynomial::parse(x.at("polynomial").get<std::string>());
        G.generators.push_back(std::move(g));
    }
    return G;
}

std::string cas_listing(const GeneratorSet& G) {
    std::ostringstream os;
    for (std::size_t i = 0; i < G.generators.size(); ++i) {
        os << G.generators[i].poly.str();
        if (i + 1 < G.generators.size()) os << ',';
        os << '\n';
    }
    return os.str();
}

std::string generator_text(const GeneratorSet& G) {
    std::ostringstream os;
    os << "partition " << G.partition.str() << "  builder " << G.builder << "  n " << G.n << "  generators "
       << G.size() << "\n\n";
    auto cc = G.column_counts();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t c = 0; c < cc.size(); ++c)
        if (cc[c]) rows.push_back({std::to_string(c), std::to_string(cc[c])});
    rows.push_back({"total", std::to_string(G.size())});
    os << table({"column", "count"}, rows) << '\n';
    for (const auto& g : G.generators) {
        os << "[" << g.column << "] " << g.rule;
        if (g.subset) os << ' ' << g.subset->str();
        os << "  deg " << g.degree << ": " << g.poly.str() << '\n';
    }
    return os.str();
}

json to_json(const CountTable& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["partition"] = to_json(t.partition);
    j["family"] = t.family ? json(*t.family) : json(nullptr);
    json rows = json::array();
    for (const auto& r : t.rows) {
        json x;
        x["column"] = r.column;
        x["height"] = r.height;
        x["b"] = r.b ? json(*r.b) : json(nullptr);
        x["principal"] = zjson(r.principal);
        x["eliminated"] = zjson(r.eliminated);
        x["family"] = r.family ? zjson(*r.family) : json(nullptr);
        rows.push_back(std::move(x));
    }
    j["columns"] = std::move(rows);
    j["principal_total"] = zjson(t.principal_total);
    j["eliminated_total"] = zjson(t.eliminated_total);
    j["family_total"] = t.family_total ? zjson(*t.family_total) : json(nullptr);
    json w = json::array();
    for (const auto& c : t.weyman)
        w.push_back({{"i", c.i},
                     {"p", c.p},
                     {"V", zjson(c.V)},
                     {"V_tilde", zjson(c.V_tilde)},
                     {"U", zjson(c.U)},
                     {"U_tilde", zjson(c.U_tilde)}});
    j["weyman"] = std::move(w);
    return j;
}

std::string count_text(const CountTable& t) {
    std::ostringstream os;
    os << "partition " << t.partition.str();
    if (t.family) os << "  family " << *t.family;
    os << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : t.rows)
        rows.push_back({std::to_string(r.column), std::to_string(r.height), r.b ? std::to_string(*r.b) : "-",
                        zstr(r.principal), zstr(r.eliminated), r.family ? zstr(*r.family) : "-"});
    rows.push_back({"total", "", "", zstr(t.principal_total), zstr(t.eliminated_total),
                    t.family_total ? zstr(*t.family_total) : "-"});
    os << table({"column", "height", "b", "principal", "eliminated", "family"}, rows);
    if (!t.weyman.empty()) {
        os << '\n';
        std::vector<std::vector<std::string>> w;
        for (const auto& c : t.weyman)
            w.push_back({std::to_string(c.i), std::to_string(c.p), zstr(c.V), zstr(c.V_tilde), zstr(c.U),
                         zstr(c.U_tilde)});
        os << table({"i", "p", "|V|", "|V~|", "|U|", "|U~|"}, w);
    }
    return os.str();
}

json to_json(const AlgorithmState& a) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["partition"] = to_json(a.G.partition);
    j["status"] = status_name(a.status);
    json tr = json::array();
    for (const auto& s : a.trace) {
        json U = json::array();
        for (const auto& mu : s.U) U.push_back(to_json(mu));
        tr.push_back({{"column", s.column}, {"b", s.b}, {"U", std::move(U)}, {"case", s.kase}, {"added", s.added}});
    }
    j["trace"] = std::move(tr);
    json L = json::array();
    for (const auto& nu : a.L) L.push_back(to_json(nu));
    j["L"] = std::move(L);
    j["generators"] = to_json(a.G);
    return j;
}

std::string algorithm_text(const AlgorithmState& a) {
    std::ostringstream os;
    os << "partition " << a.G.partition.str() << "  status " << status_name(a.status) << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : a.trace) {
        std::string U = "{";
        for (std::size_t i = 0; i < s.U.size(); ++i) U += (i ? " (" : "(") + s.U[i].str() + ")";
        U += "}";
        rows.push_back({std::to_string(s.column), std::to_string(s.b), U, std::to_string(s.kase),
                        std::to_string(s.added)});
    }
    os << table({"column", "b", "U", "case", "added"}, rows) << '\n';
    os << generator_text(a.G);
    return os.str();
}

json to_json(const GradedReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["partition"] = r.partition;
    j["builder"] = r.builder;
    j["n"] = r.n;
    j["backend"] = backend_json(r.backend);
    j["seed"] = r.seed;
    json ds = json::array();
    for (const auto& d : r.degrees)
        ds.push_back({{"degree", d.degree},
                      {"columns", d.columns},
                      {"generators", d.generators},
                      {"absorbed", d.absorbed},
                      {"computed", d.computed},
                      {"dim_ideal", d.dim_ideal},
                      {"dim_shifted", d.dim_shifted},
                      {"beta", d.beta},
                      {"primes_disagree", d.primes_disagree}});
    j["degrees"] = std::move(ds);
    j["total"] = r.total;
    j["max_generator_degree"] = r.max_generator_degree;
    j["computed_through"] = r.computed_through;
    j["complete"] = r.complete;
    j["primes_disagree"] = r.primes_disagree;
    j["refusal"] = r.refusal ? json(*r.refusal) : json(nullptr);
    return j;
}

std::string graded_text(const GradedReport& r) {
    std::ostringstream os;
    os << "partition " << r.partition << "  builder " << r.builder << "  n " << r.n << "  arithmetic "
       << r.backend.str() << "  seed " << r.seed << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : r.degrees) {
        bool lin = d.computed;
        rows.push_back({std::to_string(d.degree), std::to_string(d.columns), std::to_string(d.generators),
                        lin ? std::to_string(d.dim_ideal) : "-", lin ? std::to_string(d.dim_shifted) : "-",
                        std::to_string(d.beta)});
    }
    rows.push_back({"total", "", "", "", "", std::to_string(r.total)});
    os << table({"degree", "dim R_d", "generators", "dim I_d", "dim (R+I)_d", "minimal"}, rows);
    if (!r.complete) os << "\nincomplete: computed through degree " << r.computed_through << '\n';
    if (r.refusal) os << "refused: " << *r.refusal << '\n';
    if (r.primes_disagree) os << "warning: primes disagree\n";
    return os.str();
}

json to_json(const EqualityResult& r, const GeneratorSet& A, const GeneratorSet& B) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["partition"] = to_json(A.partition);
    j["first"] = A.builder;
    j["second"] = B.builder;
    j["second_partition"] = to_json(B.partition);
    j["first_size"] = A.size();
    j["second_size"] = B.size();
    j["equal"] = r.equal;
    j["certified"] = r.certified;
    j["backend"] = backend_json(r.backend);
    j["checked"] = r.checked;
    j["absorbed"] = r.absorbed;
    j["max_degree"] = r.max_degree;
    if (r.failure) {
        const auto& f = *r.failure;
        j["failure"] = {{"missing_from", f.first_in_second ? B.builder : A.builder},
                        {"index", f.index},
                        {"rule", f.generator.rule},
                        {"column", f.generator.column},
                        {"degree", f.generator.degree},
                        {"polynomial", f.generator.poly.str()}};
    } else {
        j["failure"] = nullptr;
    }
    return j;
}

std::string equality_text(const EqualityResult& r, const GeneratorSet& A, const GeneratorSet& B) {
    std::ostringstream os;
    os << "partition " << A.partition.str() << ": " << A.builder << " (" << A.size() << ") vs ";
    if (!(B.partition == A.partition)) os << B.partition.str() << " ";
    os << B.builder << " (" << B.size() << ")\n";
    os << "arithmetic " << r.backend.str() << "  checked " << r.checked << "  absorbed " << r.absorbed
       << "  max degree " << r.max_degree << '\n';
    os << (r.equal ? "PASS" : "FAIL") << (r.certified ? " (certified)" : " (not certified)") << '\n';
    if (r.failure) {
        const auto& f = *r.failure;
        os << "first generator outside the ideal of " << (f.first_in_second ? B.builder : A.builder) << ": #"
           << f.index << " [" << f.generator.column << "] " << f.generator.rule;
        if (f.generator.subset) os << ' ' << f.generator.subset->str();
        os << "  " << f.generator.poly.str() << '\n';
    }
    return os.str();
}

json to_json(const ConjectureVerdict& v) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["partition"] = to_json(v.partition);
    j["verdict"] = verdict_name(v.verdict);
    j["in_family"] = in_counterexample_family(v.partition);
    json cells = json::array();
    for (const auto& c : v.cells)
        cells.push_back(
            {{"i", c.i}, {"p", c.p}, {"predicted", zjson(c.predicted)}, {"verdict", cell_verdict_name(c.verdict)}});
    j["cells"] = std::move(cells);
    json ds = json::array();
    for (const auto& d : v.degrees)
        ds.push_back({{"degree", d.degree}, {"predicted", zjson(d.predicted)}, {"actual", d.actual}});
    j["degrees"] = std::move(ds);
    j["excess_degrees"] = v.excess_degrees;
    j["note"] = v.note;
    j["report"] = to_json(v.report);
    return j;
}

std::string conjecture_text(const ConjectureVerdict& v) {
    std::ostringstream os;
    os << "partition " << v.partition.str() << "  verdict " << verdict_name(v.verdict) << '\n';
    if (!v.note.empty()) os << v.note << '\n';
    os << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : v.degrees) rows.push_back({std::to_string(d.degree), zstr(d.predicted), std::to_string(d.actual)});
    os << table({"degree", "predicted", "actual"}, rows);
    if (!v.cells.empty()) {
        os << '\n';
        std::vector<std::vector<std::string>> c;
        for (const auto& x : v.cells)
            c.push_back({std::to_string(x.i), std::to_string(x.p), zstr(x.predicted), cell_verdict_name(x.verdict)});
        os << table({"i", "p", "predicted", "cell"}, c);
    }
    if (!v.excess_degrees.empty()) {
        os << "\nexcess in degrees";
        for (int d : v.excess_degrees) os << ' ' << d;
        os << '\n';
    }
    return os.str();
}

std::string scan_text(int n, const std::vector<ConjectureVerdict>& vs) {
    std::ostringstream os;
    os << "scan n = " << n << "  partitions " << vs.size() << "\n\n";
    std::vector<std::vector<std::string>> rows;
    std::size_t flagged = 0;
    for (const auto& v : vs) {
        std::string shortd, excess;
        for (const auto& c : v.cells)
            if (c.verdict != CellVerdict::needed) shortd += (shortd.empty() ? "" : " ") + cell_key(c.i, c.p);
        for (int d : v.excess_degrees) excess += (excess.empty() ? "" : " ") + std::to_string(d);
        if (v.verdict == Verdict::counterexample) ++flagged;
        rows.push_back({v.partition.str(), verdict_name(v.verdict), in_counterexample_family(v.partition) ? "yes" : "no",
                        std::to_string(v.report.total), shortd.empty() ? "-" : shortd, excess.empty() ? "-" : excess});
    }
    os << table({"partition", "verdict", "family", "minimal", "short cells", "excess"}, rows);
    os << "\nflagged " << flagged << '\n';
    return os.str();
}

json scan_json(int n, const std::vector<ConjectureVerdict>& vs) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    json arr = json::array();
    json flagged = json::array();
    for (const auto& v : vs) {
        arr.push_back(to_json(v));
        if (v.verdict == Verdict::counterexample) flagged.push_back(to_json(v.partition));
    }
    j["flagged"] = std::move(flagged);
    j["results"] = std::move(arr);
    return j;
}

std::string csv_header() { return "partition,degree,builder,count,kind\n"; }

std::string csv(const std::vector<CsvRow>& rows) {
    std::string out = csv_header();
    for (const auto& r : rows)
        out += csv_field(r.partition) + ',' + std::to_string(r.degree) + ',' + csv_field(r.builder) + ',' +
               csv_field(r.count) + ',' + csv_field(r.kind) + '\n';
    return out;
}

std::vector<CsvRow> csv_rows(const GradedReport& r) {
    std::vector<CsvRow> out;
    for (const auto& d : r.degrees) {
        out.push_back({r.partition, d.degree, r.builder, std::to_string(d.generators), "generators"});
        if (d.computed) {
            out.push_back({r.partition, d.degree, r.builder, std::to_string(d.dim_ideal), "dim_ideal"});
            out.push_back({r.partition, d.degree, r.builder, std::to_string(d.dim_shifted), "dim_shifted"});
        }
        out.push_back({r.partition, d.degree, r.builder, std::to_string(d.beta), "minimal"});
    }
    return out;
}

std::vector<CsvRow> csv_rows(const ConjectureVerdict& v) {
    std::vector<CsvRow> out;
    std::string p = v.partition.str();
    for (const auto& d : v.degrees) {
        out.push_back({p, d.degree, "tanisaki", zstr(d.predicted), "predicted"});
        out.push_back({p, d.degree, "tanisaki", std::to_string(d.actual), "minimal"});
    }
    out.push_back({p, 0, "tanisaki", verdict_name(v.verdict), "verdict"});
    return out;
}

std::vector<CsvRow> csv_rows(const GeneratorSet& G) {
    std::vector<int> by_degree(G.max_degree() + 1, 0);
    for (const auto& g : G.generators) ++by_degree[g.degree];
    std::vector<CsvRow> out;
    for (std::size_t d = 1; d < by_degree.size(); ++d)
        if (by_degree[d]) out.push_back({G.partition.str(), static_cast<int>(d), G.builder, std::to_string(by_degree[d]), "generators"});
    return out;
}

}  // namespace dpgens
