#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dpgens/gensets.hpp"
#include "dpgens/partition.hpp"
#include "dpgens/report.hpp"
#include "dpgens/verify.hpp"

using namespace dpgens;

namespace {

enum Exit { kOk = 0, kFail = 1, kBudget = 2, kUsage = 3 };

struct RunConfig {
    std::string partition;
    std::string format = "text";
    bool exact = false;
    bool modular = false;
    int max_degree = -1;
    std::uint64_t column_cap = 600000;
    int jobs = 1;
    std::uint64_t seed = 1;
    std::string out;
    bool quiet = false;
    int scan_limit = 14;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("bad partition \"") + text + "\": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad partition \"") + text + "\": " + e.what());
    }
}

VerifyConfig verify_config(const RunConfig& rc) {
    VerifyConfig cfg;
    if (rc.exact && rc.modular) throw UsageError("--exact and --modular are exclusive");
    cfg.mode = rc.exact ? Mode::exact : rc.modular ? Mode::modular : Mode::automatic;
    cfg.column_cap = rc.column_cap;
    cfg.seed = rc.seed;
    if (!rc.quiet) cfg.progress = [](const std::string& s) { std::cerr << s << std::endl; };
    return cfg;
}

void emit(const RunConfig& rc, const std::string& text) {
    if (rc.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(rc.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + rc.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& rc, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (rc.format == a) return;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw UsageError("format " + rc.format + " not available here (" + list + ")");
}

GeneratorSet build(const Partition& lambda, const std::string& builder, bool* missing = nullptr) {
    if (builder == "tanisaki") return tanisaki(lambda);
    if (builder == "first") return first_reduction(lambda);
    if (builder == "principal") return principal_reduction(lambda);
    if (builder == "columns") return column_elimination(lambda);
    if (builder == "algorithm") return algorithm_g(lambda).G;
    if (builder == "regular") return reading_process(regular_filling(lambda));
    if (builder == "family") {
        auto f = family_set(lambda);
        if (f) return *f;
        if (missing) {
            *missing = true;
            return {};
        }
        throw UsageError(lambda.str() + " is not a recognized family");
    }
    throw UsageError("unknown builder " + builder);
}

const std::vector<std::string> kBuilders = {"tanisaki", "first",     "principal", "columns",
                                            "family",   "algorithm", "regular"};

int cmd_show(const RunConfig& rc, const std::string& what) {
    require_format(rc, {"text", "json"});
    Partition lambda = parse_partition(rc.partition);
    if (what == "weyman") {
        auto w = weyman_diagram(lambda);
        auto marked = conjectured_cells(lambda);
        if (rc.format == "json") {
            json j;
            j["schema_version"] = kSchemaVersion;
            j["partition"] = to_json(lambda);
            j["weyman"] = to_json(w, marked);
            emit(rc, dump(j));
        } else {
            emit(rc, render_ascii(w, marked));
        }
        return kOk;
    }
    Filling f;
    if (what == "regular") f = regular_filling(lambda);
    else if (what == "antidiagonal") f = antidiagonal_filling(lambda);
    else if (what == "deletion") f = rightmost_deletion(antidiagonal_filling(lambda));
    else throw UsageError("unknown diagram " + what);
    if (rc.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["kind"] = what;
        j["filling"] = to_json(f);
        emit(rc, dump(j));
    } else {
        emit(rc, render_ascii(f));
    }
    return kOk;
}

int cmd_genset(const RunConfig& rc, const std::string& builder) {
    require_format(rc, {"text", "json", "csv", "cas"});
    Partition lambda = parse_partition(rc.partition);
    if (builder == "algorithm") {
        auto st = algorithm_g(lambda);
        if (rc.format == "json") emit(rc, dump(to_json(st)));
        else if (rc.format == "csv") emit(rc, csv(csv_rows(st.G)));
        else if (rc.format == "cas") emit(rc, cas_listing(st.G));
        else emit(rc, algorithm_text(st));
        return kOk;
    }
    bool missing = false;
    GeneratorSet G = build(lambda, builder, &missing);
    if (missing) {
        if (rc.format == "json") {
            json j;
            j["schema_version"] = kSchemaVersion;
            j["partition"] = to_json(lambda);
            j["builder"] = "family";
            j["family"] = nullptr;
            emit(rc, dump(j));
        } else if (rc.format == "text") {
            emit(rc, lambda.str() + ": not a recognized family\n");
        } else if (rc.format == "csv") {
            emit(rc, csv_header());
        } else {
            emit(rc, "");
        }
        return kOk;
    }
    if (rc.format == "json") emit(rc, dump(to_json(G)));
    else if (rc.format == "csv") emit(rc, csv(csv_rows(G)));
    else if (rc.format == "cas") emit(rc, cas_listing(G));
    else emit(rc, generator_text(G));
    return kOk;
}

int cmd_count(const RunConfig& rc) {
    require_format(rc, {"text", "json"});
    auto t = count_table(parse_partition(rc.partition));
    emit(rc, rc.format == "json" ? dump(to_json(t)) : count_text(t));
    return kOk;
}

int cmd_verify(const RunConfig& rc, const std::string& a, const std::string& b, const std::string& other) {
    require_format(rc, {"text", "json"});
    Partition lambda = parse_partition(rc.partition);
    Partition mu = other.empty() ? lambda : parse_partition(other);
    if (mu.size() != lambda.size()) throw UsageError("both partitions must have the same size");
    GeneratorSet A = build(lambda, a), B = build(mu, b);
    VerifyConfig cfg = verify_config(rc);
    EqualityResult r;
    try {
        r = ideal_equal(A, B, cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        if (rc.format == "json") {
            json j;
            j["schema_version"] = kSchemaVersion;
            j["partition"] = to_json(lambda);
            j["first"] = A.builder;
            j["second"] = B.builder;
            j["refusal"] = {{"n", e.n}, {"degree", e.d}, {"columns", e.columns}, {"cap", e.cap}};
            emit(rc, dump(j));
        } else {
            emit(rc, std::string("REFUSED ") + e.what() + "\n");
        }
        return kBudget;
    }
    emit(rc, rc.format == "json" ? dump(to_json(r, A, B)) : equality_text(r, A, B));
    return r.equal ? kOk : kFail;
}

int cmd_betti(const RunConfig& rc, const std::string& builder) {
    require_format(rc, {"text", "json", "csv"});
    Partition lambda = parse_partition(rc.partition);
    GeneratorSet G = build(lambda, builder);
    GradedReport r = betti_counts(G, rc.max_degree, verify_config(rc));
    if (rc.format == "json") emit(rc, dump(to_json(r)));
    else if (rc.format == "csv") emit(rc, csv(csv_rows(r)));
    else emit(rc, graded_text(r));
    if (r.refusal) std::cerr << "refused: " << *r.refusal << '\n';
    return r.refusal ? kBudget : kOk;
}

int cmd_conjecture(const RunConfig& rc) {
    require_format(rc, {"text", "json", "csv"});
    auto v = check_conjecture(parse_partition(rc.partition), verify_config(rc));
    if (rc.format == "json") emit(rc, dump(to_json(v)));
    else if (rc.format == "csv") emit(rc, csv(csv_rows(v)));
    else emit(rc, conjecture_text(v));
    return v.verdict == Verdict::refused ? kBudget : kOk;
}

int cmd_scan(const RunConfig& rc, int n) {
    require_format(rc, {"text", "json", "csv"});
    if (n < 1) throw UsageError("scan bound must be positive");
    if (n > rc.scan_limit)
        throw UsageError("scan bound " + std::to_string(n) + " exceeds the limit " + std::to_string(rc.scan_limit));
    if (rc.jobs < 1) throw UsageError("--jobs must be positive");
    VerifyConfig cfg = verify_config(rc);
    auto vs = scan(n, cfg, rc.jobs);
    if (rc.format == "json") {
        emit(rc, dump(scan_json(n, vs)));
    } else if (rc.format == "csv") {
        std::vector<CsvRow> rows;
        for (const auto& v : vs) {
            auto r = csv_rows(v);
            rows.insert(rows.end(), r.begin(), r.end());
        }
        emit(rc, csv(rows));
    } else {
        emit(rc, scan_text(n, vs));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generating sets for De Concini-Procesi ideals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "dpgens 0.1");
    RunConfig rc;

    auto common = [&](CLI::App* s, bool needs_partition) {
        auto* p = s->add_option("-p,--partition,partition", rc.partition, "partition, e.g. 4,4,2,1 or 5,4^2,3");
        if (needs_partition) p->required();
        s->add_option("--format", rc.format, "output format")->envname("DPGENS_FORMAT");
        s->add_option("--out", rc.out, "write the report to this file")->envname("DPGENS_OUT");
    };
    auto linear = [&](CLI::App* s) {
        s->add_flag("--exact", rc.exact, "rational arithmetic throughout");
        s->add_flag("--modular", rc.modular, "arithmetic modulo two random primes");
        s->add_option("--column-cap", rc.column_cap, "refuse graded pieces with more columns")
            ->envname("DPGENS_COLUMN_CAP");
        s->add_option("--seed", rc.seed, "seed for prime selection")->envname("DPGENS_SEED");
        s->add_flag("-q,--quiet", rc.quiet, "no progress lines on stderr");
    };
    auto builder_opt = [&](CLI::App* s, std::string& target) {
        s->add_option("--builder", target, "generating set")
            ->check(CLI::IsMember(kBuilders))
            ->envname("DPGENS_BUILDER");
    };

    std::string show_what = "regular";
    auto* show = app.add_subcommand("show", "print a filling or the Weyman diagram");
    common(show, true);
    show->add_flag_callback("--regular", [&] { show_what = "regular"; }, "regular filling");
    show->add_flag_callback("--antidiagonal", [&] { show_what = "antidiagonal"; }, "antidiagonal filling");
    show->add_flag_callback("--deletion", [&] { show_what = "deletion"; }, "antidiagonal filling after deletion");
    show->add_flag_callback("--weyman", [&] { show_what = "weyman"; }, "Weyman diagram, conjectured cells in []");

    std::string gen_builder = "tanisaki";
    auto* genset = app.add_subcommand("genset", "build a generating set");
    common(genset, true);
    builder_opt(genset, gen_builder);
    for (const auto& b : kBuilders)
        genset->add_flag_callback("--" + b, [&gen_builder, b] { gen_builder = b; }, "same as --builder " + b);

    auto* count = app.add_subcommand("count", "per-column counts without building polynomials");
    common(count, true);

    std::string first = "tanisaki", second = "principal";
    auto* verify = app.add_subcommand("verify", "decide whether two generating sets give the same ideal");
    common(verify, true);
    linear(verify);
    verify->add_option("first", first, "first builder")->check(CLI::IsMember(kBuilders));
    verify->add_option("second", second, "second builder")->check(CLI::IsMember(kBuilders));
    std::string other;
    verify->add_option("--against", other, "build the second set from this partition instead");

    std::string betti_builder = "tanisaki";
    auto* betti = app.add_subcommand("betti", "minimal generator counts per degree");
    common(betti, true);
    linear(betti);
    builder_opt(betti, betti_builder);
    betti->add_option("--max-degree", rc.max_degree, "stop after this degree")->envname("DPGENS_MAX_DEGREE");

    auto* conj = app.add_subcommand("conjecture", "compare minimal counts with the Weyman diagram prediction");
    common(conj, true);
    linear(conj);

    int scan_n = 0;
    auto* sc = app.add_subcommand("scan", "run the conjecture check over every partition of n");
    sc->add_option("n", scan_n, "partition size")->required();
    sc->add_option("--format", rc.format, "output format")->envname("DPGENS_FORMAT");
    sc->add_option("--out", rc.out, "write the report to this file")->envname("DPGENS_OUT");
    sc->add_option("--jobs", rc.jobs, "partitions checked in parallel")->envname("DPGENS_JOBS");
    sc->add_option("--scan-limit", rc.scan_limit, "largest n accepted")->envname("DPGENS_SCAN_LIMIT");
    linear(sc);

    for (auto* s : {show, genset, count, verify, betti, conj, sc})
        s->get_option("--format")->check(CLI::IsMember({"text", "json", "csv", "cas"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*show) return cmd_show(rc, show_what);
        if (*genset) return cmd_genset(rc, gen_builder);
        if (*count) return cmd_count(rc);
        if (*verify) return cmd_verify(rc, first, second, other);
        if (*betti) return cmd_betti(rc, betti_builder);
        if (*conj) return cmd_conjecture(rc);
        if (*sc) return cmd_scan(rc, scan_n);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kBudget;
    }
    return kUsage;
}
