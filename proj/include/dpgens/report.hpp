#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dpgens/gensets.hpp"
#include "dpgens/partition.hpp"
#include "dpgens/polynomial.hpp"
#include "dpgens/verify.hpp"

namespace dpgens {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Partition& p);
json to_json(const Filling& f);
Filling filling_from_json(const json& j);
json to_json(const WeymanDiagram& w, const std::vector<std::pair<int, int>>& marked);
// Inverse of render_ascii for fillings.
Filling parse_filling_ascii(const std::string& text);

// [{"coef": "2", "exponents": [[1, 2], [3, 1]]}, ...] in grevlex order.
json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const json& j);

json to_json(const GeneratorSet& G);
GeneratorSet generator_set_from_json(const json& j);
// One polynomial per line, "*" and "^", a trailing comma on all but the last.
std::string cas_listing(const GeneratorSet& G);
std::string generator_text(const GeneratorSet& G);

json to_json(const CountTable& t);
std::string count_text(const CountTable& t);

json to_json(const AlgorithmState& a);
std::string algorithm_text(const AlgorithmState& a);

json to_json(const GradedReport& r);
std::string graded_text(const GradedReport& r);

json to_json(const EqualityResult& r, const GeneratorSet& A, const GeneratorSet& B);
std::string equality_text(const EqualityResult& r, const GeneratorSet& A, const GeneratorSet& B);

json to_json(const ConjectureVerdict& v);
std::string conjecture_text(const ConjectureVerdict& v);
std::string scan_text(int n, const std::vector<ConjectureVerdict>& vs);
json scan_json(int n, const std::vector<ConjectureVerdict>& vs);

// CSV rows: partition,degree,builder,count,kind
struct CsvRow {
    std::string partition;
    int degree = 0;
    std::string builder;
    std::string count;
    std::string kind;
};
std::string csv_header();
std::string csv(const std::vector<CsvRow>& rows);
std::vector<CsvRow> csv_rows(const GradedReport& r);
std::vector<CsvRow> csv_rows(const ConjectureVerdict& v);
std::vector<CsvRow> csv_rows(const GeneratorSet& G);

}  // namespace dpgens
