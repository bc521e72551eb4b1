#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpgens/engine.hpp"
#include "dpgens/gensets.hpp"
#include "dpgens/linalg.hpp"
#include "dpgens/partition.hpp"

namespace dpgens {

enum class Mode { exact, modular, automatic };
std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct VerifyConfig {
    Mode mode = Mode::automatic;
    std::uint64_t column_cap = 600000;
    // automatic picks exact arithmetic while every graded piece has at most
    // this many columns
    std::uint64_t exact_auto_limit = 20000;
    std::uint64_t seed = 1;
    int primes = 2;
    ProgressFn progress;
};

// The arithmetic actually used for one computation.
struct Backend {
    bool exact = true;
    std::vector<std::uint32_t> primes;
    std::string str() const;
};
Backend resolve_backend(const VerifyConfig& cfg, int n, int max_degree);

// A generator is absorbed when each of its terms is divisible by a monomial
// generator of no larger degree that is not the generator itself; it then
// lies in the ideal of the others without any linear algebra.
std::vector<bool> absorbed_generators(const std::vector<Polynomial>& gens);

struct DegreeRow {
    int degree = 0;
    std::uint64_t columns = 0;
    std::uint64_t generators = 0;  // generators of this degree in the set
    std::uint64_t absorbed = 0;
    bool computed = false;         // false: every generator here is absorbed, beta is 0
    std::uint64_t dim_ideal = 0;
    std::uint64_t dim_shifted = 0;  // dim (R_+ I)_d
    std::uint64_t beta = 0;
    bool primes_disagree = false;
    double seconds = 0;
};

struct GradedReport {
    std::string partition;
    std::string builder;
    int n = 0;
    Backend backend;
    std::uint64_t seed = 0;
    std::vector<DegreeRow> degrees;
    std::uint64_t total = 0;
    int max_generator_degree = 0;
    int computed_through = 0;  // last degree handled by linear algebra
    bool complete = false;     // every degree carrying generators is accounted for
    bool primes_disagree = false;
    std::optional<std::string> refusal;  // budget message when stopped early
    std::uint64_t beta(int d) const;
};

// Minimal generator counts per degree. Degrees past max_d (when >= 0) are
// left out. A budget overrun stops the computation and is recorded in
// `refusal` rather than thrown.
GradedReport betti_counts(const GeneratorSet& G, int max_d, const VerifyConfig& cfg);

struct MembershipResult {
    bool member = false;
    bool certified = false;  // exact computation, or a checked certificate
    Backend backend;
    std::optional<Certificate> certificate;
};

// `certificate_rows` bounds the exact span matrix built for a certificate;
// 0 disables certificates.
MembershipResult membership(const Polynomial& f, const GeneratorSet& G, const VerifyConfig& cfg,
                            std::size_t certificate_rows = 0);

struct EqualityFailure {
    bool first_in_second = true;  // which inclusion failed
    std::size_t index = 0;        // index of the generator in its set
    LabeledGenerator generator;
};

struct EqualityResult {
    bool equal = false;
    bool certified = false;
    Backend backend;
    std::optional<EqualityFailure> failure;
    std::uint64_t checked = 0;   // memberships decided by linear algebra
    std::uint64_t absorbed = 0;  // memberships decided by monomial divisibility
    int max_degree = 0;
};

EqualityResult ideal_equal(const GeneratorSet& A, const GeneratorSet& B, const VerifyConfig& cfg);

enum class Verdict { confirms, counterexample, not_applicable, refused };
std::string verdict_name(Verdict v);

enum class CellVerdict { needed, redundant, partial };
std::string cell_verdict_name(CellVerdict v);

struct CellResult {
    int i = 0;
    int p = 0;
    mpz_class predicted;  // C(n,i) - C(n,i-1)
    CellVerdict verdict = CellVerdict::needed;
};

struct DegreeComparison {
    int degree = 0;
    mpz_class predicted;
    std::uint64_t actual = 0;
};

struct ConjectureVerdict {
    Partition partition;
    std::vector<CellResult> cells;
    std::vector<DegreeComparison> degrees;
    Verdict verdict = Verdict::confirms;
    // Degrees whose minimal count is larger than predicted. The prediction
    // then undercounts, which is not what the conjecture is about.
    std::vector<int> excess_degrees;
    std::string note;
    GradedReport report;
};

// Predicted counts: one generator in each degree 1..l(lambda) plus
// C(n,i) - C(n,i-1) for every conjectured cell (i,p) in degree p, compared
// with the minimal counts of the Tanisaki ideal degree by degree. A
// counterexample is a degree holding conjectured cells whose minimal count
// falls short of the prediction; cells sharing a degree are judged together.
ConjectureVerdict check_conjecture(const Partition& lambda, const VerifyConfig& cfg);

// check_conjecture over every partition of n, `jobs` at a time, in the
// order of partitions_of.
std::vector<ConjectureVerdict> scan(int n, const VerifyConfig& cfg, int jobs = 1);

// Partitions of the shapes that defeat the prediction: (u^a,(u-1)^c,1) with
// u >= 3 and at least four columns, and (u^a,(u-1)^c,1,1) with u >= 4 and at
// least five columns.
bool in_counterexample_family(const Partition& lambda);

}  // namespace dpgens
