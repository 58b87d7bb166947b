#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zolab/logic.hpp"
#include "zolab/sampler.hpp"

namespace zolab {

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);  // "line" / "circle", case-insensitive

// A named graph property. Predicates must be safe to call concurrently.
struct Target {
    std::string name;
    std::function<bool(const Graph&)> predicate;
};

Target sentence_target(std::string name, Formula sentence, Vocabulary vocab);
// Library sentence read in its own vocabulary, or `vocab` when given.
Target library_target(std::string_view name, int k = 1);
Target library_target(std::string_view name, int k, Vocabulary vocab);
// Some cutpoint v with 2 f_r <= v <= n - 2 f_r.
Target psi_target(std::int64_t f_r);
// Some block of the graph is an exact copy of h.
Target exact_copy_target(Graph h);
// At least `c` vertex-disjoint exact copies of h inside the window
// [ceil(ln n), n - ceil(ln n)].
Target disjoint_copies_target(Graph h, int c);
int copies_in_log_window(const Graph& g, const Graph& h);

// Same truth value as library("ex2_path4") under L_PLUS, computed from
// neighbour sets instead of the depth-5 quantifier nest.
bool ex2_path4_native(const Graph& g);

// Same truth value as library("triangle"), via count_triangles.
Target triangle_native_target();

struct EstimateResult {
    int n = 0;
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t trials = 0;  // 0 for exact values
    std::uint64_t master_seed = 0;
    std::string target;
    ModelKind model_kind = ModelKind::Line;
};

// Wraps an exact value: trials = 0, ci_low = ci_high = estimate.
EstimateResult exact_result(int n, double value, std::string target, ModelKind kind);

struct Interval {
    double low;
    double high;
};

// Wilson score interval. Throws InvalidArgument when trials = 0 or
// successes > trials.
Interval wilson_ci(std::uint64_t successes, std::uint64_t trials, double level = 0.95);

// Trial t samples with stream trial_stream(n, t) under master_seed. The
// OpenMP and serial versions return identical results.
EstimateResult mc_probability(const ProbSeq& seq, int n, const Target& target, ModelKind kind,
                              std::uint64_t trials, std::uint64_t master_seed);
EstimateResult mc_probability_serial(const ProbSeq& seq, int n, const Target& target, ModelKind kind,
                                     std::uint64_t trials, std::uint64_t master_seed);

std::vector<EstimateResult> scan(const ProbSeq& seq, const Target& target, ModelKind kind,
                                 const std::vector<int>& n_list, std::uint64_t trials, std::uint64_t master_seed);

// P(first and last have a common neighbour) on the line, n >= 3.
double exact_path2(const ProbSeq& seq, int n);

struct TriangleFamily {
    bool valid = false;        // closed form applies
    bool empty = false;        // no positive-probability triangle at all
    std::string reason;        // why the closed form does not apply
};

// Classifies the positive-probability triangles of C(n, p) by their arc
// lengths (a1, a2, a3), a1 + a2 + a3 = n. Valid when none exist or all are
// (n/3, n/3, n/3).
TriangleFamily triangle_circle_family(const ProbSeq& seq, int n);

// 1 - (1 - p(n/3)^3)^(n/3), or 0 when no triangle can occur. Throws
// OracleNotApplicable when triangle_circle_family rejects.
double exact_triangle_circle(const ProbSeq& seq, int n);

constexpr int kBruteForceMaxPairs = 21;

// Sums the target over every graph, enumerating only pairs with 0 < p < 1.
// Throws BudgetExceeded when more than max_pairs such pairs exist.
double brute_force_probability(const ProbSeq& seq, int n, const Target& target, ModelKind kind,
                               int max_pairs = kBruteForceMaxPairs);

// Triangle-count distributions of markov_step(G(n)) and G(n + 1) on the line
// and their total-variation distance.
struct MarkovComparison {
    std::vector<double> chain;
    std::vector<double> direct;
    double tv = 0;
};
MarkovComparison markov_triangle_comparison(const ProbSeq& seq, int n, std::uint64_t trials,
                                            std::uint64_t master_seed);

// Natural log of the expected number of exact copies of h in G(n, p) on the
// line; -infinity when no copy can occur.
double log_expected_exact_copies(const ProbSeq& seq, int n, const Graph& h);

std::string csv_header();
std::string csv_row(const EstimateResult& r);

}  // namespace zolab
