#pragma once

// Distance-indexed edge probability sequences p(1), p(2), ...
//
// A sequence is a finite, ordered list of matching rules. Evaluation returns
// the value of the first rule matching the index and 0 when none matches.
// Sequences are immutable once built; every constructor below validates its
// inputs and records the parameters it was built from so the sequence can
// be serialized and rebuilt.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace zolab {

class Graph;

using Index = std::int64_t;
constexpr Index kMaxIndex = std::numeric_limits<Index>::max();

struct PointRule {
    Index index;
    double value;
};

// Closed interval [lo, hi]. Constant rules yield `param`; reciprocal rules
// yield 1 / (param * i).
struct IntervalRule {
    enum class Formula { Constant, Reciprocal };
    Index lo;
    Index hi;
    Formula formula;
    double param;

    double value_at(Index i) const {
        return formula == Formula::Constant ? param : 1.0 / (param * static_cast<double>(i));
    }
};

// Matches base^j for j = 0, 1, ...
struct PowerRule {
    Index base;
    double value;
};

// Matches i whenever a keyed hash of (seed, i) has its low bit set; value 1.
struct HashRule {
    std::uint64_t seed;
};

using Rule = std::variant<PointRule, IntervalRule, PowerRule, HashRule>;

struct SeqMeta {
    std::map<std::string, std::vector<Index>> ints;
    std::map<std::string, std::vector<double>> reals;
};

class ProbSeq {
public:
    // Rejects rules whose matchers overlap with conflicting values and any
    // rule producing a value outside [0, 1].
    ProbSeq(std::string kind, nlohmann::json params, std::vector<Rule> rules,
            SeqMeta meta = {}, std::vector<std::string> warnings = {},
            std::optional<std::uint64_t> seed = std::nullopt);

    // p(i); i >= 1.
    double operator()(Index i) const;

    const std::string& kind() const noexcept { return kind_; }
    const nlohmann::json& params() const noexcept { return params_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const SeqMeta& meta() const noexcept { return meta_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }

    // Named integer list retained from construction; empty when absent.
    std::vector<Index> meta_ints(const std::string& name) const;

private:
    std::string kind_;
    nlohmann::json params_;
    std::vector<Rule> rules_;
    SeqMeta meta_;
    std::vector<std::string> warnings_;
    std::optional<std::uint64_t> seed_;
};

inline double eval(const ProbSeq& seq, Index i) { return seq(i); }

// -- constructors -----------------------------------------------------------

ProbSeq make_constant(double p);

// 1/2 up to b(1), 1/(3ik) on each (b(2m-1), b(2m)], 0 elsewhere.
ProbSeq make_thm1(Index k, const std::vector<Index>& b);

// f lists f(2), f(3), ...; p(i) = 1/m on [f(m) - m^3, f(m)].
ProbSeq make_thm2(const std::vector<Index>& f);

// b0 is the left end of the first i^-0.2 block; b lists b(1), b(2), ...
// Support is {f(i)} for those i whose a(i) is defined and lies in (0, 1).
ProbSeq make_example2(Index b0, const std::vector<Index>& b, const std::vector<Index>& f);

// Support placement computed by the growth recursion (see make_thm3_eq5_f).
struct Eq5 {};
ProbSeq make_thm3(const std::vector<double>& a, const std::vector<Index>& f);
ProbSeq make_thm3(const std::vector<double>& a, Eq5);
// f(1) = 1 and, for i >= 2 while a(i+1) exists,
// f(i) = ceil(max{(i+1)/a(i+1), 4 i f(i-1) [1 - max_{j<i} a(j)]^{-f(i-1)^2}}).
// Throws IndexOverflow naming the first term past the 64-bit budget.
std::vector<Index> make_thm3_eq5_f(const std::vector<double>& a);

// p(floor(3^i / a(i))) = a(i).
ProbSeq make_thm6(const std::vector<double>& a);

// Independent fair {0,1} values derived from (seed, i) by hashing.
ProbSeq make_random_binary(std::uint64_t seed);

// p(i) = 1 iff i = base^j, j >= 0.
ProbSeq make_ones_powers(Index base);

// a(i) placed at 1 + sum_{j<=i} (1 + gap(j)), zeros elsewhere.
ProbSeq make_diluted(const std::vector<double>& a, const std::vector<Index>& gap);

// Free-form sequence: isolated points plus constant intervals.
struct ConstantInterval {
    Index lo;
    Index hi;
    double value;
};
ProbSeq make_explicit(const std::vector<std::pair<Index, double>>& points,
                      const std::vector<ConstantInterval>& intervals = {});

// -- analysis ---------------------------------------------------------------

// Sorted i <= n with p(i) > 0.
std::vector<Index> support_upto(const ProbSeq& seq, Index n);

// sum_{i<=n} ln(1 - p(i)); -infinity iff some p(i) = 1 with i <= n.
double log_partial_product(const ProbSeq& seq, Index n);

enum class ConditionKind { C2, C3Sum, C5 };

// C2: log_partial_product / ln n (n >= 2). C3Sum: sum p(i). C5: sum i ln(1 - p(i)).
double condition_statistic(const ProbSeq& seq, Index n, ConditionKind kind);

// P(H = G(l, p)) > 0 for h on {1..l}.
bool is_admissible(const ProbSeq& seq, const Graph& h);

// -- serialization ----------------------------------------------------------

// {"kind": ..., "params": {...}, "meta": {...}}
nlohmann::json to_json(const ProbSeq& seq);
// Rebuilds through the named constructor; meta in the input is ignored.
ProbSeq seq_from_json(const nlohmann::json& doc);

}  // namespace zolab
