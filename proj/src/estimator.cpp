#include "zolab/estimator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>

#include <boost/math/distributions/normal.hpp>

#include "zolab/error.hpp"

namespace zolab {

std::string_view to_string(ModelKind kind) { return kind == ModelKind::Line ? "line" : "circle"; }

ModelKind parse_model_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "line") return ModelKind::Line;
    if (lower == "circle") return ModelKind::Circle;
    throw InvalidArgument("unknown model kind '" + std::string(text) + "' (expected line or circle)");
}

Target sentence_target(std::string name, Formula sentence, Vocabulary vocab) {
    validate(sentence, vocab);
    if (!free_variables(sentence).empty()) throw InvalidArgument("target '" + name + "' is not a sentence");
    return {std::move(name), [f = std::move(sentence), vocab](const Graph& g) {
                return holds(LabeledModel(g, vocab), f);
            }};
}

Target library_target(std::string_view name, int k) {
    for (const LibraryEntry& e : library_entries())
        if (e.name == name) return library_target(name, k, e.vocab);
    throw InvalidArgument("unknown library sentence '" + std::string(name) + "'");
}

Target library_target(std::string_view name, int k, Vocabulary vocab) {
    std::string label(name);
    if (name == "extension_Ak") label += "(" + std::to_string(k) + ")";
    return sentence_target(std::move(label), library(name, k), vocab);
}

Target psi_target(std::int64_t f_r) {
    if (f_r < 1) throw InvalidArgument("f(r) must be positive");
    return {"psi(" + std::to_string(f_r) + ")", [f_r](const Graph& g) { return psi_r_holds(g, f_r); }};
}

Target exact_copy_target(Graph h) {
    std::string name = "exact_copy(n=" + std::to_string(h.n()) + ",m=" + std::to_string(h.edge_count()) + ")";
    return {std::move(name), [h = std::move(h)](const Graph& g) {
                return g.n() >= h.n() && !exact_copy_offsets(g, h, 1, g.n()).empty();
            }};
}

int copies_in_log_window(const Graph& g, const Graph& h) {
    const int margin = static_cast<int>(std::ceil(std::log(static_cast<double>(g.n()))));
    const int lo = std::max(1, margin), hi = g.n() - margin;
    if (hi - lo + 1 < h.n()) return 0;
    return max_disjoint_exact_copies(g, h, lo, hi);
}

bool ex2_path4_native(const Graph& g) {
    const int n = g.n();
    const auto& first = g.neighbors(1);
    // reach[b] marks vertices b != 1 adjacent to some a != 1 in N(x).
    std::vector<char> reach(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < first.size(); ++i) {
        const Vertex x = first[i];
        std::fill(reach.begin(), reach.end(), 0);
        for (Vertex a : g.neighbors(x)) {
            if (a == 1) continue;
            for (Vertex b : g.neighbors(a))
                if (b != 1) reach[static_cast<std::size_t>(b)] = 1;
        }
        for (std::size_t j = 0; j < first.size(); ++j) {
            const Vertex y = first[j];
            if (y == x) continue;
            bool joined = false;
            for (Vertex c : g.neighbors(y)) {
                if (c == 1) continue;
                for (Vertex b : g.neighbors(c))
                    if (reach[static_cast<std::size_t>(b)]) {
                        joined = true;
                        break;
                    }
                if (joined) break;
            }
            if (!joined) return false;
        }
    }
    return true;
}

Target triangle_native_target() {
    return {"triangle", [](const Graph& g) { return count_triangles(g) > 0; }};
}

Target disjoint_copies_target(Graph h, int c) {
    std::string name = "copies>=" + std::to_string(c);
    return {std::move(name), [h = std::move(h), c](const Graph& g) { return copies_in_log_window(g, h) >= c; }};
}

EstimateResult exact_result(int n, double value, std::string target, ModelKind kind) {
    EstimateResult r;
    r.n = n;
    r.estimate = r.ci_low = r.ci_high = value;
    r.trials = 0;
    r.target = std::move(target);
    r.model_kind = kind;
    return r;
}

Interval wilson_ci(std::uint64_t successes, std::uint64_t trials, double level) {
    if (trials == 0) throw InvalidArgument("wilson_ci needs at least one trial");
    if (successes > trials) throw InvalidArgument("successes exceed trials");
    if (!(level > 0 && level < 1)) throw InvalidArgument("confidence level must lie in (0, 1)");
    const double z = boost::math::quantile(boost::math::normal(), 1 - (1 - level) / 2);
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double denom = 1 + z2 / t;
    const double center = (p + z2 / (2 * t)) / denom;
    const double half = z / denom * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t));
    Interval out{std::clamp(center - half, 0.0, 1.0), std::clamp(center + half, 0.0, 1.0)};
    if (successes == 0) out.low = 0;
    if (successes == trials) out.high = 1;
    out.low = std::min(out.low, p);
    out.high = std::max(out.high, p);
    return out;
}

namespace {

EstimateResult finish(int n, std::uint64_t successes, std::uint64_t trials, std::uint64_t master_seed,
                      const Target& target, ModelKind kind) {
    EstimateResult r;
    r.n = n;
    r.trials = trials;
    r.master_seed = master_seed;
    r.target = target.name;
    r.model_kind = kind;
    r.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    const Interval ci = wilson_ci(successes, trials);
    r.ci_low = ci.low;
    r.ci_high = ci.high;
    return r;
}

void check_trials(std::uint64_t trials) {
    if (trials == 0) throw InvalidArgument("trials must be at least 1");
}

}  // namespace

EstimateResult mc_probability_serial(const ProbSeq& seq, int n, const Target& target, ModelKind kind,
                                     std::uint64_t trials, std::uint64_t master_seed) {
    check_trials(trials);
    const SamplingPlan plan(seq, n, kind);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t)
        if (target.predicate(plan.sample(RngStream{master_seed, trial_stream(n, t)}))) ++successes;
    return finish(n, successes, trials, master_seed, target, kind);
}

EstimateResult mc_probability(const ProbSeq& seq, int n, const Target& target, ModelKind kind,
                              std::uint64_t trials, std::uint64_t master_seed) {
    check_trials(trials);
    const SamplingPlan plan(seq, n, kind);
    std::uint64_t successes = 0;
    std::exception_ptr failure;
    const auto count = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : successes)
    for (long long t = 0; t < count; ++t) {
        try {
            const auto stream = RngStream{master_seed, trial_stream(n, static_cast<std::uint64_t>(t))};
            if (target.predicate(plan.sample(stream))) ++successes;
        } catch (...) {
#pragma omp critical(zolab_mc_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return finish(n, successes, trials, master_seed, target, kind);
}

std::vector<EstimateResult> scan(const ProbSeq& seq, const Target& target, ModelKind kind,
                                 const std::vector<int>& n_list, std::uint64_t trials, std::uint64_t master_seed) {
    if (n_list.empty()) throw InvalidArgument("scan needs at least one n");
    std::vector<EstimateResult> out;
    out.reserve(n_list.size());
    for (int n : n_list) out.push_back(mc_probability(seq, n, target, kind, trials, master_seed));
    return out;
}

double exact_path2(const ProbSeq& seq, int n) {
    if (n < 3) throw InvalidArgument("exact_path2 needs n >= 3");
    double log_miss = 0;
    for (int v = 2; v <= n - 1; ++v) {
        const double q = seq(v - 1) * seq(n - v);
        if (q >= 1) return 1.0;
        log_miss += std::log1p(-q);
    }
    return std::max(0.0, -std::expm1(log_miss));
}

TriangleFamily triangle_circle_family(const ProbSeq& seq, int n) {
    if (n < 3) return {true, true, {}};
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    for (int a = 1; a < n; ++a) p[static_cast<std::size_t>(a)] = seq(std::min(a, n - a));
    TriangleFamily out{true, true, {}};
    for (int a1 = 1; a1 <= n - 2; ++a1) {
        if (p[static_cast<std::size_t>(a1)] <= 0) continue;
        for (int a2 = 1; a1 + a2 <= n - 1; ++a2) {
            const int a3 = n - a1 - a2;
            if (p[static_cast<std::size_t>(a2)] <= 0 || p[static_cast<std::size_t>(a3)] <= 0) continue;
            out.empty = false;
            if (3 * a1 != n || 3 * a2 != n) {
                out.valid = false;
                out.reason = "triangle with arcs (" + std::to_string(a1) + "," + std::to_string(a2) + "," +
                             std::to_string(a3) + ") has positive probability";
                return out;
            }
        }
    }
    return out;
}

double exact_triangle_circle(const ProbSeq& seq, int n) {
    const TriangleFamily family = triangle_circle_family(seq, n);
    if (!family.valid)
        throw OracleNotApplicable("closed form does not apply at n=" + std::to_string(n) + ": " + family.reason +
                                  "; use brute force or Monte Carlo");
    if (family.empty) return 0.0;
    const int m = n / 3;
    const double q = std::pow(seq(m), 3);
    if (q >= 1) return 1.0;
    return std::max(0.0, -std::expm1(m * std::log1p(-q)));
}

double brute_force_probability(const ProbSeq& seq, int n, const Target& target, ModelKind kind, int max_pairs) {
    const SamplingPlan plan(seq, n, kind);
    EdgeList fixed;
    std::vector<std::pair<Vertex, Vertex>> free_pairs;
    std::vector<double> probs;
    for (Vertex v = 1; v <= n; ++v)
        for (Vertex w = v + 1; w <= n; ++w) {
            const double p = plan.pair_probability(v, w);
            if (p >= 1) {
                fixed.emplace_back(v, w);
            } else if (p > 0) {
                free_pairs.emplace_back(v, w);
                probs.push_back(p);
            }
        }
    const int m = static_cast<int>(free_pairs.size());
    if (m > max_pairs)
        throw BudgetExceeded("brute force would enumerate 2^" + std::to_string(m) + " graphs (limit 2^" +
                             std::to_string(max_pairs) + ")");
    double total = 0;
    const std::uint64_t count = 1ULL << m;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        double weight = 1;
        EdgeList edges = fixed;
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1ULL) {
                weight *= probs[static_cast<std::size_t>(i)];
                edges.push_back(free_pairs[static_cast<std::size_t>(i)]);
            } else {
                weight *= 1 - probs[static_cast<std::size_t>(i)];
            }
        }
        if (target.predicate(Graph(n, std::move(edges)))) total += weight;
    }
    return total;
}

MarkovComparison markov_triangle_comparison(const ProbSeq& seq, int n, std::uint64_t trials,
                                            std::uint64_t master_seed) {
    check_trials(trials);
    const SamplingPlan small(seq, n, ModelKind::Line), large(seq, n + 1, ModelKind::Line);
    const auto count = static_cast<long long>(trials);
    std::vector<std::uint64_t> chain_counts(trials), direct_counts(trials);
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < count; ++t) {
        const RngStream base{master_seed, trial_stream(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t))};
        const Graph g = small.sample(base.substream(1));
        chain_counts[static_cast<std::size_t>(t)] = count_triangles(markov_step(g, seq, base.substream(2)));
        direct_counts[static_cast<std::size_t>(t)] = count_triangles(large.sample(base.substream(3)));
    }
    const std::uint64_t top = std::max(*std::max_element(chain_counts.begin(), chain_counts.end()),
                                       *std::max_element(direct_counts.begin(), direct_counts.end()));
    MarkovComparison out;
    out.chain.assign(top + 1, 0.0);
    out.direct.assign(top + 1, 0.0);
    const double unit = 1.0 / static_cast<double>(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        out.chain[chain_counts[t]] += unit;
        out.direct[direct_counts[t]] += unit;
    }
    double l1 = 0;
    for (std::size_t i = 0; i <= top; ++i) l1 += std::abs(out.chain[i] - out.direct[i]);
    out.tv = l1 / 2;
    return out;
}

double log_expected_exact_copies(const ProbSeq& seq, int n, const Graph& h) {
    const int l = h.n();
    const double none = -std::numeric_limits<double>::infinity();
    if (l > n) return none;
    // Prefix sums over distances of log(1 - p) and of the count of p = 1.
    std::vector<double> logq(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> ones(static_cast<std::size_t>(n) + 1, 0);
    for (int d = 1; d <= n; ++d) {
        const double p = seq(d);
        const auto i = static_cast<std::size_t>(d);
        ones[i] = ones[i - 1] + (p >= 1 ? 1 : 0);
        logq[i] = logq[i - 1] + (p >= 1 ? 0.0 : std::log1p(-p));
    }
    double inside = 0;
    for (Vertex v = 1; v <= l; ++v)
        for (Vertex w = v + 1; w <= l; ++w) {
            const double p = seq(w - v);
            const double q = h.has_edge(v, w) ? p : 1 - p;
            if (q <= 0) return none;
            inside += std::log(q);
        }
    // Log-probability that no edge joins distances (lo, hi].
    auto gap = [&](int lo, int hi) -> double {
        if (hi <= lo) return 0.0;
        const auto a = static_cast<std::size_t>(lo), b = static_cast<std::size_t>(hi);
        if (ones[b] != ones[a]) return none;
        return logq[b] - logq[a];
    };
    std::vector<double> terms;
    for (int i = 0; i + l <= n; ++i) {
        double crossing = 0;
        for (int t = 1; t <= l && crossing > none; ++t) {
            crossing += gap(t - 1, i + t - 1);
            crossing += gap(l - t, n - i - t);
        }
        if (crossing > none) terms.push_back(inside + crossing);
    }
    if (terms.empty()) return none;
    const double top = *std::max_element(terms.begin(), terms.end());
    double sum = 0;
    for (double t : terms) sum += std::exp(t - top);
    return top + std::log(sum);
}

std::string csv_header() { return "n,estimate,ci_low,ci_high,trials,master_seed,target,model_kind"; }

std::string csv_row(const EstimateResult& r) {
    char numbers[160];
    std::snprintf(numbers, sizeof numbers, "%d,%.12g,%.12g,%.12g,%llu,%llu", r.n, r.estimate, r.ci_low, r.ci_high,
                  static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(r.master_seed));
    std::string target = r.target;
    if (target.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : target) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        target = quoted + "\"";
    }
    return std::string(numbers) + "," + target + "," + std::string(to_string(r.model_kind));
}

}  // namespace zolab
