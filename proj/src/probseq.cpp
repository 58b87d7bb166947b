#include "zolab/probseq.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zolab/error.hpp"
#include "zolab/graph.hpp"
#include "zolab/rng.hpp"

namespace zolab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool power_of(Index i, Index base) {
    if (i < 1) return false;
    while (i % base == 0) i /= base;
    return i == 1;
}

bool hash_bit(std::uint64_t seed, Index i) {
    return (rng::hash(seed, static_cast<std::uint64_t>(i), 0x70726e64ULL) & 1ULL) != 0;
}

bool matches(const Rule& rule, Index i) {
    return std::visit(overloaded{
                          [i](const PointRule& r) { return r.index == i; },
                          [i](const IntervalRule& r) { return r.lo <= i && i <= r.hi; },
                          [i](const PowerRule& r) { return power_of(i, r.base); },
                          [i](const HashRule& r) { return hash_bit(r.seed, i); },
                      },
                      rule);
}

double value_of(const Rule& rule, Index i) {
    return std::visit(overloaded{
                          [](const PointRule& r) { return r.value; },
                          [i](const IntervalRule& r) { return r.value_at(i); },
                          [](const PowerRule& r) { return r.value; },
                          [](const HashRule&) { return 1.0; },
                      },
                      rule);
}

std::vector<Index> powers_upto(Index base, Index n) {
    std::vector<Index> out;
    for (Index x = 1;; x *= base) {
        if (x > n) break;
        out.push_back(x);
        if (x > kMaxIndex / base) break;
    }
    return out;
}

// Members of rules with finitely many matches; nullopt otherwise.
std::optional<std::vector<Index>> finite_members(const Rule& rule) {
    if (auto* p = std::get_if<PointRule>(&rule)) return std::vector<Index>{p->index};
    if (auto* p = std::get_if<PowerRule>(&rule)) return powers_upto(p->base, kMaxIndex);
    return std::nullopt;
}

std::vector<Index> members_upto(const Rule& rule, Index n) {
    std::vector<Index> out;
    std::visit(overloaded{
                   [&](const PointRule& r) {
                       if (r.index <= n && r.value > 0) out.push_back(r.index);
                   },
                   [&](const IntervalRule& r) {
                       if (r.formula == IntervalRule::Formula::Constant && r.param == 0) return;
                       for (Index i = r.lo, hi = std::min(r.hi, n); i <= hi; ++i) out.push_back(i);
                   },
                   [&](const PowerRule& r) {
                       if (r.value > 0) out = powers_upto(r.base, n);
                   },
                   [&](const HashRule& r) {
                       for (Index i = 1; i <= n; ++i)
                           if (hash_bit(r.seed, i)) out.push_back(i);
                   },
               },
               rule);
    return out;
}

std::string describe(const Rule& rule) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const PointRule& r) { os << "point " << r.index; },
                   [&](const IntervalRule& r) { os << "interval [" << r.lo << "," << r.hi << "]"; },
                   [&](const PowerRule& r) { os << "powers of " << r.base; },
                   [&](const HashRule& r) { os << "hash(seed=" << r.seed << ")"; },
               },
               rule);
    return os.str();
}

void check_values(const Rule& rule) {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    bool ok = std::visit(overloaded{
                             [&](const PointRule& r) { return r.index >= 1 && in_unit(r.value); },
                             [&](const IntervalRule& r) {
                                 if (r.lo < 1 || r.lo > r.hi) return false;
                                 if (r.formula == IntervalRule::Formula::Constant) return in_unit(r.param);
                                 return r.param > 0 && r.param * static_cast<double>(r.lo) >= 1.0;
                             },
                             [&](const PowerRule& r) { return r.base >= 2 && in_unit(r.value); },
                             [](const HashRule&) { return true; },
                         },
                         rule);
    if (!ok) throw InvalidArgument("rule " + describe(rule) + " produces values outside [0,1]");
}

void check_conflict(const Rule& first, const Rule& second) {
    auto conflict = [&] {
        throw InvalidArgument("rules " + describe(first) + " and " + describe(second) +
                              " overlap with conflicting values");
    };
    auto against = [&](const std::vector<Index>& members, const Rule& a, const Rule& b) {
        for (Index x : members)
            if (matches(b, x) && value_of(a, x) != value_of(b, x)) conflict();
    };
    if (auto m = finite_members(first)) return against(*m, first, second);
    if (auto m = finite_members(second)) return against(*m, second, first);
    auto* a = std::get_if<IntervalRule>(&first);
    auto* b = std::get_if<IntervalRule>(&second);
    if (a && b) {
        if (std::max(a->lo, b->lo) > std::min(a->hi, b->hi)) return;
        if (a->formula == b->formula && a->param == b->param) return;
        conflict();
    }
    // A hash rule matches a positive fraction of every infinite range.
    conflict();
}

void require_increasing(const std::vector<Index>& xs, const char* name) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 1) throw InvalidArgument(std::string(name) + " must be positive");
        if (i > 0 && xs[i] <= xs[i - 1])
            throw InvalidArgument(std::string(name) + " must be strictly increasing (term " +
                                  std::to_string(i + 1) + ")");
    }
}

void require_open_unit(const std::vector<double>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] > 0.0 && a[i] < 1.0))
            throw InvalidArgument("a(" + std::to_string(i + 1) + ") must lie in (0,1)");
}

}  // namespace

ProbSeq::ProbSeq(std::string kind, nlohmann::json params, std::vector<Rule> rules, SeqMeta meta,
                 std::vector<std::string> warnings, std::optional<std::uint64_t> seed)
    : kind_(std::move(kind)),
      params_(std::move(params)),
      rules_(std::move(rules)),
      meta_(std::move(meta)),
      warnings_(std::move(warnings)),
      seed_(seed) {
    for (const Rule& r : rules_) check_values(r);
    for (std::size_t i = 0; i < rules_.size(); ++i)
        for (std::size_t j = i + 1; j < rules_.size(); ++j) check_conflict(rules_[i], rules_[j]);
}

double ProbSeq::operator()(Index i) const {
    for (const Rule& r : rules_)
        if (matches(r, i)) return value_of(r, i);
    return 0.0;
}

std::vector<Index> ProbSeq::meta_ints(const std::string& name) const {
    auto it = meta_.ints.find(name);
    return it == meta_.ints.end() ? std::vector<Index>{} : it->second;
}

ProbSeq make_constant(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("constant probability must lie in [0,1]");
    return ProbSeq("constant", {{"p", p}},
                   {IntervalRule{1, kMaxIndex, IntervalRule::Formula::Constant, p}});
}

ProbSeq make_thm1(Index k, const std::vector<Index>& b) {
    if (k < 1) throw InvalidArgument("k must be positive");
    if (b.empty()) throw InvalidArgument("b must be nonempty");
    require_increasing(b, "b");
    std::vector<std::string> warnings;
    if (b[0] <= 6 * k)
        warnings.push_back("b(1) = " + std::to_string(b[0]) + " does not exceed 6k = " +
                           std::to_string(6 * k));
    std::vector<Rule> rules{IntervalRule{1, b[0], IntervalRule::Formula::Constant, 0.5}};
    // b is 1-based in the construction: block m covers (b(2m-1), b(2m)].
    for (std::size_t hi = 1; hi < b.size(); hi += 2)
        rules.push_back(IntervalRule{b[hi - 1] + 1, b[hi], IntervalRule::Formula::Reciprocal,
                                     3.0 * static_cast<double>(k)});
    SeqMeta meta;
    meta.ints["k"] = {k};
    meta.ints["b"] = b;
    return ProbSeq("thm1", {{"k", k}, {"b", b}}, std::move(rules), std::move(meta),
                   std::move(warnings));
}

ProbSeq make_thm2(const std::vector<Index>& f) {
    if (f.empty()) throw InvalidArgument("f must be nonempty");
    require_increasing(f, "f");
    std::vector<Rule> rules;
    for (std::size_t t = 0; t < f.size(); ++t) {
        Index m = static_cast<Index>(t) + 2;
        Index cube = m * m * m;
        if (t > 0 && f[t] - cube <= f[t - 1])
            throw InvalidArgument("interval for m = " + std::to_string(m) + " starts at " +
                                  std::to_string(f[t] - cube) + ", overlapping f(" +
                                  std::to_string(m - 1) + ") = " + std::to_string(f[t - 1]));
        rules.push_back(IntervalRule{std::max<Index>(1, f[t] - cube), f[t],
                                     IntervalRule::Formula::Constant, 1.0 / static_cast<double>(m)});
    }
    SeqMeta meta;
    meta.ints["f"] = f;
    return ProbSeq("thm2", {{"f", f}}, std::move(rules), std::move(meta));
}

ProbSeq make_example2(Index b0, const std::vector<Index>& b, const std::vector<Index>& f) {
    std::vector<Index> bounds{b0};
    bounds.insert(bounds.end(), b.begin(), b.end());
    if (b0 < 0) throw InvalidArgument("b(0) must be non-negative");
    for (std::size_t t = 1; t < bounds.size(); ++t)
        if (bounds[t] <= bounds[t - 1]) throw InvalidArgument("b must be strictly increasing");
    require_increasing(f, "f");

    std::vector<std::string> warnings;
    long double prefix = 0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        if (t > 0 && static_cast<long double>(f[t]) <= 10 * prefix)
            warnings.push_back("f(" + std::to_string(t + 1) + ") does not exceed 10 * sum of earlier terms");
        prefix += static_cast<long double>(f[t]);
    }

    SeqMeta meta;
    std::vector<Rule> rules;
    std::vector<Index> support_i;
    for (std::size_t t = 0; t < f.size(); ++t) {
        Index i = static_cast<Index>(t) + 1;
        // Block s is (bounds[s], bounds[s+1]]; even s uses exponent 0.2, odd s 0.95.
        auto it = std::lower_bound(bounds.begin(), bounds.end(), i);
        if (it == bounds.begin() || it == bounds.end()) {
            meta.ints["undefined"].push_back(i);
            continue;
        }
        std::size_t block = static_cast<std::size_t>(it - bounds.begin()) - 1;
        double exponent = block % 2 == 0 ? 0.2 : 0.95;
        double a = std::pow(static_cast<double>(i), -exponent);
        if (!(a > 0.0 && a < 1.0)) {
            meta.ints["clamped"].push_back(i);
            continue;
        }
        rules.push_back(PointRule{f[t], a});
        support_i.push_back(i);
        meta.reals["a"].push_back(a);
    }
    meta.ints["b"] = bounds;
    meta.ints["f"] = f;
    meta.ints["support_i"] = support_i;
    return ProbSeq("example2", {{"b0", b0}, {"b", b}, {"f", f}}, std::move(rules), std::move(meta),
                   std::move(warnings));
}

std::vector<Index> make_thm3_eq5_f(const std::vector<double>& a) {
    require_open_unit(a);
    if (a.empty()) throw InvalidArgument("a must be nonempty");
    std::vector<Index> f{1};
    const long double limit = static_cast<long double>(kMaxIndex);
    double running_max = a[0];
    // a is 1-based: a(j) == a[j-1]. Term i needs a(i+1).
    for (std::size_t i = 2; i + 1 <= a.size(); ++i) {
        running_max = std::max(running_max, a[i - 2]);
        long double prev = static_cast<long double>(f.back());
        long double first = static_cast<long double>(i + 1) / static_cast<long double>(a[i]);
        long double log_second = std::log(4.0L * static_cast<long double>(i) * prev) -
                                 prev * prev * std::log1p(-static_cast<long double>(running_max));
        if (log_second >= std::log(limit) || first >= limit)
            throw IndexOverflow("f(" + std::to_string(i) + ") exceeds the 64-bit index budget",
                                static_cast<long long>(i));
        long double value = std::ceil(std::max(first, std::exp(log_second)));
        if (value >= limit)
            throw IndexOverflow("f(" + std::to_string(i) + ") exceeds the 64-bit index budget",
                                static_cast<long long>(i));
        f.push_back(static_cast<Index>(value));
    }
    return f;
}

namespace {

ProbSeq build_thm3(const std::vector<double>& a, const std::vector<Index>& f, nlohmann::json params) {
    require_open_unit(a);
    require_increasing(f, "f");
    if (f.size() > a.size()) throw InvalidArgument("f has more terms than a");
    std::vector<Rule> rules;
    for (std::size_t t = 0; t < f.size(); ++t) rules.push_back(PointRule{f[t], a[t]});
    SeqMeta meta;
    meta.ints["f"] = f;
    meta.reals["a"] = a;
    return ProbSeq("thm3", std::move(params), std::move(rules), std::move(meta));
}

}  // namespace

ProbSeq make_thm3(const std::vector<double>& a, const std::vector<Index>& f) {
    return build_thm3(a, f, {{"a", a}, {"f", f}});
}

ProbSeq make_thm3(const std::vector<double>& a, Eq5) {
    return build_thm3(a, make_thm3_eq5_f(a), {{"a", a}, {"f", "eq5"}});
}

ProbSeq make_thm6(const std::vector<double>& a) {
    require_open_unit(a);
    std::vector<std::string> warnings;
    std::vector<Rule> rules;
    std::vector<Index> support;
    Index pow3 = 1;
    for (std::size_t t = 0; t < a.size(); ++t) {
        Index i = static_cast<Index>(t) + 1;
        if (pow3 > kMaxIndex / 3)
            throw IndexOverflow("3^" + std::to_string(i) + " exceeds the 64-bit index range", i);
        pow3 *= 3;
        if (t > 0 && a[t] > a[t - 1])
            warnings.push_back("a(" + std::to_string(i) + ") increases; construction assumes a decreasing a");
        // a(i) is usually a decimal such as 0.2 whose binary value sits just
        // off the intended one; quotients within rounding distance of an
        // integer are taken to be that integer.
        const long double x = static_cast<long double>(pow3) / static_cast<long double>(a[t]);
        const long double r = std::nearbyint(x);
        long double q = std::fabs(x - r) <= 1e-12L * x ? r : std::floor(x);
        if (q >= static_cast<long double>(kMaxIndex))
            throw IndexOverflow("floor(3^i/a(i)) exceeds the 64-bit index range at i = " +
                                    std::to_string(i),
                                i);
        Index j = static_cast<Index>(q);
        rules.push_back(PointRule{j, a[t]});
        support.push_back(j);
    }
    SeqMeta meta;
    meta.ints["support"] = support;
    meta.reals["a"] = a;
    return ProbSeq("thm6", {{"a", a}}, std::move(rules), std::move(meta), std::move(warnings));
}

ProbSeq make_random_binary(std::uint64_t seed) {
    return ProbSeq("random_binary", {{"seed", seed}}, {HashRule{seed}}, {}, {}, seed);
}

ProbSeq make_ones_powers(Index base) {
    if (base < 2) throw InvalidArgument("base must be at least 2");
    return ProbSeq("ones_powers", {{"base", base}}, {PowerRule{base, 1.0}});
}

ProbSeq make_diluted(const std::vector<double>& a, const std::vector<Index>& gap) {
    if (a.size() != gap.size()) throw InvalidArgument("a and gap must have equal length");
    std::vector<Rule> rules;
    std::vector<Index> positions;
    Index pos = 1;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (gap[t] < 0) throw InvalidArgument("gaps must be non-negative");
        if (gap[t] > kMaxIndex - 1 || pos > kMaxIndex - 1 - gap[t])
            throw IndexOverflow("diluted position of term " + std::to_string(t + 1) + " overflows",
                                static_cast<long long>(t + 1));
        pos += 1 + gap[t];
        rules.push_back(PointRule{pos, a[t]});
        positions.push_back(pos);
    }
    SeqMeta meta;
    meta.ints["positions"] = positions;
    return ProbSeq("diluted", {{"a", a}, {"gap", gap}}, std::move(rules), std::move(meta));
}

ProbSeq make_explicit(const std::vector<std::pair<Index, double>>& points,
                      const std::vector<ConstantInterval>& intervals) {
    std::vector<Rule> rules;
    nlohmann::json jp = nlohmann::json::array(), ji = nlohmann::json::array();
    for (auto [i, v] : points) {
        rules.push_back(PointRule{i, v});
        jp.push_back({i, v});
    }
    for (const auto& iv : intervals) {
        rules.push_back(IntervalRule{iv.lo, iv.hi, IntervalRule::Formula::Constant, iv.value});
        ji.push_back({iv.lo, iv.hi, iv.value});
    }
    return ProbSeq("explicit", {{"points", jp}, {"intervals", ji}}, std::move(rules));
}

std::vector<Index> support_upto(const ProbSeq& seq, Index n) {
    std::vector<Index> all;
    for (const Rule& r : seq.rules()) {
        auto m = members_upto(r, n);
        all.insert(all.end(), m.begin(), m.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::erase_if(all, [&](Index i) { return !(seq(i) > 0.0); });
    return all;
}

double log_partial_product(const ProbSeq& seq, Index n) {
    double sum = 0.0;
    for (Index i : support_upto(seq, n)) {
        double p = seq(i);
        if (p >= 1.0) return -std::numeric_limits<double>::infinity();
        sum += std::log1p(-p);
    }
    return sum;
}

double condition_statistic(const ProbSeq& seq, Index n, ConditionKind kind) {
    switch (kind) {
        case ConditionKind::C2:
            if (n < 2) throw InvalidArgument("C2 needs n >= 2");
            return log_partial_product(seq, n) / std::log(static_cast<double>(n));
        case ConditionKind::C3Sum: {
            double sum = 0.0;
            for (Index i : support_upto(seq, n)) sum += seq(i);
            return sum;
        }
        case ConditionKind::C5: {
            double sum = 0.0;
            for (Index i : support_upto(seq, n)) {
                double p = seq(i);
                if (p >= 1.0) return -std::numeric_limits<double>::infinity();
                sum += static_cast<double>(i) * std::log1p(-p);
            }
            return sum;
        }
    }
    return 0.0;
}

bool is_admissible(const ProbSeq& seq, const Graph& h) {
    const int l = h.n();
    for (int v = 1; v <= l; ++v)
        for (int w = v + 1; w <= l; ++w) {
            double p = seq(w - v);
            if (h.has_edge(v, w) ? !(p > 0.0) : !(p < 1.0)) return false;
        }
    return true;
}

nlohmann::json to_json(const ProbSeq& seq) {
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : seq.meta().ints) meta[k] = v;
    for (const auto& [k, v] : seq.meta().reals) meta[k] = v;
    if (!seq.warnings().empty()) meta["warnings"] = seq.warnings();
    return {{"kind", seq.kind()}, {"params", seq.params()}, {"meta", meta}};
}

ProbSeq seq_from_json(const nlohmann::json& doc) {
    try {
        const std::string kind = doc.at("kind").get<std::string>();
        const nlohmann::json& p = doc.contains("params") ? doc.at("params") : nlohmann::json::object();
        if (kind == "constant") return make_constant(p.at("p").get<double>());
        if (kind == "thm1") return make_thm1(p.at("k").get<Index>(), p.at("b").get<std::vector<Index>>());
        if (kind == "thm2") return make_thm2(p.at("f").get<std::vector<Index>>());
        if (kind == "example2")
            return make_example2(p.at("b0").get<Index>(), p.at("b").get<std::vector<Index>>(),
                                 p.at("f").get<std::vector<Index>>());
        if (kind == "thm3") {
            auto a = p.at("a").get<std::vector<double>>();
            if (p.at("f").is_string()) {
                if (p.at("f").get<std::string>() != "eq5")
                    throw InvalidArgument("thm3 f must be an integer list or \"eq5\"");
                return make_thm3(a, Eq5{});
            }
            return make_thm3(a, p.at("f").get<std::vector<Index>>());
        }
        if (kind == "thm6") return make_thm6(p.at("a").get<std::vector<double>>());
        if (kind == "random_binary") return make_random_binary(p.at("seed").get<std::uint64_t>());
        if (kind == "ones_powers") return make_ones_powers(p.at("base").get<Index>());
        if (kind == "diluted")
            return make_diluted(p.at("a").get<std::vector<double>>(), p.at("gap").get<std::vector<Index>>());
        if (kind == "explicit") {
            std::vector<std::pair<Index, double>> points;
            std::vector<ConstantInterval> intervals;
            if (p.contains("points"))
                for (const auto& e : p.at("points")) points.emplace_back(e.at(0).get<Index>(), e.at(1).get<double>());
            if (p.contains("intervals"))
                for (const auto& e : p.at("intervals"))
                    intervals.push_back({e.at(0).get<Index>(), e.at(1).get<Index>(), e.at(2).get<double>()});
            return make_explicit(points, intervals);
        }
        throw InvalidArgument("unknown sequence kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed sequence document: ") + e.what());
    }
}

}  // namespace zolab
