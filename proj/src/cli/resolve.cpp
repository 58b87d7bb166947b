#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zolab/cli.hpp"
#include "zolab/error.hpp"

namespace zolab::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProbSeq seq_from_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("sequence JSON: ") + e.what());
    }
    return seq_from_json(doc);
}

double to_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("bad " + what + " '" + text + "'");
}

long long to_integer(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("bad " + what + " '" + text + "'");
}

std::pair<std::string, std::string> split_arg(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return {spec, {}};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

}  // namespace

std::vector<std::string> named_sequences() {
    return {"constant:<p>", "ones_powers:<base>", "random_binary:<seed>", "thm6_half", "thm1_default",
            "thm2_default", "example2_default", "thm3_default", "lemma_edge"};
}

ProbSeq resolve_sequence(const std::string& raw) {
    const std::string spec = trim(raw);
    if (spec.empty()) throw InvalidArgument("empty sequence specification");
    if (spec.front() == '{') return seq_from_text(spec);
    if (spec.front() == '@') return seq_from_text(read_file(spec.substr(1)));

    const auto [name, arg] = split_arg(spec);
    if (name == "constant") return make_constant(to_double(arg, "probability"));
    if (name == "ones_powers") return make_ones_powers(to_integer(arg, "base"));
    if (name == "random_binary") return make_random_binary(static_cast<std::uint64_t>(to_integer(arg, "seed")));
    if (arg.empty()) {
        if (name == "thm6_half") return make_thm6(std::vector<double>(12, 0.5));
        if (name == "thm1_default") return make_thm1(2, {13, 2000, 1000000000000LL});
        if (name == "thm2_default") return make_thm2({1, 40, 150, 460});
        if (name == "example2_default") return make_example2(0, {2, 8}, {1, 11, 121, 1331, 14641});
        if (name == "thm3_default") return make_thm3(std::vector<double>(3, 0.02), {1, 150, 1000});
        if (name == "lemma_edge") return make_explicit({{1, 0.3}});
    }
    if (std::filesystem::is_regular_file(spec)) return seq_from_text(read_file(spec));
    throw InvalidArgument("unknown sequence '" + spec + "'");
}

Target resolve_target(const std::string& raw, std::optional<Vocabulary> vocab) {
    const std::string spec = trim(raw);
    if (spec.rfind("fo:", 0) == 0) {
        const std::string text = spec.substr(3);
        const Vocabulary v = vocab.value_or(Vocabulary::L_PLUS);
        return sentence_target(text, parse(text, v), v);
    }
    const auto [name, arg] = split_arg(spec);
    if (name == "psi") return psi_target(to_integer(arg, "f(r)"));
    if (name == "kclique") {
        const long long l = to_integer(arg, "clique size");
        if (l < 1 || l > 64) throw InvalidArgument("clique size must lie in [1, 64]");
        Target t = exact_copy_target(complete_graph(static_cast<int>(l)));
        t.name = "exact_K" + arg;
        return t;
    }
    if (name == "copies") {
        const long long c = to_integer(arg, "copy count");
        return disjoint_copies_target(complete_graph(2), static_cast<int>(c));
    }
    if (name == "triangle_native" && arg.empty()) return triangle_native_target();
    if (name == "ex2_path4_native" && arg.empty()) return {"ex2_path4", ex2_path4_native};
    const int k = arg.empty() ? 1 : static_cast<int>(to_integer(arg, "k"));
    if (!arg.empty() && name != "extension_Ak") throw InvalidArgument("target '" + name + "' takes no argument");
    return vocab ? library_target(name, k, *vocab) : library_target(name, k);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string body = trim(text);
    if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const long long v = to_integer(item, "integer");
        if (v < 1 || v > std::numeric_limits<int>::max()) throw InvalidArgument("n out of range: " + item);
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw InvalidArgument("empty integer list");
    return out;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::map<std::string, int> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw InvalidArgument("config line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        // '#' outside double quotes starts a comment.
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (value.empty()) fail("empty value for '" + key + "'");
        if (seen.count(key)) fail("duplicate key '" + key + "'");
        seen[key] = line_no;
        try {
            if (key == "preset") {
                cfg.preset = value;
            } else if (key == "sequence") {
                cfg.sequence = value;
                resolve_sequence(value);
            } else if (key == "target") {
                cfg.target = value;
            } else if (key == "model_kind") {
                cfg.model_kind = parse_model_kind(value);
            } else if (key == "n_list") {
                cfg.n_list = parse_int_list(value);
            } else if (key == "trials") {
                const long long t = to_integer(value, "trials");
                if (t < 0) fail("trials must be non-negative");
                cfg.trials = static_cast<std::uint64_t>(t);
            } else if (key == "master_seed") {
                cfg.master_seed = std::stoull(value);
            } else if (key == "output") {
                cfg.output = value;
            } else if (key == "vocab") {
                cfg.vocab = parse_vocabulary(value);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const InvalidArgument& e) {
            const std::string msg = e.what();
            if (msg.rfind("config line", 0) == 0) throw;
            fail(msg);
        } catch (const Error& e) {
            fail(e.what());
        } catch (const std::logic_error&) {
            fail("bad value for '" + key + "'");
        }
    }

    auto at = [&](const char* key) { return seen.count(key) ? seen[key] : line_no; };
    if (cfg.preset) {
        for (const char* key : {"sequence", "target", "model_kind", "n_list", "vocab"})
            if (seen.count(key)) {
                line_no = at(key);
                fail(std::string("'") + key + "' cannot be combined with a preset");
            }
        const auto& list = presets();
        if (std::none_of(list.begin(), list.end(), [&](const PresetInfo& p) { return p.name == *cfg.preset; })) {
            line_no = at("preset");
            fail("unknown preset '" + *cfg.preset + "'");
        }
        return cfg;
    }
    for (const char* key : {"sequence", "target", "n_list"})
        if (!seen.count(key))
            throw InvalidArgument(std::string("config: missing '") + key + "' (or give a preset)");
    try {
        resolve_target(cfg.target, cfg.vocab);
    } catch (const Error& e) {
        line_no = at("target");
        fail(e.what());
    }
    return cfg;
}

std::vector<EstimateResult> run_experiment(const ExperimentConfig& config) {
    const ProbSeq seq = resolve_sequence(config.sequence);
    const Target target = resolve_target(config.target, config.vocab);
    const std::uint64_t trials = config.trials.value_or(1000);
    if (trials > 0) return scan(seq, target, config.model_kind, config.n_list, trials, config.master_seed);

    std::vector<EstimateResult> rows;
    for (int n : config.n_list) {
        double value;
        if (config.target == "path2" && config.model_kind == ModelKind::Line)
            value = exact_path2(seq, n);
        else if (config.target == "triangle" && config.model_kind == ModelKind::Circle)
            value = exact_triangle_circle(seq, n);
        else
            value = brute_force_probability(seq, n, target, config.model_kind);
        rows.push_back(exact_result(n, value, target.name, config.model_kind));
        rows.back().master_seed = config.master_seed;
    }
    return rows;
}

void write_rows(std::ostream& out, const std::vector<EstimateResult>& rows, bool json) {
    if (!json) {
        out << csv_header() << '\n';
        for (const auto& r : rows) out << csv_row(r) << '\n';
        return;
    }
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows)
        doc.push_back({{"n", r.n},
                       {"estimate", r.estimate},
                       {"ci_low", r.ci_low},
                       {"ci_high", r.ci_high},
                       {"trials", r.trials},
                       {"master_seed", r.master_seed},
                       {"target", r.target},
                       {"model_kind", std::string(to_string(r.model_kind))}});
    out << doc.dump(2) << '\n';
}

}  // namespace zolab::cli
