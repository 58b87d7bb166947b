#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "zolab/cli.hpp"
#include "zolab/efgame.hpp"
#include "zolab/error.hpp"

namespace zolab::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Writes to --out when given, otherwise to the command's stdout.
void emit(const std::string& out_path, std::ostream& out, const std::string& text) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw InvalidArgument("cannot write " + out_path);
    file << text;
}

std::string rows_text(const std::vector<EstimateResult>& rows, bool json) {
    std::ostringstream os;
    write_rows(os, rows, json);
    return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance-dependent random graph laboratory"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int jobs = 0;
    std::string out_path;
    std::string format = "csv";
    app.add_option("--seed", seed, "Master seed")->capture_default_str();
    app.add_option("--jobs", jobs, "OpenMP threads (0 keeps the runtime default)");
    app.add_option("--out", out_path, "Output file, or output directory for presets");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    std::string seq_spec, target_spec, model = "line", vocab_spec, n_list_spec;
    int n = 0;
    std::uint64_t trials = 1000;

    auto* sample = app.add_subcommand("sample", "Sample one graph and print its edge list");
    sample->add_option("--seq", seq_spec, "Sequence")->required();
    sample->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    sample->add_option("--model", model, "line or circle")->capture_default_str();
    std::uint64_t trial = 0;
    sample->add_option("--trial", trial, "Trial index selecting the stream")->capture_default_str();

    auto* eval = app.add_subcommand("eval", "Print sequence values, or evaluate a target on a graph");
    std::string index_spec, graph_path;
    eval->add_option("--seq", seq_spec, "Sequence");
    eval->add_option("--index", index_spec, "Comma-separated indices");
    eval->add_option("--graph", graph_path, "Edge-list file");
    eval->add_option("--target", target_spec, "Target");
    eval->add_option("--vocab", vocab_spec, "Vocabulary for the target");

    auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate at one n");
    estimate->add_option("--seq", seq_spec, "Sequence")->required();
    estimate->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    estimate->add_option("--target", target_spec, "Target")->required();
    estimate->add_option("--model", model, "line or circle")->capture_default_str();
    estimate->add_option("--trials", trials, "Trials")->capture_default_str();
    estimate->add_option("--vocab", vocab_spec, "Vocabulary for the target");

    auto* scan_cmd = app.add_subcommand("scan", "Monte Carlo estimates over a list of n");
    scan_cmd->add_option("--seq", seq_spec, "Sequence")->required();
    scan_cmd->add_option("--n-list", n_list_spec, "Comma-separated n values")->required();
    scan_cmd->add_option("--target", target_spec, "Target")->required();
    scan_cmd->add_option("--model", model, "line or circle")->capture_default_str();
    scan_cmd->add_option("--trials", trials, "Trials per n")->capture_default_str();
    scan_cmd->add_option("--vocab", vocab_spec, "Vocabulary for the target");

    auto* efgame = app.add_subcommand("efgame", "Decide Th_k equality of two graphs");
    std::string g1_path, g2_path, pointed;
    int k = 1;
    efgame->add_option("graph1", g1_path, "First edge-list file")->required();
    efgame->add_option("graph2", g2_path, "Second edge-list file")->required();
    efgame->add_option("--vocab", vocab_spec, "Vocabulary")->required();
    efgame->add_option("--k", k, "Rounds")->required()->check(CLI::NonNegativeNumber);
    efgame->add_option("--pointed", pointed, "v1,v2: play the restricted game from these vertices");
    double budget = 1e9;
    efgame->add_option("--budget", budget, "Game size budget")->capture_default_str();

    auto* preset = app.add_subcommand("preset", "Run a named experiment");
    std::string preset_name;
    bool list = false;
    preset->add_option("name", preset_name, "Preset name");
    preset->add_flag("--list", list, "List presets");
    std::uint64_t preset_trials = 0;
    preset->add_option("--trials", preset_trials, "Override the preset's trial count");

    auto* oracle = app.add_subcommand("oracle", "Exact probabilities");
    std::string oracle_kind;
    oracle->add_option("kind", oracle_kind, "path2, triangle_circle or brute")
        ->required()
        ->check(CLI::IsMember({"path2", "triangle_circle", "brute"}));
    oracle->add_option("--seq", seq_spec, "Sequence")->required();
    oracle->add_option("--n-list", n_list_spec, "Comma-separated n values")->required();
    oracle->add_option("--target", target_spec, "Target (brute)");
    oracle->add_option("--model", model, "line or circle (brute)")->capture_default_str();
    oracle->add_option("--vocab", vocab_spec, "Vocabulary for the target");

    auto* run_cmd = app.add_subcommand("run", "Run a key = value config file");
    std::string config_path;
    run_cmd->add_option("config", config_path, "Config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    try {
        if (jobs > 0) omp_set_num_threads(jobs);
        const bool json = format == "json";
        const std::optional<Vocabulary> vocab =
            vocab_spec.empty() ? std::nullopt : std::optional<Vocabulary>(parse_vocabulary(vocab_spec));

        if (*sample) {
            const ProbSeq seq = resolve_sequence(seq_spec);
            const ModelKind kind = parse_model_kind(model);
            const RngStream stream{seed, trial_stream(static_cast<std::uint64_t>(n), trial)};
            const Graph g = kind == ModelKind::Line ? sample_line(seq, n, stream) : sample_circle(seq, n, stream);
            if (json) {
                nlohmann::json doc{{"n", g.n()}, {"edges", g.edges()}, {"master_seed", seed}, {"trial", trial}};
                emit(out_path, out, doc.dump() + "\n");
            } else {
                emit(out_path, out, to_edge_list(g));
            }
            return kExitOk;
        }

        if (*eval) {
            if (!graph_path.empty()) {
                if (target_spec.empty()) throw InvalidArgument("eval --graph needs --target");
                const Graph g = parse_edge_list(slurp(graph_path));
                const Target t = resolve_target(target_spec, vocab);
                emit(out_path, out, std::string(t.predicate(g) ? "true" : "false") + "\n");
                return kExitOk;
            }
            if (seq_spec.empty() || index_spec.empty()) throw InvalidArgument("eval needs --seq and --index, or --graph and --target");
            const ProbSeq seq = resolve_sequence(seq_spec);
            std::ostringstream os;
            if (json) {
                nlohmann::json doc = nlohmann::json::array();
                for (int i : parse_int_list(index_spec)) doc.push_back({{"i", i}, {"p", seq(i)}});
                os << doc.dump(2) << '\n';
            } else {
                os << "i,p\n";
                char buf[32];
                for (int i : parse_int_list(index_spec)) {
                    std::snprintf(buf, sizeof buf, "%.17g", seq(i));
                    os << i << ',' << buf << '\n';
                }
            }
            for (const auto& w : seq.warnings()) err << "warning: " << w << '\n';
            emit(out_path, out, os.str());
            return kExitOk;
        }

        if (*estimate) {
            const auto r = mc_probability(resolve_sequence(seq_spec), n, resolve_target(target_spec, vocab),
                                          parse_model_kind(model), trials, seed);
            emit(out_path, out, rows_text({r}, json));
            return kExitOk;
        }

        if (*scan_cmd) {
            const auto rows = scan(resolve_sequence(seq_spec), resolve_target(target_spec, vocab),
                                   parse_model_kind(model), parse_int_list(n_list_spec), trials, seed);
            emit(out_path, out, rows_text(rows, json));
            return kExitOk;
        }

        if (*efgame) {
            const Vocabulary v = *vocab;
            const LabeledModel m1(parse_edge_list(slurp(g1_path)), v), m2(parse_edge_list(slurp(g2_path)), v);
            GameOptions options;
            options.budget = budget;
            GameStats stats;
            bool equal;
            if (!pointed.empty()) {
                const auto picks = parse_int_list(pointed);
                if (picks.size() != 2) throw InvalidArgument("--pointed expects v1,v2");
                equal = pointed_equiv(m1, picks[0], m2, picks[1], k, options, &stats);
            } else {
                equal = th_k_equal(m1, m2, k, options, &stats);
            }
            std::ostringstream os;
            if (json) {
                os << nlohmann::json{{"result", equal ? "EQUAL" : "NOT_EQUAL"},
                                     {"k", k},
                                     {"vocab", std::string(to_string(v))},
                                     {"nodes", stats.nodes},
                                     {"memo_hits", stats.memo_hits},
                                     {"memo_entries", stats.memo_entries}}
                          .dump(2)
                   << '\n';
            } else {
                os << (equal ? "EQUAL" : "NOT_EQUAL") << '\n'
                   << "nodes " << stats.nodes << "\nmemo_hits " << stats.memo_hits << "\nmemo_entries "
                   << stats.memo_entries << '\n';
            }
            emit(out_path, out, os.str());
            return kExitOk;
        }

        if (*preset) {
            if (list) {
                for (const auto& p : presets()) out << p.name << "  " << p.anchor << '\n';
                return kExitOk;
            }
            if (preset_name.empty()) throw InvalidArgument("preset needs a name (or --list)");
            PresetOptions options;
            options.master_seed = seed;
            options.trials = preset_trials;
            if (!out_path.empty()) options.out_dir = out_path;
            return run_preset(preset_name, options, out);
        }

        if (*oracle) {
            const ProbSeq seq = resolve_sequence(seq_spec);
            std::vector<EstimateResult> rows;
            for (int size : parse_int_list(n_list_spec)) {
                if (oracle_kind == "path2") {
                    rows.push_back(exact_result(size, exact_path2(seq, size), "path2", ModelKind::Line));
                } else if (oracle_kind == "triangle_circle") {
                    rows.push_back(exact_result(size, exact_triangle_circle(seq, size), "triangle", ModelKind::Circle));
                } else {
                    if (target_spec.empty()) throw InvalidArgument("oracle brute needs --target");
                    const Target t = resolve_target(target_spec, vocab);
                    const ModelKind kind = parse_model_kind(model);
                    rows.push_back(exact_result(size, brute_force_probability(seq, size, t, kind), t.name, kind));
                }
            }
            emit(out_path, out, rows_text(rows, json));
            return kExitOk;
        }

        if (*run_cmd) {
            const ExperimentConfig cfg = parse_config(slurp(config_path));
            if (cfg.preset) {
                PresetOptions options;
                options.master_seed = cfg.master_seed;
                options.trials = cfg.trials.value_or(0);
                options.out_dir = !cfg.output.empty() ? cfg.output : !out_path.empty() ? out_path : "out";
                return run_preset(*cfg.preset, options, out);
            }
            const auto rows = run_experiment(cfg);
            emit(!cfg.output.empty() ? cfg.output : out_path, out, rows_text(rows, json));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace zolab::cli
