#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwnet/attack.hpp"
#include "pwnet/corpus.hpp"
#include "pwnet/errors.hpp"
#include "pwnet/export.hpp"
#include "pwnet/mindict.hpp"
#include "pwnet/neighborhood.hpp"
#include "pwnet/netstats.hpp"
#include "pwnet/simjoin.hpp"

namespace {

namespace fs = std::filesystem;
using namespace pwnet;

struct RunConfig {
    std::string input_path;
    std::string input_format = "plain";  // plain|counted
    int threshold = 3;
    std::string strategy = "bucketed";  // naive|bucketed
    std::uint64_t seed = 0;
    std::uint64_t x_min = 1;
    std::size_t top_limit = 0;  // 0 = whole corpus
    std::string out_path;       // empty = stdout
    std::string export_format = "gexf";  // gexf|graphml|edgecsv|dot
    std::string report_format = "json";  // csv|json
    bool redact = false;

    // counts subcommand
    std::uint64_t length = 8;
    std::uint64_t alphabet = 95;
    int radius = 1;
    bool force_exact = false;

    // mindict subcommand
    std::string method = "greedy";  // greedy|exact
    std::optional<double> ratio;
    std::size_t exact_budget = 20;

    // fit subcommand
    std::string rank_out_path;
};

// Writes to <path>.tmp and renames on commit, so a failed stage leaves no
// partial output behind.
class OutputFile {
public:
    explicit OutputFile(const std::string& path)
        : path_(path), tmp_path_(path + ".tmp"), stream_(tmp_path_, std::ios::binary) {
        if (!stream_) throw DataError("cannot open output file: " + path);
    }

    OutputFile(OutputFile&& other) noexcept
        : path_(std::move(other.path_)),
          tmp_path_(std::move(other.tmp_path_)),
          stream_(std::move(other.stream_)),
          committed_(other.committed_) {
        other.committed_ = true;  // the moved-from destructor must not touch files
    }
    OutputFile& operator=(OutputFile&&) = delete;
    OutputFile(const OutputFile&) = delete;
    OutputFile& operator=(const OutputFile&) = delete;

    std::ostream& stream() { return stream_; }

    void commit() {
        stream_.flush();
        if (!stream_) throw DataError("write failed: " + path_);
        stream_.close();
        std::error_code ec;
        fs::rename(tmp_path_, path_, ec);
        if (ec) throw DataError("cannot finalize output file: " + path_);
        committed_ = true;
    }

    ~OutputFile() {
        if (!committed_) {
            stream_.close();
            std::error_code ec;
            fs::remove(tmp_path_, ec);
        }
    }

private:
    std::string path_;
    std::string tmp_path_;
    std::ofstream stream_;
    bool committed_ = false;
};

// Runs `emit` against --out (atomically) or stdout.
template <typename Emit>
void with_sink(const std::string& out_path, Emit&& emit) {
    if (out_path.empty()) {
        emit(std::cout);
        std::cout.flush();
    } else {
        OutputFile file(out_path);
        emit(file.stream());
        file.commit();
    }
}

Corpus load_corpus(const RunConfig& cfg) {
    if (cfg.input_path.empty()) throw ArgumentError("--input is required");

    const auto parse = [&](std::istream& in) {
        if (cfg.input_format == "plain") return parse_plain(in);
        if (cfg.input_format == "counted") return parse_counted(in);
        throw ArgumentError("unknown input format: " + cfg.input_format);
    };

    Corpus corpus = [&] {
        if (cfg.input_path == "-") return parse(std::cin);
        std::ifstream in(cfg.input_path, std::ios::binary);
        if (!in) throw DataError("cannot open input file: " + cfg.input_path);
        return parse(in);
    }();

    if (cfg.top_limit > 0) corpus = top_n(corpus, cfg.top_limit);
    return corpus;
}

JoinStrategy parse_strategy(const std::string& s) {
    if (s == "naive") return JoinStrategy::naive;
    if (s == "bucketed") return JoinStrategy::bucketed;
    throw ArgumentError("unknown strategy: " + s);
}

GraphFormat parse_graph_format(const std::string& s) {
    if (s == "gexf") return GraphFormat::gexf;
    if (s == "graphml") return GraphFormat::graphml;
    if (s == "edgecsv") return GraphFormat::edgecsv;
    if (s == "dot") return GraphFormat::dot;
    throw ArgumentError("unknown export format: " + s);
}

ReportFormat parse_report_format(const std::string& s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw ArgumentError("unknown report format: " + s);
}

PasswordGraph build_from(const RunConfig& cfg, const Corpus& corpus, JoinStats* stats = nullptr) {
    return build_graph(corpus, cfg.threshold, parse_strategy(cfg.strategy), stats);
}

void cmd_stats(const RunConfig& cfg) {
    const Corpus corpus = load_corpus(cfg);
    const CorpusStats stats = corpus_stats(corpus);
    with_sink(cfg.out_path, [&](std::ostream& out) {
        export_report(stats, parse_report_format(cfg.report_format), out);
    });
}

void cmd_counts(const RunConfig& cfg) {
    // Enumeration is attempted automatically only where it is instant.
    const bool attempt_exact =
        cfg.force_exact || (cfg.length <= 4 && cfg.alphabet <= 8 && cfg.radius <= 2);
    const NeighborhoodCountReport report =
        make_count_report(cfg.length, cfg.alphabet, cfg.radius, attempt_exact);
    with_sink(cfg.out_path, [&](std::ostream& out) { out << to_kv_text(report); });
}

void cmd_build(const RunConfig& cfg) {
    const Corpus corpus = load_corpus(cfg);
    JoinStats stats;
    const PasswordGraph graph = build_from(cfg, corpus, &stats);
    const ThresholdView view(graph, cfg.threshold);

    if (!cfg.out_path.empty()) {
        with_sink(cfg.out_path, [&](std::ostream& out) {
            export_graph(view, nullptr, parse_graph_format(cfg.export_format), out,
                         ExportOptions{cfg.redact});
        });
    }
    std::cout << "nodes=" << graph.node_count() << "\n"
              << "edges=" << graph.edge_count() << "\n"
              << "threshold=" << cfg.threshold << "\n"
              << "distance_calls=" << stats.distance_calls << "\n";
}

void cmd_communities(const RunConfig& cfg) {
    const Corpus corpus = load_corpus(cfg);
    const PasswordGraph graph = build_from(cfg, corpus);
    const ThresholdView view(graph, cfg.threshold);
    const CommunityAssignment communities = detect_communities(view, cfg.seed);

    if (!cfg.out_path.empty()) {
        with_sink(cfg.out_path, [&](std::ostream& out) {
            export_graph(view, &communities, parse_graph_format(cfg.export_format), out,
                         ExportOptions{cfg.redact});
        });
    }
    std::cout << "nodes=" << graph.node_count() << "\n"
              << "edges=" << view.edge_count() << "\n"
              << "communities=" << communities.community_count << "\n"
              << "modularity=" << format_real(communities.modularity) << "\n";
}

void cmd_fit(const RunConfig& cfg) {
    const Corpus corpus = load_corpus(cfg);
    const PasswordGraph graph = build_from(cfg, corpus);
    const ThresholdView view(graph, cfg.threshold);

    // Isolated nodes have degree 0 and cannot contribute to the discrete fit.
    std::vector<std::uint64_t> samples;
    for (const std::uint32_t d : degree_sequence(view))
        if (d >= 1) samples.push_back(d);
    const PowerLawFit fit = fit_power_law(samples, cfg.x_min);

    // Both outputs are written before either is committed, so a failure on
    // the second leaves nothing behind.
    std::optional<OutputFile> rank_file;
    if (!cfg.rank_out_path.empty()) {
        rank_file.emplace(cfg.rank_out_path);
        const std::vector<RankedDegree> ranks = degree_rank(view);
        export_degree_rank(ranks, ReportFormat::csv, rank_file->stream());
    }
    with_sink(cfg.out_path, [&](std::ostream& out) {
        export_report(fit, parse_report_format(cfg.report_format), out);
    });
    if (rank_file) rank_file->commit();
}

void cmd_attack(const RunConfig& cfg) {
    const Corpus corpus = load_corpus(cfg);
    const PasswordGraph graph = build_from(cfg, corpus);
    const ThresholdView view(graph, cfg.threshold);

    const Dictionary dictionaries[] = {
        rank_by_frequency(corpus),
        rank_by_degree(view),
        rank_by_neighborhood_weight(view, corpus),
    };
    // All three curves are written before any file is committed.
    std::vector<OutputFile> files;
    files.reserve(std::size(dictionaries));
    for (const Dictionary& dict : dictionaries) {
        const CrackingCurve curve = cracking_curve(view, corpus, dict);
        if (cfg.out_path.empty()) {
            std::cout << "# dictionary=" << to_string(dict.label) << "\n";
            export_report(curve, ReportFormat::csv, std::cout);
        } else {
            files.emplace_back(cfg.out_path + "." + to_string(dict.label) + ".csv");
            export_report(curve, ReportFormat::csv, files.back().stream());
        }
    }
    for (OutputFile& file : files) file.commit();
}

void cmd_mindict(const RunConfig& cfg) {
    const Corpus corpus = load_corpus(cfg);
    const PasswordGraph graph = build_from(cfg, corpus);
    const ThresholdView view(graph, cfg.threshold);

    if (cfg.ratio) {
        const Dictionary dict = partial_dominating_dictionary(view, corpus, *cfg.ratio);
        const std::vector<NodeId> covered = closed_neighborhood(view, dict.ordering);
        std::uint64_t covered_accounts = 0;
        for (const NodeId v : covered) covered_accounts += graph.frequency(v);

        nlohmann::ordered_json j;
        j["label"] = to_string(dict.label);
        j["target_ratio"] = *cfg.ratio;
        j["size"] = dict.ordering.size();
        j["covered_accounts"] = covered_accounts;
        j["total_accounts"] = corpus.total_accounts();
        auto members = nlohmann::ordered_json::array();
        for (const NodeId v : dict.ordering) members.push_back(graph.password(v));
        j["members"] = std::move(members);
        with_sink(cfg.out_path, [&](std::ostream& out) {
            out << j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace)
                << "\n";
        });
        return;
    }

    DominatingSetResult result;
    if (cfg.method == "greedy") result = greedy_dominating_set(view);
    else if (cfg.method == "exact") result = exact_dominating_set(view, cfg.exact_budget);
    else throw ArgumentError("unknown method: " + cfg.method);

    with_sink(cfg.out_path, [&](std::ostream& out) {
        export_report(result, graph, parse_report_format(cfg.report_format), out);
    });
}

void cmd_export(const RunConfig& cfg) {
    if (cfg.out_path.empty()) throw ArgumentError("export: --out is required");
    const Corpus corpus = load_corpus(cfg);
    const PasswordGraph graph = build_from(cfg, corpus);
    const ThresholdView view(graph, cfg.threshold);
    with_sink(cfg.out_path, [&](std::ostream& out) {
        export_graph(view, nullptr, parse_graph_format(cfg.export_format), out,
                     ExportOptions{cfg.redact});
    });
}

void add_corpus_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--input", cfg.input_path, "input file path, or - for stdin");
    cmd->add_option("--format", cfg.input_format, "input format: plain|counted");
    cmd->add_option("--top", cfg.top_limit, "keep only the top N records");
}

void add_graph_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--threshold", cfg.threshold, "edge threshold t (distance <= t)");
    cmd->add_option("--strategy", cfg.strategy, "join strategy: naive|bucketed");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"password similarity network toolkit"};
    app.require_subcommand(1);

    CLI::App* stats = app.add_subcommand("stats", "corpus statistics");
    add_corpus_options(stats, cfg);
    stats->add_option("--out", cfg.out_path, "output path (default stdout)");
    stats->add_option("--report-format", cfg.report_format, "csv|json");

    CLI::App* counts = app.add_subcommand("counts", "neighborhood candidate counts");
    counts->add_option("--length", cfg.length, "password length L");
    counts->add_option("--alphabet", cfg.alphabet, "alphabet size N");
    counts->add_option("--radius", cfg.radius, "edit radius k (0..2)");
    counts->add_flag("--exact", cfg.force_exact, "force exhaustive enumeration");
    counts->add_option("--out", cfg.out_path, "output path (default stdout)");

    CLI::App* build = app.add_subcommand("build", "build the similarity graph");
    add_corpus_options(build, cfg);
    add_graph_options(build, cfg);
    build->add_option("--out", cfg.out_path, "graph output path");
    build->add_option("--export", cfg.export_format, "gexf|graphml|edgecsv|dot");
    build->add_flag("--redact", cfg.redact, "node ids instead of password labels");

    CLI::App* communities = app.add_subcommand("communities", "detect communities");
    add_corpus_options(communities, cfg);
    add_graph_options(communities, cfg);
    communities->add_option("--seed", cfg.seed, "label propagation seed");
    communities->add_option("--out", cfg.out_path, "graph output path");
    communities->add_option("--export", cfg.export_format, "gexf|graphml|edgecsv|dot");
    communities->add_flag("--redact", cfg.redact, "node ids instead of password labels");

    CLI::App* fit = app.add_subcommand("fit", "fit a discrete power law to degrees");
    add_corpus_options(fit, cfg);
    add_graph_options(fit, cfg);
    fit->add_option("--xmin", cfg.x_min, "smallest degree included in the fit");
    fit->add_option("--out", cfg.out_path, "fit report path (default stdout)");
    fit->add_option("--report-format", cfg.report_format, "csv|json");
    fit->add_option("--rank-out", cfg.rank_out_path, "also write the degree-rank CSV");

    CLI::App* attack = app.add_subcommand(
        "attack", "cracking curves for frequency/degree/neighborhood dictionaries");
    add_corpus_options(attack, cfg);
    add_graph_options(attack, cfg);
    attack->add_option("--out", cfg.out_path,
                       "output prefix; writes <out>.<dictionary>.csv");

    CLI::App* mindict = app.add_subcommand("mindict", "minimal cracking dictionaries");
    add_corpus_options(mindict, cfg);
    add_graph_options(mindict, cfg);
    mindict->add_option("--method", cfg.method, "greedy|exact");
    mindict->add_option("--ratio", cfg.ratio, "partial coverage target in [0, 1]");
    mindict->add_option("--exact-budget", cfg.exact_budget, "node cap for --method exact");
    mindict->add_option("--out", cfg.out_path, "output path (default stdout)");
    mindict->add_option("--report-format", cfg.report_format, "csv|json");

    CLI::App* exp = app.add_subcommand("export", "export the graph without extras");
    add_corpus_options(exp, cfg);
    add_graph_options(exp, cfg);
    exp->add_option("--out", cfg.out_path, "output path")->required();
    exp->add_option("--export", cfg.export_format, "gexf|graphml|edgecsv|dot");
    exp->add_flag("--redact", cfg.redact, "node ids instead of password labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (stats->parsed()) cmd_stats(cfg);
        else if (counts->parsed()) cmd_counts(cfg);
        else if (build->parsed()) cmd_build(cfg);
        else if (communities->parsed()) cmd_communities(cfg);
        else if (fit->parsed()) cmd_fit(cfg);
        else if (attack->parsed()) cmd_attack(cfg);
        else if (mindict->parsed()) cmd_mindict(cfg);
        else if (exp->parsed()) cmd_export(cfg);
        return 0;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
