#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eigenrank/graph_analysis.hpp"
#include "eigenrank/io.hpp"
#include "eigenrank/tournament.hpp"
#include "eigenrank/web.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotConverged = 2;

struct GlobalOptions {
    std::string format = "json";
    std::string input_file = "-";
    double tol = 1e-12;
    std::size_t max_iter = 100000;
    double tie_tol = 1e-9;
    std::string scheme = "chess";
    std::string epsilon_schedule;
    bool strict = true;
};

std::vector<double> parse_schedule(const std::string& text) {
    if (text.empty()) return eigenrank::default_epsilon_schedule();
    std::vector<double> schedule;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = 0.0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
            throw eigenrank::ParseError("bad epsilon value '" + item + "'");
        schedule.push_back(v);
    }
    if (schedule.empty()) throw eigenrank::ParseError("empty epsilon schedule");
    return schedule;
}

// Opens the input stream: a file path or "-" for stdin.
std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path == "-") {
        return std::make_unique<std::istringstream>(
            std::string(std::istreambuf_iterator<char>(std::cin), {}));
    }
    auto file = std::make_unique<std::ifstream>(path);
    if (!*file) throw eigenrank::ParseError("cannot open input file '" + path + "'");
    return file;
}

void add_global_options(CLI::App* cmd, GlobalOptions& g) {
    cmd->add_option("--format", g.format, "Output format: json, table or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    cmd->add_option("--input-file,-f", g.input_file, "Input file; '-' reads stdin (default)");
    cmd->add_option("--tol", g.tol, "Convergence tolerance for iterative methods")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", g.max_iter, "Iteration cap for iterative methods");
    cmd->add_option("--tie-tol", g.tie_tol, "Relative tolerance for rank ties")
        ->check(CLI::NonNegativeNumber);
}

int run_tournament(const GlobalOptions& g, const std::string& method, const std::string& input_kind) {
    const eigenrank::ScoringScheme scheme = eigenrank::ScoringScheme::parse(g.scheme);
    auto in = open_input(g.input_file);

    eigenrank::NonNegMatrix matrix = eigenrank::NonNegMatrix::dense(1, {0.0});
    std::vector<std::string> labels;
    if (input_kind == "games") {
        auto parsed = eigenrank::parse_games(*in, scheme, g.strict);
        matrix = std::move(parsed.matrix);
        labels = std::move(parsed.labels);
    } else {
        matrix = eigenrank::parse_matrix(*in);
        labels = eigenrank::numbered_labels(matrix.dim());
    }

    eigenrank::RankReport report;
    if (method == "rowsum") {
        report = eigenrank::row_sum_score(matrix, scheme, g.tie_tol);
    } else if (method == "wei") {
        report = eigenrank::wei_score(matrix, scheme, g.tie_tol);
    } else if (method.rfind("iterate:", 0) == 0) {
        const std::string ks = method.substr(8);
        std::size_t k = 0;
        const auto res = std::from_chars(ks.data(), ks.data() + ks.size(), k);
        if (res.ec != std::errc{} || res.ptr != ks.data() + ks.size() || k == 0)
            throw eigenrank::ParseError("bad iterate count in '" + method + "'");
        report = eigenrank::kendall_score(matrix, k, scheme, g.tie_tol);
    } else if (method == "landau") {
        eigenrank::LandauOptions opts;
        opts.tol = g.tol;
        opts.max_iter = g.max_iter;
        opts.epsilon_schedule = parse_schedule(g.epsilon_schedule);
        opts.tie_tol = g.tie_tol;
        opts.scheme = scheme;
        report = eigenrank::landau_score(matrix, opts);
    } else {
        throw eigenrank::ParseError("unknown method '" + method +
                                    "' (expected rowsum, wei, iterate:<k> or landau)");
    }
    report.labels = labels;
    std::cout << eigenrank::emit_report(report, eigenrank::parse_format(g.format));

    const bool iterative = method == "landau";
    if (iterative && report.convergence.status != eigenrank::IterationStatus::Converged)
        return kExitNotConverged;
    return kExitOk;
}

int run_web(const GlobalOptions& g, double alpha) {
    auto in = open_input(g.input_file);
    const eigenrank::LinkGraph graph = eigenrank::parse_edges(*in);
    eigenrank::GoogleParams params;
    params.alpha = alpha;
    params.tol = g.tol;
    params.max_iter = g.max_iter;
    const eigenrank::RankReport report = eigenrank::pagerank(graph, params);
    std::cout << eigenrank::emit_report(report, eigenrank::parse_format(g.format));
    if (report.convergence.status != eigenrank::IterationStatus::Converged)
        return kExitNotConverged;
    return kExitOk;
}

int run_analyze(const GlobalOptions& g, const std::string& input_kind) {
    const eigenrank::ScoringScheme scheme = eigenrank::ScoringScheme::parse(g.scheme);
    auto in = open_input(g.input_file);

    eigenrank::NonNegMatrix matrix = eigenrank::NonNegMatrix::dense(1, {0.0});
    std::vector<std::string> labels;
    if (input_kind == "games") {
        auto parsed = eigenrank::parse_games(*in, scheme, g.strict);
        matrix = std::move(parsed.matrix);
        labels = std::move(parsed.labels);
    } else if (input_kind == "matrix") {
        matrix = eigenrank::parse_matrix(*in);
        labels = eigenrank::numbered_labels(matrix.dim());
    } else {
        const eigenrank::LinkGraph graph = eigenrank::parse_edges(*in);
        matrix = eigenrank::hyperlink_matrix(graph);
        labels = graph.pages();
    }

    const auto components = eigenrank::strongly_connected_components(matrix);
    eigenrank::Diagnostics diag;
    diag.scc_count = components.size();
    diag.irreducible = components.size() == 1;
    diag.dangling = eigenrank::dangling_columns(matrix);
    diag.validation = eigenrank::validate_round_robin(matrix, scheme);
    std::cout << eigenrank::emit_analysis(diag, components, labels,
                                          eigenrank::parse_format(g.format));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank -- spectral ranking for tournaments and link graphs"};
    app.require_subcommand(1);

    GlobalOptions g;

    auto* tournament = app.add_subcommand(
        "tournament", "Rank players of a round-robin tournament from games or a results matrix");
    std::string method;
    std::string tournament_input = "games";
    tournament->add_option("--method", method,
                           "Scoring method: rowsum, wei, iterate:<k> or landau")
        ->required();
    tournament->add_option("--input", tournament_input, "Input kind: games (CSV) or matrix")
        ->check(CLI::IsMember({"games", "matrix"}));
    tournament->add_option("--scheme", g.scheme,
                           "Scoring scheme: chess, football or <win>,<draw>,<loss>");
    tournament->add_option("--epsilon-schedule", g.epsilon_schedule,
                           "Comma list of decreasing epsilons for the reducible-matrix limit");
    tournament->add_flag("--strict,!--no-strict", g.strict,
                         "Reject repeated pairings (default); lenient mode accumulates");
    add_global_options(tournament, g);

    auto* web = app.add_subcommand("web", "PageRank over a directed link graph (edge list input)");
    double alpha = 0.15;
    web->add_option("--alpha", alpha,
                    "Uniform-teleport weight in [0, 1]; conventional damping factor is 1 - alpha")
        ->check(CLI::Range(0.0, 1.0));
    add_global_options(web, g);

    auto* analyze = app.add_subcommand(
        "analyze", "Structural diagnostics: components, irreducibility, dangling, validation");
    std::string analyze_input = "games";
    analyze->add_option("--input", analyze_input, "Input kind: games, matrix or edges")
        ->check(CLI::IsMember({"games", "matrix", "edges"}));
    analyze->add_option("--scheme", g.scheme,
                        "Scoring scheme used by the round-robin validation");
    analyze->add_flag("--strict,!--no-strict", g.strict,
                      "Reject repeated pairings (default); lenient mode accumulates");
    add_global_options(analyze, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (tournament->parsed()) return run_tournament(g, method, tournament_input);
        if (web->parsed()) return run_web(g, alpha);
        if (analyze->parsed()) return run_analyze(g, analyze_input);
    } catch (const eigenrank::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConverged;
    }
    return kExitOk;
}
