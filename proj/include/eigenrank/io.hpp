#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigenrank/matrix.hpp"
#include "eigenrank/scoring.hpp"
#include "eigenrank/tournament.hpp"
#include "eigenrank/web.hpp"

namespace eigenrank {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GameRecord {
    enum class Result { WhiteWin, BlackWin, Draw };
    std::string white;
    std::string black;
    Result result;  // from white's perspective
};

struct ParsedGames {
    NonNegMatrix matrix;
    std::vector<std::string> labels;  // first-appearance order
};

/// CSV lines `white,black,result` with result in {1-0, 0-1, 1/2-1/2} (also
/// accepted: 1, 0, 0.5, =). `#` starts a comment line. Strict mode rejects
/// repeated pairings; lenient mode accumulates points across repeats
/// (double round-robin leagues). Self-games are always an error.
ParsedGames parse_games(std::istream& in, const ScoringScheme& scheme, bool strict = true);

/// n whitespace-separated rows of n tokens; tokens are decimals or fractions
/// `p/q`. Rejects ragged rows, negative and non-finite entries.
NonNegMatrix parse_matrix(std::istream& in);

/// Lines `src dst [count]` (count defaults to 1, must be positive), `node id`
/// for isolated pages, `#` comment lines. Duplicate edges accumulate;
/// self-links are dropped with a warning counter.
LinkGraph parse_edges(std::istream& in);

enum class OutputFormat { Json, Table, Csv };

OutputFormat parse_format(const std::string& text);

/// Serialized report. JSON uses stable key order
///   {method, eigenvalue, converged, iterations, epsilon_used, scores,
///    diagnostics}
/// with scores entries {id, score, share, rank, tie_group}; table prints
/// scores to 6 significant digits; csv emits `rank,participant,score,share`.
std::string emit_report(const RankReport& r, OutputFormat format);

/// Parses emit_report's JSON back into a report (fields covered by the schema).
RankReport parse_report_json(const std::string& text);

/// Structural diagnostics only (the `analyze` command).
std::string emit_analysis(const Diagnostics& d,
                          const std::vector<std::vector<std::size_t>>& components,
                          const std::vector<std::string>& labels, OutputFormat format);

/// Matrix as whitespace-separated rows with round-trip-exact numbers.
std::string emit_matrix(const NonNegMatrix& m);

/// Default participant labels "1".."n".
std::vector<std::string> numbered_labels(std::size_t n);

}  // namespace eigenrank
