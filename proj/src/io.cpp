#include "eigenrank/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace eigenrank {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool is_comment_or_blank(const std::string& line) {
    const std::string t = trim(line);
    return t.empty() || t.front() == '#';
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<std::string> whitespace_tokens(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

double parse_double(const std::string& tok, std::size_t line_no) {
    double value = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        fail(line_no, "bad number '" + tok + "'");
    return value;
}

// Decimal or fraction p/q, parsed to the nearest binary64.
double parse_number_token(const std::string& tok, std::size_t line_no) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return parse_double(tok, line_no);
    const double p = parse_double(tok.substr(0, slash), line_no);
    const double q = parse_double(tok.substr(slash + 1), line_no);
    if (q == 0.0) fail(line_no, "fraction with zero denominator '" + tok + "'");
    return p / q;
}

// Shortest decimal representation that round-trips to the same binary64.
std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_sig6(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

GameRecord::Result parse_result_token(const std::string& tok, std::size_t line_no) {
    if (tok == "1-0" || tok == "1") return GameRecord::Result::WhiteWin;
    if (tok == "0-1" || tok == "0") return GameRecord::Result::BlackWin;
    if (tok == "1/2-1/2" || tok == "0.5" || tok == "=") return GameRecord::Result::Draw;
    fail(line_no, "unknown result '" + tok + "' (expected 1-0, 0-1, 1/2-1/2, 1, 0, 0.5 or =)");
}

}  // namespace

std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    return labels;
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "table") return OutputFormat::Table;
    if (text == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + text + "' (expected json, table or csv)");
}

ParsedGames parse_games(std::istream& in, const ScoringScheme& scheme, bool strict) {
    scheme.validate();
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    auto participant = [&](const std::string& id) {
        const auto it = index.find(id);
        if (it != index.end()) return it->second;
        const std::size_t idx = labels.size();
        labels.push_back(id);
        index.emplace(id, idx);
        return idx;
    };

    struct Game {
        std::size_t white, black;
        GameRecord::Result result;
    };
    std::vector<Game> games;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) fail(line_no, "expected 'white,black,result'");
        const std::string white = trim(fields[0]);
        const std::string black = trim(fields[1]);
        const std::string result = trim(fields[2]);
        if (white.empty() || black.empty()) fail(line_no, "empty participant id");
        if (white == black) fail(line_no, "self-game: '" + white + "' plays both sides");
        const std::size_t w = participant(white);
        const std::size_t b = participant(black);
        const auto pairing = std::minmax(w, b);
        if (!seen.insert(pairing).second && strict)
            fail(line_no, "repeated pairing '" + white + "' vs '" + black +
                              "' (use lenient mode to accumulate)");
        games.push_back({w, b, parse_result_token(result, line_no)});
    }
    if (games.empty()) throw ParseError("no games found in input");

    const std::size_t n = labels.size();
    std::vector<double> data(n * n, 0.0);
    for (const Game& g : games) {
        switch (g.result) {
            case GameRecord::Result::WhiteWin:
                data[g.white * n + g.black] += scheme.win;
                data[g.black * n + g.white] += scheme.loss;
                break;
            case GameRecord::Result::BlackWin:
                data[g.white * n + g.black] += scheme.loss;
                data[g.black * n + g.white] += scheme.win;
                break;
            case GameRecord::Result::Draw:
                data[g.white * n + g.black] += scheme.draw;
                data[g.black * n + g.white] += scheme.draw;
                break;
        }
    }
    return {NonNegMatrix::dense(n, std::move(data)), std::move(labels)};
}

NonNegMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::size_t n = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto tokens = whitespace_tokens(line);
        if (rows.empty()) n = tokens.size();
        if (tokens.size() != n) fail(line_no, "ragged row: expected " + std::to_string(n) + " entries");
        if (rows.size() == n) fail(line_no, "more than " + std::to_string(n) + " rows");
        std::vector<double> row;
        row.reserve(n);
        for (const auto& tok : tokens) {
            const double v = parse_number_token(tok, line_no);
            if (!std::isfinite(v)) fail(line_no, "non-finite entry '" + tok + "'");
            if (v < 0.0) fail(line_no, "negative entry '" + tok + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no matrix rows found in input");
    if (rows.size() != n)
        throw ParseError("matrix is not square: " + std::to_string(rows.size()) + " rows of " +
                         std::to_string(n) + " entries");
    return NonNegMatrix::dense_from_rows(rows);
}

LinkGraph parse_edges(std::istream& in) {
    LinkGraph g;
    std::string line;
    std::size_t line_no = 0;
    bool saw_line = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto tokens = whitespace_tokens(line);
        saw_line = true;
        if (tokens.size() == 2 && tokens[0] == "node") {
            g.add_page(tokens[1]);
            continue;
        }
        if (tokens.size() < 2 || tokens.size() > 3)
            fail(line_no, "expected 'src dst [count]' or 'node id'");
        std::int64_t count = 1;
        if (tokens.size() == 3) {
            const auto& tok = tokens[2];
            const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), count);
            if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
                fail(line_no, "bad count '" + tok + "'");
            if (count <= 0) fail(line_no, "count must be positive");
        }
        g.add_link(tokens[0], tokens[1], count);
    }
    if (!saw_line) throw ParseError("no edges or nodes found in input");
    return g;
}

namespace {

std::string label_of(const RankReport& r, std::size_t index) {
    return index < r.labels.size() ? r.labels[index] : std::to_string(index + 1);
}

ordered_json diagnostics_json(const Diagnostics& d, const std::vector<std::string>& labels) {
    ordered_json j;
    j["irreducible"] = d.irreducible;
    j["scc_count"] = d.scc_count;
    ordered_json dangling = ordered_json::array();
    for (const std::size_t idx : d.dangling)
        dangling.push_back(idx < labels.size() ? labels[idx] : std::to_string(idx + 1));
    j["dangling"] = std::move(dangling);
    j["validation"] = {{"valid", d.validation.valid}, {"violations", d.validation.violations}};
    if (d.residual) j["residual"] = *d.residual;
    return j;
}

std::string emit_json(const RankReport& r) {
    ordered_json j;
    j["method"] = r.method;
    if (r.eigenvalue) j["eigenvalue"] = *r.eigenvalue;
    else j["eigenvalue"] = nullptr;
    j["converged"] = r.convergence.status == IterationStatus::Converged;
    j["iterations"] = r.convergence.iterations;
    if (r.convergence.epsilon_used) j["epsilon_used"] = *r.convergence.epsilon_used;
    else j["epsilon_used"] = nullptr;

    ordered_json scores = ordered_json::array();
    for (const RankedPlayer& p : r.ranking) {
        ordered_json entry;
        entry["id"] = label_of(r, p.index);
        entry["score"] = p.score;
        if (p.share) entry["share"] = *p.share;
        else entry["share"] = nullptr;
        entry["rank"] = p.rank;
        entry["tie_group"] = p.tie_group;
        scores.push_back(std::move(entry));
    }
    j["scores"] = std::move(scores);
    j["diagnostics"] = diagnostics_json(r.diagnostics, r.labels);
    if (r.epsilon_perturbation)
        j["diagnostics"]["epsilon_scheme"] = to_string(*r.epsilon_perturbation);
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump(2) + "\n";
}

std::string emit_table(const RankReport& r) {
    std::ostringstream out;
    out << "method: " << r.method << "\n";
    if (r.eigenvalue) out << "eigenvalue: " << format_sig6(*r.eigenvalue) << "\n";
    out << "status: " << to_string(r.convergence.status) << " (" << r.convergence.iterations
        << " iterations)\n";
    if (r.convergence.epsilon_used) {
        out << "epsilon: " << format_double(*r.convergence.epsilon_used);
        if (r.epsilon_perturbation) out << " (" << to_string(*r.epsilon_perturbation) << ")";
        out << "\n";
    }
    out << "\n";

    std::size_t id_width = std::string("participant").size();
    for (const RankedPlayer& p : r.ranking) id_width = std::max(id_width, label_of(r, p.index).size());
    out << std::left << std::setw(6) << "rank" << std::setw(static_cast<int>(id_width) + 2)
        << "participant" << std::setw(14) << "score" << "share\n";
    for (const RankedPlayer& p : r.ranking) {
        out << std::left << std::setw(6) << p.rank << std::setw(static_cast<int>(id_width) + 2)
            << label_of(r, p.index) << std::setw(14) << format_sig6(p.score)
            << (p.share ? format_sig6(*p.share) : "-") << "\n";
    }
    out << "\n";
    out << "irreducible: " << (r.diagnostics.irreducible ? "yes" : "no") << " ("
        << r.diagnostics.scc_count << " component" << (r.diagnostics.scc_count == 1 ? "" : "s")
        << ")\n";
    if (!r.diagnostics.dangling.empty()) {
        out << "dangling:";
        for (const std::size_t idx : r.diagnostics.dangling) out << " " << label_of(r, idx);
        out << "\n";
    }
    if (r.diagnostics.validation.valid) {
        out << "validation: ok\n";
    } else {
        out << "validation: " << r.diagnostics.validation.violations.size() << " violation(s)\n";
        for (const auto& v : r.diagnostics.validation.violations) out << "  - " << v << "\n";
    }
    if (r.diagnostics.residual)
        out << "residual: " << format_double(*r.diagnostics.residual) << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    return out.str();
}

std::string emit_csv(const RankReport& r) {
    std::ostringstream out;
    out << "rank,participant,score,share\n";
    for (const RankedPlayer& p : r.ranking) {
        out << p.rank << "," << csv_escape(label_of(r, p.index)) << "," << format_double(p.score)
            << "," << (p.share ? format_double(*p.share) : "") << "\n";
    }
    return out.str();
}

}  // namespace

std::string emit_report(const RankReport& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return emit_json(r);
        case OutputFormat::Table: return emit_table(r);
        case OutputFormat::Csv: return emit_csv(r);
    }
    throw std::logic_error("unreachable");
}

RankReport parse_report_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    RankReport r;
    r.method = j.at("method").get<std::string>();
    if (!j.at("eigenvalue").is_null()) r.eigenvalue = j.at("eigenvalue").get<double>();
    r.convergence.status = j.at("converged").get<bool>() ? IterationStatus::Converged
                                                         : IterationStatus::MaxIterations;
    r.convergence.iterations = j.at("iterations").get<std::size_t>();
    if (!j.at("epsilon_used").is_null())
        r.convergence.epsilon_used = j.at("epsilon_used").get<double>();

    bool any_share = false;
    for (const auto& entry : j.at("scores")) {
        RankedPlayer p;
        p.index = r.labels.size();
        r.labels.push_back(entry.at("id").get<std::string>());
        p.score = entry.at("score").get<double>();
        if (!entry.at("share").is_null()) {
            p.share = entry.at("share").get<double>();
            any_share = true;
        }
        p.rank = entry.at("rank").get<std::size_t>();
        p.tie_group = entry.at("tie_group").get<std::size_t>();
        r.scores.push_back(p.score);
        r.ranking.push_back(std::move(p));
    }
    if (any_share) {
        ScoreVector shares(r.ranking.size(), 0.0);
        for (const RankedPlayer& p : r.ranking) shares[p.index] = p.share.value_or(0.0);
        r.shares = std::move(shares);
    }

    const auto& d = j.at("diagnostics");
    r.diagnostics.irreducible = d.at("irreducible").get<bool>();
    r.diagnostics.scc_count = d.at("scc_count").get<std::size_t>();
    for (const auto& id : d.at("dangling")) {
        const std::string label = id.get<std::string>();
        const auto it = std::find(r.labels.begin(), r.labels.end(), label);
        if (it != r.labels.end())
            r.diagnostics.dangling.push_back(static_cast<std::size_t>(it - r.labels.begin()));
    }
    std::sort(r.diagnostics.dangling.begin(), r.diagnostics.dangling.end());
    r.diagnostics.validation.valid = d.at("validation").at("valid").get<bool>();
    r.diagnostics.validation.violations =
        d.at("validation").at("violations").get<std::vector<std::string>>();
    if (d.contains("residual")) r.diagnostics.residual = d.at("residual").get<double>();
    if (d.contains("epsilon_scheme"))
        r.epsilon_perturbation = d.at("epsilon_scheme").get<std::string>() == "decisive-pairs"
                                     ? PerturbationKind::DecisivePairs
                                     : PerturbationKind::UniformOffDiagonal;
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

std::string emit_analysis(const Diagnostics& d,
                          const std::vector<std::vector<std::size_t>>& components,
                          const std::vector<std::string>& labels, OutputFormat format) {
    auto label_at = [&](std::size_t idx) {
        return idx < labels.size() ? labels[idx] : std::to_string(idx + 1);
    };
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["irreducible"] = d.irreducible;
        j["scc_count"] = d.scc_count;
        ordered_json comps = ordered_json::array();
        for (const auto& comp : components) {
            ordered_json members = ordered_json::array();
            for (const std::size_t idx : comp) members.push_back(label_at(idx));
            comps.push_back(std::move(members));
        }
        j["components"] = std::move(comps);
        ordered_json dangling = ordered_json::array();
        for (const std::size_t idx : d.dangling) dangling.push_back(label_at(idx));
        j["dangling"] = std::move(dangling);
        j["validation"] = {{"valid", d.validation.valid}, {"violations", d.validation.violations}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "key,value\n";
        out << "irreducible," << (d.irreducible ? "true" : "false") << "\n";
        out << "scc_count," << d.scc_count << "\n";
        for (const auto& comp : components) {
            std::string joined;
            for (const std::size_t idx : comp) {
                if (!joined.empty()) joined += ";";
                joined += label_at(idx);
            }
            out << "component," << csv_escape(joined) << "\n";
        }
        std::string joined;
        for (const std::size_t idx : d.dangling) {
            if (!joined.empty()) joined += ";";
            joined += label_at(idx);
        }
        out << "dangling," << csv_escape(joined) << "\n";
        out << "valid," << (d.validation.valid ? "true" : "false") << "\n";
        for (const auto& v : d.validation.violations) out << "violation," << csv_escape(v) << "\n";
        return out.str();
    }
    out << "irreducible: " << (d.irreducible ? "yes" : "no") << "\n";
    out << "components (" << d.scc_count << "):\n";
    for (const auto& comp : components) {
        out << "  {";
        for (std::size_t k = 0; k < comp.size(); ++k) out << (k ? ", " : " ") << label_at(comp[k]);
        out << " }\n";
    }
    out << "dangling:";
    if (d.dangling.empty()) out << " none";
    for (const std::size_t idx : d.dangling) out << " " << label_at(idx);
    out << "\n";
    if (d.validation.valid) {
        out << "validation: ok\n";
    } else {
        out << "validation: " << d.validation.violations.size() << " violation(s)\n";
        for (const auto& v : d.validation.violations) out << "  - " << v << "\n";
    }
    return out.str();
}

std::string emit_matrix(const NonNegMatrix& m) {
    std::ostringstream out;
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << " ";
            out << format_double(m(i, j));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace eigenrank
