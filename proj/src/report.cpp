#include "qzn/report.hpp"

#include <cstdio>
#include <numbers>
#include <utility>

#include <json.hpp>

namespace qzn {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::string fixed(double v, int places) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

// label column left-aligned, value columns right-aligned, two-space gutter.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out;
    const auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::size_t pad = width[c] - cells[c].size();
            if (c == 0) {
                out += "  ";
                out += cells[c];
                out.append(pad, ' ');
            } else {
                out += "  ";
                out.append(pad, ' ');
                out += cells[c];
            }
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

std::string angle_table(const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& attribute_labels,
                        const AngleMatrix& angles) {
    std::vector<std::string> header{""};
    header.insert(header.end(), attribute_labels.begin(),
                  attribute_labels.end());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < angles.rows.size(); ++i) {
        std::vector<std::string> row{row_labels[i]};
        for (const AnglePair& p : angles.rows[i]) {
            row.push_back(fixed(p.a * kDegPerRad, 3) + "/" +
                          fixed(p.b * kDegPerRad, 3));
        }
        rows.push_back(std::move(row));
    }
    return format_table(header, rows);
}

const char* score_title(Algorithm a) {
    switch (a) {
    case Algorithm::Qzn: return "quantum fidelity matrix";
    case Algorithm::Zn: return "Pearson correlation matrix";
    case Algorithm::Qfs: return "quantum fuzzy-set fidelity matrix";
    }
    return "scores";
}

} // namespace

DiagnosisRun run_diagnosis(const ZMatrix& szm, const ZMatrix& rzm,
                           const RunConfig& config) {
    DiagnosisRun run;
    run.config = config;
    run.sample_labels = szm.row_labels;
    run.reference_labels = rzm.row_labels;
    run.attribute_labels = szm.column_labels;
    run.sample_angles = rotation_angles(szm);
    run.reference_angles = rotation_angles(rzm);
    switch (config.algorithm) {
    case Algorithm::Qzn: {
        const FidelityMatrix qfm = build_qfm(szm, rzm, config.mode);
        for (const auto& row : qfm.values) {
            run.scores.emplace_back(row.begin(), row.end());
        }
        run.report = decide(qfm, rzm.row_labels);
        break;
    }
    case Algorithm::Zn: {
        ZnResult r = zn_pipeline(szm, rzm);
        run.scores = std::move(r.matrix.values);
        run.report = std::move(r.report);
        break;
    }
    case Algorithm::Qfs: {
        QfsResult r = qfs_pipeline(szm, rzm, config.mode);
        for (const auto& row : r.matrix.values) {
            run.scores.emplace_back(row.begin(), row.end());
        }
        run.report = std::move(r.report);
        break;
    }
    }
    return run;
}

std::string render_text(const DiagnosisRun& run) {
    std::string out;
    out += "algorithm: ";
    out += algorithm_name(run.config.algorithm);
    out += "\nmode: ";
    out += mode_name(run.config.mode);
    if (run.config.mode.sampled()) {
        out += " (shots " + std::to_string(run.config.mode.shots) +
               ", seed " + std::to_string(run.config.mode.seed) + ")";
    }
    out += "\n\nrotation angles (degrees, a/b):\n\nsamples:\n";
    out += angle_table(run.sample_labels, run.attribute_labels,
                       run.sample_angles);
    out += "\nreferences:\n";
    out += angle_table(run.reference_labels, run.attribute_labels,
                       run.reference_angles);
    out += "\nscores (";
    out += score_title(run.config.algorithm);
    out += "):\n";
    std::vector<std::string> header{""};
    header.insert(header.end(), run.reference_labels.begin(),
                  run.reference_labels.end());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < run.scores.size(); ++i) {
        std::vector<std::string> row{run.sample_labels[i]};
        for (const auto& v : run.scores[i]) {
            row.push_back(v ? fixed(*v, 4) : "undefined");
        }
        rows.push_back(std::move(row));
    }
    out += format_table(header, rows);
    out += "\ndecisions:\n";
    for (const Decision& d : run.report.decisions) {
        out += "  " + run.sample_labels[d.sample_index] + " -> " +
               d.reference_label + " (score " + fixed(d.score, 4) + ")";
        if (d.tie) out += " [tie]";
        out += '\n';
    }
    return out;
}

std::string render_json(const DiagnosisRun& run) {
    using nlohmann::json;
    json config;
    config["algorithm"] = algorithm_name(run.config.algorithm);
    config["mode"] = mode_name(run.config.mode);
    if (run.config.mode.sampled()) {
        config["shots"] = run.config.mode.shots;
        config["seed"] = run.config.mode.seed;
    }
    const auto angle_rows = [](const AngleMatrix& m) {
        json rows = json::array();
        for (const auto& row : m.rows) {
            json r = json::array();
            for (const AnglePair& p : row) {
                r.push_back(json{{"a", p.a * kDegPerRad},
                                 {"b", p.b * kDegPerRad}});
            }
            rows.push_back(std::move(r));
        }
        return rows;
    };
    json scores = json::array();
    for (const auto& row : run.scores) {
        json r = json::array();
        for (const auto& v : row) {
            if (v) {
                r.push_back(*v);
            } else {
                r.push_back(nullptr);
            }
        }
        scores.push_back(std::move(r));
    }
    json decisions = json::array();
    for (const Decision& d : run.report.decisions) {
        decisions.push_back(json{{"sample", run.sample_labels[d.sample_index]},
                                 {"reference", d.reference_label},
                                 {"score", d.score},
                                 {"tie", d.tie}});
    }
    json root;
    root["config"] = std::move(config);
    root["angles"] =
        json{{"samples", angle_rows(run.sample_angles)},
             {"references", angle_rows(run.reference_angles)}};
    root["scores"] = std::move(scores);
    root["decisions"] = std::move(decisions);
    return root.dump(2) + "\n";
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Qzn: return "qzn";
    case Algorithm::Zn: return "zn";
    case Algorithm::Qfs: return "qfs";
    }
    return "?";
}

const char* mode_name(const FidelityMode& mode) {
    switch (mode.kind) {
    case FidelityMode::Kind::Exact: return "exact";
    case FidelityMode::Kind::Factorized: return "factorized";
    case FidelityMode::Kind::CircuitExact: return "circuit-exact";
    case FidelityMode::Kind::CircuitSampled: return "sampled";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    if (name == "qzn") return Algorithm::Qzn;
    if (name == "zn") return Algorithm::Zn;
    if (name == "qfs") return Algorithm::Qfs;
    return std::nullopt;
}

std::optional<FidelityMode::Kind> parse_mode(const std::string& name) {
    if (name == "exact") return FidelityMode::Kind::Exact;
    if (name == "factorized") return FidelityMode::Kind::Factorized;
    if (name == "circuit-exact") return FidelityMode::Kind::CircuitExact;
    if (name == "sampled") return FidelityMode::Kind::CircuitSampled;
    return std::nullopt;
}

} // namespace qzn
