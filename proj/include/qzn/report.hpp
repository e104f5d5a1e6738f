#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qzn/baselines.hpp"
#include "qzn/madm.hpp"

namespace qzn {

enum class Algorithm { Qzn, Zn, Qfs };

enum class OutputFormat { Text, Json };

/// One diagnosis run's knobs. shots and seed live inside mode and matter
/// only when the mode samples; the zn algorithm is classical and ignores
/// the mode entirely.
struct RunConfig {
    Algorithm algorithm = Algorithm::Qzn;
    FidelityMode mode = FidelityMode::exact();
    OutputFormat format = OutputFormat::Text;
};

/// Everything a rendering needs: inputs' labels, the rotation-angle
/// tables, the score grid (empty cells where a score is undefined), and
/// the per-sample verdicts.
struct DiagnosisRun {
    RunConfig config;
    std::vector<std::string> sample_labels;
    std::vector<std::string> reference_labels;
    std::vector<std::string> attribute_labels;
    AngleMatrix sample_angles;
    AngleMatrix reference_angles;
    std::vector<std::vector<std::optional<double>>> scores;
    DecisionReport report;
};

/// Runs the selected algorithm over validated matrices.
DiagnosisRun run_diagnosis(const ZMatrix& szm, const ZMatrix& rzm,
                           const RunConfig& config);

/// Human-readable report: angle tables in degrees (3 decimals), score
/// matrix (4 decimals), one verdict line per sample.
std::string render_text(const DiagnosisRun& run);

/// Machine-readable report carrying the same values at full precision:
/// {config, angles:{samples, references}, scores, decisions}. Identical
/// runs render byte-identically.
std::string render_json(const DiagnosisRun& run);

const char* algorithm_name(Algorithm a);
const char* mode_name(const FidelityMode& mode);
std::optional<Algorithm> parse_algorithm(const std::string& name);
std::optional<FidelityMode::Kind> parse_mode(const std::string& name);

} // namespace qzn
