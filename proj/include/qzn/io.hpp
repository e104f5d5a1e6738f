#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qzn/madm.hpp"

namespace qzn {

/// One entity as it appears in an input file: a label plus K (a, b)
/// membership pairs, not yet range-validated.
struct AttributePair {
    double a = 0.0;
    double b = 0.0;
};

struct EntityRecord {
    std::string label;
    std::vector<AttributePair> attributes;
};

/// Parsed input file: the sample and reference entities, plus optional
/// attribute names shared by both.
struct InputDocument {
    std::vector<std::string> attribute_names;
    std::vector<EntityRecord> samples;
    std::vector<EntityRecord> references;
};

enum class InputFormat { Json, Csv };

/// Chooses by extension: ".csv" means CSV, anything else JSON.
InputFormat detect_format(const std::string& path);

/// Syntax-level parsing; errors carry line/position information.
InputDocument parse_document(const std::string& text, InputFormat format);

/// Reads and parses a file. Unreadable paths raise ParseError.
InputDocument load_document(const std::string& path, InputFormat format);

/// Canonical JSON rendering; parse_document inverts it exactly.
std::string emit_json(const InputDocument& doc);

/// Semantic validation: nonempty lists, unique labels, one shared K,
/// memberships in range. Errors name the offending entity and cell.
std::pair<ZMatrix, ZMatrix> to_matrices(const InputDocument& doc);

/// load_document + to_matrices.
std::pair<ZMatrix, ZMatrix> ingest(const std::string& path,
                                   InputFormat format);

} // namespace qzn
