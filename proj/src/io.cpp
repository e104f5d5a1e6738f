#include "qzn/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace qzn {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_number(const std::string& field, std::size_t line_no,
                    std::size_t field_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": field " +
                         std::to_string(field_no) + " (\"" + field +
                         "\") is not a number");
    }
    return value;
}

void check_csv_header(const std::vector<std::string>& fields,
                      std::size_t line_no) {
    if (fields.size() < 3 || fields.size() % 2 == 0 ||
        fields[0] != "label") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header \"label,a1,b1,...,aK,bK\"");
    }
    const std::size_t k = (fields.size() - 1) / 2;
    for (std::size_t j = 0; j < k; ++j) {
        const std::string a = "a" + std::to_string(j + 1);
        const std::string b = "b" + std::to_string(j + 1);
        if (fields[2 * j + 1] != a || fields[2 * j + 2] != b) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected header columns " + a + "," + b +
                             " at position " + std::to_string(2 * j + 2));
        }
    }
}

// One CSV file holds two blocks, samples then references, each led by its
// own "label,a1,b1,..." header row and separated by a blank line.
InputDocument parse_csv(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::istringstream in(text);
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            lines.emplace_back(no, trim(line));
        }
    }
    std::vector<std::vector<EntityRecord>> blocks;
    std::size_t i = 0;
    while (i < lines.size()) {
        while (i < lines.size() && lines[i].second.empty()) ++i;
        if (i == lines.size()) break;
        const auto header = split_fields(lines[i].second);
        check_csv_header(header, lines[i].first);
        const std::size_t k = (header.size() - 1) / 2;
        ++i;
        std::vector<EntityRecord> block;
        while (i < lines.size() && !lines[i].second.empty()) {
            const auto fields = split_fields(lines[i].second);
            if (fields.size() != header.size()) {
                throw ParseError("line " + std::to_string(lines[i].first) +
                                 ": expected " +
                                 std::to_string(header.size()) +
                                 " fields, got " +
                                 std::to_string(fields.size()));
            }
            EntityRecord rec;
            rec.label = fields[0];
            rec.attributes.reserve(k);
            for (std::size_t j = 0; j < k; ++j) {
                rec.attributes.push_back(AttributePair{
                    parse_number(fields[2 * j + 1], lines[i].first,
                                 2 * j + 2),
                    parse_number(fields[2 * j + 2], lines[i].first,
                                 2 * j + 3)});
            }
            block.push_back(std::move(rec));
            ++i;
        }
        blocks.push_back(std::move(block));
    }
    if (blocks.size() != 2) {
        throw ParseError("expected two blocks (samples, then references) "
                         "separated by a blank line, found " +
                         std::to_string(blocks.size()));
    }
    InputDocument doc;
    doc.samples = std::move(blocks[0]);
    doc.references = std::move(blocks[1]);
    return doc;
}

double number_at(const json& node, const std::string& path) {
    if (!node.is_number()) {
        throw ParseError(path + " must be a number");
    }
    return node.get<double>();
}

std::vector<EntityRecord> entities_at(const json& node,
                                      const std::string& path) {
    if (!node.is_array()) {
        throw ParseError(path + " must be an array");
    }
    std::vector<EntityRecord> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        const std::string here = path + "[" + std::to_string(i) + "]";
        const json& e = node[i];
        if (!e.is_object() || !e.contains("label") ||
            !e.contains("attributes")) {
            throw ParseError(here +
                             " must be {\"label\", \"attributes\"}");
        }
        if (!e["label"].is_string()) {
            throw ParseError(here + ".label must be a string");
        }
        if (!e["attributes"].is_array()) {
            throw ParseError(here + ".attributes must be an array");
        }
        EntityRecord rec;
        rec.label = e["label"].get<std::string>();
        const json& attrs = e["attributes"];
        rec.attributes.reserve(attrs.size());
        for (std::size_t j = 0; j < attrs.size(); ++j) {
            const std::string apath =
                here + ".attributes[" + std::to_string(j) + "]";
            const json& pair = attrs[j];
            if (!pair.is_object() || !pair.contains("a") ||
                !pair.contains("b")) {
                throw ParseError(apath + " must be {\"a\", \"b\"}");
            }
            rec.attributes.push_back(
                AttributePair{number_at(pair["a"], apath + ".a"),
                              number_at(pair["b"], apath + ".b")});
        }
        out.push_back(std::move(rec));
    }
    return out;
}

InputDocument parse_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!root.is_object() || !root.contains("samples") ||
        !root.contains("references")) {
        throw ParseError(
            "document root must be {\"samples\", \"references\"}");
    }
    InputDocument doc;
    doc.samples = entities_at(root["samples"], "samples");
    doc.references = entities_at(root["references"], "references");
    if (root.contains("attribute_names")) {
        const json& names = root["attribute_names"];
        if (!names.is_array()) {
            throw ParseError("attribute_names must be an array of strings");
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!names[i].is_string()) {
                throw ParseError("attribute_names[" + std::to_string(i) +
                                 "] must be a string");
            }
            doc.attribute_names.push_back(names[i].get<std::string>());
        }
    }
    return doc;
}

void check_unique_labels(const std::vector<EntityRecord>& entities,
                         const char* list_name) {
    std::unordered_set<std::string> seen;
    for (const EntityRecord& e : entities) {
        if (!seen.insert(e.label).second) {
            throw ValidationError(std::string(list_name) +
                                  ": duplicate label \"" + e.label + "\"");
        }
    }
}

ZMatrix matrix_of(const std::vector<EntityRecord>& entities,
                  const std::vector<std::string>& column_labels,
                  const char* list_name) {
    std::vector<std::vector<std::pair<double, double>>> raw;
    std::vector<std::string> labels;
    raw.reserve(entities.size());
    labels.reserve(entities.size());
    for (const EntityRecord& e : entities) {
        std::vector<std::pair<double, double>> row;
        row.reserve(e.attributes.size());
        for (const AttributePair& p : e.attributes) {
            row.emplace_back(p.a, p.b);
        }
        raw.push_back(std::move(row));
        labels.push_back(e.label);
    }
    try {
        return build_zmatrix(raw, std::move(labels), column_labels);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(list_name) + ": " + e.what());
    }
}

} // namespace

InputFormat detect_format(const std::string& path) {
    if (path.size() >= 4) {
        std::string ext = path.substr(path.size() - 4);
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (ext == ".csv") return InputFormat::Csv;
    }
    return InputFormat::Json;
}

InputDocument parse_document(const std::string& text, InputFormat format) {
    return format == InputFormat::Csv ? parse_csv(text) : parse_json(text);
}

InputDocument load_document(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), format);
}

std::string emit_json(const InputDocument& doc) {
    json root = json::object();
    if (!doc.attribute_names.empty()) {
        root["attribute_names"] = doc.attribute_names;
    }
    const auto entity_list = [](const std::vector<EntityRecord>& entities) {
        json list = json::array();
        for (const EntityRecord& e : entities) {
            json attrs = json::array();
            for (const AttributePair& p : e.attributes) {
                attrs.push_back(json{{"a", p.a}, {"b", p.b}});
            }
            list.push_back(json{{"label", e.label},
                                {"attributes", std::move(attrs)}});
        }
        return list;
    };
    root["samples"] = entity_list(doc.samples);
    root["references"] = entity_list(doc.references);
    return root.dump(2) + "\n";
}

std::pair<ZMatrix, ZMatrix> to_matrices(const InputDocument& doc) {
    if (doc.samples.empty() || doc.references.empty()) {
        throw ValidationError(
            "document needs at least one sample and one reference");
    }
    check_unique_labels(doc.samples, "samples");
    check_unique_labels(doc.references, "references");
    const std::size_t k = doc.samples.front().attributes.size();
    if (k == 0) {
        throw ValidationError("samples: \"" + doc.samples.front().label +
                              "\" has no attributes");
    }
    const auto check_k = [k](const std::vector<EntityRecord>& entities,
                             const char* list_name) {
        for (const EntityRecord& e : entities) {
            if (e.attributes.size() != k) {
                throw ValidationError(
                    std::string(list_name) + ": \"" + e.label + "\" has " +
                    std::to_string(e.attributes.size()) +
                    " attributes, expected " + std::to_string(k));
            }
        }
    };
    check_k(doc.samples, "samples");
    check_k(doc.references, "references");
    if (!doc.attribute_names.empty() && doc.attribute_names.size() != k) {
        throw ValidationError(std::to_string(doc.attribute_names.size()) +
                              " attribute names for " + std::to_string(k) +
                              " attributes");
    }
    return {matrix_of(doc.samples, doc.attribute_names, "samples"),
            matrix_of(doc.references, doc.attribute_names, "references")};
}

std::pair<ZMatrix, ZMatrix> ingest(const std::string& path,
                                   InputFormat format) {
    return to_matrices(load_document(path, format));
}

} // namespace qzn
