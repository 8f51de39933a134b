// Tabular step traces and their text / CSV / JSONL renderings.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace surd {

enum class OutputFormat { Text, Csv, Jsonl };

// Accepts "text", "csv", "jsonl"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

/// One algorithm trace. `columns` and `rows` drive the machine-readable
/// formats; `text_lines`, when set, is the exact text rendering (the paper
/// tables are laid out by hand there). Without text_lines, text mode falls
/// back to aligned columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> text_lines;
};

// Renders with a trailing newline unless the table is empty. Values named
// "step" are emitted as JSON numbers, everything else as strings.
std::string render(const Table& table, OutputFormat format);

}  // namespace surd
