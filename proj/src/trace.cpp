#include "surd/trace.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace surd {

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "jsonl") return OutputFormat::Jsonl;
    throw std::invalid_argument("unknown output format: '" + std::string(name) + "'");
}

namespace {

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ',';
        os << csv_field(t.columns[i]);
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_field(row[i]);
        }
        os << '\n';
    }
    return os.str();
}

bool is_integer_literal(const std::string& v) {
    if (v.empty()) return false;
    return std::all_of(v.begin(), v.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string render_jsonl(const Table& t) {
    std::ostringstream os;
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < t.columns.size() && i < row.size(); ++i) {
            if (t.columns[i] == "step" && is_integer_literal(row[i])) {
                obj[t.columns[i]] = std::stoll(row[i]);
            } else {
                obj[t.columns[i]] = row[i];
            }
        }
        os << obj.dump() << '\n';
    }
    return os.str();
}

std::string render_text(const Table& t) {
    if (!t.text_lines.empty()) {
        std::string out;
        for (const auto& line : t.text_lines) {
            out += line;
            out += '\n';
        }
        return out;
    }
    // Aligned columns: header row, then data.
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size(), ' ');
        }
        os << '\n';
    };
    emit(t.columns);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

}  // namespace

std::string render(const Table& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return render_csv(table);
        case OutputFormat::Jsonl: return render_jsonl(table);
        case OutputFormat::Text: return render_text(table);
    }
    return {};
}

}  // namespace surd
