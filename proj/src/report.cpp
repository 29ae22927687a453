#include "reslab/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace reslab {

std::string to_csv(const ReportTable& t) {
    std::string out;
    auto emit_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    emit_row(t.header);
    for (const auto& row : t.rows) emit_row(row);
    return out;
}

namespace {

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

void emit_json_value(std::string& out, const std::string& v) {
    if (v == "true" || v == "false" || looks_numeric(v)) {
        out += v;
    } else {
        out += '"';
        for (char c : v) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        out += '"';
    }
}

}  // namespace

std::string to_json(const ReportTable& t) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += "  {";
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            if (i) out += ", ";
            out += '"';
            out += t.header[i];
            out += "\": ";
            emit_json_value(out, i < t.rows[r].size() ? t.rows[r][i] : std::string());
        }
        out += r + 1 < t.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

std::string to_pretty(const ReportTable& t) {
    std::vector<std::size_t> widths(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) widths[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());

    std::string out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < widths.size(); ++i) {
            const std::string& c = i < cells.size() ? cells[i] : std::string();
            out += c;
            if (i + 1 < widths.size()) out.append(widths[i] - c.size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    };
    emit_row(t.header);
    std::vector<std::string> rule;
    for (std::size_t w : widths) rule.emplace_back(w, '-');
    emit_row(rule);
    for (const auto& row : t.rows) emit_row(row);
    return out;
}

ReportTable parse_csv(const std::string& text) {
    ReportTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cell);
                cell.clear();
            } else {
                cell += c;
            }
        }
        cells.push_back(cell);
        if (first) {
            t.header = std::move(cells);
            first = false;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    if (first) throw std::invalid_argument("parse_csv: empty input");
    return t;
}

std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string fmt_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace reslab
