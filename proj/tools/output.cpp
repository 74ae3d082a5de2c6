#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace magnon_cli {

namespace {

std::string csv_text(const char* s) {
    std::string t = s ? s : "";
    if (t.find_first_of(",\"\n") == std::string::npos) return t;
    std::string q = "\"";
    for (char c : t) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string csv_cell(const mg_cell& c) {
    switch (c.type) {
        case MG_CELL_REAL: return format_real(c.real);
        case MG_CELL_INTEGER: return std::to_string(c.integer);
        case MG_CELL_TEXT: return csv_text(c.text);
        case MG_CELL_NULL: break;
    }
    return "";
}

std::string json_string(const char* s) { return nlohmann::json(std::string(s ? s : "")).dump(); }

std::string json_cell(const mg_cell& c) {
    switch (c.type) {
        case MG_CELL_REAL: return std::isfinite(c.real) ? format_real(c.real) : "null";
        case MG_CELL_INTEGER: return std::to_string(c.integer);
        case MG_CELL_TEXT: return json_string(c.text);
        case MG_CELL_NULL: break;
    }
    return "null";
}

}  // namespace

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9e", x == 0.0 ? 0.0 : x);  // no negative zero
    return buf;
}

std::string to_csv(const mg_report* r) {
    std::ostringstream out;
    out << "# command: " << mg_report_command(r) << '\n';
    for (size_t i = 0; i < mg_report_meta_count(r); ++i)
        out << "# " << mg_report_meta_key(r, i) << ": " << csv_cell(mg_report_meta_value(r, i)) << '\n';
    for (size_t t = 0; t < mg_report_table_count(r); ++t) {
        out << "\n# table: " << mg_report_table_name(r, t) << '\n';
        const size_t cols = mg_report_column_count(r, t);
        for (size_t c = 0; c < cols; ++c) out << (c ? "," : "") << mg_report_column_name(r, t, c);
        out << '\n';
        for (size_t row = 0; row < mg_report_row_count(r, t); ++row) {
            for (size_t c = 0; c < cols; ++c) out << (c ? "," : "") << csv_cell(mg_report_cell(r, t, row, c));
            out << '\n';
        }
    }
    if (const size_t n = mg_report_error_count(r)) {
        out << "\n# errors: " << n << '\n';
        for (size_t i = 0; i < n; ++i) out << "# error: " << mg_report_error(r, i) << '\n';
    }
    return out.str();
}

std::string to_json(const mg_report* r) {
    std::ostringstream out;
    out << "{\n  \"command\": " << json_string(mg_report_command(r)) << ",\n  \"meta\": {";
    for (size_t i = 0; i < mg_report_meta_count(r); ++i)
        out << (i ? ", " : "") << json_string(mg_report_meta_key(r, i)) << ": "
            << json_cell(mg_report_meta_value(r, i));
    out << "},\n  \"tables\": [";
    for (size_t t = 0; t < mg_report_table_count(r); ++t) {
        out << (t ? "," : "") << "\n    {\"name\": " << json_string(mg_report_table_name(r, t)) << ", \"columns\": [";
        const size_t cols = mg_report_column_count(r, t);
        for (size_t c = 0; c < cols; ++c) out << (c ? ", " : "") << json_string(mg_report_column_name(r, t, c));
        out << "], \"rows\": [";
        for (size_t row = 0; row < mg_report_row_count(r, t); ++row) {
            out << (row ? "," : "") << "\n      [";
            for (size_t c = 0; c < cols; ++c) out << (c ? ", " : "") << json_cell(mg_report_cell(r, t, row, c));
            out << "]";
        }
        out << "]}";
    }
    out << "\n  ],\n  \"errors\": [";
    for (size_t i = 0; i < mg_report_error_count(r); ++i) out << (i ? ", " : "") << json_string(mg_report_error(r, i));
    out << "]\n}\n";
    return out.str();
}

}  // namespace magnon_cli
