#include "table.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace qsmear::cli {

void Table::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size()) {
        throw std::logic_error("table row width does not match the header");
    }
    rows.push_back(std::move(cells));
}

std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << ',';
            if (const double* num = std::get_if<double>(&row[c])) {
                out << format_double(*num);
            } else if (const long long* count = std::get_if<long long>(&row[c])) {
                out << *count;
            } else {
                out << std::get<std::string>(row[c]);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Table& table) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["command"] = table.command;
    doc["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& cell : row) {
            if (const double* num = std::get_if<double>(&cell)) {
                cells.push_back(*num);
            } else if (const long long* count = std::get_if<long long>(&cell)) {
                cells.push_back(*count);
            } else {
                cells.push_back(std::get<std::string>(cell));
            }
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_output(const Table& table, const std::string& path, const std::string& format) {
    std::string content;
    if (format == "csv") {
        content = to_csv(table);
    } else if (format == "json") {
        content = to_json(table);
    } else {
        throw std::logic_error("unknown output format " + format);
    }

    if (path.empty()) {
        std::cout << content;
        if (!std::cout) throw IoError("failed to write the table to stdout");
        return;
    }

    const std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + temp + " for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("failed while writing " + temp);
    }
    if (std::rename(temp.c_str(), path.c_str()) != 0) {
        const std::string reason = std::strerror(errno);
        std::remove(temp.c_str());
        throw IoError("cannot rename " + temp + " to " + path + ": " + reason);
    }
}

}  // namespace qsmear::cli
